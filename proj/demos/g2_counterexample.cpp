// The smallest failure of the truncated-coefficient conjecture: G2 at
// lambda = omega_1, where simulation and the conjectured sum disagree in the
// long-root linear term.

#include <iostream>

#include "rootfire/rootfire.hpp"

using namespace rootfire;

int main() {
    auto g2 = RootSystem::build(TypeLabel::parse("G2"));
    ScanResult scan = counterexample_scan(g2);
    std::cout << "domain (I01 = [n]) size: " << scan.domain_size << "\n";
    for (const auto& c : scan.counterexamples) {
        std::cout << "lambda = (" << c.lam.fw[0] << "," << c.lam.fw[1] << ")\n";
        std::cout << "  simulated:   " << c.lhs.str() << "\n";
        std::cout << "  conjectured: " << c.rhs.str() << "\n";
    }
    return scan.counterexamples.size() == 2 ? 0 : 1;
}
