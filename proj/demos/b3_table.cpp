// Recomputes the B3 symmetric/truncated polynomial table two ways and prints
// the rows with their evaluations at -1.

#include <iostream>

#include "rootfire/rootfire.hpp"

using namespace rootfire;

int main() {
    auto sys = RootSystem::build(TypeLabel::parse("B3"));
    std::cout << "lambda      L_sym(k)                      L_sym(-1)   L_tr(k)                    L_tr(-1)\n";
    for (std::int64_t mask = 0; mask < 8; ++mask) {
        Weight lam = sys.zero_weight();
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) lam.fw[i] = 1;
        EhrhartPoly sym = sym_formula(sys, lam).diagonal();
        EhrhartPoly sym_sim = simulated_poly(sys, lam, FiringMode::Symmetric).diagonal();
        EhrhartPoly tr = simulated_poly(sys, lam, FiringMode::Truncated).diagonal();
        if (!(sym == sym_sim)) {
            std::cerr << "formula/simulation mismatch -- this is a bug\n";
            return 1;
        }
        std::printf("(%lld,%lld,%lld)     %-28s  %6lld     %-24s  %6lld\n", (long long)lam.fw[0],
                    (long long)lam.fw[1], (long long)lam.fw[2], sym.str().c_str(),
                    (long long)reciprocity_eval(sym, -1), tr.str().c_str(),
                    (long long)reciprocity_eval(tr, -1));
    }
    return 0;
}
