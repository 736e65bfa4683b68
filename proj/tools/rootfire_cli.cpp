// Command-line front end: exact root-system interval-firing counts, closed
// formulas, Minkowski-sum lattice points, and machine verification of the
// published tables.  JSON on stdout, diagnostics on stderr.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootfire/rootfire.hpp"
#include "rootfire/tables.hpp"

namespace rf = rootfire;
using rf::ordered_json;

namespace {

constexpr const char* kVersion = "rootfire 0.1.0";

rf::IntVec parse_ints(const std::string& csv) {
    rf::IntVec out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("empty integer in list '" + csv + "'");
        out.push_back(std::stoll(item));
    }
    return out;
}

std::vector<rf::IntVec> parse_vectors(const std::string& s) {
    std::vector<rf::IntVec> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(parse_ints(item));
    return out;
}

rf::DeformParam parse_k(const std::string& s) {
    rf::IntVec vals = parse_ints(s);
    if (vals.size() == 1) return rf::DeformParam::uniform(vals[0]);
    if (vals.size() == 2) return rf::DeformParam{vals[0], vals[1]};
    throw CLI::ValidationError("--k expects k or kl,ks");
}

struct Emitter {
    std::string command;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void emit(ordered_json outputs, ordered_json inputs = ordered_json::object()) const {
        ordered_json report;
        report["command"] = command;
        report["version"] = kVersion;
        if (!inputs.empty()) report["inputs"] = std::move(inputs);
        report["outputs"] = std::move(outputs);
        auto elapsed = std::chrono::steady_clock::now() - started;
        report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        std::cout << report.dump(2) << "\n";
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact interval-firing and lattice-point engine"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    rf::Limits limits;
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for scans")->capture_default_str();
    app.add_option("--step-limit", limits.step_limit, "max fires per stabilization")->capture_default_str();
    app.add_option("--box-limit", limits.box_limit, "max enumeration box volume")->capture_default_str();
    if (const char* env = std::getenv("ROOTFIRE_THREADS")) threads = std::atoi(env);

    std::string type_str, lambda_str, mu_str, k_str = "1", mode_str = "sym", method_str = "formula";
    std::string vertices_str, gens_str, kvec_str, system_filter;
    bool direct = false, formula = false, k1_only = false, slow = false;

    auto* roots_cmd = app.add_subcommand("roots", "root system summary");
    roots_cmd->add_option("type", type_str, "Cartan-Killing label, e.g. B3")->required();

    auto* perm_cmd = app.add_subcommand("perm-count", "lattice points of Pi^Q(lambda + rho_k)");
    perm_cmd->add_option("type", type_str)->required();
    perm_cmd->add_option("--lambda", lambda_str, "dominant weight, fw coords")->required();
    perm_cmd->add_option("--k", k_str, "k or kl,ks");
    perm_cmd->add_flag("--formula", formula, "use the quotient-count formula (default)");
    perm_cmd->add_flag("--direct", direct, "use direct enumeration");

    auto* stab_cmd = app.add_subcommand("stabilize", "interval-firing stabilization of one weight");
    stab_cmd->add_option("type", type_str)->required();
    stab_cmd->add_option("--mu", mu_str, "start weight, fw coords")->required();
    stab_cmd->add_option("--k", k_str);
    stab_cmd->add_option("--mode", mode_str, "sym|tr");

    auto* fiber_cmd = app.add_subcommand("fiber-table", "stabilization census below a dominant weight");
    fiber_cmd->add_option("type", type_str)->required();
    fiber_cmd->add_option("--lambda", lambda_str, "dominant bounding weight")->required();
    fiber_cmd->add_option("--k", k_str);
    fiber_cmd->add_option("--mode", mode_str, "sym|tr");

    auto* poly_cmd = app.add_subcommand("poly", "Ehrhart-like polynomial of one weight");
    poly_cmd->add_option("type", type_str)->required();
    poly_cmd->add_option("--lambda", lambda_str)->required();
    poly_cmd->add_option("--mode", mode_str, "sym|tr");
    poly_cmd->add_option("--method", method_str, "formula|simulate|conjecture");

    auto* scan_cmd = app.add_subcommand("scan-counterexamples",
                                        "compare truncated simulation against the conjectured formula");
    scan_cmd->add_option("type", type_str)->required();
    scan_cmd->add_flag("--k1-only", k1_only, "compare values at k = 1 only");

    auto* verify_cmd = app.add_subcommand("verify", "machine verification of the published tables");
    std::string verify_what;
    verify_cmd->add_option("what", verify_what, "appendix|tables")->required();
    verify_cmd->add_option("--system", system_filter, "restrict to one system label");
    verify_cmd->add_flag("--slow", slow, "include the slow tier (E7, E8, D4 scan)");

    auto* mink_cmd = app.add_subcommand("minkowski", "lattice points of P + sum k_i [0, v_i]");
    mink_cmd->add_option("--vertices", vertices_str, "semicolon-separated vertex list, e.g. 0,3;1,4;2,0")
        ->required();
    mink_cmd->add_option("--gens", gens_str, "semicolon-separated generators")->required();
    mink_cmd->add_option("--k", kvec_str, "comma-separated multipliers")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*roots_cmd) {
            Emitter em{"roots"};
            auto sys = rf::RootSystem::build(rf::TypeLabel::parse(type_str));
            ordered_json out;
            out["label"] = sys.label.str();
            out["rank"] = sys.rank;
            out["num_roots"] = sys.roots.size();
            out["num_positive"] = sys.positive_root_ids.size();
            out["simply_laced"] = sys.simply_laced;
            out["index_of_connection"] = sys.index_of_connection;
            out["weyl_order"] = sys.weyl_order;
            ordered_json cartan = ordered_json::array();
            for (const auto& row : sys.cartan) cartan.push_back(row);
            out["cartan"] = std::move(cartan);
            out["highest_root"] = rf::root_to_json(sys.root(sys.highest_root_id));
            out["highest_short_root"] = rf::root_to_json(sys.root(sys.highest_short_root_id));
            ordered_json roots = ordered_json::array();
            for (int id : sys.positive_root_ids) {
                ordered_json r;
                r["root"] = rf::root_to_json(sys.root(id));
                r["long"] = sys.root(id).is_long;
                roots.push_back(std::move(r));
            }
            out["positive_roots"] = std::move(roots);
            em.emit(std::move(out), {{"type", type_str}});
        } else if (*perm_cmd) {
            Emitter em{"perm-count"};
            auto sys = rf::RootSystem::build(rf::TypeLabel::parse(type_str));
            rf::Weight lam{parse_ints(lambda_str)};
            if (lam.fw.size() != static_cast<std::size_t>(sys.rank))
                throw rf::BadParamError("lambda has wrong rank");
            rf::DeformParam k = parse_k(k_str);
            if (direct && formula) throw rf::BadParamError("choose one of --formula/--direct");
            std::int64_t count = direct ? rf::perm_count_direct(sys, lam, k, limits)
                                        : rf::perm_count_formula(sys, lam, k, limits);
            ordered_json out;
            out["count"] = count;
            out["method"] = direct ? "direct" : "formula";
            if (!direct) out["poly"] = rf::poly_to_json(rf::perm_count_poly(sys, lam, limits));
            em.emit(std::move(out),
                    {{"type", type_str}, {"lambda", rf::weight_to_json(lam)}, {"k", k_str}});
        } else if (*stab_cmd) {
            Emitter em{"stabilize"};
            auto sys = rf::RootSystem::build(rf::TypeLabel::parse(type_str));
            rf::Weight mu{parse_ints(mu_str)};
            if (mu.fw.size() != static_cast<std::size_t>(sys.rank))
                throw rf::BadParamError("mu has wrong rank");
            rf::DeformParam k = parse_k(k_str);
            rf::FiringMode mode = mode_str == "tr" ? rf::FiringMode::Truncated : rf::FiringMode::Symmetric;
            if (mode_str != "tr" && mode_str != "sym") throw rf::BadParamError("--mode must be sym or tr");
            rf::Weight stable = rf::stabilize(sys, mu, k, mode, limits);
            ordered_json out;
            out["stable"] = rf::weight_to_json(stable);
            out["is_stable_start"] = stable == mu;
            em.emit(std::move(out),
                    {{"type", type_str}, {"mu", rf::weight_to_json(mu)}, {"k", k_str}, {"mode", mode_str}});
        } else if (*fiber_cmd) {
            Emitter em{"fiber-table"};
            auto sys = rf::RootSystem::build(rf::TypeLabel::parse(type_str));
            rf::Weight lam{parse_ints(lambda_str)};
            rf::DeformParam k = parse_k(k_str);
            rf::FiringMode mode = mode_str == "tr" ? rf::FiringMode::Truncated : rf::FiringMode::Symmetric;
            rf::FiberTable table = rf::fiber_table(sys, lam, k, mode, limits);
            ordered_json fibers = ordered_json::array();
            for (const auto& [nu, count] : table.fibers) {
                ordered_json row;
                row["nu"] = rf::weight_to_json(nu);
                row["fiber"] = count;
                fibers.push_back(std::move(row));
            }
            ordered_json out;
            out["source_count"] = table.source_count;
            out["fibers"] = std::move(fibers);
            em.emit(std::move(out),
                    {{"type", type_str}, {"lambda", rf::weight_to_json(lam)}, {"k", k_str}, {"mode", mode_str}});
        } else if (*poly_cmd) {
            Emitter em{"poly"};
            auto sys = rf::RootSystem::build(rf::TypeLabel::parse(type_str));
            rf::Weight lam{parse_ints(lambda_str)};
            if (lam.fw.size() != static_cast<std::size_t>(sys.rank))
                throw rf::BadParamError("lambda has wrong rank");
            rf::EhrhartPoly poly;
            ordered_json out;
            if (method_str == "formula") {
                if (mode_str != "sym") throw rf::BadParamError("--method formula applies to --mode sym");
                poly = rf::sym_formula(sys, lam, limits);
            } else if (method_str == "conjecture") {
                if (mode_str != "tr") throw rf::BadParamError("--method conjecture applies to --mode tr");
                poly = rf::tr_conjecture_rhs(sys, lam, limits);
            } else if (method_str == "simulate") {
                rf::FiringMode mode = mode_str == "tr" ? rf::FiringMode::Truncated : rf::FiringMode::Symmetric;
                // a failed exact fit of truncated counts outside the
                // simply-laced case is a finding, not a crash
                try {
                    poly = rf::simulated_poly(sys, lam, mode, limits);
                } catch (const rf::NonPolynomialFitError& e) {
                    out["fit"] = "failed";
                    out["reason"] = e.what();
                    em.emit(std::move(out), {{"type", type_str},
                                             {"lambda", rf::weight_to_json(lam)},
                                             {"mode", mode_str},
                                             {"method", method_str}});
                    return 0;
                }
            } else {
                throw rf::BadParamError("--method must be formula|simulate|conjecture");
            }
            out["poly"] = rf::poly_to_json(poly);
            if (!sys.simply_laced) out["diagonal"] = rf::poly_to_json(poly.diagonal());
            em.emit(std::move(out), {{"type", type_str},
                                     {"lambda", rf::weight_to_json(lam)},
                                     {"mode", mode_str},
                                     {"method", method_str}});
        } else if (*scan_cmd) {
            Emitter em{"scan-counterexamples"};
            auto sys = rf::RootSystem::build(rf::TypeLabel::parse(type_str));
            rf::ScanResult res = rf::counterexample_scan(sys, k1_only, threads, limits);
            em.emit(rf::scan_to_json(res), {{"type", type_str}, {"k1_only", k1_only}});
        } else if (*verify_cmd) {
            Emitter em{"verify"};
            bool pass = false;
            ordered_json out;
            if (verify_what == "appendix") {
                out = rf::verify_appendix(system_filter, slow, &pass);
            } else if (verify_what == "tables") {
                out = rf::verify_tables(slow, threads, limits, &pass);
            } else {
                throw rf::BadParamError("verify expects 'appendix' or 'tables'");
            }
            em.emit(std::move(out), {{"what", verify_what}, {"slow", slow}});
            return pass ? 0 : 1;
        } else if (*mink_cmd) {
            Emitter em{"minkowski"};
            rf::LatticePolytope p{parse_vectors(vertices_str)};
            std::vector<rf::IntVec> gens = parse_vectors(gens_str);
            rf::IntVec kvec = parse_ints(kvec_str);
            std::int64_t count = rf::minkowski_count(p, gens, kvec, limits);
            rf::MultiPoly poly = rf::minkowski_poly(p, gens, limits);
            ordered_json out;
            out["count"] = count;
            out["poly"] = rf::multipoly_to_json(poly);
            out["poly_at_k"] = poly.eval(kvec);
            em.emit(std::move(out), {{"vertices", vertices_str}, {"gens", gens_str}, {"k", kvec_str}});
        }
    } catch (const rf::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const rf::InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
