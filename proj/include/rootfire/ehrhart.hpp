#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <thread>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/firing.hpp"
#include "rootfire/permutohedra.hpp"
#include "rootfire/poly.hpp"
#include "rootfire/root_system.hpp"
#include "rootfire/spans.hpp"

namespace rootfire {

// Independent subsets grouped by span.  Both closed formulas weight every X
// through a predicate on Phi+ within Span(X) only, so each distinct span can
// carry its aggregated monomial sum rVol(X) k^X and be tested once.
struct SpanTable {
    struct Entry {
        std::vector<int> positive_ids;  // Phi+ inside the span
        EhrhartPoly contribution;       // sum over X with this span of rVol(X) k^X
    };
    std::vector<Entry> entries;

    static SpanTable build(const RootSystem& sys, const Limits& limits = {}) {
        std::map<SpanKey, std::size_t> index;
        SpanTable table;
        enumerate_indep_sets(
            sys, sys.rank,
            [&](const IndepSet& s) {
                auto [it, fresh] = index.emplace(s.span, table.entries.size());
                if (fresh) {
                    Entry e;
                    e.positive_ids = positive_roots_in_span(sys, s.span);
                    e.contribution = EhrhartPoly(sys.simply_laced);
                    table.entries.push_back(std::move(e));
                }
                table.entries[it->second].contribution.add_term(s.long_count, s.short_count, s.rvol);
            },
            limits);
        return table;
    }
};

namespace detail {

inline void add_scaled(EhrhartPoly& acc, const EhrhartPoly& p, std::int64_t factor) {
    for (const auto& [key, c] : p.terms()) acc.add_term(key.first, key.second, checked_mul(c, factor));
}

}  // namespace detail

// Positive formula for the symmetric Ehrhart-like polynomial.  Zero when some
// positive pairing of lambda is -1; otherwise a sum over independent subsets
// X of positive roots, weighted by how many weights of the translated
// parabolic orbit pair into {0,1} against every positive root in Span(X).
// The count depends on X only through its span, so the span table drives it.
inline EhrhartPoly sym_formula(const RootSystem& sys, const Weight& lam, const Limits& limits = {},
                               const SpanTable* table = nullptr) {
    EhrhartPoly poly(sys.simply_laced);
    if (sys.forbidden_sym(lam)) return poly;

    auto [lam_dom, word] = sys.dominant_rep(lam);
    std::vector<Weight> orbit;
    for (const Weight& nu : sys.weyl_orbit(lam_dom, sys.i01_set(lam_dom)))
        orbit.push_back(sys.apply(word, nu));

    SpanTable local;
    if (!table) {
        local = SpanTable::build(sys, limits);
        table = &local;
    }
    for (const auto& entry : table->entries) {
        std::int64_t cnt = 0;
        for (const Weight& mu : orbit) {
            bool ok = true;
            for (int id : entry.positive_ids) {
                std::int64_t p = sys.pairing(mu, id);
                if (p != 0 && p != 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++cnt;
        }
        if (cnt != 0) detail::add_scaled(poly, entry.contribution, cnt);
    }
    return poly;
}

// Right-hand side of the truncated-coefficient conjecture: sum of
// rVol(X) k^X over independent X whose span only sees pairings in {0,1}.
inline EhrhartPoly tr_conjecture_rhs(const RootSystem& sys, const Weight& lam, const Limits& limits = {},
                                     const SpanTable* table = nullptr) {
    EhrhartPoly poly(sys.simply_laced);
    SpanTable local;
    if (!table) {
        local = SpanTable::build(sys, limits);
        table = &local;
    }
    for (const auto& entry : table->entries) {
        bool ok = true;
        for (int id : entry.positive_ids) {
            std::int64_t p = sys.pairing(lam, id);
            if (p != 0 && p != 1) {
                ok = false;
                break;
            }
        }
        if (ok) detail::add_scaled(poly, entry.contribution, 1);
    }
    return poly;
}

struct CounterexampleReport {
    Weight lam;
    EhrhartPoly lhs;  // simulated truncated polynomial
    EhrhartPoly rhs;  // conjectured formula
    bool equal = false;
};

struct K1Disagreement {
    Weight lam;
    std::int64_t lhs_value = 0;
    std::int64_t rhs_value = 0;
};

struct ScanResult {
    std::int64_t domain_size = 0;
    bool k1_only = false;
    std::vector<CounterexampleReport> counterexamples;  // polynomial mode, mismatches only
    std::vector<K1Disagreement> k1_disagreements;       // k1 mode, mismatches only
};

namespace detail {

// The scan domain is the union of Weyl orbits of the 2^n dominant weights
// with {0,1} coordinates.  Fiber tables are shared: group those dominants by
// coset of Q, cover each group by its root-order-maximal members, and read
// every orbit member's fiber out of the covering table.
struct ScanDomain {
    std::vector<Weight> zero_one_dominants;
    std::vector<Weight> table_tops;          // maximal cover, one table per top and parameter
    std::vector<std::size_t> cover;          // index into table_tops per dominant
    std::vector<std::vector<Weight>> orbits; // full Weyl orbit per dominant
    std::int64_t size = 0;
};

inline ScanDomain scan_domain(const RootSystem& sys) {
    ScanDomain d;
    const int n = sys.rank;
    for (std::int64_t mask = 0; mask < (std::int64_t{1} << n); ++mask) {
        Weight w = sys.zero_weight();
        for (int i = 0; i < n; ++i)
            if (mask & (std::int64_t{1} << i)) w.fw[i] = 1;
        d.zero_one_dominants.push_back(w);
    }
    for (const Weight& w : d.zero_one_dominants) {
        auto orb = sys.weyl_orbit(w);
        d.size += static_cast<std::int64_t>(orb.size());
        d.orbits.push_back(std::move(orb));
    }
    d.cover.resize(d.zero_one_dominants.size());
    for (std::size_t i = 0; i < d.zero_one_dominants.size(); ++i) {
        const Weight& w = d.zero_one_dominants[i];
        // maximal member of the coset group covering w
        Weight best = w;
        for (const Weight& other : d.zero_one_dominants)
            if (sys.same_coset(other, best) && root_order_leq(sys, best, other)) best = other;
        auto it = std::find(d.table_tops.begin(), d.table_tops.end(), best);
        if (it == d.table_tops.end()) {
            d.table_tops.push_back(best);
            d.cover[i] = d.table_tops.size() - 1;
        } else {
            d.cover[i] = static_cast<std::size_t>(it - d.table_tops.begin());
        }
    }
    return d;
}

template <typename Task>
inline void run_tasks(std::vector<Task>& tasks, int threads) {
    if (threads <= 1 || tasks.size() <= 1) {
        for (Task& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(threads, static_cast<int>(tasks.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace detail

// Exhaustive comparison of simulated truncated polynomials against the
// conjectured formula over all lambda with I^{0,1} of the dominant
// representative equal to [n].  In k1-only mode just the values at k = 1 are
// compared (the desk-scale protocol for the larger systems).
inline ScanResult counterexample_scan(const RootSystem& sys, bool k1_only = false, int threads = 1,
                                      const Limits& limits = {}) {
    double est = indep_enum_estimate(sys.positive_root_ids.size(), sys.rank);
    if (est > limits.subset_limit)
        throw ResourceLimitError("scan over " + sys.label.str() + " needs " + std::to_string(est) +
                                     " independent subsets, over the configured bound",
                                 est);
    auto domain = detail::scan_domain(sys);
    ScanResult result;
    result.domain_size = domain.size;
    result.k1_only = k1_only;

    const int deg = sys.rank;
    std::vector<DeformParam> grid;
    if (k1_only) {
        grid.push_back(DeformParam::uniform(1));
    } else {
        grid = good_sample_grid(sys, deg);
        grid.push_back(verification_param(deg));
    }

    // one fiber table per (table top, parameter), filled in parallel
    std::vector<std::vector<FiberTable>> tables(domain.table_tops.size(),
                                                std::vector<FiberTable>(grid.size()));
    {
        std::vector<std::function<void()>> tasks;
        for (std::size_t t = 0; t < domain.table_tops.size(); ++t)
            for (std::size_t g = 0; g < grid.size(); ++g)
                tasks.push_back([&, t, g] {
                    tables[t][g] = fiber_table(sys, domain.table_tops[t], grid[g], FiringMode::Truncated, limits);
                });
        detail::run_tasks(tasks, threads);
    }

    SpanTable span_table = SpanTable::build(sys, limits);
    for (std::size_t i = 0; i < domain.zero_one_dominants.size(); ++i) {
        const auto& tabs = tables[domain.cover[i]];
        for (const Weight& lam : domain.orbits[i]) {
            EhrhartPoly rhs = tr_conjecture_rhs(sys, lam, limits, &span_table);
            if (k1_only) {
                std::int64_t lhs_val = tabs[0].fiber_of(lam);
                std::int64_t rhs_val = rhs.eval(1, 1);
                if (lhs_val != rhs_val) result.k1_disagreements.push_back({lam, lhs_val, rhs_val});
                continue;
            }
            std::vector<std::pair<DeformParam, std::int64_t>> samples;
            for (std::size_t g = 0; g + 1 < grid.size(); ++g)
                samples.push_back({grid[g], tabs[g].fiber_of(lam)});
            EhrhartPoly lhs = fit_poly(sys.simply_laced,
                                       sys.simply_laced ? univariate_monomials(deg) : bivariate_monomials(deg),
                                       samples);
            const DeformParam& extra = grid.back();
            if (lhs.eval(extra.k_long, extra.k_short) != tabs.back().fiber_of(lam))
                throw NonPolynomialFitError("simulated truncated counts fail the verification sample for " +
                                            sys.label.str());
            if (!(lhs == rhs)) {
                CounterexampleReport rep;
                rep.lam = lam;
                rep.lhs = lhs;
                rep.rhs = rhs;
                rep.equal = false;
                result.counterexamples.push_back(std::move(rep));
            }
        }
    }
    auto weight_less = [](const auto& a, const auto& b) { return a.lam < b.lam; };
    std::sort(result.counterexamples.begin(), result.counterexamples.end(), weight_less);
    std::sort(result.k1_disagreements.begin(), result.k1_disagreements.end(), weight_less);
    return result;
}

struct SymOracleResult {
    std::int64_t domain_size = 0;
    std::int64_t compared = 0;
    std::vector<Weight> mismatches;
};

// Oracle equivalence over the I^{0,1} = [n] domain: the closed formula must
// reproduce the simulated symmetric polynomial for every weight in the Weyl
// orbits of the 2^n zero-one dominant weights.
inline SymOracleResult sym_oracle_scan(const RootSystem& sys, int threads = 1, const Limits& limits = {}) {
    double est = indep_enum_estimate(sys.positive_root_ids.size(), sys.rank);
    if (est > limits.subset_limit)
        throw ResourceLimitError("formula sum too large for " + sys.label.str(), est);
    auto domain = detail::scan_domain(sys);
    SymOracleResult result;
    result.domain_size = domain.size;

    const int deg = sys.rank;
    std::vector<DeformParam> grid = good_sample_grid(sys, deg);
    grid.push_back(verification_param(deg));

    std::vector<std::vector<FiberTable>> tables(domain.table_tops.size(),
                                                std::vector<FiberTable>(grid.size()));
    {
        std::vector<std::function<void()>> tasks;
        for (std::size_t t = 0; t < domain.table_tops.size(); ++t)
            for (std::size_t g = 0; g < grid.size(); ++g)
                tasks.push_back([&, t, g] {
                    tables[t][g] = fiber_table(sys, domain.table_tops[t], grid[g], FiringMode::Symmetric, limits);
                });
        detail::run_tasks(tasks, threads);
    }

    SpanTable span_table = SpanTable::build(sys, limits);
    for (std::size_t i = 0; i < domain.zero_one_dominants.size(); ++i) {
        const auto& tabs = tables[domain.cover[i]];
        for (const Weight& lam : domain.orbits[i]) {
            std::vector<std::pair<DeformParam, std::int64_t>> samples;
            for (std::size_t g = 0; g + 1 < grid.size(); ++g)
                samples.push_back({grid[g], tabs[g].fiber_of(lam)});
            EhrhartPoly simulated =
                fit_poly(sys.simply_laced,
                         sys.simply_laced ? univariate_monomials(deg) : bivariate_monomials(deg), samples);
            const DeformParam& extra = grid.back();
            if (simulated.eval(extra.k_long, extra.k_short) != tabs.back().fiber_of(lam))
                throw NonPolynomialFitError("symmetric fiber counts fail the verification sample");
            ++result.compared;
            if (!(sym_formula(sys, lam, limits, &span_table) == simulated)) result.mismatches.push_back(lam);
        }
    }
    return result;
}

// Exact evaluation at k_l = k_s = at.
inline std::int64_t reciprocity_eval(const EhrhartPoly& p, std::int64_t at) { return p.eval(at, at); }

// Numerator of sum_{k>=0} p(k) z^k = h*(z) / (1-z)^denom_power, exact; the
// coefficient of z^j is sum_i (-1)^i C(denom_power, i) p(j - i).  Requires
// deg p < denom_power so the series telescopes to a polynomial.
inline std::vector<std::int64_t> hstar_numerator(const EhrhartPoly& p, int denom_power) {
    if (!p.univariate()) throw BadParamError("h* numerator needs a univariate polynomial");
    if (p.total_degree() >= denom_power)
        throw BadParamError("denominator power must exceed the polynomial degree");
    std::vector<std::int64_t> binom(denom_power + 1, 1);
    for (int i = 1; i <= denom_power; ++i)
        binom[i] = binom[i - 1] * (denom_power - i + 1) / i;
    std::vector<std::int64_t> h(denom_power, 0);
    for (int j = 0; j < denom_power; ++j) {
        std::int64_t s = 0;
        for (int i = 0; i <= std::min(j, denom_power); ++i) {
            std::int64_t sign = (i % 2 == 0) ? 1 : -1;
            s = checked_add(s, checked_mul(sign * binom[i], p.eval_diagonal(j - i)));
        }
        h[j] = s;
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

}  // namespace rootfire
