#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/permutohedra.hpp"
#include "rootfire/poly.hpp"
#include "rootfire/root_system.hpp"

namespace rootfire {

enum class FiringMode { Symmetric, Truncated };

inline const char* mode_name(FiringMode m) { return m == FiringMode::Symmetric ? "sym" : "tr"; }

inline void require_good(const RootSystem& sys, const DeformParam& k) {
    if (!k.good(sys.simply_laced))
        throw BadParamError("deformation parameter is not good for " + sys.label.str());
}

// mu -> mu + alpha is allowed when <mu + alpha/2, alpha^vee> = <mu,alpha^vee>+1
// lies in the symmetric interval {-k(alpha),...,k(alpha)} or its truncation
// {-k(alpha)+1,...,k(alpha)}.
inline bool fireable(const RootSystem& sys, const Weight& mu, const Root& alpha, const DeformParam& k,
                     FiringMode mode) {
    std::int64_t ka = sys.k_of(alpha, k);
    std::int64_t p = sys.pairing(mu, alpha) + 1;
    std::int64_t lo = mode == FiringMode::Symmetric ? -ka : -ka + 1;
    return lo <= p && p <= ka;
}

inline std::vector<int> fireable_roots(const RootSystem& sys, const Weight& mu, const DeformParam& k,
                                       FiringMode mode) {
    require_good(sys, k);
    std::vector<int> out;
    for (int id : sys.positive_root_ids)
        if (fireable(sys, mu, sys.root(id), k, mode)) out.push_back(id);
    return out;
}

// Canonical stabilization: repeatedly fire the fireable positive root of
// smallest index.  Confluence makes the order immaterial; the guaranteed
// termination is guarded by a step limit that flags regressions.
inline Weight stabilize(const RootSystem& sys, Weight mu, const DeformParam& k, FiringMode mode,
                        const Limits& limits = {}) {
    require_good(sys, k);
    std::int64_t steps = 0;
    while (true) {
        int fired = -1;
        for (int id : sys.positive_root_ids) {
            if (fireable(sys, mu, sys.root(id), k, mode)) {
                fired = id;
                break;
            }
        }
        if (fired < 0) return mu;
        mu = sys.add_root(mu, sys.root(fired));
        if (++steps > limits.step_limit)
            throw StepLimitError("stabilization exceeded step limit; termination is a theorem");
    }
}

// Stabilization with an arbitrary (seeded) choice among fireable roots at each
// step; used to exercise confluence.
inline Weight stabilize_random_order(const RootSystem& sys, Weight mu, const DeformParam& k, FiringMode mode,
                                     std::uint64_t seed, const Limits& limits = {}) {
    require_good(sys, k);
    std::mt19937_64 rng(seed);
    std::int64_t steps = 0;
    std::vector<int> fire;
    while (true) {
        fire.clear();
        for (int id : sys.positive_root_ids)
            if (fireable(sys, mu, sys.root(id), k, mode)) fire.push_back(id);
        if (fire.empty()) return mu;
        int pick = fire[std::uniform_int_distribution<std::size_t>(0, fire.size() - 1)(rng)];
        mu = sys.add_root(mu, sys.root(pick));
        if (++steps > limits.step_limit)
            throw StepLimitError("stabilization exceeded step limit; termination is a theorem");
    }
}

// Stable-point characterization: eta_k(nu) is mode-stable, with the symmetric
// mode additionally requiring that no positive pairing of nu equals -1.
inline bool stable_points_check(const RootSystem& sys, const Weight& nu, const DeformParam& k, FiringMode mode) {
    require_good(sys, k);
    if (mode == FiringMode::Symmetric && sys.forbidden_sym(nu)) return false;
    Weight target = sys.eta(nu, k);
    return fireable_roots(sys, target, k, mode).empty();
}

struct FiberTable {
    DeformParam k;
    FiringMode mode = FiringMode::Symmetric;
    Weight lam_top;
    std::vector<std::pair<Weight, std::int64_t>> fibers;  // (label nu, fiber size), sorted by nu
    std::int64_t source_count = 0;

    std::int64_t fiber_of(const Weight& nu) const {
        auto it = std::lower_bound(fibers.begin(), fibers.end(), nu,
                                   [](const auto& a, const Weight& b) { return a.first < b; });
        if (it == fibers.end() || !(it->first == nu)) return 0;
        return it->second;
    }
};

// Full stabilization census of Pi^Q(lam_top + rho_k): every source point is
// stabilized (memoized along firing paths; successors stay inside by the
// non-escaping lemma) and matched to its label through the forward table
// {eta_k(nu) -> nu}.  Also the per-orbit Ehrhart-like counts: fibers of every
// admissible nu in Pi^Q(lam_top) are tallied, including empty ones.
inline FiberTable fiber_table(const RootSystem& sys, const Weight& lam_top_dom, const DeformParam& k,
                              FiringMode mode, const Limits& limits = {}) {
    require_good(sys, k);
    sys.require_dominant(lam_top_dom);

    FiberTable out;
    out.k = k;
    out.mode = mode;
    out.lam_top = lam_top_dom;

    Weight shifted_top = weight_add(lam_top_dom, sys.rho_k(k));
    auto sources = discrete_permutohedron(sys, shifted_top, limits);
    out.source_count = static_cast<std::int64_t>(sources.points.size());

    // label inversion: eta_k(nu) -> nu over admissible targets
    WeightMap<Weight> inverse;
    WeightMap<std::int64_t> tally;
    for (const Weight& nu : discrete_permutohedron(sys, lam_top_dom, limits).points) {
        if (mode == FiringMode::Symmetric && sys.forbidden_sym(nu)) continue;
        inverse.emplace(sys.eta(nu, k), nu);
        tally.emplace(nu, 0);
    }

    WeightMap<Weight> stable_memo;
    std::vector<Weight> path;
    for (const Weight& start : sources.points) {
        path.clear();
        Weight cur = start;
        std::optional<Weight> result;
        std::int64_t steps = 0;
        while (true) {
            auto memo = stable_memo.find(cur);
            if (memo != stable_memo.end()) {
                result = memo->second;
                break;
            }
            int fired = -1;
            for (int id : sys.positive_root_ids)
                if (fireable(sys, cur, sys.root(id), k, mode)) {
                    fired = id;
                    break;
                }
            if (fired < 0) {
                result = cur;
                break;
            }
            path.push_back(cur);
            cur = sys.add_root(cur, sys.root(fired));
            if (++steps > limits.step_limit)
                throw StepLimitError("fiber enumeration exceeded step limit");
        }
        stable_memo.emplace(start, *result);
        for (const Weight& w : path) stable_memo.emplace(w, *result);

        auto label = inverse.find(*result);
        if (label == inverse.end())
            throw UnmatchedStablePointError("stable point outside the eta inversion table");
        ++tally[label->second];
    }

    out.fibers.assign(tally.begin(), tally.end());
    std::sort(out.fibers.begin(), out.fibers.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Sample grid of good parameters for exact interpolation at total degree
// <= deg: {0..deg} univariate, {0..deg}^2 minus the non-good axis otherwise.
inline std::vector<DeformParam> good_sample_grid(const RootSystem& sys, int deg) {
    std::vector<DeformParam> grid;
    if (sys.simply_laced) {
        for (int k = 0; k <= deg; ++k) grid.push_back(DeformParam::uniform(k));
    } else {
        for (int kl = 0; kl <= deg; ++kl)
            for (int ks = 0; ks <= deg; ++ks) {
                DeformParam k{kl, ks};
                if (k.good(false)) grid.push_back(k);
            }
    }
    return grid;
}

inline DeformParam verification_param(int deg) { return DeformParam::uniform(deg + 1); }

// Ehrhart-like polynomial of one weight by simulation: exact interpolation of
// fiber counts over the good grid, checked on one extra sample point.
inline EhrhartPoly simulated_poly(const RootSystem& sys, const Weight& lam, FiringMode mode,
                                  const Limits& limits = {}) {
    auto [lam_dom, word] = sys.dominant_rep(lam);
    const int deg = sys.rank;
    std::vector<std::pair<DeformParam, std::int64_t>> samples;
    for (const DeformParam& k : good_sample_grid(sys, deg))
        samples.push_back({k, fiber_table(sys, lam_dom, k, mode, limits).fiber_of(lam)});
    EhrhartPoly p = fit_poly(sys.simply_laced,
                             sys.simply_laced ? univariate_monomials(deg) : bivariate_monomials(deg), samples);
    DeformParam extra = verification_param(deg);
    std::int64_t direct = fiber_table(sys, lam_dom, extra, mode, limits).fiber_of(lam);
    if (p.eval(extra.k_long, extra.k_short) != direct)
        throw NonPolynomialFitError("fitted polynomial fails on verification sample");
    return p;
}

}  // namespace rootfire
