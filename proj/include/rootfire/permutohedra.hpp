#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/linalg.hpp"
#include "rootfire/poly.hpp"
#include "rootfire/root_system.hpp"
#include "rootfire/spans.hpp"

namespace rootfire {

// mu <= lambda in root (dominance) order: lambda - mu a nonnegative integer
// combination of simple roots.
inline bool root_order_leq(const RootSystem& sys, const Weight& mu, const Weight& lam) {
    RatVec d = sys.weight_rc(weight_sub(lam, mu));
    for (const Rat& x : d)
        if (!x.is_integer() || x < Rat(0)) return false;
    return true;
}

// Coordinatewise min in root coordinates; the meet of the dominance order.
inline Weight meet(const RootSystem& sys, const Weight& lam, const Weight& mu) {
    if (!sys.same_coset(lam, mu)) throw DifferentCosetError("meet of weights in different cosets");
    RatVec a = sys.weight_rc(lam), b = sys.weight_rc(mu);
    RatVec diff(sys.rank);
    for (int i = 0; i < sys.rank; ++i) diff[i] = a[i] - std::min(a[i], b[i]);
    // lam - sum diff_i alpha_i, diff integral because the cosets agree
    Weight out = lam;
    for (int j = 0; j < sys.rank; ++j) {
        Rat fw_delta(0);
        for (int i = 0; i < sys.rank; ++i) fw_delta += diff[i] * Rat(sys.cartan[i][j]);
        out.fw[j] = checked_add(out.fw[j], -fw_delta.to_integer());
    }
    return out;
}

// Greedy dominant representative of a real vector given in root coordinates.
inline RatVec dominant_rc(const RootSystem& sys, RatVec v) {
    while (true) {
        int neg = -1;
        Rat p;
        for (int i = 0; i < sys.rank; ++i) {
            // <v, alpha_i^vee> = sum_j v_j C[j][i]
            Rat s(0);
            for (int j = 0; j < sys.rank; ++j)
                if (!v[j].is_zero()) s += v[j] * Rat(sys.cartan[j][i]);
            if (s < Rat(0)) {
                neg = i;
                p = s;
                break;
            }
        }
        if (neg < 0) return v;
        v[neg] = v[neg] - p;  // s_i(v) = v - <v,alpha_i^vee> alpha_i
    }
}

// Real permutohedron membership: v (root coords) lies in Pi(lambda) iff the
// dominant representative of v is <= lambda coordinatewise in root coords.
inline bool contains(const RootSystem& sys, const Weight& lam_dom, const RatVec& v_rc) {
    sys.require_dominant(lam_dom);
    RatVec vd = dominant_rc(sys, v_rc);
    RatVec lrc = sys.weight_rc(lam_dom);
    for (int i = 0; i < sys.rank; ++i)
        if (vd[i] > lrc[i]) return false;
    return true;
}

struct DominantDownset {
    Weight top;
    std::vector<Weight> members;  // dominant nu <= top with nu in Q + top
};

// All dominant weights below `top` in its coset, enumerated through the
// root-coordinate box [0, rc(top)].
inline DominantDownset dominant_downset(const RootSystem& sys, const Weight& top, const Limits& limits = {}) {
    sys.require_dominant(top);
    RatVec rc = sys.weight_rc(top);
    IntVec bound(sys.rank);
    double volume = 1;
    for (int i = 0; i < sys.rank; ++i) {
        bound[i] = rc[i].floor();
        volume *= static_cast<double>(bound[i] + 1);
    }
    if (volume > static_cast<double>(limits.box_limit))
        throw ResourceLimitError("downset box of " + std::to_string(volume) + " points exceeds limit", volume);

    DominantDownset out;
    out.top = top;
    IntVec a(sys.rank, 0);
    while (true) {
        // nu = top - sum a_i alpha_i
        Weight nu = top;
        for (int j = 0; j < sys.rank; ++j) {
            std::int64_t delta = 0;
            for (int i = 0; i < sys.rank; ++i) delta = checked_add(delta, checked_mul(a[i], sys.cartan[i][j]));
            nu.fw[j] = checked_add(nu.fw[j], -delta);
        }
        if (sys.is_dominant(nu)) out.members.push_back(nu);
        int i = 0;
        while (i < sys.rank && a[i] == bound[i]) a[i++] = 0;
        if (i == sys.rank) break;
        ++a[i];
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

struct DiscretePermutohedron {
    Weight lam;
    std::vector<Weight> points;  // sorted
};

// Pi^Q(lambda): all weights of the coset Q+lambda inside the permutohedron,
// as the union of Weyl orbits over the dominant downset.
inline DiscretePermutohedron discrete_permutohedron(const RootSystem& sys, const Weight& lam_dom,
                                                    const Limits& limits = {}) {
    DiscretePermutohedron out;
    out.lam = lam_dom;
    auto down = dominant_downset(sys, lam_dom, limits);
    WeightSet seen;
    for (const Weight& nu : down.members)
        for (const Weight& w : sys.weyl_orbit(nu))
            if (seen.insert(w).second) out.points.push_back(w);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

// Number of distinct quotient keys of Pi^Q(lambda) modulo the span.
inline std::int64_t quot_count(const RootSystem& sys, const Weight& lam_dom, const SpanKey& span,
                               const Limits& limits = {}) {
    auto perm = discrete_permutohedron(sys, lam_dom, limits);
    std::set<RatVec> keys;
    for (const Weight& w : perm.points) keys.insert(quotient_key(sys.weight_rc(w), span));
    return static_cast<std::int64_t>(keys.size());
}

// Lattice-point formula for a permutohedron plus dilating regular
// permutohedron: #Pi^Q(lambda + rho_k) as a polynomial in k, via quotient
// counts over independent subsets of positive roots grouped by span.
inline EhrhartPoly perm_count_poly(const RootSystem& sys, const Weight& lam_dom, const Limits& limits = {}) {
    sys.require_dominant(lam_dom);
    auto perm = discrete_permutohedron(sys, lam_dom, limits);
    std::vector<RatVec> point_rc;
    point_rc.reserve(perm.points.size());
    for (const Weight& w : perm.points) point_rc.push_back(sys.weight_rc(w));

    EhrhartPoly poly(sys.simply_laced);
    std::map<SpanKey, std::int64_t> quot_memo;
    enumerate_indep_sets(
        sys, sys.rank,
        [&](const IndepSet& s) {
            auto it = quot_memo.find(s.span);
            std::int64_t q;
            if (it != quot_memo.end()) {
                q = it->second;
            } else {
                std::set<RatVec> keys;
                for (const RatVec& rc : point_rc) keys.insert(quotient_key(rc, s.span));
                q = static_cast<std::int64_t>(keys.size());
                quot_memo.emplace(s.span, q);
            }
            poly.add_term(s.long_count, s.short_count, checked_mul(q, s.rvol));
        },
        limits);
    return poly;
}

inline std::int64_t perm_count_formula(const RootSystem& sys, const Weight& lam_dom, const DeformParam& k,
                                       const Limits& limits = {}) {
    return perm_count_poly(sys, lam_dom, limits).eval(k.k_long, k.k_short);
}

inline std::int64_t perm_count_direct(const RootSystem& sys, const Weight& lam_dom, const DeformParam& k,
                                      const Limits& limits = {}) {
    Weight shifted = weight_add(lam_dom, sys.rho_k(k));
    return static_cast<std::int64_t>(discrete_permutohedron(sys, shifted, limits).points.size());
}

// The point of mu + span with zero orthogonal projection onto the span
// (the "inner-most" vector of the slice), in root coordinates.
inline RatVec slice_innermost(const RootSystem& sys, const RatVec& mu_rc, const RatMat& span_basis) {
    if (span_basis.empty()) return mu_rc;
    RatMat gram = sys.gram();
    const std::size_t r = span_basis.size();
    auto inner = [&](const RatVec& a, const RatVec& b) {
        Rat s(0);
        for (int i = 0; i < sys.rank; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < sys.rank; ++j)
                if (!b[j].is_zero()) s += a[i] * b[j] * gram[i][j];
        }
        return s;
    };
    // solve G t = c with G_ab = <x_a, x_b>, c_a = <mu, x_a>; mu0 = mu - sum t_a x_a
    RatMat g(r, RatVec(r));
    RatVec c(r);
    for (std::size_t a = 0; a < r; ++a) {
        c[a] = inner(mu_rc, span_basis[a]);
        for (std::size_t b = 0; b < r; ++b) g[a][b] = inner(span_basis[a], span_basis[b]);
    }
    auto t = solve(g, c);
    if (!t) throw InternalError("gram system inconsistent");
    RatVec mu0 = mu_rc;
    for (std::size_t a = 0; a < r; ++a)
        if (!t->at(a).is_zero()) mu0 = vec_sub(mu0, vec_scale(span_basis[a], t->at(a)));
    return mu0;
}

// Integrality of slices: for each sampled mu in Q+lambda, the affine slice
// mu + span meets Pi(lambda) iff it meets Pi^Q(lambda).  Returns the
// conjunction over the sample.
inline bool slice_integrality_check(const RootSystem& sys, const Weight& lam_dom, const RatMat& span_basis,
                                    const std::vector<Weight>& coset_sample, const Limits& limits = {}) {
    sys.require_dominant(lam_dom);
    SpanKey span = span_key(span_basis);
    auto perm = discrete_permutohedron(sys, lam_dom, limits);
    std::set<RatVec> discrete_keys;
    for (const Weight& w : perm.points) discrete_keys.insert(quotient_key(sys.weight_rc(w), span));
    for (const Weight& mu : coset_sample) {
        if (!sys.same_coset(mu, lam_dom)) throw DifferentCosetError("sample weight not in Q + lambda");
        RatVec mu_rc = sys.weight_rc(mu);
        RatVec mu0 = slice_innermost(sys, mu_rc, span_basis);
        bool real_slice_nonempty = contains(sys, lam_dom, mu0);
        bool discrete_slice_nonempty = discrete_keys.contains(quotient_key(mu_rc, span));
        if (real_slice_nonempty != discrete_slice_nonempty) return false;
    }
    return true;
}

inline bool slice_integrality_check(const RootSystem& sys, const Weight& lam_dom, const SpanKey& span,
                                    const std::vector<Weight>& coset_sample, const Limits& limits = {}) {
    return slice_integrality_check(sys, lam_dom, span.basis, coset_sample, limits);
}

// Exhaustive coset sample covering every slice that can meet Pi(lambda):
// integer points of Q+lambda in the vertex bounding box, padded by the
// span directions so each relevant coset keeps a representative.
inline std::vector<Weight> slice_coset_sample(const RootSystem& sys, const Weight& lam_dom,
                                              const RatMat& span_basis) {
    auto orbit = sys.weyl_orbit(lam_dom);
    RatVec lo = sys.weight_rc(orbit.front()), hi = lo;
    for (const Weight& w : orbit) {
        RatVec rc = sys.weight_rc(w);
        for (int i = 0; i < sys.rank; ++i) {
            lo[i] = std::min(lo[i], rc[i]);
            hi[i] = std::max(hi[i], rc[i]);
        }
    }
    RatVec margin(sys.rank, Rat(0));
    for (const RatVec& b : span_basis)
        for (int i = 0; i < sys.rank; ++i) margin[i] += (b[i] < Rat(0) ? -b[i] : b[i]);
    // Walk integer root-lattice offsets c with rc(lam)+c inside the padded box.
    std::vector<Weight> sample;
    RatVec base = sys.weight_rc(lam_dom);
    IntVec clo(sys.rank), chi(sys.rank);
    for (int i = 0; i < sys.rank; ++i) {
        clo[i] = (lo[i] - margin[i] - base[i]).floor() - 1;
        chi[i] = (hi[i] + margin[i] - base[i]).floor() + 1;
    }
    IntVec c = clo;
    while (true) {
        Weight mu = lam_dom;
        for (int j = 0; j < sys.rank; ++j) {
            std::int64_t delta = 0;
            for (int i = 0; i < sys.rank; ++i) delta = checked_add(delta, checked_mul(c[i], sys.cartan[i][j]));
            mu.fw[j] = checked_add(mu.fw[j], delta);
        }
        sample.push_back(mu);
        int i = 0;
        while (i < sys.rank && c[i] == chi[i]) c[i] = clo[i], ++i;
        if (i == sys.rank) break;
        ++c[i];
    }
    return sample;
}

}  // namespace rootfire
