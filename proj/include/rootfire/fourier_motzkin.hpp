#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/linalg.hpp"

namespace rootfire {

// One inequality  coeffs . x <= rhs  over exact rationals.
struct LinIneq {
    RatVec coeffs;
    Rat rhs;

    // Scale so the first nonzero coefficient (or rhs) has absolute value 1's
    // denominator structure: divide by the gcd-free positive magnitude of the
    // largest coefficient.  Used only for duplicate pruning.
    void normalize() {
        Rat scale(0);
        for (const Rat& c : coeffs)
            if (!c.is_zero()) {
                Rat a = c < Rat(0) ? -c : c;
                if (scale.is_zero() || a > scale) scale = a;
            }
        if (scale.is_zero()) {
            Rat a = rhs < Rat(0) ? -rhs : rhs;
            if (a.is_zero()) return;
            scale = a;
        }
        for (Rat& c : coeffs) c /= scale;
        rhs /= scale;
    }

    bool operator==(const LinIneq&) const = default;
    bool operator<(const LinIneq& o) const {
        if (coeffs != o.coeffs) return coeffs < o.coeffs;
        return rhs < o.rhs;
    }
};

using IneqSystem = std::vector<LinIneq>;

inline bool satisfies(const IneqSystem& sys, const RatVec& x) {
    for (const LinIneq& q : sys) {
        Rat lhs(0);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!q.coeffs[i].is_zero()) lhs += q.coeffs[i] * x[i];
        if (lhs > q.rhs) return false;
    }
    return true;
}

// equality a.x == b as a pair of inequalities
inline void add_equality(IneqSystem& sys, const RatVec& a, const Rat& b) {
    sys.push_back({a, b});
    RatVec neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    sys.push_back({neg, -b});
}

namespace detail {

// Drop exact duplicates and inequalities dominated by another with the same
// normal direction (pairwise pruning only; no full redundancy removal).
inline void prune(IneqSystem& sys) {
    for (LinIneq& q : sys) q.normalize();
    std::sort(sys.begin(), sys.end());
    IneqSystem out;
    for (const LinIneq& q : sys) {
        if (!out.empty() && out.back().coeffs == q.coeffs) continue;  // keep tightest rhs
        out.push_back(q);
    }
    sys = std::move(out);
}

}  // namespace detail

// Eliminate variable `var` from the system by Fourier-Motzkin combination.
inline IneqSystem fm_eliminate(const IneqSystem& sys, std::size_t var) {
    IneqSystem zero, pos, neg;
    for (const LinIneq& q : sys) {
        if (q.coeffs[var].is_zero())
            zero.push_back(q);
        else if (q.coeffs[var] > Rat(0))
            pos.push_back(q);
        else
            neg.push_back(q);
    }
    IneqSystem out = zero;
    for (const LinIneq& p : pos)
        for (const LinIneq& m : neg) {
            // p: a x_var + ... <= b (a>0); m: -c x_var + ... <= d (c>0)
            Rat a = p.coeffs[var];
            Rat c = -m.coeffs[var];
            LinIneq combined;
            combined.coeffs.resize(p.coeffs.size());
            for (std::size_t i = 0; i < p.coeffs.size(); ++i)
                combined.coeffs[i] = p.coeffs[i] * c + m.coeffs[i] * a;
            combined.rhs = p.rhs * c + m.rhs * a;
            combined.coeffs[var] = Rat(0);
            out.push_back(std::move(combined));
        }
    detail::prune(out);
    return out;
}

// Project the polyhedron onto the coordinates NOT listed in drop_dims
// (coordinates keep their indices; dropped ones become free and are
// eliminated).  Sound and complete for exact rational input.
inline IneqSystem fourier_motzkin_project(IneqSystem sys, std::vector<std::size_t> drop_dims) {
    if (sys.empty()) return sys;
    const std::size_t dim = sys[0].coeffs.size();
    for (std::size_t v : drop_dims)
        if (v >= dim) throw DimensionError("projection variable out of range");
    std::sort(drop_dims.begin(), drop_dims.end());
    drop_dims.erase(std::unique(drop_dims.begin(), drop_dims.end()), drop_dims.end());
    for (std::size_t v : drop_dims) sys = fm_eliminate(sys, v);
    return sys;
}

// Is the system feasible?  Eliminates everything and checks the resulting
// constant constraints 0 <= rhs.
inline bool fm_feasible(IneqSystem sys) {
    if (sys.empty()) return true;
    const std::size_t dim = sys[0].coeffs.size();
    for (std::size_t v = 0; v < dim; ++v) sys = fm_eliminate(sys, v);
    for (const LinIneq& q : sys)
        if (q.rhs < Rat(0)) return false;
    return true;
}

// Halfspace description of conv(points) obtained by eliminating the barycentric
// weights from { x = sum_j l_j p_j, l_j >= 0, sum l_j = 1 }.
inline IneqSystem hull_halfspaces(const std::vector<RatVec>& points) {
    if (points.empty()) throw DimensionError("hull of no points");
    const std::size_t d = points[0].size();
    const std::size_t m = points.size();
    const std::size_t dim = d + m;  // x coords then lambdas
    IneqSystem sys;
    for (std::size_t i = 0; i < d; ++i) {
        RatVec eq(dim, Rat(0));
        eq[i] = Rat(1);
        for (std::size_t j = 0; j < m; ++j) eq[d + j] = -points[j][i];
        add_equality(sys, eq, Rat(0));
    }
    {
        RatVec eq(dim, Rat(0));
        for (std::size_t j = 0; j < m; ++j) eq[d + j] = Rat(1);
        add_equality(sys, eq, Rat(1));
    }
    for (std::size_t j = 0; j < m; ++j) {
        RatVec q(dim, Rat(0));
        q[d + j] = Rat(-1);
        sys.push_back({q, Rat(0)});
    }
    std::vector<std::size_t> drop(m);
    std::iota(drop.begin(), drop.end(), d);
    IneqSystem projected = fourier_motzkin_project(std::move(sys), drop);
    // restrict to the x block
    for (LinIneq& q : projected) q.coeffs.resize(d);
    detail::prune(projected);
    return projected;
}

}  // namespace rootfire
