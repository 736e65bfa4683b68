#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/fourier_motzkin.hpp"
#include "rootfire/linalg.hpp"
#include "rootfire/poly.hpp"
#include "rootfire/spans.hpp"

namespace rootfire {

// Convex lattice polytope by its vertex (or spanning point) list in Z^d.
struct LatticePolytope {
    std::vector<IntVec> vertices;

    std::size_t dim() const { return vertices.empty() ? 0 : vertices[0].size(); }
};

namespace detail {

inline void check_dims(const LatticePolytope& p, const std::vector<IntVec>& gens) {
    if (p.vertices.empty()) throw DimensionError("polytope needs at least one vertex");
    const std::size_t d = p.dim();
    if (d > 4) throw DimensionError("ambient dimension above the supported bound of 4");
    for (const auto& v : p.vertices)
        if (v.size() != d) throw DimensionError("inconsistent vertex dimensions");
    for (const auto& g : gens)
        if (g.size() != d) throw DimensionError("generator dimension mismatch");
}

inline std::vector<RatVec> to_ratpoints(const std::vector<IntVec>& pts) {
    std::vector<RatVec> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(to_ratvec(p));
    return out;
}

// integer bounding box of rational points, padded by `pad`
inline std::pair<IntVec, IntVec> bounding_box(const std::vector<RatVec>& pts, const RatVec& pad) {
    const std::size_t d = pts[0].size();
    IntVec lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        Rat mn = pts[0][i], mx = pts[0][i];
        for (const auto& p : pts) {
            mn = std::min(mn, p[i]);
            mx = std::max(mx, p[i]);
        }
        lo[i] = (mn - pad[i]).floor();
        hi[i] = (mx + pad[i]).floor() + 1;
    }
    return {lo, hi};
}

template <typename F>
inline void scan_box(const IntVec& lo, const IntVec& hi, const Limits& limits, F&& visit) {
    double volume = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) volume *= static_cast<double>(hi[i] - lo[i] + 1);
    if (volume > static_cast<double>(limits.box_limit))
        throw ResourceLimitError("enumeration box of " + std::to_string(volume) + " points exceeds limit",
                                 volume);
    IntVec x = lo;
    const std::size_t d = lo.size();
    while (true) {
        visit(x);
        std::size_t i = 0;
        while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
        if (i == d) return;
        ++x[i];
    }
}

}  // namespace detail

// #(P + sum_i k_i [0, v_i]) cap Z^d by direct enumeration: the Minkowski sum's
// halfspace description is projected out of {x = p + V t, p in P, 0 <= t <= k}
// once, then an integer box scan tests membership.
inline std::int64_t minkowski_count(const LatticePolytope& p, const std::vector<IntVec>& gens,
                                    const IntVec& kvec, const Limits& limits = {}) {
    detail::check_dims(p, gens);
    if (kvec.size() != gens.size()) throw DimensionError("one multiplier per generator required");
    for (std::int64_t k : kvec)
        if (k < 0) throw BadParamError("negative dilation");
    const std::size_t d = p.dim();
    const std::size_t m = gens.size();

    IneqSystem phalf = hull_halfspaces(detail::to_ratpoints(p.vertices));
    // variables (x_0..x_{d-1}, t_0..t_{m-1}): A(x - sum t_i v_i) <= b, 0 <= t <= k
    IneqSystem sys;
    for (const LinIneq& q : phalf) {
        LinIneq ext;
        ext.coeffs.assign(d + m, Rat(0));
        for (std::size_t i = 0; i < d; ++i) ext.coeffs[i] = q.coeffs[i];
        for (std::size_t j = 0; j < m; ++j) {
            Rat s(0);
            for (std::size_t i = 0; i < d; ++i) s += q.coeffs[i] * Rat(gens[j][i]);
            ext.coeffs[d + j] = -s;
        }
        ext.rhs = q.rhs;
        sys.push_back(std::move(ext));
    }
    for (std::size_t j = 0; j < m; ++j) {
        LinIneq lo, hi;
        lo.coeffs.assign(d + m, Rat(0));
        hi.coeffs.assign(d + m, Rat(0));
        lo.coeffs[d + j] = Rat(-1);
        lo.rhs = Rat(0);
        hi.coeffs[d + j] = Rat(1);
        hi.rhs = Rat(kvec[j]);
        sys.push_back(std::move(lo));
        sys.push_back(std::move(hi));
    }
    std::vector<std::size_t> drop(m);
    std::iota(drop.begin(), drop.end(), d);
    IneqSystem xsys = fourier_motzkin_project(std::move(sys), drop);
    for (LinIneq& q : xsys) q.coeffs.resize(d);

    // box of candidate integer points: P's vertices shifted by every 0/k corner
    std::vector<RatVec> corners;
    for (const auto& u : p.vertices) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            RatVec c = to_ratvec(u);
            for (std::size_t j = 0; j < m; ++j)
                if (mask & (std::size_t{1} << j))
                    for (std::size_t i = 0; i < d; ++i) c[i] += Rat(checked_mul(kvec[j], gens[j][i]));
            corners.push_back(std::move(c));
        }
    }
    auto [lo, hi] = detail::bounding_box(corners, RatVec(d, Rat(0)));
    std::int64_t count = 0;
    detail::scan_box(lo, hi, limits, [&](const IntVec& x) {
        if (satisfies(xsys, to_ratvec(x))) ++count;
    });
    return count;
}

struct QuotCounts {
    std::int64_t rational = 0;  // #(quot_X(P) cap quot_X(Z^d))
    std::int64_t integral = 0;  // #quot_X(P cap Z^d)
};

namespace detail {

// Distinct quotient keys of integer points whose coset meets P.  Every coset
// of Span(X) that meets P and carries integer points has one inside the
// vertex box padded by the generator magnitudes, so the scan is exhaustive.
inline std::int64_t count_rational_quots(const LatticePolytope& p, const std::vector<IntVec>& x_set,
                                         const Limits& limits) {
    const std::size_t d = p.dim();
    SpanKey span = span_key(to_ratpoints(x_set));
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d; ++i)
        if (std::find(span.pivots.begin(), span.pivots.end(), static_cast<int>(i)) == span.pivots.end())
            keep.push_back(i);
    auto compress = [&](const RatVec& v) {
        RatVec out(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) out[i] = v[keep[i]];
        return out;
    };
    std::vector<RatVec> proj_vertices;
    for (const auto& u : p.vertices) proj_vertices.push_back(compress(quotient_key(to_ratvec(u), span)));
    if (keep.empty()) return 1;
    IneqSystem proj_hull = hull_halfspaces(proj_vertices);

    RatVec pad(d, Rat(0));
    for (const auto& g : x_set)
        for (std::size_t i = 0; i < d; ++i) pad[i] += Rat(g[i] < 0 ? -g[i] : g[i]);
    auto [lo, hi] = bounding_box(to_ratpoints(p.vertices), pad);
    std::set<RatVec> keys;
    scan_box(lo, hi, limits, [&](const IntVec& u) {
        RatVec key = compress(quotient_key(to_ratvec(u), span));
        if (satisfies(proj_hull, key)) keys.insert(std::move(key));
    });
    return static_cast<std::int64_t>(keys.size());
}

inline std::vector<IntVec> lattice_points_of(const LatticePolytope& p, const Limits& limits) {
    IneqSystem hull = hull_halfspaces(to_ratpoints(p.vertices));
    auto [lo, hi] = bounding_box(to_ratpoints(p.vertices), RatVec(p.dim(), Rat(0)));
    std::vector<IntVec> pts;
    scan_box(lo, hi, limits, [&](const IntVec& x) {
        if (satisfies(hull, to_ratvec(x))) pts.push_back(x);
    });
    return pts;
}

}  // namespace detail

inline QuotCounts minkowski_quot_counts(const LatticePolytope& p, const std::vector<IntVec>& x_set,
                                        const Limits& limits = {}) {
    detail::check_dims(p, x_set);
    QuotCounts qc;
    qc.rational = detail::count_rational_quots(p, x_set, limits);
    SpanKey span = span_key(detail::to_ratpoints(x_set));
    std::set<RatVec> keys;
    for (const IntVec& u : detail::lattice_points_of(p, limits)) keys.insert(quotient_key(to_ratvec(u), span));
    qc.integral = static_cast<std::int64_t>(keys.size());
    return qc;
}

// Multivariate lattice-point polynomial of P + sum k_i [0, v_i]: over every
// linearly independent subset X of the generators, the number of integer
// quotient classes meeting P times the relative volume of X, at monomial
// prod_{v_i in X} k_i.  Stanley's zonotope formula is the single-point case.
inline MultiPoly minkowski_poly(const LatticePolytope& p, const std::vector<IntVec>& gens,
                                const Limits& limits = {}) {
    detail::check_dims(p, gens);
    const std::size_t m = gens.size();
    MultiPoly poly(m);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<IntVec> x_set;
        std::vector<int> powers(m, 0);
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (std::size_t{1} << j)) {
                x_set.push_back(gens[j]);
                powers[j] = 1;
            }
        if (!x_set.empty() && rank_of(detail::to_ratpoints(x_set)) != x_set.size()) continue;
        std::int64_t rv = x_set.empty() ? 1 : rvol_vectors(x_set);
        std::int64_t classes = detail::count_rational_quots(p, x_set, limits);
        poly.add_term(powers, checked_mul(rv, classes));
    }
    return poly;
}

}  // namespace rootfire
