#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/linalg.hpp"
#include "rootfire/root_system.hpp"
#include "rootfire/spans.hpp"

namespace rootfire {

// One irreducible factor of a sub-root system, described inside the ambient
// system: simple roots as ambient root ids, all roots of the factor, and the
// expansion of each factor root in the factor's simple basis.
struct SubSystemFactor {
    std::vector<int> simple_ids;           // ambient ids of the factor's simple roots
    std::vector<int> root_ids;             // all ambient roots lying in the factor
    std::vector<RatVec> simple_rc;         // simple roots in ambient root coordinates
};

struct SubRootSystem {
    SpanKey span;
    std::vector<SubSystemFactor> factors;
};

// Roots of the ambient system inside Span(generators), split into irreducible
// factors by connectivity of the pairing graph on a chosen simple system (the
// positive roots of the sub-system not expressible as sums of two of them).
inline SubRootSystem sub_root_system(const RootSystem& sys, const std::vector<int>& generator_ids) {
    SubRootSystem out;
    out.span = span_key_of_roots(sys, generator_ids);
    std::vector<int> pos = positive_roots_in_span(sys, out.span);
    std::set<IntVec> pos_set;
    for (int id : pos) pos_set.insert(sys.root(id).root_coords);

    std::vector<int> simples;
    for (int id : pos) {
        bool is_sum = false;
        for (int other : pos) {
            IntVec diff(sys.rank);
            for (int i = 0; i < sys.rank; ++i)
                diff[i] = sys.root(id).root_coords[i] - sys.root(other).root_coords[i];
            if (pos_set.contains(diff)) {
                is_sum = true;
                break;
            }
        }
        if (!is_sum) simples.push_back(id);
    }
    // descending-lex on coordinates reproduces the ambient node order when the
    // generators are ambient simple roots
    std::sort(simples.begin(), simples.end(), [&](int a, int b) {
        return sys.root(a).root_coords > sys.root(b).root_coords;
    });

    // connected components of the pairing graph
    const std::size_t m = simples.size();
    std::vector<bool> seen(m, false);
    for (std::size_t s = 0; s < m; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (std::size_t t = 0; t < m; ++t) {
                if (seen[t]) continue;
                std::int64_t p = sys.pairing(sys.root_as_weight(sys.root(simples[comp[head]])),
                                             sys.root(simples[t]));
                if (p != 0) {
                    seen[t] = true;
                    comp.push_back(t);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        SubSystemFactor factor;
        for (std::size_t idx : comp) factor.simple_ids.push_back(simples[idx]);
        for (int id : factor.simple_ids) factor.simple_rc.push_back(to_ratvec(sys.root(id).root_coords));
        SpanKey fspan = span_key_of_roots(sys, factor.simple_ids);
        for (int id : pos)
            if (in_span(sys, id, fspan)) {
                factor.root_ids.push_back(id);
                factor.root_ids.push_back(sys.root(id).negation);
            }
        out.factors.push_back(std::move(factor));
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const SubSystemFactor& a, const SubSystemFactor& b) { return a.simple_ids < b.simple_ids; });
    return out;
}

struct DualVertex {
    RatVec rc;       // ambient root coordinates
    int node = 0;    // index into the factor's simple system (0-based)
    std::int64_t a = 1;  // highest-dual-root coefficient at that node
};

struct DualVertexSet {
    SubSystemFactor factor;
    std::vector<DualVertex> vertices;  // omega'_j / a_j per qualifying node
};

namespace detail {

// Expansion coefficients of the coroot of `root_id` in the factor's
// simple-coroot basis: c_j * d(beta_j) / d(root).
inline RatVec factor_coroot_coeffs(const RootSystem& sys, const SubSystemFactor& f, int root_id) {
    const std::size_t m = f.simple_ids.size();
    RatMat a(sys.rank, RatVec(m));
    for (std::size_t j = 0; j < m; ++j)
        for (int i = 0; i < sys.rank; ++i) a[i][j] = f.simple_rc[j][i];
    auto c = solve(a, to_ratvec(sys.root(root_id).root_coords));
    if (!c) throw InternalError("factor root outside factor span");
    std::int64_t d_root = sys.length_class(sys.root(root_id).root_coords);
    for (std::size_t j = 0; j < m; ++j) {
        std::int64_t d_simple = sys.length_class(sys.root(f.simple_ids[j]).root_coords);
        (*c)[j] = (*c)[j] * Rat(d_simple, d_root);
    }
    return *c;
}

}  // namespace detail

// Dominant vertices of the polar dual of the factor's dual root polytope:
// omega'_j / a_j at the nodes j whose removal keeps the extended diagram of
// the dual system connected.  Coefficients a_j come from the highest root of
// the dual factor expanded in simple coroots.
inline DualVertexSet dual_polytope_dominant_vertices(const RootSystem& sys, const SubSystemFactor& factor) {
    DualVertexSet out;
    out.factor = factor;
    const std::size_t m = factor.simple_ids.size();

    // highest root of the dual factor: coordinatewise maximum of the
    // simple-coroot coefficient vectors
    int theta_id = -1;
    RatVec theta_coeffs;
    for (int id : factor.root_ids) {
        RatVec c = detail::factor_coroot_coeffs(sys, factor, id);
        if (theta_id < 0) {
            theta_id = id;
            theta_coeffs = c;
            continue;
        }
        bool geq = true;
        for (std::size_t j = 0; j < m; ++j)
            if (c[j] < theta_coeffs[j]) {
                geq = false;
                break;
            }
        if (geq) {
            theta_id = id;
            theta_coeffs = c;
        }
    }
    IntVec a(m);
    for (std::size_t j = 0; j < m; ++j) a[j] = theta_coeffs[j].to_integer();

    // extended diagram of the dual factor: nodes 0..m-1 plus the affine node
    // m attached by nonzero pairing with the highest dual root
    std::vector<std::vector<int>> adj(m + 1);
    auto pair_roots = [&](int id_a, int id_b) {
        return sys.pairing(sys.root_as_weight(sys.root(id_a)), sys.root(id_b));
    };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j)
            if (pair_roots(factor.simple_ids[i], factor.simple_ids[j]) != 0) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        if (pair_roots(theta_id, factor.simple_ids[i]) != 0) {
            adj[i].push_back(static_cast<int>(m));
            adj[m].push_back(static_cast<int>(i));
        }
    }

    // factor Cartan matrix A[j][k] = <beta_j, beta_k^vee> for fundamental weights
    RatMat fc(m, RatVec(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            fc[j][k] = Rat(pair_roots(factor.simple_ids[j], factor.simple_ids[k]));

    for (std::size_t j = 0; j < m; ++j) {
        // connectivity of the extended diagram with node j removed
        std::vector<bool> vis(m + 1, false);
        std::vector<int> stack;
        int start = j == 0 ? 1 : 0;
        if (m == 1) start = static_cast<int>(m);  // only the affine node remains
        vis[start] = true;
        stack.push_back(start);
        std::size_t reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (v == static_cast<int>(j) || vis[v]) continue;
                vis[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
        if (reached != m) continue;  // m nodes remain after removing one of m+1

        // omega'_j: solve sum_t x_t <beta_t, beta_k^vee> = delta_jk
        RatMat fct(m, RatVec(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t cidx = 0; cidx < m; ++cidx) fct[r][cidx] = fc[cidx][r];
        RatVec e(m, Rat(0));
        e[j] = Rat(1);
        auto x = solve(fct, e);
        if (!x) throw InternalError("factor Cartan matrix not invertible");
        RatVec vert(sys.rank, Rat(0));
        for (std::size_t t = 0; t < m; ++t)
            if (!(*x)[t].is_zero()) vert = vec_add(vert, vec_scale(factor.simple_rc[t], (*x)[t]));
        DualVertex dv;
        dv.rc = vec_scale(vert, Rat(1, a[j]));
        dv.node = static_cast<int>(j);
        dv.a = a[j];
        out.vertices.push_back(std::move(dv));
    }
    return out;
}

struct MaxReport {
    TypeLabel label;
    int removed_node = 0;  // 1-based simple-root index
    Rat max_value;
    RatVec argmax_vertex_rc;
    int argmax_coroot_id = -1;
};

// Maximum of <v, alpha^vee> over the vertices v of the dual polytope of the
// maximal parabolic sub-system (node i removed) and all coroots outside it.
// Dominant vertices of the product (one per factor) times all complement
// coroots suffice: the parabolic Weyl group permutes the complement and the
// vertex set is its orbit of the dominant vertices.
inline MaxReport projection_dilation_max(const RootSystem& sys, int removed_node_1based,
                                         const SubRootSystem* precomputed = nullptr) {
    const int i = removed_node_1based - 1;
    if (i < 0 || i >= sys.rank) throw BadParamError("removed node out of range");

    std::vector<int> gens;
    for (int j = 0; j < sys.rank; ++j)
        if (j != i) gens.push_back(sys.simple_root_ids[j]);
    SubRootSystem sub = precomputed ? *precomputed : sub_root_system(sys, gens);

    std::vector<std::vector<DualVertex>> per_factor;
    for (const auto& f : sub.factors) per_factor.push_back(dual_polytope_dominant_vertices(sys, f).vertices);

    std::vector<int> complement;
    for (const Root& r : sys.roots)
        if (!in_span(to_ratvec(r.root_coords), sub.span)) complement.push_back(r.id);

    MaxReport report;
    report.label = sys.label;
    report.removed_node = removed_node_1based;
    report.max_value = Rat(0);
    report.argmax_vertex_rc = RatVec(sys.rank, Rat(0));

    // iterate vertex combinations (one dominant vertex per factor)
    std::vector<std::size_t> pick(per_factor.size(), 0);
    while (true) {
        RatVec v(sys.rank, Rat(0));
        for (std::size_t f = 0; f < per_factor.size(); ++f) v = vec_add(v, per_factor[f][pick[f]].rc);
        for (int id : complement) {
            Rat val = sys.pairing_rc(v, sys.root(id));
            if (val > report.max_value) {
                report.max_value = val;
                report.argmax_vertex_rc = v;
                report.argmax_coroot_id = id;
            }
        }
        if (per_factor.empty()) break;
        std::size_t f = 0;
        while (f < per_factor.size() && pick[f] + 1 == per_factor[f].size()) pick[f++] = 0;
        if (f == per_factor.size()) break;
        ++pick[f];
    }
    return report;
}

// Oshima's uniqueness: among coroots outside the maximal parabolic that are
// dominant for it, no two share both the alpha_i^vee coordinate and the
// length class.  Returns the representatives for inspection.
struct OshimaReport {
    bool unique = true;
    std::vector<int> dominant_ids;  // ambient root ids of the dominant coroots
};

inline OshimaReport oshima_check(const RootSystem& sys, int removed_node_1based) {
    const int i = removed_node_1based - 1;
    if (i < 0 || i >= sys.rank) throw BadParamError("removed node out of range");
    OshimaReport rep;
    std::set<std::pair<std::int64_t, bool>> seen;  // (coordinate, coroot length class)
    for (const Root& r : sys.roots) {
        // coroot outside Phi_i^vee <=> alpha_i^vee coordinate nonzero
        if (r.coroot_coords[i] == 0) continue;
        bool dominant = true;
        for (int j = 0; j < sys.rank && dominant; ++j) {
            if (j == i) continue;
            // <alpha_j, alpha^vee> >= 0
            std::int64_t p = sys.pairing(sys.root_as_weight(sys.root(sys.simple_root_ids[j])), r);
            if (p < 0) dominant = false;
        }
        if (!dominant) continue;
        rep.dominant_ids.push_back(r.id);
        // coroot is long in the dual system iff the root is short
        bool coroot_long = sys.simply_laced || !r.is_long;
        if (!seen.insert({r.coroot_coords[i], coroot_long}).second) rep.unique = false;
    }
    return rep;
}

struct KappaStatistics {
    Rat kappa;
    Rat rank_times_two_minus_kappa;
    std::vector<MaxReport> per_node;
};

inline KappaStatistics kappa_statistics(const RootSystem& sys) {
    KappaStatistics st;
    st.kappa = Rat(0);
    for (int i = 1; i <= sys.rank; ++i) {
        st.per_node.push_back(projection_dilation_max(sys, i));
        if (st.per_node.back().max_value > st.kappa) st.kappa = st.per_node.back().max_value;
    }
    if (st.kappa < Rat(1)) st.kappa = Rat(1);
    st.rank_times_two_minus_kappa = Rat(sys.rank) * (Rat(2) - st.kappa);
    return st;
}

}  // namespace rootfire
