#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/linalg.hpp"
#include "rootfire/root_system.hpp"

namespace rootfire {

// Canonical key for a rational subspace: reduced row-echelon basis with
// sorted pivot columns.  Two subsets with equal span produce identical keys.
struct SpanKey {
    RatMat basis;             // rref rows
    std::vector<int> pivots;  // strictly increasing pivot columns

    int dim() const { return static_cast<int>(basis.size()); }

    bool operator==(const SpanKey& o) const { return pivots == o.pivots && basis == o.basis; }
    bool operator<(const SpanKey& o) const {
        if (pivots != o.pivots) return pivots < o.pivots;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis[i].size(); ++j) {
                if (basis[i][j] == o.basis[i][j]) continue;
                return basis[i][j] < o.basis[i][j];
            }
        return false;
    }
};

struct SpanKeyHash {
    std::size_t operator()(const SpanKey& k) const noexcept {
        std::size_t h = 0x811c9dc5;
        auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
        for (int p : k.pivots) mix(static_cast<std::size_t>(p));
        std::hash<Rat> rh;
        for (const auto& row : k.basis)
            for (const Rat& x : row) mix(rh(x));
        return h;
    }
};

inline SpanKey span_key(const std::vector<RatVec>& vectors) {
    SpanKey key;
    key.basis = vectors;
    key.pivots = rref(key.basis);
    return key;
}

inline SpanKey span_key_of_roots(const RootSystem& sys, const std::vector<int>& root_ids) {
    std::vector<RatVec> vecs;
    vecs.reserve(root_ids.size());
    for (int id : root_ids) vecs.push_back(to_ratvec(sys.root(id).root_coords));
    return span_key(vecs);
}

// Residue of v modulo the subspace: eliminate the pivot coordinates.  Equal
// results <=> equal cosets v + span.
inline RatVec quotient_key(RatVec v, const SpanKey& s) {
    for (std::size_t r = 0; r < s.basis.size(); ++r) {
        const Rat& c = v[s.pivots[r]];
        if (c.is_zero()) continue;
        Rat f = c;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * s.basis[r][j];
    }
    return v;
}

inline bool in_span(const RatVec& v, const SpanKey& s) { return is_zero_vec(quotient_key(v, s)); }

inline bool in_span(const RootSystem& sys, int root_id, const SpanKey& s) {
    return in_span(to_ratvec(sys.root(root_id).root_coords), s);
}

inline std::vector<int> positive_roots_in_span(const RootSystem& sys, const SpanKey& s) {
    std::vector<int> out;
    for (int id : sys.positive_root_ids)
        if (in_span(sys, id, s)) out.push_back(id);
    return out;
}

// Relative volume of a linearly independent set of integer vectors: gcd of
// the maximal minors of the coordinate matrix.
inline std::int64_t rvol_vectors(const std::vector<IntVec>& x) {
    if (x.empty()) return 1;
    const std::size_t r = x.size();
    const std::size_t n = x[0].size();
    if (r > n) throw DependentSetError("more vectors than ambient dimension");
    std::int64_t g = 0;
    std::vector<std::size_t> rows(r);
    std::iota(rows.begin(), rows.end(), 0);
    // iterate r-subsets of the n coordinates
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<IntVec> minor(r, IntVec(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) minor[i][j] = x[j][idx[i]];
        g = std::gcd(g, std::llabs(det_int(minor)));
        // next combination
        std::size_t k = r;
        while (k > 0 && idx[k - 1] == n - r + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (g == 0) throw DependentSetError("relative volume of a dependent set");
    return g;
}

inline std::int64_t rvol(const RootSystem& sys, const std::vector<int>& root_ids) {
    std::vector<IntVec> x;
    x.reserve(root_ids.size());
    for (int id : root_ids) x.push_back(sys.root(id).root_coords);
    return rvol_vectors(x);
}

// Linearly independent subset of positive roots with its cached invariants.
struct IndepSet {
    std::vector<int> root_ids;  // sorted positive-root ids
    int rank = 0;
    SpanKey span;
    std::int64_t rvol = 1;
    int long_count = 0;
    int short_count = 0;
};

inline double indep_enum_estimate(std::size_t num_positive, int max_rank) {
    double total = 0, term = 1;
    for (int j = 0; j <= max_rank; ++j) {
        total += term;
        term = term * static_cast<double>(num_positive - j) / (j + 1);
    }
    return total;
}

// Emit every linearly independent subset of the positive roots with size at
// most max_rank, exactly once, by backtracking with incremental rank checks.
inline void enumerate_indep_sets(const RootSystem& sys, int max_rank,
                                 const std::function<void(const IndepSet&)>& emit,
                                 const Limits& limits = {}) {
    const auto& pos = sys.positive_root_ids;
    double est = indep_enum_estimate(pos.size(), std::min<int>(max_rank, sys.rank));
    if (est > limits.subset_limit)
        throw ResourceLimitError("independent-subset enumeration too large (estimated " +
                                     std::to_string(est) + " subsets)",
                                 est);
    max_rank = std::min<int>(max_rank, sys.rank);

    IndepSet empty;
    empty.span = span_key({});
    emit(empty);

    std::vector<int> chosen;
    RatMat echelon;  // rref rows of chosen roots
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(chosen.size()) == max_rank) return;
        for (std::size_t t = start; t < pos.size(); ++t) {
            RatVec v = to_ratvec(sys.root(pos[t]).root_coords);
            // reduce against current echelon
            RatMat trial = echelon;
            trial.push_back(v);
            auto piv = rref(trial);
            if (trial.size() != chosen.size() + 1) continue;  // dependent
            chosen.push_back(pos[t]);
            IndepSet s;
            s.root_ids = chosen;
            s.rank = static_cast<int>(chosen.size());
            s.span.basis = trial;
            s.span.pivots = piv;
            s.rvol = rvol(sys, chosen);
            for (int id : chosen) (sys.root(id).is_long ? s.long_count : s.short_count)++;
            emit(s);
            RatMat saved = std::move(echelon);
            echelon = trial;
            rec(t + 1);
            echelon = std::move(saved);
            chosen.pop_back();
        }
    };
    rec(0);
}

}  // namespace rootfire
