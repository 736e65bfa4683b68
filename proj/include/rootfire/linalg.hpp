#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/rational.hpp"

namespace rootfire {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<std::int64_t>;

inline RatVec to_ratvec(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec vec_scale(const RatVec& a, const Rat& f) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * f;
    return r;
}

// Reduced row-echelon form in place; returns pivot column per surviving row.
// Rows end up with leading coefficient 1, pivots strictly increasing, and all
// other entries in a pivot column zero; zero rows are dropped.
inline std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Exact inverse of a square rational matrix.
inline RatMat invert(const RatMat& a) {
    const std::size_t n = a.size();
    RatMat aug(n, RatVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = Rat(1);
    }
    auto piv = rref(aug);
    if (piv.size() != n) throw DimensionError("matrix not invertible");
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// Solve A x = b exactly; empty optional when inconsistent.  A may be
// overdetermined; when the solution is not unique this throws (we never need
// underdetermined solves).
inline std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    RatMat aug(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    for (const auto& r : aug) {
        bool all_zero = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (!r[j].is_zero()) { all_zero = false; break; }
        if (all_zero && !r[cols].is_zero()) return std::nullopt;
    }
    std::size_t rank = 0;
    for (int p : piv)
        if (p < static_cast<int>(cols)) ++rank;
    if (rank < cols) throw DimensionError("underdetermined linear system");
    RatVec x(cols);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] < static_cast<int>(cols)) x[piv[i]] = aug[i][cols];
    return x;
}

inline std::size_t rank_of(RatMat m) {
    return rref(m).size();
}

// Exact determinant of an integer matrix (fraction-free via rationals; sizes
// here are <= 8).
inline std::int64_t det_int(const std::vector<IntVec>& m) {
    const std::size_t n = m.size();
    RatMat a(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col].is_zero()) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Rat f = a[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[col][j];
        }
    }
    return det.to_integer();
}

}  // namespace rootfire
