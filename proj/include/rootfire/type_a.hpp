#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/linalg.hpp"
#include "rootfire/rational.hpp"

namespace rootfire {

// Type A counting in the standard realization: permutohedra of integer
// vectors in Z^{n+1}, quotients indexed by partitions of n+1.

using Partition = std::vector<std::int64_t>;  // weakly decreasing positive parts

inline std::vector<Partition> partitions_of(std::int64_t n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rest, std::int64_t maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Number of labeled forests on sum(lambda) vertices whose component sizes are
// lambda: choose the blocks, then a tree on each block.
inline std::int64_t f_lambda(const Partition& lambda) {
    std::int64_t n = std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
    std::int64_t count = 1;
    // multinomial n! / prod(lambda_i!) built up part by part
    std::int64_t remaining = n;
    for (std::int64_t part : lambda) {
        // C(remaining, part)
        std::int64_t c = 1;
        for (std::int64_t i = 0; i < part; ++i)
            c = checked_mul(c, remaining - i) / (i + 1);
        count = checked_mul(count, c);
        remaining -= part;
    }
    // divide by multiplicities of equal parts
    std::int64_t run = 1;
    for (std::size_t i = 1; i <= lambda.size(); ++i) {
        if (i < lambda.size() && lambda[i] == lambda[i - 1]) {
            ++run;
        } else {
            for (std::int64_t r = 2; r <= run; ++r) count /= r;
            run = 1;
        }
    }
    for (std::int64_t part : lambda)
        if (part >= 3) count = checked_mul(count, pow_i64(part, static_cast<int>(part - 2)));
    return count;
}

// Number of compositions of i fitting inside the Young diagram of lambda:
// tuples 0 <= mu_j <= lambda_j summing to i.
inline std::int64_t compositions_fitting(std::int64_t i, const Partition& lambda) {
    std::vector<std::int64_t> dp(i + 1, 0);
    dp[0] = 1;
    for (std::int64_t part : lambda) {
        std::vector<std::int64_t> next(i + 1, 0);
        for (std::int64_t s = 0; s <= i; ++s) {
            if (dp[s] == 0) continue;
            for (std::int64_t add = 0; add <= part && s + add <= i; ++add)
                next[s + add] = checked_add(next[s + add], dp[s]);
        }
        dp = std::move(next);
    }
    return dp[i];
}

// x in Pi(a) iff the coordinate sums agree and sorted-descending prefix sums
// of x are dominated by those of a (a weakly decreasing).
inline bool in_permutohedron(const IntVec& x, const IntVec& a) {
    IntVec s = x;
    std::sort(s.begin(), s.end(), std::greater<>());
    std::int64_t px = 0, pa = 0;
    for (std::size_t t = 0; t + 1 < s.size(); ++t) {
        px += s[t];
        pa += a[t];
        if (px > pa) return false;
    }
    return std::accumulate(x.begin(), x.end(), std::int64_t{0}) ==
           std::accumulate(a.begin(), a.end(), std::int64_t{0});
}

inline std::vector<IntVec> permutohedron_lattice_points(const IntVec& a) {
    const std::size_t n1 = a.size();
    std::int64_t lo = *std::min_element(a.begin(), a.end());
    std::int64_t hi = *std::max_element(a.begin(), a.end());
    std::int64_t total = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::vector<IntVec> out;
    IntVec x(n1, lo);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t rest) {
        if (pos + 1 == n1) {
            if (rest < lo || rest > hi) return;
            x[pos] = rest;
            if (in_permutohedron(x, a)) out.push_back(x);
            return;
        }
        for (std::int64_t v = lo; v <= hi; ++v) {
            x[pos] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, total);
    return out;
}

// #quot_lambda(Pi(a) cap Z^{n+1}): distinct consecutive-block sum images.
inline std::int64_t quot_lambda_count(const IntVec& a, const Partition& lambda) {
    std::set<IntVec> images;
    for (const IntVec& x : permutohedron_lattice_points(a)) {
        IntVec img(lambda.size());
        std::size_t at = 0;
        for (std::size_t b = 0; b < lambda.size(); ++b) {
            std::int64_t s = 0;
            for (std::int64_t i = 0; i < lambda[b]; ++i) s += x[at++];
            img[b] = s;
        }
        images.insert(std::move(img));
    }
    return static_cast<std::int64_t>(images.size());
}

// Right-hand side of the Type A lattice-point formula:
// sum over partitions of quot count * forest count * k^{n+1-l(lambda)}.
inline std::int64_t typeA_count(const IntVec& a, std::int64_t k) {
    if (!std::is_sorted(a.begin(), a.end(), std::greater<>()))
        throw BadParamError("Type A vector must be weakly decreasing");
    const std::int64_t n1 = static_cast<std::int64_t>(a.size());
    std::int64_t total = 0;
    for (const Partition& lam : partitions_of(n1)) {
        std::int64_t term = checked_mul(quot_lambda_count(a, lam), f_lambda(lam));
        term = checked_mul(term, pow_i64(k, static_cast<int>(n1 - lam.size())));
        total = checked_add(total, term);
    }
    return total;
}

// Direct count of Pi(a + k rho) cap Z^{n+1} with rho = (n, n-1, ..., 0).
inline std::int64_t typeA_direct_count(const IntVec& a, std::int64_t k) {
    IntVec shifted = a;
    const std::int64_t n1 = static_cast<std::int64_t>(a.size());
    for (std::int64_t i = 0; i < n1; ++i) shifted[i] += k * (n1 - 1 - i);
    return static_cast<std::int64_t>(permutohedron_lattice_points(shifted).size());
}

}  // namespace rootfire
