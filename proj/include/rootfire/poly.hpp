#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/linalg.hpp"
#include "rootfire/root_system.hpp"

namespace rootfire {

// Integer-coefficient polynomial in the deformation parameter: bivariate in
// (k_l, k_s) for non-simply-laced systems, univariate in k otherwise (stored
// with the short exponent pinned to zero).
class EhrhartPoly {
  public:
    using Key = std::pair<int, int>;  // (deg_long, deg_short)

    EhrhartPoly() = default;
    explicit EhrhartPoly(bool univariate) : univariate_(univariate) {}

    bool univariate() const { return univariate_; }
    const std::map<Key, std::int64_t>& terms() const { return terms_; }

    void add_term(int deg_l, int deg_s, std::int64_t coeff) {
        if (coeff == 0) return;
        if (univariate_ && deg_s != 0) {
            deg_l += deg_s;
            deg_s = 0;
        }
        auto it = terms_.find({deg_l, deg_s});
        if (it == terms_.end()) {
            terms_[{deg_l, deg_s}] = coeff;
        } else {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::int64_t coeff(int deg_l, int deg_s) const {
        auto it = terms_.find({deg_l, deg_s});
        return it == terms_.end() ? 0 : it->second;
    }

    std::int64_t eval(std::int64_t kl, std::int64_t ks) const {
        std::int64_t total = 0;
        for (const auto& [key, c] : terms_) {
            std::int64_t term = checked_mul(pow_i64(kl, key.first), pow_i64(ks, key.second));
            total = checked_add(total, checked_mul(c, term));
        }
        return total;
    }

    std::int64_t eval_diagonal(std::int64_t k) const { return eval(k, k); }

    // Collapse k_l = k_s = k.
    EhrhartPoly diagonal() const {
        EhrhartPoly p(true);
        for (const auto& [key, c] : terms_) p.add_term(key.first + key.second, 0, c);
        return p;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
        return d;
    }

    bool is_zero() const { return terms_.empty(); }

    bool operator==(const EhrhartPoly& o) const {
        return univariate_ == o.univariate_ && terms_ == o.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto [key, c] = *it;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            std::int64_t a = c < 0 ? -c : c;
            bool has_var = key.first + key.second > 0;
            if (a != 1 || !has_var) os << a;
            if (univariate_) {
                if (key.first > 0) {
                    os << "k";
                    if (key.first > 1) os << "^" << key.first;
                }
            } else {
                if (key.first > 0) {
                    os << "kl";
                    if (key.first > 1) os << "^" << key.first;
                }
                if (key.second > 0) {
                    os << "ks";
                    if (key.second > 1) os << "^" << key.second;
                }
            }
            first = false;
        }
        return os.str();
    }

  private:
    bool univariate_ = true;
    std::map<Key, std::int64_t> terms_;
};

// Exact fit of integer samples by a polynomial with the given monomial
// support.  Throws NonPolynomialFitError when the (overdetermined) system is
// inconsistent or a coefficient comes out non-integral.
inline EhrhartPoly fit_poly(bool univariate, const std::vector<EhrhartPoly::Key>& monomials,
                            const std::vector<std::pair<DeformParam, std::int64_t>>& samples) {
    const std::size_t cols = monomials.size();
    RatMat a;
    RatVec b;
    for (const auto& [k, value] : samples) {
        RatVec row(cols);
        for (std::size_t j = 0; j < cols; ++j)
            row[j] = Rat(checked_mul(pow_i64(k.k_long, monomials[j].first),
                                     pow_i64(k.k_short, monomials[j].second)));
        a.push_back(std::move(row));
        b.push_back(Rat(value));
    }
    auto x = solve(a, b);
    if (!x) throw NonPolynomialFitError("sample values admit no exact polynomial fit");
    EhrhartPoly p(univariate);
    for (std::size_t j = 0; j < cols; ++j) {
        if (x->at(j).is_zero()) continue;
        if (!x->at(j).is_integer())
            throw NonPolynomialFitError("polynomial fit has non-integer coefficient " + x->at(j).str());
        p.add_term(monomials[j].first, monomials[j].second, x->at(j).to_integer());
    }
    return p;
}

// Monomial supports for degree-bounded fits.
inline std::vector<EhrhartPoly::Key> univariate_monomials(int max_deg) {
    std::vector<EhrhartPoly::Key> m;
    for (int d = 0; d <= max_deg; ++d) m.push_back({d, 0});
    return m;
}

inline std::vector<EhrhartPoly::Key> bivariate_monomials(int max_total_deg) {
    std::vector<EhrhartPoly::Key> m;
    for (int a = 0; a <= max_total_deg; ++a)
        for (int b = 0; a + b <= max_total_deg; ++b) m.push_back({a, b});
    return m;
}

// Multivariate counting polynomial over arbitrarily many Minkowski generators
// (exponent 0/1 per generator in the formulas we use, but kept general).
class MultiPoly {
  public:
    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const std::map<std::vector<int>, std::int64_t>& terms() const { return terms_; }

    void add_term(const std::vector<int>& powers, std::int64_t coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(powers);
        if (it == terms_.end()) {
            terms_[powers] = coeff;
        } else {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::int64_t eval(const IntVec& k) const {
        std::int64_t total = 0;
        for (const auto& [powers, c] : terms_) {
            std::int64_t t = c;
            for (std::size_t i = 0; i < powers.size(); ++i) t = checked_mul(t, pow_i64(k[i], powers[i]));
            total = checked_add(total, t);
        }
        return total;
    }

    bool operator==(const MultiPoly&) const = default;

  private:
    std::size_t nvars_ = 0;
    std::map<std::vector<int>, std::int64_t> terms_;
};

}  // namespace rootfire
