#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rootfire/errors.hpp"
#include "rootfire/linalg.hpp"
#include "rootfire/rational.hpp"

namespace rootfire {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Cartan-Killing type of an irreducible root system.
struct TypeLabel {
    Family family;
    int rank;

    std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

    static TypeLabel parse(const std::string& s) {
        if (s.size() < 2) throw InvalidTypeError("unrecognized type label '" + s + "'");
        char f = s[0];
        if (f < 'A' || f > 'G') throw InvalidTypeError("unrecognized family in '" + s + "'");
        int rank = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw InvalidTypeError("bad rank in '" + s + "'");
            rank = rank * 10 + (s[i] - '0');
        }
        TypeLabel label{static_cast<Family>(f), rank};
        label.validate();
        return label;
    }

    void validate() const {
        bool ok = false;
        switch (family) {
            case Family::A: ok = rank >= 1; break;
            case Family::B: ok = rank >= 2; break;
            case Family::C: ok = rank >= 3; break;
            case Family::D: ok = rank >= 4; break;
            case Family::E: ok = rank == 6 || rank == 7 || rank == 8; break;
            case Family::F: ok = rank == 4; break;
            case Family::G: ok = rank == 2; break;
        }
        if (!ok) throw InvalidTypeError("inadmissible type " + str());
    }
};

// Weight in fundamental-weight coordinates.  All dynamics live on these; root
// coordinates are derived on demand through the inverse Cartan matrix.
struct Weight {
    IntVec fw;

    bool operator==(const Weight& o) const { return fw == o.fw; }
    bool operator<(const Weight& o) const { return fw < o.fw; }
    std::int64_t operator[](std::size_t i) const { return fw[i]; }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (std::int64_t v : w.fw) {
            h ^= static_cast<std::size_t>(v);
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

template <typename T>
using WeightMap = std::unordered_map<Weight, T, WeightHash>;
using WeightSet = std::unordered_set<Weight, WeightHash>;

// Sequence of simple-reflection indices, letters composed left-to-right (the
// rightmost letter acts first), so apply(word, v) = s_{i1}(s_{i2}(...(v))).
struct WeylWord {
    std::vector<int> letters;
    std::size_t length() const { return letters.size(); }
};

struct Root {
    IntVec root_coords;    // simple-root basis
    IntVec coroot_coords;  // simple-coroot basis of the covector
    bool is_long = true;
    bool is_positive = false;
    int id = -1;
    int negation = -1;  // id of -root
};

// Weyl-invariant nonnegative deformation parameter: one value per root length
// class (equal values when simply laced).
struct DeformParam {
    std::int64_t k_long = 0;
    std::int64_t k_short = 0;

    static DeformParam uniform(std::int64_t k) { return {k, k}; }
    bool good(bool simply_laced) const {
        if (k_long < 0 || k_short < 0) return false;
        if (simply_laced) return k_long == k_short;
        return k_short != 0 || k_long == 0;
    }
    bool operator==(const DeformParam&) const = default;
};

class RootSystem {
  public:
    TypeLabel label;
    int rank = 0;
    std::vector<IntVec> cartan;      // C[i][j] = <alpha_i, alpha_j^vee>
    IntVec symmetrizer;              // d_j ~ squared root lengths; C[i][j]*d_j symmetric
    RatMat inv_cartan_t;             // (C^T)^{-1}: root coords = inv_cartan_t * fw coords
    std::vector<Root> roots;
    std::vector<int> positive_root_ids;  // sorted by (height, coords)
    std::vector<int> simple_root_ids;    // id of alpha_i per node i
    int highest_root_id = -1;
    int highest_short_root_id = -1;
    std::int64_t index_of_connection = 0;  // f = det(C)
    std::int64_t weyl_order = 0;
    bool simply_laced = true;

    static RootSystem build(TypeLabel lab) {
        lab.validate();
        RootSystem sys;
        sys.label = lab;
        sys.rank = lab.rank;
        sys.cartan = cartan_matrix(lab);
        sys.symmetrizer = compute_symmetrizer(sys.cartan);
        sys.simply_laced =
            *std::max_element(sys.symmetrizer.begin(), sys.symmetrizer.end()) ==
            *std::min_element(sys.symmetrizer.begin(), sys.symmetrizer.end());

        const int n = sys.rank;
        RatMat ct(n, RatVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ct[i][j] = Rat(sys.cartan[j][i]);
        sys.inv_cartan_t = invert(ct);

        sys.generate_roots();
        sys.index_of_connection = det_int(sys.cartan);
        sys.compute_weyl_order();
        return sys;
    }

    const Root& root(int id) const { return roots[id]; }

    // <lambda, alpha^vee>, exact.
    std::int64_t pairing(const Weight& lam, const Root& alpha) const {
        std::int64_t s = 0;
        for (int i = 0; i < rank; ++i) s = checked_add(s, checked_mul(alpha.coroot_coords[i], lam.fw[i]));
        return s;
    }
    std::int64_t pairing(const Weight& lam, int root_id) const { return pairing(lam, roots[root_id]); }

    // <v, alpha^vee> for a rational vector in simple-root coordinates.
    Rat pairing_rc(const RatVec& v_rc, const Root& alpha) const {
        // fw coords of v: fw_j = sum_i v_i C[i][j]
        Rat s(0);
        for (int j = 0; j < rank; ++j) {
            Rat fwj(0);
            for (int i = 0; i < rank; ++i)
                if (!v_rc[i].is_zero()) fwj += v_rc[i] * Rat(cartan[i][j]);
            s += fwj * Rat(alpha.coroot_coords[j]);
        }
        return s;
    }

    Weight reflect(const Weight& lam, int i) const {
        std::int64_t p = lam.fw[i];
        if (p == 0) return lam;
        Weight out = lam;
        for (int j = 0; j < rank; ++j) out.fw[j] = checked_add(out.fw[j], checked_mul(-p, cartan[i][j]));
        return out;
    }

    Weight add_root(const Weight& lam, const Root& alpha) const {
        Weight out = lam;
        for (int j = 0; j < rank; ++j) {
            std::int64_t fw_j = 0;
            for (int i = 0; i < rank; ++i) fw_j = checked_add(fw_j, checked_mul(alpha.root_coords[i], cartan[i][j]));
            out.fw[j] = checked_add(out.fw[j], fw_j);
        }
        return out;
    }

    Weight apply(const WeylWord& w, Weight v) const {
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = reflect(v, *it);
        return v;
    }

    bool is_dominant(const Weight& lam) const {
        for (std::int64_t c : lam.fw)
            if (c < 0) return false;
        return true;
    }

    // Minimal-length w with w^{-1}(lambda) dominant, built greedily by
    // reflecting at the smallest negative coordinate.  Only the group element
    // is contractual; the reduced word is this implementation's tie-break.
    std::pair<Weight, WeylWord> dominant_rep(const Weight& lam) const {
        Weight cur = lam;
        WeylWord word;
        std::size_t guard = 0;
        const std::size_t max_steps = roots.size() * roots.size() + 64;
        while (true) {
            int neg = -1;
            for (int i = 0; i < rank; ++i)
                if (cur.fw[i] < 0) { neg = i; break; }
            if (neg < 0) break;
            cur = reflect(cur, neg);
            word.letters.push_back(neg);
            if (++guard > max_steps && guard > static_cast<std::size_t>(weyl_order))
                throw NonTerminationError("dominant_rep failed to terminate; corrupted system state");
        }
        return {cur, word};
    }

    Weight dominant(const Weight& lam) const { return dominant_rep(lam).first; }

    // BFS closure of {lambda} under the simple reflections indexed by I
    // (0-based).  Deterministic sorted output.
    std::vector<Weight> weyl_orbit(const Weight& lam, const std::vector<int>& I) const {
        WeightSet seen;
        std::vector<Weight> frontier{lam}, out{lam};
        seen.insert(lam);
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const Weight& w : frontier) {
                for (int i : I) {
                    Weight r = reflect(w, i);
                    if (seen.insert(r).second) {
                        next.push_back(r);
                        out.push_back(r);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Weight> weyl_orbit(const Weight& lam) const { return weyl_orbit(lam, all_indices()); }

    std::vector<int> all_indices() const {
        std::vector<int> I(rank);
        std::iota(I.begin(), I.end(), 0);
        return I;
    }

    // rho_k = sum_i k(alpha_i) omega_i.
    Weight rho_k(const DeformParam& k) const {
        Weight r;
        r.fw.resize(rank);
        for (int i = 0; i < rank; ++i) r.fw[i] = simple_is_long_[i] ? k.k_long : k.k_short;
        return r;
    }

    Weight rho() const { return rho_k(DeformParam::uniform(1)); }

    // eta_k(lambda) = lambda + w_lambda(rho_k).
    Weight eta(const Weight& lam, const DeformParam& k) const {
        auto [dom, word] = dominant_rep(lam);
        Weight shifted = apply(word, rho_k(k));
        Weight out = lam;
        for (int i = 0; i < rank; ++i) out.fw[i] = checked_add(out.fw[i], shifted.fw[i]);
        return out;
    }

    // I^{0,1} and I^0 of a dominant weight (0-based index sets).
    std::vector<int> i01_set(const Weight& lam_dom) const {
        require_dominant(lam_dom);
        std::vector<int> I;
        for (int i = 0; i < rank; ++i)
            if (lam_dom.fw[i] == 0 || lam_dom.fw[i] == 1) I.push_back(i);
        return I;
    }
    std::vector<int> i0_set(const Weight& lam_dom) const {
        require_dominant(lam_dom);
        std::vector<int> I;
        for (int i = 0; i < rank; ++i)
            if (lam_dom.fw[i] == 0) I.push_back(i);
        return I;
    }

    // True iff <lambda, alpha^vee> = -1 for some positive root; such weights
    // label no stable point of the symmetric process.
    bool forbidden_sym(const Weight& lam) const {
        for (int id : positive_root_ids)
            if (pairing(lam, roots[id]) == -1) return true;
        return false;
    }

    std::int64_t k_of(const Root& alpha, const DeformParam& k) const {
        return alpha.is_long ? k.k_long : k.k_short;
    }

    Weight zero_weight() const {
        Weight w;
        w.fw.assign(rank, 0);
        return w;
    }

    Weight fundamental_weight(int i) const {
        Weight w = zero_weight();
        w.fw[i] = 1;
        return w;
    }

    Weight root_as_weight(const Root& alpha) const { return add_root(zero_weight(), alpha); }

    // Root coordinates of a weight (rational; integral iff lambda is in Q).
    RatVec weight_rc(const Weight& lam) const {
        RatVec rc(rank);
        for (int i = 0; i < rank; ++i) {
            Rat s(0);
            for (int j = 0; j < rank; ++j) s += inv_cartan_t[i][j] * Rat(lam.fw[j]);
            rc[i] = s;
        }
        return rc;
    }

    bool in_root_lattice(const Weight& lam) const {
        for (const Rat& x : weight_rc(lam))
            if (!x.is_integer()) return false;
        return true;
    }

    bool same_coset(const Weight& a, const Weight& b) const {
        Weight d;
        d.fw.resize(rank);
        for (int i = 0; i < rank; ++i) d.fw[i] = a.fw[i] - b.fw[i];
        return in_root_lattice(d);
    }

    // Gram matrix <alpha_i, alpha_j> in the normalization <alpha_j, alpha_j> = 2 d_j.
    RatMat gram() const {
        RatMat g(rank, RatVec(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) g[i][j] = Rat(cartan[i][j]) * Rat(symmetrizer[j]);
        return g;
    }

    // Squared-length scale of a root vector given by root coords: <v,v>/2.
    std::int64_t length_class(const IntVec& rc) const {
        std::int64_t s = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                s = checked_add(s, checked_mul(checked_mul(rc[i], rc[j]), checked_mul(cartan[i][j], symmetrizer[j])));
        return s / 2;
    }

    void require_dominant(const Weight& lam) const {
        if (!is_dominant(lam)) throw NotDominantError("weight is not dominant");
    }

  private:
    std::vector<bool> simple_is_long_;

    static std::vector<IntVec> cartan_matrix(const TypeLabel& lab) {
        const int n = lab.rank;
        std::vector<IntVec> C(n, IntVec(n, 0));
        for (int i = 0; i < n; ++i) C[i][i] = 2;
        auto link = [&](int i, int j, std::int64_t a = -1, std::int64_t b = -1) {
            C[i][j] = a;
            C[j][i] = b;
        };
        switch (lab.family) {
            case Family::A:
                for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
                break;
            case Family::B:
                for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
                link(n - 2, n - 1, -2, -1);
                break;
            case Family::C:
                for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
                link(n - 2, n - 1, -1, -2);
                break;
            case Family::D:
                for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
                link(n - 3, n - 2);
                link(n - 3, n - 1);
                break;
            case Family::E: {
                // Bourbaki: chain 1-3-4-5-...-n, with node 2 attached to node 4.
                std::vector<int> chain{0, 2, 3, 4, 5, 6, 7};
                chain.resize(n - 1);
                for (std::size_t i = 0; i + 1 < chain.size(); ++i) link(chain[i], chain[i + 1]);
                link(1, 3);
                break;
            }
            case Family::F:
                link(0, 1);
                link(1, 2, -2, -1);
                link(2, 3);
                break;
            case Family::G:
                link(0, 1, -1, -3);
                break;
        }
        return C;
    }

    // Minimal positive integers d_j, proportional to the squared simple-root
    // lengths, making C[i][j] * d_j symmetric.
    static IntVec compute_symmetrizer(const std::vector<IntVec>& C) {
        const int n = static_cast<int>(C.size());
        RatVec d(n);
        std::vector<bool> known(n, false);
        d[0] = Rat(1);
        known[0] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && C[i][j] != 0 && known[i] && !known[j]) {
                        // C_ij d_j = C_ji d_i
                        d[j] = d[i] * Rat(C[j][i]) / Rat(C[i][j]);
                        known[j] = true;
                        changed = true;
                    }
        }
        std::int64_t lcm = 1;
        for (const Rat& x : d) lcm = std::lcm(lcm, x.den());
        IntVec out(n);
        std::int64_t g = 0;
        for (int i = 0; i < n; ++i) {
            out[i] = (d[i] * Rat(lcm)).to_integer();
            g = std::gcd(g, out[i]);
        }
        for (auto& x : out) x /= g;
        return out;
    }

    void generate_roots() {
        const int n = rank;
        std::map<IntVec, int> index;
        std::vector<IntVec> all;
        std::vector<IntVec> frontier;
        for (int i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            frontier.push_back(e);
            index[e] = static_cast<int>(all.size());
            all.push_back(e);
        }
        auto reflect_rc = [&](const IntVec& rc, int i) {
            std::int64_t p = 0;
            for (int j = 0; j < n; ++j) p += rc[j] * cartan[j][i];
            IntVec out = rc;
            out[i] -= p;
            return out;
        };
        while (!frontier.empty()) {
            std::vector<IntVec> next;
            for (const IntVec& rc : frontier) {
                for (int i = 0; i < n; ++i) {
                    IntVec r = reflect_rc(rc, i);
                    if (!index.contains(r)) {
                        index[r] = static_cast<int>(all.size());
                        all.push_back(r);
                        next.push_back(r);
                    }
                }
            }
            frontier = std::move(next);
        }

        std::int64_t dmax = *std::max_element(symmetrizer.begin(), symmetrizer.end());

        // Deterministic global order: positives by (height, coords), then the
        // matching negatives.
        std::vector<IntVec> pos, neg;
        for (const IntVec& rc : all) {
            bool nonneg = std::all_of(rc.begin(), rc.end(), [](std::int64_t c) { return c >= 0; });
            bool nonpos = std::all_of(rc.begin(), rc.end(), [](std::int64_t c) { return c <= 0; });
            if (!nonneg && !nonpos)
                throw InternalError("generated root with mixed-sign coordinates");
            (nonneg ? pos : neg).push_back(rc);
        }
        auto height_less = [](const IntVec& a, const IntVec& b) {
            std::int64_t ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
            std::int64_t hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
            return ha != hb ? ha < hb : a < b;
        };
        std::sort(pos.begin(), pos.end(), height_less);

        roots.clear();
        roots.reserve(all.size());
        auto push_root = [&](const IntVec& rc, bool positive) {
            Root r;
            r.root_coords = rc;
            std::int64_t d_alpha = length_class(rc);
            r.coroot_coords.resize(n);
            for (int i = 0; i < n; ++i) {
                std::int64_t num = rc[i] * symmetrizer[i];
                if (num % d_alpha != 0) throw InternalError("non-integral coroot coordinates");
                r.coroot_coords[i] = num / d_alpha;
            }
            r.is_long = simply_laced || d_alpha == dmax;
            r.is_positive = positive;
            r.id = static_cast<int>(roots.size());
            roots.push_back(r);
            return r.id;
        };
        positive_root_ids.clear();
        for (const IntVec& rc : pos) positive_root_ids.push_back(push_root(rc, true));
        for (const IntVec& rc : pos) {
            IntVec m(n);
            for (int i = 0; i < n; ++i) m[i] = -rc[i];
            push_root(m, false);
        }
        const int np = static_cast<int>(pos.size());
        for (int i = 0; i < np; ++i) {
            roots[i].negation = i + np;
            roots[i + np].negation = i;
        }

        simple_root_ids.assign(n, -1);
        for (int id : positive_root_ids) {
            const IntVec& rc = roots[id].root_coords;
            std::int64_t h = std::accumulate(rc.begin(), rc.end(), std::int64_t{0});
            if (h == 1)
                for (int i = 0; i < n; ++i)
                    if (rc[i] == 1) simple_root_ids[i] = id;
        }

        highest_root_id = positive_root_ids.back();
        // Highest root is the unique coordinatewise maximum among positives.
        for (int id : positive_root_ids) {
            bool geq = true;
            for (int j = 0; j < n; ++j)
                if (roots[id].root_coords[j] < roots[highest_root_id].root_coords[j]) { geq = false; break; }
            if (geq) highest_root_id = id;
        }
        // Highest short root = root whose coroot is the highest root of the
        // dual system: coordinatewise max of coroot coords.
        highest_short_root_id = positive_root_ids[0];
        for (int id : positive_root_ids) {
            bool geq = true;
            for (int j = 0; j < n; ++j)
                if (roots[id].coroot_coords[j] < roots[highest_short_root_id].coroot_coords[j]) { geq = false; break; }
            if (geq) highest_short_root_id = id;
        }

        simple_is_long_.resize(n);
        for (int i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            simple_is_long_[i] = simply_laced || length_class(e) == dmax;
        }
    }

    // |W| = n! * (product of highest-root coordinates) * f.
    void compute_weyl_order() {
        std::int64_t w = 1;
        for (int i = 2; i <= rank; ++i) w = checked_mul(w, i);
        for (std::int64_t c : roots[highest_root_id].root_coords) w = checked_mul(w, c);
        weyl_order = checked_mul(w, index_of_connection);
    }
};

inline Weight weight_sub(const Weight& a, const Weight& b) {
    Weight d;
    d.fw.resize(a.fw.size());
    for (std::size_t i = 0; i < a.fw.size(); ++i) d.fw[i] = checked_add(a.fw[i], -b.fw[i]);
    return d;
}

inline Weight weight_add(const Weight& a, const Weight& b) {
    Weight d;
    d.fw.resize(a.fw.size());
    for (std::size_t i = 0; i < a.fw.size(); ++i) d.fw[i] = checked_add(a.fw[i], b.fw[i]);
    return d;
}

}  // namespace rootfire
