#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "rootfire/permutohedra.hpp"
#include "rootfire/root_system.hpp"

using namespace rootfire;

namespace {

Weight make_weight(IntVec fw) { return Weight{std::move(fw)}; }

// dominant weights with all root coordinates <= bound, by scanning a small
// fundamental-weight box (coordinates of rc are monotone in fw coordinates)
std::vector<Weight> dominant_rc_bounded(const RootSystem& sys, std::int64_t bound) {
    std::vector<Weight> out;
    IntVec fw(sys.rank, 0);
    const std::int64_t fw_cap = 2 * bound;
    while (true) {
        Weight w{fw};
        bool ok = true;
        for (const Rat& x : sys.weight_rc(w))
            if (x > Rat(bound)) ok = false;
        if (ok) out.push_back(w);
        int i = 0;
        while (i < sys.rank && fw[i] == fw_cap) fw[i] = 0, ++i;
        if (i == sys.rank) break;
        ++fw[i];
    }
    return out;
}

}  // namespace

TEST_CASE("root order") {
    auto a2 = RootSystem::build(TypeLabel::parse("A2"));
    Weight zero = a2.zero_weight();
    Weight om1 = a2.fundamental_weight(0);
    Weight rho = a2.rho();
    CHECK(root_order_leq(a2, rho, rho));
    CHECK_FALSE(root_order_leq(a2, zero, om1));  // difference not in Q
    CHECK(root_order_leq(a2, zero, rho));        // rho = alpha_1 + alpha_2

    for (const char* label : {"A2", "B2", "G2", "B3"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        Weight r = sys.rho();
        Weight lowered = weight_sub(r, sys.root_as_weight(sys.root(sys.simple_root_ids[0])));
        CHECK(root_order_leq(sys, lowered, r));
    }
}

TEST_CASE("meet is the coordinatewise minimum and preserves dominance") {
    auto b2 = RootSystem::build(TypeLabel::parse("B2"));
    Weight a = make_weight({2, 0});
    Weight b = make_weight({0, 2});
    CHECK(b2.same_coset(a, b));
    Weight m = meet(b2, a, b);
    CHECK(b2.is_dominant(m));
    // oracle via root coordinates
    RatVec ra = b2.weight_rc(a), rb = b2.weight_rc(b), rm = b2.weight_rc(m);
    for (int i = 0; i < 2; ++i) CHECK(rm[i] == std::min(ra[i], rb[i]));

    CHECK(meet(b2, a, a) == a);

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> dist(0, 3);
    for (const char* label : {"A2", "B2", "G2", "B3"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        for (int rep = 0; rep < 60; ++rep) {
            Weight u = sys.zero_weight(), v = sys.zero_weight();
            for (auto& c : u.fw) c = dist(rng);
            for (auto& c : v.fw) c = dist(rng);
            if (!sys.same_coset(u, v)) {
                CHECK_THROWS_AS(meet(sys, u, v), DifferentCosetError);
                continue;
            }
            CHECK(meet(sys, u, v) == meet(sys, v, u));
            Weight m2 = meet(sys, u, v);
            CHECK(root_order_leq(sys, m2, u));
            CHECK(root_order_leq(sys, m2, v));
            CHECK(sys.is_dominant(m2));
        }
    }
}

TEST_CASE("real permutohedron membership") {
    auto b2 = RootSystem::build(TypeLabel::parse("B2"));
    Weight lam = b2.rho();
    CHECK(contains(b2, lam, b2.weight_rc(lam)));
    // (1 + 1/7) lambda is outside
    RatVec stretched = vec_scale(b2.weight_rc(lam), Rat(8, 7));
    CHECK_FALSE(contains(b2, lam, stretched));
    // the slice example: mu0 = 0 inside Pi(omega_1 + omega_2)
    CHECK(contains(b2, lam, RatVec(2, Rat(0))));
}

TEST_CASE("dominant downsets") {
    auto a2 = RootSystem::build(TypeLabel::parse("A2"));
    auto d0 = dominant_downset(a2, a2.zero_weight());
    CHECK(d0.members == std::vector<Weight>{a2.zero_weight()});

    auto dr = dominant_downset(a2, a2.rho());
    CHECK(dr.members.size() == 2);  // {0, rho}
    CHECK(std::count(dr.members.begin(), dr.members.end(), a2.zero_weight()) == 1);

    // oracle: exhaustive scan over the fw box
    for (const char* label : {"B2", "G2", "B3"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        Weight top = sys.rho();
        auto down = dominant_downset(sys, top);
        std::set<Weight> got(down.members.begin(), down.members.end());
        std::set<Weight> expect;
        IntVec fw(sys.rank, 0);
        while (true) {
            Weight w{fw};
            if (root_order_leq(sys, w, top)) expect.insert(w);
            int i = 0;
            while (i < sys.rank && fw[i] == 6) fw[i] = 0, ++i;
            if (i == sys.rank) break;
            ++fw[i];
        }
        CHECK(got == expect);
    }
}

TEST_CASE("discrete permutohedra") {
    auto a1 = RootSystem::build(TypeLabel::parse("A1"));
    auto p = discrete_permutohedron(a1, make_weight({2}));
    CHECK(p.points == std::vector<Weight>{make_weight({-2}), make_weight({0}), make_weight({2})});

    auto a2 = RootSystem::build(TypeLabel::parse("A2"));
    auto hex = discrete_permutohedron(a2, a2.rho());
    CHECK(hex.points.size() == 7);  // hexagon + center

    // minuscule: orbit only
    auto omega1_orbit = discrete_permutohedron(a2, a2.fundamental_weight(0));
    CHECK(omega1_orbit.points.size() == 3);

    // closure under simple reflections
    for (const char* label : {"B2", "G2"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        auto perm = discrete_permutohedron(sys, sys.rho());
        std::set<Weight> pts(perm.points.begin(), perm.points.end());
        for (const Weight& w : perm.points)
            for (int i = 0; i < sys.rank; ++i) CHECK(pts.contains(sys.reflect(w, i)));
    }
}

TEST_CASE("quotient counts degenerate cases") {
    auto b2 = RootSystem::build(TypeLabel::parse("B2"));
    Weight lam = b2.rho();
    SpanKey empty = span_key({});
    SpanKey full = span_key_of_roots(b2, b2.simple_root_ids);
    auto perm = discrete_permutohedron(b2, lam);
    CHECK(quot_count(b2, lam, empty) == static_cast<std::int64_t>(perm.points.size()));
    CHECK(quot_count(b2, lam, full) == 1);
}

TEST_CASE("quot_count against slice-membership oracle in B2") {
    auto b2 = RootSystem::build(TypeLabel::parse("B2"));
    Weight lam = b2.rho();
    RatMat basis = {to_ratvec(b2.root(b2.simple_root_ids[0]).root_coords)};
    SpanKey span = span_key(basis);
    std::int64_t counted = quot_count(b2, lam, span);
    // oracle: distinct cosets of Q+lam whose innermost point lies in Pi(lam)
    std::set<RatVec> keys;
    for (const Weight& mu : slice_coset_sample(b2, lam, basis)) {
        RatVec rc = b2.weight_rc(mu);
        if (contains(b2, lam, slice_innermost(b2, rc, basis))) keys.insert(quotient_key(rc, span));
    }
    CHECK(counted == static_cast<std::int64_t>(keys.size()));
}

TEST_CASE("permutohedron count formula: k = 0 and A1") {
    auto a1 = RootSystem::build(TypeLabel::parse("A1"));
    EhrhartPoly p = perm_count_poly(a1, a1.zero_weight());
    CHECK(p.eval_diagonal(0) == 1);
    CHECK(p.eval_diagonal(1) == 2);  // {-w1, w1} in coset Q + rho
    CHECK(p.coeff(1, 0) == 1);
    CHECK(p.coeff(0, 0) == 1);

    auto b2 = RootSystem::build(TypeLabel::parse("B2"));
    Weight lam = make_weight({1, 1});
    CHECK(perm_count_formula(b2, lam, DeformParam{0, 0}) ==
          static_cast<std::int64_t>(discrete_permutohedron(b2, lam).points.size()));
}

TEST_CASE("permutohedron count formula equals direct count (Thm 2.8 property)") {
    for (const char* label : {"A1", "A2", "B2", "G2"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        for (const Weight& lam : dominant_rc_bounded(sys, 2)) {
            EhrhartPoly poly = perm_count_poly(sys, lam);
            for (std::int64_t kl = 0; kl <= 2; ++kl)
                for (std::int64_t ks = 0; ks <= 2; ++ks) {
                    DeformParam k{kl, ks};
                    if (!k.good(sys.simply_laced)) continue;
                    CAPTURE(label, lam.fw, kl, ks);
                    CHECK(poly.eval(kl, ks) == perm_count_direct(sys, lam, k));
                }
        }
    }
}

TEST_CASE("B3 permutohedron polynomial at lambda = 0 matches the reciprocity table row") {
    auto b3 = RootSystem::build(TypeLabel::parse("B3"));
    EhrhartPoly p = perm_count_poly(b3, b3.zero_weight()).diagonal();
    EhrhartPoly expect(true);
    expect.add_term(3, 0, 87);
    expect.add_term(2, 0, 39);
    expect.add_term(1, 0, 9);
    expect.add_term(0, 0, 1);
    CHECK(p == expect);
}

TEST_CASE("meet compatibility of shifted permutohedra (Prop 2.10)") {
    for (const char* label : {"A2", "B2"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        auto doms = dominant_rc_bounded(sys, 2);
        for (const Weight& lam : doms)
            for (const Weight& mu : doms) {
                if (!sys.same_coset(lam, mu)) continue;
                for (std::int64_t k = 0; k <= 2; ++k) {
                    DeformParam kk = DeformParam::uniform(k);
                    auto pl = discrete_permutohedron(sys, weight_add(lam, sys.rho_k(kk)));
                    auto pm = discrete_permutohedron(sys, weight_add(mu, sys.rho_k(kk)));
                    auto pmeet = discrete_permutohedron(sys, weight_add(meet(sys, lam, mu), sys.rho_k(kk)));
                    std::set<Weight> inter;
                    std::set<Weight> left(pl.points.begin(), pl.points.end());
                    for (const Weight& w : pm.points)
                        if (left.contains(w)) inter.insert(w);
                    std::set<Weight> expect(pmeet.points.begin(), pmeet.points.end());
                    CHECK(inter == expect);
                }
            }
    }
}

TEST_CASE("minimal elements of dominant downsets (Props 2.5/2.6)") {
    for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        for (const Weight& lam : dominant_rc_bounded(sys, 2)) {
            auto down = dominant_downset(sys, lam);
            if (down.members.empty()) continue;
            auto is_minuscule = [&](const Weight& w) {
                if (w == sys.zero_weight()) return false;
                for (int id : sys.positive_root_ids) {
                    std::int64_t p = sys.pairing(w, id);
                    if (p != 0 && p != 1) return false;
                }
                return true;
            };
            if (sys.in_root_lattice(lam)) {
                CHECK(std::count(down.members.begin(), down.members.end(), sys.zero_weight()) == 1);
            } else {
                std::int64_t minuscule_count = 0;
                for (const Weight& w : down.members)
                    if (is_minuscule(w)) ++minuscule_count;
                CHECK(minuscule_count == 1);
            }
        }
    }
}

TEST_CASE("slice integrality: trivial and example configurations") {
    auto b2 = RootSystem::build(TypeLabel::parse("B2"));
    // lambda = 0: single point
    CHECK(slice_integrality_check(b2, b2.zero_weight(), {to_ratvec(b2.root(b2.simple_root_ids[0]).root_coords)},
                                  {b2.zero_weight()}));

    // Pi(omega_1+omega_2) in B2 with the slice through mu = -omega_1+omega_2
    Weight lam = b2.rho();
    Weight mu = make_weight({-1, 1});
    RatMat basis = {to_ratvec(b2.root(b2.simple_root_ids[0]).root_coords)};
    CHECK(slice_integrality_check(b2, lam, basis, {mu}));
    // the innermost point of that slice is the origin, a weight outside Q+lam
    RatVec mu0 = slice_innermost(b2, b2.weight_rc(mu), basis);
    CHECK(is_zero_vec(mu0));
    CHECK_FALSE(b2.same_coset(b2.zero_weight(), lam));

    // G2 slice whose innermost point is not a weight: mu = omega_2 along alpha_2
    auto g2 = RootSystem::build(TypeLabel::parse("G2"));
    Weight lam_g = g2.rho();
    Weight mu_g = g2.fundamental_weight(1);
    RatMat basis_g = {to_ratvec(g2.root(g2.simple_root_ids[1]).root_coords)};
    CHECK(slice_integrality_check(g2, lam_g, basis_g, {mu_g}));
    // here the innermost point is not even a weight
    RatVec mu0_g = slice_innermost(g2, g2.weight_rc(mu_g), basis_g);
    bool integral_pairings = true;
    for (int id : g2.simple_root_ids)
        if (!(g2.pairing_rc(mu0_g, g2.root(id)).is_integer())) integral_pairings = false;
    CHECK_FALSE(integral_pairings);
}

TEST_CASE("slice integrality holds exhaustively on parabolic spans (rank <= 2 here)") {
    for (const char* label : {"A2", "B2"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        for (const Weight& lam : dominant_rc_bounded(sys, 2)) {
            for (std::size_t mask = 0; mask < (std::size_t{1} << sys.rank); ++mask) {
                RatMat basis;
                for (int i = 0; i < sys.rank; ++i)
                    if (mask & (std::size_t{1} << i))
                        basis.push_back(to_ratvec(sys.root(sys.simple_root_ids[i]).root_coords));
                auto sample = slice_coset_sample(sys, lam, basis);
                CAPTURE(label, lam.fw, mask);
                CHECK(slice_integrality_check(sys, lam, basis, sample));
            }
        }
    }
}
