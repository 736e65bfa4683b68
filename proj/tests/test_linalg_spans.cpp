#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "rootfire/root_system.hpp"
#include "rootfire/spans.hpp"

using namespace rootfire;

namespace {

int root_id_by_coords(const RootSystem& sys, const IntVec& rc) {
    for (const Root& r : sys.roots)
        if (r.root_coords == rc) return r.id;
    FAIL("root not found");
    return -1;
}

// Oracle: lattice points of the half-open parallelepiped sum [0, x) over the
// root lattice Q = Z^n in simple-root coordinates.
std::int64_t half_open_parallelepiped_points(const std::vector<IntVec>& x) {
    const std::size_t r = x.size();
    const std::size_t n = x[0].size();
    // points sum t_a x_a with t in [0,1)^r; enumerate integer points in bbox
    IntVec lo(n, 0), hi(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& v : x) {
            if (v[i] < 0) lo[i] += v[i];
            if (v[i] > 0) hi[i] += v[i];
        }
    }
    std::int64_t count = 0;
    IntVec p = lo;
    while (true) {
        // solve p = sum t_a x_a exactly
        RatMat a(n, RatVec(r));
        RatVec b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < r; ++j) a[i][j] = Rat(x[j][i]);
            b[i] = Rat(p[i]);
        }
        auto t = solve(a, b);
        if (t) {
            bool inside = true;
            for (const Rat& c : *t)
                if (c < Rat(0) || c >= Rat(1)) inside = false;
            if (inside) ++count;
        }
        std::size_t i = 0;
        while (i < n && p[i] == hi[i]) p[i] = lo[i], ++i;
        if (i == n) break;
        ++p[i];
    }
    return count;
}

}  // namespace

TEST_CASE("rvol basics") {
    auto b3 = RootSystem::build(TypeLabel::parse("B3"));
    std::vector<int> simples = b3.simple_root_ids;
    CHECK(rvol(b3, simples) == 1);

    auto a3 = RootSystem::build(TypeLabel::parse("A3"));
    // every independent subset in type A is unimodular
    enumerate_indep_sets(a3, a3.rank, [&](const IndepSet& s) {
        if (!s.root_ids.empty()) CHECK(s.rvol == 1);
    });

    auto g2 = RootSystem::build(TypeLabel::parse("G2"));
    int long_root = root_id_by_coords(g2, {3, 1});
    int alpha2 = root_id_by_coords(g2, {0, 1});
    CHECK(rvol(g2, {long_root, alpha2}) == 3);
    // oracle: 2x2 determinant
    CHECK(std::llabs(det_int({{3, 0}, {1, 1}})) == 3);

    CHECK_THROWS_AS(rvol(g2, {alpha2, g2.root(alpha2).negation}), DependentSetError);
}

TEST_CASE("rvol equals half-open parallelepiped point count (rank <= 3)") {
    for (const char* label : {"A2", "B2", "G2", "B3", "C3"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        enumerate_indep_sets(sys, sys.rank, [&](const IndepSet& s) {
            if (s.root_ids.empty()) return;
            std::vector<IntVec> x;
            for (int id : s.root_ids) x.push_back(sys.root(id).root_coords);
            CHECK(s.rvol == half_open_parallelepiped_points(x));
        });
    }
}

TEST_CASE("span keys are order-insensitive and canonical") {
    auto b3 = RootSystem::build(TypeLabel::parse("B3"));
    std::mt19937_64 rng(5);
    enumerate_indep_sets(b3, 3, [&](const IndepSet& s) {
        if (s.root_ids.size() < 2) return;
        std::vector<int> shuffled = s.root_ids;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(span_key_of_roots(b3, shuffled) == s.span);
    });
}

TEST_CASE("span membership and positive roots in span") {
    auto b2 = RootSystem::build(TypeLabel::parse("B2"));
    SpanKey empty = span_key({});
    CHECK(positive_roots_in_span(b2, empty).empty());

    int a1 = b2.simple_root_ids[0];
    SpanKey line = span_key_of_roots(b2, {a1});
    auto in_line = positive_roots_in_span(b2, line);
    CHECK(in_line == std::vector<int>{a1});

    auto g2 = RootSystem::build(TypeLabel::parse("G2"));
    SpanKey full = span_key_of_roots(g2, g2.simple_root_ids);
    CHECK(positive_roots_in_span(g2, full).size() == 6);
}

TEST_CASE("independent-set enumeration counts") {
    auto a1 = RootSystem::build(TypeLabel::parse("A1"));
    std::size_t count = 0;
    enumerate_indep_sets(a1, 1, [&](const IndepSet&) { ++count; });
    CHECK(count == 2);

    auto a2 = RootSystem::build(TypeLabel::parse("A2"));
    count = 0;
    enumerate_indep_sets(a2, 2, [&](const IndepSet&) { ++count; });
    CHECK(count == 7);

    auto b2 = RootSystem::build(TypeLabel::parse("B2"));
    count = 0;
    enumerate_indep_sets(b2, 2, [&](const IndepSet&) { ++count; });
    CHECK(count == 11);
}

TEST_CASE("independent-set count matches naive matroid oracle (rank <= 3)") {
    for (const char* label : {"A2", "B2", "G2", "B3"}) {
        auto sys = RootSystem::build(TypeLabel::parse(label));
        // oracle: all subsets, rank check by echelon from scratch
        const auto& pos = sys.positive_root_ids;
        std::size_t oracle = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << pos.size()); ++mask) {
            std::vector<RatVec> vecs;
            for (std::size_t j = 0; j < pos.size(); ++j)
                if (mask & (std::size_t{1} << j)) vecs.push_back(to_ratvec(sys.root(pos[j]).root_coords));
            if (vecs.size() > static_cast<std::size_t>(sys.rank)) continue;
            if (rank_of(vecs) == vecs.size()) ++oracle;
        }
        std::size_t got = 0;
        std::set<std::vector<int>> unique_sets;
        enumerate_indep_sets(sys, sys.rank, [&](const IndepSet& s) {
            ++got;
            CHECK(unique_sets.insert(s.root_ids).second);
            CHECK(s.rank == static_cast<int>(s.root_ids.size()));
        });
        CHECK(got == oracle);
    }
}

TEST_CASE("resource guard rejects E7-scale enumeration") {
    auto e7 = RootSystem::build(TypeLabel::parse("E7"));
    CHECK_THROWS_AS(enumerate_indep_sets(e7, e7.rank, [](const IndepSet&) {}), ResourceLimitError);
    try {
        enumerate_indep_sets(e7, e7.rank, [](const IndepSet&) {});
    } catch (const ResourceLimitError& e) {
        CHECK(e.estimate > 1e8);
    }
}

TEST_CASE("quotient keys characterize cosets") {
    auto a2 = RootSystem::build(TypeLabel::parse("A2"));
    SpanKey full = span_key_of_roots(a2, a2.simple_root_ids);
    SpanKey empty = span_key({});
    RatVec mu = {Rat(3, 2), Rat(-1, 3)};
    CHECK(is_zero_vec(quotient_key(mu, full)));
    CHECK(quotient_key(mu, empty) == mu);

    int alpha1 = a2.simple_root_ids[0];
    SpanKey line = span_key_of_roots(a2, {alpha1});
    RatVec zero(2, Rat(0));
    RatVec e1 = {Rat(1), Rat(0)};
    RatVec e2 = {Rat(0), Rat(1)};
    CHECK(quotient_key(e1, line) == quotient_key(zero, line));
    CHECK(quotient_key(e2, line) != quotient_key(zero, line));

    // invariance under adding span elements
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int rep = 0; rep < 50; ++rep) {
        RatVec v = {Rat(dist(rng), 2), Rat(dist(rng), 3)};
        RatVec shifted = v;
        shifted[0] += Rat(dist(rng));
        CHECK(quotient_key(shifted, line) == quotient_key(v, line));
    }
}
