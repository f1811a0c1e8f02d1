#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "support.hpp"
#include "tropline/error.hpp"
#include "tropline/lattice.hpp"
#include "tropline/linalg.hpp"

using namespace tropline;
using testing::rand_int;
using testing::rand_lattice;

namespace {

// Cofactor expansion, written out independently of the library determinant.
long long det_oracle(const LatticePoint3& a, const LatticePoint3& b, const LatticePoint3& c, const LatticePoint3& d) {
    long long m[3][3];
    for (int k = 0; k < 3; ++k) {
        m[0][k] = b[k] - a[k];
        m[1][k] = c[k] - a[k];
        m[2][k] = d[k] - a[k];
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Point-in-tetrahedron by sign of the four sub-determinants.
bool in_tet_oracle(const std::array<LatticePoint3, 4>& t, const LatticePoint3& p) {
    long long whole = det_oracle(t[0], t[1], t[2], t[3]);
    for (int i = 0; i < 4; ++i) {
        auto u = t;
        u[i] = p;
        long long part = det_oracle(u[0], u[1], u[2], u[3]);
        if ((whole > 0 && part < 0) || (whole < 0 && part > 0)) return false;
    }
    return true;
}

std::array<LatticePoint3, 4> random_tet(std::mt19937& rng, int lo, int hi) {
    for (;;) {
        std::array<LatticePoint3, 4> t{rand_lattice(rng, lo, hi), rand_lattice(rng, lo, hi), rand_lattice(rng, lo, hi),
                                       rand_lattice(rng, lo, hi)};
        if (det_oracle(t[0], t[1], t[2], t[3]) != 0) return t;
    }
}

}  // namespace

TEST_CASE("simplex volume on known simplices") {
    CHECK(simplex_volume({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == make_rat(1, 6));
    CHECK(simplex_volume({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 2, 3}) == make_rat(3, 6));
    CHECK(simplex_volume({0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}) == make_rat(1, 6));
    CHECK(to_string(simplex_volume({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 2, 3})) == "1/2");
}

TEST_CASE("simplex volume rejects coplanar points") {
    CHECK_THROWS_WITH_AS(simplex_volume({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}), "degenerate simplex",
                         DegenerateError);
    CHECK_THROWS_AS(LatticeSimplex({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}), DegenerateError);
}

TEST_CASE("simplex volume matches cofactor oracle, permutation and translation invariant") {
    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
        auto t = random_tet(rng, -6, 6);
        Rat v = simplex_volume(t[0], t[1], t[2], t[3]);
        CHECK(v == make_rat(std::llabs(det_oracle(t[0], t[1], t[2], t[3])), 6));
        auto p = t;
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(simplex_volume(p[0], p[1], p[2], p[3]) == v);
        Vec3 s = rand_lattice(rng, -20, 20);
        CHECK(simplex_volume(add(t[0], s), add(t[1], s), add(t[2], s), add(t[3], s)) == v);
    }
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(LatticeSimplex({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    CHECK_FALSE(is_primitive(LatticeSimplex({{0, 0, 0}, {2, 0, 0}})));
    CHECK(is_primitive(LatticeSimplex({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 2, 3}})));
    CHECK(lattice_points(LatticeSimplex({{0, 0, 0}, {2, 0, 0}})).size() == 3);
}

TEST_CASE("primitivity agrees with bounding-box oracle on random tetrahedra") {
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        auto t = random_tet(rng, 0, 4);
        std::size_t count = 0;
        for (Coord x = 0; x <= 4; ++x)
            for (Coord y = 0; y <= 4; ++y)
                for (Coord z = 0; z <= 4; ++z)
                    if (in_tet_oracle(t, {x, y, z})) ++count;
        LatticeSimplex s({t[0], t[1], t[2], t[3]});
        CHECK(lattice_points(s).size() == count);
        CHECK(is_primitive(s) == (count == 4));
    }
}

TEST_CASE("unit volume implies primitive") {
    std::mt19937 rng(17);
    int seen = 0;
    for (int it = 0; it < 20000 && seen < 200; ++it) {
        auto t = random_tet(rng, -3, 3);
        if (std::llabs(det_oracle(t[0], t[1], t[2], t[3])) != 1) continue;
        ++seen;
        CHECK(is_primitive(LatticeSimplex({t[0], t[1], t[2], t[3]})));
        CHECK(is_unimodular({t[0], t[1], t[2], t[3]}));
    }
    CHECK(seen > 50);
}

TEST_CASE("facet membership") {
    CHECK(facet_membership({0, 0, 0}, 2) == 0b0111u);
    CHECK(facet_membership({3, 0, 0}, 3) == 0b1110u);
    CHECK(facet_membership({1, 1, 1}, 4) == 0u);
    CHECK_THROWS_AS(facet_membership({2, 2, 0}, 3), PreconditionError);
    CHECK_THROWS_AS(facet_membership({-1, 0, 0}, 3), PreconditionError);
}

TEST_CASE("exits of small cells") {
    CHECK(exits({{0, 0, 0}, {0, 0, 1}, {2, 1, 0}, {1, 0, 2}}, 3) == 0b1111u);
    CHECK(exits({{1, 1, 1}}, 4) == 0u);
    CHECK(exits({{0, 0, 0}, {0, 0, 1}}, 3) == 0b0011u);
    CHECK(exits({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1) == 0b1111u);
    CHECK(index_set_string(0b1011u) == "{124}");
}

TEST_CASE("exits lie in the union of facet memberships") {
    std::mt19937 rng(23);
    for (int it = 0; it < 500; ++it) {
        int delta = rand_int(rng, 1, 5);
        std::vector<LatticePoint3> s;
        int n = rand_int(rng, 1, 4);
        auto pts = gamma_points(delta);
        for (int k = 0; k < n; ++k) s.push_back(pts[rand_int(rng, 0, static_cast<int>(pts.size()) - 1)]);
        IndexSet e = exits(s, delta);
        IndexSet u = 0;
        for (const auto& p : s) u |= facet_membership(p, delta);
        CHECK((e & ~u) == 0u);
        CHECK(index_count(e) <= 4);
        // Oracle: at least two distinct points of s on F_i.
        for (int i = 1; i <= 4; ++i) {
            std::vector<LatticePoint3> on;
            for (const auto& p : s)
                if (has_index(facet_membership(p, delta), i)) on.push_back(p);
            std::sort(on.begin(), on.end());
            on.erase(std::unique(on.begin(), on.end()), on.end());
            CHECK(has_index(e, i) == (on.size() >= 2));
        }
    }
}

TEST_CASE("primitive triangles have at most three exits") {
    std::mt19937 rng(29);
    int tested = 0;
    for (int it = 0; it < 4000; ++it) {
        int delta = rand_int(rng, 2, 6);
        auto pts = gamma_points(delta);
        auto pick = [&] { return pts[rand_int(rng, 0, static_cast<int>(pts.size()) - 1)]; };
        std::vector<LatticePoint3> t{pick(), pick(), pick()};
        if (affine_dimension(t) != 2) continue;
        if (!is_primitive(LatticeSimplex(t))) continue;
        ++tested;
        CHECK(index_count(exits(t, delta)) <= 3);
    }
    CHECK(tested > 100);
}

TEST_CASE("gamma points count and omega directions") {
    for (int d = 0; d <= 6; ++d) CHECK(gamma_points(d).size() == static_cast<std::size_t>((d + 1) * (d + 2) * (d + 3) / 6));
    CHECK(omega(1) == Vec3{-1, 0, 0});
    CHECK(omega(4) == Vec3{1, 1, 1});
    Vec3 s{0, 0, 0};
    for (int i = 1; i <= 4; ++i) s = add(s, omega(i));
    CHECK(is_zero(s));
}

TEST_CASE("hull volume of gamma") {
    CHECK(polytope_volume(gamma_points(3)) == make_rat(27, 6));
    CHECK(hull_facets(gamma_points(2)).size() == 4);
    CHECK(lattice_points_in_hull({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}).size() == 10);
}

TEST_CASE("exact linear solve") {
    RatMatrix a{{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
    auto s = solve_linear(a, {Rat(3), Rat(5)});
    REQUIRE(s.consistent);
    CHECK(s.unique);
    CHECK(s.x[0] == make_rat(4, 5));
    CHECK(s.x[1] == make_rat(7, 5));
    CHECK_FALSE(solve_linear({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(1), Rat(3)}).consistent);
    auto f = fit_affine({{{0, 0, 0}, Rat(1)}, {{1, 0, 0}, Rat(3)}, {{0, 1, 0}, Rat(0)}, {{0, 0, 1}, make_rat(1, 2)}});
    REQUIRE(f);
    CHECK((*f)(LatticePoint3{1, 1, 1}) == make_rat(3, 2));
}

TEST_CASE("rationals are canonical and round trip") {
    CHECK(make_rat(2, 6) == make_rat(1, 3));
    CHECK(to_string(make_rat(2, 6)) == "1/3");
    CHECK(parse_rational("-1.25") == make_rat(-5, 4));
    CHECK(parse_rational("6/4") == make_rat(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        Rat r = testing::rand_rat(rng, 1000, 50);
        CHECK(parse_rational(to_string(r)) == r);
        CHECK(floor(r) <= r);
        CHECK(ceil(r) >= r);
        CHECK(ceil(r) - floor(r) <= 1);
    }
}
