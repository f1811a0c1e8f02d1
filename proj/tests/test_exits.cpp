#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "support.hpp"
#include "tropline/builder.hpp"
#include "tropline/error.hpp"
#include "tropline/exits.hpp"

using namespace tropline;
using testing::rand_int;

namespace {

using Tet = std::array<LatticePoint3, 4>;

const Tet kOmegaPrime{LatticePoint3{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}};

bool contains(const std::vector<FED>& feds, const std::string& text) {
    return std::find(feds.begin(), feds.end(), sorted(parse_distribution(text))) != feds.end();
}

// FED containment oracle: try all 24 matchings directly.
bool contained_oracle(const FED& j, const FacetDistribution& fac) {
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        bool ok = true;
        for (int i = 0; i < 4; ++i) ok = ok && (j[i] & ~fac[p[i]]) == 0;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

Tet class3_tet(Coord delta, Coord a, Coord b, Coord c, Coord d) {
    return {LatticePoint3{0, 0, a}, {0, 0, b}, {c, delta - c, 0}, {d, delta - d, 0}};
}
Tet class5_tet(Coord delta, Coord a, Coord b, Coord c, Coord d) {
    return {LatticePoint3{0, 0, 0}, {delta - a, 0, a}, {0, b, delta - b}, {c, d, 0}};
}
Tet class6_tet(Coord delta, Coord a, Coord b, Coord c, Coord d) {
    return {LatticePoint3{a, 0, 0}, {0, b, 0}, {0, c, delta - c}, {d, 0, delta - d}};
}

Rat vol(const Tet& t) { return simplex_volume(t[0], t[1], t[2], t[3]); }

}  // namespace

TEST_CASE("facet distributions") {
    CHECK(to_string(facet_distribution(kOmegaPrime, 2)) == "{123,12,34,24}");
    CHECK(facet_distribution({LatticePoint3{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1) ==
          parse_distribution("{123,234,134,124}"));
    CHECK(facet_distribution({LatticePoint3{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, 6) ==
          FacetDistribution{0, 0, 0, 0});
    CHECK_THROWS_AS(facet_distribution({LatticePoint3{3, 0, 0}, {0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2),
                    PreconditionError);
    CHECK(parse_distribution("{12,12,34,34}") == FacetDistribution{0b0011u, 0b0011u, 0b1100u, 0b1100u});
    CHECK_THROWS_AS(parse_distribution("{12,5,,}"), ParseError);
}

TEST_CASE("contained FEDs of the running example") {
    // Computed facet distribution of the tetrahedron (1,0,1 lies on F2 and F4).
    auto feds = contained_feds(facet_distribution(kOmegaPrime, 2));
    CHECK(feds.size() == 3);
    // The distribution printed with {1,4} as the last vertex set also has
    // three FEDs, among them the two {123,12,34,4} and {23,12,34,14}.
    auto literal = contained_feds(parse_distribution("{123,12,34,14}"));
    CHECK(literal.size() == 3);
    CHECK(contains(literal, "{123,12,34,4}"));
    CHECK(contains(literal, "{23,12,34,14}"));
    CHECK(contains(literal, "{123,2,14,34}"));
}

TEST_CASE("FED basics") {
    CHECK(contained_feds({0, 0, 0, 0}).empty());
    auto self = contained_feds(parse_distribution("{12,12,34,34}"));
    REQUIRE(self.size() == 1);
    CHECK(self[0] == sorted(parse_distribution("{12,12,34,34}")));
    CHECK(is_fed(parse_distribution("{12,13,24,34}")));
    CHECK_FALSE(is_fed(parse_distribution("{12,13,24,3}")));
}

TEST_CASE("contained FEDs agree with the matching oracle") {
    std::mt19937 rng(149);
    std::vector<FED> all_feds;
    for (IndexSet a = 0; a < 16; ++a)
        for (IndexSet b = 0; b < 16; ++b)
            for (IndexSet c = 0; c < 16; ++c)
                for (IndexSet d = 0; d < 16; ++d)
                    if (is_fed({a, b, c, d})) all_feds.push_back(sorted({a, b, c, d}));
    std::sort(all_feds.begin(), all_feds.end());
    all_feds.erase(std::unique(all_feds.begin(), all_feds.end()), all_feds.end());
    for (int it = 0; it < 300; ++it) {
        FacetDistribution fac{IndexSet(rng() % 16), IndexSet(rng() % 16), IndexSet(rng() % 16), IndexSet(rng() % 16)};
        std::vector<FED> expected;
        for (const auto& j : all_feds)
            if (contained_oracle(j, fac)) expected.push_back(j);
        auto got = contained_feds(fac);
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("orbits of four-exit distributions") {
    auto orbits = fed_orbits();
    CHECK(orbits.size() == 11);
    std::set<FED> realizable;
    for (const auto& o : orbits)
        if (fed_realizable(o)) realizable.insert(o);
    CHECK(realizable.size() == 6);
    std::set<FED> reps;
    for (const auto& c : class_representatives()) {
        CHECK(is_fed(c));
        reps.insert(canonical_fed(c));
    }
    CHECK(reps == realizable);
    // Canonical forms are invariant under relabeling.
    for (const auto& p : all_permutations())
        for (const auto& c : class_representatives()) {
            FED moved;
            for (int i = 0; i < 4; ++i) moved[i] = relabel(c[i], p);
            CHECK(canonical_fed(moved) == canonical_fed(c));
        }
}

TEST_CASE("classes of known tetrahedra") {
    auto om = classify_tetrahedron(kOmegaPrime, 2);
    CHECK(om == std::set<int>{4, 5, 6});
    CHECK(om.count(4) == 1);
    CHECK(om.count(6) == 1);
    auto gamma1 = classify_tetrahedron({LatticePoint3{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1);
    CHECK(gamma1 == std::set<int>{1, 2, 3, 4, 5, 6});
    auto o3 = classify_tetrahedron(omega_tetrahedron(3), 3);
    CHECK(o3.count(4) == 1);
    CHECK(o3.count(5) == 1);
    CHECK_THROWS_AS(classify_tetrahedron({LatticePoint3{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, 6),
                    PreconditionError);
}

TEST_CASE("volume formulas match determinants") {
    std::mt19937 rng(151);
    for (int it = 0; it < 500; ++it) {
        Coord delta = rand_int(rng, 2, 30);
        Coord a = rand_int(rng, 1, static_cast<int>(delta - 1)), b = rand_int(rng, 1, static_cast<int>(delta - 1));
        Coord c = rand_int(rng, 1, static_cast<int>(delta - 1)), d = rand_int(rng, 1, static_cast<int>(delta - 1));
        auto t6 = class6_tet(delta, a, b, c, d);
        if (class6_volume6(delta, a, b, c, d) != 0) CHECK(vol(t6) * 6 == class6_volume6(delta, a, b, c, d));
        if (c + d <= delta) {
            auto t5 = class5_tet(delta, a, b, c, d);
            CHECK(vol(t5) * 6 == class5_volume6(delta, a, b, c, d));
        }
        if (a != b && c != d) CHECK(vol(class3_tet(delta, a, b, c, d)) * 6 == class3_volume6(delta, a, b, c, d));
    }
}

TEST_CASE("class three tetrahedra are never elementary") {
    std::mt19937 rng(157);
    for (int it = 0; it < 200; ++it) {
        Coord delta = rand_int(rng, 2, 12);
        Coord a = rand_int(rng, 0, static_cast<int>(delta)), b = rand_int(rng, 0, static_cast<int>(delta));
        Coord c = rand_int(rng, 0, static_cast<int>(delta)), d = rand_int(rng, 0, static_cast<int>(delta));
        if (a == b || c == d) continue;
        auto t = class3_tet(delta, a, b, c, d);
        CHECK(classify_tetrahedron(t, static_cast<int>(delta)).count(3) == 1);
        CHECK(vol(t) >= make_rat(delta, 6));
    }
}

TEST_CASE("the class 4 and 5 witness is elementary") {
    for (int delta = 2; delta <= 50; ++delta) {
        auto w = classprop_b_witness(delta);
        CHECK(vol(w) == make_rat(1, 6));
        auto cl = classify_tetrahedron(w, delta);
        CHECK(cl.count(4) == 1);
        CHECK(cl.count(5) == 1);
    }
}

TEST_CASE("elementary four-exit tetrahedra in small degrees") {
    auto two = enumerate_four_exit_elementary(2);
    std::vector<LatticePoint3> op(kOmegaPrime.begin(), kOmegaPrime.end());
    std::sort(op.begin(), op.end());
    bool found = false;
    for (const auto& t : two) {
        std::vector<LatticePoint3> s(t.begin(), t.end());
        std::sort(s.begin(), s.end());
        found = found || s == op;
    }
    CHECK(found);
    auto om2 = omega_tetrahedron(2);
    std::vector<LatticePoint3> om2v(om2.begin(), om2.end());
    std::sort(om2v.begin(), om2v.end());
    CHECK(om2v == op);

    for (int delta = 2; delta <= 4; ++delta) {
        auto all = enumerate_four_exit_elementary(delta);
        CHECK_FALSE(all.empty());
        for (const auto& t : all) {
            CHECK(vol(t) == make_rat(1, 6));
            CHECK(index_count(exits({t.begin(), t.end()}, delta)) == 4);
            auto cl = classify_tetrahedron(t, delta);
            CHECK_FALSE(cl.empty());
            bool only_low = std::all_of(cl.begin(), cl.end(), [](int j) { return j <= 3; });
            CHECK_FALSE(only_low);
            for (int j = 1; j <= 3; ++j) CHECK(cl.count(j) == 0);
            // Class 5 never stands alone.
            if (cl.count(5)) CHECK((cl.count(4) || cl.count(6)));
            // 2, 3 and 4 all lack a class-6-only tetrahedron.
            if (cl.count(6)) CHECK((cl.count(4) || cl.count(5)));
        }
    }
    CHECK_THROWS_WITH_AS(enumerate_four_exit_elementary(5), doctest::Contains("targeted searches"), PreconditionError);
}

TEST_CASE("odd degree class 6 witness is class 6 only") {
    for (Coord n = 2; n <= 6; ++n) {
        Coord delta = 2 * n + 1;
        auto t = class6_tet(delta, n - 1, n, n + 1, n);
        CHECK(vol(t) == make_rat(1, 6));
        auto cl = classify_tetrahedron(t, static_cast<int>(delta));
        CHECK(cl == std::set<int>{6});
    }
}

TEST_CASE("least solutions") {
    for (std::int64_t delta = 2; delta <= 40; ++delta) CHECK(least_f1_solution(delta) == least_f1_solution_naive(delta));
    auto w10 = least_f1_solution(10);
    REQUIRE(w10);
    CHECK(class6_volume6(10, (*w10)[0], (*w10)[1], (*w10)[2], (*w10)[3]) == 1);
    CHECK_FALSE(least_f1_solution(2));
    CHECK_FALSE(least_f1_solution(3));
}

TEST_CASE("even exceptions up to 100") {
    auto par = search_even_exceptions(100, Exec::parallel);
    auto ser = search_even_exceptions(100, Exec::serial);
    const std::vector<std::int64_t> expected{2, 4, 6, 8, 14, 16, 18, 20, 26, 30, 56, 76};
    CHECK(par.exceptions == expected);
    CHECK(ser.exceptions == par.exceptions);
    CHECK(ser.witnesses == par.witnesses);
    CHECK(par.witnesses.count(10) == 1);
    CHECK(par.witnesses.count(2) == 0);
    for (const auto& [delta, q] : par.witnesses) CHECK(class6_volume6(delta, q[0], q[1], q[2], q[3]) == 1);
}

TEST_CASE("odd degrees") {
    auto r = verify_odd_solutions(99);
    CHECK(r.delta3_has_no_solution);
    CHECK(r.all_valid());
    CHECK(r.witnesses.size() == 48);
    for (const auto& w : r.witnesses) {
        CHECK(w.valid);
        CHECK(class6_volume6(w.delta, w.abcd[0], w.abcd[1], w.abcd[2], w.abcd[3]) == 1);
    }
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.front().delta == 5);
    CHECK(r.witnesses.back().delta == 99);
}

TEST_CASE("the class five equation has no solutions in the geometric domain") {
    auto r = verify_diofant(20);
    CHECK(r.no_solutions);
    CHECK(r.checked > 0);
    CHECK(verify_diofant(3).no_solutions);
    // Outside it, sign choices produce solutions, such as delta = 2, a = b = 1, c = 2, d = -1.
    auto lit = diofant_literal_solutions(6, 10);
    CHECK_FALSE(lit.no_solutions);
    CHECK(std::find(lit.solutions.begin(), lit.solutions.end(), std::array<std::int64_t, 5>{2, 1, 1, 2, -1}) !=
          lit.solutions.end());
    for (const auto& s : lit.solutions) CHECK(((s[3] < 0) != (s[4] < 0)));
}

TEST_CASE("hyperbola certificate") {
    for (std::int64_t delta = 2; delta <= 12; ++delta)
        for (std::int64_t c = 1; c <= 6; ++c)
            for (std::int64_t d = 1; d <= 6; ++d)
                for (int eps : {1, -1}) {
                    auto h = hyperbola_certificate(delta, c, d, eps);
                    CHECK(h.holds());
                    CHECK(h.intercept == Rat(delta) - make_rat(eps, d * delta));
                }
    CHECK_THROWS_AS(hyperbola_certificate(4, 0, 1, 1), PreconditionError);
}
