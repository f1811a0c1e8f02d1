#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "tropline/builder.hpp"
#include "tropline/error.hpp"
#include "tropline/lines.hpp"
#include "tropline/quadric.hpp"
#include "tropline/surface.hpp"

using namespace tropline;
using testing::rand_int;
using testing::rand_rat;

namespace {

const QPoint3 kOmega3Vertex{Rat(1), Rat(-21), Rat(-2)};

TropicalLine degenerate_at(const QPoint3& p) { return {LineType::t1234, p, p}; }

// Exact membership oracle: every pairwise crossing of two terms along the
// edge is a candidate breakpoint; the edge lies on V(f) iff the maximum is
// attained twice at each candidate and at the midpoints between them.
bool edge_oracle(const TropicalPolynomial& f, const QPoint3& o, const Vec3& d, const std::optional<Rat>& len) {
    auto ex = f.exponents();
    auto co = f.coefficients();
    std::set<Rat> ts{Rat(0)};
    for (std::size_t i = 0; i < ex.size(); ++i)
        for (std::size_t j = i + 1; j < ex.size(); ++j) {
            Vec3 diff = sub(ex[i], ex[j]);
            Coord slope = dot(diff, d);
            if (slope == 0) continue;
            Rat t = -(co[i] - co[j] + qdot(o, diff)) / slope;
            if (t > 0 && (!len || t < *len)) ts.insert(t);
        }
    if (len) ts.insert(*len);
    std::vector<Rat> probe(ts.begin(), ts.end());
    std::vector<Rat> all = probe;
    for (std::size_t k = 0; k + 1 < probe.size(); ++k) all.push_back((probe[k] + probe[k + 1]) / 2);
    if (!len) all.push_back(probe.back() + 1);
    for (const auto& t : all)
        if (evaluate(f, qaxpy(o, t, d)).argmax.size() < 2) return false;
    return true;
}

bool line_oracle(const TropicalPolynomial& f, const TropicalLine& l) {
    for (const auto& e : line_edges(l))
        if (!edge_oracle(f, e.origin, e.dir, e.length)) return false;
    if (l.degenerate() && evaluate(f, l.v1).argmax.size() < 2) return false;
    return true;
}

TropicalLine random_line(std::mt19937& rng) {
    int k = rand_int(rng, 0, 3);
    LineType t = static_cast<LineType>(k);
    QPoint3 v1{rand_rat(rng, 30, 3), rand_rat(rng, 30, 3), rand_rat(rng, 30, 3)};
    if (t == LineType::t1234) return {t, v1, v1};
    return {t, v1, qaxpy(v1, make_rat(rand_int(rng, 1, 20), rand_int(rng, 1, 3)), bounded_direction(t))};
}

std::vector<TropicalLine> lines_on_cubic_examples() {
    return {degenerate_at(kOmega3Vertex),
            {LineType::t12_34, {Rat(0), Rat(-22), Rat(-2)}, kOmega3Vertex},
            {LineType::t14_23, {Rat(0), Rat(-18), Rat(-1)}, {Rat(0), Rat(-19), Rat(-2)}}};
}

}  // namespace

TEST_CASE("line types") {
    CHECK(parse_line_type("(12)(34)") == LineType::t12_34);
    CHECK(type_name(LineType::t14_23) == "(14)(23)");
    CHECK_THROWS_AS(parse_line_type("(12)"), ParseError);
    CHECK(bounded_direction(LineType::t12_34) == Vec3{1, 1, 0});
    CHECK(bounded_direction(LineType::t14_23) == Vec3{0, -1, -1});
    CHECK_THROWS_AS(validate({LineType::t12_34, {Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(0)}}), PreconditionError);
    CHECK_THROWS_AS(validate({LineType::t1234, {Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)}}), PreconditionError);
}

TEST_CASE("lines are balanced at both vertices") {
    for (LineType t : {LineType::t12_34, LineType::t13_24, LineType::t14_23}) {
        Vec3 u = bounded_direction(t);
        auto r1 = rays_at_v1(t), r2 = rays_at_v2(t);
        CHECK(is_zero(add(add(omega(r1[0]), omega(r1[1])), u)));
        CHECK(is_zero(sub(add(omega(r2[0]), omega(r2[1])), u)));
        std::set<int> all{r1[0], r1[1], r2[0], r2[1]};
        CHECK(all.size() == 4);
    }
    std::mt19937 rng(101);
    for (int it = 0; it < 50; ++it) {
        auto l = random_line(rng);
        auto edges = line_edges(l);
        CHECK(edges.size() == (l.degenerate() ? 4u : 5u));
        Vec3 sum{0, 0, 0};
        for (int i = 0; i < 4; ++i) sum = add(sum, edges[i].dir);
        CHECK(is_zero(sum));
    }
}

TEST_CASE("edge containment basics") {
    auto plane = parse_polynomial("0*x + 0*y + 0*z + 0");
    // The 2-cell {x = y >= max(z, 0)} contains the segment from (1,1,0) to (3,3,2).
    auto r = contains_edge(plane, {Rat(1), Rat(1), Rat(0)}, {1, 1, 1}, Rat(2));
    CHECK(r.contained);
    CHECK(r.pieces.size() == 1);
    auto g3 = testing::load_poly("g3.trop");
    CHECK(contains_edge(g3, kOmega3Vertex, {0, 0, -1}, std::nullopt).contained);
    CHECK_FALSE(contains_edge(g3, {Rat(100), Rat(3), Rat(7)}, {1, 2, 0}, Rat(5)).contained);
    CHECK_THROWS_AS(contains_edge(g3, kOmega3Vertex, {0, 0, 0}, Rat(1)), PreconditionError);
}

TEST_CASE("envelope pieces agree with pointwise evaluation") {
    std::mt19937 rng(103);
    auto g3 = testing::load_poly("g3.trop");
    for (int it = 0; it < 100; ++it) {
        QPoint3 o{rand_rat(rng, 30, 2), rand_rat(rng, 30, 2), rand_rat(rng, 30, 2)};
        QPoint3 d{Rat(rand_int(rng, -3, 3)), Rat(rand_int(rng, -3, 3)), Rat(rand_int(rng, -3, 3))};
        if (d == QPoint3{Rat(0), Rat(0), Rat(0)}) continue;
        auto env = envelope(g3, o, d, Rat(20));
        REQUIRE_FALSE(env.empty());
        CHECK(env.front().start == 0);
        for (std::size_t k = 0; k < env.size(); ++k) {
            REQUIRE(env[k].end);
            if (k + 1 < env.size()) CHECK(*env[k].end == env[k + 1].start);
            Rat mid = (env[k].start + *env[k].end) / 2;
            auto ev = evaluate(g3, qadd(o, qscale(d, mid)));
            auto ex = g3.exponents();
            std::vector<LatticePoint3> am;
            for (int i : env[k].argmax) am.push_back(ex[i]);
            CHECK(am == ev.argmax);
        }
        CHECK(*env.back().end == 20);
    }
}

TEST_CASE("containment agrees with the crossing oracle on random lines") {
    std::mt19937 rng(107);
    auto g3 = testing::load_poly("g3.trop");
    for (int it = 0; it < 300; ++it) {
        auto l = random_line(rng);
        CHECK(contains_line(g3, l) == line_oracle(g3, l));
    }
    for (const auto& l : lines_on_cubic_examples()) {
        CHECK(contains_line(g3, l));
        CHECK(line_oracle(g3, l));
    }
}

TEST_CASE("the degenerate line at the Omega3 vertex") {
    auto g3 = testing::load_poly("g3.trop");
    auto l = degenerate_at(kOmega3Vertex);
    CHECK(contains_line(g3, l));
    auto moved = degenerate_at(qaxpy(kOmega3Vertex, Rat(1), {0, 0, 1}));
    CHECK_FALSE(contains_line(g3, moved));
    CHECK_FALSE(line_oracle(g3, moved));

    auto x = build_complex(g3);
    auto d = line_data(x, l);
    CHECK(d.V1 == d.V2);
    CHECK(d.V1.dim == 0);
    CHECK(x.vertices[d.V1.id] == kOmega3Vertex);
    CHECK(d.kappa == LineType::t1234);
    for (const auto& c : d.C) CHECK(c.size() == 1);
    CHECK_THROWS_AS(line_data(x, moved), PreconditionError);
}

TEST_CASE("moving one vertex off the Omega3 vertex") {
    auto x = build_complex(testing::load_poly("g3.trop"));
    TropicalLine l{LineType::t12_34, qaxpy(kOmega3Vertex, make_rat(-1, 2), {1, 1, 0}), kOmega3Vertex};
    REQUIRE(contains_line(x.f, l));
    auto d = line_data(x, l);
    CHECK(d.V1.dim == 2);
    CHECK(d.V2.dim == 0);
    CHECK(d.kappa == LineType::t12_34);
}

TEST_CASE("trespassing edges meet only maximal cells and force a vertex") {
    std::vector<std::pair<std::string, TropicalLine>> cases{
        {"cubic_trespass.trop", {LineType::t12_34, {Rat(4), Rat(5), Rat(3)}, {Rat(6), Rat(7), Rat(3)}}}};
    for (const auto& l : lines_on_cubic_examples()) cases.push_back({"g3.trop", l});
    cases.push_back({"g4.trop", {LineType::t13_24, {Rat(-16), Rat(-21), Rat(2)}, {Rat(-15), Rat(-21), Rat(3)}}});
    cases.push_back({"g4.trop", {LineType::t13_24, {Rat(-16), Rat(-21), Rat(2)}, {Rat(-14), Rat(-21), Rat(4)}}});
    int trespassing = 0;
    for (const auto& [file, l] : cases) {
        auto x = build_complex(testing::load_poly(file));
        REQUIRE(contains_line(x.f, l));
        auto d = line_data(x, l);
        CHECK((d.V1 == d.V2) == l.degenerate());
        bool any = false;
        for (int i = 1; i <= 5; ++i)
            if (d.trespassing(i)) {
                any = true;
                for (const auto& c : d.C[i - 1]) CHECK(c.dim == 2);
            }
        trespassing += any;
        if (any) CHECK(passes_through_vertex(x, l));
        // Degree at least three: every line meets a vertex.
        CHECK(passes_through_vertex(x, l));
    }
    CHECK(trespassing >= 2);
}

TEST_CASE("classification of the degenerate line gives a family along -e1-e2") {
    auto x = build_complex(testing::load_poly("g3.trop"));
    auto c = classify_line(x, degenerate_at(kOmega3Vertex));
    REQUIRE(std::holds_alternative<FamilyWitness>(c));
    const auto& w = std::get<FamilyWitness>(c);
    CHECK(w.direction == Vec3{-1, -1, 0});
    CHECK(w.samples.size() == 10);
    for (const auto& t : w.samples) {
        auto m = w.member(t);
        CHECK(contains_line(x.f, m));
        CHECK(line_oracle(x.f, m));
        CHECK(point_on_line(m, w.anchors[0]));
        CHECK(point_on_line(m, w.anchors[1]));
    }
    CHECK(w.anchors[0] != w.anchors[1]);
}

TEST_CASE("a line with both vertices at vertices of the surface is isolated") {
    auto x = build_complex(testing::load_poly("g4.trop"));
    TropicalLine l{LineType::t13_24, {Rat(-16), Rat(-21), Rat(2)}, {Rat(-15), Rat(-21), Rat(3)}};
    auto d = line_data(x, l);
    CHECK(d.V1.dim == 0);
    CHECK(d.V2.dim == 0);
    CHECK(std::holds_alternative<Isolated>(classify_line(x, l)));
}

TEST_CASE("one trespassing ray at the 2-vertex gives a family along that ray") {
    auto x = build_complex(testing::load_poly("cubic_trespass.trop"));
    TropicalLine l{LineType::t12_34, {Rat(4), Rat(5), Rat(3)}, {Rat(6), Rat(7), Rat(3)}};
    auto d = line_data(x, l);
    REQUIRE(d.V1.dim == 1);
    REQUIRE(d.V2.dim == 2);
    int count = 0;
    for (int i = 1; i <= 5; ++i) count += d.trespassing(i);
    REQUIRE(count == 1);
    REQUIRE(d.trespassing(4));
    auto c = classify_line(x, l);
    REQUIRE(std::holds_alternative<FamilyWitness>(c));
    const auto& w = std::get<FamilyWitness>(c);
    CHECK(w.moving_vertex == 2);
    CHECK((w.direction == omega(4) || w.direction == neg(omega(4))));
    for (const auto& t : w.samples) CHECK(line_oracle(x.f, w.member(t)));
}

TEST_CASE("families on the builder surfaces are genuine two-point families") {
    for (int delta = 3; delta <= 4; ++delta) {
        auto x = build_complex(build_family_surface(delta, 0));
        auto omega_cell = x.cell_of_dual([&] {
            std::vector<int> idx;
            for (const auto& p : omega_tetrahedron(delta)) idx.push_back(x.subdiv.index_of(p));
            std::sort(idx.begin(), idx.end());
            return idx;
        }());
        REQUIRE(omega_cell);
        auto l = degenerate_at(x.vertices[omega_cell->id]);
        auto c = classify_line(x, l);
        REQUIRE(std::holds_alternative<FamilyWitness>(c));
        auto w = std::get<FamilyWitness>(c);
        for (const auto& t : family_samples(w.t_max)) {
            auto m = w.member(t);
            CHECK(line_oracle(x.f, m));
            CHECK(passes_through_vertex(x, m));
        }
        CHECK(verify_family(x.f, w));
    }
}

TEST_CASE("family samples") {
    auto s = family_samples(std::nullopt);
    CHECK(s.size() == 10);
    CHECK(s.front() == 1);
    auto b = family_samples(Rat(11));
    CHECK(b.size() == 10);
    CHECK(b.back() == 10);
}

TEST_CASE("classification needs degree three") {
    auto x = build_complex(testing::load_poly("quadric.trop"));
    auto [l, m] = two_lines_through(x, {make_rat(17, 5), make_rat(17, 5), make_rat(19, 5)});
    REQUIRE(contains_line(x.f, l));
    CHECK_THROWS_WITH_AS(classify_line(x, l), "classification theorem requires degree >= 3", PreconditionError);
    auto plane = build_complex(parse_polynomial("0*x + 0*y + 0*z + 0"));
    CHECK_THROWS_WITH_AS(classify_line(plane, degenerate_at({Rat(0), Rat(0), Rat(0)})),
                         "classification theorem requires degree >= 3", PreconditionError);
}

TEST_CASE("two-point criterion examples") {
    QPoint3 p{Rat(0), Rat(0), Rat(0)};
    auto r = lines_through(p, {Rat(1), Rat(2), Rat(4)});
    REQUIRE(std::holds_alternative<TropicalLine>(r));
    auto l = std::get<TropicalLine>(r);
    CHECK(point_on_line(l, p));
    CHECK(point_on_line(l, {Rat(1), Rat(2), Rat(4)}));
    auto inf1 = lines_through(p, {Rat(1), Rat(1), Rat(2)});
    REQUIRE(std::holds_alternative<InfiniteLines>(inf1));
    CHECK(std::get<InfiniteLines>(inf1).reason == "Q - P has two equal coordinates");
    auto inf2 = lines_through(p, {Rat(0), Rat(3), Rat(5)});
    REQUIRE(std::holds_alternative<InfiniteLines>(inf2));
    CHECK(std::get<InfiniteLines>(inf2).reason == "Q - P has a zero coordinate");
    CHECK_THROWS_AS(lines_through(p, p), PreconditionError);
}

TEST_CASE("unique lines through generic pairs are unique among candidate vertex systems") {
    // Small exhaustive oracle: place v1 on a grid and try every type and length.
    QPoint3 p{Rat(0), Rat(0), Rat(0)}, q{Rat(1), Rat(2), Rat(4)};
    int hits = 0;
    for (int k = 0; k < 4; ++k) {
        LineType t = static_cast<LineType>(k);
        for (int a = -8; a <= 8; ++a)
            for (int b = -8; b <= 8; ++b)
                for (int c = -8; c <= 8; ++c) {
                    QPoint3 v1{make_rat(a, 2), make_rat(b, 2), make_rat(c, 2)};
                    for (int s = 0; s <= (t == LineType::t1234 ? 0 : 10); ++s) {
                        if (t != LineType::t1234 && s == 0) continue;
                        TropicalLine l{t, v1, t == LineType::t1234 ? v1 : qaxpy(v1, make_rat(s, 2), bounded_direction(t))};
                        if (point_on_line(l, p) && point_on_line(l, q)) {
                            ++hits;
                            CHECK(l == std::get<TropicalLine>(lines_through(p, q)));
                        }
                    }
                }
    }
    CHECK(hits == 1);
}

TEST_CASE("two-point criterion on random pairs") {
    std::mt19937 rng(109);
    for (int it = 0; it < 300; ++it) {
        QPoint3 p{rand_rat(rng, 20, 3), rand_rat(rng, 20, 3), rand_rat(rng, 20, 3)};
        QPoint3 d{rand_rat(rng, 6, 2), rand_rat(rng, 6, 2), rand_rat(rng, 6, 2)};
        if (it % 3 == 0) d[rand_int(rng, 0, 2)] = 0;
        if (it % 3 == 1) d[1] = d[0];
        if (d == QPoint3{Rat(0), Rat(0), Rat(0)}) continue;
        QPoint3 q = qadd(p, d);
        bool special = d[0] == 0 || d[1] == 0 || d[2] == 0 || d[0] == d[1] || d[0] == d[2] || d[1] == d[2];
        auto r = lines_through(p, q);
        CHECK(std::holds_alternative<InfiniteLines>(r) == special);
        if (auto* l = std::get_if<TropicalLine>(&r)) {
            CHECK(point_on_line(*l, p));
            CHECK(point_on_line(*l, q));
        }
    }
}
