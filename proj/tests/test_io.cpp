#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "support.hpp"
#include "tropline/error.hpp"
#include "tropline/io.hpp"

using namespace tropline;
using testing::rand_rat;

namespace {

// 2D cross product of (b - a) and (c - a) in the xy-plane.
Rat cross(const QPoint3& a, const QPoint3& b, const QPoint3& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// Closed convex polygon membership, either orientation.
bool inside_convex(const std::vector<QPoint3>& poly, const QPoint3& p) {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Rat c = cross(poly[i], poly[(i + 1) % poly.size()], p);
        if (c > 0) pos = true;
        if (c < 0) neg = true;
    }
    return !(pos && neg);
}

bool in_box(const ClipBox& b, const QPoint3& p) {
    for (int k = 0; k < 3; ++k)
        if (p[k] < b.lo[k] || p[k] > b.hi[k]) return false;
    return true;
}

}  // namespace

TEST_CASE("rational JSON") {
    CHECK(to_json(make_rat(-3, 6)) == Json("-1/2"));
    CHECK(to_json(Rat(4)) == Json("4/1"));
    CHECK(rat_from_json(Json(7)) == 7);
    CHECK(rat_from_json(Json("5/10")) == make_rat(1, 2));
    CHECK(rat_from_json(Json("-2")) == -2);
    CHECK_THROWS_AS(rat_from_json(Json(1.5)), ParseError);
    CHECK_THROWS_AS(rat_from_json(Json("x")), ParseError);
    CHECK_THROWS_AS(rat_from_json(Json("1/0")), ParseError);
    std::mt19937 rng(163);
    for (int it = 0; it < 200; ++it) {
        QPoint3 p{rand_rat(rng, 500, 40), rand_rat(rng, 500, 40), rand_rat(rng, 500, 40)};
        CHECK(qpoint_from_json(Json::parse(to_json(p).dump())) == p);
    }
    CHECK_THROWS_AS(qpoint_from_json(Json::array({1, 2})), ParseError);
}

TEST_CASE("line JSON") {
    auto l = line_from_json(Json::parse(read_file(testing::data_path("g3_line.json"))));
    CHECK(l.type == LineType::t1234);
    CHECK(l.v1 == QPoint3{1, -21, -2});
    CHECK(line_from_json(to_json(l)) == l);

    TropicalLine m{LineType::t12_34, {0, 0, 0}, {make_rat(3, 2), make_rat(3, 2), 0}};
    CHECK(to_json(m)["type"] == "(12)(34)");
    CHECK(line_from_json(Json::parse(to_json(m).dump())) == m);

    auto bad = [](const char* text) { return line_from_json(Json::parse(text)); };
    CHECK_THROWS_AS(bad("{\"type\":\"(12)(34)\",\"v1\":[0,0,0]}"), ParseError);
    CHECK_THROWS_AS(bad("{\"type\":\"(15)(34)\",\"v1\":[0,0,0],\"v2\":[1,1,0]}"), ParseError);
    CHECK_THROWS_AS(bad("{\"type\":3,\"v1\":[0,0,0],\"v2\":[1,1,0]}"), ParseError);
    // Wrong direction for the type.
    CHECK_THROWS_AS(bad("{\"type\":\"(12)(34)\",\"v1\":[0,0,0],\"v2\":[1,0,1]}"), PreconditionError);
    CHECK_THROWS_AS(bad("{\"type\":\"(1234)\",\"v1\":[0,0,0],\"v2\":[1,1,1]}"), PreconditionError);
}

TEST_CASE("triangulation JSON is canonical") {
    auto f = testing::load_poly("g3.trop");
    auto a = triangulation_json(induce(f, Exec::serial), 3);
    auto b = triangulation_json(induce(f, Exec::parallel), 3);
    CHECK(a.dump() == b.dump());
    CHECK(a["delta"] == 3);
    CHECK(a["lifting"].size() == 20);
    CHECK(a["cells"].size() == 27);
    for (const auto& c : a["cells"]) CHECK(c.size() == 4);
    auto cells = a["cells"];
    CHECK(std::is_sorted(cells.begin(), cells.end()));
}

TEST_CASE("polygon clipping") {
    ClipBox box{{0, 0, -1}, {4, 4, 1}};
    // Square overlapping a corner of the box.
    std::vector<QPoint3> sq{{2, 2, 0}, {6, 2, 0}, {6, 6, 0}, {2, 6, 0}};
    auto out = clip_polygon(sq, box);
    CHECK(out.size() == 4);
    for (const auto& p : out) CHECK(in_box(box, p));
    CHECK(std::find(out.begin(), out.end(), QPoint3{4, 4, 0}) != out.end());
    // Disjoint and fully inside.
    CHECK(clip_polygon({{5, 5, 0}, {6, 5, 0}, {5, 6, 0}}, box).empty());
    std::vector<QPoint3> tri{{1, 1, 0}, {2, 1, 0}, {1, 2, 0}};
    CHECK(clip_polygon(tri, box) == tri);
    // Plane above the box.
    CHECK(clip_polygon({{1, 1, 2}, {2, 1, 2}, {1, 2, 2}}, box).empty());

    // Random triangles against membership by sampling.
    std::mt19937 rng(167);
    for (int it = 0; it < 200; ++it) {
        std::vector<QPoint3> t;
        for (int k = 0; k < 3; ++k) t.push_back({rand_rat(rng, 8, 2), rand_rat(rng, 8, 2), 0});
        if (cross(t[0], t[1], t[2]) == 0) continue;
        auto c = clip_polygon(t, box);
        for (const auto& p : c) {
            CHECK(in_box(box, p));
            CHECK(inside_convex(t, p));
        }
        for (int s = 0; s < 30; ++s) {
            QPoint3 p{rand_rat(rng, 8, 3), rand_rat(rng, 8, 3), 0};
            bool expect = in_box(box, p) && inside_convex(t, p);
            // Degenerate clips (a touching vertex or edge) are skipped.
            if (c.size() >= 3) CHECK(inside_convex(c, p) == expect);
        }
    }
}

TEST_CASE("OFF export") {
    auto x = build_complex(testing::load_poly("g3.trop"));
    std::istringstream bounded(off_export(x, std::nullopt));
    std::string head;
    std::size_t nv = 0, nf = 0, ne = 0;
    bounded >> head >> nv >> nf >> ne;
    CHECK(head == "OFF");
    std::size_t bounded_faces = 0;
    for (const auto& f : x.faces) bounded_faces += f.bounded();
    CHECK(nf == bounded_faces);
    std::set<int> used;
    for (const auto& f : x.faces)
        if (f.bounded()) used.insert(f.vertices.begin(), f.vertices.end());
    CHECK(nv == used.size());

    ClipBox box{{-40, -40, -40}, {40, 40, 40}};
    std::istringstream clipped(off_export(x, box));
    clipped >> head >> nv >> nf >> ne;
    CHECK(nf >= bounded_faces);
    for (std::size_t i = 0; i < nv; ++i) {
        double p[3];
        clipped >> p[0] >> p[1] >> p[2];
        for (double c : p) CHECK(std::abs(c) <= 40.0 + 1e-9);
    }
    for (std::size_t i = 0; i < nf; ++i) {
        std::size_t k;
        clipped >> k;
        CHECK(k >= 3);
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t id;
            clipped >> id;
            CHECK(id < nv);
        }
    }
    CHECK(off_export(x, box) == off_export(build_complex(testing::load_poly("g3.trop"), Exec::serial), box));
}

TEST_CASE("argument parsing") {
    CHECK(parse_point("1, -2/3, 4") == QPoint3{1, make_rat(-2, 3), 4});
    CHECK_THROWS_AS(parse_point("1,2"), ParseError);
    CHECK_THROWS_AS(parse_point("1,2,a"), ParseError);
    auto b = parse_clip_box("-1,-2,-3,1,2,3");
    CHECK(b.lo == QPoint3{-1, -2, -3});
    CHECK(b.hi == QPoint3{1, 2, 3});
    CHECK_THROWS_AS(parse_clip_box("1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_clip_box("2,0,0,1,1,1"), PreconditionError);
}

TEST_CASE("text arguments") {
    CHECK(read_text_argument("0*x + 1") == "0*x + 1");
    std::string path = "tropline_io_test.tmp";
    {
        std::ofstream out(path);
        out << "1*x + 0";
    }
    CHECK(read_text_argument(path) == "1*x + 0");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("/nonexistent/tropline"), Error);
}
