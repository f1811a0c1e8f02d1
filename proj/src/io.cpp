#include "tropline/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tropline/error.hpp"

namespace tropline {

Json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return make_rat(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational as \"p/q\" or an integer", 0);
}

Json to_json(const QPoint3& p) { return Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

QPoint3 qpoint_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("expected a point with three coordinates", 0);
    return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2])};
}

namespace {

Json lattice_json(const LatticePoint3& p) { return Json::array({p[0], p[1], p[2]}); }

Json triangulation_json(const LiftingFunction& lifting, std::vector<std::vector<LatticePoint3>> cells, int delta) {
    for (auto& c : cells) std::sort(c.begin(), c.end());
    std::sort(cells.begin(), cells.end());
    Json out;
    out["delta"] = delta;
    Json lift = Json::array();
    for (const auto& [p, v] : lifting) lift.push_back(Json::array({p[0], p[1], p[2], to_string(v)}));
    out["lifting"] = lift;
    Json cj = Json::array();
    for (const auto& c : cells) {
        Json one = Json::array();
        for (const auto& p : c) one.push_back(lattice_json(p));
        cj.push_back(one);
    }
    out["cells"] = cj;
    return out;
}

}  // namespace

Json triangulation_json(const Subdivision& s, int delta) {
    LiftingFunction lifting;
    for (std::size_t i = 0; i < s.support.size(); ++i)
        lifting[s.support[i]] = i < s.lifting.size() ? s.lifting[i] : Rat(0);
    std::vector<std::vector<LatticePoint3>> cells;
    for (std::size_t i = 0; i < s.cells.size(); ++i) cells.push_back(s.cell_points(i));
    return triangulation_json(lifting, cells, delta);
}

Json triangulation_json(const LiftedTriangulation& t, int delta) {
    Json out = triangulation_json(t.lifting, t.cells, delta);
    Json lam = Json::array();
    for (const auto& l : t.lambdas) lam.push_back(to_string(l));
    out["glue_lambdas"] = lam;
    return out;
}

Json to_json(const TropicalLine& l) {
    return Json{{"type", type_name(l.type)}, {"v1", to_json(l.v1)}, {"v2", to_json(l.v2)}};
}

TropicalLine line_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j.contains("v1") || !j.contains("v2"))
        throw ParseError("line JSON needs \"type\", \"v1\" and \"v2\"", 0);
    if (!j["type"].is_string()) throw ParseError("line type must be a string", 0);
    TropicalLine l;
    l.type = parse_line_type(j["type"].get<std::string>());
    l.v1 = qpoint_from_json(j["v1"]);
    l.v2 = qpoint_from_json(j["v2"]);
    validate(l);
    return l;
}

Json to_json(const CellRef& c) { return Json{{"dim", c.dim}, {"id", c.id}}; }

Json to_json(const LineData& d) {
    Json out;
    out["V1"] = to_json(d.V1);
    out["V2"] = to_json(d.V2);
    out["kappa"] = type_name(d.kappa);
    for (int i = 0; i < 5; ++i) {
        Json c = Json::array();
        for (const auto& r : d.C[i]) c.push_back(to_json(r));
        out["C" + std::to_string(i + 1)] = c;
    }
    return out;
}

Json to_json(const FamilyWitness& w) {
    Json out;
    out["base"] = to_json(w.base);
    out["member_type"] = type_name(w.member_type);
    out["moving_vertex"] = w.moving_vertex;
    out["direction"] = lattice_json(w.direction);
    out["rate1"] = to_json(w.rate1);
    out["rate2"] = to_json(w.rate2);
    out["t_max"] = w.t_max ? to_json(*w.t_max) : Json(nullptr);
    out["anchors"] = Json::array({to_json(w.anchors[0]), to_json(w.anchors[1])});
    Json s = Json::array();
    for (const auto& t : w.samples) s.push_back(to_json(t));
    out["samples"] = s;
    return out;
}

Json surface_json(const SurfaceComplex& x) {
    Json out;
    out["delta"] = x.delta;
    Json verts = Json::array();
    for (std::size_t i = 0; i < x.vertices.size(); ++i) {
        Json dual = Json::array();
        for (const auto& p : x.dual_points({0, static_cast<int>(i)})) dual.push_back(lattice_json(p));
        verts.push_back(Json{{"point", to_json(x.vertices[i])}, {"dual", dual}});
    }
    out["vertices"] = verts;
    Json edges = Json::array();
    for (std::size_t i = 0; i < x.edges.size(); ++i) {
        const auto& e = x.edges[i];
        Json dual = Json::array();
        for (const auto& p : x.dual_points({1, static_cast<int>(i)})) dual.push_back(lattice_json(p));
        Json ej{{"dual", dual}, {"v0", e.v0}, {"v1", e.bounded() ? Json(e.v1) : Json(nullptr)}};
        if (!e.bounded()) ej["ray"] = lattice_json(e.ray);
        ej["faces"] = e.faces;
        edges.push_back(ej);
    }
    out["edges"] = edges;
    Json faces = Json::array();
    for (std::size_t i = 0; i < x.faces.size(); ++i) {
        const auto& f = x.faces[i];
        Json dual = Json::array();
        for (const auto& p : x.dual_points({2, static_cast<int>(i)})) dual.push_back(lattice_json(p));
        Json rays = Json::array();
        for (const auto& r : f.rays) rays.push_back(lattice_json(r));
        faces.push_back(Json{{"dual", dual},
                             {"vertices", f.vertices},
                             {"rays", rays},
                             {"edges", f.edges},
                             {"normal", lattice_json(f.normal)},
                             {"bounded", f.bounded()}});
    }
    out["faces"] = faces;
    return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

ClipBox parse_clip_box(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 6) throw ParseError("clip box needs six comma-separated numbers", 0);
    ClipBox b;
    for (int k = 0; k < 3; ++k) {
        b.lo[k] = parse_rational(parts[k]);
        b.hi[k] = parse_rational(parts[k + 3]);
        if (b.lo[k] > b.hi[k]) throw PreconditionError("clip box has lo > hi");
    }
    return b;
}

QPoint3 parse_point(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw ParseError("point needs three comma-separated coordinates", 0);
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

std::vector<QPoint3> clip_polygon(std::vector<QPoint3> poly, const ClipBox& box) {
    for (int axis = 0; axis < 3; ++axis)
        for (int side = 0; side < 2; ++side) {
            if (poly.empty()) return poly;
            // Inside: p[axis] >= lo or p[axis] <= hi.
            auto dist = [&](const QPoint3& p) -> Rat {
                return side == 0 ? Rat(p[axis] - box.lo[axis]) : Rat(box.hi[axis] - p[axis]);
            };
            std::vector<QPoint3> out;
            for (std::size_t i = 0; i < poly.size(); ++i) {
                const QPoint3& a = poly[i];
                const QPoint3& b = poly[(i + 1) % poly.size()];
                Rat da = dist(a), db = dist(b);
                if (da >= 0) out.push_back(a);
                if ((da >= 0) != (db >= 0) && da != 0 && db != 0) {
                    Rat t = da / (da - db);
                    out.push_back(qadd(a, qscale(qsub(b, a), t)));
                }
            }
            // Drop consecutive duplicates created by touching vertices.
            std::vector<QPoint3> clean;
            for (const auto& p : out)
                if (clean.empty() || clean.back() != p) clean.push_back(p);
            while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
            poly = clean;
        }
    return poly;
}

std::string off_export(const SurfaceComplex& x, const std::optional<ClipBox>& box) {
    // Ray truncation length: beyond every vertex and box corner.
    Rat reach = 1;
    auto grow = [&](const QPoint3& p) {
        for (const auto& c : p) reach = std::max<Rat>(reach, Rat(abs(c) + 1));
    };
    for (const auto& v : x.vertices) grow(v);
    if (box) {
        grow(box->lo);
        grow(box->hi);
    }
    reach *= 16;

    std::vector<std::vector<QPoint3>> polys;
    for (const auto& f : x.faces) {
        if (!box && !f.bounded()) continue;
        std::vector<QPoint3> poly;
        if (!f.bounded()) poly.push_back(qaxpy(x.vertices[f.vertices.front()], reach, f.rays[0]));
        for (int v : f.vertices) poly.push_back(x.vertices[v]);
        if (!f.bounded()) poly.push_back(qaxpy(x.vertices[f.vertices.back()], reach, f.rays[1]));
        if (box) poly = clip_polygon(poly, *box);
        if (poly.size() >= 3) polys.push_back(poly);
    }
    std::vector<QPoint3> verts;
    std::map<QPoint3, std::size_t> index;
    std::vector<std::vector<std::size_t>> faces;
    for (const auto& poly : polys) {
        std::vector<std::size_t> f;
        for (const auto& p : poly) {
            auto [it, fresh] = index.emplace(p, verts.size());
            if (fresh) verts.push_back(p);
            f.push_back(it->second);
        }
        faces.push_back(f);
    }
    std::ostringstream os;
    os << "OFF\n" << verts.size() << " " << faces.size() << " 0\n";
    os << std::setprecision(17);
    for (const auto& v : verts) os << to_double(v[0]) << " " << to_double(v[1]) << " " << to_double(v[2]) << "\n";
    for (const auto& f : faces) {
        os << f.size();
        for (auto i : f) os << " " << i;
        os << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_text_argument(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
    return arg;
}

}  // namespace tropline
