#include "tropline/quadric.hpp"

#include <algorithm>

#include "tropline/error.hpp"

namespace tropline {

namespace {

struct Diagonal {
    const char* name;
    LatticePoint3 a, b;
    Vec3 normal;
};

const std::array<Diagonal, 3> kDiagonals{{
    {"PP'", {1, 0, 0}, {0, 1, 1}, {-1, 1, 1}},
    {"QQ'", {1, 0, 1}, {0, 1, 0}, {1, -1, 1}},
    {"RR'", {0, 0, 1}, {1, 1, 0}, {1, 1, -1}},
}};

IndexSet exit_mask(const std::array<int, 2>& rays) { return IndexSet((1u << (rays[0] - 1)) | (1u << (rays[1] - 1))); }

Vec3 edge_dir(const SurfaceComplex& x, const CellRef& e) {
    auto pts = x.dual_points(e);
    return primitive(cross(sub(pts[1], pts[0]), sub(pts[2], pts[0])));
}

// Largest t >= 0 with p + t*u still in the closed cell dual to {ia, ib}.
Rat chord_end(const SurfaceComplex& x, int ia, const QPoint3& p, const Vec3& u) {
    const auto ex = x.f.exponents();
    const auto co = x.f.coefficients();
    Rat top = co[ia] + qdot(p, ex[ia]);
    Coord s_top = dot(ex[ia], u);
    std::optional<Rat> t;
    for (std::size_t b = 0; b < ex.size(); ++b) {
        Coord sb = dot(ex[b], u);
        if (sb <= s_top) continue;
        Rat tb = (top - (co[b] + qdot(p, ex[b]))) / Rat(sb - s_top);
        if (!t || tb < *t) t = tb;
    }
    if (!t) throw InternalError("compact cell is unbounded along a chord");
    return *t;
}

// 1-cell through q on the boundary of the compact cell. At a vertex of X: the
// adjacent boundary edge not parallel to u with the smallest dual triangle,
// among those whose dual has the exits `need` when there are any. The
// preference only matters for a chord shrunk to a single vertex, where both
// ends sit at the same vertex and need different edges.
CellRef boundary_edge(const SurfaceComplex& x, const CompactCellInfo& c, const QPoint3& q, const Vec3& u,
                      IndexSet need) {
    auto at = x.locate(q);
    if (!at) throw InternalError("chord endpoint is off the surface");
    if (at->dim == 1) return *at;
    if (at->dim != 0) throw InternalError("chord endpoint is interior to a 2-cell");
    const auto& face = x.faces[c.cell.id];
    std::optional<CellRef> best;
    std::vector<LatticePoint3> best_pts;
    bool best_has = false;
    for (int eid : face.edges) {
        const auto& e = x.edges[eid];
        if (e.v0 != at->id && e.v1 != at->id) continue;
        CellRef r{1, eid};
        if (is_zero(cross(edge_dir(x, r), u))) continue;
        auto pts = x.dual_points(r);
        bool has = (exits(pts, 2) & need) == need;
        if (!best || (has && !best_has) || (has == best_has && pts < best_pts)) {
            best = r;
            best_pts = pts;
            best_has = has;
        }
    }
    if (!best) throw InternalError("no boundary edge at chord endpoint");
    return *best;
}

}  // namespace

CompactCellInfo compact_cell(const SurfaceComplex& x) {
    if (x.delta != 2) throw PreconditionError("compact cell search needs a quadric");
    std::vector<CompactCellInfo> found;
    for (const auto& d : kDiagonals) {
        int ia = x.subdiv.index_of(d.a), ib = x.subdiv.index_of(d.b);
        if (ia < 0 || ib < 0) continue;
        auto cell = x.cell_of_dual({std::min(ia, ib), std::max(ia, ib)});
        if (!cell) continue;
        CompactCellInfo info;
        info.cell = *cell;
        info.diagonal = {d.a, d.b};
        info.name = d.name;
        info.normal = d.normal;
        for (int v : x.faces[cell->id].vertices) info.vertices.push_back(x.vertices[v]);
        found.push_back(std::move(info));
    }
    if (found.size() != 1)
        throw InternalError("expected exactly one diagonal in the subdivision, found " + std::to_string(found.size()));
    if (!x.faces[found[0].cell.id].bounded()) throw InternalError("the 2-cell dual to the diagonal is unbounded");
    return found[0];
}

Ruling ruling_through(const SurfaceComplex& x, const CompactCellInfo& c, const QPoint3& p, LineType type) {
    Vec3 u = bounded_direction(type);
    if (dot(u, c.normal) != 0) throw PreconditionError("line type is not parallel to the compact cell");
    int ia = x.subdiv.index_of(c.diagonal[0]);
    Rat plus = chord_end(x, ia, p, u);
    Rat minus = chord_end(x, ia, p, neg(u));
    Ruling r;
    r.line.v1 = qaxpy(p, -minus, u);
    r.line.v2 = qaxpy(p, plus, u);
    r.line.type = r.line.v1 == r.line.v2 ? LineType::t1234 : type;
    r.e_minus = boundary_edge(x, c, r.line.v1, u, exit_mask(rays_at_v1(type)));
    r.e_plus = boundary_edge(x, c, r.line.v2, u, exit_mask(rays_at_v2(type)));
    return r;
}

std::pair<TropicalLine, TropicalLine> two_lines_through(const SurfaceComplex& x, const QPoint3& p) {
    CompactCellInfo c = compact_cell(x);
    if (!x.in_closure(c.cell, p)) throw PreconditionError("point " + to_string(p) + " is not in the compact cell");
    std::vector<TropicalLine> out;
    for (LineType t : {LineType::t12_34, LineType::t13_24, LineType::t14_23}) {
        if (dot(bounded_direction(t), c.normal) != 0) continue;
        Ruling r = ruling_through(x, c, p, t);
        IndexSet need_minus = exit_mask(rays_at_v1(t)), need_plus = exit_mask(rays_at_v2(t));
        IndexSet got_minus = exits(x.dual_points(r.e_minus), 2);
        IndexSet got_plus = exits(x.dual_points(r.e_plus), 2);
        if ((got_minus & need_minus) != need_minus || (got_plus & need_plus) != need_plus)
            throw InternalError("boundary triangle lacks the exits of the ruling");
        if (!contains_line(x.f, r.line) || !point_on_line(r.line, p))
            throw InternalError("constructed ruling is not on the surface");
        out.push_back(r.line);
    }
    if (out.size() != 2) throw InternalError("compact cell normal admits " + std::to_string(out.size()) + " rulings");
    return {out[0], out[1]};
}

bool check_inner_product_lemma(const SurfaceComplex& x, const CompactCellInfo& c) {
    const auto& face = x.faces[c.cell.id];
    QPoint3 centroid{0, 0, 0};
    for (const auto& v : c.vertices) centroid = qadd(centroid, v);
    centroid = qscale(centroid, Rat(1, static_cast<long>(c.vertices.size())));
    for (int eid : face.edges) {
        const auto& e = x.edges[eid];
        QPoint3 mid = qscale(qadd(x.vertices[e.v0], x.vertices[e.v1]), Rat(1, 2));
        QPoint3 v = qsub(centroid, mid);
        for (const auto& a : x.dual_points({1, eid})) {
            if (a == c.diagonal[0] || a == c.diagonal[1]) continue;
            for (const auto& d : c.diagonal)
                if (qdot(v, sub(a, d)) >= 0) return false;
        }
    }
    return true;
}

}  // namespace tropline
