#include "tropline/surface.hpp"

#include <algorithm>
#include <set>

#include "tropline/error.hpp"
#include "tropline/linalg.hpp"

namespace tropline {

namespace {

// Lattice vector parallel to a nonzero rational vector, with the same orientation.
Vec3 primitive_of(const QPoint3& v) {
    BigInt l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    BigInt n[3];
    for (int k = 0; k < 3; ++k) n[k] = v[k].get_num() * (l / v[k].get_den());
    BigInt g = 0;
    for (auto& x : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw DegenerateError("zero vector has no primitive direction");
    Vec3 out;
    for (int k = 0; k < 3; ++k) out[k] = BigInt(n[k] / g).get_si();
    return out;
}

QPoint3 qcross(const QPoint3& a, const QPoint3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

int rsign(const Rat& r) { return r > 0 ? 1 : r < 0 ? -1 : 0; }

QPoint3 solve_vertex(const Subdivision& s, const std::vector<int>& cell) {
    RatMatrix a;
    std::vector<Rat> b;
    const auto& p0 = s.support[cell[0]];
    for (std::size_t r = 1; r < cell.size(); ++r) {
        const auto& pr = s.support[cell[r]];
        Vec3 d = sub(pr, p0);
        a.push_back({Rat(static_cast<long>(d[0])), Rat(static_cast<long>(d[1])), Rat(static_cast<long>(d[2]))});
        b.push_back(s.lifting[cell[0]] - s.lifting[cell[r]]);
    }
    auto sol = solve_linear(a, b);
    if (!sol.consistent || !sol.unique) throw InternalError("singular vertex system");
    return {sol.x[0], sol.x[1], sol.x[2]};
}

}  // namespace

std::vector<int> SurfaceComplex::dual_of(const CellRef& c) const {
    switch (c.dim) {
        case 0: return subdiv.cells.at(c.id);
        case 1: {
            const auto& d = edges.at(c.id).dual;
            return {d.begin(), d.end()};
        }
        case 2: {
            const auto& d = faces.at(c.id).dual;
            return {d.begin(), d.end()};
        }
        default: throw PreconditionError("cell dimension must be 0, 1 or 2");
    }
}

std::vector<LatticePoint3> SurfaceComplex::dual_points(const CellRef& c) const {
    std::vector<LatticePoint3> out;
    for (int i : dual_of(c)) out.push_back(subdiv.support[i]);
    return out;
}

std::optional<CellRef> SurfaceComplex::cell_of_dual(std::vector<int> idx) const {
    std::sort(idx.begin(), idx.end());
    auto it = by_dual.find(idx);
    if (it == by_dual.end()) return std::nullopt;
    return it->second;
}

bool SurfaceComplex::is_bounded(const CellRef& c) const {
    if (c.dim == 0) return true;
    if (c.dim == 1) return edges.at(c.id).bounded();
    return faces.at(c.id).bounded();
}

std::vector<int> SurfaceComplex::argmax_indices(const QPoint3& p) const {
    std::vector<int> best;
    Rat bestv;
    for (std::size_t i = 0; i < subdiv.support.size(); ++i) {
        Rat v = subdiv.lifting[i] + qdot(p, subdiv.support[i]);
        if (best.empty() || v > bestv) {
            bestv = v;
            best.assign(1, static_cast<int>(i));
        } else if (v == bestv) {
            best.push_back(static_cast<int>(i));
        }
    }
    return best;
}

std::optional<CellRef> SurfaceComplex::locate(const QPoint3& p) const {
    auto idx = argmax_indices(p);
    if (idx.size() < 2) return std::nullopt;
    auto c = cell_of_dual(idx);
    if (!c) throw InternalError("argmax set at " + to_string(p) + " is not a face of the subdivision");
    return c;
}

bool SurfaceComplex::in_closure(const CellRef& c, const QPoint3& p) const {
    auto am = argmax_indices(p);
    for (int i : dual_of(c))
        if (!std::binary_search(am.begin(), am.end(), i)) return false;
    return true;
}

std::size_t SurfaceComplex::count(int dim) const {
    return dim == 0 ? vertices.size() : dim == 1 ? edges.size() : faces.size();
}

SurfaceComplex build_complex(const TropicalPolynomial& f, Exec exec) {
    if (f.degree() < 1 || !f.newton_is_full_simplex()) throw PreconditionError("wrong degree shape");
    return build_complex(f, induce(f, exec));
}

SurfaceComplex build_complex(const TropicalPolynomial& f, Subdivision s) {
    if (f.degree() < 1 || !f.newton_is_full_simplex()) throw PreconditionError("wrong degree shape");
    if (!smoothness_report(s).smooth) throw PreconditionError("surface complex requires a smooth polynomial");
    SurfaceComplex x;
    x.f = f;
    x.delta = f.degree();
    x.subdiv = std::move(s);
    const auto& sd = x.subdiv;
    const auto& pts = sd.support;

    for (std::size_t i = 0; i < sd.cells.size(); ++i) {
        x.vertices.push_back(solve_vertex(sd, sd.cells[i]));
        x.by_dual[sd.cells[i]] = {0, static_cast<int>(i)};
    }

    std::map<std::array<int, 3>, std::vector<int>> tri_tets;
    std::map<std::array<int, 2>, std::vector<int>> pair_tets;
    for (std::size_t t = 0; t < sd.cells.size(); ++t) {
        const auto& c = sd.cells[t];
        for (int skip = 0; skip < 4; ++skip) {
            std::array<int, 3> tri{};
            int n = 0;
            for (int k = 0; k < 4; ++k)
                if (k != skip) tri[n++] = c[k];
            tri_tets[tri].push_back(static_cast<int>(t));
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) pair_tets[{c[i], c[j]}].push_back(static_cast<int>(t));
    }

    std::map<std::array<int, 3>, int> edge_id;
    for (const auto& [tri, tets] : tri_tets) {
        SurfaceEdge e;
        e.dual = tri;
        e.v0 = tets[0];
        if (tets.size() == 2) {
            e.v1 = tets[1];
        } else if (tets.size() == 1) {
            const auto& a = pts[tri[0]];
            Vec3 n = primitive(cross(sub(pts[tri[1]], a), sub(pts[tri[2]], a)));
            int other = -1;
            for (int k : sd.cells[tets[0]])
                if (k != tri[0] && k != tri[1] && k != tri[2]) other = k;
            if (dot(n, sub(pts[other], a)) > 0) n = neg(n);
            e.ray = n;
        } else {
            throw InternalError("triangle shared by more than two tetrahedra");
        }
        int id = static_cast<int>(x.edges.size());
        edge_id[tri] = id;
        x.by_dual[{tri.begin(), tri.end()}] = {1, id};
        x.edges.push_back(e);
    }

    for (const auto& [pr, tets] : pair_tets) {
        const int a = pr[0], b = pr[1];
        // Node = 1-cell dual to a triangle containing {a,b}; link = tetrahedron joining two nodes.
        std::map<int, std::vector<std::pair<int, int>>> adj;
        for (int t : tets) {
            std::vector<int> rest;
            for (int k : sd.cells[t])
                if (k != a && k != b) rest.push_back(k);
            auto key = [&](int c) {
                std::array<int, 3> tri{a, b, c};
                std::sort(tri.begin(), tri.end());
                return edge_id.at(tri);
            };
            int n1 = key(rest[0]), n2 = key(rest[1]);
            adj[n1].push_back({t, n2});
            adj[n2].push_back({t, n1});
        }
        std::vector<int> ends;
        for (const auto& [node, links] : adj)
            if (links.size() == 1) ends.push_back(node);
        SurfaceFace face;
        face.dual = {a, b};
        face.normal = sub(pts[b], pts[a]);
        int start = ends.empty() ? adj.begin()->first : ends.front();
        int node = start, prev_tet = -1;
        if (!ends.empty() && ends.size() != 2) throw InternalError("2-cell chain has a bad number of ends");
        if (ends.empty()) {
            // Cycle: leave the start through the smaller tetrahedron.
            const auto& l = adj[start];
            int t0 = std::min(l[0].first, l[1].first);
            face.edges.push_back(start);
            int cur = start;
            int tet = t0;
            while (true) {
                face.vertices.push_back(tet);
                int next = -1;
                for (auto [t, nb] : adj[cur])
                    if (t == tet) next = nb;
                if (next == start) break;
                face.edges.push_back(next);
                int nt = -1;
                for (auto [t, nb] : adj[next])
                    if (t != tet) nt = t;
                cur = next;
                tet = nt;
            }
        } else {
            face.edges.push_back(node);
            while (true) {
                int tet = -1, next = -1;
                for (auto [t, nb] : adj[node])
                    if (t != prev_tet) {
                        tet = t;
                        next = nb;
                    }
                if (tet < 0) break;
                face.vertices.push_back(tet);
                face.edges.push_back(next);
                prev_tet = tet;
                node = next;
                if (adj[node].size() == 1) break;
            }
            face.rays = {x.edges[face.edges.front()].ray, x.edges[face.edges.back()].ray};
        }
        int id = static_cast<int>(x.faces.size());
        for (int e : face.edges) x.edges[e].faces.push_back(id);
        x.by_dual[{a, b}] = {2, id};
        x.faces.push_back(std::move(face));
    }
    for (const auto& e : x.edges)
        if (e.faces.size() != 3) throw InternalError("1-cell without exactly three adjacent 2-cells");
    return x;
}

namespace {

// Lattice direction of a 1-cell, oriented from its apex along the cell.
Vec3 edge_direction(const SurfaceComplex& x, const SurfaceEdge& e) {
    if (!e.bounded()) return e.ray;
    return primitive_of(qsub(x.vertices[e.v1], x.vertices[e.v0]));
}

// A point of face f off the line of edge e.
QPoint3 face_point_off_edge(const SurfaceComplex& x, const SurfaceFace& f, const QPoint3& base, const Vec3& d) {
    std::vector<QPoint3> cand;
    for (int v : f.vertices) cand.push_back(x.vertices[v]);
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        const QPoint3& apex = x.vertices[r == 0 ? f.vertices.front() : f.vertices.back()];
        cand.push_back(qaxpy(apex, Rat(1), f.rays[r]));
    }
    QPoint3 dq = to_q(d);
    for (const auto& q : cand) {
        QPoint3 c = qcross(qsub(q, base), dq);
        if (c[0] != 0 || c[1] != 0 || c[2] != 0) return q;
    }
    throw InternalError("2-cell degenerates to a line");
}

}  // namespace

BalancingReport check_balancing(const SurfaceComplex& x) {
    BalancingReport r;
    r.balanced = true;
    r.dual_consistent = true;
    const auto& pts = x.subdiv.support;
    for (const auto& e : x.edges) {
        ++r.edges_checked;
        Vec3 d = edge_direction(x, e);
        const QPoint3& base = x.vertices[e.v0];
        Vec3 sum{0, 0, 0};
        int eps = 0;
        for (int fid : e.faces) {
            const auto& f = x.faces[fid];
            QPoint3 w = qsub(face_point_off_edge(x, f, base, d), base);
            QPoint3 n = qcross(to_q(d), w);
            Vec3 v = primitive_of(n);
            sum = add(sum, v);
            // Dual side check against the stored normal.
            Vec3 canonical = sub(pts[f.dual[1]], pts[f.dual[0]]);
            if (f.normal != canonical) r.dual_consistent = false;
            int s = rsign(qdot(n, f.normal));
            if (s == 0) {
                r.dual_consistent = false;
                continue;
            }
            Vec3 u = s > 0 ? f.normal : neg(f.normal);
            // Cyclic sides of the sorted dual triangle (t0, t1, t2).
            const auto& t = e.dual;
            Vec3 side;
            if (f.dual[0] == t[0] && f.dual[1] == t[1]) side = sub(pts[t[1]], pts[t[0]]);
            else if (f.dual[0] == t[1] && f.dual[1] == t[2]) side = sub(pts[t[2]], pts[t[1]]);
            else side = sub(pts[t[0]], pts[t[2]]);
            int this_eps = u == side ? 1 : u == neg(side) ? -1 : 0;
            if (this_eps == 0 || (eps != 0 && this_eps != eps)) r.dual_consistent = false;
            eps = this_eps;
        }
        if (!is_zero(sum)) r.balanced = false;
    }
    return r;
}

bool check_orthogonality(const SurfaceComplex& x) {
    const auto& pts = x.subdiv.support;
    for (const auto& e : x.edges) {
        Vec3 d = edge_direction(x, e);
        const auto& t = e.dual;
        if (dot(d, sub(pts[t[1]], pts[t[0]])) != 0 || dot(d, sub(pts[t[2]], pts[t[0]])) != 0) return false;
    }
    for (const auto& f : x.faces) {
        Vec3 n = sub(pts[f.dual[1]], pts[f.dual[0]]);
        for (std::size_t i = 0; i + 1 < f.vertices.size(); ++i)
            if (qdot(qsub(x.vertices[f.vertices[i + 1]], x.vertices[f.vertices[i]]), n) != 0) return false;
        if (f.bounded() && f.vertices.size() > 1 &&
            qdot(qsub(x.vertices[f.vertices.front()], x.vertices[f.vertices.back()]), n) != 0)
            return false;
        for (const auto& r : f.rays)
            if (dot(r, n) != 0) return false;
    }
    return true;
}

bool check_unboundedness(const SurfaceComplex& x) {
    auto in_facet = [&](const std::vector<int>& idx) {
        IndexSet common = 0xF;
        for (int i : idx) common &= facet_membership(x.subdiv.support[i], x.delta);
        return common != 0;
    };
    for (const auto& e : x.edges)
        if (e.bounded() == in_facet({e.dual.begin(), e.dual.end()})) return false;
    for (const auto& f : x.faces)
        if (f.bounded() == in_facet({f.dual.begin(), f.dual.end()})) return false;
    for (const auto& c : x.subdiv.cells)
        if (in_facet(c)) return false;
    return true;
}

bool check_distinct_planes(const SurfaceComplex& x) {
    for (const auto& e : x.edges)
        for (std::size_t i = 0; i < e.faces.size(); ++i)
            for (std::size_t j = i + 1; j < e.faces.size(); ++j)
                if (is_zero(cross(x.faces[e.faces[i]].normal, x.faces[e.faces[j]].normal))) return false;
    return true;
}

}  // namespace tropline
