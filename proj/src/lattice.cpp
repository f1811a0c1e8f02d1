#include "tropline/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "tropline/error.hpp"

namespace tropline {

Coord gcd3(const Vec3& v) {
    return std::gcd(std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]),
                    v[2] < 0 ? -v[2] : v[2]);
}

Vec3 primitive(const Vec3& v) {
    Coord g = gcd3(v);
    if (g == 0) throw DegenerateError("zero vector has no primitive direction");
    return {v[0] / g, v[1] / g, v[2] / g};
}

QPoint3 to_q(const LatticePoint3& p) {
    return {Rat(static_cast<long>(p[0])), Rat(static_cast<long>(p[1])), Rat(static_cast<long>(p[2]))};
}

QPoint3 qadd(const QPoint3& a, const QPoint3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
QPoint3 qsub(const QPoint3& a, const QPoint3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
QPoint3 qscale(const QPoint3& a, const Rat& t) { return {a[0] * t, a[1] * t, a[2] * t}; }

QPoint3 qaxpy(const QPoint3& a, const Rat& t, const Vec3& v) {
    return {a[0] + t * static_cast<long>(v[0]), a[1] + t * static_cast<long>(v[1]),
            a[2] + t * static_cast<long>(v[2])};
}

Rat qdot(const QPoint3& a, const Vec3& b) {
    return a[0] * static_cast<long>(b[0]) + a[1] * static_cast<long>(b[1]) +
           a[2] * static_cast<long>(b[2]);
}

Rat qdot(const QPoint3& a, const QPoint3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::string to_string(const LatticePoint3& p) {
    return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + ")";
}

std::string to_string(const QPoint3& p) {
    auto s = [](const Rat& r) { return r.get_str(); };
    return "(" + s(p[0]) + "," + s(p[1]) + "," + s(p[2]) + ")";
}

int affine_dimension(const std::vector<LatticePoint3>& pts) {
    if (pts.empty()) return -1;
    std::vector<Vec3> basis;
    for (const auto& p : pts) {
        Vec3 d = sub(p, pts[0]);
        if (is_zero(d)) continue;
        if (basis.empty()) {
            basis.push_back(d);
        } else if (basis.size() == 1) {
            if (!is_zero(cross(basis[0], d))) basis.push_back(d);
        } else if (det3(basis[0], basis[1], d) != 0) {
            return 3;
        }
    }
    return static_cast<int>(basis.size());
}

LatticeSimplex::LatticeSimplex(std::vector<LatticePoint3> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2 || vertices_.size() > 4)
        throw PreconditionError("a lattice simplex has 2 to 4 vertices");
    if (affine_dimension(vertices_) != dim()) throw DegenerateError("degenerate simplex");
}

Rat simplex_volume(const LatticePoint3& a, const LatticePoint3& b, const LatticePoint3& c,
                   const LatticePoint3& d) {
    Coord det = det3(sub(b, a), sub(c, a), sub(d, a));
    if (det == 0) throw DegenerateError("degenerate simplex");
    return make_rat(det < 0 ? -det : det, 6);
}

Rat simplex_volume(const LatticeSimplex& t) {
    if (t.dim() != 3) throw PreconditionError("volume requires a 3-dimensional simplex");
    const auto& v = t.vertices();
    return simplex_volume(v[0], v[1], v[2], v[3]);
}

namespace {

bool in_simplex(const std::vector<LatticePoint3>& v, const LatticePoint3& q) {
    switch (v.size()) {
        case 2: {
            Vec3 e = sub(v[1], v[0]), w = sub(q, v[0]);
            if (!is_zero(cross(e, w))) return false;
            Coord t = dot(w, e);
            return t >= 0 && t <= dot(e, e);
        }
        case 3: {
            Vec3 n = cross(sub(v[1], v[0]), sub(v[2], v[0]));
            if (dot(n, sub(q, v[0])) != 0) return false;
            for (int i = 0; i < 3; ++i) {
                const auto& a = v[i];
                const auto& b = v[(i + 1) % 3];
                if (dot(n, cross(sub(b, a), sub(q, a))) < 0) return false;
            }
            return true;
        }
        case 4: {
            Coord d = det3(sub(v[1], v[0]), sub(v[2], v[0]), sub(v[3], v[0]));
            int s = d > 0 ? 1 : -1;
            for (int i = 0; i < 4; ++i) {
                std::array<LatticePoint3, 4> w = {v[0], v[1], v[2], v[3]};
                w[i] = q;
                Coord di = det3(sub(w[1], w[0]), sub(w[2], w[0]), sub(w[3], w[0]));
                if (di * s < 0) return false;
            }
            return true;
        }
        default:
            return false;
    }
}

}  // namespace

std::vector<LatticePoint3> lattice_points(const LatticeSimplex& t) {
    const auto& v = t.vertices();
    LatticePoint3 lo = v[0], hi = v[0];
    for (const auto& p : v)
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    std::vector<LatticePoint3> out;
    for (Coord x = lo[0]; x <= hi[0]; ++x)
        for (Coord y = lo[1]; y <= hi[1]; ++y)
            for (Coord z = lo[2]; z <= hi[2]; ++z)
                if (in_simplex(v, {x, y, z})) out.push_back({x, y, z});
    return out;
}

bool is_primitive(const LatticeSimplex& t) {
    return lattice_points(t).size() == t.vertices().size();
}

bool is_unimodular(const std::vector<LatticePoint3>& s) {
    switch (s.size()) {
        case 2: return gcd3(sub(s[1], s[0])) == 1;
        case 3: return gcd3(cross(sub(s[1], s[0]), sub(s[2], s[0]))) == 1;
        case 4: {
            Coord d = det3(sub(s[1], s[0]), sub(s[2], s[0]), sub(s[3], s[0]));
            return d == 1 || d == -1;
        }
        default: return false;
    }
}

std::vector<LatticePoint3> gamma_points(int delta) {
    std::vector<LatticePoint3> out;
    for (Coord x = 0; x <= delta; ++x)
        for (Coord y = 0; x + y <= delta; ++y)
            for (Coord z = 0; x + y + z <= delta; ++z) out.push_back({x, y, z});
    return out;
}

Vec3 omega(int i) {
    switch (i) {
        case 1: return {-1, 0, 0};
        case 2: return {0, -1, 0};
        case 3: return {0, 0, -1};
        case 4: return {1, 1, 1};
        default: throw PreconditionError("direction index must be 1..4");
    }
}

int index_count(IndexSet s) { return __builtin_popcount(s); }

std::string index_set_string(IndexSet s) {
    std::string out = "{";
    for (int i = 1; i <= 4; ++i)
        if (has_index(s, i)) out += std::to_string(i);
    return out + "}";
}

IndexSet facet_membership(const LatticePoint3& p, int delta) {
    if (p[0] < 0 || p[1] < 0 || p[2] < 0 || p[0] + p[1] + p[2] > delta)
        throw PreconditionError("point " + to_string(p) + " is outside Gamma_" + std::to_string(delta));
    IndexSet s = 0;
    if (p[0] == 0) s |= 1u;
    if (p[1] == 0) s |= 2u;
    if (p[2] == 0) s |= 4u;
    if (p[0] + p[1] + p[2] == delta) s |= 8u;
    return s;
}

IndexSet exits(const std::vector<LatticePoint3>& s, int delta) {
    std::vector<IndexSet> memb;
    memb.reserve(s.size());
    for (const auto& p : s) memb.push_back(facet_membership(p, delta));
    IndexSet out = 0;
    for (int i = 1; i <= 4; ++i) {
        const LatticePoint3* first = nullptr;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (!has_index(memb[k], i)) continue;
            if (!first) {
                first = &s[k];
            } else if (s[k] != *first) {
                out |= 1u << (i - 1);
                break;
            }
        }
    }
    return out;
}

namespace {

std::vector<LatticePoint3> dedup(std::vector<LatticePoint3> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

using P2 = std::array<Coord, 2>;

Coord cross2(const P2& o, const P2& a, const P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; returns indices of strict hull vertices, counter-clockwise.
std::vector<std::size_t> hull2(const std::vector<P2>& pts) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return pts[a] < pts[b]; });
    if (idx.size() < 3) return idx;
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (auto i : idx) {
        while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
        h[k++] = i;
    }
    for (std::size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
        auto i = idx[j];
        while (k >= t && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
        h[k++] = i;
    }
    h.resize(k - 1);
    return h;
}

int dominant_axis(const Vec3& n) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(n[i]) > std::abs(n[k])) k = i;
    return k;
}

P2 drop(const LatticePoint3& p, int k) {
    if (k == 0) return {p[1], p[2]};
    if (k == 1) return {p[0], p[2]};
    return {p[0], p[1]};
}

}  // namespace

Coord twice_hull_area(const std::vector<std::array<Coord, 2>>& pts) {
    auto h = hull2(pts);
    Coord a = 0;
    for (std::size_t t = 1; t + 1 < h.size(); ++t) a += cross2(pts[h[0]], pts[h[t]], pts[h[t + 1]]);
    return a;
}

std::vector<Halfspace> hull_facets(const std::vector<LatticePoint3>& input) {
    auto pts = dedup(input);
    std::set<Halfspace> found;
    const std::size_t k = pts.size();
    bool spanning = false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l) {
                Vec3 n = cross(sub(pts[j], pts[i]), sub(pts[l], pts[i]));
                if (is_zero(n)) continue;
                bool pos = false, negs = false;
                for (std::size_t m = 0; m < k && !(pos && negs); ++m) {
                    Coord s = dot(n, sub(pts[m], pts[i]));
                    pos |= s > 0;
                    negs |= s < 0;
                }
                if (pos && negs) {
                    spanning = true;
                    continue;
                }
                if (!pos && !negs) continue;
                spanning = true;
                Vec3 out = primitive(pos ? neg(n) : n);
                found.insert({out, dot(out, pts[i])});
            }
    if (!spanning) return {};
    return {found.begin(), found.end()};
}

Rat polytope_volume(const std::vector<LatticePoint3>& input) {
    auto pts = dedup(input);
    auto facets = hull_facets(pts);
    if (facets.empty()) return Rat(0);
    const LatticePoint3& p0 = pts[0];
    Coord six_vol = 0;
    for (const auto& f : facets) {
        std::vector<LatticePoint3> on;
        for (const auto& p : pts)
            if (dot(f.normal, p) == f.offset) on.push_back(p);
        int ax = dominant_axis(f.normal);
        std::vector<P2> proj;
        for (const auto& p : on) proj.push_back(drop(p, ax));
        auto h = hull2(proj);
        for (std::size_t t = 1; t + 1 < h.size(); ++t) {
            Coord d = det3(sub(on[h[0]], p0), sub(on[h[t]], p0), sub(on[h[t + 1]], p0));
            six_vol += d < 0 ? -d : d;
        }
    }
    return make_rat(six_vol, 6);
}

std::vector<LatticePoint3> lattice_points_in_hull(const std::vector<LatticePoint3>& points) {
    auto facets = hull_facets(points);
    if (facets.empty()) throw DegenerateError("point set does not span space");
    LatticePoint3 lo = points[0], hi = points[0];
    for (const auto& p : points)
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    std::vector<LatticePoint3> out;
    for (Coord x = lo[0]; x <= hi[0]; ++x)
        for (Coord y = lo[1]; y <= hi[1]; ++y)
            for (Coord z = lo[2]; z <= hi[2]; ++z) {
                LatticePoint3 q{x, y, z};
                bool inside = std::all_of(facets.begin(), facets.end(),
                                          [&](const Halfspace& f) { return dot(f.normal, q) <= f.offset; });
                if (inside) out.push_back(q);
            }
    return out;
}

bool interiors_overlap(const std::array<LatticePoint3, 4>& a, const std::array<LatticePoint3, 4>& b) {
    auto edges = [](const std::array<LatticePoint3, 4>& t) {
        std::vector<Vec3> e;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) e.push_back(sub(t[j], t[i]));
        return e;
    };
    auto face_normals = [](const std::array<LatticePoint3, 4>& t) {
        std::vector<Vec3> n;
        for (int skip = 0; skip < 4; ++skip) {
            std::vector<LatticePoint3> f;
            for (int i = 0; i < 4; ++i)
                if (i != skip) f.push_back(t[i]);
            n.push_back(cross(sub(f[1], f[0]), sub(f[2], f[0])));
        }
        return n;
    };
    std::vector<Vec3> axes = face_normals(a);
    for (auto& n : face_normals(b)) axes.push_back(n);
    for (auto& ea : edges(a))
        for (auto& eb : edges(b)) axes.push_back(cross(ea, eb));
    for (const auto& ax : axes) {
        if (is_zero(ax)) continue;
        Coord amin = dot(ax, a[0]), amax = amin, bmin = dot(ax, b[0]), bmax = bmin;
        for (int i = 1; i < 4; ++i) {
            amin = std::min(amin, dot(ax, a[i]));
            amax = std::max(amax, dot(ax, a[i]));
            bmin = std::min(bmin, dot(ax, b[i]));
            bmax = std::max(bmax, dot(ax, b[i]));
        }
        if (amax <= bmin || bmax <= amin) return false;
    }
    return true;
}

}  // namespace tropline
