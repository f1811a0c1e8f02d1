#include "tropline/builder.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tropline/error.hpp"
#include "tropline/kernels.hpp"

namespace tropline {

std::vector<LatticePoint3> LiftedTriangulation::points() const {
    std::vector<LatticePoint3> out;
    for (const auto& kv : lifting) out.push_back(kv.first);
    return out;
}

Triangulation LiftedTriangulation::tetrahedra() const {
    if (dim != 3) throw PreconditionError("tetrahedra() needs a 3-dimensional triangulation");
    Triangulation t;
    for (const auto& c : cells) t.push_back({c[0], c[1], c[2], c[3]});
    return t;
}

bool LiftedTriangulation::verify() const {
    if (dim == 0) return cells.size() == 1 && lifting.size() == 1;
    return verify_regular_cells(lifting, cells);
}

bool LiftedTriangulation::elementary() const {
    if (dim == 0) return true;
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return is_unimodular(c); });
}

namespace {

void normalize(LiftedTriangulation& t) {
    for (auto& c : t.cells) std::sort(c.begin(), c.end());
    std::sort(t.cells.begin(), t.cells.end());
}

LiftedTriangulation from_cells(int dim, const std::vector<LatticePoint3>& pts, const std::vector<Rat>& h,
                               const std::vector<std::vector<int>>& idx) {
    LiftedTriangulation t;
    t.dim = dim;
    for (std::size_t i = 0; i < pts.size(); ++i) t.lifting[pts[i]] = h[i];
    for (const auto& c : idx) {
        std::vector<LatticePoint3> cell;
        for (int i : c) cell.push_back(pts[i]);
        t.cells.push_back(cell);
    }
    normalize(t);
    return t;
}

// Induced 2D triangulation if every cell is a unimodular triangle.
std::optional<LiftedTriangulation> induce_elementary_2d(const std::vector<LatticePoint3>& pts,
                                                        const std::vector<Rat>& h) {
    auto cells = upper_cells(make_lifted_points(pts, h), Exec::serial);
    for (const auto& c : cells) {
        if (c.size() != 3) return std::nullopt;
        if (!is_unimodular({pts[c[0]], pts[c[1]], pts[c[2]]})) return std::nullopt;
    }
    return from_cells(2, pts, h, cells);
}

struct Form {
    Coord a, b, c;
};

Form draw_form(std::mt19937& rng) {
    std::uniform_int_distribution<Coord> diag(50, 100), mixed(-40, 40);
    Coord a = diag(rng), c = diag(rng), b = mixed(rng);
    return {a, b, c};
}

bool on_plane(const LatticePoint3& p, const Vec3& n, Coord c) { return dot(n, p) == c; }

}  // namespace

LiftedTriangulation point_cell(const LatticePoint3& p, const Rat& value) {
    LiftedTriangulation t;
    t.dim = 0;
    t.lifting[p] = value;
    t.cells = {{p}};
    return t;
}

LiftedTriangulation segment_re(const LatticePoint3& a, const LatticePoint3& b, const std::vector<Rat>& values) {
    Vec3 d = sub(b, a);
    Coord n = gcd3(d);
    if (n == 0) throw PreconditionError("segment endpoints coincide");
    if (static_cast<Coord>(values.size()) != n + 1)
        throw PreconditionError("segment needs one value per lattice point");
    Vec3 step = primitive(d);
    for (Coord k = 1; k < n; ++k)
        if (values[k - 1] + values[k + 1] >= 2 * values[k])
            throw PreconditionError("segment values are not strictly concave");
    LiftedTriangulation t;
    t.dim = 1;
    for (Coord k = 0; k <= n; ++k) t.lifting[add(a, scale(step, k))] = values[k];
    for (Coord k = 0; k < n; ++k) t.cells.push_back({add(a, scale(step, k)), add(a, scale(step, k + 1))});
    normalize(t);
    return t;
}

LiftedTriangulation triangle_re(int d, const LatticePoint3& o, const Vec3& u, const Vec3& v, std::uint32_t seed) {
    if (d < 1) throw PreconditionError("triangle side must be positive");
    if (gcd3(cross(u, v)) != 1) throw PreconditionError("triangle frame is not unimodular");
    std::vector<LatticePoint3> pts;
    std::vector<std::array<Coord, 2>> ij;
    for (Coord i = 0; i <= d; ++i)
        for (Coord j = 0; i + j <= d; ++j) {
            pts.push_back(add(o, add(scale(u, i), scale(v, j))));
            ij.push_back({i, j});
        }
    std::mt19937 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Form q = seed == 0 && attempt == 0 ? Form{1, 1, 1} : draw_form(rng);
        std::vector<Rat> h;
        for (const auto& [i, j] : ij) h.push_back(Rat(-(q.a * i * i + q.b * i * j + q.c * j * j)));
        if (d == 1) return from_cells(2, pts, h, {{0, 1, 2}});
        if (auto t = induce_elementary_2d(pts, h); t && static_cast<int>(t->cells.size()) == d * d) return *t;
    }
    throw InternalError("no elementary triangulation drawn for the triangle");
}

LiftedTriangulation triangle_re(int d, std::uint32_t seed) {
    return triangle_re(d, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, seed);
}

LiftedTriangulation lattice_triangle_re(const LatticePoint3& a, const LatticePoint3& b, const LatticePoint3& c,
                                        std::uint32_t seed) {
    Vec3 u = sub(b, a), v = sub(c, a);
    Vec3 n = cross(u, v);
    if (is_zero(n)) throw DegenerateError("degenerate triangle");
    // Two coordinates on which the plane projects injectively.
    int drop = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(n[k]) > std::abs(n[drop])) drop = k;
    int k0 = drop == 0 ? 1 : 0, k1 = drop == 2 ? 1 : 2;
    std::vector<LatticePoint3> pts;
    auto cube = lattice_points_in_hull({a, b, c, add(a, primitive(n))});
    for (const auto& p : cube)
        if (dot(primitive(n), sub(p, a)) == 0) pts.push_back(p);
    std::mt19937 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Form q = draw_form(rng);
        std::vector<Rat> h;
        for (const auto& p : pts) {
            Coord x = p[k0] - a[k0], y = p[k1] - a[k1];
            h.push_back(Rat(-(q.a * x * x + q.b * x * y + q.c * y * y)));
        }
        if (auto t = induce_elementary_2d(pts, h)) return *t;
    }
    throw InternalError("no elementary triangulation drawn for the lattice triangle");
}

LiftedTriangulation restrict_to_plane(const LiftedTriangulation& t, const Vec3& n, Coord c) {
    if (t.dim < 1) throw PreconditionError("cannot restrict a point");
    LiftedTriangulation r;
    r.dim = t.dim - 1;
    for (const auto& [p, v] : t.lifting)
        if (on_plane(p, n, c)) r.lifting[p] = v;
    std::set<std::vector<LatticePoint3>> seen;
    for (const auto& cell : t.cells) {
        std::vector<LatticePoint3> face;
        for (const auto& p : cell)
            if (on_plane(p, n, c)) face.push_back(p);
        if (static_cast<int>(face.size()) == t.dim && affine_dimension(face) == r.dim) seen.insert(face);
    }
    r.cells.assign(seen.begin(), seen.end());
    normalize(r);
    return r;
}

void add_affine(LiftedTriangulation& t, const AffineFunction& g) {
    for (auto& [p, v] : t.lifting) v += g(p);
}

LiftedTriangulation join(const LiftedTriangulation& f1, const LiftedTriangulation& f2) {
    for (const auto& kv : f1.lifting)
        if (f2.lifting.count(kv.first)) throw PreconditionError("join faces are not disjoint");
    if (f1.dim + f2.dim != 2) throw PreconditionError("join face dimensions must add up to two");
    std::vector<LatticePoint3> all = f1.points();
    for (const auto& p : f2.points()) all.push_back(p);
    if (affine_dimension(all) != 3) throw PreconditionError("join faces lie in a common plane");
    if (lattice_points_in_hull(all).size() != all.size())
        throw PreconditionError("join hull has lattice points outside both faces");
    LiftedTriangulation t;
    t.dim = 3;
    t.lifting = f1.lifting;
    t.lifting.insert(f2.lifting.begin(), f2.lifting.end());
    for (const auto& c1 : f1.cells)
        for (const auto& c2 : f2.cells) {
            auto c = c1;
            c.insert(c.end(), c2.begin(), c2.end());
            t.cells.push_back(c);
        }
    t.lambdas = f1.lambdas;
    t.lambdas.insert(t.lambdas.end(), f2.lambdas.begin(), f2.lambdas.end());
    normalize(t);
    if (!t.verify()) throw InternalError("join of regular faces is not regular");
    return t;
}

AffineFunction facet_form(const LiftedTriangulation& a, const LiftedTriangulation& b) {
    std::vector<LatticePoint3> common;
    for (const auto& kv : a.lifting)
        if (b.lifting.count(kv.first)) common.push_back(kv.first);
    if (affine_dimension(common) != 2) throw PreconditionError("pieces do not meet in a common facet");
    Vec3 n{0, 0, 0};
    for (std::size_t i = 1; i < common.size() && is_zero(n); ++i)
        for (std::size_t j = i + 1; j < common.size() && is_zero(n); ++j)
            n = cross(sub(common[i], common[0]), sub(common[j], common[0]));
    n = primitive(n);
    for (const auto& kv : b.lifting) {
        Coord s = dot(n, sub(kv.first, common[0]));
        if (s < 0) n = neg(n);
        if (s != 0) break;
    }
    AffineFunction L;
    L.g = to_q(n);
    L.c = Rat(-dot(n, common[0]));
    return L;
}

namespace {

struct GlueResult {
    LiftedTriangulation t;
    Rat lambda;
    AffineFunction form;
};

GlueResult glue_impl(const LiftedTriangulation& a, const LiftedTriangulation& b) {
    if (a.dim != 3 || b.dim != 3) throw PreconditionError("glue needs two 3-dimensional pieces");
    AffineFunction L = facet_form(a, b);
    for (const auto& [p, v] : a.lifting) {
        Rat s = L(p);
        if (s > 0) throw PreconditionError("pieces are not on opposite sides of the common facet");
        if (s == 0) {
            auto it = b.lifting.find(p);
            if (it == b.lifting.end()) throw PreconditionError("facet mismatch: " + to_string(p) + " only in the first piece");
            if (it->second != v) throw PreconditionError("liftings disagree on the common facet at " + to_string(p));
        }
    }
    for (const auto& [p, v] : b.lifting) {
        Rat s = L(p);
        if (s < 0) throw PreconditionError("pieces are not on opposite sides of the common facet");
        if (s == 0 && !a.lifting.count(p))
            throw PreconditionError("facet mismatch: " + to_string(p) + " only in the second piece");
    }
    std::vector<LatticePoint3> all = a.points();
    for (const auto& p : b.points())
        if (!a.lifting.count(p)) all.push_back(p);
    if (polytope_volume(all) != polytope_volume(a.points()) + polytope_volume(b.points()))
        throw PreconditionError("union of the pieces is not convex");

    LiftedTriangulation u;
    u.dim = 3;
    u.cells = a.cells;
    u.cells.insert(u.cells.end(), b.cells.begin(), b.cells.end());
    normalize(u);
    Rat lambda = 1;
    for (int round = 0; round < 64; ++round, lambda *= 2) {
        u.lifting = a.lifting;
        for (const auto& [p, v] : b.lifting)
            if (!a.lifting.count(p)) u.lifting[p] = v - lambda * L(p);
        if (verify_regular_cells(u.lifting, u.cells)) {
            u.lambdas = a.lambdas;
            u.lambdas.insert(u.lambdas.end(), b.lambdas.begin(), b.lambdas.end());
            u.lambdas.push_back(lambda);
            return {u, lambda, L};
        }
    }
    throw InternalError("no gluing parameter found");
}

AffineFunction scaled(const AffineFunction& f, const Rat& k) { return {f.c * k, qscale(f.g, k)}; }

}  // namespace

LiftedTriangulation glue(const LiftedTriangulation& a, const LiftedTriangulation& b) { return glue_impl(a, b).t; }

LiftedTriangulation prism_fill(const LiftedTriangulation& t0, const LiftedTriangulation& t1) {
    if (t0.dim != 2) throw PreconditionError("prism bottom must be a triangulated triangle");
    if (t1.dim != 2 && t1.dim != 0) throw PreconditionError("prism top must be a triangle or a point");
    Coord h = t0.lifting.begin()->first[2];
    Coord d = 0, e = 0;
    for (const auto& [p, v] : t0.lifting) {
        if (p[2] != h) throw PreconditionError("prism bottom is not horizontal");
        d = std::max(d, p[0]);
    }
    for (const auto& [p, v] : t1.lifting) {
        if (p[2] != h + 1) throw PreconditionError("prism top is not one level above the bottom");
        e = std::max(e, p[0]);
    }
    if (d <= e) throw PreconditionError("prism fill needs d > e");
    const LatticePoint3 apex0{0, 0, h + 1}, far0{d, 0, h};
    if (!t1.lifting.count(apex0)) throw PreconditionError("prism top does not contain its corner");

    LiftedTriangulation d0 = join(t0, point_cell(apex0, t1.lifting.at(apex0)));
    if (e == 0) return d0;

    std::vector<Rat> bottom_edge, top_edge;
    for (Coord k = 0; k <= d; ++k) bottom_edge.push_back(t0.lifting.at({d - k, k, h}));
    for (Coord k = 0; k <= e; ++k) top_edge.push_back(t1.lifting.at({0, k, h + 1}));
    LiftedTriangulation d2 = join(segment_re(far0, {0, d, h}, bottom_edge), segment_re(apex0, {0, e, h + 1}, top_edge));
    LiftedTriangulation d1 = join(t1, point_cell(far0, t0.lifting.at(far0)));

    GlueResult first = glue_impl(d0, d2);
    // d1 meets the union inside d2, whose lifting was lowered by lambda * L.
    add_affine(d1, scaled(first.form, -first.lambda));
    return glue(first.t, d1);
}

namespace {

struct Frame {
    LatticePoint3 origin;
    std::array<Vec3, 3> cols;  // images of e1, e2, e3
    std::array<Vec3, 3> inv;   // rows of the inverse matrix
    Coord side = 0;
};

Frame simplex_frame(const std::array<LatticePoint3, 4>& c) {
    Frame f;
    f.origin = c[0];
    Vec3 a = sub(c[1], c[0]);
    f.side = gcd3(a);
    if (f.side == 0) throw PreconditionError("simplex corners coincide");
    for (int k = 0; k < 3; ++k) {
        Vec3 w = sub(c[k + 1], c[0]);
        if (gcd3(w) != f.side || w[0] % f.side || w[1] % f.side || w[2] % f.side)
            throw PreconditionError("simplex is not congruent to a standard simplex");
        f.cols[k] = {w[0] / f.side, w[1] / f.side, w[2] / f.side};
    }
    Coord det = det3(f.cols[0], f.cols[1], f.cols[2]);
    if (det != 1 && det != -1) throw PreconditionError("simplex is not congruent to a standard simplex");
    // Inverse rows: cross products of the columns divided by det.
    f.inv[0] = scale(cross(f.cols[1], f.cols[2]), det);
    f.inv[1] = scale(cross(f.cols[2], f.cols[0]), det);
    f.inv[2] = scale(cross(f.cols[0], f.cols[1]), det);
    return f;
}

LatticePoint3 to_world(const Frame& f, const LatticePoint3& q) {
    return add(f.origin, add(scale(f.cols[0], q[0]), add(scale(f.cols[1], q[1]), scale(f.cols[2], q[2]))));
}

LatticePoint3 to_standard(const Frame& f, const LatticePoint3& p) {
    Vec3 d = sub(p, f.origin);
    return {dot(f.inv[0], d), dot(f.inv[1], d), dot(f.inv[2], d)};
}

template <class Map>
LiftedTriangulation transform(const LiftedTriangulation& t, Map m) {
    LiftedTriangulation r;
    r.dim = t.dim;
    r.lambdas = t.lambdas;
    for (const auto& [p, v] : t.lifting) r.lifting[m(p)] = v;
    for (const auto& c : t.cells) {
        std::vector<LatticePoint3> cell;
        for (const auto& p : c) cell.push_back(m(p));
        r.cells.push_back(cell);
    }
    normalize(r);
    return r;
}

}  // namespace

LiftedTriangulation extend_facet(const LiftedTriangulation& facet, const std::array<LatticePoint3, 4>& corners,
                                 std::uint32_t seed) {
    Frame fr = simplex_frame(corners);
    const Coord s = fr.side;
    LiftedTriangulation bottom = transform(facet, [&](const LatticePoint3& p) { return to_standard(fr, p); });
    if (bottom.dim != 2) throw PreconditionError("facet triangulation must be 2-dimensional");
    if (static_cast<Coord>(bottom.lifting.size()) != (s + 1) * (s + 2) / 2)
        throw PreconditionError("facet triangulation does not cover the facet's lattice points");
    for (const auto& [q, v] : bottom.lifting)
        if (q[2] != 0 || q[0] < 0 || q[1] < 0 || q[0] + q[1] > s)
            throw PreconditionError("facet triangulation leaves the facet");

    std::optional<LiftedTriangulation> acc;
    for (Coord k = 1; k <= s; ++k) {
        LiftedTriangulation top = k < s ? triangle_re(static_cast<int>(s - k), {0, 0, k}, {1, 0, 0}, {0, 1, 0},
                                                      seed == 0 ? 0 : seed * 7919u + static_cast<std::uint32_t>(k))
                                        : point_cell({0, 0, s}, Rat(0));
        LiftedTriangulation below = acc ? restrict_to_plane(*acc, {0, 0, 1}, k - 1) : bottom;
        LiftedTriangulation layer = prism_fill(below, top);
        acc = acc ? glue(*acc, layer) : layer;
    }
    return transform(*acc, [&](const LatticePoint3& q) { return to_world(fr, q); });
}

LiftedTriangulation fill_truncated(const LiftedTriangulation& t, const std::vector<Chop>& chops, std::uint32_t seed) {
    for (std::size_t i = 0; i < chops.size(); ++i) {
        const auto& c = chops[i].corners;
        Frame fr = simplex_frame(c);
        (void)fr;
        if (t.lifting.count(c[3])) throw PreconditionError("invalid truncation: chopped corner is still present");
        for (int k = 0; k < 3; ++k)
            if (!t.lifting.count(c[k])) throw PreconditionError("invalid truncation: cut facet corner missing");
        for (std::size_t j = 0; j < i; ++j)
            if (interiors_overlap(c, chops[j].corners))
                throw PreconditionError("invalid truncation: chopped corners overlap");
    }
    LiftedTriangulation out = t;
    for (std::size_t i = 0; i < chops.size(); ++i) {
        const auto& c = chops[i].corners;
        Vec3 n = primitive(cross(sub(c[1], c[0]), sub(c[2], c[0])));
        LiftedTriangulation facet = restrict_to_plane(out, n, dot(n, c[0]));
        LiftedTriangulation piece = extend_facet(facet, c, seed == 0 ? 0 : seed + static_cast<std::uint32_t>(i));
        out = glue(out, piece);
    }
    return out;
}

Tetrahedron omega_tetrahedron(int delta) {
    return {LatticePoint3{0, 0, 0}, LatticePoint3{0, 0, 1}, LatticePoint3{delta - 1, 1, 0},
            LatticePoint3{1, 0, delta - 1}};
}

LiftedTriangulation build_family_triangulation(int delta, std::uint32_t seed) {
    if (delta < 1) throw PreconditionError("degree must be positive");
    const Coord d = delta;
    if (d == 1) {
        LiftedTriangulation t;
        for (const auto& p : gamma_points(1)) t.lifting[p] = 0;
        t.cells = {gamma_points(1)};
        return t;
    }
    const LatticePoint3 O{0, 0, 0}, Z1{0, 0, 1}, Zd{0, 0, d}, A{d - 1, 1, 0}, B{1, 0, d - 1}, X{d, 0, 0},
        Y1{0, 1, 0}, Y1p{0, 1, d - 1}, Yd{0, d, 0};

    LiftedTriangulation omega_piece;
    for (const auto& p : omega_tetrahedron(delta)) omega_piece.lifting[p] = 0;
    omega_piece.cells = {{O, Z1, A, B}};
    normalize(omega_piece);

    // Delta_2: the z-axis from Z1 to Zd joined with the segment AB.
    std::vector<Rat> zvals;
    for (Coord k = 1; k <= d; ++k) zvals.push_back(Rat(-(k - 1) * (k - 1)));
    LiftedTriangulation acc = glue(omega_piece, join(segment_re(Z1, Zd, zvals), segment_re(A, B, {Rat(0), Rat(0)})));

    // Delta_1: a triangle in y = 0 coned to A.
    LiftedTriangulation base = lattice_triangle_re(O, X, B, seed);
    auto g1 = fit_affine({{O, acc.lifting.at(O) - base.lifting.at(O)}, {B, acc.lifting.at(B) - base.lifting.at(B)}});
    add_affine(base, *g1);
    acc = glue(acc, join(base, point_cell(A, acc.lifting.at(A))));

    // Delta_3: the whole z-axis joined with Y1..A. The values on Y1..A are
    // taken from the triangle used later for Delta_4, so the two agree up to
    // an affine function.
    LiftedTriangulation tb = triangle_re(delta - 1, Y1, {1, 0, 0}, {0, 0, 1}, seed);
    std::vector<Rat> axis, yvals;
    for (Coord k = 0; k <= d; ++k) axis.push_back(acc.lifting.at({0, 0, k}));
    Rat shift = acc.lifting.at(A) - tb.lifting.at(A);
    for (Coord x = 0; x <= d - 1; ++x) yvals.push_back(tb.lifting.at({x, 1, 0}) + shift);
    acc = glue(acc, join(segment_re(O, Zd, axis), segment_re(Y1, A, yvals)));

    // Delta_4: the side-(d-1) triangle in y = 1 coned to Zd.
    std::vector<std::pair<LatticePoint3, Rat>> edge;
    for (Coord x = 0; x <= d - 1; ++x) edge.push_back({{x, 1, 0}, acc.lifting.at({x, 1, 0}) - tb.lifting.at({x, 1, 0})});
    auto g4 = fit_affine(edge);
    if (!g4) throw InternalError("edge values of the y = 1 triangle are not affinely related");
    add_affine(tb, *g4);
    acc = glue(acc, join(tb, point_cell(Zd, acc.lifting.at(Zd))));

    LiftedTriangulation full = fill_truncated(acc, {Chop{{Y1, A, Y1p, Yd}}}, seed);
    if (static_cast<Coord>(full.cells.size()) != d * d * d) throw InternalError("wrong number of tetrahedra");
    return full;
}

TropicalPolynomial to_polynomial(const LiftedTriangulation& t) { return TropicalPolynomial(t.lifting); }

TropicalPolynomial build_family_surface(int delta, std::uint32_t seed) {
    return to_polynomial(build_family_triangulation(delta, seed));
}

LiftedTriangulation build_quadric_triangulation(std::uint32_t seed, int facet) {
    const LatticePoint3 o{0, 0, 0}, x{2, 0, 0}, y{0, 2, 0}, z{0, 0, 2};
    std::array<LatticePoint3, 4> c;
    switch (facet) {
        case 1: c = {o, y, z, x}; break;
        case 2: c = {o, x, z, y}; break;
        case 3: c = {o, x, y, z}; break;
        case 4: c = {x, y, z, o}; break;
        default: throw PreconditionError("facet index must be 1..4");
    }
    auto half = [](const Vec3& v) { return Vec3{v[0] / 2, v[1] / 2, v[2] / 2}; };
    LiftedTriangulation base = triangle_re(2, c[0], half(sub(c[1], c[0])), half(sub(c[2], c[0])), seed);
    return extend_facet(base, c, seed);
}

}  // namespace tropline
