#include "tropline/lines.hpp"

#include <algorithm>
#include <set>

#include "tropline/error.hpp"
#include "tropline/linalg.hpp"

namespace tropline {

std::string type_name(LineType t) {
    switch (t) {
        case LineType::t12_34: return "(12)(34)";
        case LineType::t13_24: return "(13)(24)";
        case LineType::t14_23: return "(14)(23)";
        case LineType::t1234: return "(1234)";
    }
    return "?";
}

LineType parse_line_type(const std::string& s) {
    if (s == "(12)(34)") return LineType::t12_34;
    if (s == "(13)(24)") return LineType::t13_24;
    if (s == "(14)(23)") return LineType::t14_23;
    if (s == "(1234)") return LineType::t1234;
    throw ParseError("unknown line type '" + s + "'", 0);
}

std::array<int, 2> rays_at_v1(LineType t) {
    switch (t) {
        case LineType::t13_24: return {1, 3};
        case LineType::t14_23: return {1, 4};
        default: return {1, 2};
    }
}

std::array<int, 2> rays_at_v2(LineType t) {
    switch (t) {
        case LineType::t13_24: return {2, 4};
        case LineType::t14_23: return {2, 3};
        default: return {3, 4};
    }
}

Vec3 bounded_direction(LineType t) {
    switch (t) {
        case LineType::t12_34: return {1, 1, 0};
        case LineType::t13_24: return {1, 0, 1};
        case LineType::t14_23: return {0, -1, -1};
        case LineType::t1234: break;
    }
    return {0, 0, 0};
}

namespace {

// t with d = t*u, or nullopt when d is not parallel to u.
std::optional<Rat> multiple_of(const QPoint3& d, const Vec3& u) {
    std::optional<Rat> t;
    for (int k = 0; k < 3; ++k) {
        if (u[k] == 0) {
            if (d[k] != 0) return std::nullopt;
            continue;
        }
        Rat r = d[k] / Rat(u[k]);
        if (t && *t != r) return std::nullopt;
        t = r;
    }
    return t;
}

QPoint3 qaxpy_q(const QPoint3& a, const Rat& t, const QPoint3& v) {
    return {a[0] + t * v[0], a[1] + t * v[1], a[2] + t * v[2]};
}

}  // namespace

Rat bounded_length(const TropicalLine& l) {
    if (l.type == LineType::t1234) return Rat(0);
    auto t = multiple_of(qsub(l.v2, l.v1), bounded_direction(l.type));
    return t ? *t : Rat(0);
}

void validate(const TropicalLine& l) {
    if (l.type == LineType::t1234) {
        if (l.v1 != l.v2) throw PreconditionError("type (1234) requires v1 = v2");
        return;
    }
    auto t = multiple_of(qsub(l.v2, l.v1), bounded_direction(l.type));
    if (!t || *t <= 0)
        throw PreconditionError("v2 - v1 is not a positive multiple of the bounded direction of type " +
                                type_name(l.type));
}

std::vector<LineEdge> line_edges(const TropicalLine& l) {
    std::vector<LineEdge> out;
    auto a = rays_at_v1(l.type);
    auto b = rays_at_v2(l.type);
    for (int i = 1; i <= 4; ++i) {
        bool at1 = (i == a[0] || i == a[1]);
        (void)b;
        out.push_back({i, at1 ? l.v1 : l.v2, omega(i), std::nullopt});
    }
    if (!l.degenerate()) out.push_back({5, l.v1, bounded_direction(l.type), bounded_length(l)});
    return out;
}

std::vector<EnvelopePiece> envelope(const TropicalPolynomial& f, const QPoint3& origin, const QPoint3& dir,
                                    const std::optional<Rat>& length) {
    const auto ex = f.exponents();
    const auto co = f.coefficients();
    const std::size_t n = ex.size();
    std::vector<Rat> c(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = co[i] + qdot(origin, ex[i]);
        s[i] = qdot(dir, ex[i]);
    }
    std::vector<EnvelopePiece> out;
    Rat t = 0;
    while (true) {
        Rat best;
        std::vector<int> m;
        for (std::size_t i = 0; i < n; ++i) {
            Rat v = c[i] + t * s[i];
            if (m.empty() || v > best) {
                best = v;
                m.assign(1, static_cast<int>(i));
            } else if (v == best) {
                m.push_back(static_cast<int>(i));
            }
        }
        if (length && *length == t) {
            // Zero-length segment: the single point is the whole edge.
            out.push_back({t, t, m});
            return out;
        }
        Rat smax = s[m[0]];
        for (int i : m) smax = std::max(smax, s[i]);
        std::vector<int> p;
        for (int i : m)
            if (s[i] == smax) p.push_back(i);
        std::optional<Rat> next;
        for (std::size_t i = 0; i < n; ++i) {
            if (s[i] <= smax) continue;
            Rat tb = t + (best - (c[i] + t * s[i])) / (s[i] - smax);
            if (!next || tb < *next) next = tb;
        }
        if (length && (!next || *next >= *length)) next = *length;
        out.push_back({t, next, p});
        if (!next || (length && *next == *length)) return out;
        t = *next;
    }
}

EdgeReport contains_edge(const TropicalPolynomial& f, const QPoint3& origin, const Vec3& dir,
                         const std::optional<Rat>& length) {
    if (is_zero(dir)) throw PreconditionError("edge direction must be nonzero");
    EdgeReport r;
    r.contained = true;
    for (auto& piece : envelope(f, origin, to_q(dir), length)) {
        if (piece.argmax.size() < 2) r.contained = false;
        r.pieces.push_back(std::move(piece.argmax));
    }
    return r;
}

bool contains_line(const TropicalPolynomial& f, const TropicalLine& l) {
    validate(l);
    if (l.degenerate()) {
        if (evaluate(f, l.v1).argmax.size() < 2) return false;
    }
    for (const auto& e : line_edges(l))
        if (!contains_edge(f, e.origin, e.dir, e.length).contained) return false;
    return true;
}

bool point_on_line(const TropicalLine& l, const QPoint3& p) {
    for (const auto& e : line_edges(l)) {
        auto t = multiple_of(qsub(p, e.origin), e.dir);
        if (!t || *t < 0) continue;
        if (e.length && *t > *e.length) continue;
        return true;
    }
    return false;
}

namespace {

CellRef locate_on(const SurfaceComplex& x, const QPoint3& p) {
    auto c = x.locate(p);
    if (!c) throw PreconditionError("line vertex " + to_string(p) + " is not on the surface");
    return *c;
}

std::vector<CellRef> cells_of(const SurfaceComplex& x, const std::vector<std::vector<int>>& pieces) {
    std::set<CellRef> out;
    for (const auto& p : pieces) {
        auto c = x.cell_of_dual(p);
        if (!c) throw InternalError("argmax set along an edge is not a face of the subdivision");
        out.insert(*c);
    }
    return {out.begin(), out.end()};
}

}  // namespace

LineData line_data(const SurfaceComplex& x, const TropicalLine& l) {
    if (!contains_line(x.f, l)) throw PreconditionError("line is not contained in the surface");
    LineData d;
    d.kappa = l.type;
    d.V1 = locate_on(x, l.v1);
    d.V2 = locate_on(x, l.v2);
    for (const auto& e : line_edges(l)) {
        auto r = contains_edge(x.f, e.origin, e.dir, e.length);
        d.C[e.index - 1] = cells_of(x, r.pieces);
    }
    if (l.degenerate()) d.C[4] = {d.V1};
    return d;
}

bool passes_through_vertex(const SurfaceComplex& x, const TropicalLine& l) {
    for (const auto& v : x.vertices)
        if (point_on_line(l, v)) return true;
    return false;
}

TropicalLine FamilyWitness::member(const Rat& t) const {
    TropicalLine l;
    l.type = member_type;
    l.v1 = qaxpy_q(base.v1, t, rate1);
    l.v2 = qaxpy_q(base.v2, t, rate2);
    return l;
}

std::vector<Rat> family_samples(const std::optional<Rat>& t_max) {
    std::vector<Rat> out;
    for (int k = 1; k <= 10; ++k) out.push_back(t_max ? Rat(*t_max * k / 11) : Rat(k));
    return out;
}

bool verify_family(const TropicalPolynomial& f, FamilyWitness& w) {
    w.samples = family_samples(w.t_max);
    std::vector<TropicalLine> members;
    for (const auto& t : w.samples) {
        TropicalLine m = w.member(t);
        try {
            validate(m);
        } catch (const PreconditionError&) {
            return false;
        }
        if (!contains_line(f, m)) return false;
        members.push_back(m);
    }
    // Candidate common points on the base line, far enough out on the rays
    // that every member's ray has caught up.
    Rat reach = 1;
    for (int k = 0; k < 3; ++k) reach = std::max<Rat>({reach, Rat(abs(w.rate1[k]) + 1), Rat(abs(w.rate2[k]) + 1)});
    Rat far = w.samples.back() * reach * 4;
    Coord big = floor(far).get_si() + 2;
    TropicalLine base = w.base;
    if (base.degenerate()) base.type = w.member_type;
    std::vector<std::pair<int, QPoint3>> cand;
    for (const auto& e : line_edges(base)) {
        if (e.length) {
            cand.push_back({5, e.origin});
            cand.push_back({5, qaxpy(e.origin, *e.length / 2, e.dir)});
            cand.push_back({5, qaxpy(e.origin, *e.length, e.dir)});
            continue;
        }
        for (Coord k : {Coord(1), Coord(2), big, big + 1}) cand.push_back({e.index, qaxpy(e.origin, Rat(k), e.dir)});
    }
    std::vector<std::pair<int, QPoint3>> common;
    for (const auto& [edge, p] : cand) {
        bool all = true;
        for (const auto& m : members)
            if (!point_on_line(m, p)) {
                all = false;
                break;
            }
        if (all) common.push_back({edge, p});
    }
    if (common.empty()) return false;
    const auto& first = common.front();
    const std::pair<int, QPoint3>* second = nullptr;
    for (const auto& c : common)
        if (c.first != first.first && c.second != first.second) {
            second = &c;
            break;
        }
    if (!second)
        for (const auto& c : common)
            if (c.second != first.second) {
                second = &c;
                break;
            }
    if (!second) return false;
    w.anchors = {first.second, second->second};
    return true;
}

namespace {

Vec3 lattice_direction(const QPoint3& r) {
    BigInt l = 1;
    for (const auto& c : r) l = lcm(l, BigInt(c.get_den()));
    Vec3 v{};
    for (int k = 0; k < 3; ++k) {
        Rat s = r[k] * Rat(l);
        v[k] = s.get_num().get_si();
    }
    return primitive(v);
}

std::optional<Rat> min_bound(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

// End of the first envelope piece from p along dir, if the piece keeps the
// maximum attained twice; the inner optional is empty for an unbounded piece.
std::optional<std::optional<Rat>> first_exit(const TropicalPolynomial& f, const QPoint3& p, const QPoint3& dir) {
    auto env = envelope(f, p, dir, std::nullopt);
    if (env.front().argmax.size() < 2) return std::nullopt;
    return env.front().end;
}

// Moves v1 at rate r1 and v2 at rate r2 and returns a verified family, if the
// motion keeps the line on the surface for small t > 0.
std::optional<FamilyWitness> try_motion(const SurfaceComplex& x, const TropicalLine& l, LineType member_type,
                                        const QPoint3& r1, const QPoint3& r2, int moving) {
    std::optional<Rat> t_max;
    for (int k = 1; k <= 2; ++k) {
        const QPoint3& r = k == 1 ? r1 : r2;
        if (r == QPoint3{0, 0, 0}) continue;
        auto ex = first_exit(x.f, k == 1 ? l.v1 : l.v2, r);
        if (!ex) return std::nullopt;
        t_max = min_bound(t_max, *ex);
    }
    Vec3 u = bounded_direction(member_type);
    auto sigma = multiple_of(qsub(r2, r1), u);
    if (!sigma) throw InternalError("vertex motion does not preserve the bounded direction");
    Rat s = l.degenerate() ? Rat(0) : bounded_length(l);
    if (*sigma < 0) t_max = min_bound(t_max, s / -*sigma);
    if (*sigma == 0 && s == 0) return std::nullopt;
    if (t_max && *t_max <= 0) return std::nullopt;
    FamilyWitness w;
    w.base = l;
    w.member_type = member_type;
    w.moving_vertex = moving;
    w.rate1 = r1;
    w.rate2 = r2;
    w.direction = lattice_direction(moving == 1 ? r1 : r2);
    w.t_max = t_max;
    if (!verify_family(x.f, w)) return std::nullopt;
    return w;
}

const QPoint3 kZero{0, 0, 0};

// Vertex k moves along the bounded edge; lengthening is tried first.
std::optional<FamilyWitness> move_along_segment(const SurfaceComplex& x, const TropicalLine& l, int k) {
    QPoint3 u = to_q(bounded_direction(l.type));
    QPoint3 nu = qscale(u, Rat(-1));
    for (const QPoint3& w : k == 2 ? std::array<QPoint3, 2>{u, nu} : std::array<QPoint3, 2>{nu, u}) {
        auto r = k == 1 ? try_motion(x, l, l.type, w, kZero, 1) : try_motion(x, l, l.type, kZero, w, 2);
        if (r) return r;
    }
    return std::nullopt;
}

Vec3 one_cell_direction(const SurfaceComplex& x, const CellRef& c) {
    auto pts = x.dual_points(c);
    return primitive(cross(sub(pts[1], pts[0]), sub(pts[2], pts[0])));
}

// Case (1,2) iii: the 2-vertex `hi` slides along its trespassing ray j and the
// 1-vertex follows along its 1-cell.
std::optional<FamilyWitness> move_along_ray(const SurfaceComplex& x, const TropicalLine& l, int hi, int j,
                                            const CellRef& lo_cell) {
    Vec3 e = one_cell_direction(x, lo_cell);
    Vec3 u = bounded_direction(l.type);
    for (int sign : {1, -1}) {
        QPoint3 w = to_q(scale(omega(j), sign));
        // rate2 - rate1 = sigma*u with rate_hi = w, rate_lo = mu*e.
        RatMatrix a(3, std::vector<Rat>(2));
        std::vector<Rat> b(3);
        for (int k = 0; k < 3; ++k) {
            Rat ek = e[k], uk = u[k];
            if (hi == 2) {  // w - mu e = sigma u
                a[k] = {ek, uk};
                b[k] = w[k];
            } else {  // mu e - w = sigma u
                a[k] = {ek, -uk};
                b[k] = w[k];
            }
        }
        auto sol = solve_linear(a, b);
        if (!sol.consistent) continue;
        QPoint3 lo_rate = qscale(to_q(e), sol.x[0]);
        auto r = hi == 2 ? try_motion(x, l, l.type, lo_rate, w, 2) : try_motion(x, l, l.type, w, lo_rate, 1);
        if (r) return r;
    }
    return std::nullopt;
}

}  // namespace

std::optional<FamilyWitness> separate_degenerate(const SurfaceComplex& x, const TropicalLine& l) {
    if (!l.degenerate()) throw PreconditionError("vertex separation needs a degenerate line");
    for (LineType t : {LineType::t12_34, LineType::t13_24, LineType::t14_23}) {
        auto p = rays_at_v1(t);
        auto q = rays_at_v2(t);
        QPoint3 d1 = to_q(add(omega(p[0]), omega(p[1])));
        QPoint3 d2 = to_q(add(omega(q[0]), omega(q[1])));
        if (auto r = try_motion(x, l, t, d1, kZero, 1)) return r;
        if (auto r = try_motion(x, l, t, kZero, d2, 2)) return r;
    }
    return std::nullopt;
}

Classification classify_line(const SurfaceComplex& x, const TropicalLine& l) {
    if (x.delta < 3) throw PreconditionError("classification theorem requires degree >= 3");
    LineData d = line_data(x, l);
    if (l.degenerate()) {
        if (auto w = separate_degenerate(x, l)) return *w;
        return Isolated{};
    }
    auto fail = [&](const char* what) -> Classification {
        throw Error(std::string("no verified perturbation in case ") + what);
    };
    int lo = d.V1.dim <= d.V2.dim ? 1 : 2;
    int hi = 3 - lo;
    const CellRef& Vlo = lo == 1 ? d.V1 : d.V2;
    const CellRef& Vhi = lo == 1 ? d.V2 : d.V1;
    auto lo_rays = lo == 1 ? rays_at_v1(l.type) : rays_at_v2(l.type);
    auto hi_rays = lo == 1 ? rays_at_v2(l.type) : rays_at_v1(l.type);
    auto tr = [&](int i) { return d.trespassing(i); };
    bool lo_side = tr(lo_rays[0]) || tr(lo_rays[1]) || tr(5);

    if (Vhi.dim < 2) return Isolated{};
    if (Vlo.dim == 0) {  // (0,2)
        if (tr(hi_rays[0]) || tr(hi_rays[1])) return Isolated{};
        if (auto w = move_along_segment(x, l, hi)) return *w;
        return fail("(0,2)");
    }
    if (Vlo.dim == 1) {  // (1,2)
        bool tc = tr(hi_rays[0]), td = tr(hi_rays[1]);
        if (tc && td) return Isolated{};
        if (tc || td) {
            if (lo_side) return Isolated{};
            int j = td ? hi_rays[1] : hi_rays[0];
            if (auto w = move_along_ray(x, l, hi, j, Vlo)) return *w;
            return fail("(1,2) iii");
        }
        if (lo_side) {
            if (auto w = move_along_segment(x, l, hi)) return *w;
            return fail("(1,2) iv");
        }
        throw InternalError("no trespassing edge with vertex dimensions (1,2)");
    }
    // (2,2)
    bool any_movable = false;
    for (int k : {1, 2}) {
        auto rays = k == 1 ? rays_at_v1(l.type) : rays_at_v2(l.type);
        if (tr(rays[0]) || tr(rays[1])) continue;
        any_movable = true;
        if (auto w = move_along_segment(x, l, k)) return *w;
    }
    if (any_movable) return fail("(2,2)");
    return Isolated{};
}

TwoPointResult lines_through(const QPoint3& p, const QPoint3& q) {
    if (p == q) throw PreconditionError("the two points must be distinct");
    QPoint3 d = qsub(q, p);
    for (int k = 0; k < 3; ++k)
        if (d[k] == 0) return InfiniteLines{"Q - P has a zero coordinate"};
    if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2]) return InfiniteLines{"Q - P has two equal coordinates"};

    std::set<std::pair<int, std::array<std::string, 6>>> seen;
    std::vector<TropicalLine> found;
    for (LineType t : {LineType::t12_34, LineType::t13_24, LineType::t14_23}) {
        TropicalLine shape{t, kZero, kZero};
        auto at1 = rays_at_v1(t);
        Vec3 u = bounded_direction(t);
        auto on_v2 = [&](int e) { return e != 5 && e != at1[0] && e != at1[1]; };
        auto dir_of = [&](int e) { return e == 5 ? u : omega(e); };
        for (int ep = 1; ep <= 5; ++ep)
            for (int eq = 1; eq <= 5; ++eq) {
                // Unknowns v1 (3), s, alpha_p, alpha_q.
                RatMatrix a(6, std::vector<Rat>(6, Rat(0)));
                std::vector<Rat> b(6);
                for (int k = 0; k < 3; ++k) {
                    a[k][k] = 1;
                    a[k][3] = on_v2(ep) ? u[k] : 0;
                    a[k][4] = dir_of(ep)[k];
                    b[k] = p[k];
                    a[3 + k][k] = 1;
                    a[3 + k][3] = on_v2(eq) ? u[k] : 0;
                    a[3 + k][5] = dir_of(eq)[k];
                    b[3 + k] = q[k];
                }
                auto sol = solve_linear(a, b);
                if (!sol.consistent || !sol.unique) continue;
                const auto& x = sol.x;
                Rat s = x[3];
                if (s <= 0 || x[4] < 0 || x[5] < 0) continue;
                if ((ep == 5 && x[4] > s) || (eq == 5 && x[5] > s)) continue;
                TropicalLine l{t, {x[0], x[1], x[2]}, kZero};
                l.v2 = qaxpy(l.v1, s, u);
                std::array<std::string, 6> key;
                for (int k = 0; k < 3; ++k) {
                    key[k] = to_string(l.v1[k]);
                    key[3 + k] = to_string(l.v2[k]);
                }
                if (seen.insert({static_cast<int>(t), key}).second) found.push_back(l);
            }
    }
    if (found.size() != 1)
        throw InternalError("expected exactly one line through two generic points, found " +
                            std::to_string(found.size()));
    const auto& l = found.front();
    validate(l);
    if (!point_on_line(l, p) || !point_on_line(l, q)) throw InternalError("constructed line misses a given point");
    return l;
}

}  // namespace tropline
