#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tropline/rational.hpp"

namespace tropline {

using Coord = std::int64_t;
using LatticePoint3 = std::array<Coord, 3>;
/// Integer vector; same representation as a lattice point.
using Vec3 = LatticePoint3;
using QPoint3 = std::array<Rat, 3>;

inline Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 scale(const Vec3& a, Coord k) { return {a[0] * k, a[1] * k, a[2] * k}; }
inline Vec3 neg(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Coord dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Coord det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }
inline bool is_zero(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Coord gcd3(const Vec3& v);
/// Divides by the gcd of the components. Throws DegenerateError on the zero vector.
Vec3 primitive(const Vec3& v);

QPoint3 to_q(const LatticePoint3& p);
QPoint3 qadd(const QPoint3& a, const QPoint3& b);
QPoint3 qsub(const QPoint3& a, const QPoint3& b);
QPoint3 qscale(const QPoint3& a, const Rat& t);
/// a + t*v
QPoint3 qaxpy(const QPoint3& a, const Rat& t, const Vec3& v);
Rat qdot(const QPoint3& a, const Vec3& b);
Rat qdot(const QPoint3& a, const QPoint3& b);

std::string to_string(const LatticePoint3& p);
std::string to_string(const QPoint3& p);

/// Dimension of the affine hull (-1 for an empty set).
int affine_dimension(const std::vector<LatticePoint3>& pts);

/// Ordered 2 to 4 affinely independent lattice points.
class LatticeSimplex {
public:
    explicit LatticeSimplex(std::vector<LatticePoint3> vertices);
    const std::vector<LatticePoint3>& vertices() const { return vertices_; }
    int dim() const { return static_cast<int>(vertices_.size()) - 1; }

private:
    std::vector<LatticePoint3> vertices_;
};

/// |det(v2-v1, v3-v1, v4-v1)| / 6. Throws DegenerateError("degenerate simplex").
Rat simplex_volume(const LatticeSimplex& t);
Rat simplex_volume(const LatticePoint3& a, const LatticePoint3& b, const LatticePoint3& c,
                   const LatticePoint3& d);

/// All lattice points of conv(vertices) for a simplex of any dimension 1..3.
std::vector<LatticePoint3> lattice_points(const LatticeSimplex& t);

/// True iff the only lattice points of the simplex are its vertices.
bool is_primitive(const LatticeSimplex& t);

/// Minimal lattice volume within its own affine lattice (unit segment, unit triangle, volume 1/6).
bool is_unimodular(const std::vector<LatticePoint3>& simplex);

/// Lattice points of Gamma_delta = conv{0, delta e1, delta e2, delta e3}, in lexicographic order.
std::vector<LatticePoint3> gamma_points(int delta);

/// Direction omega_i for i in 1..4: -e1, -e2, -e3, e1+e2+e3.
Vec3 omega(int i);

/// Subset of {1,2,3,4}; bit (i-1) set means index i is present.
using IndexSet = unsigned;
inline bool has_index(IndexSet s, int i) { return (s >> (i - 1)) & 1u; }
int index_count(IndexSet s);
std::string index_set_string(IndexSet s);

/// Facets F_i of Gamma_delta containing p: F1: x=0, F2: y=0, F3: z=0, F4: x+y+z=delta.
IndexSet facet_membership(const LatticePoint3& p, int delta);

/// Indices i such that conv(s) meets F_i in dimension at least 1.
IndexSet exits(const std::vector<LatticePoint3>& s, int delta);

/// Supporting plane <normal, p> <= offset of a full-dimensional point set.
struct Halfspace {
    Vec3 normal;
    Coord offset;
    friend bool operator<(const Halfspace& a, const Halfspace& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    }
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Facet inequalities of conv(points) with primitive outward normals. Empty if not 3-dimensional.
std::vector<Halfspace> hull_facets(const std::vector<LatticePoint3>& points);

/// Twice the area of the convex hull of planar integer points.
Coord twice_hull_area(const std::vector<std::array<Coord, 2>>& pts);

/// Exact volume of conv(points); zero when the points do not span space.
Rat polytope_volume(const std::vector<LatticePoint3>& points);

/// Lattice points of conv(points) for a 3-dimensional point set.
std::vector<LatticePoint3> lattice_points_in_hull(const std::vector<LatticePoint3>& points);

/// Exact separating-axis test: true iff the open interiors of two tetrahedra intersect.
bool interiors_overlap(const std::array<LatticePoint3, 4>& a, const std::array<LatticePoint3, 4>& b);

}  // namespace tropline
