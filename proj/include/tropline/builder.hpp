#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tropline/linalg.hpp"
#include "tropline/polynomial.hpp"
#include "tropline/subdivision.hpp"

namespace tropline {

/// Lattice triangulation of a point, segment, polygon or polytope, with a
/// lifting on every lattice point that induces it.
struct LiftedTriangulation {
    int dim = 3;                                   // dimension of the cells
    LiftingFunction lifting;                       // all lattice points of the support
    std::vector<std::vector<LatticePoint3>> cells; // sorted vertex lists, sorted
    std::vector<Rat> lambdas;                      // glue parameters, in gluing order

    std::vector<LatticePoint3> points() const;
    /// Only for dim == 3.
    Triangulation tetrahedra() const;
    bool verify() const;
    /// True iff every cell is a unimodular simplex.
    bool elementary() const;
};

LiftedTriangulation point_cell(const LatticePoint3& p, const Rat& value);

/// Unit subdivision of the segment a..b into its primitive steps; `values`
/// holds the heights from a to b and must be strictly concave.
LiftedTriangulation segment_re(const LatticePoint3& a, const LatticePoint3& b, const std::vector<Rat>& values);

/// Unit triangulation of {o + i u + j v : i, j >= 0, i + j <= d} into d^2
/// triangles. Seed 0 lifts by -(i^2 + ij + j^2); other seeds draw a random
/// positive definite form. u and v must span a unimodular parallelogram.
LiftedTriangulation triangle_re(int d, const LatticePoint3& o, const Vec3& u, const Vec3& v, std::uint32_t seed = 0);
/// Side-d triangle in the plane z = 0 at the origin.
LiftedTriangulation triangle_re(int d, std::uint32_t seed = 0);

/// RE-triangulation of an arbitrary lattice triangle, induced by a random
/// positive definite quadratic form; redrawn until every cell is unimodular.
LiftedTriangulation lattice_triangle_re(const LatticePoint3& a, const LatticePoint3& b, const LatticePoint3& c,
                                        std::uint32_t seed = 0);

/// Cells of the restriction to the plane <n, x> = c.
LiftedTriangulation restrict_to_plane(const LiftedTriangulation& t, const Vec3& n, Coord c);

/// Adds g to every lifting value; the induced triangulation is unchanged.
void add_affine(LiftedTriangulation& t, const AffineFunction& g);

/// All conv(L1 u L2) for cells L1 of f1 and L2 of f2. Throws
/// PreconditionError when the faces meet, their dimensions do not add up to
/// two, or the hull has lattice points outside both faces.
LiftedTriangulation join(const LiftedTriangulation& f1, const LiftedTriangulation& f2);

/// Primitive affine form vanishing on the common facet, positive on b.
AffineFunction facet_form(const LiftedTriangulation& a, const LiftedTriangulation& b);

/// Union of two triangulated polytopes meeting in a common facet. The
/// lifting of b is lowered by lambda * L with L = facet_form(a, b), lambda
/// doubling from 1 until the union is regular; lambda is appended to lambdas.
/// Throws PreconditionError when the union is not convex, the intersection is
/// not a common facet, or the liftings differ on it.
LiftedTriangulation glue(const LiftedTriangulation& a, const LiftedTriangulation& b);

/// RE-triangulation of conv(T0 u T1) for T0 the side-d triangle at height h and
/// T1 the side-e triangle at height h + 1 (a single point when e = 0), d > e.
/// Extends both inputs.
LiftedTriangulation prism_fill(const LiftedTriangulation& t0, const LiftedTriangulation& t1);

/// Extends an RE-triangulation of the facet corners[0..2] of a lattice
/// simplex congruent to Gamma_s to the whole simplex, whose last vertex is
/// corners[3]. Layers parallel to the facet use triangle_re(seed).
LiftedTriangulation extend_facet(const LiftedTriangulation& facet, const std::array<LatticePoint3, 4>& corners,
                                 std::uint32_t seed = 0);

/// A removed corner of a truncated simplex: the cut facet corners[0..2] and
/// the missing vertex corners[3].
struct Chop {
    std::array<LatticePoint3, 4> corners;
};

/// Extends an RE-triangulation of a truncated simplex by filling every chop.
LiftedTriangulation fill_truncated(const LiftedTriangulation& t, const std::vector<Chop>& chops,
                                   std::uint32_t seed = 0);

/// The tetrahedron conv{(0,0,0), (0,0,1), (d-1,1,0), (1,0,d-1)}.
Tetrahedron omega_tetrahedron(int delta);

/// RE-triangulation of Gamma_delta containing omega_tetrahedron(delta).
LiftedTriangulation build_family_triangulation(int delta, std::uint32_t seed = 0);
/// Its lifting read as a polynomial: lambda_a = alpha(a).
TropicalPolynomial build_family_surface(int delta, std::uint32_t seed = 0);

/// Polynomial with coefficients lambda_a = alpha(a).
TropicalPolynomial to_polynomial(const LiftedTriangulation& t);

/// RE-triangulation of Gamma_2 grown from its facet F_facet (1..4), whose own
/// triangulation and the layers above it are drawn from `seed`.
LiftedTriangulation build_quadric_triangulation(std::uint32_t seed, int facet = 3);

}  // namespace tropline
