#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tropline/polynomial.hpp"
#include "tropline/subdivision.hpp"

namespace tropline {

/// Reference to a cell of a surface complex: dim 0 vertex, 1 edge, 2 face.
struct CellRef {
    int dim = 0;
    int id = 0;
    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

/// 1-cell dual to a triangle of the subdivision.
struct SurfaceEdge {
    std::array<int, 3> dual;  // support indices, sorted
    int v0 = -1;              // apex vertex
    int v1 = -1;              // second endpoint, or -1 for a ray
    Vec3 ray{0, 0, 0};        // primitive ray direction when v1 == -1
    std::vector<int> faces;   // the three adjacent 2-cells
    bool bounded() const { return v1 >= 0; }
};

/// 2-cell dual to an edge {a, b} of the subdivision, given by generators.
struct SurfaceFace {
    std::array<int, 2> dual;   // support indices, a < b
    std::vector<int> vertices; // chain order around the dual edge
    std::vector<Vec3> rays;    // empty when bounded, else the rays at the two chain ends
    std::vector<int> edges;    // boundary 1-cells in chain order
    Vec3 normal{0, 0, 0};      // b - a
    bool bounded() const { return rays.empty(); }
};

/// Polyhedral complex V_tr(f) of a smooth tropical surface with its duality maps.
struct SurfaceComplex {
    TropicalPolynomial f;
    Subdivision subdiv;
    int delta = 0;
    std::vector<QPoint3> vertices;  // vertex i is dual to subdivision cell i
    std::vector<SurfaceEdge> edges;
    std::vector<SurfaceFace> faces;
    std::map<std::vector<int>, CellRef> by_dual;

    /// Dual subdivision cell of a surface cell, as sorted support indices.
    std::vector<int> dual_of(const CellRef& c) const;
    std::vector<LatticePoint3> dual_points(const CellRef& c) const;
    std::optional<CellRef> cell_of_dual(std::vector<int> idx) const;
    bool is_bounded(const CellRef& c) const;
    /// Support indices of the maximizing terms at p.
    std::vector<int> argmax_indices(const QPoint3& p) const;
    /// Minimal cell containing p, or nullopt when the maximum is attained once.
    std::optional<CellRef> locate(const QPoint3& p) const;
    /// True iff p lies in the closed cell c.
    bool in_closure(const CellRef& c, const QPoint3& p) const;
    /// Number of cells of each dimension.
    std::size_t count(int dim) const;
};

/// Builds the complex of a smooth polynomial. Throws PreconditionError for
/// non-smooth input or a Newton polytope other than Gamma_delta.
SurfaceComplex build_complex(const TropicalPolynomial& f, Exec exec = Exec::parallel);
/// Same, reusing an already induced subdivision of f.
SurfaceComplex build_complex(const TropicalPolynomial& f, Subdivision s);

struct BalancingReport {
    bool balanced = false;        // geometric check: primitive normals sum to zero at every 1-cell
    bool dual_consistent = false; // normals match the cyclic sides of the dual triangles
    std::size_t edges_checked = 0;
    bool ok() const { return balanced && dual_consistent; }
};

BalancingReport check_balancing(const SurfaceComplex& x);

/// Every cell's affine span is orthogonal to its dual's.
bool check_orthogonality(const SurfaceComplex& x);
/// A cell is unbounded iff its dual lies in a facet of Gamma_delta.
bool check_unboundedness(const SurfaceComplex& x);
/// The three 2-cells around every 1-cell span pairwise different planes.
bool check_distinct_planes(const SurfaceComplex& x);

}  // namespace tropline
