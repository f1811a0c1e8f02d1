#pragma once

#include <array>
#include <map>
#include <vector>

#include "tropline/kernels.hpp"
#include "tropline/lattice.hpp"
#include "tropline/polynomial.hpp"

namespace tropline {

/// Heights of lattice points; the key set is the support.
using LiftingFunction = std::map<LatticePoint3, Rat>;

using Tetrahedron = std::array<LatticePoint3, 4>;
/// Set of tetrahedra; see canonical() for the normal form.
using Triangulation = std::vector<Tetrahedron>;

/// Maximal cells of a lattice subdivision, stored as full point sets.
struct Subdivision {
    /// Lexicographically sorted support.
    std::vector<LatticePoint3> support;
    /// Lifting aligned with `support`; empty when the subdivision carries none.
    std::vector<Rat> lifting;
    /// Each cell is a sorted list of support indices; cells are sorted.
    std::vector<std::vector<int>> cells;

    std::vector<LatticePoint3> cell_points(std::size_t i) const;
    /// Index of p in the support, or -1.
    int index_of(const LatticePoint3& p) const;
    bool is_simplicial() const;
    /// True iff the given point set is exactly one of the maximal cells.
    bool contains_cell(std::vector<LatticePoint3> pts) const;
    /// The cells as tetrahedra; throws PreconditionError if some cell is not a simplex.
    Triangulation triangulation() const;
};

/// Regular subdivision induced by a lifting on a full-dimensional support.
/// Throws DegenerateError when the support does not span space.
Subdivision induce(const LiftingFunction& alpha, Exec exec = Exec::parallel);
Subdivision induce(const TropicalPolynomial& f, Exec exec = Exec::parallel);

/// True iff every tetrahedron's affine extension of alpha strictly dominates
/// alpha at all other support points. Throws TilingError when the tetrahedra
/// do not tile conv(support), PreconditionError when a vertex is not in the support.
bool verify_regular(const LiftingFunction& alpha, const Triangulation& t, Exec exec = Exec::parallel);

/// Dimension-generic variant for simplicial complexes in a 1-, 2- or
/// 3-dimensional affine lattice; cells have dim+1 vertices.
bool verify_regular_cells(const LiftingFunction& alpha, const std::vector<std::vector<LatticePoint3>>& cells,
                          Exec exec = Exec::parallel);

struct SmoothnessReport {
    bool smooth = false;
    std::size_t cell_count = 0;
    Rat min_volume;
    Rat max_volume;
};

/// Smooth iff every maximal cell is a tetrahedron of volume 1/6. Throws
/// PreconditionError("wrong degree shape") when the Newton polytope is not Gamma_delta.
SmoothnessReport smoothness_check(const TropicalPolynomial& f, Exec exec = Exec::parallel);
SmoothnessReport smoothness_report(const Subdivision& s);

/// Sorts vertices within tetrahedra and tetrahedra within the triangulation.
Triangulation canonical(Triangulation t);

/// All triangulations of Gamma_2 into eight tetrahedra of volume 1/6, canonical and sorted.
std::vector<Triangulation> enumerate_elementary_gamma2(Exec exec = Exec::parallel);

}  // namespace tropline
