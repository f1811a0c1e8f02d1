#pragma once

#include <array>
#include <vector>

#include "tropline/lattice.hpp"
#include "tropline/rational.hpp"

namespace tropline {

/// Execution policy for the hot kernels. `serial` is the reference implementation.
enum class Exec { serial, parallel };

/// Lifted point configuration in projected integer coordinates.
///
/// `coords[i]` holds the first `dim` coordinates of point i after projecting
/// its affine hull injectively onto coordinate axes; `heights` are the lifting
/// values scaled to integers by a common positive factor.
struct LiftedPoints {
    int dim = 0;
    std::vector<std::array<Coord, 3>> coords;
    std::vector<BigInt> heights;
};

/// Projects points onto `dim` = affine dimension coordinates and scales heights
/// by the lcm of their denominators. Throws DegenerateError for fewer than two
/// distinct points.
LiftedPoints make_lifted_points(const std::vector<LatticePoint3>& pts, const std::vector<Rat>& heights);

/// Upper cells of the lifted configuration: for every affinely spanning
/// (dim+1)-subset, the argmax set of the affine functional it determines, kept
/// when that functional is not exceeded anywhere. Sorted, deduplicated index sets.
std::vector<std::vector<int>> upper_cells(const LiftedPoints& lp, Exec exec = Exec::parallel);

/// Index of the first simplex whose affine extension fails to strictly dominate
/// the lifting at some other point, or -1 when all simplices pass. Throws
/// DegenerateError for a flat simplex.
long first_dominance_violation(const LiftedPoints& lp, const std::vector<std::vector<int>>& simplices,
                               Exec exec = Exec::parallel);

}  // namespace tropline
