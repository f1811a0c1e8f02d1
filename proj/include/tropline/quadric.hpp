#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tropline/lines.hpp"

namespace tropline {

/// The unique bounded 2-cell of a smooth tropical quadric.
struct CompactCellInfo {
    CellRef cell;
    std::array<LatticePoint3, 2> diagonal;  // dual edge of the subdivision
    std::string name;                       // "PP'", "QQ'" or "RR'"
    Vec3 normal{0, 0, 0};                   // -e_i + e_j + e_k
    std::vector<QPoint3> vertices;          // boundary cycle of the cell
};

/// Throws PreconditionError unless x has degree 2, InternalError unless the
/// subdivision contains exactly one of the three diagonals of Gamma_2.
CompactCellInfo compact_cell(const SurfaceComplex& x);

/// One of the two rulings through p, with the boundary cells it leaves through.
struct Ruling {
    TropicalLine line;
    CellRef e_minus;  // 1-cell containing v1 (after the vertex tie-break)
    CellRef e_plus;   // 1-cell containing v2
};

/// Line through p whose bounded edge is the chord of the compact cell along
/// bounded_direction(type). The type's direction must be parallel to the cell.
Ruling ruling_through(const SurfaceComplex& x, const CompactCellInfo& c, const QPoint3& p, LineType type);

/// The two tropical lines through p on x. Each is checked to lie on x and to
/// leave the cell through triangles with the required exits before returning.
/// Throws PreconditionError when p is not in the closed compact cell.
std::pair<TropicalLine, TropicalLine> two_lines_through(const SurfaceComplex& x, const QPoint3& p);

/// For every boundary edge E of the compact cell C: <v, u> < 0 where v points
/// from E into C and u from the diagonal into the dual triangle of E.
bool check_inner_product_lemma(const SurfaceComplex& x, const CompactCellInfo& c);

}  // namespace tropline
