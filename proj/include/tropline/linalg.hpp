#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropline/lattice.hpp"
#include "tropline/rational.hpp"

namespace tropline {

using RatMatrix = std::vector<std::vector<Rat>>;

struct LinearSolution {
    bool consistent = false;
    bool unique = false;
    /// A particular solution (free variables set to zero) when consistent.
    std::vector<Rat> x;
};

/// Exact Gauss-Jordan elimination for A x = b.
LinearSolution solve_linear(RatMatrix a, std::vector<Rat> b);

int rank(RatMatrix a);

/// p |-> c + <g, p>
struct AffineFunction {
    Rat c;
    QPoint3 g;
    Rat operator()(const LatticePoint3& p) const { return c + qdot(g, p); }
    Rat operator()(const QPoint3& p) const { return c + qdot(g, p); }
};

/// An affine function taking the prescribed values, or nullopt if no affine function does.
std::optional<AffineFunction> fit_affine(const std::vector<std::pair<LatticePoint3, Rat>>& samples);

}  // namespace tropline
