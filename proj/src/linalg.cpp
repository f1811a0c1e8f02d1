#include "tropline/linalg.hpp"

#include "tropline/error.hpp"

namespace tropline {

namespace {

// Reduces [a | b] in place; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(RatMatrix& a, std::vector<Rat>* b) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (b) std::swap((*b)[p], (*b)[r]);
        Rat inv = 1 / a[r][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
        if (b) (*b)[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat factor = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= factor * a[r][k];
            if (b) (*b)[i] -= factor * (*b)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

LinearSolution solve_linear(RatMatrix a, std::vector<Rat> b) {
    if (a.size() != b.size()) throw PreconditionError("row count mismatch in linear system");
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    auto pivots = reduce(a, &b);
    LinearSolution out;
    for (std::size_t i = pivots.size(); i < b.size(); ++i)
        if (b[i] != 0) return out;
    out.consistent = true;
    out.unique = pivots.size() == cols;
    out.x.assign(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = b[r];
    return out;
}

int rank(RatMatrix a) { return static_cast<int>(reduce(a, nullptr).size()); }

std::optional<AffineFunction> fit_affine(const std::vector<std::pair<LatticePoint3, Rat>>& samples) {
    RatMatrix a;
    std::vector<Rat> b;
    for (const auto& [p, v] : samples) {
        a.push_back({Rat(1), Rat(static_cast<long>(p[0])), Rat(static_cast<long>(p[1])),
                     Rat(static_cast<long>(p[2]))});
        b.push_back(v);
    }
    if (samples.empty()) return AffineFunction{Rat(0), {Rat(0), Rat(0), Rat(0)}};
    auto sol = solve_linear(a, b);
    if (!sol.consistent) return std::nullopt;
    return AffineFunction{sol.x[0], {sol.x[1], sol.x[2], sol.x[3]}};
}

}  // namespace tropline
