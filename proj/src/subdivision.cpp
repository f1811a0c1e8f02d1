#include "tropline/subdivision.hpp"

#include <algorithm>
#include <set>

#include "tropline/error.hpp"

namespace tropline {

std::vector<LatticePoint3> Subdivision::cell_points(std::size_t i) const {
    std::vector<LatticePoint3> out;
    for (int k : cells.at(i)) out.push_back(support[k]);
    return out;
}

int Subdivision::index_of(const LatticePoint3& p) const {
    auto it = std::lower_bound(support.begin(), support.end(), p);
    if (it == support.end() || *it != p) return -1;
    return static_cast<int>(it - support.begin());
}

bool Subdivision::is_simplicial() const {
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 4; });
}

bool Subdivision::contains_cell(std::vector<LatticePoint3> pts) const {
    std::vector<int> idx;
    for (const auto& p : pts) {
        int i = index_of(p);
        if (i < 0) return false;
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    return std::binary_search(cells.begin(), cells.end(), idx);
}

Triangulation Subdivision::triangulation() const {
    Triangulation t;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() != 4) throw PreconditionError("subdivision is not simplicial");
        auto p = cell_points(i);
        t.push_back({p[0], p[1], p[2], p[3]});
    }
    return t;
}

Subdivision induce(const LiftingFunction& alpha, Exec exec) {
    Subdivision s;
    for (const auto& [p, v] : alpha) {
        s.support.push_back(p);
        s.lifting.push_back(v);
    }
    if (affine_dimension(s.support) != 3) throw DegenerateError("support does not span R^3");
    auto lp = make_lifted_points(s.support, s.lifting);
    s.cells = upper_cells(lp, exec);
    return s;
}

Subdivision induce(const TropicalPolynomial& f, Exec exec) { return induce(f.terms(), exec); }

namespace {

Coord projected_measure(const LiftedPoints& lp, const std::vector<int>& cell) {
    const auto& x = lp.coords;
    Coord m = 0;
    switch (lp.dim) {
        case 1: m = x[cell[1]][0] - x[cell[0]][0]; break;
        case 2: {
            Coord a0 = x[cell[1]][0] - x[cell[0]][0], a1 = x[cell[1]][1] - x[cell[0]][1];
            Coord b0 = x[cell[2]][0] - x[cell[0]][0], b1 = x[cell[2]][1] - x[cell[0]][1];
            m = a0 * b1 - a1 * b0;
            break;
        }
        case 3: {
            Vec3 a = sub(x[cell[1]], x[cell[0]]), b = sub(x[cell[2]], x[cell[0]]), c = sub(x[cell[3]], x[cell[0]]);
            m = det3(a, b, c);
            break;
        }
    }
    return m < 0 ? -m : m;
}

Coord projected_hull_measure(const LiftedPoints& lp, const std::vector<LatticePoint3>& support) {
    switch (lp.dim) {
        case 1: {
            Coord lo = lp.coords[0][0], hi = lo;
            for (const auto& c : lp.coords) {
                lo = std::min(lo, c[0]);
                hi = std::max(hi, c[0]);
            }
            return hi - lo;
        }
        case 2: {
            std::vector<std::array<Coord, 2>> p2;
            for (const auto& c : lp.coords) p2.push_back({c[0], c[1]});
            return twice_hull_area(p2);
        }
        default: {
            Rat v = polytope_volume(support) * 6;
            return v.get_num().get_si();
        }
    }
}

}  // namespace

bool verify_regular_cells(const LiftingFunction& alpha, const std::vector<std::vector<LatticePoint3>>& cells,
                          Exec exec) {
    std::vector<LatticePoint3> support;
    std::vector<Rat> heights;
    for (const auto& [p, v] : alpha) {
        support.push_back(p);
        heights.push_back(v);
    }
    auto lp = make_lifted_points(support, heights);
    std::vector<std::vector<int>> idx;
    std::set<std::vector<int>> seen;
    for (const auto& c : cells) {
        if (static_cast<int>(c.size()) != lp.dim + 1)
            throw PreconditionError("cell vertex count does not match the dimension");
        std::vector<int> ci;
        for (const auto& p : c) {
            auto it = std::lower_bound(support.begin(), support.end(), p);
            if (it == support.end() || *it != p)
                throw PreconditionError("cell vertex " + to_string(p) + " is not in the support");
            ci.push_back(static_cast<int>(it - support.begin()));
        }
        std::sort(ci.begin(), ci.end());
        if (!seen.insert(ci).second) throw TilingError("repeated cell");
        idx.push_back(ci);
    }
    Coord total = 0;
    for (const auto& ci : idx) {
        Coord m = projected_measure(lp, ci);
        if (m == 0) throw DegenerateError("degenerate simplex");
        total += m;
    }
    if (total != projected_hull_measure(lp, support))
        throw TilingError("cell volumes do not add up to the volume of the support's hull");
    return first_dominance_violation(lp, idx, exec) < 0;
}

bool verify_regular(const LiftingFunction& alpha, const Triangulation& t, Exec exec) {
    std::vector<LatticePoint3> support;
    for (const auto& kv : alpha) support.push_back(kv.first);
    if (affine_dimension(support) != 3) throw DegenerateError("support does not span R^3");
    std::vector<std::vector<LatticePoint3>> cells;
    for (const auto& tet : t) cells.emplace_back(tet.begin(), tet.end());
    return verify_regular_cells(alpha, cells, exec);
}

SmoothnessReport smoothness_report(const Subdivision& s) {
    SmoothnessReport r;
    r.cell_count = s.cells.size();
    bool first = true;
    bool smooth = true;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        auto pts = s.cell_points(i);
        Rat v = polytope_volume(pts);
        if (first || v < r.min_volume) r.min_volume = v;
        if (first || v > r.max_volume) r.max_volume = v;
        first = false;
        if (pts.size() != 4 || v != Rat(1, 6)) smooth = false;
    }
    r.smooth = smooth && !s.cells.empty();
    return r;
}

SmoothnessReport smoothness_check(const TropicalPolynomial& f, Exec exec) {
    if (f.degree() < 1 || !f.newton_is_full_simplex()) throw PreconditionError("wrong degree shape");
    return smoothness_report(induce(f, exec));
}

Triangulation canonical(Triangulation t) {
    for (auto& tet : t) std::sort(tet.begin(), tet.end());
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace tropline
