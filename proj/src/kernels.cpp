#include "tropline/kernels.hpp"

#include <algorithm>
#include <climits>

#include "tropline/error.hpp"

namespace tropline {

namespace {

using i128 = __int128;

i128 to_i128(const BigInt& v) {
    BigInt a = abs(v);
    std::uint64_t words[2] = {0, 0};
    std::size_t count = 0;
    mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, a.get_mpz_t());
    unsigned __int128 r = (static_cast<unsigned __int128>(words[1]) << 64) | words[0];
    return v < 0 ? -static_cast<i128>(r) : static_cast<i128>(r);
}

template <class T>
T convert(const BigInt& v) {
    if constexpr (std::is_same_v<T, i128>) {
        return to_i128(v);
    } else {
        return v;
    }
}

template <class T>
T from_coord(Coord c) {
    if constexpr (std::is_same_v<T, i128>) {
        return static_cast<i128>(c);
    } else {
        return BigInt(static_cast<long>(c));
    }
}

template <class T>
int sign_of(const T& v) {
    return (v > 0) - (v < 0);
}

// Square matrix of dimension D with its determinant and adjugate.
template <int D, class T>
struct Frame {
    T m[3][3];
    T adj[3][3];
    T det;

    void finish() {
        if constexpr (D == 1) {
            det = m[0][0];
            adj[0][0] = T(1);
        } else if constexpr (D == 2) {
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            adj[0][0] = m[1][1];
            adj[0][1] = -m[0][1];
            adj[1][0] = -m[1][0];
            adj[1][1] = m[0][0];
        } else {
            adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
            adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
            adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
            adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
            adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
            adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
            adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
            adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
            adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
        }
    }
};

template <int D, class T>
struct Data {
    std::vector<std::array<T, 3>> x;
    std::vector<T> h;
    explicit Data(const LiftedPoints& lp) {
        x.resize(lp.coords.size());
        h.resize(lp.coords.size());
        for (std::size_t i = 0; i < lp.coords.size(); ++i) {
            for (int k = 0; k < 3; ++k) x[i][k] = from_coord<T>(lp.coords[i][k]);
            h[i] = convert<T>(lp.heights[i]);
        }
    }
};

// For the simplex given by `idx`, computes y = adj * rhs with rhs_r = h[idx0] - h[idx_r]
// (the scaled solution of the equality system). Returns false for a flat simplex.
template <int D, class T>
bool equality_point(const Data<D, T>& d, const int* idx, Frame<D, T>& f, std::array<T, 3>& y) {
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c) f.m[r][c] = d.x[idx[r + 1]][c] - d.x[idx[0]][c];
    f.finish();
    if (f.det == 0) return false;
    for (int r = 0; r < D; ++r) {
        y[r] = T(0);
        for (int c = 0; c < D; ++c) y[r] += f.adj[r][c] * (d.h[idx[0]] - d.h[idx[c + 1]]);
    }
    return true;
}

// Scaled excess of point b over the functional: det * (value_b - value_idx0).
template <int D, class T>
T excess(const Data<D, T>& d, int base, int b, const T& det, const std::array<T, 3>& y) {
    T v = (d.h[b] - d.h[base]) * det;
    for (int c = 0; c < D; ++c) v += (d.x[b][c] - d.x[base][c]) * y[c];
    return v;
}

template <int D, class T>
void scan_from(const Data<D, T>& d, int first, std::vector<std::vector<int>>& out) {
    const int k = static_cast<int>(d.x.size());
    int idx[D + 1];
    idx[0] = first;
    Frame<D, T> f;
    std::array<T, 3> y;
    std::vector<int> members;
    // Enumerate the remaining D indices in increasing order.
    auto recurse = [&](auto&& self, int level, int start) -> void {
        if (level > D) {
            if (!equality_point<D, T>(d, idx, f, y)) return;
            int s = sign_of(f.det);
            members.clear();
            for (int b = 0; b < k; ++b) {
                int e = sign_of(excess<D, T>(d, idx[0], b, f.det, y)) * s;
                if (e > 0) return;
                if (e == 0) members.push_back(b);
            }
            out.push_back(members);
            return;
        }
        for (int j = start; j < k; ++j) {
            idx[level] = j;
            self(self, level + 1, j + 1);
        }
    };
    recurse(recurse, 1, first + 1);
}

template <int D, class T>
std::vector<std::vector<int>> upper_cells_impl(const LiftedPoints& lp, Exec exec) {
    Data<D, T> d(lp);
    const int k = static_cast<int>(lp.coords.size());
    std::vector<std::vector<int>> all;
    if (exec == Exec::serial) {
        for (int i = 0; i < k; ++i) scan_from<D, T>(d, i, all);
    } else {
#pragma omp parallel
        {
            std::vector<std::vector<int>> local;
#pragma omp for schedule(dynamic, 1) nowait
            for (int i = 0; i < k; ++i) scan_from<D, T>(d, i, local);
#pragma omp critical(tropline_upper_cells)
            all.insert(all.end(), local.begin(), local.end());
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

template <int D, class T>
bool simplex_dominates(const Data<D, T>& d, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != D + 1) throw PreconditionError("simplex has wrong vertex count");
    Frame<D, T> f;
    std::array<T, 3> y;
    if (!equality_point<D, T>(d, s.data(), f, y)) throw DegenerateError("flat simplex in dominance check");
    int sg = sign_of(f.det);
    const int k = static_cast<int>(d.x.size());
    for (int b = 0; b < k; ++b) {
        if (std::find(s.begin(), s.end(), b) != s.end()) continue;
        // excess < 0 means the point lies strictly below the affine extension.
        if (sign_of(excess<D, T>(d, s[0], b, f.det, y)) * sg >= 0) return false;
    }
    return true;
}

template <int D, class T>
long dominance_impl(const LiftedPoints& lp, const std::vector<std::vector<int>>& simplices, Exec exec) {
    Data<D, T> d(lp);
    const long n = static_cast<long>(simplices.size());
    if (exec == Exec::serial) {
        for (long i = 0; i < n; ++i)
            if (!simplex_dominates<D, T>(d, simplices[i])) return i;
        return -1;
    }
    long first = LONG_MAX;
    bool degenerate = false;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first)
    for (long i = 0; i < n; ++i) {
        try {
            if (!simplex_dominates<D, T>(d, simplices[i])) first = std::min(first, i);
        } catch (const DegenerateError&) {
#pragma omp atomic write
            degenerate = true;
        }
    }
    if (degenerate) throw DegenerateError("flat simplex in dominance check");
    return first == LONG_MAX ? -1 : first;
}

bool fits_fast(const LiftedPoints& lp) {
    for (const auto& h : lp.heights)
        if (mpz_sizeinbase(h.get_mpz_t(), 2) > 90) return false;
    for (const auto& c : lp.coords)
        for (Coord v : c)
            if (v > 32 || v < -32) return false;
    return true;
}

template <class F>
auto dispatch(const LiftedPoints& lp, F&& f) {
    bool fast = fits_fast(lp);
    switch (lp.dim) {
        case 1: return fast ? f(std::integral_constant<int, 1>{}, i128{}) : f(std::integral_constant<int, 1>{}, BigInt{});
        case 2: return fast ? f(std::integral_constant<int, 2>{}, i128{}) : f(std::integral_constant<int, 2>{}, BigInt{});
        case 3: return fast ? f(std::integral_constant<int, 3>{}, i128{}) : f(std::integral_constant<int, 3>{}, BigInt{});
        default: throw PreconditionError("kernel dimension must be 1, 2 or 3");
    }
}

}  // namespace

LiftedPoints make_lifted_points(const std::vector<LatticePoint3>& pts, const std::vector<Rat>& heights) {
    if (pts.size() != heights.size()) throw PreconditionError("point and height counts differ");
    int dim = affine_dimension(pts);
    if (dim < 1) throw DegenerateError("support is degenerate");
    LiftedPoints lp;
    lp.dim = dim;
    // Choose `dim` axes on which the projection of the affine hull is injective.
    std::array<int, 3> axes{0, 1, 2};
    bool found = false;
    for (int mask = 0; mask < 8 && !found; ++mask) {
        if (__builtin_popcount(mask) != dim) continue;
        std::vector<LatticePoint3> proj;
        for (const auto& p : pts) {
            LatticePoint3 q{0, 0, 0};
            for (int k = 0; k < 3; ++k)
                if (mask & (1 << k)) q[k] = p[k];
            proj.push_back(q);
        }
        if (affine_dimension(proj) == dim) {
            int n = 0;
            for (int k = 0; k < 3; ++k)
                if (mask & (1 << k)) axes[n++] = k;
            found = true;
        }
    }
    if (!found) throw InternalError("no injective coordinate projection");
    for (const auto& p : pts) {
        std::array<Coord, 3> c{0, 0, 0};
        for (int k = 0; k < dim; ++k) c[k] = p[axes[k]];
        lp.coords.push_back(c);
    }
    BigInt l = 1;
    for (const auto& h : heights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), h.get_den_mpz_t());
    for (const auto& h : heights) lp.heights.push_back(h.get_num() * (l / h.get_den()));
    return lp;
}

std::vector<std::vector<int>> upper_cells(const LiftedPoints& lp, Exec exec) {
    return dispatch(lp, [&](auto dc, auto tag) {
        return upper_cells_impl<decltype(dc)::value, decltype(tag)>(lp, exec);
    });
}

long first_dominance_violation(const LiftedPoints& lp, const std::vector<std::vector<int>>& simplices,
                               Exec exec) {
    return dispatch(lp, [&](auto dc, auto tag) {
        return dominance_impl<decltype(dc)::value, decltype(tag)>(lp, simplices, exec);
    });
}

}  // namespace tropline
