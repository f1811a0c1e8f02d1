#include <algorithm>
#include <map>

#include "tropline/subdivision.hpp"

namespace tropline {

namespace {

using Tri = std::array<LatticePoint3, 3>;

struct Catalogue {
    std::vector<Tetrahedron> tets;
    std::vector<std::vector<char>> overlap;
    std::map<Tri, std::vector<int>> by_face;
    std::map<Tri, bool> boundary;
};

std::array<Tri, 4> faces_of(const Tetrahedron& t) {
    return {Tri{t[1], t[2], t[3]}, Tri{t[0], t[2], t[3]}, Tri{t[0], t[1], t[3]}, Tri{t[0], t[1], t[2]}};
}

Catalogue build_catalogue() {
    Catalogue c;
    auto pts = gamma_points(2);
    const int n = static_cast<int>(pts.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int d = b + 1; d < n; ++d)
                for (int e = d + 1; e < n; ++e)
                    if (is_unimodular({pts[a], pts[b], pts[d], pts[e]}))
                        c.tets.push_back({pts[a], pts[b], pts[d], pts[e]});
    const std::size_t m = c.tets.size();
    c.overlap.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            c.overlap[i][j] = c.overlap[j][i] = interiors_overlap(c.tets[i], c.tets[j]);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& f : faces_of(c.tets[i])) {
            c.by_face[f].push_back(static_cast<int>(i));
            IndexSet common = facet_membership(f[0], 2) & facet_membership(f[1], 2) & facet_membership(f[2], 2);
            c.boundary[f] = common != 0;
        }
    return c;
}

struct Search {
    const Catalogue& cat;
    std::vector<int> chosen;
    std::map<Tri, int> face_count;
    std::vector<std::vector<int>> found;

    void place(int t, int delta) {
        for (const auto& f : faces_of(cat.tets[t])) face_count[f] += delta;
        if (delta > 0) {
            chosen.push_back(t);
        } else {
            chosen.pop_back();
        }
    }

    void run() {
        const Tri* open = nullptr;
        for (const auto& [f, cnt] : face_count)
            if (cnt == 1 && !cat.boundary.at(f)) {
                open = &f;
                break;
            }
        if (!open) {
            if (chosen.size() == 8) {
                auto s = chosen;
                std::sort(s.begin(), s.end());
                found.push_back(s);
            }
            return;
        }
        if (chosen.size() >= 8) return;
        Tri face = *open;
        for (int cand : cat.by_face.at(face)) {
            bool ok = true;
            for (int c : chosen)
                if (c == cand || cat.overlap[c][cand]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            place(cand, +1);
            run();
            place(cand, -1);
        }
    }
};

// The point (417, 389, 301) / 1000 lies on no plane spanned by points of Gamma_2.
bool contains_generic_point(const Tetrahedron& t) {
    const LatticePoint3 g{417, 389, 301};
    std::array<LatticePoint3, 4> s;
    for (int i = 0; i < 4; ++i) s[i] = scale(t[i], 1000);
    const Coord whole = det3(sub(s[1], s[0]), sub(s[2], s[0]), sub(s[3], s[0]));
    for (int i = 0; i < 4; ++i) {
        auto u = s;
        u[i] = g;
        const Coord part = det3(sub(u[1], u[0]), sub(u[2], u[0]), sub(u[3], u[0]));
        if (part == 0 || (part > 0) != (whole > 0)) return false;
    }
    return true;
}

}  // namespace

std::vector<Triangulation> enumerate_elementary_gamma2(Exec exec) {
    const Catalogue cat = build_catalogue();
    // Every triangulation has exactly one tetrahedron containing a fixed
    // generic interior point; branch on that tetrahedron.
    std::vector<int> first;
    for (int i = 0; i < static_cast<int>(cat.tets.size()); ++i)
        if (contains_generic_point(cat.tets[i])) first.push_back(i);
    std::vector<std::vector<std::vector<int>>> per_seed(first.size());
    const long nfirst = static_cast<long>(first.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
    for (long i = 0; i < nfirst; ++i) {
        Search s{cat, {}, {}, {}};
        s.place(first[i], +1);
        s.run();
        per_seed[i] = std::move(s.found);
    }
    std::vector<std::vector<int>> all;
    for (auto& v : per_seed) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<Triangulation> out;
    for (const auto& s : all) {
        Triangulation t;
        for (int i : s) t.push_back(cat.tets[i]);
        out.push_back(canonical(std::move(t)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tropline
