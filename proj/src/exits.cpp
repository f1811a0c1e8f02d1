#include "tropline/exits.hpp"

#include <algorithm>
#include <cstdlib>

#include "tropline/error.hpp"
#include "tropline/polynomial.hpp"

namespace tropline {

FacetDistribution facet_distribution(const std::array<LatticePoint3, 4>& tet, int delta) {
    FacetDistribution f{};
    for (int i = 0; i < 4; ++i) f[i] = facet_membership(tet[i], delta);
    return f;
}

FacetDistribution parse_distribution(const std::string& s) {
    FacetDistribution f{};
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '{' || s[i] == '}')) ++i;
    };
    for (int k = 0; k < 4; ++k) {
        skip();
        while (i < s.size() && s[i] >= '1' && s[i] <= '4') {
            f[k] |= IndexSet(1u << (s[i] - '1'));
            ++i;
        }
        skip();
        if (k < 3) {
            if (i >= s.size() || s[i] != ',') throw ParseError("expected ',' in facet distribution", i);
            ++i;
        }
    }
    skip();
    if (i != s.size()) throw ParseError("trailing characters in facet distribution", i);
    return f;
}

std::string to_string(const FacetDistribution& f) {
    std::string out = "{";
    for (int k = 0; k < 4; ++k) {
        if (k) out += ",";
        for (int i = 1; i <= 4; ++i)
            if (has_index(f[k], i)) out += char('0' + i);
    }
    return out + "}";
}

bool is_fed(const FED& f) {
    for (int i = 1; i <= 4; ++i) {
        int n = 0;
        for (IndexSet s : f) n += has_index(s, i);
        if (n != 2) return false;
    }
    return true;
}

FED sorted(FED f) {
    std::sort(f.begin(), f.end());
    return f;
}

std::vector<FED> contained_feds(const FacetDistribution& fac) {
    std::set<FED> out;
    // Submask enumeration, including the empty set, for each vertex.
    auto submasks = [](IndexSet m) {
        std::vector<IndexSet> v;
        for (IndexSet s = m;; s = (s - 1) & m) {
            v.push_back(s);
            if (s == 0) break;
        }
        return v;
    };
    auto s0 = submasks(fac[0]), s1 = submasks(fac[1]), s2 = submasks(fac[2]), s3 = submasks(fac[3]);
    for (IndexSet a : s0)
        for (IndexSet b : s1)
            for (IndexSet c : s2)
                for (IndexSet d : s3) {
                    FED f{a, b, c, d};
                    if (is_fed(f)) out.insert(sorted(f));
                }
    return {out.begin(), out.end()};
}

IndexSet relabel(IndexSet s, const std::array<int, 4>& perm) {
    IndexSet r = 0;
    for (int i = 1; i <= 4; ++i)
        if (has_index(s, i)) r |= IndexSet(1u << (perm[i - 1] - 1));
    return r;
}

FED canonical_fed(const FED& f) {
    std::optional<FED> best;
    for (const auto& p : all_permutations()) {
        FED g;
        for (int k = 0; k < 4; ++k) g[k] = relabel(f[k], p);
        g = sorted(g);
        if (!best || g < *best) best = g;
    }
    return *best;
}

const std::array<FED, 6>& class_representatives() {
    auto m = [](const char* s) { return parse_distribution(s); };
    static const std::array<FED, 6> reps{
        m("{123,124,3,4}"), m("{123,124,34,}"), m("{12,12,34,34}"),
        m("{123,12,34,4}"), m("{123,14,24,3}"), m("{12,13,24,34}"),
    };
    return reps;
}

std::vector<FED> fed_orbits() {
    std::set<FED> out;
    for (IndexSet a = 0; a < 16; ++a)
        for (IndexSet b = a; b < 16; ++b)
            for (IndexSet c = b; c < 16; ++c)
                for (IndexSet d = c; d < 16; ++d) {
                    FED f{a, b, c, d};
                    if (is_fed(f)) out.insert(canonical_fed(f));
                }
    return {out.begin(), out.end()};
}

bool fed_realizable(const FED& f) {
    for (int i = 0; i < 4; ++i) {
        if (index_count(f[i]) == 4) return false;
        for (int j = i + 1; j < 4; ++j)
            if (index_count(f[i]) == 3 && f[i] == f[j]) return false;
    }
    return true;
}

std::set<int> classify_tetrahedron(const std::array<LatticePoint3, 4>& tet, int delta) {
    std::vector<LatticePoint3> pts(tet.begin(), tet.end());
    if (exits(pts, delta) != 0xFu) throw PreconditionError("tetrahedron does not have four exits");
    std::array<FED, 6> reps;
    for (int j = 0; j < 6; ++j) reps[j] = canonical_fed(class_representatives()[j]);
    std::set<int> out;
    for (const auto& f : contained_feds(facet_distribution(tet, delta))) {
        FED c = canonical_fed(f);
        for (int j = 0; j < 6; ++j)
            if (c == reps[j]) out.insert(j + 1);
    }
    return out;
}

std::int64_t class6_volume6(std::int64_t delta, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return std::llabs(a * c * (delta - b - d) - b * d * (delta - a - c));
}

std::int64_t class5_volume6(std::int64_t delta, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return std::llabs(a * b * c + (delta - a) * (delta - b) * d);
}

std::int64_t class3_volume6(std::int64_t delta, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return std::llabs(delta * (a - b) * (c - d));
}

std::optional<Quadruple> least_f1_solution(std::int64_t delta) {
    for (std::int64_t a = 1; a < delta; ++a)
        for (std::int64_t b = 1; b < delta; ++b)
            for (std::int64_t c = 1; c < delta; ++c) {
                // f = |K - d M|
                std::int64_t K = a * c * (delta - b);
                std::int64_t M = a * c + b * (delta - a - c);
                if (M == 0) {
                    if (std::llabs(K) == 1) return Quadruple{a, b, c, 1};
                    continue;
                }
                std::optional<std::int64_t> best;
                for (std::int64_t t : {K - 1, K + 1}) {
                    if (t % M != 0) continue;
                    std::int64_t d = t / M;
                    if (d >= 1 && d < delta && (!best || d < *best)) best = d;
                }
                if (best) return Quadruple{a, b, c, *best};
            }
    return std::nullopt;
}

std::optional<Quadruple> least_f1_solution_naive(std::int64_t delta) {
    for (std::int64_t a = 1; a < delta; ++a)
        for (std::int64_t b = 1; b < delta; ++b)
            for (std::int64_t c = 1; c < delta; ++c)
                for (std::int64_t d = 1; d < delta; ++d)
                    if (class6_volume6(delta, a, b, c, d) == 1) return Quadruple{a, b, c, d};
    return std::nullopt;
}

EvenSearchResult search_even_exceptions(std::int64_t delta_max, Exec exec) {
    std::vector<std::int64_t> evens;
    for (std::int64_t d = 2; d <= delta_max; d += 2) evens.push_back(d);
    std::vector<std::optional<Quadruple>> found(evens.size());
    const long n = static_cast<long>(evens.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) found[i] = least_f1_solution(evens[i]);
    } else {
        for (long i = 0; i < n; ++i) found[i] = least_f1_solution(evens[i]);
    }
    EvenSearchResult r;
    for (std::size_t i = 0; i < evens.size(); ++i) {
        if (found[i])
            r.witnesses[evens[i]] = *found[i];
        else
            r.exceptions.push_back(evens[i]);
    }
    return r;
}

bool OddReport::all_valid() const {
    return delta3_has_no_solution &&
           std::all_of(witnesses.begin(), witnesses.end(), [](const OddWitness& w) { return w.valid; });
}

OddReport verify_odd_solutions(std::int64_t delta_max) {
    OddReport r;
    r.delta3_has_no_solution = !least_f1_solution_naive(3).has_value();
    for (std::int64_t delta = 5; delta <= delta_max; delta += 2) {
        std::int64_t n = (delta - 1) / 2;
        OddWitness w;
        w.delta = delta;
        const std::array<std::pair<const char*, Quadruple>, 2> readings{{
            {"(n-1,n,n,n+1)", {n - 1, n, n, n + 1}},
            {"(n-1,n,n+1,n)", {n - 1, n, n + 1, n}},
        }};
        for (const auto& [name, q] : readings) {
            bool in_domain = std::all_of(q.begin(), q.end(), [&](std::int64_t v) { return v >= 1 && v <= delta - 1; });
            if (in_domain && class6_volume6(delta, q[0], q[1], q[2], q[3]) == 1) {
                w.abcd = q;
                w.ordering = name;
                w.valid = true;
                break;
            }
        }
        r.witnesses.push_back(w);
    }
    return r;
}

DiofantReport verify_diofant(std::int64_t delta_max) {
    DiofantReport r;
    for (std::int64_t delta = 2; delta <= delta_max; ++delta)
        for (std::int64_t a = 1; a < delta; ++a)
            for (std::int64_t b = 1; b < delta; ++b)
                for (std::int64_t c = 1; c < delta; ++c)
                    for (std::int64_t d = 1; c + d <= delta; ++d) {
                        ++r.checked;
                        std::int64_t v = a * b * c + (delta - a) * (delta - b) * d;
                        if (v == 1 || v == -1) r.solutions.push_back({delta, a, b, c, d});
                    }
    r.no_solutions = r.solutions.empty();
    return r;
}

DiofantReport diofant_literal_solutions(std::int64_t delta_max, std::int64_t window) {
    DiofantReport r;
    for (std::int64_t delta = 2; delta <= delta_max; ++delta)
        for (std::int64_t a = 1; a < delta; ++a)
            for (std::int64_t b = 1; b < delta; ++b)
                for (std::int64_t c = -window; c <= window; ++c)
                    for (std::int64_t d = -window; d <= window; ++d) {
                        if (c == 0 || d == 0) continue;
                        ++r.checked;
                        std::int64_t v = a * b * c + (delta - a) * (delta - b) * d;
                        if (v == 1 || v == -1) r.solutions.push_back({delta, a, b, c, d});
                    }
    r.no_solutions = r.solutions.empty();
    return r;
}

HyperbolaCertificate hyperbola_certificate(std::int64_t delta, std::int64_t c, std::int64_t d, int eps) {
    if (c == 0 || d == 0) throw PreconditionError("hyperbola needs c and d nonzero");
    HyperbolaCertificate h;
    h.intercept = make_rat(delta) - make_rat(eps, d * delta);
    h.intercept_beyond = h.intercept > make_rat(delta - 1);
    Rat num = make_rat(d * delta);
    Rat den = make_rat(c) * h.intercept - make_rat(d) * (make_rat(delta) - h.intercept);
    if (den != 0) {
        h.slope = num / den;
        h.slope_positive = h.slope > 0;
    }
    return h;
}

std::vector<std::array<LatticePoint3, 4>> enumerate_four_exit_elementary(int delta) {
    if (delta < 1) throw PreconditionError("degree must be positive");
    if (delta > 4)
        throw PreconditionError("enumeration is limited to degree <= 4; use the targeted searches for larger degrees");
    auto pts = gamma_points(delta);
    std::vector<IndexSet> member;
    for (const auto& p : pts) member.push_back(facet_membership(p, delta));
    std::vector<std::array<LatticePoint3, 4>> out;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    // Each index needs two vertices on its facet.
                    bool possible = true;
                    for (int f = 1; f <= 4 && possible; ++f)
                        possible = has_index(member[i], f) + has_index(member[j], f) + has_index(member[k], f) +
                                       has_index(member[l], f) >= 2;
                    if (!possible) continue;
                    Coord det = det3(sub(pts[j], pts[i]), sub(pts[k], pts[i]), sub(pts[l], pts[i]));
                    if (det != 1 && det != -1) continue;
                    std::array<LatticePoint3, 4> t{pts[i], pts[j], pts[k], pts[l]};
                    if (exits({t.begin(), t.end()}, delta) == 0xFu) out.push_back(t);
                }
    return out;
}

std::array<LatticePoint3, 4> classprop_b_witness(int delta) {
    return {LatticePoint3{0, 0, 0}, {1, 0, 0}, {delta - 1, 0, 1}, {0, 1, delta - 1}};
}

}  // namespace tropline
