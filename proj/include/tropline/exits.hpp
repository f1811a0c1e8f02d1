#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropline/kernels.hpp"
#include "tropline/lattice.hpp"

namespace tropline {

/// Four subsets of {1,2,3,4} as bitmasks, one per tetrahedron vertex.
using FacetDistribution = std::array<IndexSet, 4>;
/// Four subsets in which every index appears exactly twice.
using FED = std::array<IndexSet, 4>;

/// Per-vertex facet_membership, in vertex order. Throws PreconditionError
/// when a vertex lies outside Gamma_delta.
FacetDistribution facet_distribution(const std::array<LatticePoint3, 4>& tet, int delta);

/// Parses "{123,12,34,}" style text (digits per subset, empty for the empty set).
FacetDistribution parse_distribution(const std::string& s);
std::string to_string(const FacetDistribution& f);

bool is_fed(const FED& f);
/// Sorted copy; two distributions are equal as multisets iff their sorted copies are.
FED sorted(FED f);

/// Every FED J with J_i contained in fac_i for some numbering, as sorted
/// multisets without repetition.
std::vector<FED> contained_feds(const FacetDistribution& fac);

/// Relabels the indices by a permutation of {1,2,3,4} (perm[i-1] = image of i).
IndexSet relabel(IndexSet s, const std::array<int, 4>& perm);
/// Lexicographically least sorted image under the 24 relabelings.
FED canonical_fed(const FED& f);

/// c_1 .. c_6.
const std::array<FED, 6>& class_representatives();
/// One canonical representative per S_4-orbit of the set of all FEDs.
std::vector<FED> fed_orbits();
/// Orbits that can occur for a tetrahedron: no vertex on all four facets, and
/// no two vertices on the same three facets.
bool fed_realizable(const FED& f);

/// All j in 1..6 such that some FED contained in Fac(tet) is equivalent to c_j.
/// Throws PreconditionError when the tetrahedron has fewer than four exits.
std::set<int> classify_tetrahedron(const std::array<LatticePoint3, 4>& tet, int delta);

/// f(delta, a, b, c, d) = |ac(delta-b-d) - bd(delta-a-c)|.
std::int64_t class6_volume6(std::int64_t delta, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
/// |abc + (delta-a)(delta-b)d|.
std::int64_t class5_volume6(std::int64_t delta, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
/// |delta (a-b)(c-d)|.
std::int64_t class3_volume6(std::int64_t delta, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

using Quadruple = std::array<std::int64_t, 4>;

/// Lexicographically least (a,b,c,d) in [1, delta-1]^4 with f = 1, solving
/// for d in closed form.
std::optional<Quadruple> least_f1_solution(std::int64_t delta);
/// Same answer by a plain four-fold loop; reference for testing.
std::optional<Quadruple> least_f1_solution_naive(std::int64_t delta);

struct EvenSearchResult {
    std::vector<std::int64_t> exceptions;            // even delta without a solution
    std::map<std::int64_t, Quadruple> witnesses;     // least solution for the others
};

/// Even delta in [2, delta_max].
EvenSearchResult search_even_exceptions(std::int64_t delta_max, Exec exec = Exec::parallel);

struct OddWitness {
    std::int64_t delta = 0;
    Quadruple abcd{};
    std::string ordering;  // which reading of the witness satisfies f = 1
    bool valid = false;
};

struct OddReport {
    bool delta3_has_no_solution = false;
    std::vector<OddWitness> witnesses;  // odd delta = 2n+1 from 5 to delta_max
    bool all_valid() const;
};

/// Checks (n-1, n, n+1, n) and (n-1, n, n, n+1) for each odd delta = 2n+1 >= 5
/// and records the first that gives f = 1; searches delta = 3 exhaustively.
OddReport verify_odd_solutions(std::int64_t delta_max);

struct DiofantReport {
    bool no_solutions = true;
    std::uint64_t checked = 0;
    std::vector<std::array<std::int64_t, 5>> solutions;  // (delta, a, b, c, d)
};

/// abc + (delta-a)(delta-b)d = +-1 over 1 <= a,b <= delta-1, c,d >= 1,
/// c + d <= delta, for 2 <= delta <= delta_max.
DiofantReport verify_diofant(std::int64_t delta_max);

/// Same equation with c, d ranging over the nonzero integers in [-window, window].
DiofantReport diofant_literal_solutions(std::int64_t delta_max, std::int64_t window);

/// The hyperbola c x y + d (delta-x)(delta-y) = eps meets y = 0 at x*.
struct HyperbolaCertificate {
    Rat intercept;             // x* = delta - eps / (d delta)
    bool intercept_beyond = false;  // x* > delta - 1
    Rat slope;                 // dy/dx at (x*, 0), when defined
    bool slope_positive = false;
    bool holds() const { return intercept_beyond && slope_positive; }
};

/// Throws PreconditionError for c = 0 or d = 0.
HyperbolaCertificate hyperbola_certificate(std::int64_t delta, std::int64_t c, std::int64_t d, int eps);

/// Elementary tetrahedra in Gamma_delta with four exits, for delta <= 4.
std::vector<std::array<LatticePoint3, 4>> enumerate_four_exit_elementary(int delta);

/// conv{(0,0,0), (1,0,0), (delta-1,0,1), (0,1,delta-1)}.
std::array<LatticePoint3, 4> classprop_b_witness(int delta);

}  // namespace tropline
