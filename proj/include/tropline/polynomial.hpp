#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tropline/lattice.hpp"
#include "tropline/rational.hpp"

namespace tropline {

/// Max-plus polynomial in x, y, z: f(p) = max_a (lambda_a + <a, p>).
class TropicalPolynomial {
public:
    TropicalPolynomial() = default;
    /// Throws PreconditionError for an empty term map or a negative exponent.
    explicit TropicalPolynomial(std::map<LatticePoint3, Rat> terms);

    const std::map<LatticePoint3, Rat>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    /// Largest total degree of an exponent.
    int degree() const { return degree_; }
    /// Exponents in lexicographic order, and the matching coefficients.
    std::vector<LatticePoint3> exponents() const;
    std::vector<Rat> coefficients() const;
    const Rat& coefficient(const LatticePoint3& a) const;
    bool has_term(const LatticePoint3& a) const { return terms_.count(a) != 0; }

    /// True iff the Newton polytope is the full simplex Gamma_degree.
    bool newton_is_full_simplex() const;

    friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

private:
    std::map<LatticePoint3, Rat> terms_;
    int degree_ = 0;
};

struct ParseOptions {
    bool allow_degree_zero = false;
};

/// Grammar: terms joined by '+' (a binary '-' is read as "+ -"); a term is a
/// coefficient optionally followed by `*x^i`, `*y^j`, `*z^k` factors (`^1`
/// optional). Coefficients are integers, decimals or p/q with unary minus.
/// Throws ParseError carrying the byte offset of the problem.
TropicalPolynomial parse_polynomial(std::string_view text, const ParseOptions& opts = {});

/// Canonical text: terms by total degree descending, then exponent lex descending.
std::string render(const TropicalPolynomial& f);

struct Evaluation {
    Rat value;
    /// Maximizing exponents in lexicographic order.
    std::vector<LatticePoint3> argmax;
};

Evaluation evaluate(const TropicalPolynomial& f, const QPoint3& p);

/// Permutation of {1,2,3,4}; perm[i-1] is the image of i.
using Permutation = std::array<int, 4>;

Permutation identity_permutation();
/// (s o t)(i) = s(t(i))
Permutation compose(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& s);
/// Transposition swapping i and j.
Permutation transposition(int i, int j);
std::vector<Permutation> all_permutations();

/// Homogenize with a4 = delta - |a|, move coordinate i to sigma(i), drop the fourth.
LatticePoint3 s4_exponent(const Permutation& s, const LatticePoint3& a, int delta);
/// Point action compatible with s4_exponent: (x, 0) permuted, then the fourth coordinate subtracted.
QPoint3 s4_point(const Permutation& s, const QPoint3& p);
/// Linear part of the point action.
Vec3 s4_vector(const Permutation& s, const Vec3& v);
/// Exponents are homogenized with respect to `delta` (defaults to the degree of f).
TropicalPolynomial s4_action(const Permutation& s, const TropicalPolynomial& f, int delta = -1);

}  // namespace tropline
