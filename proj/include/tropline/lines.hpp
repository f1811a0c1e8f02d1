#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tropline/surface.hpp"

namespace tropline {

/// Combinatorial type. Each pair lists the ray indices sharing a vertex; the
/// first pair sits at v1.
enum class LineType { t12_34, t13_24, t14_23, t1234 };

std::string type_name(LineType t);
/// Accepts "(12)(34)", "(13)(24)", "(14)(23)", "(1234)". Throws ParseError.
LineType parse_line_type(const std::string& s);
/// Ray indices at v1 and at v2. For (1234) v1 carries (1,2) and v2 carries (3,4).
std::array<int, 2> rays_at_v1(LineType t);
std::array<int, 2> rays_at_v2(LineType t);
/// Direction of the bounded edge from v1 to v2: e1+e2, e1+e3 or -e2-e3.
Vec3 bounded_direction(LineType t);

struct TropicalLine {
    LineType type = LineType::t1234;
    QPoint3 v1;
    QPoint3 v2;
    bool degenerate() const { return v1 == v2; }
    friend bool operator==(const TropicalLine&, const TropicalLine&) = default;
};

/// Throws PreconditionError unless the vertices match the type: equal for
/// (1234), otherwise v2 - v1 a positive multiple of bounded_direction.
void validate(const TropicalLine& l);
/// The s > 0 with v2 - v1 = s * bounded_direction (0 for degenerate lines).
Rat bounded_length(const TropicalLine& l);

/// Edge of a line: l_i for i = 1..4 are rays, l_5 the bounded segment.
struct LineEdge {
    int index = 0;
    QPoint3 origin;
    Vec3 dir{0, 0, 0};
    std::optional<Rat> length;  // parameter length along dir; empty for rays
};

/// l_1..l_4, then l_5 when the line is not degenerate.
std::vector<LineEdge> line_edges(const TropicalLine& l);

/// Piece of the upper envelope along origin + t*dir, on the open interval (start, end).
struct EnvelopePiece {
    Rat start;
    std::optional<Rat> end;
    std::vector<int> argmax;  // indices into f's exponents in lexicographic order
};

/// Exact upper envelope of the terms of f restricted to a segment or ray.
std::vector<EnvelopePiece> envelope(const TropicalPolynomial& f, const QPoint3& origin, const QPoint3& dir,
                                    const std::optional<Rat>& length);

struct EdgeReport {
    bool contained = false;
    /// Argmax sets of the envelope pieces, in order along the edge.
    std::vector<std::vector<int>> pieces;
};

/// Whether origin + t*dir, 0 <= t <= length (a ray when length is empty), lies in V_tr(f).
EdgeReport contains_edge(const TropicalPolynomial& f, const QPoint3& origin, const Vec3& dir,
                         const std::optional<Rat>& length);

bool contains_line(const TropicalPolynomial& f, const TropicalLine& l);
bool point_on_line(const TropicalLine& l, const QPoint3& p);

/// The data set {V1, V2, C1..C5, kappa} of a line on a surface.
struct LineData {
    CellRef V1;
    CellRef V2;
    std::array<std::vector<CellRef>, 5> C;
    LineType kappa = LineType::t1234;
    bool trespassing(int i) const { return C[i - 1].size() >= 2; }
};

/// Throws PreconditionError when the line is not contained in the surface.
LineData line_data(const SurfaceComplex& x, const TropicalLine& l);

/// True iff some vertex of the surface lies on the line.
bool passes_through_vertex(const SurfaceComplex& x, const TropicalLine& l);

/// A one-parameter family of lines L_t, 0 < t < t_max, sharing two points.
struct FamilyWitness {
    TropicalLine base;
    LineType member_type = LineType::t12_34;
    int moving_vertex = 1;      // vertex of the members moving along `direction`
    Vec3 direction{0, 0, 0};    // lattice direction of that vertex
    QPoint3 rate1;              // velocity of v1
    QPoint3 rate2;              // velocity of v2
    std::optional<Rat> t_max;   // empty when unbounded
    std::array<QPoint3, 2> anchors;
    std::vector<Rat> samples;   // parameters at which membership was verified

    TropicalLine member(const Rat& t) const;
};

/// Sample parameters: t_max*k/11 for k = 1..10, or 1..10 when unbounded.
std::vector<Rat> family_samples(const std::optional<Rat>& t_max);

/// Checks every sample member lies on the surface, then searches for two
/// distinct points common to all members and stores them as anchors.
bool verify_family(const TropicalPolynomial& f, FamilyWitness& w);

/// Tries to pull apart the vertex of a degenerate line on x: one vertex moves
/// in direction omega_a + omega_b for each of the six choices of the pair
/// (a, b). Returns the first verified family.
std::optional<FamilyWitness> separate_degenerate(const SurfaceComplex& x, const TropicalLine& l);

struct Isolated {};
using Classification = std::variant<Isolated, FamilyWitness>;

/// Isolated vs two-point family via the (dim V1, dim V2) case analysis.
/// Throws PreconditionError("classification theorem requires degree >= 3")
/// for surfaces of degree below three.
Classification classify_line(const SurfaceComplex& x, const TropicalLine& l);

struct InfiniteLines {
    std::string reason;
};
using TwoPointResult = std::variant<TropicalLine, InfiniteLines>;

/// The lines through two distinct points: unique unless Q - P has a zero or
/// two equal coordinates. The unique line is verified to contain both points.
TwoPointResult lines_through(const QPoint3& p, const QPoint3& q);

}  // namespace tropline
