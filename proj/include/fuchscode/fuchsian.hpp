#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fuchscode/exact.hpp"

namespace fxc {

using Complex = std::complex<double>;

// Isometric circle |c21*z + c22| = 1 of a matrix acting on the upper half
// plane: center -c22/c21 (real, since entries are real), radius 1/|c21|.
struct IsometricCircle {
    double center = 0.0;
    double radius = 0.0;
};

// Image of a circle under a real Mobius map: a circle again, or a vertical
// line when the source passes through the pole.
struct ImageCircle {
    bool is_line = false;
    double center = 0.0; // line: the abscissa
    double radius = 0.0; // line: unused
};

// One boundary condition of the reduction domain, owned by the group element
// applied when the condition is violated. Every side is a geodesic, hence a
// circle centered on the real axis; the kind records which side of it the
// domain lies on.
struct Side {
    enum class Kind {
        CircleExt, // membership requires |z - center| >= radius
        CircleInt, // membership requires |z - center| <= radius
    };
    Kind kind;
    QuadMatrix g;
    std::string label;
    double center = 0.0;
    double radius = 0.0;
    // Index of the side owned by g^-1. Applying g to a point that violates
    // this side lands it strictly on the good side of the paired one, so the
    // reduction loop can skip that single check.
    int pair = -1;
    // Translate q = g^-1(tau), used by the reduction step to pick, among all
    // violated sides, the one whose application moves the point into the
    // hyperbolically nearest tile.
    Complex q{};
    double inv_im_q = 0.0;
};

// A reduction-domain side check costs 5 arithmetic operations, one
// accumulator update in the reduction loop costs 19 (12 for the 2x2 exact
// product, 7 for the point move), and emitting the decoded point costs 7.
struct OpCounter {
    long long circle_checks = 0;
    long long step3_count = 0;
    long long final_mobius = 0;

    long long total() const { return 5 * circle_checks + 19 * step3_count + 7 * final_mobius; }
    void reset() { circle_checks = step3_count = final_mobius = 0; }
};

struct Relation {
    std::string name;
    std::vector<int> word; // +k / -k = generator k / its inverse, 1-based
};

// Group data for one discriminant: exact generators, ordered reduction
// sides, canonical center, presentation relations.
struct Group {
    int discriminant = 0;
    int alg_a = 0;
    int alg_b = 0;
    std::vector<QuadMatrix> generators; // g1, g2, g3
    std::vector<Side> sides;
    int M = 0; // side-element count used by the complexity bounds
    Complex tau;
    std::vector<Relation> relations;
    // True when the side list is the exactly known one (D = 6); derived
    // side lists serve membership tests but carry no printed guarantee.
    bool printed_side_data = false;
    // Expansion letters for element enumeration: side owners and their
    // inverses, one per sign class, in side order. GroupElement words index
    // into this list.
    std::vector<std::pair<std::string, QuadMatrix>> alphabet;

    QuadMatrix word_to_matrix(const std::vector<int>& word) const;
};

// Packaged groups: discriminants 6, 10, 15. Throws UnsupportedGroupError.
const Group& catalog(int discriminant);

Complex mobius(const QuadMatrix& m, Complex z);

// Throws DomainError when the lower-left entry vanishes (no circle).
IsometricCircle isometric_circle(const QuadMatrix& m);

ImageCircle circle_image(const QuadMatrix& m, const IsometricCircle& c);

struct MembershipResult {
    bool inside = false;
    int first_violation = -1; // side index
};

// Scans sides in catalog order; skip_side omits one side (the pair of the
// element just applied in the reduction loop). Side checks are billed to the
// counter.
MembershipResult in_fundamental_domain(const Group& g, Complex z,
                                       int skip_side = -1, OpCounter* ops = nullptr);

// Strict interiority: at least margin away from every side circle, on the
// correct side of each. Code centers must satisfy this, or depths and the
// element lookup would be ill-defined.
bool interior_point(const Group& g, Complex z, double margin = 1e-9);

struct ReduceResult {
    Complex z = 0.0;        // reduced point
    QuadMatrix t;           // accumulated map, t(z_input) = z
    int iterations = 0;     // side applications performed
};

// Point reduction: move z into the fundamental domain by repeatedly applying,
// among the owners of violated sides, the one whose translate is nearest.
// Throws NonTerminationError when max_iter reduction steps do not reach the
// domain.
ReduceResult pra_reduce(const Group& g, Complex z, int max_iter = 1000, OpCounter* ops = nullptr);

// Reduction steps needed for m(probe); probe defaults to the group center.
// The count is probe-independent for interior probes.
int element_depth(const Group& g, const QuadMatrix& m, std::optional<Complex> probe = std::nullopt);

struct GroupElement {
    QuadMatrix m;
    std::vector<int> word; // alphabet indices, shortest-first discovery order
    int depth = 0;
};

// All group elements of depth <= k (mod global sign), found by breadth-first
// expansion over side owners; includes the identity at depth 0. Ordered by
// (depth, word length, lexicographic word).
std::vector<GroupElement> enumerate_Sk(const Group& g, int k);

// |S^k|, the code-size budget theta_k.
std::size_t theta(const Group& g, int k);

std::string side_label(const Group& g, int side_index);

} // namespace fxc
