#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuchscode/fuchsian.hpp"

namespace fxc {

struct Codeword {
    int index = 0;
    int sign = +1;                      // +1: gamma(tau), -1: -gamma(tau)
    std::optional<QuadMatrix> element;  // empty for grid constellations
    std::string label;
    Complex point{};
    int depth = 0;
};

// A constellation: either the orbit code {±gamma(tau)} of a group, or a
// square QAM grid (discriminant 0). Points are cached in structure-of-arrays
// form for the nearest-point kernels.
struct Codebook {
    int discriminant = 0;
    Complex tau{};
    std::vector<Codeword> words;
    int code_depth = 0; // max element depth, l(C)
    std::vector<double> xs, ys;

    std::size_t size() const { return words.size(); }
};

struct LabeledElement {
    std::string label;
    QuadMatrix m;
};

// C = {±gamma(tau) : gamma in S}; throws CenterNotInteriorError when tau is
// not an interior point, DuplicatePointError when two codewords collide.
Codebook build_code(const Group& g, const std::vector<LabeledElement>& S, Complex tau);

// Renders a BFS word over the group's alphabet, "Id" for the empty word.
std::string element_label(const Group& g, const GroupElement& el);

// Deterministic S selection: smallest k with theta_k >= n, then the first n
// elements ordered by (depth, word length, lexicographic word).
std::vector<GroupElement> choose_S(const Group& g, std::size_t n);

// The packaged constructions for q = 4, 8, 16 use the printed element sets;
// other sizes fall back to choose_S. q must be even (q = 2N).
Codebook nuf_codebook(const Group& g, std::size_t q, std::optional<Complex> tau = std::nullopt);

// 2^(2r)-QAM over the odd-integer grid {±a±bi : 1 <= a,b <= 2^r - 1, a,b odd}.
Codebook qam_codebook(int r);

double power_average(const Codebook& c);
double min_sq_distance(const Codebook& c);

// Squared clearance to the nearest decision border: for each codeword the
// images of the domain sides under its element (plus the real axis), then
// the minimum over the code.
double min_sq_border_distance(const Codebook& c, const Group& g);

double delta_ml(const Codebook& c);
double delta_pra(const Codebook& c, const Group& g);

} // namespace fxc
