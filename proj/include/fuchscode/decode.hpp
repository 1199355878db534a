#pragma once

#include "fuchscode/codebook.hpp"

namespace fxc {

enum class DecodeStatus { Ok, Failure };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Failure;
    int index = -1;     // codeword index in the codebook
    int sign = +1;      // branch taken: -1 means -y was reduced
    Complex point{};    // decoded constellation point
    int iterations = 0;
    long long total_ops = 0;
};

// Reduction decoding: reduce y (or -y when Im y < 0), cap the reduction at
// l(C) steps (a longer reduction cannot match any codeword), and look the
// accumulated map up among the code elements by exact matrix identity mod
// sign. No match is a Failure, never an exception.
DecodeResult pra_decode(const Codebook& c, const Group& g, Complex y);

// Exhaustive nearest-point decoding; 5|C| - 1 operations by the same
// accounting that bills a distance evaluation at 5.
DecodeResult ml_decode(const Codebook& c, Complex y);

// Reduction-decoding operation ceiling for a code of depth l on a domain
// with M side elements: l(5M + 14) + 5M + 7.
long long pra_bound(int code_depth, int M);

// Depth growth bound: kappa0 * (log2(size + 2) - 2).
double depth_bound(std::size_t size, double kappa0 = 1.0);

// Mean reduction cost r implied by the depth bound.
double r_bar(std::size_t size, int M, double kappa0 = 1.0);

// Complexity reduction percentage vs exhaustive decoding, clamped at 0.
double crp(std::size_t size, int M, double kappa0 = 1.0);

} // namespace fxc
