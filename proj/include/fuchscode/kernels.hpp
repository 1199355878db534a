#pragma once

#include <cstddef>

namespace fxc {

// Index of the constellation point minimizing (xs[i]-qx)^2 + (ys[i]-qy)^2;
// ties resolve to the lowest index. Both variants evaluate the identical
// IEEE expression (no FMA contraction), so their results match bit for bit.
using NearestFn = std::size_t (*)(const double* xs, const double* ys, std::size_t n,
                                  double qx, double qy);

std::size_t nearest_point_scalar(const double* xs, const double* ys, std::size_t n,
                                 double qx, double qy);

#if defined(FXC_KERNEL_AVX2)
std::size_t nearest_point_avx2(const double* xs, const double* ys, std::size_t n,
                               double qx, double qy);
#endif

// Picks the widest variant the running CPU supports.
NearestFn nearest_point_kernel();
const char* nearest_point_kernel_name();

} // namespace fxc
