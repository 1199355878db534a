#include "fuchscode/kernels.hpp"

namespace fxc {

NearestFn nearest_point_kernel() {
#if defined(FXC_KERNEL_AVX2)
    if (__builtin_cpu_supports("avx2")) return nearest_point_avx2;
#endif
    return nearest_point_scalar;
}

const char* nearest_point_kernel_name() {
#if defined(FXC_KERNEL_AVX2)
    if (__builtin_cpu_supports("avx2")) return "avx2";
#endif
    return "scalar";
}

} // namespace fxc
