#include "fuchscode/kernels.hpp"

namespace fxc {

std::size_t nearest_point_scalar(const double* xs, const double* ys, std::size_t n,
                                 double qx, double qy) {
    std::size_t best = 0;
    double dx = xs[0] - qx, dy = ys[0] - qy;
    double best_d = dx * dx + dy * dy;
    for (std::size_t i = 1; i < n; ++i) {
        dx = xs[i] - qx;
        dy = ys[i] - qy;
        double d = dx * dx + dy * dy;
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

} // namespace fxc
