#include "fuchscode/decode.hpp"

#include <cmath>

#include "fuchscode/errors.hpp"
#include "fuchscode/kernels.hpp"

namespace fxc {

DecodeResult pra_decode(const Codebook& c, const Group& g, Complex y) {
    if (c.discriminant != g.discriminant)
        throw DomainError("codebook was built over a different group");
    if (c.discriminant == 0) throw DomainError("reduction decoding needs a group code");

    DecodeResult out;
    out.sign = y.imag() < 0.0 ? -1 : +1;
    Complex z0 = out.sign < 0 ? -y : y;

    OpCounter ops;
    ReduceResult red;
    bool reduced = true;
    try {
        red = pra_reduce(g, z0, c.code_depth, &ops);
    } catch (const NonTerminationError&) {
        // Budget exhausted: the point sits deeper than any codeword, so no
        // match is possible. Failure, not an error.
        reduced = false;
    }
    out.iterations = reduced ? red.iterations : c.code_depth;
    out.total_ops = ops.total();
    if (!reduced) return out;

    QuadMatrix inv = mat_inv(red.t);
    for (std::size_t j = 0; j < c.words.size(); j += 2) {
        if (!mat_eq_mod_sign(*c.words[j].element, inv)) continue;
        out.status = DecodeStatus::Ok;
        out.index = static_cast<int>(j) + (out.sign < 0 ? 1 : 0);
        out.point = c.words[out.index].point;
        out.total_ops += 7;
        return out;
    }
    return out;
}

DecodeResult ml_decode(const Codebook& c, Complex y) {
    NearestFn kernel = nearest_point_kernel();
    std::size_t idx = kernel(c.xs.data(), c.ys.data(), c.xs.size(), y.real(), y.imag());
    DecodeResult out;
    out.status = DecodeStatus::Ok;
    out.index = static_cast<int>(idx);
    out.sign = c.words[idx].sign;
    out.point = c.words[idx].point;
    out.total_ops = 5LL * static_cast<long long>(c.size()) - 1;
    return out;
}

long long pra_bound(int code_depth, int M) {
    return static_cast<long long>(code_depth) * (5LL * M + 14) + 5LL * M + 7;
}

double depth_bound(std::size_t size, double kappa0) {
    return kappa0 * (std::log2(static_cast<double>(size) + 2.0) - 2.0);
}

double r_bar(std::size_t size, int M, double kappa0) {
    return depth_bound(size, kappa0) * (5.0 * M + 14.0) + 5.0 * M + 7.0;
}

double crp(std::size_t size, int M, double kappa0) {
    double ml = 5.0 * static_cast<double>(size) - 1.0;
    double pct = 100.0 * (ml - r_bar(size, M, kappa0)) / ml;
    return pct < 0.0 ? 0.0 : pct;
}

} // namespace fxc
