#include "fuchscode/unitsgen.hpp"

#include <cmath>
#include <cstdlib>

#include <boost/multiprecision/cpp_int.hpp>

#include "fuchscode/errors.hpp"

namespace fxc {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void check_type_a_prime(long p) {
    if (!is_prime(p) || p % 4 != 3 || p >= 10000)
        throw DomainError("p must be a prime congruent to 3 mod 4 below 10^4");
}

// Multiplication in Z[sqrt p]: (u + v sqrt p)(x + y sqrt p).
std::pair<BigInt, BigInt> pell_mul(const std::pair<BigInt, BigInt>& l,
                                   const std::pair<BigInt, BigInt>& r, long p) {
    return {l.first * r.first + p * l.second * r.second,
            l.first * r.second + l.second * r.first};
}

std::pair<BigInt, BigInt> pell_pow(const std::pair<BigInt, BigInt>& base, long n, long p) {
    std::pair<BigInt, BigInt> out{1, 0};
    for (long i = 0; i < n; ++i) out = pell_mul(out, base, p);
    return out;
}

constexpr long kMCap = 64;
constexpr long kKCap = 128;

} // namespace

PellSolution fundamental_unit(long p) {
    check_type_a_prime(p);
    long a0 = static_cast<long>(std::sqrt(static_cast<double>(p)));
    while (a0 * a0 > p) --a0;
    while ((a0 + 1) * (a0 + 1) <= p) ++a0;

    // Convergents of the continued fraction of sqrt(p); the first one with
    // h^2 - p k^2 = 1 is the minimal solution.
    long m = 0, d = 1, a = a0;
    BigInt h_prev = 1, h = a0, k_prev = 0, k = 1;
    while (h * h - p * k * k != 1) {
        m = d * a - m;
        d = (p - m * m) / d;
        a = (a0 + m) / d;
        BigInt h_next = a * h + h_prev;
        BigInt k_next = a * k + k_prev;
        h_prev = std::move(h);
        k_prev = std::move(k);
        h = std::move(h_next);
        k = std::move(k_next);
    }
    return {h, k};
}

QuaternionTuple phi_p(long p, long m, long k1, long k2) {
    if (m < 1 || k1 < 0 || k2 < 0)
        throw DomainError("phi_p needs m >= 1 and nonnegative k1, k2");
    PellSolution eps = fundamental_unit(p);
    std::pair<BigInt, BigInt> base{eps.x, eps.y};
    auto [am, bm] = pell_pow(base, m, p);
    auto [A, B] = pell_pow(base, k1, p);
    auto [C, D] = pell_pow(base, k2, p);
    // x + y sqrt p = a_m eps^k1;  z + t sqrt p = sqrt(p) b_m eps^k2.
    return {am * A, am * B, p * bm * D, bm * C};
}

QuaternionTuple quaternion_mul(int a, int b, const QuaternionTuple& u, const QuaternionTuple& v) {
    return {
        u.x * v.x + a * u.y * v.y + b * u.z * v.z - a * b * u.t * v.t,
        u.x * v.y + u.y * v.x - b * (u.z * v.t - u.t * v.z),
        u.x * v.z + u.z * v.x + a * (u.y * v.t - u.t * v.y),
        u.x * v.t + u.t * v.x + u.y * v.z - u.z * v.y,
    };
}

QuaternionTuple quaternion_pow(int a, int b, const QuaternionTuple& u, long m) {
    if (m < 0) throw DomainError("negative quaternion power");
    QuaternionTuple out{1, 0, 0, 0};
    for (long i = 0; i < m; ++i) out = quaternion_mul(a, b, out, u);
    return out;
}

BigInt quaternion_norm(int a, int b, const QuaternionTuple& u) {
    return u.x * u.x - a * u.y * u.y - b * u.z * u.z + a * b * u.t * u.t;
}

QuadMatrix tuple_to_matrix(int a, int b, const QuaternionTuple& t) {
    if (quaternion_norm(a, b, t) != 1) throw DomainError("tuple does not have reduced norm 1");
    return {QuadHalfInt::from_quad_int(t.x, t.y, a), QuadHalfInt::from_quad_int(t.z, t.t, a),
            QuadHalfInt::from_quad_int(b * t.z, -b * t.t, a),
            QuadHalfInt::from_quad_int(t.x, -t.y, a)};
}

bool in_gamma_2p(const QuadMatrix& m, long p) {
    if (m.a() != p) return false;
    const QuadHalfInt &al = m.at(0, 0), &be = m.at(0, 1);
    if (m.at(1, 1).u() != al.u() || m.at(1, 1).v() != -al.v()) return false;
    if (m.at(1, 0).u() != -be.u() || m.at(1, 0).v() != be.v()) return false;
    try {
        if (mat_det(m) != QuadHalfInt::from_int(1, m.a())) return false;
    } catch (const DomainError&) {
        return false;
    }
    // alpha = beta = alpha sqrt(p) (mod 2) collapses to a single parity class
    // across all four integral coordinates.
    BigInt parity = ((al.u() % 2) + 2) % 2;
    for (const BigInt& c : {al.v(), be.u(), be.v()})
        if (((c % 2) + 2) % 2 != parity) return false;
    return true;
}

int legendre(const BigInt& a, long p) {
    if (p == 2) {
        BigInt r = ((a % 8) + 8) % 8;
        if (r % 2 == 0) return 0;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    if (!is_prime(p) || p < 3) throw DomainError("symbol modulus must be prime");
    BigInt r = ((a % p) + p) % p;
    if (r == 0) return 0;
    BigInt e = boost::multiprecision::powm(r, BigInt((p - 1) / 2), BigInt(p));
    return e == 1 ? 1 : -1;
}

bool embeds(long q, long p1, long p2) {
    BigInt disc = 4 * BigInt(q);
    return legendre(disc, p1) != 1 && legendre(disc, p2) != 1;
}

QuadMatrix psi_q(int a, int b, long q, const PellSolution& unit,
                 const std::array<BigInt, 3>& pure, long m) {
    if (unit.x * unit.x - q * unit.y * unit.y != 1)
        throw DomainError("unit does not solve the Pell equation for q");
    if (a * pure[0] * pure[0] + b * pure[1] * pure[1] - a * b * pure[2] * pure[2] != q)
        throw DomainError("pure quaternion does not square to q");
    QuaternionTuple u{unit.x, unit.y * pure[0], unit.y * pure[1], unit.y * pure[2]};
    return tuple_to_matrix(a, b, quaternion_pow(a, b, u, m));
}

std::pair<int, QuadMatrix> triple_encode(const ParamTriple& tr, long p) {
    if (tr.m == 0) throw DomainError("triple must have nonzero m");
    if (tr.k1 < 0 || tr.k2 < 0) throw DomainError("triple exponents must be nonnegative");
    int sign = tr.m < 0 ? -1 : +1;
    QuaternionTuple t = phi_p(p, std::abs(tr.m), tr.k1, tr.k2);
    return {sign, tuple_to_matrix(static_cast<int>(p), -1, t)};
}

ParamTriple triple_decode(int sign, const QuaternionTuple& t, long p) {
    PellSolution eps = fundamental_unit(p);
    std::pair<BigInt, BigInt> base{eps.x, eps.y};
    std::pair<BigInt, BigInt> power{1, 0};
    for (long m = 1; m <= kMCap; ++m) {
        power = pell_mul(power, base, p);
        const BigInt& am = power.first;
        const BigInt& bm = power.second;

        long k1 = -1, k2 = -1;
        std::pair<BigInt, BigInt> e{1, 0};
        for (long k = 0; k <= kKCap && am * e.first <= t.x; ++k) {
            if (am * e.first == t.x && am * e.second == t.y) {
                k1 = k;
                break;
            }
            e = pell_mul(e, base, p);
        }
        if (k1 < 0) continue;
        e = {1, 0};
        for (long k = 0; k <= kKCap && bm * e.first <= t.t; ++k) {
            if (p * bm * e.second == t.z && bm * e.first == t.t) {
                k2 = k;
                break;
            }
            e = pell_mul(e, base, p);
        }
        if (k2 < 0) continue;
        return {sign < 0 ? -m : m, k1, k2};
    }
    throw NotInImageError("tuple is outside the parametrized family");
}

} // namespace fxc
