#pragma once

#include <array>
#include <utility>

#include "fuchscode/exact.hpp"

namespace fxc {

// Minimal solution of x^2 - p y^2 = 1 with x, y > 0.
struct PellSolution {
    BigInt x, y;
};

// Integer quaternion x + yI + zJ + tK in the algebra (a, b).
struct QuaternionTuple {
    BigInt x, y, z, t;
};

struct ParamTriple {
    long m = 0; // signed: -m encodes the negated unit
    long k1 = 0;
    long k2 = 0;
};

// Continued-fraction solution of the Pell equation.
PellSolution fundamental_unit(long p);

// Unit parametrization over Q(sqrt p): with eps the fundamental unit and
// eps^m = a_m + b_m sqrt(p), returns (x, y, z, t) where
// x + y sqrt(p) = a_m eps^k1 and z + t sqrt(p) = sqrt(p) b_m eps^k2.
QuaternionTuple phi_p(long p, long m, long k1, long k2);

QuaternionTuple quaternion_mul(int a, int b, const QuaternionTuple& u, const QuaternionTuple& v);
QuaternionTuple quaternion_pow(int a, int b, const QuaternionTuple& u, long m);
// x^2 - a y^2 - b z^2 + ab t^2, the reduced norm.
BigInt quaternion_norm(int a, int b, const QuaternionTuple& u);

// Matrix of x + yI + zJ + tK:  [ x + y√a   z + t√a  ]
//                              [ b(z - t√a)  x - y√a ].
QuadMatrix tuple_to_matrix(int a, int b, const QuaternionTuple& t);

// Structure test for the D = 2p groups: m = (1/2)(alpha, beta; -beta', alpha')
// with alpha, beta integral over sqrt(p), det 1, alpha ≡ beta ≡ alpha sqrt(p)
// (mod 2).
bool in_gamma_2p(const QuadMatrix& m, long p);

// Kronecker-extended Legendre symbol (a/p); p = 2 uses the Kronecker rule.
int legendre(const BigInt& a, long p);

// Field Q(sqrt q), q ≡ 3 (mod 4) (so the field discriminant is 4q), embeds
// into the rational quaternion algebra ramified exactly at {p1, p2} iff the
// symbol is not +1 at either prime.
bool embeds(long q, long p1, long p2);

// Norm-1 units from a fundamental Pell unit and a pure quaternion omega with
// omega^2 = q: psi(m) = (x_q + y_q * omega)^m. pure = (px, py, pz) must solve
// a px^2 + b py^2 - ab pz^2 = q exactly.
QuadMatrix psi_q(int a, int b, long q, const PellSolution& unit,
                 const std::array<BigInt, 3>& pure, long m);

// Triple codec for D = 2p unit groups: sign carries the global sign of the
// element, the matrix is tuple_to_matrix(phi_p(p, |m|, k1, k2)).
std::pair<int, QuadMatrix> triple_encode(const ParamTriple& tr, long p);
ParamTriple triple_decode(int sign, const QuaternionTuple& t, long p);

} // namespace fxc
