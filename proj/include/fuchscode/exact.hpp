#pragma once

#include <array>
#include <complex>
#include <string>

#include "fuchscode/rational.hpp"

namespace fxc {

// Element of the half-integer lattice (u + v*sqrt(a))/2 over a fixed
// square-free radicand a > 1. The stored u, v are the doubled coordinates,
// so arithmetic never touches floating point. Products of two lattice
// elements land in quarter-denominators in general; quad_mul computes on
// doubled coordinates and divides back, throwing DomainError when the exact
// result is not representable over 2. Group-element matrix entries always
// are (their parity classes are multiplicatively closed).
class QuadHalfInt {
public:
    QuadHalfInt() : u_(0), v_(0), a_(0) {}
    QuadHalfInt(BigInt u, BigInt v, int a) : u_(std::move(u)), v_(std::move(v)), a_(a) {}

    // n as a lattice element, i.e. (2n + 0*sqrt(a))/2.
    static QuadHalfInt from_int(const BigInt& n, int a) { return {n * 2, 0, a}; }
    // w + x*sqrt(a) with integer w, x.
    static QuadHalfInt from_quad_int(const BigInt& w, const BigInt& x, int a) { return {w * 2, x * 2, a}; }

    const BigInt& u() const { return u_; }
    const BigInt& v() const { return v_; }
    int a() const { return a_; }

    bool is_zero() const { return u_ == 0 && v_ == 0; }
    bool operator==(const QuadHalfInt& o) const { return a_ == o.a_ && u_ == o.u_ && v_ == o.v_; }
    bool operator!=(const QuadHalfInt& o) const { return !(*this == o); }

    QuadHalfInt operator-() const { return {-u_, -v_, a_}; }

    double to_double() const;
    std::string str() const;

private:
    BigInt u_, v_;
    int a_;
};

QuadHalfInt quad_add(const QuadHalfInt& x, const QuadHalfInt& y);
QuadHalfInt quad_sub(const QuadHalfInt& x, const QuadHalfInt& y);
QuadHalfInt quad_mul(const QuadHalfInt& x, const QuadHalfInt& y);
// Galois conjugate (u - v*sqrt(a))/2.
QuadHalfInt quad_conj(const QuadHalfInt& x);
// x * conj(x) = (u^2 - a v^2)/4, exact.
Rational quad_norm(const QuadHalfInt& x);
// x + conj(x) = u, exact.
Rational quad_trace(const QuadHalfInt& x);

// 2x2 matrix over the half-integer lattice; group elements have det 1.
class QuadMatrix {
public:
    QuadMatrix() = default;
    QuadMatrix(QuadHalfInt e00, QuadHalfInt e01, QuadHalfInt e10, QuadHalfInt e11);

    static QuadMatrix identity(int a);

    const QuadHalfInt& at(int r, int c) const { return e_[r * 2 + c]; }
    int a() const { return e_[0].a(); }

    bool operator==(const QuadMatrix& o) const { return e_ == o.e_; }
    bool operator!=(const QuadMatrix& o) const { return !(*this == o); }

    QuadMatrix operator-() const { return {-e_[0], -e_[1], -e_[2], -e_[3]}; }

    bool is_identity() const;
    // Equal to +identity or -identity.
    bool is_pm_identity() const;

    std::string str() const;

private:
    std::array<QuadHalfInt, 4> e_;
};

QuadMatrix mat_mul(const QuadMatrix& x, const QuadMatrix& y);
// Exact determinant; throws DomainError if it falls outside the lattice.
QuadHalfInt mat_det(const QuadMatrix& m);
// Adjugate inverse; requires det == 1.
QuadMatrix mat_inv(const QuadMatrix& m);
QuadHalfInt mat_trace(const QuadMatrix& m);

bool mat_eq_mod_sign(const QuadMatrix& x, const QuadMatrix& y);

// Key identifying the matrix up to global sign: coordinates are flipped so
// the first nonzero one is positive, then serialized. Used for hash lookups.
std::string canonical_sign_key(const QuadMatrix& m);

std::complex<double> mat_entry_complex(const QuadHalfInt& x);

} // namespace fxc
