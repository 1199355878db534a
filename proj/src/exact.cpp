#include "fuchscode/exact.hpp"

#include <cmath>
#include <sstream>

namespace fxc {

namespace {

void require_same_radicand(const QuadHalfInt& x, const QuadHalfInt& y) {
    if (x.a() != y.a()) throw DomainError("mixed radicands: sqrt(" + std::to_string(x.a()) + ") vs sqrt(" + std::to_string(y.a()) + ")");
}

// Product of two doubled coordinates: (u1 + v1*s)(u2 + v2*s) with s^2 = a.
// Result is 4x the value of the underlying product.
struct Doubled {
    BigInt u, v;
};

Doubled doubled_mul(const QuadHalfInt& x, const QuadHalfInt& y) {
    return {x.u() * y.u() + x.a() * x.v() * y.v(), x.u() * y.v() + x.v() * y.u()};
}

QuadHalfInt halve_to_lattice(Doubled d, int a, const char* what) {
    if ((d.u & 1) != 0 || (d.v & 1) != 0) throw DomainError(std::string(what) + " leaves the half-integer lattice");
    return {d.u >> 1, d.v >> 1, a};
}

} // namespace

double QuadHalfInt::to_double() const {
    return (u_.convert_to<double>() + v_.convert_to<double>() * std::sqrt(static_cast<double>(a_))) * 0.5;
}

std::string QuadHalfInt::str() const {
    std::ostringstream os;
    os << "(" << u_.str();
    if (v_ >= 0) os << "+" << v_.str();
    else os << v_.str();
    os << "*r" << a_ << ")/2";
    return os.str();
}

QuadHalfInt quad_add(const QuadHalfInt& x, const QuadHalfInt& y) {
    require_same_radicand(x, y);
    return {x.u() + y.u(), x.v() + y.v(), x.a()};
}

QuadHalfInt quad_sub(const QuadHalfInt& x, const QuadHalfInt& y) {
    require_same_radicand(x, y);
    return {x.u() - y.u(), x.v() - y.v(), x.a()};
}

QuadHalfInt quad_mul(const QuadHalfInt& x, const QuadHalfInt& y) {
    require_same_radicand(x, y);
    return halve_to_lattice(doubled_mul(x, y), x.a(), "product");
}

QuadHalfInt quad_conj(const QuadHalfInt& x) {
    return {x.u(), -x.v(), x.a()};
}

Rational quad_norm(const QuadHalfInt& x) {
    return {x.u() * x.u() - x.a() * x.v() * x.v(), 4};
}

Rational quad_trace(const QuadHalfInt& x) {
    return {x.u(), 1};
}

QuadMatrix::QuadMatrix(QuadHalfInt e00, QuadHalfInt e01, QuadHalfInt e10, QuadHalfInt e11)
    : e_{std::move(e00), std::move(e01), std::move(e10), std::move(e11)} {
    for (int i = 1; i < 4; ++i) {
        if (e_[i].a() != e_[0].a()) throw DomainError("matrix entries over mixed radicands");
    }
}

QuadMatrix QuadMatrix::identity(int a) {
    QuadHalfInt one = QuadHalfInt::from_int(1, a);
    QuadHalfInt zero(0, 0, a);
    return {one, zero, zero, one};
}

bool QuadMatrix::is_identity() const {
    return *this == identity(a());
}

bool QuadMatrix::is_pm_identity() const {
    return is_identity() || (-*this).is_identity();
}

std::string QuadMatrix::str() const {
    return "[" + e_[0].str() + ", " + e_[1].str() + "; " + e_[2].str() + ", " + e_[3].str() + "]";
}

QuadMatrix mat_mul(const QuadMatrix& x, const QuadMatrix& y) {
    if (x.a() != y.a()) throw DomainError("matrix product over mixed radicands");
    int a = x.a();
    auto cell = [&](int r, int c) {
        Doubled p = doubled_mul(x.at(r, 0), y.at(0, c));
        Doubled q = doubled_mul(x.at(r, 1), y.at(1, c));
        return halve_to_lattice({p.u + q.u, p.v + q.v}, a, "matrix product entry");
    };
    return {cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1)};
}

QuadHalfInt mat_det(const QuadMatrix& m) {
    Doubled p = doubled_mul(m.at(0, 0), m.at(1, 1));
    Doubled q = doubled_mul(m.at(0, 1), m.at(1, 0));
    return halve_to_lattice({p.u - q.u, p.v - q.v}, m.a(), "determinant");
}

QuadMatrix mat_inv(const QuadMatrix& m) {
    if (mat_det(m) != QuadHalfInt::from_int(1, m.a())) throw DomainError("inverse requires det 1");
    return {m.at(1, 1), -m.at(0, 1), -m.at(1, 0), m.at(0, 0)};
}

QuadHalfInt mat_trace(const QuadMatrix& m) {
    return quad_add(m.at(0, 0), m.at(1, 1));
}

bool mat_eq_mod_sign(const QuadMatrix& x, const QuadMatrix& y) {
    return x == y || x == -y;
}

std::string canonical_sign_key(const QuadMatrix& m) {
    const BigInt* coords[8];
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        coords[k++] = &m.at(i / 2, i % 2).u();
        coords[k++] = &m.at(i / 2, i % 2).v();
    }
    int flip = 1;
    for (const BigInt* c : coords) {
        if (*c != 0) {
            flip = (*c < 0) ? -1 : 1;
            break;
        }
    }
    std::ostringstream os;
    for (const BigInt* c : coords) os << BigInt(flip * *c).str() << "|";
    os << m.a();
    return os.str();
}

std::complex<double> mat_entry_complex(const QuadHalfInt& x) {
    return {x.to_double(), 0.0};
}

} // namespace fxc
