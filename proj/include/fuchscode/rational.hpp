#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "fuchscode/errors.hpp"

namespace fxc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with reduced numerator/denominator, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    explicit Rational(long n) : num_(n), den_(1) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    Rational operator+(const Rational& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    Rational operator-(const Rational& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    Rational operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }

    bool is_integer() const { return den_ == 1; }

    double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    BigInt num_;
    BigInt den_;
};

} // namespace fxc
