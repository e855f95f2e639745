#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gcset {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always held in canonical form (reduced, positive denominator); equality is
/// canonical-form equality. There are no tolerances anywhere in this library.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long long v) : v_(v) {}
    Rational(BigInt num, BigInt den) : v_(std::move(num), std::move(den)) {
        if (denominator(v_) == 0) throw std::invalid_argument("Rational: zero denominator");
    }

    /// Parses "p/q" or a plain decimal integer.
    explicit Rational(const std::string& text) {
        try {
            v_ = boost::multiprecision::cpp_rational(text);
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        }
    }

    BigInt num() const { return numerator(v_); }
    BigInt den() const { return denominator(v_); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator(v_) == 1; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.str(); }

    Rational operator-() const { return Rational(-v_); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return a < Rational(0) ? -a : a; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

    static Rational pow(const Rational& base, int exp) {
        if (exp < 0) return Rational(1) / pow(base, -exp);
        Rational out(1), b = base;
        for (int e = exp; e > 0; e >>= 1) {
            if (e & 1) out *= b;
            b *= b;
        }
        return out;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using ZMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace gcset

namespace Eigen {

template <>
struct NumTraits<gcset::Rational> : GenericNumTraits<gcset::Rational> {
    using Real = gcset::Rational;
    using NonInteger = gcset::Rational;
    using Nested = gcset::Rational;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
    static int digits10() { return 0; }
};

}  // namespace Eigen
