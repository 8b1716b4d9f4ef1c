#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sockpath {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : value_(value) {}  // NOLINT: implicit from integers
    Rational(const BigInt& value) : value_(value) {}  // NOLINT
    Rational(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Fixed-point rendering with `digits` places after the point, rounded
    /// half away from zero. digits = 0 yields an integer string.
    std::string to_decimal(unsigned digits) const;

    double to_double() const;

    /// Accepts "p/q" or "p" with optional leading '-'. Throws MalformedInputError.
    static Rational parse(std::string_view text);

private:
    explicit Rational(const boost::multiprecision::cpp_rational& v) : value_(v) {}

    boost::multiprecision::cpp_rational value_;
};

/// Probabilities are exact rationals in [0, 1].
using ExactProb = Rational;

BigInt factorial(unsigned n);

/// Base-10 digits only (leading zeros allowed). Throws MalformedInputError.
BigInt parse_natural(std::string_view digits);

}  // namespace sockpath
