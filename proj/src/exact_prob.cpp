#include "sockpath/exact_prob.hpp"

#include <cctype>

#include "sockpath/errors.hpp"

namespace sockpath {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mp::cpp_rational(numerator, denominator);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::abs() const { return Rational(mp::abs(value_)); }

std::string Rational::to_string() const {
    const BigInt num = numerator();
    const BigInt den = denominator();
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string Rational::to_decimal(unsigned digits) const {
    BigInt num = numerator();
    const BigInt den = denominator();
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    // round(num * scale / den), ties away from zero
    const BigInt scaled = (2 * num * scale + den) / (2 * den);

    std::string body = scaled.str();
    if (digits > 0) {
        if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    if (negative && !scaled.is_zero()) body.insert(0, "-");
    return body;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational Rational::parse(std::string_view text) {
    const auto parse_part = [&](std::string_view part, bool allow_sign) {
        const bool negative = allow_sign && !part.empty() && part[0] == '-';
        if (negative) part.remove_prefix(1);
        try {
            BigInt v = parse_natural(part);
            return negative ? BigInt(-v) : v;
        } catch (const MalformedInputError&) {
            throw MalformedInputError("not a rational: '" + std::string(text) + "'");
        }
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_part(text, true));
    const BigInt num = parse_part(text.substr(0, slash), true);
    const BigInt den = parse_part(text.substr(slash + 1), false);
    if (den.is_zero()) {
        throw MalformedInputError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt parse_natural(std::string_view digits) {
    if (digits.empty()) throw MalformedInputError("expected a non-negative integer, got ''");
    BigInt out = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw MalformedInputError("expected a non-negative integer, got '" + std::string(digits) + "'");
        }
        out = out * 10 + (c - '0');
    }
    return out;
}

}  // namespace sockpath
