#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "quadgen/intarith.hpp"

namespace quadgen {

/// Exact rational number num/den in lowest terms with den > 0.
class Rational {
public:
    constexpr Rational() = default;
    Rational(i64 num);  // NOLINT: integers convert implicitly
    Rational(i64 num, i64 den);

    /// Accepts integers ("3"), fractions ("-7/4") and plain decimals ("-1.02").
    static Rational parse(std::string_view text);

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x) { return Rational(checked_sub(0, x.num_), x.den_); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        return static_cast<i128>(x.num_) * y.den_ <=> static_cast<i128>(y.num_) * x.den_;
    }

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

} // namespace quadgen
