#include "quadgen/rational.hpp"

#include <charconv>
#include <numeric>

namespace quadgen {

namespace {

Rational from_wide(i128 num, i128 den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = abs128(num), b = den;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

i64 parse_int(std::string_view s, std::string_view whole) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw validation_error("not a rational number: '" + std::string(whole) + "'");
    return v;
}

} // namespace

Rational::Rational(i64 num) : num_(num), den_(1) {}

Rational::Rational(i64 num, i64 den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    if (den < 0) {
        num = checked_sub(0, num);
        den = checked_sub(0, den);
    }
    i64 g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_int(text, text));

    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 15 || frac_part.find_first_not_of("0123456789") != std::string_view::npos)
        throw validation_error("not a rational number: '" + std::string(text) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    i64 whole = int_part.empty() ? 0 : parse_int(int_part, text);
    if (whole < 0) throw validation_error("not a rational number: '" + std::string(text) + "'");
    i64 scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    i64 frac = parse_int(frac_part, text);
    i64 num = checked_add(checked_mul(whole, scale), frac);
    return Rational(negative ? -num : num, scale);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& x, const Rational& y) {
    return from_wide(checked_add(static_cast<i128>(x.num_) * y.den_, static_cast<i128>(y.num_) * x.den_),
                     static_cast<i128>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
    return from_wide(checked_sub(static_cast<i128>(x.num_) * y.den_, static_cast<i128>(y.num_) * x.den_),
                     static_cast<i128>(x.den_) * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
    return from_wide(static_cast<i128>(x.num_) * y.num_, static_cast<i128>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw validation_error("rational division by zero");
    return from_wide(static_cast<i128>(x.num_) * y.den_, static_cast<i128>(x.den_) * y.num_);
}

} // namespace quadgen
