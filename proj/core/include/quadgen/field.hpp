#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadgen/intarith.hpp"

namespace quadgen {

/// Discriminant of a quadratic field, either sign.
///
/// D = 0 or 1 (mod 4); squarefree when D = 1 (mod 4); D/4 squarefree and
/// D/4 = 2 or 3 (mod 4) otherwise. D = 1 and perfect squares are excluded.
class FundamentalDiscriminant {
public:
    /// Throws validation_error naming the violated condition.
    explicit FundamentalDiscriminant(i64 value);

    static std::optional<FundamentalDiscriminant> make(i64 value);

    i64 value() const { return value_; }
    i64 abs() const { return value_ < 0 ? -value_ : value_; }
    bool imaginary() const { return value_ < 0; }

    friend bool operator==(const FundamentalDiscriminant&, const FundamentalDiscriminant&) = default;
    friend auto operator<=>(const FundamentalDiscriminant&, const FundamentalDiscriminant&) = default;

private:
    struct unchecked_tag {};
    FundamentalDiscriminant(i64 value, unchecked_tag) : value_(value) {}
    friend std::vector<FundamentalDiscriminant> fundamental_range(i64, i64);

    i64 value_;
};

bool is_fundamental(i64 D);

/// Empty when D is fundamental, otherwise a short description of the first
/// failing condition.
std::string fundamental_violation(i64 D);

/// All fundamental discriminants in [lo, hi], ascending.
std::vector<FundamentalDiscriminant> fundamental_range(i64 lo, i64 hi);

/// Number of primitive reduced forms of discriminant D < 0. Loops over b
/// first and reads a off the divisors of (b^2 - D)/4.
i64 class_number_imaginary(FundamentalDiscriminant D);

} // namespace quadgen
