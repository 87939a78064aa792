#include "quadgen/field.hpp"

#include <numeric>

namespace quadgen {

std::string fundamental_violation(i64 D) {
    if (D == 0) return "D must be nonzero";
    if (D == 1) return "D = 1 is not the discriminant of a quadratic field";
    if (is_square(D)) return "D is a perfect square";
    const i64 r = mod_floor(D, 4);
    if (r == 1) {
        if (!is_squarefree(D)) return "D = 1 (mod 4) but D is not squarefree";
        return {};
    }
    if (r == 0) {
        const i64 k = D / 4;
        const i64 kr = mod_floor(k, 4);
        if (kr != 2 && kr != 3) return "D = 0 (mod 4) but D/4 is not 2 or 3 (mod 4)";
        if (!is_squarefree(k)) return "D = 0 (mod 4) but D/4 is not squarefree";
        return {};
    }
    return "D is not 0 or 1 (mod 4)";
}

bool is_fundamental(i64 D) {
    return fundamental_violation(D).empty();
}

FundamentalDiscriminant::FundamentalDiscriminant(i64 value) : value_(value) {
    if (auto why = fundamental_violation(value); !why.empty())
        throw validation_error(std::to_string(value) + " is not a fundamental discriminant: " + why);
}

std::optional<FundamentalDiscriminant> FundamentalDiscriminant::make(i64 value) {
    if (!is_fundamental(value)) return std::nullopt;
    return FundamentalDiscriminant(value, unchecked_tag{});
}

std::vector<FundamentalDiscriminant> fundamental_range(i64 lo, i64 hi) {
    if (lo > hi) throw validation_error("fundamental_range: lo > hi");
    std::vector<FundamentalDiscriminant> out;
    // only residues 0 and 1 mod 4 can qualify
    for (i64 D = lo; D <= hi; ++D) {
        const i64 r = mod_floor(D, 4);
        if (r == 2 || r == 3) continue;
        if (is_fundamental(D)) out.push_back(FundamentalDiscriminant(D, FundamentalDiscriminant::unchecked_tag{}));
    }
    return out;
}

i64 class_number_imaginary(FundamentalDiscriminant D) {
    if (!D.imaginary()) throw validation_error("class_number_imaginary needs D < 0");
    const i64 n = D.abs();
    i64 count = 0;
    // reduced forms satisfy 3b^2 <= 3a^2 <= 4ac - b^2 = |D|
    for (i64 b = n % 2; 3 * b * b <= n; b += 2) {
        const i64 ac = (b * b + n) / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            const i64 c = ac / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            // (a, b, c) and (a, -b, c) are distinct unless a boundary forces b >= 0
            if (b == 0 || b == a || a == c) {
                ++count;
            } else {
                count += 2;
            }
        }
    }
    return count;
}

} // namespace quadgen
