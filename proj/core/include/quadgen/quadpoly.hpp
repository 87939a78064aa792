#pragma once

#include <compare>
#include <string>
#include <vector>

#include "quadgen/field.hpp"
#include "quadgen/intarith.hpp"
#include "quadgen/rational.hpp"

namespace quadgen {

/// Primitive irreducible integer quadratic a*x^2 + b*x + c.
class QuadPoly {
public:
    /// Throws validation_error unless a != 0, gcd(a, b, c) = 1 and
    /// b^2 - 4ac is not a perfect square.
    QuadPoly(i64 a, i64 b, i64 c);

    i64 a() const { return a_; }
    i64 b() const { return b_; }
    i64 c() const { return c_; }

    friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
    friend auto operator<=>(const QuadPoly&, const QuadPoly&) = default;

private:
    i64 a_, b_, c_;
};

/// Primitive integer polynomial; coeffs[i] multiplies x^i.
class GenPoly {
public:
    explicit GenPoly(std::vector<i64> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<i64>& coeffs() const { return coeffs_; }
    i64 leading() const { return coeffs_.back(); }

private:
    std::vector<i64> coeffs_;
};

struct FieldIndexPair {
    FundamentalDiscriminant D;
    i64 m;
};

i64 height(const QuadPoly& f);
i64 height(const GenPoly& f);

/// b^2 - 4ac.
i64 disc2(const QuadPoly& f);

/// The unique (D, m) with disc2(f) = m^2 * D and D fundamental.
FieldIndexPair field_disc_and_index(const QuadPoly& f);

/// Splits an arbitrary non-square discriminant value the same way.
FieldIndexPair split_discriminant(i64 disc);

bool is_generator_of(const QuadPoly& f, i64 D);

/// Representative of f under x -> -x and coefficient reversal: among the
/// variants with positive leading coefficient and b >= 0, the
/// lexicographically least (a, b, c).
QuadPoly canonicalize(const QuadPoly& f);

/// Polynomial discriminant (-1)^(n(n-1)/2) Res(f, f') / a_n via a
/// fraction-free determinant of the Sylvester matrix.
i128 disc_n(const GenPoly& f);

/// Lower bound c_n |D_K|^(1/(2n-2)) with c_n = 1/(n sqrt n).
struct Prop1Bound {
    int n;
    i64 abs_disc;
    Rational exponent;   ///< 1/(2n-2)
    std::string c_n;     ///< exact form of the constant
    double c_n_value;
    double value;
};

Prop1Bound prop1_bound(int n, i64 disc_k);

/// Exact form of H >= c_n |D_K|^(1/(2n-2)):  H^(2n-2) * n^(3(n-1)) >= |D_K|.
bool satisfies_prop1(i64 h, int n, i64 disc_k);

/// |disc_n(f)| <= n^(3(n-1)) * H(f)^(2n-2), compared in exact integers.
bool en_inequality_check(const GenPoly& f);

/// "3x^2 + 5", "x^2 - 50x - 10".
std::string to_string(const QuadPoly& f);
std::string to_string(const GenPoly& f);
std::string triple_string(const QuadPoly& f);

} // namespace quadgen
