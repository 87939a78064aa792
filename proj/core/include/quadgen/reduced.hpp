#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <vector>

#include "quadgen/field.hpp"
#include "quadgen/quadpoly.hpp"
#include "quadgen/rational.hpp"

namespace quadgen {

/// Reduced form (a, b, c) with b^2 - 4ac = D < 0 whose point
/// z = (b + sqrt(D)) / (2a) lies in the standard fundamental domain:
/// |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
struct ReducedPointIm {
    i64 a, b, c;

    i64 disc() const { return b * b - 4 * a * c; }
    i64 height() const { return c; }

    friend bool operator==(const ReducedPointIm&, const ReducedPointIm&) = default;
    friend auto operator<=>(const ReducedPointIm&, const ReducedPointIm&) = default;
};

/// Triple (a, b, c) with b^2 - 4ac = D > 0 such that
/// alpha = (b + sqrt(D)) / (2a) satisfies alpha > 1 and -1 < alpha' < 0.
/// The minimal polynomial of alpha is a*x^2 - b*x + c.
struct ReducedPointRe {
    i64 a, b, c;

    i64 disc() const { return b * b - 4 * a * c; }
    i64 height() const { return std::max({a, b, -c}); }

    friend bool operator==(const ReducedPointRe&, const ReducedPointRe&) = default;
    friend auto operator<=>(const ReducedPointRe&, const ReducedPointRe&) = default;
};

/// Closed axis-aligned rectangle [x_lo, x_hi] x [y_lo, y_hi] in the band
/// -1/2 <= x <= 1/2, y >= 1, which lies inside the closure of F.
struct HyperRect {
    Rational x_lo, x_hi, y_lo, y_hi;

    /// Throws validation_error for inverted bounds or a rectangle outside the band.
    void validate() const;
};

bool is_reduced_imaginary(i64 a, i64 b, i64 c);
bool is_reduced_real(i64 a, i64 b, i64 c);

std::vector<ReducedPointIm> enumerate_imaginary(FundamentalDiscriminant D);
std::vector<ReducedPointRe> enumerate_real(FundamentalDiscriminant D);

/// Image under alpha -> 1 / (alpha - floor(alpha)), in integer arithmetic.
ReducedPointRe rho(const ReducedPointRe& p);

/// Partition of the reduced elements into rho-orbits. Each cycle starts at
/// its lexicographically least triple and follows rho; cycles are sorted by
/// their leaders.
std::vector<std::vector<ReducedPointRe>> cycles(FundamentalDiscriminant D);

/// Checks, in exact arithmetic on alpha and alpha', that
///   a = sqrt(D) / (alpha - alpha'),
///   b = sqrt(D) (alpha + alpha') / (alpha - alpha'),
///  -c = sqrt(D) alpha (-alpha') / (alpha - alpha'),
/// and that H / sqrt(D) is the maximum of the three ratios.
/// Throws validation_error when b^2 - 4ac is not fundamental (index m > 1).
bool lemma4_check(const ReducedPointRe& p);

enum class Variant { alpha, alpha_conjugate, neg_alpha, neg_alpha_conjugate };
const char* to_string(Variant v);

struct ReducedVariant {
    Variant tag;
    ReducedPointRe point;
};

/// For a generator f of Q(sqrt(D)) with H(f) <= 0.48 sqrt(D), i.e.
/// 625 H^2 <= 144 D, finds which of alpha, alpha', -alpha, -alpha' is
/// reduced, alpha being the root (-b + sqrt(disc)) / (2a) of f as given.
/// Throws validation_error outside that hypothesis.
std::optional<ReducedVariant> lemma3_which_reduced(const QuadPoly& f, FundamentalDiscriminant D);

/// A threshold h in (0, 1) carried as the exact rational h^2, so that the
/// boundary value h = 1/sqrt(5) is representable.
class HeightThreshold {
public:
    static HeightThreshold from_h(const Rational& h);
    static HeightThreshold from_h_squared(const Rational& h2);

    const Rational& h_squared() const { return h2_; }
    double value() const;

private:
    explicit HeightThreshold(Rational h2) : h2_(h2) {}
    Rational h2_;
};

/// Membership of (alpha, alpha') in
///   G_h = {(x, y) : x > 1, -1 < y < 0, 1/(x-y) <= h, (x+y)/(x-y) <= h, x(-y)/(x-y) <= h}.
bool g_h_contains(const HeightThreshold& h, const ReducedPointRe& p);

std::vector<ReducedPointRe> g_h_scan(FundamentalDiscriminant D, const HeightThreshold& h);

/// mu(r) = (3/pi) (x_hi - x_lo) (1/y_lo - 1/y_hi).
struct MuMeasure {
    Rational times_pi;  ///< mu * pi, exact
    double value;
};

MuMeasure mu_measure(const HyperRect& r);

struct DukeCount {
    i64 total = 0;
    i64 inside = 0;

    Rational fraction() const { return Rational(inside, total); }
};

/// Counts reduced points z = (b + sqrt(D)) / (2a) with (Re z, Im z) in r.
DukeCount duke_statistic(FundamentalDiscriminant D, const HyperRect& r);

} // namespace quadgen
