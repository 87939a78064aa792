#include "quadgen/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "quadgen/surd.hpp"

namespace quadgen {

void HyperRect::validate() const {
    const Rational half(1, 2);
    if (x_lo > x_hi || y_lo > y_hi) throw validation_error("rectangle bounds are inverted");
    if (x_lo < -half || x_hi > half) throw validation_error("rectangle x-range must lie within [-1/2, 1/2]");
    if (y_lo < Rational(1)) throw validation_error("rectangle y-range must satisfy y >= 1");
}

bool is_reduced_imaginary(i64 a, i64 b, i64 c) {
    if (a <= 0 || c <= 0) return false;
    if (std::abs(b) > a || a > c) return false;
    if ((std::abs(b) == a || a == c) && b < 0) return false;
    if (b * b - 4 * a * c >= 0) return false;
    return std::gcd(std::gcd(a, b), c) == 1;
}

bool is_reduced_real(i64 a, i64 b, i64 c) {
    if (a <= 0 || b <= 0 || c >= 0) return false;
    const i128 d = static_cast<i128>(b) * b - static_cast<i128>(4) * a * c;
    if (d <= 0 || is_square(narrow(d))) return false;
    // alpha' < 0:  b < sqrt(D)
    if (static_cast<i128>(b) * b >= d) return false;
    // alpha' > -1: sqrt(D) < 2a + b
    const i128 upper = static_cast<i128>(2) * a + b;
    if (d >= upper * upper) return false;
    // alpha > 1:   2a - b < sqrt(D)
    const i128 lower = static_cast<i128>(2) * a - b;
    if (lower > 0 && lower * lower >= d) return false;
    return std::gcd(std::gcd(a, b), c) == 1;
}

std::vector<ReducedPointIm> enumerate_imaginary(FundamentalDiscriminant D) {
    if (!D.imaginary()) throw validation_error("enumerate_imaginary needs D < 0");
    const i64 n = D.abs();
    std::vector<ReducedPointIm> out;
    const i64 a_max = isqrt(n / 3);
    for (i64 a = 1; a <= a_max; ++a) {
        const i64 four_a = 4 * a;
        // b = D (mod 2) so that b^2 - D is divisible by 4
        i64 b_start = -a + 1;
        if ((b_start - n) % 2 != 0) ++b_start;
        for (i64 b = b_start; b <= a; b += 2) {
            const i64 num = b * b + n;
            if (num % four_a != 0) continue;
            const i64 c = num / four_a;
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

std::vector<ReducedPointRe> enumerate_real(FundamentalDiscriminant D) {
    if (D.imaginary()) throw validation_error("enumerate_real needs D > 0");
    const i64 d = D.value();
    const i64 s = isqrt(d);  // s < sqrt(D) < s + 1
    std::vector<ReducedPointRe> out;
    for (i64 b = 2 - (d & 1); b <= s; b += 2) {
        const i64 n = (d - b * b) / 4;
        // sqrt(D) - b < 2a < sqrt(D) + b  <=>  s - b + 1 <= 2a <= s + b
        const i64 a_lo = std::max<i64>(1, (s - b + 2) / 2);
        const i64 a_hi = (s + b) / 2;
        for (i64 a = a_lo; a <= a_hi; ++a) {
            if (n % a != 0) continue;
            const i64 c = -(n / a);
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ReducedPointRe rho(const ReducedPointRe& p) {
    const i64 d = narrow(static_cast<i128>(p.b) * p.b - static_cast<i128>(4) * p.a * p.c);
    if (d <= 0) throw validation_error("rho needs a real reduced element");
    // floor(alpha) = floor((b + isqrt(D)) / 2a) because sqrt(D) is irrational
    const i64 k = (p.b + isqrt(d)) / (2 * p.a);
    // alpha - k is a root of a*x^2 - b'*x + c' with b' = b - 2ak
    const i64 b_shift = checked_sub(p.b, checked_mul(2 * p.a, k));
    const i64 c_shift = checked_add(checked_sub(checked_mul(checked_mul(p.a, k), k), checked_mul(p.b, k)), p.c);
    // 1 / (alpha - k) is a root of c'*x^2 - b'*x + a; make the leading term positive
    return ReducedPointRe{-c_shift, -b_shift, -p.a};
}

std::vector<std::vector<ReducedPointRe>> cycles(FundamentalDiscriminant D) {
    const auto points = enumerate_real(D);
    std::map<ReducedPointRe, bool> seen;
    for (const auto& p : points) seen.emplace(p, false);

    std::vector<std::vector<ReducedPointRe>> out;
    for (const auto& start : points) {
        if (seen.at(start)) continue;
        // start is the least unseen point, hence the least of its orbit
        std::vector<ReducedPointRe> cycle;
        ReducedPointRe cur = start;
        do {
            auto it = seen.find(cur);
            if (it == seen.end() || it->second)
                throw arithmetic_overflow("rho left the reduced set; enumeration is inconsistent");
            it->second = true;
            cycle.push_back(cur);
            cur = rho(cur);
        } while (cur != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

namespace {

struct Conjugates {
    QuadSurd x;
    QuadSurd y;
};

Conjugates conjugates(const ReducedPointRe& p, i64 d) {
    return {QuadSurd(p.b, 1, 2 * p.a, d), QuadSurd(p.b, -1, 2 * p.a, d)};
}

bool in_g(const QuadSurd& x, const QuadSurd& y) {
    const i64 d = x.d();
    const auto one = QuadSurd::rational(1, d);
    const auto zero = QuadSurd::rational(0, d);
    return x > one && y > -one && y < zero;
}

} // namespace

bool lemma4_check(const ReducedPointRe& p) {
    const i64 d = p.disc();
    if (!is_fundamental(d))
        throw validation_error("lemma4_check: b^2 - 4ac = " + std::to_string(d) + " is not fundamental");
    if (!is_reduced_real(p.a, p.b, p.c)) return false;

    const auto [x, y] = conjugates(p, d);
    const auto root = QuadSurd::root(d);
    const auto diff = x - y;
    const auto sum = x + y;
    const auto prod = x * (-y);

    const auto ra = diff.inverse();
    const auto rb = sum / diff;
    const auto rc = prod / diff;

    const bool identities = QuadSurd::rational(p.a, d) == root * ra && QuadSurd::rational(p.b, d) == root * rb &&
                            QuadSurd::rational(-p.c, d) == root * rc;
    if (!identities) return false;

    QuadSurd best = ra;
    if (rb > best) best = rb;
    if (rc > best) best = rc;
    const i64 h = height(QuadPoly(p.a, -p.b, p.c));
    return QuadSurd::rational(h, d) == root * best;
}

const char* to_string(Variant v) {
    switch (v) {
        case Variant::alpha: return "alpha";
        case Variant::alpha_conjugate: return "alpha_conjugate";
        case Variant::neg_alpha: return "neg_alpha";
        case Variant::neg_alpha_conjugate: return "neg_alpha_conjugate";
    }
    return "?";
}

std::optional<ReducedVariant> lemma3_which_reduced(const QuadPoly& f, FundamentalDiscriminant D) {
    if (D.imaginary()) throw validation_error("lemma3_which_reduced needs D > 0");
    if (!is_generator_of(f, D.value()))
        throw validation_error(to_string(f) + " does not generate Q(sqrt(" + std::to_string(D.value()) + "))");
    const i128 h = height(f);
    if (625 * h * h > 144 * static_cast<i128>(D.value()))
        throw validation_error("lemma3_which_reduced: H(f) > 0.48 sqrt(D)");

    const i64 d = D.value();
    const i64 m = field_disc_and_index(f).m;
    // roots (-b +- m sqrt(D)) / (2a)
    const QuadSurd alpha(-f.b(), m, 2 * f.a(), d);
    const QuadSurd alpha_conj = alpha.conj();
    const std::pair<Variant, QuadSurd> candidates[] = {
        {Variant::alpha, alpha},
        {Variant::alpha_conjugate, alpha_conj},
        {Variant::neg_alpha, -alpha},
        {Variant::neg_alpha_conjugate, -alpha_conj},
    };
    for (const auto& [tag, x] : candidates) {
        const QuadSurd y = x.conj();
        if (!in_g(x, y)) continue;
        // x = (p + q sqrt(D)) / r with q > 0: a = r / 2q, b = p / q, c = (p^2 - q^2 D) / (2qr)
        const i128 two_q = 2 * x.q();
        if (x.q() <= 0 || x.r() % two_q != 0 || x.p() % x.q() != 0) continue;
        const i128 num_c = checked_sub(checked_mul(x.p(), x.p()), checked_mul(checked_mul(x.q(), x.q()), static_cast<i128>(d)));
        const i128 den_c = checked_mul(two_q, x.r());
        if (num_c % den_c != 0) continue;
        const ReducedPointRe point{narrow(x.r() / two_q), narrow(x.p() / x.q()), narrow(num_c / den_c)};
        if (!is_reduced_real(point.a, point.b, point.c)) continue;
        return ReducedVariant{tag, point};
    }
    return std::nullopt;
}

HeightThreshold HeightThreshold::from_h(const Rational& h) {
    if (h <= Rational(0) || h >= Rational(1)) throw validation_error("threshold h must satisfy 0 < h < 1");
    return HeightThreshold(h * h);
}

HeightThreshold HeightThreshold::from_h_squared(const Rational& h2) {
    if (h2 <= Rational(0) || h2 >= Rational(1)) throw validation_error("threshold h^2 must satisfy 0 < h^2 < 1");
    return HeightThreshold(h2);
}

double HeightThreshold::value() const {
    return std::sqrt(h2_.to_double());
}

bool g_h_contains(const HeightThreshold& h, const ReducedPointRe& p) {
    const i64 d = p.disc();
    if (d <= 0 || is_square(d)) throw validation_error("g_h_contains needs a real quadratic element");
    const auto [x, y] = conjugates(p, d);
    if (!in_g(x, y)) return false;

    const auto diff = x - y;
    const QuadSurd ratios[] = {diff.inverse(), (x + y) / diff, (x * (-y)) / diff};
    const auto h2 = QuadSurd::rational(h.h_squared(), d);
    for (const auto& r : ratios) {
        // r <= h with h > 0: trivially true for r <= 0, otherwise compare squares
        if (r.sign() <= 0) continue;
        if (r * r > h2) return false;
    }
    return true;
}

std::vector<ReducedPointRe> g_h_scan(FundamentalDiscriminant D, const HeightThreshold& h) {
    std::vector<ReducedPointRe> out;
    for (const auto& p : enumerate_real(D)) {
        if (g_h_contains(h, p)) out.push_back(p);
    }
    return out;
}

MuMeasure mu_measure(const HyperRect& r) {
    r.validate();
    const Rational times_pi = Rational(3) * (r.x_hi - r.x_lo) * (Rational(1) / r.y_lo - Rational(1) / r.y_hi);
    return {times_pi, times_pi.to_double() / std::numbers::pi};
}

DukeCount duke_statistic(FundamentalDiscriminant D, const HyperRect& r) {
    if (!D.imaginary()) throw validation_error("duke_statistic needs D < 0");
    r.validate();
    const i128 n = D.abs();
    const i128 ylo_n = r.y_lo.num(), ylo_d = r.y_lo.den();
    const i128 yhi_n = r.y_hi.num(), yhi_d = r.y_hi.den();

    DukeCount out;
    for (const auto& p : enumerate_imaginary(D)) {
        ++out.total;
        const Rational re(p.b, 2 * p.a);
        if (re < r.x_lo || re > r.x_hi) continue;
        // y_lo <= sqrt|D| / 2a <= y_hi, squared and cross-multiplied
        const i128 four_a2 = static_cast<i128>(4) * p.a * p.a;
        if (checked_mul(checked_mul(ylo_n, ylo_n), four_a2) > checked_mul(n, ylo_d * ylo_d)) continue;
        if (checked_mul(n, yhi_d * yhi_d) > checked_mul(checked_mul(yhi_n, yhi_n), four_a2)) continue;
        ++out.inside;
    }
    return out;
}

} // namespace quadgen
