#include "quadgen/quadpoly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadgen {

QuadPoly::QuadPoly(i64 a, i64 b, i64 c) : a_(a), b_(b), c_(c) {
    if (a == 0) throw validation_error("quadratic needs a nonzero leading coefficient");
    if (std::gcd(std::gcd(a, b), c) != 1)
        throw validation_error("polynomial (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ") is not primitive");
    if (is_square(disc2(*this)))
        throw validation_error("polynomial (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ") is reducible: square discriminant");
}

GenPoly::GenPoly(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 3) throw validation_error("GenPoly needs degree >= 2");
    if (coeffs_.back() == 0) throw validation_error("GenPoly leading coefficient is zero");
    i64 g = 0;
    for (i64 x : coeffs_) g = std::gcd(g, x);
    if (g != 1) throw validation_error("GenPoly is not primitive");
}

i64 height(const QuadPoly& f) {
    return std::max({std::abs(f.a()), std::abs(f.b()), std::abs(f.c())});
}

i64 height(const GenPoly& f) {
    i64 h = 0;
    for (i64 x : f.coeffs()) h = std::max(h, x < 0 ? checked_sub(0, x) : x);
    return h;
}

i64 disc2(const QuadPoly& f) {
    return checked_sub(checked_mul(f.b(), f.b()), checked_mul(4, checked_mul(f.a(), f.c())));
}

FieldIndexPair split_discriminant(i64 disc) {
    if (disc == 0 || is_square(disc)) throw validation_error("discriminant " + std::to_string(disc) + " is a square");
    const i64 r = mod_floor(disc, 4);
    if (r == 2 || r == 3) throw validation_error("value " + std::to_string(disc) + " is not a discriminant");

    // |disc| = core * k^2 with core squarefree
    u64 rest = disc < 0 ? static_cast<u64>(-(disc + 1)) + 1 : static_cast<u64>(disc);
    i64 core = 1, k = 1;
    for (u64 p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) k *= static_cast<i64>(p);
        if (e % 2 == 1) core *= static_cast<i64>(p);
    }
    core *= static_cast<i64>(rest);
    if (disc < 0) core = -core;

    if (mod_floor(core, 4) == 1) return {FundamentalDiscriminant(core), k};
    // core = 2, 3 (mod 4) forces k even
    return {FundamentalDiscriminant(4 * core), k / 2};
}

FieldIndexPair field_disc_and_index(const QuadPoly& f) {
    return split_discriminant(disc2(f));
}

bool is_generator_of(const QuadPoly& f, i64 D) {
    if (!is_fundamental(D)) return false;
    return field_disc_and_index(f).D.value() == D;
}

QuadPoly canonicalize(const QuadPoly& f) {
    std::array<std::array<i64, 3>, 4> variants = {{
        {f.a(), f.b(), f.c()},
        {f.a(), -f.b(), f.c()},
        {f.c(), f.b(), f.a()},
        {f.c(), -f.b(), f.a()},
    }};
    std::array<i64, 3> best{};
    bool have = false;
    for (auto v : variants) {
        if (v[0] < 0) v = {-v[0], -v[1], -v[2]};
        if (v[1] < 0) continue;
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    return QuadPoly(best[0], best[1], best[2]);
}

namespace {

using big = boost::multiprecision::cpp_int;

/// Bareiss elimination; all intermediate values are minors of the input.
big bareiss_determinant(std::vector<std::vector<big>> m) {
    const std::size_t n = m.size();
    int sign = 1;
    big prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

big discriminant(const GenPoly& f) {
    const int n = f.degree();
    const auto& c = f.coeffs();

    // Sylvester matrix of f (degree n) and f' (degree n - 1), size 2n - 1
    const std::size_t size = static_cast<std::size_t>(2 * n - 1);
    std::vector<std::vector<big>> syl(size, std::vector<big>(size, 0));
    for (int row = 0; row < n - 1; ++row)
        for (int i = 0; i <= n; ++i) syl[row][row + n - i] = c[i];
    for (int row = 0; row < n; ++row)
        for (int i = 1; i <= n; ++i) syl[n - 1 + row][row + n - i] = big(c[i]) * i;

    big d = bareiss_determinant(std::move(syl)) / c[n];  // exact: a_n divides Res(f, f')
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

} // namespace

i128 disc_n(const GenPoly& f) {
    const big d = discriminant(f);
    static const big lo = big(std::numeric_limits<i128>::min()), hi = big(std::numeric_limits<i128>::max());
    if (d < lo || d > hi) throw arithmetic_overflow("polynomial discriminant exceeds 128 bits");
    return static_cast<i128>(d);
}

namespace {

std::string c_n_text(int n) {
    return "1/(" + std::to_string(n) + "*sqrt(" + std::to_string(n) + "))";
}

} // namespace

Prop1Bound prop1_bound(int n, i64 disc_k) {
    if (n < 2) throw validation_error("prop1_bound needs n >= 2");
    if (disc_k == 0) throw validation_error("prop1_bound needs D_K != 0");
    const i64 abs_d = disc_k < 0 ? checked_sub(0, disc_k) : disc_k;
    const double c = 1.0 / (n * std::sqrt(static_cast<double>(n)));
    const double value = c * std::pow(static_cast<double>(abs_d), 1.0 / (2.0 * n - 2.0));
    return Prop1Bound{n, abs_d, Rational(1, 2 * n - 2), c_n_text(n), c, value};
}

bool satisfies_prop1(i64 h, int n, i64 disc_k) {
    if (n < 2) throw validation_error("satisfies_prop1 needs n >= 2");
    using boost::multiprecision::pow;
    return pow(big(h), 2 * n - 2) * pow(big(n), 3 * (n - 1)) >= abs(big(disc_k));
}

bool en_inequality_check(const GenPoly& f) {
    const int n = f.degree();
    const big d = abs(discriminant(f));
    return d <= boost::multiprecision::pow(big(n), 3 * (n - 1)) * boost::multiprecision::pow(big(height(f)), 2 * n - 2);
}

namespace {

void append_term(std::string& out, i64 coeff, int power) {
    if (coeff == 0) return;
    const bool first = out.empty();
    u64 mag = coeff < 0 ? static_cast<u64>(-(coeff + 1)) + 1 : static_cast<u64>(coeff);
    if (first) {
        if (coeff < 0) out += "-";
    } else {
        out += coeff < 0 ? " - " : " + ";
    }
    if (mag != 1 || power == 0) out += std::to_string(mag);
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
}

} // namespace

std::string to_string(const QuadPoly& f) {
    std::string s;
    append_term(s, f.a(), 2);
    append_term(s, f.b(), 1);
    append_term(s, f.c(), 0);
    return s;
}

std::string to_string(const GenPoly& f) {
    std::string s;
    for (int i = f.degree(); i >= 0; --i) append_term(s, f.coeffs()[i], i);
    return s;
}

std::string triple_string(const QuadPoly& f) {
    return "(" + std::to_string(f.a()) + "," + std::to_string(f.b()) + "," + std::to_string(f.c()) + ")";
}

} // namespace quadgen
