#include "quadgen/surd.hpp"

namespace quadgen {

namespace {

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void check_same_field(const QuadSurd& x, const QuadSurd& y) {
    if (x.d() != y.d()) throw validation_error("QuadSurd operands live in different fields");
}

} // namespace

QuadSurd::QuadSurd(i128 p, i128 q, i128 r, i64 d) : p_(p), q_(q), r_(r), d_(d) {
    if (r == 0) throw validation_error("QuadSurd with zero denominator");
    if (d <= 0 || is_square(d)) throw validation_error("QuadSurd needs a positive non-square radicand");
    normalize();
}

QuadSurd QuadSurd::rational(const Rational& x, i64 d) {
    return QuadSurd(x.num(), 0, x.den(), d);
}

void QuadSurd::normalize() {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    i128 g = gcd128(gcd128(p_, q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

int QuadSurd::sign() const {
    const int sp = (p_ > 0) - (p_ < 0);
    const int sq = (q_ > 0) - (q_ < 0);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // opposite signs: compare p^2 with q^2 d, never equal since d is not a square
    const i128 pp = checked_mul(p_, p_);
    const i128 qqd = checked_mul(checked_mul(q_, q_), static_cast<i128>(d_));
    return pp > qqd ? sp : sq;
}

QuadSurd QuadSurd::inverse() const {
    // 1/((p + q s)/r) = r (p - q s) / (p^2 - q^2 d)
    const i128 norm = checked_sub(checked_mul(p_, p_), checked_mul(checked_mul(q_, q_), static_cast<i128>(d_)));
    if (norm == 0) throw validation_error("QuadSurd inverse of zero");
    return QuadSurd(checked_mul(r_, p_), checked_mul(r_, -q_), norm, d_);
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    check_same_field(x, y);
    return QuadSurd(checked_add(checked_mul(x.p_, y.r_), checked_mul(y.p_, x.r_)),
                    checked_add(checked_mul(x.q_, y.r_), checked_mul(y.q_, x.r_)),
                    checked_mul(x.r_, y.r_), x.d_);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) {
    return x + (-y);
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    check_same_field(x, y);
    const i128 d = x.d_;
    return QuadSurd(checked_add(checked_mul(x.p_, y.p_), checked_mul(checked_mul(x.q_, y.q_), d)),
                    checked_add(checked_mul(x.p_, y.q_), checked_mul(x.q_, y.p_)),
                    checked_mul(x.r_, y.r_), x.d_);
}

} // namespace quadgen
