#pragma once

#include "quadgen/intarith.hpp"
#include "quadgen/rational.hpp"

namespace quadgen {

/// Exact element (p + q*sqrt(d)) / r of Q(sqrt(d)), d > 0 not a square.
/// Used to decide order relations between quadratic irrationals without
/// floating point.
class QuadSurd {
public:
    QuadSurd(i128 p, i128 q, i128 r, i64 d);
    static QuadSurd rational(const Rational& x, i64 d);
    static QuadSurd root(i64 d) { return QuadSurd(0, 1, 1, d); }

    i128 p() const { return p_; }
    i128 q() const { return q_; }
    i128 r() const { return r_; }
    i64 d() const { return d_; }

    /// -1, 0 or 1.
    int sign() const;
    QuadSurd conj() const { return QuadSurd(p_, -q_, r_, d_); }
    QuadSurd inverse() const;

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) { return x * y.inverse(); }
    friend QuadSurd operator-(const QuadSurd& x) { return QuadSurd(-x.p_, -x.q_, x.r_, x.d_); }

    friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() == 0; }
    friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() >= 0; }

private:
    void normalize();

    i128 p_, q_, r_;
    i64 d_;
};

} // namespace quadgen
