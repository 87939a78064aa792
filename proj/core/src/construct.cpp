#include "quadgen/construct.hpp"

#include <algorithm>
#include <span>

#include "quadgen/parallel.hpp"

namespace quadgen {

QuadPoly lemma1_integral(i64 d) {
    if (d >= 0) throw validation_error("lemma1_integral needs d < 0");
    if (!is_squarefree(d)) throw validation_error(std::to_string(d) + " is not squarefree");
    if (mod_floor(d, 4) == 1) return QuadPoly(1, 1, (1 - d) / 4);
    return QuadPoly(1, 0, -d);
}

QuadPoly prop2_generator(FundamentalDiscriminant D) {
    if (D.imaginary()) throw validation_error("prop2_generator needs D > 0");
    const i64 d = D.value();
    const i64 s = isqrt(d);
    const i64 a = ((s - d) % 2 == 0) ? s : s - 1;
    return QuadPoly(1, a, (a * a - d) / 4);
}

namespace {

struct Interval {
    i64 lo, hi;  // candidate range for p, before the exact check
};

// (2p)^2 ed^2 <= (ed + 2 en)^2 D, i.e. p <= (1/2 + eps) sqrt(D)
bool below_upper(i64 p, i64 d, const Rational& eps) {
    const i128 ed = eps.den(), en = eps.num();
    const i128 lhs = checked_mul(static_cast<i128>(4) * p * p, ed * ed);
    const i128 k = ed + 2 * en;
    return lhs <= checked_mul(k * k, static_cast<i128>(d));
}

bool above_lower(i64 p, i64 d) {
    return static_cast<i128>(4) * p * p >= d;
}

void check_epsilon(const Rational& eps) {
    if (eps <= Rational(0) || eps > Rational(1, 2)) throw validation_error("epsilon must satisfy 0 < eps <= 1/2");
}

Interval candidate_interval(i64 d) {
    // 1/2 + eps <= 1 keeps p <= sqrt(D)
    return {isqrt(d) / 2, isqrt(d) + 1};
}

std::optional<MepsWitness> lemma2_from_primes(FundamentalDiscriminant D, const Rational& eps, std::span<const i64> primes) {
    const i64 d = D.value();
    for (i64 p : primes) {
        if (p == 2 || !above_lower(p, d)) continue;
        if (!below_upper(p, d, eps)) break;
        if (kronecker(d, p) != 1) continue;
        i64 b = *sqrt_mod_p(d, p);
        if ((b - d) % 2 != 0) b = p - b;
        const i64 num = b * b - d;
        if (num % (4 * p) != 0) throw arithmetic_overflow("b^2 - D not divisible by 4p");
        return MepsWitness{D, eps, p, QuadPoly(p, b, num / (4 * p))};
    }
    return std::nullopt;
}

} // namespace

std::optional<MepsWitness> lemma2_generator(FundamentalDiscriminant D, const Rational& epsilon) {
    if (D.imaginary()) throw validation_error("lemma2_generator needs D > 0");
    check_epsilon(epsilon);
    const auto range = candidate_interval(D.value());
    const auto primes = primes_in(range.lo, range.hi);
    return lemma2_from_primes(D, epsilon, primes);
}

std::vector<i64> m_eps_exceptions(i64 limit, const Rational& epsilon, unsigned jobs) {
    if (limit < 5) throw validation_error("m_eps_exceptions needs limit >= 5");
    check_epsilon(epsilon);
    const auto primes = primes_in(2, isqrt(limit) + 1);
    const auto ds = fundamental_range(5, limit);
    auto outside = [&](const FundamentalDiscriminant& D) -> char {
        const auto range = candidate_interval(D.value());
        auto first = std::lower_bound(primes.begin(), primes.end(), range.lo);
        std::span<const i64> tail(first, primes.end());
        return lemma2_from_primes(D, epsilon, tail) ? 0 : 1;
    };
    const auto flags = parallel_map<char>(std::span<const FundamentalDiscriminant>(ds), outside, jobs);
    std::vector<i64> out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (flags[i]) out.push_back(ds[i].value());
    }
    return out;
}

bool meps_exception_verified(i64 D, const Rational& epsilon) {
    check_epsilon(epsilon);
    for (i64 p = 3; p * p <= D; ++p) {
        if (!above_lower(p, D) || !below_upper(p, D, epsilon)) continue;
        bool prime = true;
        for (i64 t = 2; t * t <= p; ++t) {
            if (p % t == 0) {
                prime = false;
                break;
            }
        }
        if (prime && kronecker(D, p) == 1) return false;
    }
    return true;
}

std::optional<FamilyMember> imaginary_family(i64 m) {
    if (m < 1) throw validation_error("imaginary_family needs m >= 1");
    const i64 k = checked_sub(checked_mul(4, checked_mul(m, m)), 1);
    if (!is_squarefree(k)) return std::nullopt;
    return FamilyMember{FundamentalDiscriminant(-k), QuadPoly(m, 1, m)};
}

std::optional<FamilyMember> real_family(i64 m) {
    if (m < 1) throw validation_error("real_family needs m >= 1");
    const i64 d = checked_add(checked_sub(checked_mul(5, checked_mul(m, m)), 2 * m), 1);
    if (!is_squarefree(d)) return std::nullopt;
    return FamilyMember{FundamentalDiscriminant(d), QuadPoly(m, m - 1, -m)};
}

std::pair<GenPoly, DegreeNCertificate> degree_n_family(int n, i64 p, i64 q) {
    if (n < 2) throw validation_error("degree_n_family needs n >= 2");
    if (!is_prime(p) || !is_prime(q)) throw validation_error("degree_n_family needs p and q prime");
    if (!(p < q)) throw validation_error("degree_n_family needs p < q");
    if (!(q < 2 * p))
        throw validation_error("degree_n_family needs q < 2p: " + std::to_string(q) + " >= " + std::to_string(2 * p));

    std::vector<i64> coeffs(static_cast<std::size_t>(n) + 1, 0);
    coeffs.front() = q;
    coeffs.back() = p;
    DegreeNCertificate cert{checked_mul(q, q), checked_mul(2, checked_mul(p, q)), false, {}};
    cert.holds = cert.q_squared < cert.two_pq;
    cert.conditional_bound = "H = " + std::to_string(q) + " < sqrt(2pq) <= sqrt(2)*|D_K|^(1/" +
                             std::to_string(2 * n - 2) + ") given p^" + std::to_string(n - 1) + "*q^" +
                             std::to_string(n - 1) + " | D_K";
    return {GenPoly(std::move(coeffs)), cert};
}

} // namespace quadgen
