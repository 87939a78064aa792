#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadgen/field.hpp"
#include "quadgen/quadpoly.hpp"
#include "quadgen/rational.hpp"

namespace quadgen {

/// Smallest integral generator of Q(sqrt(d)) for squarefree d < 0:
/// x^2 - d when d = 2, 3 (mod 4), x^2 + x + (1 - d)/4 when d = 1 (mod 4).
QuadPoly lemma1_integral(i64 d);

/// Monic x^2 + a x + b with a^2 - 4b = D and max(a, |b|) < sqrt(D).
///
/// a is the largest integer <= floor(sqrt(D)) with a = D (mod 2). Rounding
/// up from ceil(sqrt(D)) instead gives b > 0 and H >= sqrt(D) for D = 5
/// and D = 12, so the downward choice is used throughout.
QuadPoly prop2_generator(FundamentalDiscriminant D);

struct MepsWitness {
    FundamentalDiscriminant D;
    Rational epsilon;
    i64 p;
    QuadPoly f;
};

/// Generator p x^2 + b x + c with p the smallest odd prime satisfying
/// (D/p) = 1 and sqrt(D)/2 <= p <= (1/2 + eps) sqrt(D) (both ends closed),
/// b = D (mod 2) a square root of D mod p, c = (b^2 - D) / 4p.
/// Empty when no prime qualifies, i.e. D is not in M_eps.
std::optional<MepsWitness> lemma2_generator(FundamentalDiscriminant D, const Rational& epsilon);

/// Fundamental D in [5, limit] outside M_eps, ascending.
std::vector<i64> m_eps_exceptions(i64 limit, const Rational& epsilon, unsigned jobs = 1);

/// Independent re-check that D admits no qualifying prime: walks every
/// integer in the interval instead of a precomputed prime list.
bool meps_exception_verified(i64 D, const Rational& epsilon);

struct FamilyMember {
    FundamentalDiscriminant D;
    QuadPoly f;
};

/// m x^2 + x + m with D = 1 - 4m^2, when 4m^2 - 1 is squarefree.
std::optional<FamilyMember> imaginary_family(i64 m);

/// m x^2 + (m - 1) x - m with D = 5m^2 - 2m + 1, when that is squarefree.
std::optional<FamilyMember> real_family(i64 m);

/// The checkable core of H(alpha) = q < sqrt(2pq): q^2 < 2pq.
struct DegreeNCertificate {
    i64 q_squared;
    i64 two_pq;
    bool holds;
    std::string conditional_bound;  ///< bound that also needs p^(n-1) q^(n-1) | D_K
};

/// p x^n + q for primes p < q < 2p (Eisenstein at q).
std::pair<GenPoly, DegreeNCertificate> degree_n_family(int n, i64 p, i64 q);

} // namespace quadgen
