#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadgen {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

/// Raised when an exact computation would leave its representable range.
/// Scans abort on it rather than emit a wrong row.
class arithmetic_overflow : public std::overflow_error {
public:
    explicit arithmetic_overflow(const std::string& what) : std::overflow_error(what) {}
};

/// Raised when an argument violates an operation's precondition.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

i64 checked_add(i64 x, i64 y);
i64 checked_sub(i64 x, i64 y);
i64 checked_mul(i64 x, i64 y);
i128 checked_add(i128 x, i128 y);
i128 checked_sub(i128 x, i128 y);
i128 checked_mul(i128 x, i128 y);

/// Narrows to 64 bits, throwing arithmetic_overflow if the value does not fit.
i64 narrow(i128 x);

i128 abs128(i128 x);
std::string to_string(i128 x);

/// floor(sqrt(n)), exact for the whole unsigned 64-bit range.
u64 isqrt(u64 n);
/// floor(sqrt(n)); throws validation_error for n < 0.
i64 isqrt(i64 n);
/// floor(sqrt(n)) for non-negative 128-bit values.
i128 isqrt(i128 n);

bool is_square(i64 n);

/// Trial division up to isqrt(n). Throws validation_error for n == 0.
bool is_squarefree(i64 n);

/// Full Kronecker symbol (a/n), including n <= 0 and even n.
int kronecker(i64 a, i64 n);

/// Deterministic Miller-Rabin, correct on the full 64-bit range.
bool is_prime(u64 n);
bool is_prime(i64 n);

/// Primes p with lo <= p <= hi, ascending.
std::vector<i64> primes_in(i64 lo, i64 hi);

/// Smallest b in [0, p) with b^2 = D (mod p), or nothing if D is a non-residue.
/// p must be an odd prime.
std::optional<i64> sqrt_mod_p(i64 D, i64 p);

/// Floor division and non-negative remainder.
i64 floor_div(i64 a, i64 b);
i64 mod_floor(i64 a, i64 m);

} // namespace quadgen
