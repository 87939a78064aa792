#include "quadgen/intarith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace quadgen {

i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw arithmetic_overflow("64-bit addition overflow");
    return r;
}

i64 checked_sub(i64 x, i64 y) {
    i64 r;
    if (__builtin_sub_overflow(x, y, &r)) throw arithmetic_overflow("64-bit subtraction overflow");
    return r;
}

i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw arithmetic_overflow("64-bit multiplication overflow");
    return r;
}

i128 checked_add(i128 x, i128 y) {
    i128 r;
    if (__builtin_add_overflow(x, y, &r)) throw arithmetic_overflow("128-bit addition overflow");
    return r;
}

i128 checked_sub(i128 x, i128 y) {
    i128 r;
    if (__builtin_sub_overflow(x, y, &r)) throw arithmetic_overflow("128-bit subtraction overflow");
    return r;
}

i128 checked_mul(i128 x, i128 y) {
    i128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw arithmetic_overflow("128-bit multiplication overflow");
    return r;
}

i64 narrow(i128 x) {
    if (x > std::numeric_limits<i64>::max() || x < std::numeric_limits<i64>::min())
        throw arithmetic_overflow("value does not fit in 64 bits: " + to_string(x));
    return static_cast<i64>(x);
}

i128 abs128(i128 x) {
    if (x < 0) return checked_sub(i128{0}, x);
    return x;
}

std::string to_string(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    // magnitude as unsigned so the minimum value still prints
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    std::string s;
    while (m > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

u64 isqrt(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    using u128 = unsigned __int128;
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

i64 isqrt(i64 n) {
    if (n < 0) throw validation_error("isqrt of negative value " + std::to_string(n));
    return static_cast<i64>(isqrt(static_cast<u64>(n)));
}

i128 isqrt(i128 n) {
    if (n < 0) throw validation_error("isqrt of negative value " + to_string(n));
    if (n <= static_cast<i128>(std::numeric_limits<u64>::max())) return static_cast<i128>(isqrt(static_cast<u64>(n)));
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

bool is_squarefree(i64 n) {
    if (n == 0) throw validation_error("is_squarefree: 0 has no squarefree part");
    u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    if (m % 4 == 0) return false;
    if (m % 2 == 0) m /= 2;
    for (u64 p = 3; p * p <= m; p += 2) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    if (r < 0) r += (m < 0 ? -m : m);
    return r;
}

namespace {

// (2/n) for odd n, indexed by n mod 8
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

int jacobi_odd(u64 a, u64 n) {
    // n odd and positive, 0 <= a < n
    int t = 1;
    while (a != 0) {
        int v = std::countr_zero(a);
        a >>= v;
        if ((v & 1) && (n % 8 == 3 || n % 8 == 5)) t = -t;
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? t : 0;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

} // namespace

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a % 2 == 0) && (n % 2 == 0)) return 0;

    int k = 1;
    u64 un = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    int v = std::countr_zero(un);
    un >>= v;
    if (v & 1) k = kTwoTable[static_cast<u64>(a) & 7];
    if (n < 0 && a < 0) k = -k;
    if (un == 1) return k;

    // a mod un, taken without overflowing on the most negative a
    u64 ua;
    if (a >= 0) {
        ua = static_cast<u64>(a) % un;
    } else {
        u64 mag = static_cast<u64>(-(a + 1)) + 1;
        ua = (un - mag % un) % un;
    }
    return k * jacobi_odd(ua, un);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : kSmall) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    // the first twelve primes are a sufficient witness set below 3.3e24
    for (u64 a : kSmall) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(i64 n) {
    return n >= 2 && is_prime(static_cast<u64>(n));
}

std::vector<i64> primes_in(i64 lo, i64 hi) {
    if (lo > hi) throw validation_error("primes_in: lo > hi");
    std::vector<i64> out;
    if (hi < 2) return out;
    lo = std::max<i64>(lo, 2);
    const i64 root = isqrt(hi);

    std::vector<char> small(static_cast<std::size_t>(root) + 1, 1);
    std::vector<i64> base;
    for (i64 i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (i64 j = i * i; j <= root; j += i) small[j] = 0;
    }

    constexpr i64 kSegment = 1 << 18;
    std::vector<char> seg;
    for (i64 start = lo; start <= hi; ) {
        const i64 end = std::min(hi, start + kSegment - 1);
        seg.assign(static_cast<std::size_t>(end - start + 1), 1);
        for (i64 p : base) {
            i64 first = std::max(p * p, (start + p - 1) / p * p);
            for (i64 j = first; j <= end; j += p) seg[j - start] = 0;
        }
        for (i64 i = start; i <= end; ++i) {
            if (seg[i - start]) out.push_back(i);
        }
        if (end == hi) break;
        start = end + 1;
    }
    return out;
}

std::optional<i64> sqrt_mod_p(i64 D, i64 p) {
    if (p < 3 || p % 2 == 0) throw validation_error("sqrt_mod_p: modulus must be an odd prime");
    const u64 up = static_cast<u64>(p);
    const u64 a = static_cast<u64>(mod_floor(D, p));
    if (a == 0) return 0;
    if (powmod(a, (up - 1) / 2, up) != 1) return std::nullopt;

    // Tonelli-Shanks
    u64 q = up - 1;
    int s = std::countr_zero(q);
    q >>= s;
    u64 z = 2;
    while (powmod(z, (up - 1) / 2, up) != up - 1) ++z;

    u64 m = static_cast<u64>(s);
    u64 c = powmod(z, q, up);
    u64 t = powmod(a, q, up);
    u64 r = powmod(a, (q + 1) / 2, up);
    while (t != 1) {
        u64 i = 0;
        u64 tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, up);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, up);
        m = i;
        c = mulmod(b, b, up);
        t = mulmod(t, c, up);
        r = mulmod(r, b, up);
    }
    const auto root = static_cast<i64>(r);
    return std::min(root, p - root);
}

} // namespace quadgen
