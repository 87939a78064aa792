#include "quadgen/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "quadgen/construct.hpp"
#include "quadgen/parallel.hpp"
#include "quadgen/reduced.hpp"

namespace quadgen {

namespace {

/// Collects triples of the least height seen so far, at most `bound`.
class WitnessSet {
public:
    explicit WitnessSet(i64 bound) : bound_(bound) {}

    i64 bound() const { return bound_; }

    void offer(i64 a, i64 b, i64 c, i64 h) {
        if (h > bound_) return;
        if (std::gcd(std::gcd(a, b), c) != 1) return;
        if (h < bound_) {
            triples_.clear();
            bound_ = h;
        }
        found_ = true;
        triples_.push_back({a, b, c});
    }

    bool found() const { return found_; }

    std::vector<std::array<i64, 3>>& triples() { return triples_; }

private:
    i64 bound_;
    bool found_ = false;
    std::vector<std::array<i64, 3>> triples_;
};

i64 ceil_div(i64 a, i64 b) {
    return a / b + ((a % b != 0) ? 1 : 0);  // a >= 0, b > 0
}

/// Every generator a x^2 + b x + c with a > 0, b >= 0, a <= c and height <= bound,
/// where b^2 - 4ac = -m^2 |D|.  4ac = b^2 + m^2 |D| <= 4 bound^2 caps m.
void search_imaginary(i64 n, WitnessSet& set) {
    for (i64 m = 1;; ++m) {
        const i64 mn = checked_mul(m * m, n);
        i64 u = set.bound();
        if (mn > 4 * u * u) break;
        for (i64 b = (m * n) & 1; b <= set.bound(); b += 2) {
            u = set.bound();
            const i64 p = (b * b + mn) / 4;  // = a c with a <= c <= u
            if (p > u * u) break;
            const i64 a_lo = std::max<i64>(1, ceil_div(p, u));
            const i64 a_hi = isqrt(p);
            for (i64 a = a_lo; a <= a_hi; ++a) {
                if (p % a != 0) continue;
                const i64 c = p / a;
                set.offer(a, b, c, std::max(b, c));
            }
        }
    }
}

/// Real case, b^2 - 4ac = m^2 D. With a > 0 and b >= 0:
///   c < 0: 4a|c| = m^2 D - b^2, folded to a <= |c| by (a,b,c) ~ (|c|,b,-a);
///   c > 0: 4ac = b^2 - m^2 D needs b > m sqrt(D), folded to a <= c.
/// 5 H^2 >= m^2 D caps m.
void search_real(i64 d, WitnessSet& set) {
    for (i64 m = 1;; ++m) {
        const i64 md = checked_mul(m * m, d);
        i64 u = set.bound();
        if (md > 5 * u * u) break;
        const i64 parity = (m * d) & 1;

        // c < 0: need md - b^2 <= 4u^2
        i64 b = parity;
        if (md > 4 * u * u) {
            b = isqrt(md - 4 * u * u);
            if ((b & 1) != parity) ++b;
        }
        for (; b <= set.bound() && b * b < md; b += 2) {
            u = set.bound();
            const i64 p = (md - b * b) / 4;
            if (p > u * u) continue;
            const i64 a_lo = std::max<i64>(1, ceil_div(p, u));
            const i64 a_hi = isqrt(p);
            for (i64 a = a_lo; a <= a_hi; ++a) {
                if (p % a != 0) continue;
                const i64 c = p / a;
                set.offer(a, b, -c, std::max(b, c));
            }
        }

        // c > 0
        b = isqrt(md) + 1;
        if ((b & 1) != parity) ++b;
        for (; b <= set.bound(); b += 2) {
            u = set.bound();
            const i64 p = (b * b - md) / 4;
            if (p > u * u) break;
            const i64 a_lo = std::max<i64>(1, ceil_div(p, u));
            const i64 a_hi = isqrt(p);
            for (i64 a = a_lo; a <= a_hi; ++a) {
                if (p % a != 0) continue;
                const i64 c = p / a;
                set.offer(a, b, c, std::max(b, c));
            }
        }
    }
}

/// Reduced triples (a, b, c), c < 0, with max(a, b, -c) <= bound.
void search_reduced(i64 d, WitnessSet& set) {
    const i64 s = isqrt(d);
    for (i64 b = 2 - (d & 1); b <= s && b <= set.bound(); b += 2) {
        const i64 u = set.bound();
        const i64 p = (d - b * b) / 4;
        if (p > u * u) continue;
        const i64 a_lo = std::max<i64>({1, (s - b + 2) / 2, ceil_div(p, u)});
        const i64 a_hi = std::min((s + b) / 2, u);
        for (i64 a = a_lo; a <= a_hi; ++a) {
            if (p % a != 0) continue;
            const i64 c = p / a;
            set.offer(a, b, -c, std::max({a, b, c}));
        }
    }
}

template <class Search>
HminResult run_search(FundamentalDiscriminant D, i64 lower, i64 cap, const SearchOptions& options, Search search,
                      bool canonical) {
    auto finish = [&](WitnessSet& set) {
        HminResult r{D, set.bound(), {}};
        for (const auto& t : set.triples()) {
            QuadPoly f(t[0], t[1], t[2]);
            r.witnesses.push_back(canonical ? canonicalize(f) : f);
        }
        std::sort(r.witnesses.begin(), r.witnesses.end());
        r.witnesses.erase(std::unique(r.witnesses.begin(), r.witnesses.end()), r.witnesses.end());
        return r;
    };

    if (options.initial_bound) {
        WitnessSet set(*options.initial_bound);
        search(set);
        if (!set.found())
            throw validation_error("initial bound " + std::to_string(*options.initial_bound) +
                                   " is below the minimal height for D = " + std::to_string(D.value()));
        return finish(set);
    }

    // deepening from the proven lower bound; each pass is exhaustive below its bound
    for (i64 u = std::max<i64>(lower, 1);; u = std::min(cap, u + std::max<i64>(1, u / 8))) {
        WitnessSet set(u);
        search(set);
        if (set.found()) return finish(set);
        if (u >= cap) throw arithmetic_overflow("no generator below the explicit upper bound; search is inconsistent");
    }
}

/// Least integer u with 4u^2 >= n.
i64 imaginary_lower(i64 n) {
    i64 u = isqrt(n / 4);
    while (4 * u * u < n) ++u;
    return u;
}

/// Least integer u with 5u^2 >= d.
i64 real_lower(i64 d) {
    i64 u = isqrt(d / 5);
    while (5 * u * u < d) ++u;
    return u;
}

} // namespace

i64 upper_bound(FundamentalDiscriminant D) {
    if (D.imaginary()) {
        i64 best = -1;
        for (const auto& p : enumerate_imaginary(D)) {
            if (best < 0 || p.height() < best) best = p.height();
        }
        return best;
    }
    return height(prop2_generator(D));
}

HminResult hmin(FundamentalDiscriminant D, const SearchOptions& options) {
    if (D.imaginary()) {
        const i64 n = D.abs();
        // the lemma1_integral polynomial bounds the deepening cap without enumerating forms
        const i64 cap = height(lemma1_integral(n % 4 == 0 ? -n / 4 : -n));
        return run_search(D, imaginary_lower(n), cap, options,
                          [n](WitnessSet& s) { search_imaginary(n, s); }, true);
    }
    const i64 d = D.value();
    return run_search(D, real_lower(d), upper_bound(D), options,
                      [d](WitnessSet& s) { search_real(d, s); }, true);
}

HminResult hmin_reduced(FundamentalDiscriminant D, const SearchOptions& options) {
    if (D.imaginary()) throw validation_error("hmin_reduced needs D > 0");
    const i64 d = D.value();
    const i64 s = isqrt(d);
    // (1, b, -(D - b^2)/4) with b the largest admissible value <= s is reduced
    const i64 b1 = ((s - d) & 1) ? s - 1 : s;
    const i64 cap = std::max(b1, (d - b1 * b1) / 4);
    return run_search(D, real_lower(d), cap, options,
                      [d](WitnessSet& set) { search_reduced(d, set); }, false);
}

const char* to_string(ScanKind kind) {
    return kind == ScanKind::generator ? "generator" : "reduced";
}

std::string format_ratio(i64 h, i64 n) {
    if (n <= 0 || h < 0) throw validation_error("format_ratio needs h >= 0 and n > 0");
    // k = round_half_up(h 10^4 / sqrt(n)) is the largest k with (2k - 1)^2 n <= 4 h^2 10^8
    const i128 x = checked_mul(checked_mul(static_cast<i128>(4) * h, static_cast<i128>(h)), static_cast<i128>(100000000)) / n;
    const i128 t = isqrt(x);
    const i128 k = (t + 1) / 2;
    const std::string frac = std::to_string(static_cast<int>(k % 10000));
    return to_string(k / 10000) + "." + std::string(4 - frac.size(), '0') + frac;
}

std::string format_decimal4(double x) {
    const double scaled = std::floor(std::fabs(x) * 10000.0 + 0.5);
    const auto k = static_cast<long long>(scaled);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%lld.%04lld", (x < 0 && k != 0) ? "-" : "", k / 10000, k % 10000);
    return buf;
}

std::string ScanRow::ratio_text() const {
    return format_ratio(H, D < 0 ? -D : D);
}

std::string ScanRow::average_text() const {
    return average ? format_decimal4(*average) : std::string();
}

namespace {

struct PerD {
    i64 D;
    i64 H;
    QuadPoly triple;
};

std::vector<PerD> compute_heights(i64 lo, i64 hi, ScanKind kind, unsigned jobs) {
    if (kind == ScanKind::reduced) lo = std::max<i64>(lo, 1);
    std::vector<FundamentalDiscriminant> ds;
    if (lo <= hi) ds = fundamental_range(lo, hi);
    auto fn = [kind](const FundamentalDiscriminant& D) {
        HminResult r = kind == ScanKind::generator ? hmin(D) : hmin_reduced(D);
        return PerD{D.value(), r.H, r.witnesses.front()};
    };
    return parallel_map<PerD>(std::span<const FundamentalDiscriminant>(ds), fn, jobs);
}

// per-D values must already be ascending in D
ScanRow reduce_window(std::span<const PerD> values, i64 lo, i64 hi, ScanKind kind) {
    ScanRow row;
    row.window_lo = lo;
    row.window_hi = hi;
    const PerD* best = nullptr;
    long double sum = 0;
    std::size_t count = 0;
    for (const auto& v : values) {
        if (v.D < lo || v.D > hi) continue;
        const i128 abs_d = v.D < 0 ? -v.D : v.D;
        ++count;
        sum += static_cast<long double>(v.H) / std::sqrt(static_cast<long double>(abs_d));
        if (!best) {
            best = &v;
            continue;
        }
        const i128 best_abs = best->D < 0 ? -best->D : best->D;
        const i128 lhs = static_cast<i128>(v.H) * v.H * best_abs;
        const i128 rhs = static_cast<i128>(best->H) * best->H * abs_d;
        if (lhs > rhs || (lhs == rhs && abs_d < best_abs)) best = &v;
    }
    if (!best)
        throw validation_error("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                               "] contains no fundamental discriminant");
    row.D = best->D;
    row.H = best->H;
    row.triple = best->triple;
    row.count = count;
    if (kind == ScanKind::reduced) row.average = static_cast<double>(sum / count);
    return row;
}

} // namespace

ScanRow scan_max_ratio(i64 lo, i64 hi, ScanKind kind, unsigned jobs) {
    if (lo > hi) throw validation_error("scan window needs lo <= hi");
    const auto values = compute_heights(lo, hi, kind, jobs);
    return reduce_window(values, lo, hi, kind);
}

std::vector<ScanRow> scan_windows(i64 lo, i64 hi, i64 width, ScanKind kind, unsigned jobs) {
    if (lo >= hi) throw validation_error("scan needs lo < hi");
    if (width <= 0) throw validation_error("scan window width must be positive");
    const auto values = compute_heights(lo, hi, kind, jobs);
    std::vector<ScanRow> rows;
    for (i64 k = floor_div(lo, width); k * width < hi; ++k) {
        const i64 wlo = std::max(lo, k * width);
        const i64 whi = std::min(hi, (k + 1) * width);
        rows.push_back(reduce_window(values, wlo, whi, kind));
    }
    return rows;
}

} // namespace quadgen
