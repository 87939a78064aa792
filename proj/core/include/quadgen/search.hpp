#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadgen/field.hpp"
#include "quadgen/quadpoly.hpp"

namespace quadgen {

/// Minimal height of a generator of Q(sqrt(D)) with every canonical witness.
/// For hmin_reduced the witnesses are reduced triples (a, b, c), i.e. the
/// minimal polynomial is a*x^2 - b*x + c.
struct HminResult {
    FundamentalDiscriminant D;
    i64 H = 0;
    std::vector<QuadPoly> witnesses;  ///< sorted, deduplicated
};

struct SearchOptions {
    /// Run a single exhaustive pass bounded by this height instead of the
    /// default deepening schedule. Must be >= H_min(D).
    std::optional<i64> initial_bound;
};

/// Height of an explicit generator: prop2_generator for
/// D > 0, the least reduced-form height for D < 0.
i64 upper_bound(FundamentalDiscriminant D);

HminResult hmin(FundamentalDiscriminant D, const SearchOptions& options = {});

/// Minimal height over the reduced elements of D > 0.
HminResult hmin_reduced(FundamentalDiscriminant D, const SearchOptions& options = {});

enum class ScanKind { generator, reduced };
const char* to_string(ScanKind kind);

struct ScanRow {
    i64 window_lo = 0;
    i64 window_hi = 0;
    i64 D = 0;
    i64 H = 0;
    QuadPoly triple{1, 0, 1};
    std::size_t count = 0;          ///< fundamental discriminants in the window
    std::optional<double> average;  ///< mean of H/sqrt(|D|), reduced scans only

    std::string ratio_text() const;
    std::string average_text() const;
};

/// Row for the fundamental D in [lo, hi] maximising H/sqrt(|D|); ties go to
/// the smaller |D|. Reduced scans only consider D > 0 and also report the
/// window average. Throws validation_error for a window without any
/// fundamental discriminant.
ScanRow scan_max_ratio(i64 lo, i64 hi, ScanKind kind, unsigned jobs = 1);

/// One row per window [max(lo, kw), min(hi, (k+1)w)], windows aligned to
/// multiples of w. Each H is computed once even when windows share an end.
std::vector<ScanRow> scan_windows(i64 lo, i64 hi, i64 width, ScanKind kind, unsigned jobs = 1);

/// H / sqrt(n) rounded half-up to 4 decimals, decided in exact integers.
std::string format_ratio(i64 h, i64 n);

/// Half-up 4-decimal rendering of a float statistic.
std::string format_decimal4(double x);

} // namespace quadgen
