#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfk/cf.hpp"

namespace cfk {

/// Rational-approximation speed weights against which |a - A(n)/B(n)| is
/// measured; L denotes log B(n) in the configured base.
///   khinchin: B^2 L            newspeed: B^2 sqrt(L)/log L
///   adams:    B^2 L/log L      abc:      B^2 exp(sqrt(L)/log L)
enum class SpeedMetric { khinchin, newspeed, adams, abc };

const char* metric_name(SpeedMetric m);
SpeedMetric metric_from_name(const std::string& name);

/// Value interval of |a - A(n)/B(n)| * weight(B(n)); endpoints from the
/// exact error enclosure, log of B(n) from its bit length plus leading bits.
struct DoubleInterval {
    double lo = 0.0;
    double hi = 0.0;
    double midpoint() const { return 0.5 * (lo + hi); }
};

DoubleInterval speed_value(const AlgebraicNumber& num, const CFExpansion& cf, std::size_t n,
                           SpeedMetric metric, LogBase base = LogBase::natural);

/// Half-open bucket classification of speed values for n = 1..count.
/// An enclosure straddling a boundary is classified by its midpoint and the
/// index recorded in `straddled`. Convergents with B(n) <= 2 are excluded
/// from metrics that need log log B and counted in `excluded`.
struct SpeedBucketReport {
    SpeedMetric metric = SpeedMetric::khinchin;
    LogBase base = LogBase::natural;
    std::vector<double> boundaries;
    std::vector<std::uint64_t> counts; // boundaries.size() + 1 buckets
    std::size_t n_lo = 1, n_hi = 0;
    std::uint64_t excluded = 0;
    std::vector<std::size_t> straddled;

    std::uint64_t total() const;
};

std::vector<double> default_boundaries();

SpeedBucketReport speed_buckets(const AlgebraicNumber& num, std::size_t count, SpeedMetric metric,
                                const std::vector<double>& boundaries,
                                LogBase base = LogBase::natural);

/// r_n = B(n)/(B(n-1) log B(n-1)); entries with B(n-1) < 2 are flagged
/// as skipped (the log is not positive there).
struct RnValue {
    std::size_t n = 0;
    double value = 0.0;
    bool skipped = false;
};

std::vector<RnValue> rn_series(const CFExpansion& cf, std::size_t lo, std::size_t hi,
                               LogBase base = LogBase::natural);

std::uint64_t count_rn_above_one(const CFExpansion& cf, std::size_t lo, std::size_t hi,
                                 LogBase base = LogBase::natural);

} // namespace cfk
