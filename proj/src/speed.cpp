#include "cfk/speed.hpp"

#include <cmath>

namespace cfk {

const char* metric_name(SpeedMetric m) {
    switch (m) {
    case SpeedMetric::khinchin: return "khinchin";
    case SpeedMetric::newspeed: return "newspeed";
    case SpeedMetric::adams: return "adams";
    case SpeedMetric::abc: return "abc";
    }
    return "?";
}

SpeedMetric metric_from_name(const std::string& name) {
    if (name == "khinchin") return SpeedMetric::khinchin;
    if (name == "newspeed") return SpeedMetric::newspeed;
    if (name == "adams") return SpeedMetric::adams;
    if (name == "abc") return SpeedMetric::abc;
    fail(Errc::invalid_input, "unknown speed metric: " + name);
}

namespace {

// weight(B)/B^2 as a double; L = log B in the configured base.
double weight_over_b2(const Int& B, SpeedMetric m, LogBase base) {
    double L = log_int(B, base);
    switch (m) {
    case SpeedMetric::khinchin:
        return L; // 0 at B=1: the weight itself vanishes
    case SpeedMetric::newspeed: {
        if (B <= 2) fail(Errc::domain_error, "log log B undefined for B <= 2");
        return std::sqrt(L) / log_value(L, base);
    }
    case SpeedMetric::adams: {
        if (B <= 2) fail(Errc::domain_error, "log log B undefined for B <= 2");
        return L / log_value(L, base);
    }
    case SpeedMetric::abc: {
        if (B <= 2) fail(Errc::domain_error, "log log B undefined for B <= 2");
        return std::exp(std::sqrt(L) / log_value(L, base));
    }
    }
    fail(Errc::invalid_input, "bad metric");
}

DoubleInterval value_from_enclosure(const ErrorEnclosure& enc, const Int& Bn, SpeedMetric metric,
                                    LogBase base) {
    double w = weight_over_b2(Bn, metric, base);
    Rat b2(Bn * Bn);
    Rat lo = enc.lo * b2;
    Rat hi = enc.hi * b2;
    return {rat_to_double(lo) * w, rat_to_double(hi) * w};
}

} // namespace

DoubleInterval speed_value(const AlgebraicNumber& num, const CFExpansion& cf, std::size_t n,
                           SpeedMetric metric, LogBase base) {
    if (n < 1) fail(Errc::invalid_input, "speed value needs n >= 1");
    auto t = detail::convergent_table(cf, n);
    ErrorEnclosure enc = approximation_error(num, cf, n);
    return value_from_enclosure(enc, t.B[n], metric, base);
}

std::vector<double> default_boundaries() { return {0.5, 5.0, 10.0, 50.0, 100.0}; }

std::uint64_t SpeedBucketReport::total() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

SpeedBucketReport speed_buckets(const AlgebraicNumber& num, std::size_t count, SpeedMetric metric,
                                const std::vector<double>& boundaries, LogBase base) {
    if (count < 2) fail(Errc::invalid_input, "bucket report needs count >= 2");
    if (boundaries.empty()) fail(Errc::invalid_input, "no bucket boundaries");
    for (std::size_t i = 1; i < boundaries.size(); ++i)
        if (boundaries[i] <= boundaries[i - 1])
            fail(Errc::invalid_input, "bucket boundaries must be sorted strictly");

    SpeedBucketReport rep;
    rep.metric = metric;
    rep.base = base;
    rep.boundaries = boundaries;
    rep.counts.assign(boundaries.size() + 1, 0);
    rep.n_lo = 1;
    rep.n_hi = count;

    LagrangeExpander exp(num);
    exp.ensure(count + 64);
    const CFExpansion& cf = exp.current();
    auto table = detail::convergent_table(cf, count);

    auto classify = [&](double v) {
        std::size_t i = 0;
        while (i < boundaries.size() && v >= boundaries[i]) ++i;
        return i;
    };

    for (std::size_t n = 1; n <= count; ++n) {
        if (metric != SpeedMetric::khinchin && table.B[n] <= 2) {
            ++rep.excluded;
            continue;
        }
        ErrorEnclosure enc =
            detail::enclosure_at(cf, n, table.B[n], table.B[n - 1], 10, &exp);
        DoubleInterval v = value_from_enclosure(enc, table.B[n], metric, base);
        std::size_t blo = classify(v.lo);
        std::size_t bhi = classify(v.hi);
        if (blo != bhi) rep.straddled.push_back(n);
        ++rep.counts[classify(v.midpoint())];
    }
    return rep;
}

std::vector<RnValue> rn_series(const CFExpansion& cf, std::size_t lo, std::size_t hi,
                               LogBase base) {
    if (lo < 1 || hi < lo) fail(Errc::invalid_input, "empty range");
    auto t = detail::convergent_table(cf, hi);
    std::vector<RnValue> out;
    out.reserve(hi - lo + 1);
    for (std::size_t n = lo; n <= hi; ++n) {
        RnValue r;
        r.n = n;
        const Int& Bp = t.B[n - 1];
        if (Bp < 2) {
            r.skipped = true;
        } else {
            Rat ratio(t.B[n], Bp);
            ratio.canonicalize();
            r.value = rat_to_double(ratio) / log_int(Bp, base);
        }
        out.push_back(r);
    }
    return out;
}

std::uint64_t count_rn_above_one(const CFExpansion& cf, std::size_t lo, std::size_t hi,
                                 LogBase base) {
    std::uint64_t c = 0;
    for (const RnValue& r : rn_series(cf, lo, hi, base))
        if (!r.skipped && r.value > 1.0) ++c;
    return c;
}

} // namespace cfk
