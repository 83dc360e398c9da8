#include "cfk/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cfk {

double EmpiricalDistribution::freq(const Int& k) const {
    auto it = counts.find(k);
    if (it == counts.end()) return 0.0;
    return double(it->second) / double(total);
}

EmpiricalDistribution empirical_dist(const CFExpansion& cf, std::size_t n) {
    if (n > cf.certified_len())
        fail(Errc::insufficient_expansion, "empirical distribution over " + std::to_string(n) +
                                               " coefficients, certified " +
                                               std::to_string(cf.certified_len()));
    if (n == 0) fail(Errc::invalid_input, "empirical distribution needs n >= 1");
    EmpiricalDistribution d;
    for (std::size_t i = 0; i < n; ++i) ++d.counts[cf.coeffs[i]];
    d.total = n;
    d.maxn = d.counts.rbegin()->first;
    return d;
}

double kld(const EmpiricalDistribution& emp, const GkModel& model, LogBase base) {
    KahanSum s;
    for (const auto& [k, cnt] : emp.counts) {
        if (cnt == 0) continue;
        if (!model.in_support(k))
            fail(Errc::support_mismatch,
                 "model assigns zero probability to observed coefficient " + k.get_str());
        double p = double(cnt) / double(emp.total);
        s.add(p * (std::log2(p) - model.log2_pmf(k)));
    }
    double bits = s.value();
    return base == LogBase::base2 ? bits : bits * M_LN2;
}

double kld_discrete(const std::vector<double>& p, const std::vector<double>& q, LogBase base) {
    if (p.size() != q.size()) fail(Errc::invalid_input, "distributions differ in length");
    KahanSum s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] <= 0.0)
            fail(Errc::support_mismatch, "q vanishes at index " + std::to_string(i));
        s.add(p[i] * std::log2(p[i] / q[i]));
    }
    return base == LogBase::base2 ? s.value() : s.value() * M_LN2;
}

Binning Binning::default_binning() { return Binning{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}; }

ChiSquareResult chi_square_counts(const std::vector<double>& observed,
                                  const std::vector<double>& expected) {
    if (observed.empty() || observed.size() != expected.size())
        fail(Errc::invalid_input, "observed/expected cell mismatch");
    ChiSquareResult r;
    r.df = observed.size() - 1;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) fail(Errc::invalid_input, "expected count must be positive");
        double d = observed[i] - expected[i];
        r.statistic += d * d / expected[i];
    }
    if (r.df == 0) {
        r.p_value = 0.0;
        return r;
    }
    boost::math::chi_squared dist(static_cast<double>(r.df));
    r.p_value = boost::math::cdf(dist, r.statistic);
    return r;
}

ChiSquareResult chi_square(const EmpiricalDistribution& emp, const GkModel& model,
                           const Binning& binning) {
    const auto& e = binning.edges;
    if (e.empty()) fail(Errc::invalid_input, "empty bin specification");
    if (e.front() < 1) fail(Errc::invalid_input, "bin edges must start at k >= 1");
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] <= e[i - 1]) fail(Errc::invalid_input, "bin edges must be strictly increasing");

    const std::size_t cells = e.size(); // [e0,e1), ..., [e_last, inf)
    std::vector<double> expected(cells), observed(cells, 0.0);
    for (std::size_t i = 0; i < cells; ++i) {
        Int lo(e[i]);
        std::optional<Int> hi;
        if (i + 1 < cells) hi = Int(e[i + 1]) - 1;
        expected[i] = double(emp.total) * model.mass(lo, hi);
        if (expected[i] < 1.0)
            fail(Errc::invalid_input, "bin " + std::to_string(i) + " has expected count " +
                                          std::to_string(expected[i]) + " < 1");
    }
    for (const auto& [k, cnt] : emp.counts) {
        if (k < Int(e.front())) continue; // below the first edge: not binned
        std::size_t i = cells - 1;
        for (std::size_t j = 1; j < cells; ++j) {
            if (k < Int(e[j])) {
                i = j - 1;
                break;
            }
        }
        observed[i] += double(cnt);
    }
    ChiSquareResult r;
    r.df = cells - 1;
    for (std::size_t i = 0; i < cells; ++i) {
        double d = observed[i] - expected[i];
        r.statistic += d * d / expected[i];
    }
    if (r.df == 0) {
        r.p_value = 0.0;
        return r;
    }
    boost::math::chi_squared dist(static_cast<double>(r.df));
    r.p_value = boost::math::cdf(dist, r.statistic);
    return r;
}

std::vector<double> geometric_mean_series(const CFExpansion& cf,
                                          const std::vector<std::size_t>& checkpoints) {
    std::size_t maxcp = 0;
    for (std::size_t c : checkpoints) maxcp = std::max(maxcp, c);
    if (maxcp > cf.certified_len())
        fail(Errc::insufficient_expansion, "checkpoint beyond certified length");
    std::vector<double> prefix(maxcp + 1, 0.0);
    KahanSum s;
    for (std::size_t i = 1; i <= maxcp; ++i) {
        s.add(log2_int(cf.coeffs[i - 1]));
        prefix[i] = s.value();
    }
    std::vector<double> out;
    out.reserve(checkpoints.size());
    for (std::size_t c : checkpoints) {
        if (c == 0) fail(Errc::invalid_input, "checkpoint must be >= 1");
        out.push_back(std::exp2(prefix[c] / double(c)));
    }
    return out;
}

std::vector<double> arithmetic_mean_series(const CFExpansion& cf,
                                           const std::vector<std::size_t>& checkpoints) {
    std::size_t maxcp = 0;
    for (std::size_t c : checkpoints) maxcp = std::max(maxcp, c);
    if (maxcp > cf.certified_len())
        fail(Errc::insufficient_expansion, "checkpoint beyond certified length");
    std::vector<Int> prefix(maxcp + 1);
    Int s = 0;
    for (std::size_t i = 1; i <= maxcp; ++i) {
        s += cf.coeffs[i - 1];
        prefix[i] = s;
    }
    std::vector<double> out;
    out.reserve(checkpoints.size());
    for (std::size_t c : checkpoints) {
        if (c == 0) fail(Errc::invalid_input, "checkpoint must be >= 1");
        Rat m(prefix[c], Int(c));
        m.canonicalize();
        out.push_back(rat_to_double(m));
    }
    return out;
}

KOfA k_of_a(const CFExpansion& cf, std::size_t lo, std::size_t hi) {
    if (lo < 1 || hi < lo) fail(Errc::invalid_input, "empty position range");
    if (hi > cf.certified_len() + 1)
        fail(Errc::insufficient_expansion, "range end beyond certified length");
    KOfA best;
    Rat best_v(-1);
    for (std::size_t p = lo; p <= hi; ++p) {
        const Int& s = p == 1 ? cf.b0 : cf.coeffs[p - 2];
        Rat v(s, Int(p));
        v.canonicalize();
        if (v > best_v) { // strict: smallest position wins exact ties
            best_v = v;
            best.argmax = p;
        }
    }
    best.k = rat_to_double(best_v);
    return best;
}

double bailey_c(double gm, std::uint64_t n) {
    if (n < 1) fail(Errc::invalid_input, "bailey_c requires n >= 1");
    double k0 = khinchin_constant(1e-6);
    return std::abs(k0 - gm) * std::sqrt(double(n));
}

std::vector<double> levy_ratio_series(double K, std::size_t n_max) {
    if (!(K > 0.0)) fail(Errc::invalid_input, "K must be positive");
    if (n_max < 1) fail(Errc::invalid_input, "n_max must be >= 1");
    std::vector<double> out;
    out.reserve(n_max);
    const double log2_07 = std::log2(0.7);
    for (std::size_t n = 1; n <= n_max; ++n) {
        double num = std::log1p(1.0 / (K * double(n))) / M_LN2;
        out.push_back(std::exp2(std::log2(num) - double(n) * log2_07));
    }
    return out;
}

namespace {

// Exact bracket of the tail value x_n = [0; b_n, b_{n+1}, ...]: consecutive
// convergents of the tail enclose it strictly.
struct TailBracket {
    Rat lo, hi;
};

TailBracket tail_bracket(const CFExpansion& cf, std::size_t n, std::size_t depth) {
    std::size_t last = std::min(cf.certified_len(), n + depth);
    Int p_prev = 1, q_prev = 0;
    Int p = cf.coeff(n), q = 1;
    for (std::size_t i = n + 1; i <= last; ++i) {
        Int np = cf.coeff(i) * p + p_prev;
        Int nq = cf.coeff(i) * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(np);
        q = std::move(nq);
    }
    Rat c1(q_prev, p_prev); // reciprocals: x_n = 1/t_n
    Rat c2(q, p);
    c1.canonicalize();
    c2.canonicalize();
    return {std::min(c1, c2), std::max(c1, c2)};
}

} // namespace

double levy_empirical_deviation(const CFExpansion& cf, double s, std::size_t lo, std::size_t hi,
                                std::size_t depth) {
    if (!(s >= 0.0 && s <= 1.0)) fail(Errc::invalid_input, "s must lie in [0,1]");
    if (lo < 1 || hi < lo) fail(Errc::invalid_input, "empty index range");
    if (hi + 2 > cf.certified_len())
        fail(Errc::insufficient_expansion, "range too deep for certified expansion");
    Rat sr;
    mpq_set_d(sr.get_mpq_t(), s);
    std::uint64_t below = 0;
    for (std::size_t n = lo; n <= hi; ++n) {
        std::size_t d = depth;
        for (;;) {
            TailBracket b = tail_bracket(cf, n, d);
            if (b.hi <= sr) {
                ++below;
                break;
            }
            if (b.lo > sr) break;
            if (n + d >= cf.certified_len())
                fail(Errc::certification_failure,
                     "tail comparison undecidable at n=" + std::to_string(n) +
                         " with the certified expansion");
            d *= 2;
        }
    }
    double freq = double(below) / double(hi - lo + 1);
    return std::abs(freq - gk_cdf(s));
}

const char* StatReport::csv_header() {
    return "number,n,kld_gk,kld_trunc,chi2,p,gmean,amean,k_of_a,k_argmax,bailey_c";
}

namespace {
std::string fmt(double v, int prec = 6) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(prec);
    os << v;
    return os.str();
}
} // namespace

std::string StatReport::csv_row() const {
    std::ostringstream os;
    os << number << ',' << n << ',' << fmt(kld_gk) << ',' << fmt(kld_trunc) << ',' << fmt(chi2, 4)
       << ',' << fmt(p, 4) << ',' << fmt(gmean) << ',' << fmt(amean) << ',' << fmt(k_of_a, 4)
       << ',' << k_argmax << ',' << fmt(bailey_c, 4);
    return os.str();
}

nlohmann::json StatReport::to_json() const {
    return nlohmann::json{{"number", number},   {"n", n},
                          {"kld_gk", kld_gk},   {"kld_trunc", kld_trunc},
                          {"chi2", chi2},       {"p", p},
                          {"gmean", gmean},     {"amean", amean},
                          {"k_of_a", k_of_a},   {"k_argmax", k_argmax},
                          {"bailey_c", bailey_c}};
}

} // namespace cfk
