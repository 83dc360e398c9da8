#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cfk/cf.hpp"
#include "cfk/distmodel.hpp"
#include "json.hpp"

namespace cfk {

/// Occurrence counts of the partial quotients b_1..b_n (b0 excluded).
struct EmpiricalDistribution {
    std::map<Int, std::uint64_t> counts;
    std::uint64_t total = 0;
    Int maxn; // largest observed coefficient

    double freq(const Int& k) const;
};

EmpiricalDistribution empirical_dist(const CFExpansion& cf, std::size_t n);

/// KLD(P, Q) = sum_k P(k) log(P(k)/Q(k)) with P empirical, Q model.
/// The published fit tables use natural log despite the surrounding
/// base-2 convention; the base is therefore explicit here (default base 2).
double kld(const EmpiricalDistribution& emp, const GkModel& model,
           LogBase base = LogBase::base2);

/// Same divergence over two explicit finite distributions on a shared index
/// set. Terms with p=0 contribute 0; q=0 under p>0 is a support mismatch.
double kld_discrete(const std::vector<double>& p, const std::vector<double>& q,
                    LogBase base = LogBase::base2);

/// Coefficient-value cells for the chi-square test: edges {e0,...,em} mean
/// cells [e0,e1), ..., [e_{m-1},e_m), [e_m, inf). Default: k = 1..9 singles
/// plus the tail k >= 10 (df = 9).
struct Binning {
    std::vector<std::uint64_t> edges;
    static Binning default_binning();
};

struct ChiSquareResult {
    double statistic = 0.0;
    /// P(chi2_df <= statistic): the probability that a random sample's
    /// statistic would not be larger.
    double p_value = 0.0;
    std::size_t df = 0;
};

ChiSquareResult chi_square(const EmpiricalDistribution& emp, const GkModel& model,
                           const Binning& binning);

/// Pearson statistic over explicit per-cell observed and expected counts:
/// sum (o-e)^2/e with df = cells-1 and the lower-tail p-value.
ChiSquareResult chi_square_counts(const std::vector<double>& observed,
                                  const std::vector<double>& expected);

/// Running geometric means exp2((1/n) sum log2 b_i) at each checkpoint.
std::vector<double> geometric_mean_series(const CFExpansion& cf,
                                          const std::vector<std::size_t>& checkpoints);

/// Running arithmetic means (1/n) sum b_i at each checkpoint.
std::vector<double> arithmetic_mean_series(const CFExpansion& cf,
                                           const std::vector<std::size_t>& checkpoints);

struct KOfA {
    double k = 0.0;
    std::size_t argmax = 0;
};

/// K = max over positions p in [lo, hi] of s_p / p, where s_1, s_2, ... is
/// the coefficient stream *including the integer part*: s_1 = b0,
/// s_{p} = b_{p-1}. This is the indexing under which the published
/// K measurements (value and arg position) reproduce exactly.
/// Smallest position wins ties.
KOfA k_of_a(const CFExpansion& cf, std::size_t lo, std::size_t hi);

/// |K0 - gm| * sqrt(n) against the conjectured |K0 - GM(n)| < C/sqrt(n).
double bailey_c(double gm, std::uint64_t n);

/// log2(1 + 1/(K n)) / 0.7^n for n = 1..n_max: the divergent ratio showing
/// that a uniform 0.7^n error bound cannot hold once b_n < K n.
std::vector<double> levy_ratio_series(double K, std::size_t n_max);

/// |frequency(x_n <= s for n in [lo, hi]) - log2(1+s)| where
/// x_n = [0; b_n, b_{n+1}, ...] is evaluated as an exact rational bracket of
/// tail depth `depth` (deepened automatically until the comparison with s is
/// certified).
double levy_empirical_deviation(const CFExpansion& cf, double s, std::size_t lo, std::size_t hi,
                                std::size_t depth = 30);

/// One analyzed (number, n) pair; serializes to a fixed-field CSV row or
/// JSON object.
struct StatReport {
    std::string number;
    std::uint64_t n = 0;
    double kld_gk = 0.0;
    double kld_trunc = 0.0;
    double chi2 = 0.0;
    double p = 0.0;
    double gmean = 0.0;
    double amean = 0.0;
    double k_of_a = 0.0;
    std::uint64_t k_argmax = 0;
    double bailey_c = 0.0;

    static const char* csv_header();
    std::string csv_row() const;
    nlohmann::json to_json() const;
};

} // namespace cfk
