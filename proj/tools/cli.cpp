#include "cli.hpp"

#include <cstdlib>
#include <future>
#include <optional>

#include "CLI11.hpp"
#include "cfk/numberspec.hpp"
#include "cfk/randsrc.hpp"
#include "cfk/speed.hpp"
#include "cfk/stats.hpp"
#include "cli_util.hpp"

namespace cfk::cli {

int reproduce_tables(int table, const std::string& out_dir, std::ostream& err);

namespace {

LogBase parse_base(const std::string& s) {
    if (s == "e" || s == "natural") return LogBase::natural;
    if (s == "2" || s == "base2") return LogBase::base2;
    fail(Errc::invalid_input, "log base must be 'e' or '2', got: " + s);
}

const char* base_name(LogBase b) { return b == LogBase::natural ? "e" : "2"; }

/// Default from the environment (KHINCHIN_LOG_BASE in {e, 2}); an explicit
/// flag still wins.
LogBase env_default_base() {
    const char* v = std::getenv("KHINCHIN_LOG_BASE");
    if (!v) return LogBase::natural;
    return parse_base(v);
}

struct CommonOpts {
    std::vector<std::string> numbers;
    std::string config_path;
    std::string format = "csv";
    std::string out_path;
    std::string log_base_flag;
    std::string kld_base_flag;
    std::uint64_t terms = 1001;

    LogBase speed_base() const {
        return log_base_flag.empty() ? env_default_base() : parse_base(log_base_flag);
    }
    // The published divergence tables are natural-log; that is the
    // reporting default. The library-level default elsewhere stays base 2.
    LogBase kld_base() const {
        return kld_base_flag.empty() ? LogBase::natural : parse_base(kld_base_flag);
    }
};

// config file fills any option the command line left untouched
void apply_config(CommonOpts& o, const CLI::App* sub) {
    if (o.config_path.empty()) return;
    std::ifstream f(o.config_path);
    if (!f) fail(Errc::invalid_input, "cannot read config file: " + o.config_path);
    nlohmann::json cfg = nlohmann::json::parse(f, nullptr, false);
    if (cfg.is_discarded()) fail(Errc::invalid_input, "config file is not valid JSON");
    auto untouched = [&](const char* name) {
        auto* opt = sub->get_option_no_throw(name);
        return opt != nullptr && opt->count() == 0;
    };
    if (cfg.contains("numbers") && untouched("--number"))
        for (const auto& n : cfg["numbers"]) o.numbers.push_back(n.dump());
    if (cfg.contains("terms") && untouched("--terms")) o.terms = cfg["terms"].get<std::uint64_t>();
    if (cfg.contains("format") && untouched("--format"))
        o.format = cfg["format"].get<std::string>();
    if (cfg.contains("out") && untouched("--out")) o.out_path = cfg["out"].get<std::string>();
    if (cfg.contains("log_base") && untouched("--log-base"))
        o.log_base_flag = cfg["log_base"].get<std::string>();
    if (cfg.contains("kld_base") && untouched("--kld-base"))
        o.kld_base_flag = cfg["kld_base"].get<std::string>();
}

std::vector<NumberSpec> parse_numbers(const std::vector<std::string>& texts) {
    if (texts.empty()) fail(Errc::invalid_input, "at least one --number spec is required");
    std::vector<NumberSpec> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_number_spec(t));
    return out;
}

MetaList base_meta(const CommonOpts& o, const std::vector<NumberSpec>& specs) {
    MetaList m;
    m.emplace_back("tool", kToolVersion);
    m.emplace_back("generator", generator_version());
    m.emplace_back("log_base", base_name(o.speed_base()));
    m.emplace_back("kld_log_base", base_name(o.kld_base()));
    nlohmann::json ns = nlohmann::json::array();
    for (const auto& s : specs) ns.push_back(s.raw);
    m.emplace_back("numbers", ns.dump());
    return m;
}

// ---------------------------------------------------------------- expand --

int cmd_expand(const CommonOpts& o, const std::string& ilo, const std::string& ihi,
               std::ostream& out) {
    CFExpansion cf;
    std::vector<NumberSpec> specs;
    std::string id;
    if (!ilo.empty() || !ihi.empty()) {
        if (ilo.empty() || ihi.empty())
            fail(Errc::invalid_input, "--interval-lo and --interval-hi must come together");
        Rat lo = parse_decimal(ilo), hi = parse_decimal(ihi);
        cf = cf_from_interval(lo, hi);
        if (cf.certified_len() + 1 > o.terms) {
            cf.coeffs.resize(o.terms - 1);
        }
        id = "interval[" + ilo + ".." + ihi + "]";
    } else {
        specs = parse_numbers(o.numbers);
        if (specs.size() != 1) fail(Errc::invalid_input, "expand takes exactly one number");
        cf = cf_expand(specs[0].number, o.terms);
        id = specs[0].id;
    }

    MetaList meta = base_meta(o, specs);
    meta.emplace_back("number_id", id);
    if (o.format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Int& c : cf.coeffs) coeffs.push_back(c.get_str());
        nlohmann::json rows = nlohmann::json::array();
        rows.push_back({{"number", id},
                        {"b0", cf.b0.get_str()},
                        {"coeffs", std::move(coeffs)},
                        {"certified_len", cf.certified_len()},
                        {"b0_certified", cf.b0_certified}});
        emit_artifact(o.out_path, json_artifact(meta, std::move(rows)).dump(2) + "\n", out);
    } else {
        std::vector<std::string> rows;
        rows.push_back("0," + cf.b0.get_str());
        for (std::size_t i = 0; i < cf.certified_len(); ++i)
            rows.push_back(std::to_string(i + 1) + "," + cf.coeffs[i].get_str());
        emit_artifact(o.out_path, csv_artifact(meta, "n,b", rows), out);
    }
    return 0;
}

// --------------------------------------------------------------- analyze --

StatReport analyze_one(const NumberSpec& ns, std::size_t terms, LogBase kld_base) {
    CFExpansion cf = cf_expand(ns.number, terms);
    const std::size_t n = cf.certified_len();
    EmpiricalDistribution emp = empirical_dist(cf, n);
    StatReport r;
    r.number = ns.id;
    r.n = n;
    r.kld_gk = kld(emp, GkModel::standard(), kld_base);
    r.kld_trunc = kld(emp, GkModel::truncated(emp.maxn), kld_base);
    ChiSquareResult c2 = chi_square(emp, GkModel::standard(), Binning::default_binning());
    r.chi2 = c2.statistic;
    r.p = c2.p_value;
    r.gmean = geometric_mean_series(cf, {n})[0];
    r.amean = arithmetic_mean_series(cf, {n})[0];
    KOfA k = k_of_a(cf, 1, n);
    r.k_of_a = k.k;
    r.k_argmax = k.argmax;
    r.bailey_c = bailey_c(r.gmean, n);
    return r;
}

int cmd_analyze(const CommonOpts& o, std::ostream& out) {
    auto specs = parse_numbers(o.numbers);
    auto reports = map_concurrently<StatReport>(
        specs.size(), [&](std::size_t i) { return analyze_one(specs[i], o.terms, o.kld_base()); });

    MetaList meta = base_meta(o, specs);
    meta.emplace_back("terms", std::to_string(o.terms));
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : reports) rows.push_back(r.to_json());
        emit_artifact(o.out_path, json_artifact(meta, std::move(rows)).dump(2) + "\n", out);
    } else {
        std::vector<std::string> rows;
        for (const auto& r : reports) rows.push_back(r.csv_row());
        emit_artifact(o.out_path, csv_artifact(meta, StatReport::csv_header(), rows), out);
    }
    return 0;
}

// ----------------------------------------------------------------- speed --

int cmd_speed(const CommonOpts& o, std::size_t count, const std::vector<std::string>& metric_names,
              std::vector<double> boundaries, std::ostream& out) {
    auto specs = parse_numbers(o.numbers);
    if (specs.size() != 1) fail(Errc::invalid_input, "speed takes exactly one number");
    if (boundaries.empty()) boundaries = default_boundaries();
    std::vector<SpeedMetric> metrics;
    for (const auto& m : metric_names) metrics.push_back(metric_from_name(m));

    LogBase base = o.speed_base();
    auto reports = map_concurrently<SpeedBucketReport>(metrics.size(), [&](std::size_t i) {
        return speed_buckets(specs[0].number, count, metrics[i], boundaries, base);
    });

    MetaList meta = base_meta(o, specs);
    meta.emplace_back("count", std::to_string(count));

    auto range_label = [&](std::size_t i) {
        if (i == 0) return std::string("0") + ".." + fmt_fixed(boundaries[0], 2);
        if (i == boundaries.size()) return fmt_fixed(boundaries.back(), 2) + "..inf";
        return fmt_fixed(boundaries[i - 1], 2) + ".." + fmt_fixed(boundaries[i], 2);
    };

    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t b = 0; b <= boundaries.size(); ++b) {
            nlohmann::json row{{"range", range_label(b)}};
            for (std::size_t i = 0; i < metrics.size(); ++i)
                row[metric_name(metrics[i])] = reports[i].counts[b];
            rows.push_back(std::move(row));
        }
        nlohmann::json art = json_artifact(meta, std::move(rows));
        for (std::size_t i = 0; i < metrics.size(); ++i) {
            art["meta"][std::string(metric_name(metrics[i])) + "_excluded"] =
                reports[i].excluded;
            art["meta"][std::string(metric_name(metrics[i])) + "_straddled"] =
                reports[i].straddled.size();
        }
        emit_artifact(o.out_path, art.dump(2) + "\n", out);
    } else {
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < metrics.size(); ++i) {
            for (std::size_t b = 0; b <= boundaries.size(); ++b) {
                double lo = b == 0 ? 0.0 : boundaries[b - 1];
                std::string hi =
                    b == boundaries.size() ? "inf" : fmt_fixed(boundaries[b], 6);
                rows.push_back(std::string(metric_name(metrics[i])) + "," + fmt_fixed(lo, 6) +
                               "," + hi + "," + std::to_string(reports[i].counts[b]));
            }
        }
        emit_artifact(o.out_path, csv_artifact(meta, "metric,range_lo,range_hi,count", rows),
                      out);
    }
    return 0;
}

// -------------------------------------------------------------------- rn --

int cmd_rn(const CommonOpts& o, std::size_t from, std::size_t to, std::ostream& out) {
    auto specs = parse_numbers(o.numbers);
    if (specs.size() != 1) fail(Errc::invalid_input, "rn takes exactly one number");
    LogBase base = o.speed_base();
    CFExpansion cf = cf_expand(specs[0].number, to + 1);
    auto series = rn_series(cf, from, to, base);
    std::uint64_t above = 0;
    for (const auto& r : series)
        if (!r.skipped && r.value > 1.0) ++above;

    MetaList meta = base_meta(o, specs);
    meta.emplace_back("range", std::to_string(from) + ".." + std::to_string(to));
    meta.emplace_back("count_above_one", std::to_string(above));
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : series)
            rows.push_back({{"n", r.n}, {"rn", r.value}, {"skipped", r.skipped}});
        emit_artifact(o.out_path, json_artifact(meta, std::move(rows)).dump(2) + "\n", out);
    } else {
        std::vector<std::string> rows;
        for (const auto& r : series)
            rows.push_back(std::to_string(r.n) + "," + fmt_fixed(r.value, 6) + "," +
                           (r.skipped ? "1" : "0"));
        emit_artifact(o.out_path, csv_artifact(meta, "n,rn,skipped", rows), out);
    }
    return 0;
}

// ---------------------------------------------------------------- random --

int cmd_random(const CommonOpts& o, std::uint64_t seed, std::uint32_t digits, std::uint32_t count,
               std::ostream& out) {
    struct Row {
        std::uint64_t seed;
        std::size_t certified;
        std::string maxn;
        double kld_gk, kld_trunc;
    };
    LogBase kb = o.kld_base();
    auto rows_data = map_concurrently<Row>(count, [&](std::size_t i) {
        RandomNumberSpec spec{seed + i, digits};
        CFExpansion cf = random_cf(spec);
        EmpiricalDistribution emp = empirical_dist(cf, cf.certified_len());
        Row r;
        r.seed = spec.seed;
        r.certified = cf.certified_len();
        r.maxn = emp.maxn.get_str();
        r.kld_gk = kld(emp, GkModel::standard(), kb);
        r.kld_trunc = kld(emp, GkModel::truncated(emp.maxn), kb);
        return r;
    });

    MetaList meta;
    meta.emplace_back("tool", kToolVersion);
    meta.emplace_back("generator", generator_version());
    meta.emplace_back("kld_log_base", base_name(kb));
    meta.emplace_back("seed", std::to_string(seed));
    meta.emplace_back("count", std::to_string(count));
    meta.emplace_back("digits", std::to_string(digits));
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : rows_data)
            rows.push_back({{"seed", r.seed},
                            {"certified_len", r.certified},
                            {"maxn", r.maxn},
                            {"kld_gk", r.kld_gk},
                            {"kld_trunc", r.kld_trunc}});
        emit_artifact(o.out_path, json_artifact(meta, std::move(rows)).dump(2) + "\n", out);
    } else {
        std::vector<std::string> rows;
        for (const auto& r : rows_data)
            rows.push_back(std::to_string(r.seed) + "," + std::to_string(r.certified) + "," +
                           r.maxn + "," + fmt_fixed(r.kld_gk, 6) + "," +
                           fmt_fixed(r.kld_trunc, 6));
        emit_artifact(o.out_path,
                      csv_artifact(meta, "seed,certified_len,maxn,kld_gk,kld_trunc", rows), out);
    }
    return 0;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"continued-fraction statistics for algebraic numbers"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommonOpts o;

    auto add_common = [&](CLI::App* sub, bool with_terms = true) {
        sub->add_option("--number", o.numbers,
                        "number spec JSON, e.g. {\"kind\":\"nthroot\",\"radicand\":2,"
                        "\"degree\":3}");
        sub->add_option("--config", o.config_path, "JSON config file; flags override it");
        sub->add_option("--format", o.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out_path, "output file (default stdout)");
        sub->add_option("--log-base", o.log_base_flag, "speed/r_n log base: e or 2")
            ->check(CLI::IsMember({"e", "2"}));
        sub->add_option("--kld-base", o.kld_base_flag, "divergence log base: e or 2")
            ->check(CLI::IsMember({"e", "2"}));
        if (with_terms)
            sub->add_option("--terms", o.terms, "coefficients to expand (including b0)")
                ->check(CLI::PositiveNumber);
    };

    auto* expand = app.add_subcommand("expand", "exact continued-fraction expansion");
    std::string ilo, ihi;
    add_common(expand);
    expand->add_option("--interval-lo", ilo, "decimal lower endpoint (interval mode)");
    expand->add_option("--interval-hi", ihi, "decimal upper endpoint (interval mode)");

    auto* analyze = app.add_subcommand("analyze", "KLD, chi-square, means, K(a), Bailey C");
    add_common(analyze);

    auto* speed = app.add_subcommand("speed", "approximation-speed bucket reports");
    std::size_t count = 3000;
    std::vector<std::string> metric_names{"khinchin", "newspeed"};
    std::vector<double> boundaries;
    add_common(speed, false);
    speed->add_option("--count", count, "number of convergents")->check(CLI::PositiveNumber);
    speed->add_option("--metric", metric_names, "khinchin|newspeed|adams|abc");
    speed->add_option("--boundaries", boundaries, "bucket boundaries");

    auto* rn = app.add_subcommand("rn", "r_n = B(n)/(B(n-1) log B(n-1)) series");
    std::size_t from = 1, to = 1000;
    add_common(rn, false);
    rn->add_option("--from", from, "first index");
    rn->add_option("--to", to, "last index");

    auto* random = app.add_subcommand("random", "pseudo-random baseline pipeline");
    std::uint64_t seed = 1;
    std::uint32_t digits = 1000, rcount = 1;
    add_common(random, false);
    random->add_option("--seed", seed, "first seed");
    random->add_option("--digits", digits, "decimal digits")->check(CLI::PositiveNumber);
    random->add_option("--count", rcount, "how many consecutive seeds")
        ->check(CLI::PositiveNumber);

    auto* kc = app.add_subcommand("kc", "truncated-model geometric-mean limit KC(maxn)");
    std::uint64_t kc_maxn = 0;
    double kc_tol = 0.0;
    kc->add_option("--maxn", kc_maxn, "truncation point");
    kc->add_option("--tolerance", kc_tol, "refine until a doubling moves less than this");

    auto* repro = app.add_subcommand("reproduce", "recompute a published table plus a diff");
    int table = 0;
    std::string out_dir;
    repro->add_option("--table", table, "table number 1..7")->required()->check(CLI::Range(1, 7));
    repro->add_option("--out", out_dir, "output directory")->required();

    std::vector<const char*> argv;
    argv.push_back("cfk");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (expand->parsed()) {
            apply_config(o, expand);
            return cmd_expand(o, ilo, ihi, out);
        }
        if (analyze->parsed()) {
            apply_config(o, analyze);
            return cmd_analyze(o, out);
        }
        if (speed->parsed()) {
            apply_config(o, speed);
            return cmd_speed(o, count, metric_names, boundaries, out);
        }
        if (rn->parsed()) {
            apply_config(o, rn);
            return cmd_rn(o, from, to, out);
        }
        if (random->parsed()) {
            apply_config(o, random);
            return cmd_random(o, seed, digits, rcount, out);
        }
        if (kc->parsed()) {
            if ((kc_maxn == 0) == (kc_tol == 0.0))
                fail(Errc::invalid_input, "kc needs exactly one of --maxn or --tolerance");
            double v = kc_maxn ? kc_value(Int(std::to_string(kc_maxn))) : khinchin_constant(kc_tol);
            out << fmt_fixed(v, 6) << "\n";
            return 0;
        }
        if (repro->parsed()) return reproduce_tables(table, out_dir, err);
        return 1;
    } catch (const Error& e) {
        err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return e.code() == Errc::invalid_input ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cfk::cli
