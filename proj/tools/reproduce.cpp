// The `reproduce` subcommand: recompute one bundled reference table from
// scratch and write both the fresh table and a diff against the bundled
// values. Reference data is read-only; diffs are separate artifacts.

#include <cmath>
#include <filesystem>

#include "cfk/numberspec.hpp"
#include "cfk/randsrc.hpp"
#include "cfk/speed.hpp"
#include "cfk/stats.hpp"
#include "cli.hpp"
#include "cli_util.hpp"
#include "reference_tables.hpp"

namespace cfk::cli {

namespace {

struct DiffRow {
    std::string label;
    std::string field;
    double published;
    double computed;
    std::string note;

    std::string csv() const {
        std::ostringstream os;
        os << label << ',' << field << ',' << fmt_fixed(published, 4) << ','
           << fmt_fixed(computed, 4) << ',' << fmt_fixed(std::abs(published - computed), 4)
           << ',' << note;
        return os.str();
    }
};

constexpr const char* kDiffHeader = "label,field,published,computed,abs_diff,note";

NumberSpec root_spec(long radicand, unsigned degree) {
    return make_nthroot(Int(radicand), degree);
}

MetaList meta_for(int table) {
    MetaList m;
    m.emplace_back("tool", kToolVersion);
    m.emplace_back("generator", generator_version());
    m.emplace_back("table", std::to_string(table));
    return m;
}

void write_pair(const std::filesystem::path& dir, int table, const MetaList& meta,
                const std::string& header, const std::vector<std::string>& rows,
                const std::vector<DiffRow>& diffs) {
    std::filesystem::create_directories(dir);
    auto computed = dir / ("computed_table" + std::to_string(table) + ".csv");
    auto diff = dir / ("diff_table" + std::to_string(table) + ".csv");
    std::vector<std::string> drows;
    drows.reserve(diffs.size());
    for (const auto& d : diffs) drows.push_back(d.csv());
    std::ofstream(computed, std::ios::binary) << csv_artifact(meta, header, rows);
    std::ofstream(diff, std::ios::binary) << csv_artifact(meta, kDiffHeader, drows);
}

int table1(const std::filesystem::path& dir) {
    auto rows_data = map_concurrently<std::array<double, 4>>(ref::table1.size(), [](std::size_t i) {
        long radicands[] = {2, 3, 4, 5, 7};
        auto spec = root_spec(radicands[i], 3);
        CFExpansion cf = cf_expand(spec.number, 3001);
        std::array<double, 4> out{};
        auto at = [&](std::size_t n, std::size_t slot) {
            auto emp = empirical_dist(cf, n);
            auto r = chi_square(emp, GkModel::standard(), Binning::default_binning());
            out[slot] = r.statistic;
            out[slot + 1] = r.p_value;
        };
        at(1000, 0);
        at(3000, 2);
        return out;
    });
    MetaList meta = meta_for(1);
    meta.emplace_back("binning", "assumed: cells k=1..9 plus tail k>=10 (df=9); "
                                 "the published binning is not stated");
    std::vector<std::string> rows;
    std::vector<DiffRow> diffs;
    for (std::size_t i = 0; i < ref::table1.size(); ++i) {
        const auto& r = ref::table1[i];
        const auto& c = rows_data[i];
        std::ostringstream os;
        os << r.number << ',' << fmt_fixed(c[0], 2) << ',' << fmt_fixed(c[1], 2) << ','
           << fmt_fixed(c[2], 2) << ',' << fmt_fixed(c[3], 2);
        rows.push_back(os.str());
        diffs.push_back({r.number, "chi2_1000", r.chi2_1000, c[0], "binning assumed"});
        diffs.push_back({r.number, "p_1000", r.p_1000, c[1], "binning assumed"});
        diffs.push_back({r.number, "chi2_3000", r.chi2_3000, c[2], "binning assumed"});
        diffs.push_back({r.number, "p_3000", r.p_3000, c[3], "binning assumed"});
    }
    write_pair(dir, 1, meta, "number,chi2_1000,p_1000,chi2_3000,p_3000", rows, diffs);
    return 0;
}

int table23(const std::filesystem::path& dir, int table) {
    const auto& ref_rows = table == 2 ? ref::table2 : ref::table3;
    auto vals = map_concurrently<double>(6, [&](std::size_t i) {
        auto spec = root_spec(2, static_cast<unsigned>(i + 3));
        CFExpansion cf = cf_expand(spec.number, 1001);
        auto emp = empirical_dist(cf, 1000);
        GkModel model = table == 2 ? GkModel::standard() : GkModel::truncated(emp.maxn);
        return kld(emp, model, LogBase::natural);
    });
    MetaList meta = meta_for(table);
    meta.emplace_back("kld_log_base", "e");
    meta.emplace_back("model", table == 2 ? "standard" : "truncated at observed maxn");
    std::vector<std::string> rows;
    std::vector<DiffRow> diffs;
    for (std::size_t i = 0; i < 6; ++i) {
        rows.push_back(std::string(ref_rows[i].number) + "," + fmt_fixed(vals[i], 4));
        diffs.push_back({ref_rows[i].number, "kld", ref_rows[i].kld, vals[i], ""});
    }
    write_pair(dir, table, meta, "number,kld", rows, diffs);
    return 0;
}

int table4(const std::filesystem::path& dir) {
    auto gms = map_concurrently<double>(7, [](std::size_t i) {
        if (i == 0) return kc_value(Int(1000000)); // the random-number row
        auto spec = root_spec(3, static_cast<unsigned>(i + 2));
        CFExpansion cf = cf_expand(spec.number, 10001);
        return geometric_mean_series(cf, {10000})[0];
    });
    MetaList meta = meta_for(4);
    meta.emplace_back("n", "10000");
    meta.emplace_back("random_row", "KC(10^6), the truncated-model limit");
    std::vector<std::string> rows;
    std::vector<DiffRow> diffs;
    for (std::size_t i = 0; i < 7; ++i) {
        rows.push_back(std::string(ref::table4[i].number) + "," + fmt_fixed(gms[i], 3));
        diffs.push_back({ref::table4[i].number, "gm", ref::table4[i].gm, gms[i], ""});
    }
    write_pair(dir, 4, meta, "number,gmean", rows, diffs);
    return 0;
}

int table5(const std::filesystem::path& dir) {
    auto spec = root_spec(2, 3);
    auto reports = map_concurrently<SpeedBucketReport>(2, [&](std::size_t i) {
        SpeedMetric m = i == 0 ? SpeedMetric::khinchin : SpeedMetric::newspeed;
        return speed_buckets(spec.number, 3000, m, default_boundaries(), LogBase::natural);
    });
    MetaList meta = meta_for(5);
    meta.emplace_back("number", "2^(1/3)");
    meta.emplace_back("count", "3000");
    meta.emplace_back("log_base", "e");
    std::vector<std::string> rows;
    std::vector<DiffRow> diffs;
    for (std::size_t b = 0; b < 6; ++b) {
        std::ostringstream os;
        os << ref::table5_ranges[b] << ',' << reports[0].counts[b] << ','
           << reports[1].counts[b];
        rows.push_back(os.str());
        diffs.push_back({ref::table5_ranges[b], "khinchin", double(ref::table5_khinchin[b]),
                         double(reports[0].counts[b]), ""});
        diffs.push_back({ref::table5_ranges[b], "newspeed", double(ref::table5_newspeed[b]),
                         double(reports[1].counts[b]), ""});
    }
    write_pair(dir, 5, meta, "range,khinchin,newspeed", rows, diffs);
    return 0;
}

int table67(const std::filesystem::path& dir, int table) {
    const auto& ref_rows = table == 6 ? ref::table6 : ref::table7;
    const std::size_t lo = table == 6 ? 1 : 1000;
    const std::size_t hi = table == 6 ? 1000 : 3000;
    auto ks = map_concurrently<KOfA>(4, [&](std::size_t i) {
        long radicands[] = {2, 3, 4, 5};
        auto spec = root_spec(radicands[i], 3);
        CFExpansion cf = cf_expand(spec.number, hi + 1);
        return k_of_a(cf, lo, hi);
    });
    MetaList meta = meta_for(table);
    meta.emplace_back("range", std::to_string(lo) + ".." + std::to_string(hi));
    meta.emplace_back("positions", "coefficient stream 1-indexed from the integer part");
    meta.emplace_back("rn_column", "published companion value; definition not stated, "
                                   "not recomputed");
    std::vector<std::string> rows;
    std::vector<DiffRow> diffs;
    for (std::size_t i = 0; i < 4; ++i) {
        std::ostringstream os;
        os << ref_rows[i].number << ',' << fmt_fixed(ks[i].k, 3) << ',' << ks[i].argmax;
        rows.push_back(os.str());
        diffs.push_back({ref_rows[i].number, "K", ref_rows[i].k, ks[i].k, ""});
        diffs.push_back({ref_rows[i].number, "argmax", double(ref_rows[i].argmax),
                         double(ks[i].argmax), "exact match expected"});
        diffs.push_back({ref_rows[i].number, "r(n)", ref_rows[i].rn,
                         std::nan(""), "definition not stated; not recomputed"});
    }
    write_pair(dir, table, meta, "number,k,argmax", rows, diffs);
    return 0;
}

} // namespace

int reproduce_tables(int table, const std::string& out_dir, std::ostream& err) {
    std::filesystem::path dir(out_dir);
    try {
        switch (table) {
        case 1: return table1(dir);
        case 2: return table23(dir, 2);
        case 3: return table23(dir, 3);
        case 4: return table4(dir);
        case 5: return table5(dir);
        case 6: return table67(dir, 6);
        case 7: return table67(dir, 7);
        }
        return 1;
    } catch (const Error& e) {
        err << "reproduce failed (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return 2;
    }
}

} // namespace cfk::cli
