#pragma once

// Internal helpers shared by the CLI subcommands: artifact metadata,
// deterministic formatting, CSV/JSON writers.

#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cfk/error.hpp"
#include "json.hpp"

namespace cfk::cli {

/// Independent numbers run concurrently; results are collected in input
/// order by a single caller, so output stays deterministic.
template <typename R, typename F>
std::vector<R> map_concurrently(std::size_t count, F&& fn) {
    std::vector<std::future<R>> futs;
    futs.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        futs.push_back(std::async(std::launch::async, fn, i));
    std::vector<R> out;
    out.reserve(count);
    for (auto& f : futs) out.push_back(f.get());
    return out;
}

using MetaList = std::vector<std::pair<std::string, std::string>>;

inline std::string fmt_fixed(double v, int prec) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os << std::setprecision(prec) << v;
    return os.str();
}

/// CSV artifact: '#' metadata lines, a header row, data rows. LF endings,
/// dot decimals; reruns with identical metadata are byte-identical.
inline std::string csv_artifact(const MetaList& meta, const std::string& header,
                                const std::vector<std::string>& rows) {
    std::ostringstream os;
    for (const auto& [k, v] : meta) os << "# " << k << ": " << v << "\n";
    os << header << "\n";
    for (const auto& r : rows) os << r << "\n";
    return os.str();
}

inline nlohmann::json json_artifact(const MetaList& meta, nlohmann::json rows) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    return nlohmann::json{{"meta", std::move(m)}, {"rows", std::move(rows)}};
}

/// Write to the path, or to `fallback` when the path is empty.
inline void emit_artifact(const std::string& path, const std::string& content,
                          std::ostream& fallback) {
    if (path.empty()) {
        fallback << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Errc::invalid_input, "cannot open output file: " + path);
    f << content;
}

} // namespace cfk::cli
