#pragma once

#include <stdexcept>
#include <string>

namespace cfk {

enum class Errc {
    invalid_input,
    no_root,
    ambiguous_root,
    rational_number,
    insufficient_expansion,
    support_mismatch,
    domain_error,
    certification_failure,
    degenerate_interval,
};

/// Library-wide exception. The code discriminates failure classes so the
/// CLI can map them onto exit codes (usage vs. certification failures).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::invalid_input: return "invalid-input";
    case Errc::no_root: return "no-root";
    case Errc::ambiguous_root: return "ambiguous-root";
    case Errc::rational_number: return "rational-number";
    case Errc::insufficient_expansion: return "insufficient-expansion";
    case Errc::support_mismatch: return "support-mismatch";
    case Errc::domain_error: return "domain-error";
    case Errc::certification_failure: return "certification-failure";
    case Errc::degenerate_interval: return "degenerate-interval";
    }
    return "unknown";
}

} // namespace cfk
