#pragma once

#include <string>

#include "cfk/algebraic.hpp"
#include "json.hpp"

namespace cfk {

/// A parsed CLI number spec: the certified algebraic number plus a stable id
/// used in report rows ("2^(1/3)", "x^2-x-1[1..2]").
struct NumberSpec {
    std::string id;
    AlgebraicNumber number;
    nlohmann::json raw;
};

/// x^degree - radicand with a computed bracketing interval. |radicand| >= 2;
/// negative radicands need odd degree. Perfect powers are rejected as
/// rational.
NumberSpec make_nthroot(const Int& radicand, unsigned degree);

/// Parse {"kind":"nthroot","radicand":R,"degree":D} or
/// {"kind":"poly","coeffs":[c0,...,cd],"interval":[lo,hi]} with lo,hi decimal
/// strings parsed exactly. Non-squarefree polynomials are replaced by their
/// squarefree part (same roots).
NumberSpec parse_number_spec(const nlohmann::json& spec);
NumberSpec parse_number_spec(const std::string& text);

} // namespace cfk
