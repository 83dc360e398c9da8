#include "cfk/numberspec.hpp"

#include <sstream>

namespace cfk {

namespace {

bool is_perfect_power(const Int& radicand, unsigned degree) {
    Int r;
    Int a = abs(radicand);
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), degree);
    return exact != 0;
}

Rat parse_endpoint(const nlohmann::json& v) {
    if (v.is_string()) return parse_decimal(v.get<std::string>());
    if (v.is_number_integer()) return Rat(Int(std::to_string(v.get<long long>())));
    fail(Errc::invalid_input,
         "interval endpoints must be decimal strings (JSON numbers lose exactness)");
}

} // namespace

NumberSpec make_nthroot(const Int& radicand, unsigned degree) {
    if (degree < 2) fail(Errc::invalid_input, "nthroot degree must be >= 2");
    if (abs(radicand) < 2) fail(Errc::invalid_input, "nthroot radicand must satisfy |R| >= 2");
    if (sgn(radicand) < 0 && degree % 2 == 0)
        fail(Errc::invalid_input, "even-degree root of a negative radicand is not real");
    if (is_perfect_power(radicand, degree))
        fail(Errc::rational_number,
             "radicand " + radicand.get_str() + " is a perfect power: the root is rational");

    std::vector<Int> c(degree + 1);
    c[0] = -radicand;
    c[degree] = 1;
    IntegerPolynomial poly(std::move(c));

    RatInterval hint = sgn(radicand) > 0 ? RatInterval(Rat(1), Rat(radicand))
                                         : RatInterval(Rat(radicand), Rat(-1));
    std::ostringstream id;
    if (sgn(radicand) < 0)
        id << "(" << radicand.get_str() << ")";
    else
        id << radicand.get_str();
    id << "^(1/" << degree << ")";

    nlohmann::json raw{{"kind", "nthroot"},
                       {"radicand", radicand.get_str()},
                       {"degree", degree}};
    return NumberSpec{id.str(), AlgebraicNumber::isolate(poly, hint), std::move(raw)};
}

NumberSpec parse_number_spec(const nlohmann::json& spec) {
    if (!spec.is_object() || !spec.contains("kind"))
        fail(Errc::invalid_input, "number spec must be an object with a \"kind\"");
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "nthroot") {
        Int radicand;
        const auto& r = spec.at("radicand");
        if (r.is_string())
            radicand = Int(r.get<std::string>());
        else if (r.is_number_integer())
            radicand = Int(std::to_string(r.get<long long>()));
        else
            fail(Errc::invalid_input, "radicand must be an integer");
        unsigned degree = spec.at("degree").get<unsigned>();
        return make_nthroot(radicand, degree);
    }
    if (kind == "poly") {
        const auto& cj = spec.at("coeffs");
        if (!cj.is_array() || cj.empty()) fail(Errc::invalid_input, "poly coeffs must be an array");
        std::vector<Int> c;
        c.reserve(cj.size());
        for (const auto& x : cj) {
            if (x.is_string())
                c.emplace_back(x.get<std::string>());
            else if (x.is_number_integer())
                c.emplace_back(std::to_string(x.get<long long>()));
            else
                fail(Errc::invalid_input, "poly coefficients must be integers");
        }
        const auto& iv = spec.at("interval");
        if (!iv.is_array() || iv.size() != 2)
            fail(Errc::invalid_input, "interval must be [lo, hi]");
        RatInterval hint(parse_endpoint(iv[0]), parse_endpoint(iv[1]));
        IntegerPolynomial poly(std::move(c));
        IntegerPolynomial sf = squarefree_part(poly);
        std::ostringstream id;
        id << sf.to_string() << "[" << hint.lo.get_str() << ".." << hint.hi.get_str() << "]";
        nlohmann::json raw = spec;
        return NumberSpec{id.str(), AlgebraicNumber::isolate(sf, hint), std::move(raw)};
    }
    fail(Errc::invalid_input, "unknown number spec kind: " + kind);
}

NumberSpec parse_number_spec(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::invalid_input, "number spec is not valid JSON: " + text);
    return parse_number_spec(j);
}

} // namespace cfk
