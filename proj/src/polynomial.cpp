#include "cfk/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cfk {

IntegerPolynomial::IntegerPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    if (c_.empty()) fail(Errc::invalid_input, "zero polynomial");
}

IntegerPolynomial IntegerPolynomial::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return IntegerPolynomial(std::move(v));
}

Int IntegerPolynomial::value_at(const Int& x) const {
    Int acc = c_.back();
    for (int i = degree() - 1; i >= 0; --i) {
        acc *= x;
        acc += c_[static_cast<std::size_t>(i)];
    }
    return acc;
}

int IntegerPolynomial::sign_at(const Int& x) const { return sgn(value_at(x)); }

int IntegerPolynomial::sign_at(const Rat& x) const {
    // Homogeneous Horner: acc = sum c_i p^i q^(d-i). mpq keeps q > 0, so the
    // accumulated sign equals the sign of P(x).
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    Int acc = c_.back();
    Int qpow = 1;
    for (int i = degree() - 1; i >= 0; --i) {
        qpow *= q;
        acc *= p;
        acc += c_[static_cast<std::size_t>(i)] * qpow;
    }
    return sgn(acc);
}

IntegerPolynomial IntegerPolynomial::derivative() const {
    if (degree() == 0) fail(Errc::invalid_input, "derivative of constant is zero");
    std::vector<Int> d(static_cast<std::size_t>(degree()));
    for (int i = 1; i <= degree(); ++i)
        d[static_cast<std::size_t>(i - 1)] = c_[static_cast<std::size_t>(i)] * i;
    return IntegerPolynomial(std::move(d));
}

Int IntegerPolynomial::content() const {
    Int g = 0;
    for (const Int& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntegerPolynomial IntegerPolynomial::normalized() const {
    Int g = content();
    if (sgn(c_.back()) < 0) g = -g;
    if (g == 1) return *this;
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::taylor_shift(const Int& m) const {
    std::vector<Int> v = c_;
    const int d = degree();
    const bool small = m.fits_slong_p();
    const long ms = small ? m.get_si() : 0;
    for (int i = 0; i < d; ++i) {
        for (int j = d - 1; j >= i; --j) {
            auto& vj = v[static_cast<std::size_t>(j)];
            const auto& vj1 = v[static_cast<std::size_t>(j + 1)];
            if (small) {
                if (ms >= 0)
                    mpz_addmul_ui(vj.get_mpz_t(), vj1.get_mpz_t(), static_cast<unsigned long>(ms));
                else
                    mpz_submul_ui(vj.get_mpz_t(), vj1.get_mpz_t(), static_cast<unsigned long>(-ms));
            } else {
                mpz_addmul(vj.get_mpz_t(), vj1.get_mpz_t(), m.get_mpz_t());
            }
        }
    }
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::reversed() const {
    std::vector<Int> v(c_.rbegin(), c_.rend());
    return IntegerPolynomial(std::move(v)); // ctor strips a vanished leader
}

int IntegerPolynomial::sign_variations() const {
    int count = 0, last = 0;
    for (const Int& x : c_) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

namespace {

std::vector<Rat> to_rat(const IntegerPolynomial& p) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const Int& x : p.coeffs()) v.emplace_back(x);
    return v;
}

// Rational-coefficient remainder of a by b. Empty result means zero.
std::vector<Rat> rat_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size()) {
        Rat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

// Rescale rational coefficients by a positive factor into a primitive integer
// polynomial. Sign pattern is preserved (the factor is positive).
IntegerPolynomial to_primitive(const std::vector<Rat>& a) {
    Int l = 1;
    for (const Rat& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat s = a[i] * Rat(l);
        v[i] = s.get_num();
    }
    IntegerPolynomial p(std::move(v));
    Int g = p.content();
    if (g == 1) return p;
    std::vector<Int> w(p.coeffs().size());
    for (std::size_t i = 0; i < w.size(); ++i)
        mpz_divexact(w[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
    return IntegerPolynomial(std::move(w));
}

} // namespace

IntegerPolynomial IntegerPolynomial::divide_exact(const IntegerPolynomial& divisor) const {
    if (divisor.degree() > degree()) fail(Errc::invalid_input, "division degree mismatch");
    std::vector<Rat> rem = to_rat(*this);
    std::vector<Rat> quo(static_cast<std::size_t>(degree() - divisor.degree()) + 1);
    const std::vector<Rat> b = to_rat(divisor);
    while (rem.size() >= b.size()) {
        Rat q = rem.back() / b.back();
        std::size_t off = rem.size() - b.size();
        quo[off] += q;
        for (std::size_t i = 0; i < b.size(); ++i) rem[off + i] -= q * b[i];
        while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
        if (rem.empty()) break;
    }
    if (!rem.empty()) fail(Errc::invalid_input, "inexact polynomial division");
    std::vector<Int> v(quo.size());
    for (std::size_t i = 0; i < quo.size(); ++i) {
        if (!is_integer(quo[i])) fail(Errc::invalid_input, "inexact polynomial division");
        v[i] = quo[i].get_num();
    }
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::gcd(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<Rat> x = to_rat(a), y = to_rat(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<Rat> r = rat_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return to_primitive(x).normalized(); // primitive with positive leader
}

bool IntegerPolynomial::is_squarefree() const {
    if (degree() <= 1) return true;
    return gcd(*this, derivative()).degree() == 0;
}

std::string IntegerPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = c_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        Int a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? "-" : "+");
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntegerPolynomial squarefree_part(const IntegerPolynomial& poly) {
    if (poly.degree() == 0) fail(Errc::invalid_input, "squarefree part of a constant");
    IntegerPolynomial g = IntegerPolynomial::gcd(poly, poly.derivative());
    if (g.degree() == 0) return poly.normalized();
    return poly.normalized().divide_exact(g.normalized()).normalized();
}

namespace {

// Sturm chain with each member rescaled by positive factors only, so the
// variation count matches the rational chain.
std::vector<IntegerPolynomial> sturm_chain(const IntegerPolynomial& p) {
    std::vector<IntegerPolynomial> chain;
    chain.push_back(p);
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative());
    while (chain.back().degree() > 0) {
        std::vector<Rat> r = rat_rem(to_rat(chain[chain.size() - 2]), to_rat(chain.back()));
        if (r.empty()) break;
        for (Rat& x : r) x = -x;
        chain.push_back(to_primitive(r));
    }
    return chain;
}

int variations_at(const std::vector<IntegerPolynomial>& chain, const Rat& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

} // namespace

int sturm_root_count(const IntegerPolynomial& poly, const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) fail(Errc::invalid_input, "empty interval for root counting");
    if (poly.sign_at(lo) == 0)
        fail(Errc::invalid_input, "root count undefined: polynomial vanishes at lower endpoint");
    auto chain = sturm_chain(poly);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

} // namespace cfk
