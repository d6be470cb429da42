#include "wgcalc/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace wgcalc {

PolynomialInD::PolynomialInD(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

PolynomialInD PolynomialInD::variable() {
    PolynomialInD p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

PolynomialInD PolynomialInD::from_coeffs(std::vector<Rational> ascending) {
    PolynomialInD p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

PolynomialInD PolynomialInD::from_roots(const std::vector<Rational>& roots) {
    PolynomialInD p(Rational(1));
    for (const Rational& r : roots) {
        PolynomialInD lin = from_coeffs({-r, Rational(1)});
        p = p * lin;
    }
    return p;
}

void PolynomialInD::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational PolynomialInD::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

Rational PolynomialInD::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolynomialInD& PolynomialInD::operator+=(const PolynomialInD& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolynomialInD& PolynomialInD::operator-=(const PolynomialInD& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolynomialInD operator*(const PolynomialInD& a, const PolynomialInD& b) {
    if (a.is_zero() || b.is_zero()) return PolynomialInD();
    PolynomialInD p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    p.trim();
    return p;
}

PolynomialInD operator-(const PolynomialInD& a) {
    PolynomialInD p = a;
    for (auto& c : p.c_) c = -c;
    return p;
}

PolynomialInD PolynomialInD::operator*(const Rational& s) const {
    if (s.is_zero()) return PolynomialInD();
    PolynomialInD p = *this;
    for (auto& c : p.c_) c *= s;
    return p;
}

std::pair<PolynomialInD, PolynomialInD> PolynomialInD::divmod(const PolynomialInD& a,
                                                              const PolynomialInD& b) {
    if (b.is_zero()) throw std::domain_error("PolynomialInD: division by zero polynomial");
    PolynomialInD q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational factor = r.leading() / b.leading();
        std::vector<Rational> mono(static_cast<size_t>(shift) + 1, Rational(0));
        mono.back() = factor;
        PolynomialInD m = from_coeffs(mono);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

PolynomialInD PolynomialInD::divexact(const PolynomialInD& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw std::domain_error("PolynomialInD: inexact division");
    return q;
}

PolynomialInD PolynomialInD::gcd(PolynomialInD a, PolynomialInD b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolynomialInD PolynomialInD::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

int PolynomialInD::root_multiplicity(const Rational& x) const {
    if (is_zero()) return 0;
    int mult = 0;
    PolynomialInD p = *this;
    PolynomialInD lin = from_coeffs({-x, Rational(1)});
    while (!p.is_zero() && p.eval(x).is_zero()) {
        p = p.divexact(lin);
        mult++;
    }
    return mult;
}

std::string PolynomialInD::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        bool needs_coeff = (i == 0) || a != Rational(1);
        if (needs_coeff) os << a.to_string();
        if (i > 0) {
            if (needs_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RationalFunctionInD::RationalFunctionInD(PolynomialInD num, PolynomialInD den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunctionInD: zero denominator");
    reduce();
}

void RationalFunctionInD::reduce() {
    if (num_.is_zero()) {
        den_ = PolynomialInD(Rational(1));
        return;
    }
    PolynomialInD g = PolynomialInD::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rational lc = den_.leading();
    if (lc != Rational(1)) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational RationalFunctionInD::eval(const Rational& x) const {
    Rational dv = den_.eval(x);
    if (dv.is_zero()) throw std::domain_error("RationalFunctionInD: evaluation at a pole");
    return num_.eval(x) / dv;
}

RationalFunctionInD& RationalFunctionInD::operator+=(const RationalFunctionInD& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunctionInD& RationalFunctionInD::operator-=(const RationalFunctionInD& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunctionInD& RationalFunctionInD::operator*=(const RationalFunctionInD& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunctionInD& RationalFunctionInD::operator/=(const RationalFunctionInD& o) {
    if (o.is_zero()) throw std::domain_error("RationalFunctionInD: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

RationalFunctionInD operator-(const RationalFunctionInD& a) {
    RationalFunctionInD r = a;
    r.num_ = -r.num_;
    return r;
}

std::vector<std::pair<int, Rational>> RationalFunctionInD::laurent_at_infinity(int t_max) const {
    std::vector<std::pair<int, Rational>> out;
    if (is_zero()) return out;
    int dn = num_.degree(), dd = den_.degree();
    int t_min = dd - dn;
    if (t_max < t_min) return out;
    // Substitute d = 1/x: f = x^{t_min} * (num_rev / den_rev) with den_rev(0) ≠ 0.
    auto reversed = [](const PolynomialInD& p) {
        std::vector<Rational> cs;
        for (int i = p.degree(); i >= 0; --i) cs.push_back(p.coeff(i));
        return cs;
    };
    std::vector<Rational> nr = reversed(num_), dr = reversed(den_);
    int terms = t_max - t_min + 1;
    std::vector<Rational> series(static_cast<size_t>(terms), Rational(0));
    // series = nr / dr as power series in x
    for (int i = 0; i < terms; ++i) {
        Rational acc = i < static_cast<int>(nr.size()) ? nr[static_cast<size_t>(i)] : Rational(0);
        for (int j = 1; j <= i && j < static_cast<int>(dr.size()); ++j)
            acc -= dr[static_cast<size_t>(j)] * series[static_cast<size_t>(i - j)];
        series[static_cast<size_t>(i)] = acc / dr[0];
    }
    for (int i = 0; i < terms; ++i)
        out.emplace_back(t_min + i, series[static_cast<size_t>(i)]);
    return out;
}

std::pair<int, Rational> RationalFunctionInD::leading_at_infinity() const {
    if (is_zero()) throw std::domain_error("RationalFunctionInD: zero has no leading term");
    return {den_.degree() - num_.degree(), num_.leading() / den_.leading()};
}

std::string RationalFunctionInD::to_string(const std::string& var) const {
    if (den_ == PolynomialInD(Rational(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace wgcalc
