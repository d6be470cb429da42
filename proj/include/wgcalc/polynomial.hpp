#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wgcalc/rational.hpp"

namespace wgcalc {

/// Polynomial in the dimension symbol d, with exact rational coefficients.
/// Coefficients ascending; no trailing zero coefficients stored.
class PolynomialInD {
public:
    PolynomialInD() = default;  // zero
    PolynomialInD(const Rational& c);
    PolynomialInD(int c) : PolynomialInD(Rational(c)) {}
    static PolynomialInD variable();  // d
    static PolynomialInD from_coeffs(std::vector<Rational> ascending);
    /// Π over roots of (d − root).
    static PolynomialInD from_roots(const std::vector<Rational>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational eval(const Rational& x) const;

    PolynomialInD& operator+=(const PolynomialInD& o);
    PolynomialInD& operator-=(const PolynomialInD& o);
    friend PolynomialInD operator+(PolynomialInD a, const PolynomialInD& b) { return a += b; }
    friend PolynomialInD operator-(PolynomialInD a, const PolynomialInD& b) { return a -= b; }
    friend PolynomialInD operator*(const PolynomialInD& a, const PolynomialInD& b);
    friend PolynomialInD operator-(const PolynomialInD& a);
    PolynomialInD operator*(const Rational& s) const;

    friend bool operator==(const PolynomialInD&, const PolynomialInD&) = default;

    static std::pair<PolynomialInD, PolynomialInD> divmod(const PolynomialInD& a,
                                                          const PolynomialInD& b);
    /// Exact quotient; throws if the division leaves a remainder.
    PolynomialInD divexact(const PolynomialInD& b) const;
    /// Monic gcd (1 for coprime inputs, 0 only if both are 0).
    static PolynomialInD gcd(PolynomialInD a, PolynomialInD b);
    PolynomialInD monic() const;

    /// Multiplicity of the root x (0 when p(x) ≠ 0).
    int root_multiplicity(const Rational& x) const;

    std::string to_string(const std::string& var = "d") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient of two PolynomialInD, kept reduced with monic denominator.
/// Zero is represented as 0/1, so equality is componentwise.
class RationalFunctionInD {
public:
    RationalFunctionInD() : num_(), den_(Rational(1)) {}
    RationalFunctionInD(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunctionInD(int c) : RationalFunctionInD(Rational(c)) {}
    RationalFunctionInD(const PolynomialInD& p) : num_(p), den_(Rational(1)) {}
    RationalFunctionInD(PolynomialInD num, PolynomialInD den);

    const PolynomialInD& num() const { return num_; }
    const PolynomialInD& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational eval(const Rational& x) const;  // throws at a pole

    RationalFunctionInD& operator+=(const RationalFunctionInD& o);
    RationalFunctionInD& operator-=(const RationalFunctionInD& o);
    RationalFunctionInD& operator*=(const RationalFunctionInD& o);
    RationalFunctionInD& operator/=(const RationalFunctionInD& o);
    friend RationalFunctionInD operator+(RationalFunctionInD a, const RationalFunctionInD& b) { return a += b; }
    friend RationalFunctionInD operator-(RationalFunctionInD a, const RationalFunctionInD& b) { return a -= b; }
    friend RationalFunctionInD operator*(RationalFunctionInD a, const RationalFunctionInD& b) { return a *= b; }
    friend RationalFunctionInD operator/(RationalFunctionInD a, const RationalFunctionInD& b) { return a /= b; }
    friend RationalFunctionInD operator-(const RationalFunctionInD& a);

    friend bool operator==(const RationalFunctionInD&, const RationalFunctionInD&) = default;

    /// Laurent expansion at d = ∞: returns coefficients c_t of d^{−t} for
    /// t = t_min .. t_max where t_min = deg(den) − deg(num). Zero function
    /// gives an empty list.
    std::vector<std::pair<int, Rational>> laurent_at_infinity(int t_max) const;
    /// Leading behaviour at infinity: (t, c) with f ~ c·d^{−t}.
    std::pair<int, Rational> leading_at_infinity() const;

    std::string to_string(const std::string& var = "d") const;

private:
    void reduce();
    PolynomialInD num_, den_;
};

}  // namespace wgcalc
