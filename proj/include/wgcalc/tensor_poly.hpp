#pragma once

#include <map>
#include <vector>

#include "wgcalc/tensor_ops.hpp"

namespace wgcalc {

/// Dense d×d matrix over exact rationals.
class RatMatrix {
public:
    explicit RatMatrix(int d) : d_(d), a_(static_cast<size_t>(d * d), Rational(0)) {}

    static RatMatrix identity(int d);
    /// e_{rc} with 0-based r, c.
    static RatMatrix elementary(int d, int r, int c);

    int dim() const { return d_; }
    Rational& at(int r, int c) { return a_[static_cast<size_t>(r * d_ + c)]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r * d_ + c)]; }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix scaled(const Rational& s) const;
    Rational trace() const;
    bool is_zero() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    int d_;
    std::vector<Rational> a_;
};

using MatrixTuple = std::vector<RatMatrix>;

/// e_{1,1}, e_{1,2}, ..., e_{d,d} in lexicographic order.
MatrixTuple elementary_tuple(int d);

/// Multilinear k-tensor-valued polynomial in n matrix variables: a sum of
/// terms coeff · w_1 ⊗ … ⊗ w_k where each w_s is a word in the variables
/// (0-based ids; the empty word is the identity matrix).
class TensorMonomialPolynomial {
public:
    using Words = std::vector<std::vector<int>>;

    TensorMonomialPolynomial(int k, int n) : k_(k), n_(n) {}

    int tensor_degree() const { return k_; }
    int variable_count() const { return n_; }
    const std::map<Words, Rational>& terms() const { return terms_; }

    void add_term(const Rational& coeff, Words words);

private:
    int k_, n_;
    std::map<Words, Rational> terms_;
};

TensorOperator evaluate(const TensorMonomialPolynomial& p, const MatrixTuple& x);

/// Σ_σ ε_σ p(x_{σ(·)}) over permutations of the listed variables. Requires p
/// multilinear in them (each term uses each listed variable exactly once).
/// No 1/m! normalization.
TensorMonomialPolynomial alternate(const TensorMonomialPolynomial& p, const std::vector<int>& vars);

/// T_{2i−1}(Y) = tr Σ_σ ε_σ Y_{σ(1)}…Y_{σ(2i−1)}; arity must be 2i−1.
Rational t_odd(int i, const MatrixTuple& y);

/// 𝒯_d(Y_1..Y_{d²}) = T_1 ∧ T_3 ∧ … ∧ T_{2d−1}, realized as the alternation
/// of the blockwise product with the multinomial normalization folded in.
Rational script_t_d(int d, const MatrixTuple& y);

/// |𝒞_d| = 1!3!…(2d−1)! / (1!2!…(d−1)!).
Integer c_d_magnitude(int d);
/// 𝒯_d at the elementary tuple; equals ±|𝒞_d| (the sign is computed, not assumed).
Rational c_d_computed(int d);

/// G_d(Y) = Alt_Y(m_1(Y) ⊗ … ⊗ m_d(Y)) with m_i(Y) = Y_{(i−1)²+1}…Y_{i²}.
/// Bound: d ≤ 3.
TensorOperator g_d(int d, const MatrixTuple& y);

struct ForgzReport {
    int d = 0;
    Rational script_t;        // 𝒯_d at the elementary tuple
    bool operator_identity = false;  // G_d = 𝒯_d(Y)·Wg(d,d) as operators
    bool phi_identity = false;       // Φ(G_d) = 𝒯_d(Y)·1 (both branches of the dichotomy)
    bool ok() const { return operator_identity && phi_identity; }
};

ForgzReport verify_forgz(int d);

struct FormanekReport {
    int d = 0;
    Rational coefficient;       // (−1)^{d−1} / ((d!)²(2d−1))
    Rational script_t_x, script_t_y;
    Rational scalar;            // coefficient · 𝒯_d(X) · 𝒯_d(Y)
    // Alt_X Alt_Y ⊗ m_i(X)m_i(Y) = 𝒯_d(X)𝒯_d(Y)·Wg(d,d)² as operators
    // (the forgz identity applied to each alternation in turn)
    bool tensor_identity = false;
    bool matrix_identity = false;      // the concatenated matrix product form = scalar·Id_d
    bool trace_identity = false;       // both traces equal d·scalar
    bool full_cycle_consistency = false;  // coefficient = Wg(d,(d))/d
    bool ok() const {
        return tensor_identity && matrix_identity && trace_identity && full_cycle_consistency;
    }
};

/// Evaluates the Formanek central polynomial at elementary tuples. Bound: d ≤ 3.
FormanekReport formanek_verify(int d);

}  // namespace wgcalc
