#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "wgcalc/group_algebra.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

/// Multi-index into (C^d)^{⊗k}: k entries in 0..d−1.
using MultiIndex = std::vector<int>;

/// Sparse element of End(V)^{⊗k} over exact rationals, dim V = d.
/// entries[(row, col)] with multi-indices encoded base d.
class TensorOperator {
public:
    TensorOperator(int d, int k) : d_(d), k_(k) {}

    static TensorOperator identity(int d, int k);
    /// The action σ·(u_1⊗…⊗u_k) = u_{σ⁻¹(1)}⊗…⊗u_{σ⁻¹(k)} as a matrix.
    static TensorOperator permutation_operator(const Permutation& sigma, int d);
    /// e_{i̲,j̲} = e_{i1,j1}⊗…⊗e_{ik,jk} mapping e_{j̲} to e_{i̲} (0-based indices).
    static TensorOperator elementary(int d, const MultiIndex& i, const MultiIndex& j);

    int dim() const { return d_; }
    int tensor_degree() const { return k_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<std::pair<uint64_t, uint64_t>, Rational>& entries() const { return entries_; }

    uint64_t encode(const MultiIndex& idx) const;
    MultiIndex decode(uint64_t code) const;

    void add_entry(const MultiIndex& row, const MultiIndex& col, const Rational& v);
    void add_entry_coded(uint64_t row, uint64_t col, const Rational& v);
    Rational at(const MultiIndex& row, const MultiIndex& col) const;

    TensorOperator compose(const TensorOperator& other) const;  // this ∘ other
    Rational trace() const;

    TensorOperator& operator+=(const TensorOperator& o);
    TensorOperator& operator-=(const TensorOperator& o);
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
    TensorOperator scaled(const Rational& s) const;

    friend bool operator==(const TensorOperator&, const TensorOperator&) = default;

private:
    int d_, k_;
    std::map<std::pair<uint64_t, uint64_t>, Rational> entries_;
};

/// Φ(A) = Σ_σ tr(A∘σ⁻¹)·σ.
GroupAlgebraElement<Rational> phi_map(const TensorOperator& a);

/// Expands a group-algebra element into the operator it induces on V^{⊗k}.
TensorOperator ga_to_operator(const GroupAlgebraElement<Rational>& a, int d);

struct ProjectionResult {
    GroupAlgebraElement<Rational> element;
    /// Set when d < k: the result represents the projection only as an
    /// operator (its permutation expansion is non-unique).
    bool restricted = false;
};

/// Equivariant projection onto Σ_k(V): E(A) = Wg(d,k)·Φ(A).
ProjectionResult projection_E(const TensorOperator& a);

}  // namespace wgcalc
