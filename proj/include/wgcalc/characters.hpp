#pragma once

#include <vector>

#include "wgcalc/group_algebra.hpp"
#include "wgcalc/partition.hpp"
#include "wgcalc/polynomial.hpp"

namespace wgcalc {

/// Full character table of S_k. Rows and columns are indexed by partitions_of(k)
/// in canonical order: chi[i][j] = χ_{λ_i}(μ_j).
struct CharacterTable {
    int k = 0;
    std::vector<Partition> classes;
    std::vector<std::vector<long>> chi;

    int index_of(const Partition& mu) const;
    long value(const Partition& lambda, const Partition& mu) const;
};

/// Cached per k; population is idempotent and guarded, so concurrent readers
/// are fine. Bound: k ≤ 12.
const CharacterTable& character_table(int k);

/// χ_λ(μ) by the Murnaghan–Nakayama border-strip recursion on the largest
/// part of μ.
long character(const Partition& lambda, const Partition& mu);

/// Hook formula: χ_λ(1) = k!/Π h_u.
Integer dim_irrep(const Partition& lambda);

/// Hook-content formula: s_λ(d) = Π (d+c_u)/h_u. Zero iff ht(λ) > d.
Rational schur_dim(const Partition& lambda, long d);

/// r_λ(d) = Π (d + c_u), the scalar by which P acts on M_λ.
PolynomialInD r_lambda_poly(const Partition& lambda);
Rational r_lambda_at(const Partition& lambda, const Rational& d);

/// e_λ = (χ_λ(1)/k!) Σ_σ χ_λ(σ)σ. Bound: k ≤ 8.
GroupAlgebraElement<Rational> central_idempotent(const Partition& lambda);

}  // namespace wgcalc
