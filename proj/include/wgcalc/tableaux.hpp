#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "wgcalc/group_algebra.hpp"
#include "wgcalc/partition.hpp"
#include "wgcalc/permutation.hpp"

namespace wgcalc {

/// Standard Young tableau: 1..n placed strictly increasing along rows and
/// columns of a Young diagram.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// 1-based (row, col) of a value.
    std::pair<int, int> position_of(int value) const;

    std::string to_string() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
    friend std::strong_ordering operator<=>(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

/// All SYT of the given shape; the count equals dim M_λ. Bound: |λ| ≤ 12.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// Row-insertion RSK for a word (letters are ints, repeats allowed):
/// P has weakly increasing rows / strictly increasing columns, Q is standard.
struct WordRsk {
    std::vector<std::vector<int>> p_rows;
    StandardTableau q;
    Partition shape() const { return q.shape(); }
};

WordRsk rsk_word(const std::vector<int>& word);

/// Row-insertion RSK for permutations; both tableaux standard, equal shapes.
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& sigma);

/// Inverse correspondence; throws if the shapes differ.
Permutation rsk_inverse(const StandardTableau& p, const StandardTableau& q);

/// Length of the longest strictly decreasing subsequence (= height of the
/// RSK shape, by Schensted's theorem).
int longest_decreasing(const Permutation& sigma);

/// d-good: no decreasing subsequence of length d.
bool is_d_good(const Permutation& sigma, int d);

/// Rewrites a as an equal operator on V^{⊗k} (dim V = d) supported on
/// (d+1)-good permutations, by repeatedly annihilating antisymmetrizers on
/// d+1 descending values of the lexicographically largest bad term. Integer
/// combinations stay integer.
GroupAlgebraElement<Rational> straighten(const GroupAlgebraElement<Rational>& a, int d);

/// c_T(i) = content of the box holding i, i = 1..n.
std::vector<int> content_vector(const StandardTableau& t);

/// Rebuilds the tableau (box for each i is the first free box on its
/// diagonal); throws on inconsistent input.
StandardTableau tableau_from_contents(const std::vector<int>& contents);

}  // namespace wgcalc
