#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wgcalc/partition.hpp"

namespace wgcalc {

/// Permutation of {1..k} stored in one-line form (0-based images internally).
/// Products compose right to left: (a*b)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;  // degree 0
    explicit Permutation(std::vector<uint8_t> images0);

    static Permutation identity(int k);
    /// Transposition (a b), 1-based.
    static Permutation transposition(int k, int a, int b);
    /// Cycles with 1-based entries, e.g. {{1,3,2}} for (1 3 2).
    static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles);
    /// Parses one-line "3 1 2" or cycle notation "(1 3 2)(4 5)"; k is the
    /// degree (for cycle input it may exceed the largest moved point).
    static Permutation parse(int k, const std::string& s);

    int degree() const { return static_cast<int>(img_.size()); }
    /// 1-based application σ(i).
    int operator()(int i) const { return img_[static_cast<size_t>(i - 1)] + 1; }
    /// 0-based application.
    int apply0(int i) const { return img_[static_cast<size_t>(i)]; }

    Permutation compose(const Permutation& other) const;  // this ∘ other
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        return a.compose(b);
    }
    Permutation inverse() const;

    Partition cycle_type() const;
    int cycle_count() const;
    /// |σ| = k − c(σ), the minimal number of transpositions.
    int length() const { return degree() - cycle_count(); }
    int sign() const { return length() % 2 == 0 ? 1 : -1; }
    bool is_identity() const;

    std::string to_one_line() const;  // "3 1 2"
    std::string to_cycles() const;    // "(1 3 2)" ; "()" for the identity

    const std::vector<uint8_t>& images() const { return img_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    /// Lexicographic on one-line images (degrees compared first).
    friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<uint8_t> img_;
};

/// All k! permutations in lexicographic one-line order. Bound: k ≤ 10.
std::vector<Permutation> all_permutations(int k);

/// All permutations of cycle type μ (cached per μ). Bound: |μ| ≤ 10.
const std::vector<Permutation>& conjugacy_class(const Partition& mu);

}  // namespace wgcalc
