#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wgcalc/rational.hpp"

namespace wgcalc {

/// Integer partition: weakly decreasing positive parts. Doubles as a cycle
/// type and as a Young diagram (English convention, rows top to bottom).
class Partition {
public:
    Partition() = default;  // empty partition of 0
    explicit Partition(std::vector<int> parts);

    /// Parses "[3,1,1]" (also accepts "3,1,1").
    static Partition parse(const std::string& s);

    int size() const { return size_; }                          // |λ|
    int height() const { return static_cast<int>(parts_.size()); }  // ht(λ)
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }  // 0-based

    Partition conjugate() const;

    /// Transposition length of the class: |μ| = size − height.
    int perm_length() const { return size_ - height(); }
    /// Sign of any permutation of this cycle type: (−1)^{size − height}.
    int class_sign() const { return perm_length() % 2 == 0 ? 1 : -1; }

    std::string to_string() const;  // "[3,1,1]"

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Canonical order: by size, then reverse-lexicographic so that within a
    /// fixed k the order runs (k), (k-1,1), ..., (1^k). All enumerations and
    /// map iterations in this library use this order.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Per-box hook number and content of a Young diagram.
struct BoxStats {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    int hook = 0;     // h_u = λ_i + λ̃_j − i − j + 1
    int content = 0;  // c_u = j − i
};

std::vector<BoxStats> hooks_and_contents(const Partition& lambda);

/// All partitions of k in canonical order ((k) first, (1^k) last).
/// k = 0 yields the single empty partition. Bound: k ≤ 40.
std::vector<Partition> partitions_of(int k);

inline constexpr int kPartitionsMaxK = 40;

/// Number of partitions of k (length of partitions_of(k)).
Integer partition_count(int k);

/// Conjugacy class size k!/z_μ.
Integer class_size(const Partition& mu);

/// The ordering used by the printed Weingarten tables: lexicographic on parts
/// written in increasing order, so (1^k) first and (k) last.
bool table_order_less(const Partition& a, const Partition& b);

/// Partitions of k sorted by table_order_less.
std::vector<Partition> partitions_in_table_order(int k);

}  // namespace wgcalc
