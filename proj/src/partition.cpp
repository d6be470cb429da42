#include "wgcalc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wgcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("Partition: unbalanced brackets in '" + s + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        parts.push_back(std::stoi(tok));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[static_cast<size_t>(j)]++;
    return Partition(conj);
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    // reverse-lexicographic: larger leading parts come first
    size_t n = std::min(a.parts_.size(), b.parts_.size());
    for (size_t i = 0; i < n; ++i)
        if (a.parts_[i] != b.parts_[i]) return b.parts_[i] <=> a.parts_[i];
    return a.parts_.size() <=> b.parts_.size();
}

std::vector<BoxStats> hooks_and_contents(const Partition& lambda) {
    std::vector<BoxStats> out;
    const Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.height(); ++i) {
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            BoxStats b;
            b.row = i;
            b.col = j;
            b.hook = lambda.part(i - 1) + conj.part(j - 1) - i - j + 1;
            b.content = j - i;
            out.push_back(b);
        }
    }
    return out;
}

namespace {

void enumerate_partitions(int remaining, int max_part, std::vector<int>& acc,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("partitions_of: k must be nonnegative");
    if (k > kPartitionsMaxK)
        throw capacity_error("partitions_of: k exceeds bound " + std::to_string(kPartitionsMaxK));
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_partitions(k, k == 0 ? 1 : k, acc, out);
    return out;  // descending first parts: (k) first, (1^k) last
}

Integer partition_count(int k) { return Integer(static_cast<long>(partitions_of(k).size())); }

Integer class_size(const Partition& mu) {
    // k! / z_μ with z_μ = Π m^{a_m} a_m!
    Integer z = 1;
    int run = 0;
    for (int i = 0; i < mu.height(); ++i) {
        run++;
        bool last = (i + 1 == mu.height()) || (mu.part(i + 1) != mu.part(i));
        if (last) {
            z *= pow_integer(Integer(mu.part(i)), run) * factorial(run);
            run = 0;
        }
    }
    return factorial(mu.size()) / z;
}

bool table_order_less(const Partition& a, const Partition& b) {
    std::vector<int> ra(a.parts().rbegin(), a.parts().rend());
    std::vector<int> rb(b.parts().rbegin(), b.parts().rend());
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
}

std::vector<Partition> partitions_in_table_order(int k) {
    std::vector<Partition> ps = partitions_of(k);
    std::sort(ps.begin(), ps.end(), table_order_less);
    return ps;
}

}  // namespace wgcalc
