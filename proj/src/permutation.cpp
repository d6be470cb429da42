#include "wgcalc/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wgcalc {

Permutation::Permutation(std::vector<uint8_t> images0) : img_(std::move(images0)) {
    std::vector<bool> seen(img_.size(), false);
    for (uint8_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<uint8_t> img(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    return Permutation(img);
}

Permutation Permutation::transposition(int k, int a, int b) {
    if (a < 1 || b < 1 || a > k || b > k || a == b)
        throw std::invalid_argument("Permutation: bad transposition");
    Permutation p = identity(k);
    std::swap(p.img_[static_cast<size_t>(a - 1)], p.img_[static_cast<size_t>(b - 1)]);
    return p;
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(k);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > k) throw std::invalid_argument("Permutation: cycle entry out of range");
            p.img_[static_cast<size_t>(from - 1)] = static_cast<uint8_t>(to - 1);
        }
    }
    // validate bijection
    return Permutation(p.img_);
}

Permutation Permutation::parse(int k, const std::string& s) {
    if (s.find('(') != std::string::npos) {
        std::vector<std::vector<int>> cycles;
        size_t pos = 0;
        while ((pos = s.find('(', pos)) != std::string::npos) {
            size_t close = s.find(')', pos);
            if (close == std::string::npos)
                throw std::invalid_argument("Permutation: unbalanced parenthesis in '" + s + "'");
            std::string body = s.substr(pos + 1, close - pos - 1);
            for (char& c : body)
                if (c == ',') c = ' ';
            std::istringstream ss(body);
            std::vector<int> cyc;
            int v;
            while (ss >> v) cyc.push_back(v);
            if (!cyc.empty()) cycles.push_back(cyc);
            pos = close + 1;
        }
        return from_cycles(k, cycles);
    }
    std::istringstream ss(s);
    std::vector<uint8_t> img;
    int v;
    while (ss >> v) {
        if (v < 1 || v > k) throw std::invalid_argument("Permutation: image out of range in '" + s + "'");
        img.push_back(static_cast<uint8_t>(v - 1));
    }
    if (static_cast<int>(img.size()) != k)
        throw std::invalid_argument("Permutation: expected " + std::to_string(k) + " images in '" + s + "'");
    return Permutation(img);
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("Permutation: degree mismatch in product");
    std::vector<uint8_t> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[other.img_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<uint8_t> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<uint8_t>(i);
    return Permutation(std::move(img));
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            len++;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(lens);
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(img_.size(), false);
    int c = 0;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        c++;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
        }
    }
    return c;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::string Permutation::to_one_line() const {
    std::string out;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(img_[i] + 1);
    }
    return out;
}

std::string Permutation::to_cycles() const {
    std::vector<bool> seen(img_.size(), false);
    std::string out;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = true;
            continue;
        }
        out += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = img_[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::vector<Permutation> all_permutations(int k) {
    if (k > 10) throw capacity_error("all_permutations: k exceeds bound 10");
    std::vector<uint8_t> img(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

const std::vector<Permutation>& conjugacy_class(const Partition& mu) {
    static std::map<Partition, std::vector<Permutation>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    int k = mu.size();
    std::vector<Permutation> cls;
    for (const Permutation& p : all_permutations(k))
        if (p.cycle_type() == mu) cls.push_back(p);
    return cache.emplace(mu, std::move(cls)).first->second;
}

}  // namespace wgcalc
