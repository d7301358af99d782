#include "eqc/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eqc {

StrictPartition::StrictPartition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] <= parts_[i + 1])
            throw std::invalid_argument("partition parts must be strictly decreasing: " +
                                        to_string());
    if (!parts_.empty() && parts_.back() == 0)
        throw std::invalid_argument("partition parts must be positive");
}

unsigned StrictPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

bool StrictPartition::contains(const StrictPartition& mu) const {
    if (mu.length() > length()) return false;
    for (size_t i = 0; i < mu.parts_.size(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::vector<unsigned> StrictPartition::padded_parts() const {
    std::vector<unsigned> p = parts_;
    if (p.size() % 2 == 1) p.push_back(0);
    return p;
}

std::string StrictPartition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

StrictPartition StrictPartition::parse(const std::string& text) {
    std::vector<unsigned> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string piece = text.substr(pos, next - pos);
        if (piece.empty()) throw std::invalid_argument("empty partition part in '" + text + "'");
        size_t used = 0;
        unsigned long v = std::stoul(piece, &used);
        if (used != piece.size())
            throw std::invalid_argument("invalid partition part '" + piece + "'");
        parts.push_back(static_cast<unsigned>(v));
        pos = next + 1;
    }
    return StrictPartition(parts);  // the constructor rejects non-strict input
}

bool CanonicalLess::operator()(const StrictPartition& a, const StrictPartition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() < b.parts();
}

std::vector<StrictPartition> enumerate_SP(unsigned n) {
    if (n > 24)
        throw std::invalid_argument("rank " + std::to_string(n) +
                                    " is far beyond the supported range");
    std::vector<StrictPartition> all;
    // Subsets of {1,...,n}, written as decreasing part lists.
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<unsigned> parts;
        for (unsigned v = n; v >= 1; --v)
            if (mask & (1u << (v - 1))) parts.push_back(v);
        all.emplace_back(std::move(parts));
    }
    std::sort(all.begin(), all.end(), CanonicalLess{});
    return all;
}

static std::vector<StrictPartition> successors(const StrictPartition& lambda, unsigned bound,
                                               bool bounded) {
    std::vector<StrictPartition> out;
    const auto& p = lambda.parts();
    for (size_t i = 0; i < p.size(); ++i) {
        unsigned grown = p[i] + 1;
        if (bounded && grown > bound) continue;
        if (i > 0 && grown >= p[i - 1]) continue;  // would break strictness
        std::vector<unsigned> np = p;
        np[i] = grown;
        out.emplace_back(std::move(np));
    }
    // a new row of size 1
    if (p.empty() || p.back() > 1) {
        if (!bounded || bound >= 1) {
            std::vector<unsigned> np = p;
            np.push_back(1);
            out.emplace_back(std::move(np));
        }
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::vector<StrictPartition> add_box_successors(const StrictPartition& lambda, unsigned n) {
    return successors(lambda, n, true);
}

std::vector<StrictPartition> add_box_successors_unbounded(const StrictPartition& lambda) {
    return successors(lambda, 0, false);
}

std::string SignedPermutation::to_string() const {
    std::string s;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(values[i]);
    }
    return s;
}

SignedPermutation partition_to_perm(const StrictPartition& lambda, unsigned n, LieType type) {
    unsigned m = (type == LieType::C) ? n : n + 1;
    if (lambda.part(0) > n)
        throw std::invalid_argument("partition does not fit in the staircase of rank " +
                                    std::to_string(n));
    std::vector<int> barred;
    if (type == LieType::C) {
        for (unsigned p : lambda.parts()) barred.push_back(static_cast<int>(p));
    } else {
        // Barred values are lambda_i + 1, padded with the value 1 when the
        // length is odd so that the number of sign changes is even.
        for (unsigned p : lambda.padded_parts()) barred.push_back(static_cast<int>(p) + 1);
    }
    std::set<int> used(barred.begin(), barred.end());
    SignedPermutation w;
    for (int b : barred) w.values.push_back(-b);
    for (int v = 1; v <= static_cast<int>(m); ++v)
        if (!used.count(v)) w.values.push_back(v);
    return w;
}

StrictPartition perm_to_partition(const SignedPermutation& w, unsigned n, LieType type) {
    unsigned m = (type == LieType::C) ? n : n + 1;
    if (w.size() != m)
        throw std::invalid_argument("signed permutation has size " + std::to_string(w.size()) +
                                    ", expected " + std::to_string(m));
    std::set<int> seen;
    unsigned negatives = 0;
    for (int v : w.values) {
        int a = std::abs(v);
        if (a < 1 || a > static_cast<int>(m) || !seen.insert(a).second)
            throw std::invalid_argument("not a signed permutation: " + w.to_string());
        if (v < 0) ++negatives;
    }
    // Grassmannian condition: values increase in the order -m < ... < -1 < 1 < ... < m.
    for (size_t i = 0; i + 1 < w.values.size(); ++i)
        if (w.values[i] >= w.values[i + 1])
            throw std::invalid_argument("not a Grassmannian permutation: " + w.to_string());
    if (type == LieType::D && negatives % 2 != 0)
        throw std::invalid_argument("type D requires an even number of sign changes: " +
                                    w.to_string());
    std::vector<unsigned> parts;
    for (int v : w.values) {
        if (v >= 0) break;
        unsigned value = static_cast<unsigned>(-v);
        unsigned part = (type == LieType::C) ? value : value - 1;
        if (part > 0) parts.push_back(part);
    }
    return StrictPartition(parts);
}

unsigned coxeter_length(const SignedPermutation& w, LieType type) {
    unsigned inv = 0;
    for (size_t i = 0; i < w.values.size(); ++i)
        for (size_t j = i + 1; j < w.values.size(); ++j)
            if (w.values[i] > w.values[j]) ++inv;
    unsigned negpart = 0;
    for (int v : w.values)
        if (v < 0) negpart += static_cast<unsigned>(-v) - (type == LieType::D ? 1 : 0);
    return inv + negpart;
}

}  // namespace eqc
