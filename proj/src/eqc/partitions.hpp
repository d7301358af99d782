#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eqc {

enum class LieType { C, D };

inline char lie_type_char(LieType t) { return t == LieType::C ? 'C' : 'D'; }

// Strict partition: strictly decreasing positive parts, stored without
// trailing zeros.  The empty partition is allowed and is the unit class.
class StrictPartition {
  public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    unsigned weight() const;
    bool empty() const { return parts_.empty(); }
    unsigned part(unsigned i) const { return i < parts_.size() ? parts_[i] : 0; }

    // Shifted-diagram containment: mu ⊆ lambda iff mu_i <= lambda_i for all i.
    bool contains(const StrictPartition& mu) const;

    // Even-length padding: one trailing zero part when the length is odd.
    // (Kept as an explicit view so the even-rank convention of the Pfaffian
    // formula stays localized.)
    std::vector<unsigned> padded_parts() const;
    unsigned padded_length() const { return (length() + 1) / 2 * 2; }

    std::string to_string() const;                      // "3,1"; empty string for {}
    static StrictPartition parse(const std::string&);   // inverse of to_string

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

  private:
    std::vector<unsigned> parts_;
};

// Canonical order: by weight, then lexicographically on the part vectors.
// Fixed once; every matrix-indexed computation uses it.
struct CanonicalLess {
    bool operator()(const StrictPartition& a, const StrictPartition& b) const;
};

// All 2^n strict partitions with lambda_1 <= n, canonically ordered.
std::vector<StrictPartition> enumerate_SP(unsigned n);

// Strict mu ⊃ lambda with |mu| = |lambda| + 1 and mu_1 <= n.
std::vector<StrictPartition> add_box_successors(const StrictPartition& lambda, unsigned n);
// The same sum without the mu_1 <= n bound (symmetric-function level).
std::vector<StrictPartition> add_box_successors_unbounded(const StrictPartition& lambda);

// Signed permutation, stored by its values w(1),...,w(m) in {±1,...,±m}.
// Type C uses m = n; type D uses m = n+1 and requires an even number of
// negative values.
struct SignedPermutation {
    std::vector<int> values;

    unsigned size() const { return static_cast<unsigned>(values.size()); }
    std::string to_string() const;  // "-6 -3 1 2 4 5"
};

// The Grassmannian-permutation dictionary.  partition_to_perm produces the
// minimal length coset representative; perm_to_partition validates its input
// (increasing values, parity in type D) and inverts it.
SignedPermutation partition_to_perm(const StrictPartition& lambda, unsigned n, LieType type);
StrictPartition perm_to_partition(const SignedPermutation& w, unsigned n, LieType type);

// Weyl group length: inversions plus sum of |w(i)| (type C) respectively
// |w(i)| - 1 (type D) over the negative values.
unsigned coxeter_length(const SignedPermutation& w, LieType type);

}  // namespace eqc
