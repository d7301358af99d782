#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace eqc {

inline constexpr unsigned kDefaultPermutationBound = 8;

// Visits every permutation of {0,...,n-1} exactly once, in lexicographic
// order.  n = 0 visits the single empty permutation.  The bound keeps the n!
// blowup a deliberate decision at call sites.
template <class F>
void for_all_permutations(unsigned n, F&& visit, unsigned bound = kDefaultPermutationBound) {
    if (n > bound)
        throw std::invalid_argument("permutation size " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(bound));
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        visit(const_cast<const std::vector<unsigned>&>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace eqc
