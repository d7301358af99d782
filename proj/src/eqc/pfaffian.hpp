#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "eqc/partitions.hpp"
#include "eqc/spoly.hpp"

namespace eqc {

// Pfaffian of a skew-symmetric matrix given by its upper-triangular entries,
// computed by the first-row expansion
//     Pf(A) = sum_{i=2}^{r} (-1)^i a_{1i} Pf(A with rows/cols 1,i removed),
// with Pf of the empty matrix equal to 1.  Entries are produced on demand by
// the callback (0-based indices, i < j); r must be even.  Memoization is on
// the subset of surviving indices.
using EntryFn = std::function<SPoly(unsigned i, unsigned j)>;

SPoly pfaffian(unsigned r, const EntryFn& entry, bool memoize = true);

// The class polynomial of a strict partition from two-row entries:
// Pf(E(lambda_i, lambda_j)) over the even-padded part list, with E(k,0) the
// one-row entry.  Lengths <= 2 return the entry directly.
using TwoRowFn = std::function<SPoly(unsigned k, unsigned l)>;

SPoly class_polynomial(const StrictPartition& lambda, const TwoRowFn& entry);

// The alternating one-row expansion valid for odd lengths:
//     sum_i (-1)^{i-1} E(lambda_i, 0) * Pf(remaining rows).
// Used to cross-check the padded first-row expansion.
SPoly class_polynomial_odd_form(const StrictPartition& lambda, const TwoRowFn& entry);

}  // namespace eqc
