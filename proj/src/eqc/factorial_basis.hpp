#pragma once

#include <utility>
#include <vector>

#include "eqc/spoly.hpp"

namespace eqc {

// Symbolic layer for factorial P- and Q-Schur one- and two-row functions,
// written as polynomials in the ordinary one-row generators P_i (family Pbar)
// respectively Q_i (family Qbar) with coefficients in Z[t].  Such a
// polynomial is called a GammaExpr below; it is a plain SPoly whose variables
// are restricted to one generator family plus the t's.

enum class SchurFamily { P, Q };

// Admissible index pairs of the quadratic two-row recurrence: all (r,s) with
// k <= r <= k+l, 0 <= s <= l, r+s <= k+l, excluding (k,l) itself.  Requires
// k >= l >= 1.
std::vector<std::pair<unsigned, unsigned>> index_set(unsigned k, unsigned l);

// Recurrence coefficients, untruncated (t_i = 0 beyond a rank bound is the
// caller's substitution):
//   g_{k,l}^{r,s} = (-1)^{l-s} 2 h_{k+l-r-s}(t_{k+1}..t_{r+1} | t_{s+2}..t_l)   (s >= 1)
//                 = (-1)^{l}    h_{k+l-r-s}(t_{k+1}..t_{r+1} | t_1..t_l)        (s = 0, no factor 2)
//   f_{k,l}^{r,s} = (-1)^{l-s} 2 h_{k+l-r-s}(t_k..t_r | t_{s+1}..t_{l-1}).
// Empty index ranges denote empty variable lists.
SPoly coeff_g(unsigned k, unsigned l, unsigned r, unsigned s);
SPoly coeff_f(unsigned k, unsigned l, unsigned r, unsigned s);
inline SPoly coeff(SchurFamily fam, unsigned k, unsigned l, unsigned r, unsigned s) {
    return fam == SchurFamily::P ? coeff_g(k, l, r, s) : coeff_f(k, l, r, s);
}

// One-row expansion in the ordinary generators,
//   P_i(x|t) = sum_{j=0}^{i-1} (-1)^j e_j(t_1..t_i) P_{i-j}(x),
// and the Q-version with the shifted parameter list e_j(t_1..t_{i-1}).
// i = 0 gives the constant 1.
SPoly onerow(unsigned i, SchurFamily fam);

// Two-row function via the quadratic recurrence; the convention for the
// boundary cases is tworow(k,0) = onerow(k), tworow(k,k) is the (vanishing)
// recurrence expression, and tworow(k,l) = -tworow(l,k) for k < l.
SPoly tworow(unsigned k, unsigned l, SchurFamily fam);

// Twice the shifted one-row class, 2*P_i^{(k)}(x|t), defined by
//   1 + sum_i 2 P_i^{(k)}(x|t) u^i = prod (1+x_j u)/(1-x_j u) prod_{j<=k} (1-t_j u),
// realized through the closed forms: for i = k+j above the diagonal the
// coefficients are complete homogeneous h_m(t_{k+1}..t_{k+j-m+1}); below it
// they are signed elementary e_m, with the half-integral constant
// (-1)^k e_k(t_1..t_k)/2 made integral by the doubling.  P-family only.
SPoly shifted_onerow_x2(unsigned i, unsigned k);

// Four times the quadratic Chern-class relation
//   P_k^2 + (-1)^k e_k P_k + 2 sum_{i=1}^{k-1} (-1)^i P_{k-i}^{(k)} P_{k+i}^{(k)}
//       + (-1)^k P_{2k}^{(k)},
// which the oracle certifies to vanish.
SPoly appendix_relation_x4(unsigned k);

// Four times the alternative two-row expression in shifted classes; equals
// 4*tworow(k,l) after oracle certification.  Requires k > l >= 1.
SPoly appendix_tworow_x4(unsigned k, unsigned l);

}  // namespace eqc
