#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eqc/factorial_basis.hpp"
#include "eqc/partitions.hpp"
#include "eqc/spoly.hpp"

namespace eqc {

// Closed-form expansions of sigma_1 * sigma_lambda.
//
// Type C (Lagrangian):  sum over added boxes with multiplicity
// 2^{l(lambda)-l(mu)+1}, diagonal coefficient 2*sum_i t_{lambda_i}, and a
// quantum term q*sigma_{(lambda_2,...)} exactly when lambda_1 = n.
//
// Type D (orthogonal):  multiplicities 1, diagonal coefficient
// sum_{i=1}^{r} t_{lambda_i+1} over the even-padded index (an odd length
// contributes t_1), and a quantum term q*sigma_{(lambda_3,...,lambda_r)}
// exactly when lambda_1 = n and lambda_2 = n-1.
struct ChevalleyExpansion {
    std::vector<std::pair<StrictPartition, int>> boxes;  // (mu, multiplicity)
    SPoly diagonal;                                      // coefficient of sigma_lambda
    std::optional<StrictPartition> quantum;              // sigma index of the q-term
};

ChevalleyExpansion chevalley_C(const StrictPartition& lambda, unsigned n);
ChevalleyExpansion chevalley_D(const StrictPartition& lambda, unsigned n);
inline ChevalleyExpansion chevalley(LieType type, const StrictPartition& lambda, unsigned n) {
    return type == LieType::C ? chevalley_C(lambda, n) : chevalley_D(lambda, n);
}

// Both sides of the symmetric-function Chevalley identity
//   P_1(x|t) P_lambda(x|t) = sum_{mu -> lambda} P_mu(x|t)
//                            + (sum_{i=1}^{r} t_{lambda_i+1}) P_lambda(x|t)
// (mu over all strict partitions, no rank bound; r the padded length), and
// its Q-analogue with box multiplicities 2^{l(lambda)-l(mu)+1} and diagonal
// 2*sum t_{lambda_i}.  Classes are expanded through the Pfaffian of two-row
// entries; the oracle certifies the equality on the grid.
std::pair<SPoly, SPoly> factorial_chevalley_sides(const StrictPartition& lambda, SchurFamily fam);

// Pfaffian expansion of P_lambda / Q_lambda in the one-row generators.
SPoly class_gamma(const StrictPartition& lambda, SchurFamily fam);

}  // namespace eqc
