#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eqc/chevalley.hpp"
#include "eqc/partitions.hpp"
#include "eqc/spoly.hpp"

namespace eqc {

// The quotient ring S[q][X_1..X_n] / (R_1^(q), ..., R_n^(q)) for both Lie
// types, with the quantized quadratic relations assembled from the two-row
// recurrence coefficients and the quantum substitutions
//
//   type D:  X_{n+1} = ... = X_{2n-1} = 0,  X_{2n} = (-1)^{n-1} q,   deg q = 2n
//   type C:  2 X_{n+1} = q,  X_{n+2} = ... = X_{2n} = 0,             deg q = n+1
//
// (in type C every monomial containing X_{n+1} carries an even coefficient;
// the halving is checked at runtime).  The `classical` flavor substitutes all
// high generators by zero instead, giving the q = 0 presentation used as an
// independent cross-check.
struct RingContext {
    LieType type = LieType::D;
    unsigned n = 1;
    bool classical = false;
    unsigned t_trunc = 0;  // t_i = 0 for i > t_trunc
    unsigned deg_q = 1;
    std::vector<SPoly> relations;  // R_i^(q) at index i-1; leading monomial X_i^2
    std::vector<SPoly> tails;      // X_i^2 - R_i^(q), the rewrite image of X_i^2
    std::vector<StrictPartition> basis;  // SP(n), canonical order

    DegreeTable degrees() const { return DegreeTable{static_cast<int>(deg_q)}; }
    size_t index(const StrictPartition& lambda) const;

    // Shared mutable caches (linearizable: one mutex guards them all).
    struct Caches {
        std::mutex mu;
        std::map<std::vector<unsigned>, SPoly> giambelli;
        std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>,
                 std::map<std::vector<unsigned>, SPoly>>
            products;
        std::optional<std::pair<std::vector<std::vector<SPoly>>,
                                std::vector<std::vector<SPoly>>>>
            basis_change;
        std::map<std::vector<unsigned>, std::pair<std::vector<SPoly>, SPoly>> chevalley_poly;
    };
    std::shared_ptr<Caches> caches = std::make_shared<Caches>();
};

RingContext build_context(LieType type, unsigned n, bool classical = false);

// S[q]-linear combination of Schubert classes: nu -> coefficient in Z[t][q].
struct ClassExpansion {
    std::map<StrictPartition, SPoly, CanonicalLess> coeff;

    bool operator==(const ClassExpansion&) const = default;
    // flattened (nu, d, t-coefficient) triples, canonically ordered
    std::vector<std::tuple<StrictPartition, unsigned, SPoly>> terms() const;
};

// Unique square-free-monomial representative modulo the relations.  Rewrites
// the graded-revlex-largest monomial divisible by some X_i^2 until none is
// left; each step strictly lowers that monomial, so the loop terminates.
SPoly normal_form(SPoly p, const RingContext& ctx);

// Pfaffian Giambelli polynomial X_lambda in S[q][X_1..X_n].
SPoly giambelli_class(const StrictPartition& lambda, const RingContext& ctx);

// X_lambda = sum_mu C[lambda][mu] X^mu over the canonical basis order.  The
// matrix is unitriangular with respect to the rewriting order on the
// monomials X^mu (checked; violations throw internal_error) and its inverse
// is computed by back-substitution, no division needed.  Off-diagonal entries
// sit at strictly smaller monomials, which allows same-weight positions such
// as the -X_3 inside X_{2,1} for n >= 3; homogeneity still forces
// |mu| <= |lambda| with entries of degree |lambda| - |mu|.
struct BasisChange {
    const std::vector<std::vector<SPoly>>& to_monomial;    // C
    const std::vector<std::vector<SPoly>>& from_monomial;  // C^{-1}
};
BasisChange basis_change(const RingContext& ctx);

// Structure constants: normal_form(X_lambda * X_mu) expanded back in the
// X_nu basis.
ClassExpansion schubert_product(const StrictPartition& lambda, const StrictPartition& mu,
                                const RingContext& ctx);

// The same product computed from nothing but the Chevalley rule: sigma_lambda
// is solved as a *-polynomial in sigma_1 (Krylov linear algebra over the
// rational-function field, Cramer determinants kept as exact polynomials) and
// the polynomial is applied to sigma_mu.  Final coefficients must come out
// integral; anything else throws internal_error.  Supported for n <= 3.
ClassExpansion multiply_via_chevalley(const StrictPartition& lambda, const StrictPartition& mu,
                                      const RingContext& ctx);

enum class SpecializeMode { Q0, T0, TypeB };

// q = 0 (equivariant), t = 0 (quantum), or the odd-orthogonal reduction
// t_1 -> 0 with indices shifted down (type D contexts only).
ClassExpansion specialize(const ClassExpansion& exp, SpecializeMode mode, const RingContext& ctx);

// Advisory positivity report: every coefficient rewritten in simple-root
// coordinates.  Type D uses z1 = t1+t2, z_j = t_j - t_{j-1} (j >= 2); type C
// uses the long root z1 = 2 t1 and z_j = t_j - t_{j-1}, a best-effort
// convention (convention_verified = false).
struct PositivityEntry {
    StrictPartition nu;
    unsigned d = 0;
    SPoly coeff;
    QPoly root_form;
    bool nonneg_integers = false;
};
struct PositivityReport {
    bool all_nonneg = true;
    bool convention_verified = false;
    std::vector<PositivityEntry> entries;
};
PositivityReport positivity_check(const ClassExpansion& exp, const RingContext& ctx);

}  // namespace eqc
