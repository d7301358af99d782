#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "eqc/partitions.hpp"
#include "eqc/spoly.hpp"

namespace eqc {

// Direct evaluation of factorial P- and Q-Schur functions in finitely many
// variables from the symmetrization definition
//
//   P_lambda(x_1..x_N|t) = 1/(N-l)! sum_{w in S_N} w( prod_i (x_i|t)^{lambda_i}
//                             prod_{i<=l} prod_{j=i+1..N} (x_i+x_j)/(x_i-x_j) )
//
// over an even number N of distinct variables, with exact rationals.  Every
// symbolic identity produced elsewhere in the engine is certified against
// these values.  The t-parameters can be held symbolic, in which case an
// evaluation returns an exact polynomial in the t's and a single x-point
// certifies the identity for all t at once.

struct EvalPoint {
    std::vector<Rat> x;  // even count, pairwise distinct, nonzero
    std::vector<Rat> t;  // values of t_1..t_m; zero beyond

    void validate() const;
    Rat t_value(unsigned j) const {  // 1-based
        return (j >= 1 && j <= t.size()) ? t[j - 1] : Rat(0);
    }
};

// (x|t)^k = (x - t_1)...(x - t_k); k = 0 gives 1.
Rat generalized_factorial(const Rat& x, std::span<const Rat> tvals, unsigned k);

// Rational-point evaluations.
Rat eval_P_direct(const StrictPartition& lambda, const EvalPoint& pt);
Rat eval_Q_direct(const StrictPartition& lambda, const EvalPoint& pt);

// P_i(x) via the generating series prod (1+x_j u)/(1-x_j u) = 1 + sum 2 P_i u^i.
// When every x is an integer the coefficient must be an even integer before
// halving; violations throw internal_error.
Rat eval_P_onerow(unsigned i, std::span<const Rat> xs);

// Value of a polynomial in the one-row generators P_i / Q_i with Z[t]
// coefficients (a GammaExpr) at the point.
Rat eval_symbolic(const SPoly& expr, const EvalPoint& pt);

// Symbolic-t layer: the same evaluations with the t-parameters left as
// variables.  The result is an exact polynomial in t with rational
// coefficients; comparing two of them certifies an identity for every t at
// the given x-point.
QPoly eval_P_direct_sym(const StrictPartition& lambda, std::span<const Rat> xs);
QPoly eval_Q_direct_sym(const StrictPartition& lambda, std::span<const Rat> xs);
QPoly eval_gamma_sym(const SPoly& expr, std::span<const Rat> xs);
// Coefficient of u^i in prod (1+x_j u)/(1-x_j u) * prod_{j<=k} (1 - t_j u),
// i.e. twice the shifted one-row class P_i^{(k)}(x|t).
QPoly eval_shifted_onerow_x2(unsigned i, unsigned k, std::span<const Rat> xs);

// Deterministic evaluation grid.  The x-points run along scaled-prime
// one-parameter families: for a difference of total degree <= degree_bound,
// vanishing at degree_bound+1 points of a family proves vanishing along the
// whole family (a univariate polynomial in the scale parameter of degree
// <= degree_bound with that many roots is zero).  The t-side needs no grid
// because evaluations keep t symbolic; rational t-patterns are kept as
// additional spot checks of the rational-point API.  Six x-variables suffice:
// the restriction of the one-row-generated ring to six variables is injective
// below total degree 28, far above every identity certified here.
struct Grid {
    unsigned degree_bound = 0;
    std::vector<std::vector<Rat>> x_points;
    std::vector<std::vector<Rat>> t_patterns;

    std::string description() const;
};

inline constexpr unsigned kMaxGridDegree = 24;

// Throws std::invalid_argument when degree_bound exceeds kMaxGridDegree (the
// configured grid cannot certify such degrees).
Grid make_grid(unsigned degree_bound);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Certifies lhs == rhs in Z[t] tensor Gamma' by symbolic-t evaluation at
// every grid x-point (plus rational spot checks).  Both sides must be
// homogeneous of degree <= degree_bound.
CheckResult identity_check(const std::string& name, const SPoly& lhs, const SPoly& rhs,
                           unsigned degree_bound);

// Generic grid comparison for sides that are not plain GammaExprs (e.g. the
// symmetrization definition itself).  Each side maps an x-point to the exact
// t-polynomial value.
CheckResult grid_equal(const std::string& name, unsigned degree_bound,
                       const std::function<QPoly(std::span<const Rat>)>& lhs,
                       const std::function<QPoly(std::span<const Rat>)>& rhs);

}  // namespace eqc
