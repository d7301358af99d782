#include "eqc/schur_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eqc/permutations.hpp"
#include "eqc/series.hpp"
#include "eqc/spoly_io.hpp"

namespace eqc {

namespace {

constexpr unsigned kMaxDirectN = 8;

// The t-parameters enter either as fixed rationals or as symbolic variables;
// both contexts expose the same tiny interface.
struct RationalT {
    using Value = Rat;
    std::span<const Rat> vals;
    Value t(unsigned j) const { return (j >= 1 && j <= vals.size()) ? vals[j - 1] : Rat(0); }
    static Value from_rat(const Rat& r) { return r; }
    static Value zero() { return Rat(0); }
};

struct SymbolicT {
    using Value = QPoly;
    bool qshift = false;  // t -> (0, t_1, t_2, ...), the Q-function shift
    Value t(unsigned j) const {
        if (qshift) {
            if (j == 1) return QPoly::zero();
            return QPoly::variable(VarId::t(j - 1));
        }
        return QPoly::variable(VarId::t(j));
    }
    static Value from_rat(const Rat& r) { return QPoly::constant(r); }
    static Value zero() { return QPoly::zero(); }
};

bool all_integral(std::span<const Rat> xs) {
    return std::all_of(xs.begin(), xs.end(), [](const Rat& r) { return is_integer(r); });
}

bool value_integral(const Rat& v) { return is_integer(v); }
bool value_integral(const QPoly& v) {
    for (const auto& [m, c] : v)
        if (!is_integer(c)) return false;
    return true;
}

template <class TCtx>
typename TCtx::Value factorial_t(const Rat& x, const TCtx& ctx, unsigned k) {
    auto prod = TCtx::from_rat(Rat(1));
    for (unsigned j = 1; j <= k; ++j) prod = prod * (TCtx::from_rat(x) - ctx.t(j));
    return prod;
}

template <class TCtx>
typename TCtx::Value eval_P_direct_t(const StrictPartition& lambda, std::span<const Rat> xs,
                                     const TCtx& ctx) {
    const unsigned N = static_cast<unsigned>(xs.size());
    const unsigned l = lambda.length();
    if (N % 2 != 0) throw std::invalid_argument("the direct evaluation needs an even N");
    if (l > N) throw std::invalid_argument("partition longer than the variable count");
    if (N > kMaxDirectN)
        throw std::invalid_argument("N = " + std::to_string(N) + " exceeds the N! budget");
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = i + 1; j < N; ++j)
            if (xs[i] == xs[j])
                throw std::invalid_argument("coincident x-values make the symmetrization singular");

    // (x_i + x_j)/(x_i - x_j) for every ordered pair.
    std::vector<std::vector<Rat>> ratio(N, std::vector<Rat>(N, Rat(0)));
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = 0; j < N; ++j)
            if (i != j) ratio[i][j] = (xs[i] + xs[j]) / (xs[i] - xs[j]);

    // Factorial powers (x_i|t)^{lambda_a} for every variable and row.
    std::vector<std::vector<typename TCtx::Value>> fact(
        l, std::vector<typename TCtx::Value>(N, TCtx::zero()));
    for (unsigned a = 0; a < l; ++a)
        for (unsigned i = 0; i < N; ++i) fact[a][i] = factorial_t(xs[i], ctx, lambda.parts()[a]);

    auto total = TCtx::zero();
    for_all_permutations(N, [&](const std::vector<unsigned>& w) {
        Rat r(1);
        for (unsigned i = 0; i < l; ++i)
            for (unsigned j = i + 1; j < N; ++j) r *= ratio[w[i]][w[j]];
        if (r == 0) return;
        auto term = TCtx::from_rat(r);
        for (unsigned a = 0; a < l; ++a) term = term * fact[a][w[a]];
        total = total + term;
    });

    Rat norm(Rat(1) / Rat(factorial(N - l)));
    // Keep the product eagerly evaluated (gmpxx operators are lazy and must
    // not outlive their operands).
    typename TCtx::Value result = total * TCtx::from_rat(norm);
    // The sum is invariant under reordering the tail variables, so the
    // division is exact; with integral inputs the value is an integral
    // polynomial.  A failure here means the symmetrization itself is wrong.
    if (all_integral(xs) && !value_integral(result))
        throw internal_error("symmetrization did not produce an integral value");
    return result;
}

}  // namespace

void EvalPoint::validate() const {
    if (x.size() % 2 != 0) throw std::invalid_argument("EvalPoint needs an even number of x-values");
    std::set<Rat> seen;
    for (const Rat& v : x) {
        if (v == 0) throw std::invalid_argument("EvalPoint x-values must be nonzero");
        if (!seen.insert(v).second)
            throw std::invalid_argument("EvalPoint x-values must be pairwise distinct");
    }
}

Rat generalized_factorial(const Rat& x, std::span<const Rat> tvals, unsigned k) {
    RationalT ctx{tvals};
    return factorial_t(x, ctx, k);
}

Rat eval_P_direct(const StrictPartition& lambda, const EvalPoint& pt) {
    pt.validate();
    return eval_P_direct_t(lambda, pt.x, RationalT{pt.t});
}

Rat eval_Q_direct(const StrictPartition& lambda, const EvalPoint& pt) {
    pt.validate();
    std::vector<Rat> shifted;
    shifted.push_back(Rat(0));
    shifted.insert(shifted.end(), pt.t.begin(), pt.t.end());
    Rat p = eval_P_direct_t(lambda, pt.x, RationalT{shifted});
    Int two_l;
    mpz_ui_pow_ui(two_l.get_mpz_t(), 2, lambda.length());
    return p * Rat(two_l);
}

QPoly eval_P_direct_sym(const StrictPartition& lambda, std::span<const Rat> xs) {
    return eval_P_direct_t(lambda, xs, SymbolicT{false});
}

QPoly eval_Q_direct_sym(const StrictPartition& lambda, std::span<const Rat> xs) {
    QPoly p = eval_P_direct_t(lambda, xs, SymbolicT{true});
    Int two_l;
    mpz_ui_pow_ui(two_l.get_mpz_t(), 2, lambda.length());
    return p * Rat(two_l);
}

Rat eval_P_onerow(unsigned i, std::span<const Rat> xs) {
    if (i == 0) return Rat(1);
    auto series = q_series<Rat>(xs, i);
    Rat c = series.c[i];
    if (all_integral(xs)) {
        if (!is_integer(c) || mpz_odd_p(c.get_num().get_mpz_t()))
            throw internal_error("odd q-series coefficient before halving");
    }
    return c / 2;
}

namespace {

// Substitute one-row generators by their values at the x-point, keeping the
// Z[t]-coefficients as given.  Q_i(x) = 2 P_i(x).
QPoly eval_gamma_with(const SPoly& expr, const std::vector<Rat>& pvals) {
    QPoly out;
    for (const auto& [m, c] : expr) {
        Rat scalar(c);
        Monomial tpart;
        for (const auto& [v, e] : m.entries()) {
            switch (v.fam()) {
                case Fam::T: tpart = tpart * Monomial::var(v, e); break;
                case Fam::Pbar: {
                    Rat base = pvals.at(v.index());
                    for (unsigned r = 0; r < e; ++r) scalar *= base;
                    break;
                }
                case Fam::Qbar: {
                    Rat base = pvals.at(v.index()) * 2;
                    for (unsigned r = 0; r < e; ++r) scalar *= base;
                    break;
                }
                default:
                    throw std::invalid_argument("expression is not in one-row generators and t");
            }
        }
        out.add_term(tpart, scalar);
    }
    return out;
}

unsigned max_generator_index(const SPoly& expr) {
    unsigned m = 0;
    expr.for_each_var([&](VarId v) {
        if (v.fam() == Fam::Pbar || v.fam() == Fam::Qbar) m = std::max(m, v.index());
    });
    return m;
}

std::vector<Rat> onerow_values(std::span<const Rat> xs, unsigned up_to) {
    auto series = q_series<Rat>(xs, up_to);
    std::vector<Rat> pvals(up_to + 1, Rat(0));
    pvals[0] = Rat(1);
    for (unsigned i = 1; i <= up_to; ++i) pvals[i] = series.c[i] / 2;
    return pvals;
}

}  // namespace

QPoly eval_gamma_sym(const SPoly& expr, std::span<const Rat> xs) {
    return eval_gamma_with(expr, onerow_values(xs, std::max(1u, max_generator_index(expr))));
}

Rat eval_symbolic(const SPoly& expr, const EvalPoint& pt) {
    pt.validate();
    QPoly sym = eval_gamma_sym(expr, pt.x);
    Rat out(0);
    for (const auto& [m, c] : sym) {
        Rat term = c;
        for (const auto& [v, e] : m.entries()) {
            Rat base = pt.t_value(v.index());
            for (unsigned r = 0; r < e; ++r) term *= base;
        }
        out += term;
    }
    return out;
}

QPoly eval_shifted_onerow_x2(unsigned i, unsigned k, std::span<const Rat> xs) {
    auto series = q_series<QPoly>(xs, i);
    for (unsigned j = 1; j <= k; ++j) series.mul_linear(-QPoly::variable(VarId::t(j)));
    return series.c[i];
}

std::string Grid::description() const {
    return "deterministic grid: " + std::to_string(x_points.size()) +
           " x-points (scaled-prime families, N=6), t symbolic; " +
           std::to_string(t_patterns.size()) + " rational t-patterns; degree bound " +
           std::to_string(degree_bound);
}

Grid make_grid(unsigned degree_bound) {
    if (degree_bound > kMaxGridDegree)
        throw std::invalid_argument("grid too small for requested degree bound " +
                                    std::to_string(degree_bound));
    static const int primes[6] = {2, 3, 5, 7, 11, 13};
    Grid g;
    g.degree_bound = degree_bound;
    for (unsigned m = 1; m <= degree_bound + 1; ++m) {
        std::vector<Rat> pt;
        for (int p : primes) pt.push_back(Rat(p) * Rat(static_cast<int>(m)));
        g.x_points.push_back(std::move(pt));
    }
    // A second family with a different direction, as a cross-check.
    for (unsigned m = 1; m <= 3; ++m) {
        std::vector<Rat> pt;
        for (int p : primes) pt.push_back(Rat(p + 17 * static_cast<int>(m)));
        g.x_points.push_back(std::move(pt));
    }
    g.t_patterns.push_back(std::vector<Rat>(12, Rat(0)));
    std::vector<Rat> ascending, mixed, shifted;
    for (int j = 1; j <= 12; ++j) {
        ascending.push_back(Rat(j));
        mixed.push_back(j % 2 == 0 ? Rat(j + 1) : Rat(-j - 1));
        shifted.push_back(j == 1 ? Rat(0) : Rat(j - 1));
    }
    g.t_patterns.push_back(ascending);
    g.t_patterns.push_back(mixed);
    g.t_patterns.push_back(shifted);
    return g;
}

CheckResult grid_equal(const std::string& name, unsigned degree_bound,
                       const std::function<QPoly(std::span<const Rat>)>& lhs,
                       const std::function<QPoly(std::span<const Rat>)>& rhs) {
    Grid grid = make_grid(degree_bound);
    for (const auto& xs : grid.x_points) {
        QPoly a = lhs(xs);
        QPoly b = rhs(xs);
        if (!(a == b)) {
            QPoly diff = a - b;
            std::string xdesc;
            for (const Rat& v : xs) xdesc += (xdesc.empty() ? "" : ",") + v.get_str();
            return {name, false,
                    "mismatch at x=(" + xdesc + "): difference " + to_string(diff)};
        }
    }
    return {name, true, grid.description()};
}

CheckResult identity_check(const std::string& name, const SPoly& lhs, const SPoly& rhs,
                           unsigned degree_bound) {
    DegreeTable deg{1};
    if (lhs.degree(deg) > static_cast<int>(degree_bound) ||
        rhs.degree(deg) > static_cast<int>(degree_bound))
        throw std::invalid_argument("degree bound " + std::to_string(degree_bound) +
                                    " is smaller than the expressions in '" + name + "'");
    CheckResult r = grid_equal(
        name, degree_bound, [&](std::span<const Rat> xs) { return eval_gamma_sym(lhs, xs); },
        [&](std::span<const Rat> xs) { return eval_gamma_sym(rhs, xs); });
    if (!r.pass) return r;
    // Rational spot checks on top of the symbolic certificate.
    Grid grid = make_grid(degree_bound);
    for (size_t p = 0; p < grid.t_patterns.size(); ++p) {
        EvalPoint pt{grid.x_points.front(), grid.t_patterns[p]};
        if (eval_symbolic(lhs, pt) != eval_symbolic(rhs, pt))
            return {name, false, "rational t-pattern " + std::to_string(p) + " mismatch"};
    }
    return r;
}

}  // namespace eqc
