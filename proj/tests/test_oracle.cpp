#include <doctest.h>

#include "eqc/factorial_basis.hpp"
#include "eqc/partitions.hpp"
#include "eqc/schur_oracle.hpp"
#include "eqc/series.hpp"
#include "eqc/spoly_io.hpp"

using namespace eqc;

namespace {
std::vector<Rat> rats(std::initializer_list<int> vs) {
    std::vector<Rat> out;
    for (int v : vs) out.emplace_back(v);
    return out;
}
}  // namespace

TEST_CASE("generalized factorial") {
    std::vector<Rat> ts = rats({1, 2});
    CHECK(generalized_factorial(Rat(3), ts, 0) == Rat(1));
    CHECK(generalized_factorial(Rat(3), ts, 2) == Rat(2));  // (3-1)(3-2)
    std::vector<Rat> zero = rats({0, 0, 0});
    CHECK(generalized_factorial(Rat(3), zero, 3) == Rat(27));  // t = 0 gives x^k
}

TEST_CASE("EvalPoint validation") {
    EvalPoint bad_odd{rats({1, 2, 3}), {}};
    CHECK_THROWS_AS(bad_odd.validate(), std::invalid_argument);
    EvalPoint bad_zero{rats({0, 1, 2, 3}), {}};
    CHECK_THROWS_AS(bad_zero.validate(), std::invalid_argument);
    EvalPoint bad_dup{rats({1, 1, 2, 3}), {}};
    CHECK_THROWS_AS(bad_dup.validate(), std::invalid_argument);
    EvalPoint ok{rats({1, -1, 2, -2}), {}};
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("one-row values from the generating series") {
    CHECK(eval_P_onerow(1, rats({1, -1, 2, -2})) == Rat(0));  // antisymmetric point
    CHECK(eval_P_onerow(2, rats({1, 2})) == Rat(9));          // e_1^2 = (1+2)^2
    CHECK(eval_P_onerow(1, rats({1, 2, 3, 4})) == Rat(10));
    CHECK(eval_P_onerow(0, rats({1, 2})) == Rat(1));
}

TEST_CASE("direct symmetrization, frozen values") {
    // P_() = 1 and P_(1)(x|t) = x1+...+xN for any t
    EvalPoint pt{rats({1, 2, 3, 4}), rats({5, -3})};
    CHECK(eval_P_direct(StrictPartition(), pt) == Rat(1));
    CHECK(eval_P_direct(StrictPartition({1}), pt) == Rat(10));
    // frozen two-row values, derived from P_{2,1} = P_2 P_1 - P_3 out of the
    // q-series: at x=(1,2,3,4) the one-rows are P_1=10, P_2=100, P_3=700
    EvalPoint t0{rats({1, 2, 3, 4}), {}};
    CHECK(eval_P_direct(StrictPartition({2, 1}), t0) == Rat(300));
    EvalPoint t123{rats({1, 2, 3, 4}), rats({1, 2, 3})};
    CHECK(eval_P_direct(StrictPartition({2, 1}), t123) == Rat(210));
    // and the same values through the series route
    Rat p1 = eval_P_onerow(1, t0.x), p2 = eval_P_onerow(2, t0.x), p3 = eval_P_onerow(3, t0.x);
    CHECK(p2 * p1 - p3 == Rat(300));
}

TEST_CASE("symbolic-t evaluation matches rational points") {
    std::vector<Rat> xs = rats({2, 3, 5, 7, 11, 13});
    StrictPartition lam({2, 1});
    QPoly sym = eval_P_direct_sym(lam, xs);
    for (const auto& tvals : {rats({0, 0, 0}), rats({1, 2, 3}), rats({-1, 4, 0})}) {
        EvalPoint pt{xs, tvals};
        Rat direct = eval_P_direct(lam, pt);
        // substitute the t-pattern into the symbolic value
        std::map<VarId, QPoly> bind;
        for (unsigned j = 1; j <= 6; ++j)
            bind.emplace(VarId::t(j),
                         QPoly::constant(j <= tvals.size() ? tvals[j - 1] : Rat(0)));
        QPoly v = sym.substitute(bind);
        REQUIRE(v.is_constant());
        CHECK(v.constant_value() == direct);
    }
}

TEST_CASE("eval_symbolic on one-row generators") {
    EvalPoint pt{rats({1, 2, 3, 4}), rats({1, 2})};
    CHECK(eval_symbolic(SPoly::variable(VarId::pbar(1)), pt) == eval_P_onerow(1, pt.x));
    CHECK(eval_symbolic(SPoly(1), pt) == Rat(1));
    // P1^2 - P2 vanishes identically at t = 0 (forced by the series)
    SPoly expr = SPoly::variable(VarId::pbar(1), 2) - SPoly::variable(VarId::pbar(2));
    CHECK(eval_symbolic(expr, pt) == Rat(0));
    // Q generators evaluate to twice the P values
    CHECK(eval_symbolic(SPoly::variable(VarId::qbar(2)), pt) == Rat(2) * eval_P_onerow(2, pt.x));
}

TEST_CASE("Q-shift: Q_lambda = 2^l P_lambda(x|0,t1,...)") {
    std::vector<Rat> xs = rats({2, 3, 5, 7, 11, 13});
    for (const auto& lam : enumerate_SP(4)) {
        if (lam.empty()) continue;
        QPoly q_path = eval_Q_direct_sym(lam, xs);
        // P path with shifted parameters, scaled by 2^length
        QPoly p_path = eval_P_direct_sym(lam, xs);
        std::map<VarId, QPoly> shift;
        p_path.for_each_var([&](VarId v) {
            if (v.fam() == Fam::T)
                shift.emplace(v, v.index() == 1 ? QPoly::zero()
                                                : QPoly::variable(VarId::t(v.index() - 1)));
        });
        QPoly expect = p_path.substitute(shift);
        for (unsigned i = 0; i < lam.length(); ++i) expect = expect * Rat(2);
        CHECK(q_path == expect);
    }
}

TEST_CASE("identity_check certifies the vanishing two-row and rejects wrong signs") {
    CheckResult good = identity_check("P(1,1) vanishes", tworow(1, 1, SchurFamily::P),
                                      SPoly::zero(), 2);
    CHECK(good.pass);
    // Flipping the sign of the linear coefficient (the misprint resolved by
    // the oracle) must fail loudly.
    SPoly wrong = onerow(1, SchurFamily::P) * onerow(1, SchurFamily::P) +
                  (SPoly::variable(VarId::t(1)) + SPoly::variable(VarId::t(2))) *
                      onerow(1, SchurFamily::P) -
                  onerow(2, SchurFamily::P);
    CheckResult bad = identity_check("misprinted relation", wrong, SPoly::zero(), 2);
    CHECK(!bad.pass);
}

TEST_CASE("grid construction and bounds") {
    Grid g = make_grid(8);
    CHECK(g.x_points.size() == 9 + 3);  // primary family + cross-family
    for (const auto& pt : g.x_points) {
        EvalPoint p{pt, {}};
        CHECK_NOTHROW(p.validate());
    }
    CHECK(g.t_patterns.size() == 4);
    CHECK_THROWS_AS(make_grid(25), std::invalid_argument);
}

TEST_CASE("integral outputs at integer points") {
    // the (N-l)! division and the halving both land in Z
    std::vector<Rat> xs = rats({2, 3, 5, 7, 11, 13});
    QPoly v = eval_P_direct_sym(StrictPartition({3, 2, 1}), xs);
    for (const auto& [m, c] : v) CHECK(is_integer(c));
}
