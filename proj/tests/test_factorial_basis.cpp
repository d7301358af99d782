#include <doctest.h>

#include "eqc/factorial_basis.hpp"
#include "eqc/schur_oracle.hpp"
#include "eqc/spoly_io.hpp"
#include "eqc/symmetric.hpp"

using namespace eqc;

namespace {
SPoly t(unsigned i) { return SPoly::variable(VarId::t(i)); }
SPoly P(unsigned i) { return SPoly::variable(VarId::pbar(i)); }
SPoly Q(unsigned i) { return SPoly::variable(VarId::qbar(i)); }
}  // namespace

TEST_CASE("admissible index pairs") {
    using Pairs = std::vector<std::pair<unsigned, unsigned>>;
    CHECK(index_set(2, 1) == Pairs({{2, 0}, {3, 0}}));
    CHECK(index_set(1, 1) == Pairs({{1, 0}, {2, 0}}));
    CHECK(index_set(2, 2) == Pairs({{2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 0}}));
    CHECK_THROWS_AS(index_set(1, 2), std::invalid_argument);
}

TEST_CASE("g coefficients, pinned values") {
    // the X_{2,1} entry: X2*X1 - (t1+t3)*X2 - X3
    CHECK(coeff_g(2, 1, 2, 0) == -(t(1) + t(3)));
    CHECK(coeff_g(2, 1, 3, 0) == SPoly(-1));
    // forced by the vanishing of P_{1,1}(x|t) together with P_1^2 = P_2:
    // the linear coefficient is -(t1+t2), not +(t1+t2) as some displays of
    // the n = 2 relations print it.
    CHECK(coeff_g(1, 1, 1, 0) == -(t(1) + t(2)));
    CHECK(coeff_g(1, 1, 2, 0) == SPoly(-1));
    // the same-degree same-length pair carries the factor 2
    CHECK(coeff_g(2, 2, 2, 1) == Int(-2) * t(3));
    CHECK(coeff_g(2, 2, 3, 0) == t(1) + t(2) + t(3) + t(4));
}

TEST_CASE("f coefficients, pinned values") {
    CHECK(coeff_f(1, 1, 1, 0) == Int(-2) * t(1));
    CHECK(coeff_f(1, 1, 2, 0) == SPoly(-2));
    // truncated at rank 2 this is the X2-coefficient 2(t1t2 + t2^2)
    CHECK(truncate_t(coeff_f(2, 2, 2, 0), 2) == Int(2) * (t(1) * t(2) + t(2) * t(2)));
    CHECK(coeff_f(2, 2, 4, 0) == SPoly(2));
    CHECK(coeff_f(2, 2, 2, 1) == Int(-2) * t(2));
}

TEST_CASE("one-row expansions") {
    CHECK(onerow(0, SchurFamily::P) == SPoly(1));
    CHECK(onerow(1, SchurFamily::P) == P(1));
    CHECK(onerow(2, SchurFamily::P) == P(2) - (t(1) + t(2)) * P(1));
    // all t-coefficients vanish at t = 0
    CHECK(truncate_t(onerow(3, SchurFamily::P), 0) == P(3));
    // the Q-family shifts the parameter alphabet down by one
    CHECK(onerow(1, SchurFamily::Q) == Q(1));
    CHECK(onerow(2, SchurFamily::Q) == Q(2) - t(1) * Q(1));
    CHECK(onerow(3, SchurFamily::Q) == Q(3) - (t(1) + t(2)) * Q(2) + t(1) * t(2) * Q(1));
}

TEST_CASE("two-row expansion, pinned example") {
    // P_{2,1}(x|t) = P_2(x|t)P_1(x|t) - P_3(x|t) - (t1+t3)P_2(x|t)
    SPoly expected = onerow(2, SchurFamily::P) * onerow(1, SchurFamily::P) -
                     onerow(3, SchurFamily::P) -
                     (t(1) + t(3)) * onerow(2, SchurFamily::P);
    CHECK(tworow(2, 1, SchurFamily::P) == expected);
    CHECK(tworow(3, 0, SchurFamily::P) == onerow(3, SchurFamily::P));
    // antisymmetry convention
    CHECK(tworow(1, 2, SchurFamily::P) == -tworow(2, 1, SchurFamily::P));
    CHECK(tworow(1, 2, SchurFamily::Q) == -tworow(2, 1, SchurFamily::Q));
}

TEST_CASE("shifted one-row closed forms") {
    // k = 0 is the ordinary generator
    CHECK(shifted_onerow_x2(3, 0) == Int(2) * P(3));
    // the diagonal shift: 2P_k^{(k)} = 2P_k(x|t) + (-1)^k e_k(t_1..t_k)
    for (unsigned k = 1; k <= 4; ++k) {
        SPoly ek = elementary_symmetric(k, t_range(1, static_cast<int>(k)));
        SPoly expect = Int(2) * onerow(k, SchurFamily::P) + ((k % 2 == 0) ? ek : -ek);
        CHECK(shifted_onerow_x2(k, k) == expect);
    }
    // one step above the diagonal: 2P_{k+1}^{(k)} = 2P_{k+1}(x|t) + 2h_1(t_{k+1})P_k(x|t)
    for (unsigned k = 1; k <= 3; ++k) {
        SPoly expect = Int(2) * onerow(k + 1, SchurFamily::P) +
                       Int(2) * t(k + 1) * onerow(k, SchurFamily::P);
        CHECK(shifted_onerow_x2(k + 1, k) == expect);
    }
    // one step below: the constant carries e_{k-1} of the full alphabet
    // (2P_1^{(2)} = 2P_1(x|t) - e_1(t1,t2), matching the generating series)
    CHECK(shifted_onerow_x2(1, 2) == Int(2) * P(1) - t(1) - t(2));
}

TEST_CASE("quadratic relation in shifted classes, k = 1 reduces to zero") {
    // P_1^2 - e_1(t1)P_1 - P_2^{(1)} collapses through P_1^2 = P_2 on the grid
    CheckResult r = identity_check("A-relation k=1", appendix_relation_x4(1), SPoly::zero(), 2);
    CHECK(r.pass);
}

TEST_CASE("t = 0 reduction of the quadratic relation") {
    // 4(P_k^2 + 2 sum (-1)^j P_{k+j}P_{k-j} + (-1)^k P_{2k}) at t = 0
    for (unsigned k = 1; k <= 3; ++k) {
        SPoly reduced = truncate_t(appendix_relation_x4(k), 0);
        SPoly expect = Int(4) * P(k) * P(k);
        for (unsigned j = 1; j < k; ++j) {
            SPoly term = Int(8) * P(k + j) * P(k - j);
            expect += (j % 2 == 0) ? term : -term;
        }
        SPoly last = Int(4) * P(2 * k);
        expect += (k % 2 == 0) ? last : -last;
        CHECK(reduced == expect);
    }
}

TEST_CASE("vanishing identities resolve the printed sign discrepancy") {
    // Authoritative resolver: with the recurrence coefficients as implemented
    // the two-row at k = l vanishes identically on the oracle grid, for both
    // families.  (Some displays of the rank-2 relations flip the odd-degree
    // coefficient terms; those variants fail this exact test.)
    for (unsigned i = 1; i <= 3; ++i) {
        CHECK(identity_check("P-vanish", tworow(i, i, SchurFamily::P), SPoly::zero(), 2 * i)
                  .pass);
        CHECK(identity_check("Q-vanish", tworow(i, i, SchurFamily::Q), SPoly::zero(), 2 * i)
                  .pass);
    }
}
