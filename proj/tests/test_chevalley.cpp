#include <doctest.h>

#include "eqc/chevalley.hpp"
#include "eqc/schur_oracle.hpp"

using namespace eqc;

namespace {
SPoly t(unsigned i) { return SPoly::variable(VarId::t(i)); }
}  // namespace

TEST_CASE("type D expansions") {
    // lambda = (1), n >= 2: one box (2), diagonal t2 + t1 (padded), no q-term
    ChevalleyExpansion e = chevalley_D(StrictPartition({1}), 2);
    REQUIRE(e.boxes.size() == 1);
    CHECK(e.boxes[0].first == StrictPartition({2}));
    CHECK(e.boxes[0].second == 1);
    CHECK(e.diagonal == t(2) + t(1));
    CHECK(!e.quantum.has_value());

    // lambda = (2,1), n = 2: no boxes, diagonal t3 + t2, quantum term at ()
    ChevalleyExpansion f = chevalley_D(StrictPartition({2, 1}), 2);
    CHECK(f.boxes.empty());
    CHECK(f.diagonal == t(3) + t(2));
    REQUIRE(f.quantum.has_value());
    CHECK(*f.quantum == StrictPartition());

    // empty class
    ChevalleyExpansion g = chevalley_D(StrictPartition(), 2);
    REQUIRE(g.boxes.size() == 1);
    CHECK(g.boxes[0].first == StrictPartition({1}));
    CHECK(g.diagonal.is_zero());
    CHECK(!g.quantum.has_value());

    // n = 1: the padded second row makes (1) carry the quantum term
    ChevalleyExpansion h = chevalley_D(StrictPartition({1}), 1);
    REQUIRE(h.quantum.has_value());
    CHECK(*h.quantum == StrictPartition());
}

TEST_CASE("type C expansions") {
    // lambda = (1), n = 2: box (2) with multiplicity 2, diagonal 2t1
    ChevalleyExpansion e = chevalley_C(StrictPartition({1}), 2);
    REQUIRE(e.boxes.size() == 1);
    CHECK(e.boxes[0].first == StrictPartition({2}));
    CHECK(e.boxes[0].second == 2);
    CHECK(e.diagonal == Int(2) * t(1));
    CHECK(!e.quantum.has_value());

    // lambda = (2), n = 2: new-row box (2,1) with multiplicity 1, q-term
    ChevalleyExpansion f = chevalley_C(StrictPartition({2}), 2);
    REQUIRE(f.boxes.size() == 1);
    CHECK(f.boxes[0].first == StrictPartition({2, 1}));
    CHECK(f.boxes[0].second == 1);
    CHECK(f.diagonal == Int(2) * t(2));
    REQUIRE(f.quantum.has_value());
    CHECK(*f.quantum == StrictPartition());

    ChevalleyExpansion g = chevalley_C(StrictPartition(), 2);
    REQUIRE(g.boxes.size() == 1);
    CHECK(g.boxes[0].second == 1);
    CHECK(g.diagonal.is_zero());
}

TEST_CASE("quantum term degree bookkeeping") {
    // the q-term is present exactly when |lambda| + 1 = |lambda^-| + deg q
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& lambda : enumerate_SP(n)) {
            ChevalleyExpansion c = chevalley_C(lambda, n);
            if (c.quantum)
                CHECK(lambda.weight() + 1 == c.quantum->weight() + (n + 1));
            ChevalleyExpansion d = chevalley_D(lambda, n);
            if (d.quantum)
                CHECK(lambda.weight() + 1 == d.quantum->weight() + 2 * n);
        }
    }
}

TEST_CASE("factorial Chevalley identity on the grid, small cases") {
    // P: P_1 * P_(1) = P_(2) + (t2+t1) P_(1)
    auto [lp, rp] = factorial_chevalley_sides(StrictPartition({1}), SchurFamily::P);
    CHECK(identity_check("factorial Chevalley P(1)", lp, rp, 2).pass);
    // Q: Q_1 Q_1 = 2 Q_2 + 2 t1 Q_1
    auto [lq, rq] = factorial_chevalley_sides(StrictPartition({1}), SchurFamily::Q);
    CHECK(identity_check("factorial Chevalley Q(1)", lq, rq, 2).pass);
    // empty class: P_1 * 1 = P_(1)
    auto [le, re] = factorial_chevalley_sides(StrictPartition(), SchurFamily::P);
    CHECK(le == re);
}
