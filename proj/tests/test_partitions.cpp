#include <doctest.h>

#include <stdexcept>

#include "eqc/partitions.hpp"

using namespace eqc;

TEST_CASE("strict partition construction and validation") {
    CHECK(StrictPartition({3, 1}).weight() == 4);
    CHECK(StrictPartition({3, 1}).length() == 2);
    CHECK(StrictPartition().empty());
    CHECK(StrictPartition({4, 2, 1, 0}).length() == 3);  // trailing zero stripped
    CHECK_THROWS_AS(StrictPartition({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StrictPartition({1, 2}), std::invalid_argument);
}

TEST_CASE("padding to even length") {
    CHECK(StrictPartition({3, 2, 1}).padded_parts() == std::vector<unsigned>({3, 2, 1, 0}));
    CHECK(StrictPartition({3, 1}).padded_parts() == std::vector<unsigned>({3, 1}));
    CHECK(StrictPartition().padded_parts().empty());
}

TEST_CASE("text and parse round-trip") {
    CHECK(StrictPartition({3, 1}).to_string() == "3,1");
    CHECK(StrictPartition().to_string() == "");
    CHECK(StrictPartition::parse("3,1") == StrictPartition({3, 1}));
    CHECK(StrictPartition::parse("") == StrictPartition());
    CHECK_THROWS_AS(StrictPartition::parse("1,1"), std::invalid_argument);
    CHECK_THROWS_AS(StrictPartition::parse("a"), std::invalid_argument);
}

TEST_CASE("enumeration of SP(n)") {
    CHECK(enumerate_SP(0) == std::vector<StrictPartition>{StrictPartition()});
    auto sp2 = enumerate_SP(2);
    REQUIRE(sp2.size() == 4);
    CHECK(sp2[0] == StrictPartition());
    CHECK(sp2[1] == StrictPartition({1}));
    CHECK(sp2[2] == StrictPartition({2}));
    CHECK(sp2[3] == StrictPartition({2, 1}));
    CHECK(enumerate_SP(3).size() == 8);
    CHECK(enumerate_SP(6).size() == 64);
}

TEST_CASE("box successors") {
    CHECK(add_box_successors(StrictPartition(), 2) ==
          std::vector<StrictPartition>{StrictPartition({1})});
    CHECK(add_box_successors(StrictPartition({1}), 2) ==
          std::vector<StrictPartition>{StrictPartition({2})});  // (1,1) rejected
    CHECK(add_box_successors(StrictPartition({2, 1}), 2).empty());
    // unbounded sum allows growing the first row
    auto unbounded = add_box_successors_unbounded(StrictPartition({2, 1}));
    REQUIRE(unbounded.size() == 1);
    CHECK(unbounded[0] == StrictPartition({3, 1}));
}

TEST_CASE("successor relation is graded and lands inside SP(n)") {
    for (unsigned n = 1; n <= 5; ++n) {
        auto all = enumerate_SP(n);
        for (const auto& lambda : all) {
            for (const auto& mu : add_box_successors(lambda, n)) {
                CHECK(mu.weight() == lambda.weight() + 1);
                CHECK(mu.contains(lambda));
                CHECK(mu.part(0) <= n);
            }
        }
    }
}

TEST_CASE("Grassmannian permutation dictionary, worked examples") {
    // type C, n = 6: values -6 -3 1 2 4 5 correspond to (6,3)
    SignedPermutation w{{-6, -3, 1, 2, 4, 5}};
    CHECK(perm_to_partition(w, 6, LieType::C) == StrictPartition({6, 3}));
    CHECK(partition_to_perm(StrictPartition({6, 3}), 6, LieType::C).values == w.values);
    // a non-Grassmannian word is rejected
    SignedPermutation bad{{-3, -6, 2, 4, 5, 1}};
    CHECK_THROWS_AS(perm_to_partition(bad, 6, LieType::C), std::invalid_argument);

    // lambda = (4,2,1): type C gives -4 -2 -1 3, type D gives -5 -3 -2 -1 4
    StrictPartition lam({4, 2, 1});
    CHECK(partition_to_perm(lam, 4, LieType::C).values == std::vector<int>({-4, -2, -1, 3}));
    CHECK(partition_to_perm(lam, 4, LieType::D).values ==
          std::vector<int>({-5, -3, -2, -1, 4}));
}

TEST_CASE("Coxeter lengths") {
    SignedPermutation id{{1, 2, 3, 4}};
    CHECK(coxeter_length(id, LieType::C) == 0);
    StrictPartition lam({4, 2, 1});
    CHECK(coxeter_length(partition_to_perm(lam, 4, LieType::C), LieType::C) == 7);
    CHECK(coxeter_length(partition_to_perm(lam, 4, LieType::D), LieType::D) == 7);
}

TEST_CASE("length equals weight and the dictionary round-trips on all of SP(n)") {
    for (unsigned n = 1; n <= 5; ++n) {
        for (const auto& lambda : enumerate_SP(n)) {
            for (LieType type : {LieType::C, LieType::D}) {
                SignedPermutation w = partition_to_perm(lambda, n, type);
                CHECK(perm_to_partition(w, n, type) == lambda);
                CHECK(coxeter_length(w, type) == lambda.weight());
            }
        }
    }
}

TEST_CASE("type D parity is enforced") {
    // odd number of sign changes is not an even-orthogonal element
    SignedPermutation odd{{-2, 1, 3}};
    CHECK_THROWS_AS(perm_to_partition(odd, 2, LieType::D), std::invalid_argument);
}
