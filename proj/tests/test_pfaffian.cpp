#include <doctest.h>

#include <random>

#include "eqc/pfaffian.hpp"
#include "eqc/spoly.hpp"

using namespace eqc;

namespace {

SPoly entry_symbol(unsigned i, unsigned j) { return SPoly::variable(VarId::entry(i, j)); }

// Laplace-expansion determinant of the full skew matrix built from the same
// integer entries, the classical Pf(A)^2 = det(A) cross-check.
Int det_int(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return Int(1);
    Int total(0);
    for (size_t k = 0; k < n; ++k) {
        if (m[0][k] == 0) continue;
        std::vector<std::vector<Int>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (size_t c = 0; c < n; ++c)
                if (c != k) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        Int term = m[0][k] * det_int(minor);
        total += (k % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace

TEST_CASE("small Pfaffians") {
    CHECK(pfaffian(0, entry_symbol) == SPoly(1));
    CHECK(pfaffian(2, entry_symbol) == entry_symbol(0, 1));
    SPoly pf4 = pfaffian(4, entry_symbol);
    SPoly expected = entry_symbol(0, 1) * entry_symbol(2, 3) -
                     entry_symbol(0, 2) * entry_symbol(1, 3) +
                     entry_symbol(0, 3) * entry_symbol(1, 2);
    CHECK(pf4 == expected);
    CHECK_THROWS_AS(pfaffian(3, entry_symbol), std::invalid_argument);
}

TEST_CASE("Pf(A)^2 = det(A) on random integer skew matrices") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> pick(-5, 5);
    for (int round = 0; round < 25; ++round) {
        std::vector<std::vector<Int>> m(4, std::vector<Int>(4, Int(0)));
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j) {
                Int v(pick(rng));
                m[i][j] = v;
                m[j][i] = -v;
            }
        SPoly pf = pfaffian(4, [&](unsigned i, unsigned j) { return SPoly::constant(m[i][j]); });
        REQUIRE(pf.is_constant());
        Int p = pf.constant_value();
        CHECK(p * p == det_int(m));
    }
}

TEST_CASE("memoized and plain expansions agree") {
    for (unsigned r : {4u, 6u, 8u}) {
        SPoly a = pfaffian(r, entry_symbol, true);
        SPoly b = pfaffian(r, entry_symbol, false);
        CHECK(a == b);
    }
}

TEST_CASE("class polynomial shapes") {
    auto entry = [](unsigned k, unsigned l) { return entry_symbol(k, l); };
    CHECK(class_polynomial(StrictPartition(), entry) == SPoly(1));
    CHECK(class_polynomial(StrictPartition({3}), entry) == entry_symbol(3, 0));
    CHECK(class_polynomial(StrictPartition({2, 1}), entry) == entry_symbol(2, 1));
    // (3,2,1): E(3,2)E(1,0) - E(3,1)E(2,0) + E(3,0)E(2,1)
    SPoly expected = entry_symbol(3, 2) * entry_symbol(1, 0) -
                     entry_symbol(3, 1) * entry_symbol(2, 0) +
                     entry_symbol(3, 0) * entry_symbol(2, 1);
    CHECK(class_polynomial(StrictPartition({3, 2, 1}), entry) == expected);
}

TEST_CASE("padded first-row expansion equals the alternating odd form") {
    auto entry = [](unsigned k, unsigned l) { return entry_symbol(k, l); };
    for (const auto& lambda :
         {StrictPartition({3, 2, 1}), StrictPartition({4, 2, 1}), StrictPartition({4, 3, 1}),
          StrictPartition({5, 2, 1}), StrictPartition({5})}) {
        CHECK(class_polynomial(lambda, entry) == class_polynomial_odd_form(lambda, entry));
    }
    CHECK_THROWS_AS(class_polynomial_odd_form(StrictPartition({2, 1}), entry),
                    std::invalid_argument);
}
