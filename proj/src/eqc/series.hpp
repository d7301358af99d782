#pragma once

#include <span>
#include <vector>

#include "eqc/numeric.hpp"
#include "eqc/spoly.hpp"

namespace eqc {

// Truncated univariate power series in u with exact coefficients.  TV is Rat
// for plain point evaluation and QPoly when the t-parameters stay symbolic.
// Coefficient k of a product depends only on coefficients <= k of the
// factors, so truncation commutes with multiplication.
template <class TV>
struct TruncSeries {
    std::vector<TV> c;  // c[k] multiplies u^k; size = order+1

    explicit TruncSeries(unsigned order) : c(order + 1, TV(0)) {}
    static TruncSeries one(unsigned order) {
        TruncSeries s(order);
        s.c[0] = TV(1);
        return s;
    }
    unsigned order() const { return static_cast<unsigned>(c.size()) - 1; }

    // Multiply by (1 + a*u) in place.
    void mul_linear(const TV& a) {
        for (size_t k = c.size(); k-- > 1;) c[k] += a * c[k - 1];
    }

    // Multiply by 1/(1 - a*u) = sum a^k u^k in place.
    void mul_geometric_inv(const TV& a) {
        for (size_t k = 1; k < c.size(); ++k) c[k] += a * c[k - 1];
    }

    TruncSeries operator*(const TruncSeries& o) const {
        TruncSeries r(order());
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == TV(0)) continue;
            for (size_t j = 0; i + j < c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }
};

// prod_i (1 + x_i u)/(1 - x_i u) = 1 + sum_{k>=1} 2 P_k(x) u^k.
template <class TV>
TruncSeries<TV> q_series(std::span<const Rat> xs, unsigned order) {
    auto s = TruncSeries<TV>::one(order);
    for (const Rat& x : xs) {
        s.mul_linear(TV(x));
        s.mul_geometric_inv(TV(x));
    }
    return s;
}

}  // namespace eqc
