#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eqc {

// Exact arithmetic carriers for the whole engine.  Structure constants and
// relation coefficients live in Z; the symmetrization oracle and the
// Chevalley-recursion multiplier work over Q.
using Int = mpz_class;
using Rat = mpq_class;

// Raised when a runtime invariant that encodes a mathematical theorem fails
// (non-exact halving, non-unitriangular basis change, non-integral structure
// constant).  The CLI maps it to exit code 3.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw internal_error("non-exact integer division: " + a.get_str() + " / " + b.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace eqc
