#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "eqc/spoly.hpp"

namespace eqc {

// Canonical text form.  Terms are grouped by their "main" monomial (q, X, P,
// Q, x, entry symbols) with the Z[t]-coefficient in front, parenthesized when
// it has more than one term:
//
//     X2*X1 - (t1+t3)*X2
//     X2^2 - 2*t2*X2*X1 - q*X1 + 2*(t1*t2+t2^2)*X2 + (t1+t2)*q
//
// Main monomials are ordered by decreasing graded reverse lexicographic order
// with q < X1 < X2 < ... (q counted with ordering weight one); inside a term
// q is printed first and generators follow in decreasing index.  Coefficient
// polynomials are printed compactly (no spaces), terms ordered by decreasing
// power of t1, then t2, and so on.
std::string to_string(const SPoly& p);
std::string to_string(const QPoly& p);

// Compact form for pure coefficient polynomials: "t2+t3", "2*t1", "-t1+3".
std::string coeff_to_string(const SPoly& p);

// Inverse of coeff_to_string (also accepts q and X/P/Q/x names).  Throws
// std::invalid_argument on malformed input.
SPoly parse_poly(std::string_view text);

// JSON form: list of {"coeff": "<decimal>", "mono": {"t1": e, ...}}.
nlohmann::json to_json(const SPoly& p);
SPoly spoly_from_json(const nlohmann::json& j);

}  // namespace eqc
