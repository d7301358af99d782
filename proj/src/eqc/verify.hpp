#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eqc/schur_oracle.hpp"

namespace eqc {

// Named verification suites behind the `verify` CLI subcommand and the
// acceptance gate.
//
//   oracle-identities  two-row recurrence, vanishing identities, Pfaffian
//                      consistency, the factorial Chevalley rule, shifted
//                      one-row closed forms and the quadratic Chern-class
//                      relations, all certified against the symmetrization
//                      oracle on the deterministic grid
//   chevalley          schubert_product((1), -) against the closed-form
//                      expansions, both types, n = 1..4
//   associativity      ring sanity: unitriangular basis change, associativity
//                      on SP(3)^3 and seeded random SP(4) triples, dual-path
//                      products on SP(3)^2, the q = 0 coherence, grading
//   positivity         degree-zero constants are nonnegative integers;
//                      simple-root positivity report (type D verified
//                      convention; type C best effort)
struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name);

nlohmann::json suite_to_json(const SuiteResult& r);

}  // namespace eqc
