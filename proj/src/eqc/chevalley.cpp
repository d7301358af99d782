#include "eqc/chevalley.hpp"

#include "eqc/pfaffian.hpp"

namespace eqc {

ChevalleyExpansion chevalley_C(const StrictPartition& lambda, unsigned n) {
    ChevalleyExpansion e;
    for (const auto& mu : add_box_successors(lambda, n)) {
        int mult = (mu.length() == lambda.length()) ? 2 : 1;  // 2^{l(lambda)-l(mu)+1}
        e.boxes.emplace_back(mu, mult);
    }
    for (unsigned p : lambda.parts()) e.diagonal += Int(2) * SPoly::variable(VarId::t(p));
    if (lambda.part(0) == n && n >= 1) {
        std::vector<unsigned> rest(lambda.parts().begin() + 1, lambda.parts().end());
        e.quantum = StrictPartition(rest);
    }
    return e;
}

ChevalleyExpansion chevalley_D(const StrictPartition& lambda, unsigned n) {
    ChevalleyExpansion e;
    for (const auto& mu : add_box_successors(lambda, n)) e.boxes.emplace_back(mu, 1);
    for (unsigned p : lambda.padded_parts()) e.diagonal += SPoly::variable(VarId::t(p + 1));
    // The second-row condition reads the even-padded shape, so for n = 1 the
    // single-row class (1) padded to (1,0) does carry a quantum term.
    if (n >= 1 && lambda.part(0) == n && lambda.part(1) == n - 1) {
        auto padded = lambda.padded_parts();
        std::vector<unsigned> rest(padded.begin() + 2, padded.end());
        e.quantum = StrictPartition(rest);  // trailing zero is stripped
    }
    return e;
}

SPoly class_gamma(const StrictPartition& lambda, SchurFamily fam) {
    return class_polynomial(lambda, [fam](unsigned k, unsigned l) { return tworow(k, l, fam); });
}

std::pair<SPoly, SPoly> factorial_chevalley_sides(const StrictPartition& lambda, SchurFamily fam) {
    SPoly cls = class_gamma(lambda, fam);
    SPoly lhs = onerow(1, fam) * cls;

    SPoly rhs;
    for (const auto& mu : add_box_successors_unbounded(lambda)) {
        Int mult(1);
        if (fam == SchurFamily::Q && mu.length() == lambda.length()) mult = 2;
        rhs += mult * class_gamma(mu, fam);
    }
    SPoly diag;
    if (fam == SchurFamily::P) {
        for (unsigned p : lambda.padded_parts()) diag += SPoly::variable(VarId::t(p + 1));
    } else {
        for (unsigned p : lambda.parts()) diag += Int(2) * SPoly::variable(VarId::t(p));
    }
    rhs += diag * cls;
    return {lhs, rhs};
}

}  // namespace eqc
