#pragma once

#include <span>
#include <vector>

#include "eqc/spoly.hpp"

namespace eqc {

// Elementary and complete homogeneous symmetric polynomials over explicit
// variable lists, plus the supersymmetric combination
//     h_k(x|y) = sum_{i+j=k} h_i(x) e_j(y).
// Empty lists are legitimate inputs (index ranges like t_{s+2},...,t_l often
// collapse); e_0 = h_0 = 1 and e_j = h_i = 0 for j,i >= 1 on the empty list.

inline SPoly elementary_symmetric(unsigned j, std::span<const VarId> vars) {
    if (j == 0) return SPoly(1);
    if (j > vars.size()) return SPoly::zero();
    std::vector<SPoly> e(j + 1);
    e[0] = SPoly(1);
    for (VarId v : vars) {
        SPoly vp = SPoly::variable(v);
        for (size_t k = std::min<size_t>(j, e.size() - 1); k >= 1; --k) {
            if (!e[k - 1].is_zero()) e[k] += e[k - 1] * vp;
        }
    }
    return e[j];
}

inline SPoly complete_homogeneous(unsigned i, std::span<const VarId> vars) {
    if (i == 0) return SPoly(1);
    if (vars.empty()) return SPoly::zero();
    std::vector<SPoly> h(i + 1);
    h[0] = SPoly(1);
    for (VarId v : vars) {
        SPoly vp = SPoly::variable(v);
        // multiply the running generating series by 1/(1 - v z)
        for (size_t k = 1; k <= i; ++k) h[k] += h[k - 1] * vp;
    }
    return h[i];
}

inline SPoly h_super(unsigned k, std::span<const VarId> xs, std::span<const VarId> ys) {
    SPoly total;
    for (unsigned i = 0; i <= k; ++i) {
        SPoly hi = complete_homogeneous(i, xs);
        if (hi.is_zero()) continue;
        SPoly ej = elementary_symmetric(k - i, ys);
        if (ej.is_zero()) continue;
        total += hi * ej;
    }
    return total;
}

// The closed interval of t-variables t_lo,...,t_hi; empty when lo > hi.
inline std::vector<VarId> t_range(int lo, int hi) {
    std::vector<VarId> vars;
    for (int i = lo; i <= hi; ++i) vars.push_back(VarId::t(static_cast<uint32_t>(i)));
    return vars;
}

// Sets t_i = 0 for all i > bound.
inline SPoly truncate_t(const SPoly& p, unsigned bound) {
    std::map<VarId, SPoly> zeros;
    p.for_each_var([&](VarId v) {
        if (v.fam() == Fam::T && v.index() > bound) zeros.emplace(v, SPoly::zero());
    });
    return zeros.empty() ? p : p.substitute(zeros);
}

}  // namespace eqc
