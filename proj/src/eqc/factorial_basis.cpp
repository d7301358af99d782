#include "eqc/factorial_basis.hpp"

#include <stdexcept>

#include "eqc/symmetric.hpp"

namespace eqc {

std::vector<std::pair<unsigned, unsigned>> index_set(unsigned k, unsigned l) {
    if (k < l || l < 1) throw std::invalid_argument("index_set needs k >= l >= 1");
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned r = k; r <= k + l; ++r)
        for (unsigned s = 0; s <= l; ++s) {
            if (r + s > k + l) continue;
            if (r == k && s == l) continue;
            out.emplace_back(r, s);
        }
    return out;
}

static SPoly signed_coeff(int sign_exp, unsigned factor2, unsigned m, std::vector<VarId> xs,
                          std::vector<VarId> ys) {
    SPoly h = h_super(m, xs, ys);
    Int c = (sign_exp % 2 == 0) ? Int(1) : Int(-1);
    c *= Int(factor2);
    return h.scale(c);
}

SPoly coeff_g(unsigned k, unsigned l, unsigned r, unsigned s) {
    unsigned m = k + l - r - s;
    if (s >= 1)
        return signed_coeff(static_cast<int>(l - s), 2, m, t_range(k + 1, r + 1),
                            t_range(s + 2, l));
    return signed_coeff(static_cast<int>(l), 1, m, t_range(k + 1, r + 1), t_range(1, l));
}

SPoly coeff_f(unsigned k, unsigned l, unsigned r, unsigned s) {
    unsigned m = k + l - r - s;
    return signed_coeff(static_cast<int>(l - s), 2, m, t_range(k, r), t_range(s + 1, l - 1));
}

SPoly onerow(unsigned i, SchurFamily fam) {
    if (i == 0) return SPoly(1);
    SPoly out;
    unsigned t_hi = (fam == SchurFamily::P) ? i : i - 1;
    auto tv = t_range(1, static_cast<int>(t_hi));
    for (unsigned j = 0; j < i; ++j) {
        SPoly ej = elementary_symmetric(j, tv);
        if (ej.is_zero()) continue;
        if (j % 2 == 1) ej = -ej;
        VarId gen = (fam == SchurFamily::P) ? VarId::pbar(i - j) : VarId::qbar(i - j);
        out += ej * SPoly::variable(gen);
    }
    return out;
}

SPoly tworow(unsigned k, unsigned l, SchurFamily fam) {
    if (l == 0) return onerow(k, fam);
    if (k == 0) return -onerow(l, fam);
    if (k < l) return -tworow(l, k, fam);
    SPoly out = onerow(k, fam) * onerow(l, fam);
    for (auto [r, s] : index_set(k, l)) {
        SPoly c = coeff(fam, k, l, r, s);
        if (c.is_zero()) continue;
        out += c * onerow(r, fam) * onerow(s, fam);
    }
    return out;
}

SPoly shifted_onerow_x2(unsigned i, unsigned k) {
    if (i == 0) throw std::invalid_argument("shifted one-row needs i >= 1");
    if (k == 0) return Int(2) * SPoly::variable(VarId::pbar(i));
    SPoly out;
    if (i > k) {
        unsigned j = i - k;
        // 2 P_{k+j}^{(k)} = 2 sum_{m=0}^{j} h_m(t_{k+1}..t_{k+j-m+1}) P_{k+j-m}(x|t)
        for (unsigned m = 0; m <= j; ++m) {
            SPoly hm = complete_homogeneous(m, t_range(k + 1, k + j - m + 1));
            if (hm.is_zero()) continue;
            out += hm * onerow(k + j - m, SchurFamily::P);
        }
        out = Int(2) * out;
    } else {
        unsigned j = k - i;
        // 2 P_i^{(k)} = 2 sum_{m=0}^{i-1} (-1)^m e_m(t_{i-m+2}..t_k) P_{i-m}(x|t)
        //               + (-1)^i e_i(t_1..t_k)
        // The constant term carries e_i of the full alphabet (the diagonal
        // case i = k is the familiar half-e_k shift); checked against the
        // generating series on the oracle grid.
        for (unsigned m = 0; m + j < k; ++m) {
            SPoly em = elementary_symmetric(m, t_range(static_cast<int>(k - j - m) + 2,
                                                       static_cast<int>(k)));
            if (em.is_zero()) continue;
            if (m % 2 == 1) em = -em;
            out += em * onerow(k - j - m, SchurFamily::P);
        }
        out = Int(2) * out;
        SPoly ei = elementary_symmetric(i, t_range(1, static_cast<int>(k)));
        out += (i % 2 == 0) ? ei : -ei;
    }
    return out;
}

SPoly appendix_relation_x4(unsigned k) {
    if (k == 0) throw std::invalid_argument("relation index must be >= 1");
    SPoly pk = onerow(k, SchurFamily::P);
    SPoly ek = elementary_symmetric(k, t_range(1, static_cast<int>(k)));
    SPoly out = Int(4) * pk * pk;
    out += Int(k % 2 == 0 ? 4 : -4) * ek * pk;
    for (unsigned i = 1; i < k; ++i) {
        SPoly prod = shifted_onerow_x2(k - i, k) * shifted_onerow_x2(k + i, k);
        out += Int(i % 2 == 0 ? 2 : -2) * prod;
    }
    out += Int(k % 2 == 0 ? 2 : -2) * shifted_onerow_x2(2 * k, k);
    return out;
}

SPoly appendix_tworow_x4(unsigned k, unsigned l) {
    if (!(k > l && l >= 1)) throw std::invalid_argument("appendix two-row needs k > l >= 1");
    SPoly ek = elementary_symmetric(k, t_range(1, static_cast<int>(k)));
    SPoly el = elementary_symmetric(l, t_range(1, static_cast<int>(l)));
    SPoly left = shifted_onerow_x2(k, k) - ((k % 2 == 0) ? ek : -ek);
    SPoly right = shifted_onerow_x2(l, l) + ((l % 2 == 0) ? el : -el);
    SPoly out = left * right;
    for (unsigned j = 1; j < l; ++j) {
        SPoly prod = shifted_onerow_x2(k + j, k) * shifted_onerow_x2(l - j, l);
        out += Int(j % 2 == 0 ? 2 : -2) * prod;
    }
    out += Int(l % 2 == 0 ? 2 : -2) * shifted_onerow_x2(k + l, k);
    return out;
}

}  // namespace eqc
