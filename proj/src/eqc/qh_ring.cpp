#include "eqc/qh_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqc/factorial_basis.hpp"
#include "eqc/pfaffian.hpp"
#include "eqc/spoly_io.hpp"
#include "eqc/symmetric.hpp"

namespace eqc {

namespace {

bool is_qx(VarId v) { return v.fam() == Fam::Quantum || v.fam() == Fam::Xgen; }

Monomial qx_part(const Monomial& m) { return m.filtered(is_qx); }
Monomial t_part(const Monomial& m) {
    return m.filtered([](VarId v) { return v.fam() == Fam::T; });
}

// Quantum substitution on a polynomial in X_1..X_{2n} (type-dependent).
SPoly quantum_substitute(const SPoly& p, LieType type, unsigned n, bool classical) {
    if (type == LieType::D) {
        std::map<VarId, SPoly> bind;
        for (unsigned j = n + 1; j <= 2 * n - 1; ++j) bind.emplace(VarId::X(j), SPoly::zero());
        SPoly image = classical ? SPoly::zero()
                                : (n % 2 == 1 ? SPoly::variable(VarId::q())
                                              : -SPoly::variable(VarId::q()));
        bind.emplace(VarId::X(2 * n), image);
        return p.substitute(bind);
    }
    // Type C: X_{n+2} = ... = X_{2n} = 0 first, then 2 X_{n+1} = q with the
    // exact-halving check.
    std::map<VarId, SPoly> bind;
    for (unsigned j = n + 2; j <= 2 * n; ++j) bind.emplace(VarId::X(j), SPoly::zero());
    SPoly mid = p.substitute(bind);
    VarId xq = VarId::X(n + 1);
    SPoly out;
    for (const auto& [m, c] : mid) {
        uint32_t e = m.exponent(xq);
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        if (e > 1) throw internal_error("unexpected X_{n+1} power in a quadratic relation");
        if (classical) continue;  // X_{n+1} -> 0
        if (mpz_odd_p(c.get_mpz_t()))
            throw internal_error("odd coefficient on an X_{n+1} monomial; exact halving failed");
        Monomial rest = m.divide(Monomial::var(xq)) * Monomial::var(VarId::q());
        out.add_term(rest, c / 2);
    }
    return out;
}

SPoly xgen_or_one(unsigned i) { return i == 0 ? SPoly(1) : SPoly::variable(VarId::X(i)); }

// Two-row entry X_{k,l} in the quotient presentation.
SPoly ring_two_row(unsigned k, unsigned l, const RingContext& ctx) {
    SchurFamily fam = ctx.type == LieType::C ? SchurFamily::Q : SchurFamily::P;
    if (l == 0 && k == 0) return SPoly(1);
    if (l == 0) return xgen_or_one(k);
    SPoly raw = xgen_or_one(k) * xgen_or_one(l);
    for (auto [r, s] : index_set(k, l)) {
        SPoly c = coeff(fam, k, l, r, s);
        if (c.is_zero()) continue;
        raw += c * xgen_or_one(r) * xgen_or_one(s);
    }
    raw = truncate_t(raw, ctx.t_trunc);
    return quantum_substitute(raw, ctx.type, ctx.n, ctx.classical);
}

}  // namespace

size_t RingContext::index(const StrictPartition& lambda) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), lambda, CanonicalLess{});
    if (it == basis.end() || !(*it == lambda))
        throw std::invalid_argument("partition " + lambda.to_string() + " is not in SP(" +
                                    std::to_string(n) + ")");
    return static_cast<size_t>(it - basis.begin());
}

RingContext build_context(LieType type, unsigned n, bool classical) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    RingContext ctx;
    ctx.type = type;
    ctx.n = n;
    ctx.classical = classical;
    ctx.t_trunc = (type == LieType::C) ? n : n + 1;
    ctx.deg_q = (type == LieType::C) ? n + 1 : 2 * n;
    ctx.basis = enumerate_SP(n);

    SchurFamily fam = (type == LieType::C) ? SchurFamily::Q : SchurFamily::P;
    for (unsigned i = 1; i <= n; ++i) {
        SPoly rel = SPoly::variable(VarId::X(i), 2);
        for (auto [r, s] : index_set(i, i)) {
            SPoly c = coeff(fam, i, i, r, s);
            if (c.is_zero()) continue;
            rel += c * xgen_or_one(r) * xgen_or_one(s);
        }
        rel = truncate_t(rel, ctx.t_trunc);
        rel = quantum_substitute(rel, type, n, classical);

        auto deg = rel.homogeneous_degree(ctx.degrees());
        if (!deg || *deg != static_cast<int>(2 * i))
            throw internal_error("relation " + std::to_string(i) + " is not homogeneous of degree " +
                                 std::to_string(2 * i));
        // Leading monomial (graded revlex on q,X with ordering weight one)
        // must be X_i^2.
        Monomial lead;
        bool first = true;
        for (const auto& [m, c] : rel) {
            Monomial qx = qx_part(m);
            if (first || grevlex_greater(qx, lead)) lead = qx, first = false;
        }
        if (!(lead == Monomial::var(VarId::X(i), 2)))
            throw internal_error("relation " + std::to_string(i) + " does not lead with X_i^2");

        ctx.tails.push_back(SPoly::variable(VarId::X(i), 2) - rel);
        ctx.relations.push_back(std::move(rel));
    }
    return ctx;
}

namespace {

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(b, a); }
};

}  // namespace

SPoly normal_form(SPoly p, const RingContext& ctx) {
    // Terms grouped by their (q,X)-monomial, split into groups that still
    // contain some X_i^2 (pending, ordered by the rewriting order) and
    // square-free groups (done).  Each step rewrites the largest pending
    // monomial; every monomial it produces is strictly smaller, so the loop
    // terminates, and the strategy matches the one the basis-change
    // triangularity relies on.
    auto has_square = [&](const Monomial& qx) {
        for (unsigned i = 1; i <= ctx.n; ++i)
            if (qx.exponent(VarId::X(i)) >= 2) return true;
        return false;
    };
    std::map<Monomial, SPoly, GrevlexLess> pending, done;
    auto deposit = [&](const Monomial& full, const Int& c) {
        Monomial qx = qx_part(full);
        auto& slot = (has_square(qx) ? pending : done)[qx];
        slot.add_term(t_part(full), c);
    };
    for (const auto& [m, c] : p) deposit(m, c);

    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Monomial target = it->first;
        SPoly coeff_poly = std::move(it->second);
        pending.erase(it);
        if (coeff_poly.is_zero()) continue;

        unsigned i = ctx.n;
        while (target.exponent(VarId::X(i)) < 2) --i;
        Monomial cofactor = target.divide(Monomial::var(VarId::X(i), 2));
        SPoly replaced = coeff_poly * SPoly::term(cofactor, Int(1)) * ctx.tails[i - 1];
        for (const auto& [m, c] : replaced) deposit(m, c);
    }

    SPoly out;
    for (const auto& [qx, coeff] : done)
        for (const auto& [tm, c] : coeff) out.add_term(tm * qx, c);
    return out;
}

SPoly giambelli_class(const StrictPartition& lambda, const RingContext& ctx) {
    {
        std::lock_guard<std::mutex> lock(ctx.caches->mu);
        auto it = ctx.caches->giambelli.find(lambda.parts());
        if (it != ctx.caches->giambelli.end()) return it->second;
    }
    if (lambda.part(0) > ctx.n)
        throw std::invalid_argument("partition " + lambda.to_string() + " exceeds rank " +
                                    std::to_string(ctx.n));
    SPoly result = class_polynomial(
        lambda, [&](unsigned k, unsigned l) { return ring_two_row(k, l, ctx); });
    std::lock_guard<std::mutex> lock(ctx.caches->mu);
    ctx.caches->giambelli.emplace(lambda.parts(), result);
    return result;
}

namespace {

// Decompose a normal form into (basis index -> S[q] coefficient).
std::vector<SPoly> to_monomial_coords(const SPoly& nf, const RingContext& ctx) {
    std::vector<SPoly> coords(ctx.basis.size());
    for (const auto& [m, c] : nf) {
        std::vector<unsigned> parts;
        for (unsigned i = ctx.n; i >= 1; --i) {
            uint32_t e = m.exponent(VarId::X(i));
            if (e > 1) throw internal_error("normal form is not square-free");
            if (e == 1) parts.push_back(i);
            if (i == 1) break;
        }
        StrictPartition nu(parts);
        Monomial rest = m.filtered([](VarId v) { return v.fam() != Fam::Xgen; });
        coords[ctx.index(nu)].add_term(rest, c);
    }
    return coords;
}

Monomial basis_monomial(const StrictPartition& p) {
    Monomial m;
    for (unsigned v : p.parts()) m = m * Monomial::var(VarId::X(v));
    return m;
}

const std::pair<std::vector<std::vector<SPoly>>, std::vector<std::vector<SPoly>>>&
basis_change_matrices(const RingContext& ctx) {
    {
        std::lock_guard<std::mutex> lock(ctx.caches->mu);
        if (ctx.caches->basis_change) return *ctx.caches->basis_change;
    }
    const size_t dim = ctx.basis.size();
    // The triangularizing order is the rewriting order itself: plain graded
    // revlex on the square-free monomials X^mu (weight alone is not enough;
    // X_{2,1} legitimately contains the same-weight -X_3 once n >= 3, and
    // X_2 X_1 > X_3 because it has more factors).
    std::vector<size_t> order(dim);
    for (size_t i = 0; i < dim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return grevlex_greater(basis_monomial(ctx.basis[b]), basis_monomial(ctx.basis[a]));
    });
    std::vector<size_t> rank(dim);
    for (size_t pos = 0; pos < dim; ++pos) rank[order[pos]] = pos;

    std::vector<std::vector<SPoly>> C(dim);
    for (size_t li = 0; li < dim; ++li) {
        const auto& lambda = ctx.basis[li];
        C[li] = to_monomial_coords(normal_form(giambelli_class(lambda, ctx), ctx), ctx);
        // Unitriangularity and homogeneity checks (failures indicate a sign
        // or relation bug, so they are hard errors).
        for (size_t mi = 0; mi < dim; ++mi) {
            const SPoly& entry = C[li][mi];
            if (entry.is_zero()) continue;
            unsigned wl = lambda.weight(), wm = ctx.basis[mi].weight();
            if (mi == li) {
                if (!(entry == SPoly(1)))
                    throw internal_error("basis change diagonal entry is not 1 at " +
                                         lambda.to_string());
            } else if (rank[mi] >= rank[li]) {
                throw internal_error("basis change is not unitriangular at " +
                                     lambda.to_string() + " / " + ctx.basis[mi].to_string());
            }
            auto deg = entry.homogeneous_degree(ctx.degrees());
            if (!deg || wm > wl || *deg != static_cast<int>(wl - wm))
                throw internal_error("basis change entry is not homogeneous at " +
                                     lambda.to_string() + " / " + ctx.basis[mi].to_string());
        }
    }
    // Inverse by back-substitution along the triangularizing order:
    // D[l][v] = [l==v] - sum_{m != l} C[l][m] D[m][v].
    std::vector<std::vector<SPoly>> D(dim, std::vector<SPoly>(dim));
    for (size_t pos = 0; pos < dim; ++pos) {
        size_t li = order[pos];
        D[li][li] = SPoly(1);
        for (size_t vi = 0; vi < dim; ++vi) {
            if (vi == li) continue;
            SPoly acc;
            for (size_t mi = 0; mi < dim; ++mi) {
                if (mi == li || C[li][mi].is_zero() || D[mi][vi].is_zero()) continue;
                acc += C[li][mi] * D[mi][vi];
            }
            if (!acc.is_zero()) D[li][vi] = -acc;
        }
    }
    std::lock_guard<std::mutex> lock(ctx.caches->mu);
    if (!ctx.caches->basis_change) ctx.caches->basis_change.emplace(std::move(C), std::move(D));
    return *ctx.caches->basis_change;
}

}  // namespace

BasisChange basis_change(const RingContext& ctx) {
    const auto& pair = basis_change_matrices(ctx);
    return BasisChange{pair.first, pair.second};
}

std::vector<std::tuple<StrictPartition, unsigned, SPoly>> ClassExpansion::terms() const {
    std::vector<std::tuple<StrictPartition, unsigned, SPoly>> out;
    for (const auto& [nu, c] : coeff) {
        std::map<unsigned, SPoly> by_d;
        for (const auto& [m, v] : c) {
            unsigned d = m.exponent(VarId::q());
            Monomial rest = m.filtered([](VarId w) { return w.fam() != Fam::Quantum; });
            by_d[d].add_term(rest, v);
        }
        for (auto& [d, poly] : by_d) out.emplace_back(nu, d, std::move(poly));
    }
    return out;
}

ClassExpansion schubert_product(const StrictPartition& lambda, const StrictPartition& mu,
                                const RingContext& ctx) {
    auto key = std::make_pair(lambda.parts(), mu.parts());
    {
        std::lock_guard<std::mutex> lock(ctx.caches->mu);
        auto it = ctx.caches->products.find(key);
        if (it != ctx.caches->products.end()) {
            ClassExpansion exp;
            for (const auto& [parts, c] : it->second) exp.coeff.emplace(StrictPartition(parts), c);
            return exp;
        }
    }
    SPoly nf = normal_form(giambelli_class(lambda, ctx) * giambelli_class(mu, ctx), ctx);
    auto coords = to_monomial_coords(nf, ctx);
    BasisChange bc = basis_change(ctx);
    ClassExpansion exp;
    for (size_t vi = 0; vi < ctx.basis.size(); ++vi) {
        SPoly total;
        for (size_t mi = 0; mi < ctx.basis.size(); ++mi) {
            if (coords[mi].is_zero() || bc.from_monomial[mi][vi].is_zero()) continue;
            total += coords[mi] * bc.from_monomial[mi][vi];
        }
        if (!total.is_zero()) exp.coeff.emplace(ctx.basis[vi], std::move(total));
    }
    std::lock_guard<std::mutex> lock(ctx.caches->mu);
    auto& slot = ctx.caches->products[key];
    slot.clear();
    for (const auto& [nu, c] : exp.coeff) slot.emplace(nu.parts(), c);
    return exp;
}

// ---------------------------------------------------------------------------
// Chevalley-only multiplication.

namespace {

// Matrix of the operator sigma_1 * (-) in the Schubert basis, entries in
// Z[t][q].
std::vector<std::vector<SPoly>> chevalley_operator(const RingContext& ctx) {
    const size_t dim = ctx.basis.size();
    std::vector<std::vector<SPoly>> L(dim, std::vector<SPoly>(dim));
    for (size_t col = 0; col < dim; ++col) {
        ChevalleyExpansion e = chevalley(ctx.type, ctx.basis[col], ctx.n);
        for (const auto& [mu, mult] : e.boxes) L[ctx.index(mu)][col] += SPoly(mult);
        if (!e.diagonal.is_zero()) L[col][col] += e.diagonal;
        if (e.quantum) L[ctx.index(*e.quantum)][col] += SPoly::variable(VarId::q());
    }
    return L;
}

std::vector<SPoly> apply_operator(const std::vector<std::vector<SPoly>>& L,
                                  const std::vector<SPoly>& v) {
    const size_t dim = v.size();
    std::vector<SPoly> out(dim);
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
            if (L[r][c].is_zero() || v[c].is_zero()) continue;
            out[r] += L[r][c] * v[c];
        }
    return out;
}

// Fraction-free Bareiss determinant; intermediate divisions are exact by the
// Sylvester identity.
SPoly bareiss_det(std::vector<std::vector<SPoly>> M) {
    const size_t m = M.size();
    if (m == 0) return SPoly(1);
    SPoly prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < m; ++k) {
        if (M[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < m && M[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == m) return SPoly::zero();
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < m; ++i)
            for (size_t j = k + 1; j < m; ++j)
                M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
        prev = M[k][k];
    }
    return sign == 1 ? M[m - 1][m - 1] : -M[m - 1][m - 1];
}

// Cramer solution of V alpha = e_target: alpha_k = N_k / D with D = det V.
std::pair<std::vector<SPoly>, SPoly> solve_krylov(const std::vector<std::vector<SPoly>>& V,
                                                  size_t target) {
    const size_t dim = V.size();
    SPoly den = bareiss_det(V);
    if (den.is_zero())
        throw internal_error("Chevalley operator Krylov system is singular");
    std::vector<SPoly> nums(dim);
    for (size_t k = 0; k < dim; ++k) {
        auto Vk = V;
        for (size_t r = 0; r < dim; ++r) Vk[r][k] = (r == target) ? SPoly(1) : SPoly::zero();
        nums[k] = bareiss_det(std::move(Vk));
    }
    // Guard the determinant code: sum_k N_k * (column k of V) must equal
    // D * e_target.
    for (size_t r = 0; r < dim; ++r) {
        SPoly acc;
        for (size_t k = 0; k < dim; ++k) {
            if (nums[k].is_zero() || V[r][k].is_zero()) continue;
            acc += nums[k] * V[r][k];
        }
        SPoly expect = (r == target) ? den : SPoly::zero();
        if (!(acc == expect)) throw internal_error("Cramer validation failed");
    }
    return {std::move(nums), den};
}

}  // namespace

ClassExpansion multiply_via_chevalley(const StrictPartition& lambda, const StrictPartition& mu,
                                      const RingContext& ctx) {
    if (ctx.n > 3)
        throw std::invalid_argument(
            "the Chevalley-recursion multiplier is supported for rank <= 3");
    const size_t dim = ctx.basis.size();
    auto L = chevalley_operator(ctx);

    std::pair<std::vector<SPoly>, SPoly> solved;
    bool have = false;
    {
        std::lock_guard<std::mutex> lock(ctx.caches->mu);
        auto it = ctx.caches->chevalley_poly.find(lambda.parts());
        if (it != ctx.caches->chevalley_poly.end()) solved = it->second, have = true;
    }
    if (!have) {
        // Krylov matrix: columns L^k applied to the unit class.
        std::vector<SPoly> w(dim);
        w[ctx.index(StrictPartition())] = SPoly(1);
        std::vector<std::vector<SPoly>> V(dim, std::vector<SPoly>(dim));
        for (size_t k = 0; k < dim; ++k) {
            for (size_t r = 0; r < dim; ++r) V[r][k] = w[r];
            if (k + 1 < dim) w = apply_operator(L, w);
        }
        solved = solve_krylov(V, ctx.index(lambda));
        std::lock_guard<std::mutex> lock(ctx.caches->mu);
        ctx.caches->chevalley_poly.emplace(lambda.parts(), solved);
    }
    const auto& [nums, den] = solved;

    // sigma_lambda * sigma_mu = (1/D) sum_k N_k L^k e_mu.
    std::vector<SPoly> w(dim);
    w[ctx.index(mu)] = SPoly(1);
    std::vector<SPoly> acc(dim);
    for (size_t k = 0; k < dim; ++k) {
        if (!nums[k].is_zero())
            for (size_t r = 0; r < dim; ++r)
                if (!w[r].is_zero()) acc[r] += nums[k] * w[r];
        if (k + 1 < dim) w = apply_operator(L, w);
    }
    ClassExpansion exp;
    QPoly qden = to_qpoly(den);
    for (size_t r = 0; r < dim; ++r) {
        if (acc[r].is_zero()) continue;
        QPoly quotient = divide_exact(to_qpoly(acc[r]), qden);
        SPoly integral = to_spoly_exact(quotient);  // rule-transcription guard
        exp.coeff.emplace(ctx.basis[r], std::move(integral));
    }
    return exp;
}

ClassExpansion specialize(const ClassExpansion& exp, SpecializeMode mode, const RingContext& ctx) {
    ClassExpansion out;
    for (const auto& [nu, c] : exp.coeff) {
        SPoly image;
        switch (mode) {
            case SpecializeMode::Q0: {
                std::map<VarId, SPoly> bind{{VarId::q(), SPoly::zero()}};
                image = c.substitute(bind);
                break;
            }
            case SpecializeMode::T0: {
                std::map<VarId, SPoly> bind;
                c.for_each_var([&](VarId v) {
                    if (v.fam() == Fam::T) bind.emplace(v, SPoly::zero());
                });
                image = c.substitute(bind);
                break;
            }
            case SpecializeMode::TypeB: {
                if (ctx.type != LieType::D)
                    throw std::invalid_argument("the type B reduction applies to type D contexts");
                std::map<VarId, SPoly> bind{{VarId::t(1), SPoly::zero()}};
                image = c.substitute(bind).rename([](VarId v) {
                    if (v.fam() == Fam::T) return VarId::t(v.index() - 1);
                    return v;
                });
                break;
            }
        }
        if (!image.is_zero()) out.coeff.emplace(nu, std::move(image));
    }
    return out;
}

PositivityReport positivity_check(const ClassExpansion& exp, const RingContext& ctx) {
    // Express t_1..t_m in the simple-root coordinates z.
    const unsigned m = ctx.t_trunc;
    std::map<VarId, QPoly> bind;
    std::vector<QPoly> t_of_z(m + 1);
    if (ctx.type == LieType::D) {
        // z1 = t1+t2, z2 = t2-t1, z_j = t_j - t_{j-1} (j >= 3)
        t_of_z[1] = (QPoly::variable(VarId::root(1)) - QPoly::variable(VarId::root(2))) *
                    Rat(1, 2);
        if (m >= 2)
            t_of_z[2] = (QPoly::variable(VarId::root(1)) + QPoly::variable(VarId::root(2))) *
                        Rat(1, 2);
        for (unsigned j = 3; j <= m; ++j)
            t_of_z[j] = t_of_z[j - 1] + QPoly::variable(VarId::root(j));
    } else {
        // z1 = 2 t1, z_j = t_j - t_{j-1} (j >= 2); unverified convention
        t_of_z[1] = QPoly::variable(VarId::root(1)) * Rat(1, 2);
        for (unsigned j = 2; j <= m; ++j)
            t_of_z[j] = t_of_z[j - 1] + QPoly::variable(VarId::root(j));
    }

    PositivityReport report;
    report.convention_verified = (ctx.type == LieType::D);
    for (const auto& [nu, d, coeff] : exp.terms()) {
        PositivityEntry entry;
        entry.nu = nu;
        entry.d = d;
        entry.coeff = coeff;
        std::map<VarId, QPoly> local;
        coeff.for_each_var([&](VarId v) {
            if (v.fam() == Fam::T && v.index() <= m) local.emplace(v, t_of_z[v.index()]);
        });
        entry.root_form = to_qpoly(coeff).substitute(local);
        entry.nonneg_integers = true;
        for (const auto& [mono, c] : entry.root_form)
            if (!is_integer(c) || c < 0) entry.nonneg_integers = false;
        report.all_nonneg = report.all_nonneg && entry.nonneg_integers;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace eqc
