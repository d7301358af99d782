#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eqc/numeric.hpp"
#include "eqc/variables.hpp"

namespace eqc {

// Sparse exponent vector, sorted by VarId.  The structural ordering (used as
// the map key order) is the lexicographic order on the sorted entry list; it
// is deterministic but has no algebraic meaning.  Monomial orders with
// algebraic content (graded revlex for rewriting, plain lex for exact
// division) are provided as separate comparators.
class Monomial {
  public:
    using Entry = std::pair<VarId, uint32_t>;

    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial var(VarId v, uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.e_.emplace_back(v, e);
        return m;
    }

    bool is_one() const { return e_.empty(); }
    std::span<const Entry> entries() const { return e_; }

    uint32_t exponent(VarId v) const {
        auto it = std::lower_bound(e_.begin(), e_.end(), v,
                                   [](const Entry& a, VarId b) { return a.first < b; });
        return (it != e_.end() && it->first == v) ? it->second : 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.e_.reserve(e_.size() + o.e_.size());
        auto a = e_.begin(), b = o.e_.begin();
        while (a != e_.end() && b != o.e_.end()) {
            if (a->first < b->first)
                r.e_.push_back(*a++);
            else if (b->first < a->first)
                r.e_.push_back(*b++);
            else {
                r.e_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        r.e_.insert(r.e_.end(), a, e_.end());
        r.e_.insert(r.e_.end(), b, o.e_.end());
        return r;
    }

    bool divisible_by(const Monomial& o) const {
        for (const auto& [v, e] : o.e_)
            if (exponent(v) < e) return false;
        return true;
    }

    // Requires divisibility.
    Monomial divide(const Monomial& o) const {
        Monomial r;
        auto a = e_.begin(), b = o.e_.begin();
        while (a != e_.end()) {
            if (b == o.e_.end() || a->first < b->first)
                r.e_.push_back(*a++);
            else {
                if (a->second > b->second) r.e_.emplace_back(a->first, a->second - b->second);
                ++a, ++b;
            }
        }
        return r;
    }

    int degree(const DegreeTable& deg) const {
        int d = 0;
        for (const auto& [v, e] : e_) d += deg(v) * static_cast<int>(e);
        return d;
    }

    // Total degree counting only variables accepted by the filter, each with
    // weight one (the ordering grading of the rewriting engine).
    template <class Filter>
    int plain_degree(Filter&& keep) const {
        int d = 0;
        for (const auto& [v, e] : e_)
            if (keep(v)) d += static_cast<int>(e);
        return d;
    }

    template <class Filter>
    Monomial filtered(Filter&& keep) const {
        Monomial r;
        for (const auto& [v, e] : e_)
            if (keep(v)) r.e_.emplace_back(v, e);
        return r;
    }

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

  private:
    std::vector<Entry> e_;
};

// Graded reverse lexicographic comparison with every variable of ordering
// weight one and ascending significance = ascending VarId (so q < X1 < X2
// < ...).  Returns true when a > b.  This is the rewriting order of the
// quotient-ring engine and the display order.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    auto all = [](VarId) { return true; };
    int da = a.plain_degree(all), db = b.plain_degree(all);
    if (da != db) return da > db;
    auto ea = a.entries(), eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first == eb[j].first) {
            if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second;
            ++i, ++j;
        } else if (ea[i].first < eb[j].first) {
            return false;  // a carries the least significant variable with a bigger exponent
        } else {
            return true;
        }
    }
    return j < eb.size();
}

// Plain lexicographic order with the smallest VarId most significant: a
// multiplicative total order, which is what exact polynomial division needs.
inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    auto ea = a.entries(), eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first == eb[j].first) {
            if (ea[i].second != eb[j].second) return ea[i].second <=> eb[j].second;
            ++i, ++j;
        } else if (ea[i].first < eb[j].first) {
            return std::strong_ordering::greater;  // a owns the more significant var
        } else {
            return std::strong_ordering::less;
        }
    }
    if (i < ea.size()) return std::strong_ordering::greater;
    if (j < eb.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

inline Rat coeff_div(const Rat& a, const Rat& b) {
    if (b == 0) throw internal_error("division by zero");
    return a / b;
}
inline Int coeff_div(const Int& a, const Int& b) { return exact_div(a, b); }

// Exact sparse multivariate polynomial with coefficients C (Int or Rat).
// Terms with zero coefficient are never stored; equality is structural and
// iteration order is deterministic.
template <class C>
class Poly {
  public:
    Poly() = default;
    explicit Poly(C c) { add_term(Monomial::one(), std::move(c)); }
    explicit Poly(int v) : Poly(C(v)) {}
    static Poly zero() { return Poly(); }
    static Poly constant(C c) {
        Poly p;
        p.add_term(Monomial::one(), std::move(c));
        return p;
    }
    static Poly variable(VarId v, uint32_t e = 1) {
        Poly p;
        p.add_term(Monomial::var(v, e), C(1));
        return p;
    }
    static Poly term(Monomial m, C c) {
        Poly p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    C constant_value() const {
        auto it = t_.find(Monomial::one());
        return it == t_.end() ? C(0) : it->second;
    }

    C coefficient(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C(0) : it->second;
    }

    void add_term(const Monomial& m, C c) {
        if (c == 0) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const C& c) {
        if (c == 0) {
            t_.clear();
            return *this;
        }
        for (auto& [m, v] : t_) v *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const C& c) { return a.scale(c); }
    friend Poly operator*(const C& c, Poly a) { return a.scale(c); }

    Poly pow(uint32_t k) const {
        Poly r = constant(C(1));
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            k >>= 1;
            if (k > 0) base *= base;
        }
        return r;
    }

    // Over Int every coefficient must be divisible; over Rat this always
    // succeeds.
    Poly divide_exact_scalar(const C& d) const {
        Poly r;
        for (const auto& [m, c] : t_) r.t_.emplace(m, coeff_div(c, d));
        return r;
    }

    // Ring homomorphism determined by the bindings; unbound variables map to
    // themselves.
    Poly substitute(const std::map<VarId, Poly>& bindings) const {
        Poly result;
        for (const auto& [m, c] : t_) {
            Poly acc = constant(c);
            Monomial rest;
            for (const auto& [v, e] : m.entries()) {
                auto it = bindings.find(v);
                if (it == bindings.end())
                    rest = rest * Monomial::var(v, e);
                else
                    acc *= it->second.pow(e);
            }
            if (!rest.is_one()) acc = acc * Poly::term(rest, C(1));
            result += acc;
        }
        return result;
    }

    Poly rename(const std::function<VarId(VarId)>& f) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            Monomial nm;
            for (const auto& [v, e] : m.entries()) nm = nm * Monomial::var(f(v), e);
            r.add_term(nm, c);
        }
        return r;
    }

    template <class D, class F>
    Poly<D> map_coeff(F&& f) const {
        Poly<D> r;
        for (const auto& [m, c] : t_) r.add_term(m, f(c));
        return r;
    }

    std::optional<int> homogeneous_degree(const DegreeTable& deg) const {
        if (t_.empty()) return 0;
        std::optional<int> d;
        for (const auto& [m, c] : t_) {
            int dm = m.degree(deg);
            if (!d)
                d = dm;
            else if (*d != dm)
                return std::nullopt;
        }
        return d;
    }

    int degree(const DegreeTable& deg) const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.degree(deg));
        return d;
    }

    bool has_var(VarId v) const {
        for (const auto& [m, c] : t_)
            if (m.exponent(v) > 0) return true;
        return false;
    }

    template <class F>
    void for_each_var(F&& f) const {
        for (const auto& [m, c] : t_)
            for (const auto& [v, e] : m.entries()) f(v);
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

    // Leading term in the plain lex order; null for the zero polynomial.
    const Monomial* lex_leading(C& coeff_out) const {
        const Monomial* best = nullptr;
        for (const auto& [m, c] : t_)
            if (!best || lex_compare(m, *best) == std::strong_ordering::greater) best = &m;
        if (best) coeff_out = t_.find(*best)->second;
        return best;
    }

  private:
    std::map<Monomial, C> t_;
};

using SPoly = Poly<Int>;
using QPoly = Poly<Rat>;

inline QPoly to_qpoly(const SPoly& p) {
    return p.template map_coeff<Rat>([](const Int& c) { return Rat(c); });
}

// Fails if some coefficient is non-integral.
inline SPoly to_spoly_exact(const QPoly& p) {
    return p.template map_coeff<Int>([](const Rat& c) -> Int {
        if (!is_integer(c)) throw internal_error("non-integral coefficient: " + c.get_str());
        return c.get_num();
    });
}

// Exact division in the polynomial ring; throws internal_error when the
// quotient is not a polynomial.  Used where polynomiality of the quotient is
// a theorem (Chevalley-recursion multiplier), with the throw as the check.
template <class C>
Poly<C> divide_exact(Poly<C> num, const Poly<C>& den) {
    if (den.is_zero()) throw internal_error("polynomial division by zero");
    C dc;
    const Monomial* dm = den.lex_leading(dc);
    Poly<C> quot;
    while (!num.is_zero()) {
        C nc;
        const Monomial* nm = num.lex_leading(nc);
        if (!nm->divisible_by(*dm)) throw internal_error("non-exact polynomial division");
        Poly<C> qterm = Poly<C>::term(nm->divide(*dm), coeff_div(nc, dc));
        quot += qterm;
        num -= qterm * den;
    }
    return quot;
}

}  // namespace eqc
