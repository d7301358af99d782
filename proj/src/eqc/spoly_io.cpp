#include "eqc/spoly_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace eqc {

namespace {

bool is_main_var(VarId v) { return v.fam() != Fam::T; }

// Coefficient display: decreasing powers of t1, then t2, ...
bool t_display_before(const Monomial& a, const Monomial& b) {
    auto ea = a.entries(), eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first == eb[j].first) {
            if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
            ++i, ++j;
        } else {
            return ea[i].first < eb[j].first;
        }
    }
    return i < ea.size();
}

std::string mono_string(const Monomial& m, bool main_part) {
    // Main part: q first, then generators by decreasing index; coefficient
    // part: t's by increasing index.
    std::vector<Monomial::Entry> ent(m.entries().begin(), m.entries().end());
    if (main_part) {
        std::stable_sort(ent.begin(), ent.end(), [](const auto& a, const auto& b) {
            bool qa = a.first.fam() == Fam::Quantum, qb = b.first.fam() == Fam::Quantum;
            if (qa != qb) return qa;
            return b.first < a.first;
        });
    }
    std::string s;
    for (const auto& [v, e] : ent) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string coeff_repr(const Int& c) { return c.get_str(); }
std::string coeff_repr(const Rat& c) { return c.get_str(); }
bool coeff_is_one(const Int& c) { return c == 1; }
bool coeff_is_one(const Rat& c) { return c == 1; }
bool coeff_negative(const Int& c) { return c < 0; }
bool coeff_negative(const Rat& c) { return c < 0; }

// Compact rendering of a pure coefficient polynomial ("t1*t2+t2^2", "-2*t1").
template <class C>
std::string compact_string(const Poly<C>& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, C>> terms(p.begin(), p.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return t_display_before(a.first, b.first); });
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& [m, c] = terms[i];
        bool neg = coeff_negative(c);
        C mag = neg ? C(-c) : c;
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        std::string ms = mono_string(m, false);
        if (ms.empty())
            out += coeff_repr(mag);
        else if (coeff_is_one(mag))
            out += ms;
        else
            out += coeff_repr(mag) + "*" + ms;
    }
    return out;
}

template <class C>
std::string full_string(const Poly<C>& p) {
    if (p.is_zero()) return "0";
    // Group terms by main monomial.
    std::map<Monomial, Poly<C>> groups;
    for (const auto& [m, c] : p) {
        Monomial main = m.filtered(is_main_var);
        Monomial tpart = m.filtered([](VarId v) { return !is_main_var(v); });
        groups[main].add_term(tpart, c);
    }
    std::vector<std::pair<Monomial, Poly<C>>> order(groups.begin(), groups.end());
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first); });

    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        const auto& [main, coeff] = order[i];
        bool neg = false;
        std::string body;
        std::string main_str = mono_string(main, true);
        if (coeff.term_count() == 1) {
            const auto& [tm, c] = *coeff.begin();
            neg = coeff_negative(c);
            C mag = neg ? C(-c) : c;
            std::string tms = mono_string(tm, false);
            std::vector<std::string> pieces;
            if (!coeff_is_one(mag) || (tms.empty() && main_str.empty()))
                pieces.push_back(coeff_repr(mag));
            if (!tms.empty()) pieces.push_back(tms);
            if (!main_str.empty()) pieces.push_back(main_str);
            for (size_t k = 0; k < pieces.size(); ++k) body += (k ? "*" : "") + pieces[k];
        } else {
            // Multi-term coefficient: parenthesize, pulling a leading minus out.
            std::vector<std::pair<Monomial, C>> ts(coeff.begin(), coeff.end());
            std::sort(ts.begin(), ts.end(),
                      [](const auto& a, const auto& b) { return t_display_before(a.first, b.first); });
            neg = coeff_negative(ts.front().second);
            Poly<C> inner = neg ? -coeff : coeff;
            body = "(" + compact_string(inner) + ")";
            if (!main_str.empty()) body += "*" + main_str;
        }
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += body;
    }
    return out;
}

}  // namespace

std::string to_string(const SPoly& p) { return full_string(p); }
std::string to_string(const QPoly& p) { return full_string(p); }
std::string coeff_to_string(const SPoly& p) { return compact_string(p); }

nlohmann::json to_json(const SPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p) {
        nlohmann::json mono = nlohmann::json::object();
        for (const auto& [v, e] : m.entries()) mono[var_name(v)] = e;
        terms.push_back({{"coeff", c.get_str()}, {"mono", mono}});
    }
    return terms;
}

SPoly spoly_from_json(const nlohmann::json& j) {
    SPoly p;
    for (const auto& term : j) {
        Int c(term.at("coeff").get<std::string>());
        Monomial m;
        for (const auto& [name, e] : term.at("mono").items()) {
            auto v = parse_var(name);
            if (!v) throw std::invalid_argument("unknown variable in JSON monomial: " + name);
            m = m * Monomial::var(*v, e.get<uint32_t>());
        }
        p.add_term(m, c);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the canonical text forms.

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(std::string(s.substr(start, pos - start)));
    }

    SPoly atom() {
        skip_ws();
        if (eat('(')) {
            SPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return SPoly::constant(integer());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            auto v = parse_var(s.substr(start, pos - start));
            if (!v) fail("unknown variable '" + std::string(s.substr(start, pos - start)) + "'");
            uint32_t e = 1;
            if (eat('^')) e = static_cast<uint32_t>(integer().get_ui());
            return SPoly::variable(*v, e);
        }
        fail("expected atom");
    }

    SPoly product() {
        SPoly p = atom();
        while (eat('*')) p *= atom();
        return p;
    }

    SPoly expr() {
        SPoly total;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            SPoly p = product();
            total += neg ? -p : p;
            skip_ws();
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else
                break;
        }
        return total;
    }
};

}  // namespace

SPoly parse_poly(std::string_view text) {
    Parser parser{text};
    parser.skip_ws();
    if (parser.pos >= text.size()) throw std::invalid_argument("empty polynomial text");
    if (text == "0") return SPoly::zero();
    SPoly p = parser.expr();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return p;
}

}  // namespace eqc
