#include "eqc/variables.hpp"

#include <charconv>

namespace eqc {

std::string var_name(VarId v) {
    switch (v.fam()) {
        case Fam::T: return "t" + std::to_string(v.index());
        case Fam::Quantum: return "q";
        case Fam::Xgen: return "X" + std::to_string(v.index());
        case Fam::Pbar: return "P" + std::to_string(v.index());
        case Fam::Qbar: return "Q" + std::to_string(v.index());
        case Fam::Xvar: return "x" + std::to_string(v.index());
        case Fam::Entry:
            return "E" + std::to_string(v.entry_k()) + "_" + std::to_string(v.entry_l());
        case Fam::Root: return "z" + std::to_string(v.index());
    }
    return "?";
}

static std::optional<uint32_t> parse_index(std::string_view s) {
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::optional<VarId> parse_var(std::string_view name) {
    if (name.empty()) return std::nullopt;
    if (name == "q") return VarId::q();
    char head = name[0];
    std::string_view rest = name.substr(1);
    if (head == 'E') {
        auto sep = rest.find('_');
        if (sep == std::string_view::npos) return std::nullopt;
        auto k = parse_index(rest.substr(0, sep));
        auto l = parse_index(rest.substr(sep + 1));
        if (!k || !l) return std::nullopt;
        return VarId::entry(*k, *l);
    }
    auto idx = parse_index(rest);
    if (!idx || *idx == 0) return std::nullopt;
    switch (head) {
        case 't': return VarId::t(*idx);
        case 'X': return VarId::X(*idx);
        case 'P': return VarId::pbar(*idx);
        case 'Q': return VarId::qbar(*idx);
        case 'x': return VarId::x(*idx);
        case 'z': return VarId::root(*idx);
        default: return std::nullopt;
    }
}

}  // namespace eqc
