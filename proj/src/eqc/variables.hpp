#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace eqc {

// Variable universe shared by every polynomial in the engine:
//   t_i   equivariant parameters (coefficient ring S = Z[t_1,...])
//   q     the quantum parameter
//   X_i   generators of the quotient-ring presentations
//   P_i   one-row P-Schur generators of Gamma'
//   Q_i   one-row Q-Schur generators of Gamma
//   x_i   underlying symmetric-function variables (oracle only)
//   E_k_l free skew-matrix entry symbols (Pfaffian identity checks)
// z_i: simple-root coordinates used by the positivity report.
enum class Fam : uint8_t {
    T = 0,
    Quantum = 1,
    Xgen = 2,
    Pbar = 3,
    Qbar = 4,
    Xvar = 5,
    Entry = 6,
    Root = 7
};

class VarId {
  public:
    constexpr VarId() : raw_(0) {}
    constexpr explicit VarId(uint32_t raw) : raw_(raw) {}

    static constexpr VarId t(uint32_t i) { return make(Fam::T, i); }
    static constexpr VarId q() { return make(Fam::Quantum, 1); }
    static constexpr VarId X(uint32_t i) { return make(Fam::Xgen, i); }
    static constexpr VarId pbar(uint32_t i) { return make(Fam::Pbar, i); }
    static constexpr VarId qbar(uint32_t i) { return make(Fam::Qbar, i); }
    static constexpr VarId x(uint32_t i) { return make(Fam::Xvar, i); }
    static constexpr VarId root(uint32_t i) { return make(Fam::Root, i); }
    // Entry symbol for a two-row position (k,l), k < 2^12, l < 2^12.
    static constexpr VarId entry(uint32_t k, uint32_t l) { return make(Fam::Entry, (k << 12) | l); }

    constexpr Fam fam() const { return static_cast<Fam>(raw_ >> 24); }
    constexpr uint32_t index() const { return raw_ & 0xffffffu; }
    constexpr uint32_t entry_k() const { return index() >> 12; }
    constexpr uint32_t entry_l() const { return index() & 0xfffu; }
    constexpr uint32_t raw() const { return raw_; }

    friend constexpr auto operator<=>(VarId a, VarId b) { return a.raw_ <=> b.raw_; }
    friend constexpr bool operator==(VarId a, VarId b) { return a.raw_ == b.raw_; }

  private:
    static constexpr VarId make(Fam f, uint32_t i) {
        return VarId((static_cast<uint32_t>(f) << 24) | (i & 0xffffffu));
    }
    uint32_t raw_;
};

std::string var_name(VarId v);
std::optional<VarId> parse_var(std::string_view name);

// Graded degrees.  deg q depends on the Lie type and rank, so it is carried
// explicitly; entry symbols are degree 0 (they only appear in free identity
// checks where the grading is irrelevant).
struct DegreeTable {
    int deg_q = 1;

    int operator()(VarId v) const {
        switch (v.fam()) {
            case Fam::T:
            case Fam::Xvar:
            case Fam::Root: return 1;
            case Fam::Quantum: return deg_q;
            case Fam::Xgen:
            case Fam::Pbar:
            case Fam::Qbar: return static_cast<int>(v.index());
            case Fam::Entry: return 0;
        }
        return 0;
    }
};

}  // namespace eqc
