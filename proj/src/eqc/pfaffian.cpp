#include "eqc/pfaffian.hpp"

#include <stdexcept>

namespace eqc {

namespace {

// Recursive expansion over the subset of surviving indices (bitmask).  The
// sign (-1)^i of the textbook formula refers to the position of the partner
// index within the surviving list, which is what `pos` tracks.
SPoly pf_subset(uint32_t mask, const EntryFn& entry, std::map<uint32_t, SPoly>* memo) {
    if (mask == 0) return SPoly(1);
    if (memo) {
        auto it = memo->find(mask);
        if (it != memo->end()) return it->second;
    }
    std::vector<unsigned> idx;
    for (unsigned b = 0; b < 32; ++b)
        if (mask & (1u << b)) idx.push_back(b);
    SPoly total;
    unsigned first = idx[0];
    for (size_t pos = 1; pos < idx.size(); ++pos) {
        unsigned partner = idx[pos];
        SPoly a = entry(first, partner);
        if (a.is_zero()) continue;
        uint32_t rest = mask & ~(1u << first) & ~(1u << partner);
        SPoly sub = pf_subset(rest, entry, memo);
        SPoly term = a * sub;
        total += (pos % 2 == 1) ? term : -term;
    }
    if (memo) memo->emplace(mask, total);
    return total;
}

}  // namespace

SPoly pfaffian(unsigned r, const EntryFn& entry, bool memoize) {
    if (r % 2 != 0) throw std::invalid_argument("pfaffian needs even size");
    if (r > 16) throw std::invalid_argument("pfaffian size out of the supported range");
    std::map<uint32_t, SPoly> memo;
    uint32_t mask = (r == 32) ? 0xffffffffu : ((1u << r) - 1);
    return pf_subset(mask, entry, memoize ? &memo : nullptr);
}

SPoly class_polynomial(const StrictPartition& lambda, const TwoRowFn& entry) {
    std::vector<unsigned> parts = lambda.padded_parts();
    unsigned r = static_cast<unsigned>(parts.size());
    if (r == 0) return SPoly(1);
    if (r == 2) return entry(parts[0], parts[1]);
    return pfaffian(r, [&](unsigned i, unsigned j) { return entry(parts[i], parts[j]); });
}

SPoly class_polynomial_odd_form(const StrictPartition& lambda, const TwoRowFn& entry) {
    if (lambda.length() % 2 != 1)
        throw std::invalid_argument("the alternating form applies to odd lengths only");
    const auto& parts = lambda.parts();
    SPoly total;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::vector<unsigned> rest;
        for (size_t j = 0; j < parts.size(); ++j)
            if (j != i) rest.push_back(parts[j]);
        SPoly sub = class_polynomial(StrictPartition(rest), entry);
        SPoly term = entry(parts[i], 0) * sub;
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace eqc
