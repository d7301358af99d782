#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "eqc/qh_ring.hpp"

namespace eqc {

// One cache file per (type, n):
//   {"schema_version": 1, "type": "D", "n": 3, "deg_q": 6,
//    "entries": [{"lambda": [2,1], "mu": [1],
//                 "terms": [{"nu": [2,1], "d": 0, "coeff": "t2+t3"},
//                           {"nu": [],    "d": 1, "coeff": "1"}]}]}
// Coefficient strings use the canonical compact form; the schema version
// invalidates stale files when conventions change.
inline constexpr int kCacheSchemaVersion = 1;

nlohmann::json expansion_terms_json(const ClassExpansion& exp);
ClassExpansion expansion_from_terms_json(const nlohmann::json& terms);

// Computes all |SP(n)|^2 products in canonical order.  With type_b set the
// context must be type D and every entry is passed through the odd-orthogonal
// reduction (t1 = 0, indices shifted down); the file is labeled "B".
nlohmann::json table_json(const RingContext& ctx, bool type_b = false);

std::filesystem::path table_path(const std::filesystem::path& dir, const RingContext& ctx,
                                 bool type_b = false);

// Atomic write (temp file + rename).
void write_table_file(const std::filesystem::path& dir, const RingContext& ctx,
                      bool type_b = false);

// Loads a table file and replays it against recomputation; throws
// internal_error on any disagreement, std::invalid_argument on schema
// mismatch.
void validate_table_file(const std::filesystem::path& file, const RingContext& ctx,
                         bool type_b = false);

}  // namespace eqc
