#pragma once

#include <json.hpp>

#include "identity.hpp"
#include "search.hpp"

namespace ribbonkit {

nlohmann::json to_json(const Composition& c);
nlohmann::json to_json(const Partition& p);

/// {"basis": "schur"|"h", "terms": [{"partition": [...], "coeff": n}, ...]}
/// sorted lex-ascending.
nlohmann::json to_json(const SymVector& v);

/// {"shape": [...], "rows": [[...], ...], "content": [...]}
nlohmann::json to_json(const RibbonTableau& t);

nlohmann::json to_json(const FamilyMatch& m);

/// {"alpha": [...], "beta": [...], "nu": [...], "families": [...]}
nlohmann::json to_json(const NearEqualityRecord& r);

nlohmann::json to_json(const NecessaryConditionsReport& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const FamilyVerifyReport& r);
nlohmann::json to_json(const ConjectureReport& r);

/// Stats report for a composition: statistics fields are null for all-ones
/// compositions (where they are undefined); transpose and adjacent pairs are
/// always present.
nlohmann::json stats_json(const Composition& c);

/// One JSON document per line, one line per record.
std::string records_jsonl(std::span<const NearEqualityRecord> records);

}  // namespace ribbonkit
