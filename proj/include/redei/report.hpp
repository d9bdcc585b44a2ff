#pragma once

/**
 * @file report.hpp
 * @brief JSON, CSV and text renderings shared by the library and the CLI.
 *
 * Object keys keep insertion order so that output is byte-stable.
 */

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "redei/catalog.hpp"
#include "redei/cycle_structure.hpp"
#include "redei/families.hpp"

namespace redei {

using Json = nlohmann::ordered_json;

/// {"1":2,"4":2,"20":2}; counts above 64 bits become decimal strings.
Json structure_json(const CycleStructure& s);

/// {"q":..,"chi":..,"classes":[{"members":[..],"structure":{..}}]}
Json classes_json(std::uint64_t q, Chi chi, const std::vector<StructureClass>& classes);

/// {"q":..,"chi":..,"pairs":[{"m":..,"n":..,"line_offset":..}]}
Json pairs_json(const PairCatalog& catalog);

/// Header "m,n,line_offset" where line_offset = (n - m) mod (q - chi).
void write_pairs_csv(std::ostream& out, const PairCatalog& catalog);

/// {"q":..,"chi":..,"isolated":[..],"formula":M}
Json isolated_json(std::uint64_t q, Chi chi, const std::vector<std::uint64_t>& isolated, std::uint64_t formula);

/// {"family":..,"q":"..","chi":..,"pair":["..",".."],"structure":{..}|null,"applicable":..,"reason":".."}
Json family_json(const FamilyPrediction& prediction);

std::string family_text(const FamilyPrediction& prediction);

}  // namespace redei
