#pragma once

#include "wcount/bounds.hpp"
#include "wcount/code.hpp"
#include "wcount/nonlinear.hpp"
#include "wcount/search.hpp"

#include <json.hpp>

#include <set>

namespace wcount {

using Json = nlohmann::json;

/// {"q", "k", "n", "columns": [[[entries...], multiplicity], ...]}; entries are field elements in [0, q).
Json to_json(const LinearCode& code);
/// Reads the format above ("n" is optional and checked when present). Throws PreconditionViolated on malformed input.
LinearCode linear_code_from_json(const Json& j);

/// {"q", "n", "words": [...]}: words are digit strings over 0-9a-z for q <= 36, integer arrays otherwise.
Json to_json(const UnrestrictedCode& code);
UnrestrictedCode unrestricted_code_from_json(const Json& j);

/// {"v", "residues"}
Json to_json(const DifferenceSet& ds);
DifferenceSet difference_set_from_json(const Json& j);

Json to_json(const WeightSpectrum& spectrum);
Json to_json(const std::set<std::size_t>& distances);
Json to_json(const SearchReport& report);
Json to_json(const BoundReport& report);
Json to_json(const TableRow& row);

/// Exact integers that fit in 64 bits stay numbers; larger ones become decimal strings.
Json big_to_json(const BigInt& value);

}  // namespace wcount
