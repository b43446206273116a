#pragma once

#include <string>

#include <json.hpp>

#include "ladder/errors.hpp"
#include "ladder/fock.hpp"
#include "ladder/group.hpp"
#include "ladder/section.hpp"

namespace ladder {

/// JSON schema for polynomials:
///   { "p": 1, "q": 3,
///     "terms": [ { "l": [3], "m": [1,3,1], "re": "1/1", "im": "0/1" } ] }
/// Rationals are always "num/den" strings so round trips are exact.
nlohmann::json fock_to_json(const FockPoly& f);
FockPoly fock_from_json(const nlohmann::json& j);

/// JSON schema for sections (components store psi^(eta) without the 1/eta!
/// normalization, matching the in-memory convention):
///   { "p": 1, "q": 3, "n": 2,
///     "components": [ { "eta": [0,1,1],
///                       "poly": [ { "gamma": [[1,2,0]], "re": "18/1",
///                                   "im": "0/1" } ] } ] }
nlohmann::json section_to_json(const DiskSection& s);
DiskSection section_from_json(const nlohmann::json& j);

/// JSON schema for group elements: the full (p+q) x (p+q) matrix, entries
/// as ["re", "im"] rational-string pairs, row major:
///   { "p": 1, "q": 1,
///     "matrix": [ [ ["5/4","0/1"], ["3/4","0/1"] ],
///                 [ ["3/4","0/1"], ["5/4","0/1"] ] ] }
nlohmann::json group_to_json(const GroupElementX& g);
GroupElementX group_from_json(const nlohmann::json& j);

/// File helpers; throw io_error when the file cannot be read or written and
/// validation_error when the bytes are not JSON. "-" reads stdin resp.
/// writes stdout.
nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace ladder
