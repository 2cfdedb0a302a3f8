#pragma once

#include <json.hpp>

#include "parkfun/compositions.hpp"
#include "parkfun/inclexcl.hpp"
#include "parkfun/nsym.hpp"
#include "parkfun/parking.hpp"

namespace parkfun {

// Compositions and words are plain integer arrays; coefficients are decimal
// strings so no consumer needs a big-integer JSON reader.
nlohmann::json to_json(const Composition &c);
Composition composition_from_json(const nlohmann::json &j);

// {"basis":"S","terms":[{"c":[2,1],"v":"12"}]}
nlohmann::json to_json(const NSymPoly &f);
NSymPoly nsym_from_json(const nlohmann::json &j);

nlohmann::json to_json(const Word &w);
Word word_from_json(const nlohmann::json &j);

// Array of sorted integer arrays, empty blocks kept.
nlohmann::json to_json(const SetSequence &q);
SetSequence set_sequence_from_json(const nlohmann::json &j);

nlohmann::json to_json(const SignedFormalSum &s);

nlohmann::json to_json(const InclusionExclusionReport &r);

} // namespace parkfun
