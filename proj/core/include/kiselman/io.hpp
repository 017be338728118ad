#pragma once

#include <nlohmann/json.hpp>

#include "kiselman/boolmat.hpp"
#include "kiselman/counting.hpp"
#include "kiselman/elements.hpp"
#include "kiselman/monotone.hpp"
#include "kiselman/morphisms.hpp"
#include "kiselman/rewriting.hpp"
#include "kiselman/verify.hpp"
#include "kiselman/word.hpp"

// JSON and CSV forms.  Words and elements are arrays of 1-based generator
// indices, a set sequence is an array of arrays of indices, a matrix is an
// array of 0/1 row arrays, and counts carry their value as a decimal string.

namespace kiselman {

using Json = nlohmann::json;

Json word_to_json(const Word& w);
Word word_from_json(const Json& j, int n);

Json element_to_json(const Element& e);

Json subset_to_json(Subset x);
Subset subset_from_json(const Json& j);

Json sequence_to_json(const SetSequence& s);
SetSequence sequence_from_json(const Json& j);

Json matrix_to_json(const BoolMatrix& m);
BoolMatrix matrix_from_json(const Json& j);

Json endomorphism_to_json(const Endomorphism& f);
Endomorphism endomorphism_from_json(const Json& j);

// Debug dump of a rewriting system: rule list as lhs/rhs index arrays.
Json rewrite_system_to_json(const RewriteSystem& rs);

Json count_to_json(const CountResult& r);

Json report_to_json(const VerificationReport& report);

}  // namespace kiselman
