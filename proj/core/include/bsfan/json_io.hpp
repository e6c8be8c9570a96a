#pragma once

#include <nlohmann/json.hpp>

#include "bsfan/cone_a.hpp"
#include "bsfan/cone_s.hpp"
#include "bsfan/diagrams.hpp"
#include "bsfan/multigraded.hpp"
#include "bsfan/sequences.hpp"
#include "bsfan/table.hpp"

// JSON forms of every domain type. Readers throw ParseError naming the
// offending key for structural problems and let ValidationError from the
// domain constructors through.

namespace bsfan {

using Json = nlohmann::json;

/// Rationals are written as canonical strings; readers also accept integers.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& key);

/// {"entries":[{"i":..,"j":..,"value":".."}]}
Json table_to_json(const BettiTable& table);
BettiTable table_from_json(const Json& j);

/// {"start":k,"degrees":[...]}
Json sequence_to_json(const DegreeSequence& d);
DegreeSequence sequence_from_json(const Json& j);

/// {"n":..,"left":"empty"|"inf"|int,"window_start":..,"window":[...],"right":..}
/// A bare {"n":..,"value":..} describes a constant sequence.
Json codim_to_json(const CodimensionSequence& c);
CodimensionSequence codim_from_json(const Json& j);

/// {"kind":"supernatural","roots":[...],"rank_scale":"r","n":n}
/// {"kind":"twist","n":n,"a":a}
/// {"kind":"window","dim":d,"jmin":..,"jmax":..,"entries":[{"q","j","value"}]}
/// {"kind":"combination","terms":[{"coeff":"c","evaluator":{...}}]}
CohomologyEvaluator evaluator_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Json membership_to_json(const MembershipS& m);
Json verdict_to_json(const Verdict& v);
Json a_pieces_to_json(const std::vector<APieceTerm>& pieces);
Json monad_to_json(const MonadSplit& m);
Json infinite_prefix_to_json(const InfinitePrefix& p);

/// {"m":2,"entries":[{"i":..,"alpha":[a,b],"value":".."}]}
Json multi_table_to_json(const MultiBettiTable& table);
MultiBettiTable multi_table_from_json(const Json& j);
/// {"weights":[...]}
GradedOrder order_from_json(const Json& j);
/// {"kind":"product","dims":[...],"summands":[{"twist":[...],"mult":k}]}
ProductSpace product_from_json(const Json& j);

/// nlohmann parse with ParseError on malformed text.
Json parse_json(const std::string& text);

}  // namespace bsfan
