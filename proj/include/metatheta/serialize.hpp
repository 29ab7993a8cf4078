// JSON encodings of the value types. Keys keep insertion order so output is byte-stable.
#pragma once

#include <json.hpp>

#include "metatheta/charsum.hpp"
#include "metatheta/elements.hpp"
#include "metatheta/formal.hpp"
#include "metatheta/identities.hpp"
#include "metatheta/partitions.hpp"
#include "metatheta/whittaker.hpp"

namespace metatheta {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const std::vector<Rational>& v);
Json to_json(const Partition& p);
Json to_json(const RationalMatrix& m);
/// Directions as lists of [i, j, coefficient] triples (1-based).
Json to_json(const UnipotentFamily& fam);
Json to_json(const CharacterFunctional& chi);
Json to_json(const CycScalar& c);
Json to_json(const CycValue& v);
Json to_json(const FormalScalar& f);
Json to_json(const OrbitReport& r);
Json to_json(const TransportReport& r);
Json to_json(const RootExchangeReport& r);
Json to_json(const StabilizerReport& r);
Json to_json(const HeisenbergReport& r);
Json to_json(const PipelineReport& r);
Json to_json(const FormulaResult& r);
Json to_json(const DescentSummary& d);

}  // namespace metatheta
