#pragma once

#include <json.hpp>

#include <string>

#include "coxmut/canonical.hpp"
#include "coxmut/diagram.hpp"
#include "coxmut/invariance.hpp"
#include "coxmut/mutation_class.hpp"
#include "coxmut/presentation.hpp"

namespace coxmut {

using Json = nlohmann::json;

/// {"n": int, "arrows": [{"from", "to", "weight"}...]}, 1-based, arrows sorted
/// by (from, to).
Json to_json(const Diagram& d);

/// Throws invalid_diagram on malformed input: missing fields, vertices out of
/// range, loops, non-positive weights or two arrows on one pair.
Diagram diagram_from_json(const Json& j);

Json to_json(const Relation& r);
Json to_json(const Presentation& p);

/// Cycle entry of the session state. For oriented cycles "t" and "m" list
/// t(l) and m(l) for each offset l; m is null where t(l) >= 4.
Json to_json(const ChordlessCycle& c);
Json to_json(const PatternMatch& m);

std::string key_hex(const CanonicalKey& k);
Json to_json(const MutationClass& c);

Json to_json(const VerificationReport& r);
Json to_json(const CounterexampleReport& r);

}  // namespace coxmut
