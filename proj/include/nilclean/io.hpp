#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "nilclean/classifier.hpp"
#include "nilclean/decomposer.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

using Json = nlohmann::json;

/// { "order", "zero", "one", "add", "mul", "label" }. neg is not written.
Json ring_to_json(const RingTable& ring);

/// Inverse of ring_to_json; recomputes neg and validates the axioms.
/// Throws MalformedTable for schema errors and InvalidRing for axiom failures.
RingTable ring_from_json(const Json& j, const BuildOptions& opts = {});

Json report_to_json(const CharacterizationReport& report);
CharacterizationReport report_from_json(const Json& j);

Json witness_to_json(const RingTable& ring, ElementId target, const Shape& shape,
                     const std::optional<DecompositionWitness>& witness);

/// Aligned text rendering of a report, grouped by ring class.
void print_report(std::ostream& os, const CharacterizationReport& report);

}  // namespace nilclean
