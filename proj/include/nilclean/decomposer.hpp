#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilclean/elements.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

enum class PartKind { Idempotent, Tripotent, FivePotent, Involution };

/// Short label used by the CLI shape grammar: e, t, p5, v.
const char* short_name(PartKind kind);
const char* long_name(PartKind kind);
std::optional<PartKind> parse_part_kind(std::string_view text);

/// Named summands of a decomposition; the nilpotent summand is implicit.
struct Shape {
    std::vector<PartKind> parts;

    static Shape repeat(PartKind kind, std::size_t count);
    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Parses a comma list such as "e,e" or "t, v". The empty string is the
/// empty shape. Throws std::invalid_argument on unknown kinds.
Shape parse_shape(std::string_view text);
std::string to_string(const Shape& shape);

struct DecompositionWitness {
    std::vector<ElementId> parts;
    ElementId nilpotent;

    friend bool operator==(const DecompositionWitness&, const DecompositionWitness&) = default;
};

const ElementSet& members(const ElementClassification& c, PartKind kind);

/// Re-checks a witness from scratch: part kinds, nilpotent slot, pairwise
/// commutation (including with the target), and the sum.
bool verify_witness(const RingTable& ring, ElementId target, const Shape& shape,
                    const DecompositionWitness& witness);

/// Least commuting decomposition of `a` with the given shape, or nothing.
/// Witnesses are ordered by nilpotent index first, then by part indices in
/// shape order, so an exact decomposition (nilpotent 0) is preferred.
std::optional<DecompositionWitness> find_decomposition(const RingTable& ring, ElementId a,
                                                       const Shape& shape);

struct ConstructiveDecomposition {
    Shape shape;  ///< [TRIPOTENT, INVOLUTION] or [IDEMPOTENT, INVOLUTION]
    DecompositionWitness witness;
};

/// Builds a decomposition from the lifting formulas rather than by search:
/// when 2 is a unit and a - a^3 is nilpotent, a = ((1-e) - f) + (2e-1) + w with
/// e, f the split of the lifted tripotent; otherwise, when a - a^2 is nilpotent,
/// a = (1-e) + (2e-1) + w with e the lifted idempotent.
ConstructiveDecomposition decompose_constructively(const RingTable& ring, ElementId a);

/// {x^2 : x in R}.
const ElementSet& all_squares(const RingTable& ring);

}  // namespace nilclean
