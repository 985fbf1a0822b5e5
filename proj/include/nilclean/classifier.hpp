#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilclean/ring.hpp"

namespace nilclean {

enum class CharacterizationId {
    S2ncDef,        ///< every element: two idempotents + nilpotent
    S2ncA3,         ///< a - a^3 nilpotent for all a
    S2ncTripNil,    ///< every element: tripotent + nilpotent
    S2ncSq1E,       ///< every square: idempotent + nilpotent
    S2ncSq2E,
    S2ncSq3E,
    S2ncSq4E,       ///< not equivalent to the class (Z/5 separates)
    S2ncSqEInv,     ///< every square: idempotent + involution + nilpotent
    ZncDef,         ///< every element: two tripotents + nilpotent
    ZncA5,          ///< a - a^5 nilpotent for all a
    Znc5PNil,       ///< every element: 5-potent + nilpotent
    ZncSq1T,
    ZncSq2T,
    ZncSqTInv,      ///< every square: tripotent + involution + nilpotent
    Znc7InvSq4E,    ///< 7 a unit and every square: four idempotents + nilpotent
    ZncSq5P,        ///< not equivalent to the class (GF(9) separates)
};

inline constexpr std::array kAllCharacterizations = {
    CharacterizationId::S2ncDef,    CharacterizationId::S2ncA3,     CharacterizationId::S2ncTripNil,
    CharacterizationId::S2ncSq1E,   CharacterizationId::S2ncSq2E,   CharacterizationId::S2ncSq3E,
    CharacterizationId::S2ncSq4E,   CharacterizationId::S2ncSqEInv, CharacterizationId::ZncDef,
    CharacterizationId::ZncA5,      CharacterizationId::Znc5PNil,   CharacterizationId::ZncSq1T,
    CharacterizationId::ZncSq2T,    CharacterizationId::ZncSqTInv,  CharacterizationId::Znc7InvSq4E,
    CharacterizationId::ZncSq5P,
};

inline constexpr std::array kS2ncClass = {
    CharacterizationId::S2ncDef,  CharacterizationId::S2ncA3,   CharacterizationId::S2ncTripNil,
    CharacterizationId::S2ncSq1E, CharacterizationId::S2ncSq2E, CharacterizationId::S2ncSq3E,
    CharacterizationId::S2ncSqEInv,
};

inline constexpr std::array kZncClass = {
    CharacterizationId::ZncDef,  CharacterizationId::ZncA5,     CharacterizationId::Znc5PNil,
    CharacterizationId::ZncSq1T, CharacterizationId::ZncSq2T,   CharacterizationId::ZncSqTInv,
    CharacterizationId::Znc7InvSq4E,
};

/// Canonical names, e.g. "S2NC-SQ-2E".
const char* to_string(CharacterizationId id);

class UnknownId : public RingError {
public:
    explicit UnknownId(std::string_view name);
};

CharacterizationId parse_characterization_id(std::string_view name);

struct PredicateResult {
    bool holds = true;
    /// Least element failing the quantified clause. For the 7-unit clause of
    /// ZNC-7INV-SQ-4E this is 7 * 1_R.
    std::optional<ElementId> witness;

    friend bool operator==(const PredicateResult&, const PredicateResult&) = default;
};

/// a - a^3 nilpotent for every a.
PredicateResult is_strongly_2_nil_clean(const RingTable& ring);
/// a - a^5 nilpotent for every a.
PredicateResult is_zhou_nil_clean(const RingTable& ring);

PredicateResult check_characterization(const RingTable& ring, CharacterizationId id);

/// x^3 is idempotent for every x.
PredicateResult cubes_are_idempotent(const RingTable& ring);

struct EquivalenceVerdict {
    bool consistent = true;
    std::vector<CharacterizationId> disagreeing;

    friend bool operator==(const EquivalenceVerdict&, const EquivalenceVerdict&) = default;
};

struct CharacterizationReport {
    std::string ring;
    std::size_t order = 0;
    bool strongly_2_nil_clean = false;
    bool zhou_nil_clean = false;
    std::map<CharacterizationId, PredicateResult> predicates;
    EquivalenceVerdict s2nc;
    EquivalenceVerdict znc;
    /// Non-member predicate name -> true when it holds while its class fails
    /// on this ring. Keys: S2NC-SQ-4E, ZNC-SQ-5P, CUBES-IDEMPOTENT.
    std::map<std::string, bool> separations;

    bool consistent() const { return s2nc.consistent && znc.consistent; }
    friend bool operator==(const CharacterizationReport&, const CharacterizationReport&) = default;
};

/// Evaluates every characterization and checks each class against its
/// defining predicate.
CharacterizationReport cross_check(const RingTable& ring);

}  // namespace nilclean
