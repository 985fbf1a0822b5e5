#include "nilclean/classifier.hpp"

#include "nilclean/decomposer.hpp"
#include "nilclean/elements.hpp"

namespace nilclean {

namespace {

struct IdName {
    CharacterizationId id;
    const char* name;
};

constexpr IdName kNames[] = {
    {CharacterizationId::S2ncDef, "S2NC-DEF"},
    {CharacterizationId::S2ncA3, "S2NC-A3"},
    {CharacterizationId::S2ncTripNil, "S2NC-TRIP-NIL"},
    {CharacterizationId::S2ncSq1E, "S2NC-SQ-1E"},
    {CharacterizationId::S2ncSq2E, "S2NC-SQ-2E"},
    {CharacterizationId::S2ncSq3E, "S2NC-SQ-3E"},
    {CharacterizationId::S2ncSq4E, "S2NC-SQ-4E"},
    {CharacterizationId::S2ncSqEInv, "S2NC-SQ-E-INV"},
    {CharacterizationId::ZncDef, "ZNC-DEF"},
    {CharacterizationId::ZncA5, "ZNC-A5"},
    {CharacterizationId::Znc5PNil, "ZNC-5P-NIL"},
    {CharacterizationId::ZncSq1T, "ZNC-SQ-1T"},
    {CharacterizationId::ZncSq2T, "ZNC-SQ-2T"},
    {CharacterizationId::ZncSqTInv, "ZNC-SQ-T-INV"},
    {CharacterizationId::Znc7InvSq4E, "ZNC-7INV-SQ-4E"},
    {CharacterizationId::ZncSq5P, "ZNC-SQ-5P"},
};

template <typename Pred>
PredicateResult for_all(const std::vector<ElementId>& domain, Pred pred) {
    for (ElementId a : domain)
        if (!pred(a)) return PredicateResult{false, a};
    return PredicateResult{true, std::nullopt};
}

PredicateResult every_decomposes(const RingTable& r, const std::vector<ElementId>& domain,
                                 const Shape& shape) {
    return for_all(domain, [&](ElementId a) { return find_decomposition(r, a, shape).has_value(); });
}

PredicateResult power_defect_nil(const RingTable& r, unsigned exponent) {
    const auto& nil = classify(r).nilpotents;
    return for_all(r.elements(),
                   [&](ElementId a) { return nil.contains(r.sub(a, r.pow(a, exponent))); });
}

}  // namespace

const char* to_string(CharacterizationId id) {
    for (const auto& entry : kNames)
        if (entry.id == id) return entry.name;
    return "?";
}

UnknownId::UnknownId(std::string_view name)
    : RingError("unknown characterization id '" + std::string(name) + "'") {}

CharacterizationId parse_characterization_id(std::string_view name) {
    for (const auto& entry : kNames)
        if (name == entry.name) return entry.id;
    throw UnknownId(name);
}

PredicateResult is_strongly_2_nil_clean(const RingTable& r) { return power_defect_nil(r, 3); }

PredicateResult is_zhou_nil_clean(const RingTable& r) { return power_defect_nil(r, 5); }

PredicateResult cubes_are_idempotent(const RingTable& r) {
    return for_all(r.elements(), [&](ElementId x) {
        const ElementId c = r.pow(x, 3);
        return r.mul(c, c) == c;
    });
}

PredicateResult check_characterization(const RingTable& r, CharacterizationId id) {
    using K = PartKind;
    const std::vector<ElementId> everything = r.elements();
    const std::vector<ElementId>& squares = all_squares(r).elements();
    const auto idem = [](std::size_t n) { return Shape::repeat(K::Idempotent, n); };

    switch (id) {
        case CharacterizationId::S2ncDef: return every_decomposes(r, everything, idem(2));
        case CharacterizationId::S2ncA3: return is_strongly_2_nil_clean(r);
        case CharacterizationId::S2ncTripNil:
            return every_decomposes(r, everything, Shape{{K::Tripotent}});
        case CharacterizationId::S2ncSq1E: return every_decomposes(r, squares, idem(1));
        case CharacterizationId::S2ncSq2E: return every_decomposes(r, squares, idem(2));
        case CharacterizationId::S2ncSq3E: return every_decomposes(r, squares, idem(3));
        case CharacterizationId::S2ncSq4E: return every_decomposes(r, squares, idem(4));
        case CharacterizationId::S2ncSqEInv:
            return every_decomposes(r, squares, Shape{{K::Idempotent, K::Involution}});
        case CharacterizationId::ZncDef:
            return every_decomposes(r, everything, Shape::repeat(K::Tripotent, 2));
        case CharacterizationId::ZncA5: return is_zhou_nil_clean(r);
        case CharacterizationId::Znc5PNil:
            return every_decomposes(r, everything, Shape{{K::FivePotent}});
        case CharacterizationId::ZncSq1T:
            return every_decomposes(r, squares, Shape{{K::Tripotent}});
        case CharacterizationId::ZncSq2T:
            return every_decomposes(r, squares, Shape::repeat(K::Tripotent, 2));
        case CharacterizationId::ZncSqTInv:
            return every_decomposes(r, squares, Shape{{K::Tripotent, K::Involution}});
        case CharacterizationId::Znc7InvSq4E: {
            const ElementId seven = int_embed(r, 7);
            if (!classify(r).units.contains(seven)) return PredicateResult{false, seven};
            return every_decomposes(r, squares, idem(4));
        }
        case CharacterizationId::ZncSq5P:
            return every_decomposes(r, squares, Shape{{K::FivePotent}});
    }
    throw UnknownId(std::to_string(static_cast<int>(id)));
}

CharacterizationReport cross_check(const RingTable& r) {
    CharacterizationReport rep;
    rep.ring = r.label();
    rep.order = r.order();
    rep.strongly_2_nil_clean = is_strongly_2_nil_clean(r).holds;
    rep.zhou_nil_clean = is_zhou_nil_clean(r).holds;
    for (CharacterizationId id : kAllCharacterizations)
        rep.predicates[id] = check_characterization(r, id);

    auto verdict = [&](const auto& members, bool expected) {
        EquivalenceVerdict v;
        for (CharacterizationId id : members)
            if (rep.predicates[id].holds != expected) v.disagreeing.push_back(id);
        v.consistent = v.disagreeing.empty();
        return v;
    };
    rep.s2nc = verdict(kS2ncClass, rep.strongly_2_nil_clean);
    rep.znc = verdict(kZncClass, rep.zhou_nil_clean);

    rep.separations["S2NC-SQ-4E"] =
        rep.predicates[CharacterizationId::S2ncSq4E].holds && !rep.strongly_2_nil_clean;
    rep.separations["ZNC-SQ-5P"] =
        rep.predicates[CharacterizationId::ZncSq5P].holds && !rep.zhou_nil_clean;
    rep.separations["CUBES-IDEMPOTENT"] = cubes_are_idempotent(r).holds && !rep.zhou_nil_clean;
    return rep;
}

}  // namespace nilclean
