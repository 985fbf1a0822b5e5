#include "nilclean/decomposer.hpp"

#include <stdexcept>

#include "nilclean/lifting.hpp"

namespace nilclean {

const char* short_name(PartKind kind) {
    switch (kind) {
        case PartKind::Idempotent: return "e";
        case PartKind::Tripotent: return "t";
        case PartKind::FivePotent: return "p5";
        case PartKind::Involution: return "v";
    }
    return "?";
}

const char* long_name(PartKind kind) {
    switch (kind) {
        case PartKind::Idempotent: return "idempotent";
        case PartKind::Tripotent: return "tripotent";
        case PartKind::FivePotent: return "5-potent";
        case PartKind::Involution: return "involution";
    }
    return "?";
}

std::optional<PartKind> parse_part_kind(std::string_view text) {
    for (PartKind k : {PartKind::Idempotent, PartKind::Tripotent, PartKind::FivePotent,
                       PartKind::Involution})
        if (text == short_name(k)) return k;
    return std::nullopt;
}

Shape Shape::repeat(PartKind kind, std::size_t count) { return Shape{std::vector(count, kind)}; }

Shape parse_shape(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    Shape shape;
    text = trim(text);
    if (text.empty()) return shape;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        const auto kind = parse_part_kind(item);
        if (!kind)
            throw std::invalid_argument("unknown part kind '" + std::string(item) +
                                        "' (expected e, t, p5 or v)");
        shape.parts.push_back(*kind);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return shape;
}

std::string to_string(const Shape& shape) {
    std::string out;
    for (std::size_t i = 0; i < shape.parts.size(); ++i) {
        if (i) out += ',';
        out += short_name(shape.parts[i]);
    }
    return out;
}

const ElementSet& members(const ElementClassification& c, PartKind kind) {
    switch (kind) {
        case PartKind::Idempotent: return c.idempotents;
        case PartKind::Tripotent: return c.tripotents;
        case PartKind::FivePotent: return c.five_potents;
        case PartKind::Involution: return c.involutions;
    }
    throw std::logic_error("bad part kind");
}

bool verify_witness(const RingTable& r, ElementId target, const Shape& shape,
                    const DecompositionWitness& w) {
    if (w.parts.size() != shape.parts.size()) return false;
    auto has_kind = [&](ElementId x, PartKind k) {
        switch (k) {
            case PartKind::Idempotent: return r.pow(x, 2) == x;
            case PartKind::Tripotent: return r.pow(x, 3) == x;
            case PartKind::FivePotent: return r.pow(x, 5) == x;
            case PartKind::Involution: return r.pow(x, 2) == r.one();
        }
        return false;
    };
    for (std::size_t i = 0; i < w.parts.size(); ++i)
        if (!has_kind(w.parts[i], shape.parts[i])) return false;
    if (!is_nilpotent(r, w.nilpotent)) return false;

    std::vector<ElementId> all = w.parts;
    all.push_back(w.nilpotent);
    all.push_back(target);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!commute(r, all[i], all[j])) return false;

    ElementId sum = w.nilpotent;
    for (ElementId p : w.parts) sum = r.add(sum, p);
    return sum == target;
}

namespace {

// Candidates are ordered by nilpotent first, then by the parts in shape
// order. For a fixed nilpotent the last part is determined by the others.
class Search {
public:
    Search(const RingTable& r, ElementId target, const Shape& shape)
        : r_(r), c_(classify(r)), target_(target), shape_(shape), chosen_(shape.parts.size()) {}

    std::optional<DecompositionWitness> run() {
        for (ElementId w : c_.nilpotents) {
            if (!commute(r_, w, target_)) continue;
            nilpotent_ = w;
            remainder_ = r_.sub(target_, w);
            if (descend(0, r_.zero())) return DecompositionWitness{chosen_, nilpotent_};
        }
        return std::nullopt;
    }

private:
    bool admissible(std::size_t depth, ElementId x) const {
        // Within a run of equal kinds, sorting the run keeps a witness valid and
        // lexicographically smaller, so only non-decreasing runs are searched.
        if (depth > 0 && shape_.parts[depth - 1] == shape_.parts[depth] && x < chosen_[depth - 1])
            return false;
        if (!commute(r_, x, target_) || !commute(r_, x, nilpotent_)) return false;
        for (std::size_t i = 0; i < depth; ++i)
            if (!commute(r_, x, chosen_[i])) return false;
        return true;
    }

    bool descend(std::size_t depth, ElementId partial) {
        const std::size_t k = shape_.parts.size();
        if (k == 0) return partial == remainder_;
        const ElementSet& kind_members = members(c_, shape_.parts[depth]);
        if (depth + 1 == k) {
            const ElementId last = r_.sub(remainder_, partial);
            if (!kind_members.contains(last) || !admissible(depth, last)) return false;
            chosen_[depth] = last;
            return true;
        }
        for (ElementId x : kind_members) {
            if (!admissible(depth, x)) continue;
            chosen_[depth] = x;
            if (descend(depth + 1, r_.add(partial, x))) return true;
        }
        return false;
    }

    const RingTable& r_;
    const ElementClassification& c_;
    ElementId target_;
    const Shape& shape_;
    std::vector<ElementId> chosen_;
    ElementId nilpotent_;
    ElementId remainder_;
};

}  // namespace

std::optional<DecompositionWitness> find_decomposition(const RingTable& r, ElementId a,
                                                       const Shape& shape) {
    return Search(r, a, shape).run();
}

ConstructiveDecomposition decompose_constructively(const RingTable& r, ElementId a) {
    const ElementId one = r.one();
    const ElementId two = int_embed(r, 2);
    const bool two_is_unit = half(r).has_value();
    const bool cubic_defect_nil = is_nilpotent(r, r.sub(a, r.pow(a, 3)));

    ConstructiveDecomposition out;
    if (two_is_unit && cubic_defect_nil) {
        const LiftResult lift = lift_tripotent(r, a);
        const TripotentSplit split = tripotent_split(r, lift.lifted);
        const ElementId tripotent = r.sub(r.sub(one, split.plus), split.minus);
        const ElementId involution = r.sub(r.mul(two, split.plus), one);
        out.shape = Shape{{PartKind::Tripotent, PartKind::Involution}};
        out.witness = DecompositionWitness{{tripotent, involution}, lift.difference};
    } else if (is_nilpotent(r, r.sub(a, r.mul(a, a)))) {
        const LiftResult lift = lift_idempotent(r, a);
        const ElementId e = lift.lifted;
        out.shape = Shape{{PartKind::Idempotent, PartKind::Involution}};
        out.witness =
            DecompositionWitness{{r.sub(one, e), r.sub(r.mul(two, e), one)}, lift.difference};
    } else if (two_is_unit) {
        throw PreconditionFailed("neither a - a^3 nor a - a^2 is nilpotent", a);
    } else {
        throw PreconditionFailed("2 is not a unit and a - a^2 is not nilpotent", a);
    }
    if (!verify_witness(r, a, out.shape, out.witness))
        throw std::logic_error("constructive decomposition failed verification");
    return out;
}

const ElementSet& all_squares(const RingTable& r) { return classify(r).squares; }

}  // namespace nilclean
