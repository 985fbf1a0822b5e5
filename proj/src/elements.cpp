#include "nilclean/elements.hpp"

#include <algorithm>

namespace nilclean {

void ElementSet::insert(ElementId e) {
    if (e.index >= member_.size()) member_.resize(e.index + 1, false);
    if (member_[e.index]) return;
    member_[e.index] = true;
    elements_.insert(std::upper_bound(elements_.begin(), elements_.end(), e), e);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](ElementId e) { return other.contains(e); });
}

unsigned nilpotency_index(const RingTable& r, ElementId a) {
    std::vector<bool> seen(r.order(), false);
    ElementId power = a;
    for (unsigned m = 1;; ++m) {
        if (power == r.zero()) return m;
        if (seen[power.index]) return 0;
        seen[power.index] = true;
        power = r.mul(power, a);
    }
}

bool is_nilpotent(const RingTable& r, ElementId a) { return nilpotency_index(r, a) != 0; }

std::optional<ElementId> inverse(const RingTable& r, ElementId a) {
    for (ElementId y : r.elements())
        if (r.mul(a, y) == r.one() && r.mul(y, a) == r.one()) return y;
    return std::nullopt;
}

namespace {

ElementClassification compute_classification(const RingTable& r) {
    const std::size_t n = r.order();
    ElementClassification c{ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n),
                            ElementSet(n), ElementSet(n), ElementSet(n)};
    for (ElementId x : r.elements()) {
        const ElementId x2 = r.mul(x, x);
        const ElementId x3 = r.mul(x2, x);
        const ElementId x5 = r.mul(r.mul(x2, x2), x);
        if (is_nilpotent(r, x)) c.nilpotents.insert(x);
        if (x2 == x) c.idempotents.insert(x);
        if (x3 == x) c.tripotents.insert(x);
        if (x5 == x) c.five_potents.insert(x);
        if (x2 == r.one()) c.involutions.insert(x);
        if (inverse(r, x)) c.units.insert(x);
        c.squares.insert(x2);
    }
    return c;
}

}  // namespace

const ElementClassification& classify(const RingTable& r) {
    std::call_once(r.impl_->classify_once, [&r] {
        r.impl_->classification =
            std::make_shared<const ElementClassification>(compute_classification(r));
    });
    return *r.impl_->classification;
}

}  // namespace nilclean
