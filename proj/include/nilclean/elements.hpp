#pragma once

#include <vector>

#include "nilclean/ring.hpp"

namespace nilclean {

/// A subset of a ring's elements: sorted list plus a membership bitmap.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : member_(universe, false) {}

    void insert(ElementId e);
    bool contains(ElementId e) const { return e.index < member_.size() && member_[e.index]; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    /// Elements in increasing index order.
    const std::vector<ElementId>& elements() const noexcept { return elements_; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    bool is_subset_of(const ElementSet& other) const;
    friend bool operator==(const ElementSet& x, const ElementSet& y) {
        return x.elements_ == y.elements_;
    }

private:
    std::vector<bool> member_;
    std::vector<ElementId> elements_;
};

struct ElementClassification {
    ElementSet nilpotents;
    ElementSet idempotents;
    ElementSet tripotents;
    ElementSet five_potents;
    ElementSet involutions;
    ElementSet units;
    ElementSet squares;
};

/// Power-orbit cycle detection: true iff 0 shows up among a, a^2, a^3, ...
bool is_nilpotent(const RingTable& ring, ElementId a);

/// Nilpotency index (least m with a^m = 0), or 0 when a is not nilpotent.
unsigned nilpotency_index(const RingTable& ring, ElementId a);

/// Exhaustive classification, computed once per ring and shared by copies.
const ElementClassification& classify(const RingTable& ring);

inline bool commute(const RingTable& ring, ElementId a, ElementId b) {
    return ring.mul(a, b) == ring.mul(b, a);
}

/// Two-sided inverse, if any.
std::optional<ElementId> inverse(const RingTable& ring, ElementId a);

}  // namespace nilclean
