#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilclean/elements.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

class PreconditionFailed : public RingError {
public:
    PreconditionFailed(std::string condition, std::optional<ElementId> witness = std::nullopt);
    std::string condition;
    /// Offending element (e.g. the non-nilpotent defect), when there is one.
    std::optional<ElementId> witness;
};

class NotFound : public RingError {
public:
    using RingError::RingError;
};

/// Z[a]: the smallest subring containing a and 1.
struct GeneratedSubring {
    ElementId generator;
    ElementSet elements;
};

GeneratedSubring generated_subring(const RingTable& ring, ElementId a);

struct LiftResult {
    ElementId lifted;
    /// input - lifted, always nilpotent.
    ElementId difference;
    unsigned iterations = 0;
    /// e_0 = input, e_1, ..., e_iterations = lifted. Only filled by lift_idempotent.
    std::vector<ElementId> iterates;
};

/// Newton iteration e <- 3e^2 - 2e^3 starting at a; requires a - a^2 nilpotent.
/// The defect e - e^2 squares (up to a unit) every step, so the loop stops
/// within ceil(log2(order)) + 1 steps.
LiftResult lift_idempotent(const RingTable& ring, ElementId a);

/// Least-index tripotent p of Z[a] with a - p nilpotent. Requires 2 to be a
/// unit and a - a^3 nilpotent.
LiftResult lift_tripotent(const RingTable& ring, ElementId a);

struct TripotentSplit {
    ElementId plus;   ///< (p^2 + p) / 2
    ElementId minus;  ///< (p^2 - p) / 2
};

/// Writes a tripotent p as a difference of orthogonal idempotents, p = plus - minus.
TripotentSplit tripotent_split(const RingTable& ring, ElementId p);

/// Inverse of 2 * 1_R, if 2 is a unit.
std::optional<ElementId> half(const RingTable& ring);

/// ceil(log2(n)) + 1; the iteration bound used by lift_idempotent.
unsigned newton_iteration_bound(std::size_t order);

}  // namespace nilclean
