#include "nilclean/lifting.hpp"

#include <deque>

namespace nilclean {

PreconditionFailed::PreconditionFailed(std::string cond, std::optional<ElementId> w)
    : RingError("precondition failed: " + cond +
                (w ? " (witness " + std::to_string(w->index) + ")" : std::string())),
      condition(std::move(cond)),
      witness(w) {}

GeneratedSubring generated_subring(const RingTable& r, ElementId a) {
    GeneratedSubring out{a, ElementSet(r.order())};
    std::deque<ElementId> work;
    auto push = [&](ElementId x) {
        if (out.elements.contains(x)) return;
        out.elements.insert(x);
        work.push_back(x);
    };
    push(r.zero());
    push(r.one());
    push(a);
    // Every new element is combined with everything already present.
    while (!work.empty()) {
        const ElementId x = work.front();
        work.pop_front();
        push(r.neg(x));
        const std::vector<ElementId> snapshot = out.elements.elements();
        for (ElementId y : snapshot) {
            push(r.add(x, y));
            push(r.mul(x, y));
            push(r.mul(y, x));
        }
    }
    return out;
}

unsigned newton_iteration_bound(std::size_t order) {
    unsigned log2 = 0;
    while ((std::size_t{1} << log2) < order) ++log2;
    return log2 + 1;
}

LiftResult lift_idempotent(const RingTable& r, ElementId a) {
    const ElementId defect = r.sub(a, r.mul(a, a));
    if (!is_nilpotent(r, defect)) throw PreconditionFailed("a - a^2 is not nilpotent", defect);

    const ElementId three = int_embed(r, 3);
    const ElementId two = int_embed(r, 2);
    LiftResult res{a, r.zero(), 0, {a}};
    ElementId e = a;
    const unsigned bound = newton_iteration_bound(r.order());
    while (r.mul(e, e) != e) {
        if (res.iterations == bound) throw NotFound("idempotent lift did not converge");
        const ElementId e2 = r.mul(e, e);
        const ElementId e3 = r.mul(e2, e);
        e = r.sub(r.mul(three, e2), r.mul(two, e3));
        ++res.iterations;
        res.iterates.push_back(e);
    }
    res.lifted = e;
    res.difference = r.sub(a, e);
    return res;
}

std::optional<ElementId> half(const RingTable& r) { return inverse(r, int_embed(r, 2)); }

LiftResult lift_tripotent(const RingTable& r, ElementId a) {
    if (!half(r)) throw PreconditionFailed("2 is not a unit", int_embed(r, 2));
    const ElementId defect = r.sub(a, r.pow(a, 3));
    if (!is_nilpotent(r, defect)) throw PreconditionFailed("a - a^3 is not nilpotent", defect);

    const GeneratedSubring sub = generated_subring(r, a);
    for (ElementId p : sub.elements) {
        if (r.pow(p, 3) != p) continue;
        const ElementId diff = r.sub(a, p);
        if (is_nilpotent(r, diff)) return LiftResult{p, diff, 0, {}};
    }
    throw NotFound("no tripotent of Z[a] is congruent to a modulo nilpotents");
}

TripotentSplit tripotent_split(const RingTable& r, ElementId p) {
    const auto inv2 = half(r);
    if (!inv2) throw PreconditionFailed("2 is not a unit", int_embed(r, 2));
    if (r.pow(p, 3) != p) throw PreconditionFailed("p is not a tripotent", p);
    const ElementId p2 = r.mul(p, p);
    return TripotentSplit{r.mul(*inv2, r.add(p2, p)), r.mul(*inv2, r.sub(p2, p))};
}

}  // namespace nilclean
