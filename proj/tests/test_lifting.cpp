#include "doctest.h"
#include "nilclean/nilclean.hpp"
#include "oracle.hpp"

using namespace nilclean;

namespace {

ElementId E(std::uint32_t i) { return ElementId(i); }

std::vector<RingTable> corpus() {
    std::vector<RingTable> out;
    for (const auto& e : survey_set(30)) out.push_back(e.ring);
    out.push_back(oracle::ring_of(oracle::upper_triangular_z2(), "UT2(Z/2)"));
    out.push_back(make_matrix_ring(make_zn(2), 2));
    return out;
}

unsigned ceil_log2(std::size_t n) {
    unsigned k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

}  // namespace

TEST_CASE("generated_subring") {
    CHECK(generated_subring(make_zn(9), E(4)).elements.size() == 9);
    const RingTable m2 = make_matrix_ring(make_zn(2), 2);
    const auto id = generated_subring(m2, m2.one());
    CHECK(id.elements.elements() == std::vector{E(0), E(9)});
    const auto e12 = generated_subring(m2, E(4));  // E12, with 1 = index 9, 1+E12 = 13
    CHECK(e12.elements.elements() == std::vector{E(0), E(4), E(9), E(13)});
    CHECK(e12.generator == E(4));
}

TEST_CASE("generated_subring is the closure of {a, 1} (property)") {
    for (const auto& r : corpus()) {
        for (ElementId a : r.elements()) {
            const ElementSet& s = generated_subring(r, a).elements;
            CHECK(s.contains(a));
            CHECK(s.contains(r.one()));
            for (ElementId x : s)
                for (ElementId y : s) {
                    CHECK(s.contains(r.add(x, y)));
                    CHECK(s.contains(r.mul(x, y)));
                    CHECK(commute(r, x, y));
                }
            // minimality: every element is a polynomial in a with integer
            // coefficients, reachable from {1, a} by + and x
            ElementSet reach(r.order());
            std::vector<ElementId> frontier{r.one(), a};
            for (ElementId x : frontier) reach.insert(x);
            while (!frontier.empty()) {
                std::vector<ElementId> next;
                for (ElementId x : frontier)
                    for (ElementId y : std::vector<ElementId>(reach.begin(), reach.end()))
                        for (ElementId z : {r.add(x, y), r.mul(x, y), r.mul(y, x)})
                            if (!reach.contains(z)) {
                                reach.insert(z);
                                next.push_back(z);
                            }
                frontier = next;
            }
            CHECK(reach == s);
        }
    }
}

TEST_CASE("lift_idempotent examples") {
    const auto z12 = lift_idempotent(make_zn(12), E(10));
    CHECK(z12.lifted == E(4));
    CHECK(z12.difference == E(6));
    CHECK(z12.iterations == 1);

    const auto z8 = lift_idempotent(make_zn(8), E(3));
    CHECK(z8.lifted == E(1));
    CHECK(z8.difference == E(2));
    CHECK(z8.iterations == 2);
    CHECK(z8.iterates == std::vector{E(3), E(5), E(1)});

    for (const auto& r : corpus())
        for (ElementId e : classify(r).idempotents) {
            const auto l = lift_idempotent(r, e);
            CHECK(l.lifted == e);
            CHECK(l.difference == r.zero());
            CHECK(l.iterations == 0);
        }
}

TEST_CASE("lift_idempotent precondition") {
    try {
        lift_idempotent(make_zn(5), E(2));
        FAIL("expected PreconditionFailed");
    } catch (const PreconditionFailed& e) {
        REQUIRE(e.witness);
        CHECK(*e.witness == E(3));  // 2 - 4 = -2
    }
}

TEST_CASE("lift_idempotent soundness on every corpus element (property)") {
    for (const auto& r : corpus()) {
        CAPTURE(r.label());
        const unsigned bound = ceil_log2(r.order()) + 1;
        CHECK(newton_iteration_bound(r.order()) == bound);
        for (ElementId a : r.elements()) {
            if (!is_nilpotent(r, r.sub(a, r.mul(a, a)))) continue;
            const auto l = lift_idempotent(r, a);
            CHECK(r.mul(l.lifted, l.lifted) == l.lifted);
            CHECK(is_nilpotent(r, r.sub(a, l.lifted)));
            CHECK(l.difference == r.sub(a, l.lifted));
            CHECK(commute(r, a, l.lifted));
            CHECK(l.iterations <= bound);
            CHECK(generated_subring(r, a).elements.contains(l.lifted));
            REQUIRE(l.iterates.size() == l.iterations + 1);
            // defect t_k = e_k - e_k^2 contracts: index(t_{k+1}) <= ceil(index(t_k)/2) + 1
            for (unsigned k = 0; k + 1 < l.iterates.size(); ++k) {
                const ElementId ek = l.iterates[k], ek1 = l.iterates[k + 1];
                CHECK(ek1 == r.sub(r.mul(int_embed(r, 3), r.pow(ek, 2)), r.mul(int_embed(r, 2), r.pow(ek, 3))));
                const unsigned i0 = nilpotency_index(r, r.sub(ek, r.mul(ek, ek)));
                const unsigned i1 = nilpotency_index(r, r.sub(ek1, r.mul(ek1, ek1)));
                CHECK(i1 <= (i0 + 1) / 2 + 1);
            }
        }
    }
}

TEST_CASE("lift_tripotent examples") {
    const auto z9 = lift_tripotent(make_zn(9), E(4));
    CHECK(z9.lifted == E(1));
    CHECK(z9.difference == E(3));

    const auto z3 = lift_tripotent(make_zn(3), E(2));
    CHECK(z3.lifted == E(2));
    CHECK(z3.difference == E(0));

    CHECK_THROWS_AS(lift_tripotent(make_zn(15), E(7)), PreconditionFailed);
    CHECK_THROWS_AS(lift_tripotent(make_zn(4), E(1)), PreconditionFailed);
}

TEST_CASE("lift_tripotent soundness (property)") {
    for (const auto& r : corpus()) {
        if (!half(r)) continue;
        CAPTURE(r.label());
        for (ElementId a : r.elements()) {
            if (!is_nilpotent(r, r.sub(a, r.pow(a, 3)))) continue;
            const auto l = lift_tripotent(r, a);
            const ElementId p = l.lifted;
            CHECK(r.pow(p, 3) == p);
            CHECK(is_nilpotent(r, l.difference));
            CHECK(l.difference == r.sub(a, p));
            const ElementSet& za = generated_subring(r, a).elements;
            CHECK(za.contains(p));
            // least index among admissible tripotents of Z[a]
            for (ElementId q : za) {
                if (q >= p) break;
                CHECK_FALSE((r.pow(q, 3) == q && is_nilpotent(r, r.sub(a, q))));
            }
            const ElementId p2 = r.mul(p, p);
            CHECK(r.mul(p2, p2) == p2);
            CHECK(is_nilpotent(r, r.sub(r.mul(a, a), p2)));
        }
    }
}

TEST_CASE("half") {
    CHECK(half(make_zn(9)) == E(5));
    CHECK_FALSE(half(make_zn(4)));
    CHECK_FALSE(half(make_gf(2, 3)));
    CHECK(half(make_gf(5, 2)));
}

TEST_CASE("tripotent_split examples") {
    const auto z9 = tripotent_split(make_zn(9), E(8));
    CHECK(z9.plus == E(0));
    CHECK(z9.minus == E(1));
    for (const RingTable& r : {make_zn(9), make_zn(15), make_gf(5, 2), make_zn(3)}) {
        const auto one = tripotent_split(r, r.one());
        CHECK(one.plus == r.one());
        CHECK(one.minus == r.zero());
        const auto zero = tripotent_split(r, r.zero());
        CHECK(zero.plus == r.zero());
        CHECK(zero.minus == r.zero());
    }
    CHECK_THROWS_AS(tripotent_split(make_zn(9), E(2)), PreconditionFailed);
    CHECK_THROWS_AS(tripotent_split(make_zn(4), E(1)), PreconditionFailed);
}

TEST_CASE("tripotent_split identities (property)") {
    for (const auto& r : corpus()) {
        if (!half(r)) continue;
        for (ElementId p : classify(r).tripotents) {
            const auto [e, f] = tripotent_split(r, p);
            CHECK(r.mul(e, e) == e);
            CHECK(r.mul(f, f) == f);
            CHECK(r.mul(e, f) == r.zero());
            CHECK(r.mul(f, e) == r.zero());
            CHECK(r.sub(e, f) == p);
            CHECK(r.add(e, f) == r.mul(p, p));
        }
    }
}

TEST_CASE("square-root idempotent lifts leave a nilpotent remainder") {
    // For rings where 2 is a unit and a - a^3 is always nilpotent, take
    // p = (a^4 + a^2)/2 and q = (a^4 - a^2)/2, lift both to idempotents g, h
    // and check that w = a^2 - g + h and w - 3h are nilpotent.
    std::vector<RingTable> rings{make_zn(3), make_zn(9), make_zn(27), make_product(make_zn(3), make_zn(3)),
                                 make_product(make_zn(3), make_zn(9))};
    for (const auto& e : survey_set(30))
        if (half(e.ring) && is_strongly_2_nil_clean(e.ring).holds) rings.push_back(e.ring);
    for (const auto& r : rings) {
        CAPTURE(r.label());
        const ElementId inv2 = *half(r);
        for (ElementId a : r.elements()) {
            const ElementId a2 = r.mul(a, a), a4 = r.pow(a, 4);
            const ElementId p = r.mul(inv2, r.add(a4, a2));
            const ElementId q = r.mul(inv2, r.sub(a4, a2));
            const ElementId g = lift_idempotent(r, p).lifted;
            const ElementId h = lift_idempotent(r, q).lifted;
            const ElementId w = r.add(r.sub(a2, g), h);
            CHECK(is_nilpotent(r, w));
            CHECK(is_nilpotent(r, r.sub(w, r.mul(int_embed(r, 3), h))));
            const ElementSet& za = generated_subring(r, a).elements;
            CHECK(za.contains(g));
            CHECK(za.contains(h));
        }
    }
}
