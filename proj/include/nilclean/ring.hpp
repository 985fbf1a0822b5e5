#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilclean {

/// Position of an element inside one particular RingTable.
struct ElementId {
    std::uint32_t index = 0;

    constexpr ElementId() = default;
    constexpr explicit ElementId(std::uint32_t i) : index(i) {}

    friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

inline constexpr std::size_t kDefaultOrderCap = 256;

/// Limits applied by every ring constructor.
struct BuildOptions {
    std::size_t order_cap = kDefaultOrderCap;
};

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrderCapExceeded : public RingError {
public:
    OrderCapExceeded(std::size_t requested, std::size_t cap);
    std::size_t requested;
    std::size_t cap;
};

class NotPrime : public RingError {
public:
    explicit NotPrime(std::uint64_t p);
};

class MalformedTable : public RingError {
public:
    using RingError::RingError;
};

class NotIdempotent : public RingError {
public:
    explicit NotIdempotent(ElementId e);
};

class NotCentral : public RingError {
public:
    NotCentral(ElementId e, ElementId witness);
};

struct ElementClassification;

/// A finite unital ring stored as full Cayley tables.
///
/// The constructor only checks table shape and index ranges; ring axioms are
/// checked by validate_ring(). Copies share the underlying tables.
class RingTable {
public:
    RingTable(std::size_t order, std::vector<ElementId> add, std::vector<ElementId> mul,
              ElementId zero, ElementId one, std::string label);

    std::size_t order() const noexcept { return impl_->order; }
    ElementId zero() const noexcept { return impl_->zero; }
    ElementId one() const noexcept { return impl_->one; }
    const std::string& label() const noexcept { return impl_->label; }

    ElementId add(ElementId a, ElementId b) const noexcept {
        return impl_->add[a.index * impl_->order + b.index];
    }
    ElementId mul(ElementId a, ElementId b) const noexcept {
        return impl_->mul[a.index * impl_->order + b.index];
    }
    /// Additive inverse. Only meaningful once the table has an inverse for `a`
    /// (always true for validated rings).
    ElementId neg(ElementId a) const noexcept { return impl_->neg[a.index]; }
    bool has_neg(ElementId a) const noexcept { return impl_->neg[a.index].index < impl_->order; }

    ElementId sub(ElementId a, ElementId b) const noexcept { return add(a, neg(b)); }
    ElementId pow(ElementId a, unsigned exponent) const noexcept;

    ElementId element(std::size_t i) const;
    std::vector<ElementId> elements() const;

    /// True iff every pair of elements commutes. Computed once per ring.
    bool is_commutative() const;

    const std::vector<ElementId>& add_table() const noexcept { return impl_->add; }
    const std::vector<ElementId>& mul_table() const noexcept { return impl_->mul; }

    /// Same tables under a new label.
    RingTable relabeled(std::string label) const;

    /// Identity of the shared table storage; copies of one ring compare equal.
    const void* identity() const noexcept { return impl_.get(); }

    /// Table equality (labels ignored).
    friend bool operator==(const RingTable& x, const RingTable& y);

private:
    friend const ElementClassification& classify(const RingTable&);

    struct Impl;
    std::shared_ptr<Impl> impl_;

    struct Impl {
        std::size_t order = 0;
        std::vector<ElementId> add;
        std::vector<ElementId> mul;
        std::vector<ElementId> neg;
        ElementId zero;
        ElementId one;
        std::string label;

        mutable std::once_flag commutative_once;
        mutable bool commutative = false;
        mutable std::once_flag classify_once;
        mutable std::shared_ptr<const ElementClassification> classification;
    };
};

enum class Axiom {
    AdditiveGroup,
    AdditiveCommutativity,
    Identity,
    Distributivity,
    MultiplicativeAssociativity,
};

const char* to_string(Axiom axiom);

struct AxiomViolation {
    Axiom axiom;
    std::string detail;
    std::vector<ElementId> witnesses;
};

/// Result of validate_ring: empty when every axiom holds.
using Validation = std::optional<AxiomViolation>;

/// Scans the axioms in a fixed order (additive group, commutativity of +,
/// identity, distributivity, associativity of x) and reports the first
/// failure with the least witness tuple.
Validation validate_ring(const RingTable& ring);

class InvalidRing : public RingError {
public:
    explicit InvalidRing(AxiomViolation v);
    AxiomViolation violation;
};

/// Throws InvalidRing when validate_ring() reports a violation.
const RingTable& require_valid(const RingTable& ring);

RingTable make_zn(std::uint64_t n, const BuildOptions& opts = {});
RingTable make_gf(std::uint64_t p, unsigned k, const BuildOptions& opts = {});
RingTable make_matrix_ring(const RingTable& base, unsigned k, const BuildOptions& opts = {});
RingTable make_product(const RingTable& r1, const RingTable& r2, const BuildOptions& opts = {});

/// Monic irreducible polynomial of degree k over Z/p used by make_gf,
/// coefficients low degree first (leading 1 included).
std::vector<std::uint64_t> gf_modulus(std::uint64_t p, unsigned k);

bool is_prime(std::uint64_t n);

/// m * 1_R.
ElementId int_embed(const RingTable& ring, std::int64_t m);

std::uint64_t characteristic(const RingTable& ring);

struct CornerRing {
    RingTable ring;
    /// embedding[i] is the parent element for corner element i.
    std::vector<ElementId> embedding;
};

/// The ring eRe for a central idempotent e, re-indexed in increasing parent order.
CornerRing corner_ring(const RingTable& ring, ElementId e);

struct PrimaryFactor {
    ElementId central_idempotent;
    CornerRing corner;
    std::uint64_t prime;
    unsigned exponent;
};

struct PrimaryDecomposition {
    std::vector<PrimaryFactor> factors;
};

/// Splits R along the prime-power factors of its characteristic. Factors are
/// listed by increasing prime. A ring of prime-power characteristic (or the
/// trivial ring) yields a single factor with idempotent 1.
PrimaryDecomposition primary_decomposition(const RingTable& ring);

/// Brute-force ring isomorphism search for small rings (order <= 8).
/// Returns phi with phi[x] the image of x, or nothing.
std::optional<std::vector<ElementId>> find_isomorphism(const RingTable& r1, const RingTable& r2);

}  // namespace nilclean
