#include "nilclean/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

namespace nilclean {

namespace {

std::string describe_cap(std::size_t requested, std::size_t cap) {
    std::ostringstream os;
    os << "ring of order " << requested << " exceeds the order cap " << cap;
    return os.str();
}

std::string index_text(ElementId e) { return std::to_string(e.index); }

// Saturating power for order-cap checks.
std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return limit + 1;
        result *= base;
    }
    return result;
}

void enforce_cap(std::size_t order, const BuildOptions& opts) {
    if (order > opts.order_cap) throw OrderCapExceeded(order, opts.order_cap);
}

}  // namespace

OrderCapExceeded::OrderCapExceeded(std::size_t req, std::size_t c)
    : RingError(describe_cap(req, c)), requested(req), cap(c) {}

NotPrime::NotPrime(std::uint64_t p) : RingError(std::to_string(p) + " is not prime") {}

NotIdempotent::NotIdempotent(ElementId e)
    : RingError("element " + index_text(e) + " is not idempotent") {}

NotCentral::NotCentral(ElementId e, ElementId witness)
    : RingError("element " + index_text(e) + " does not commute with " + index_text(witness)) {}

InvalidRing::InvalidRing(AxiomViolation v)
    : RingError(std::string("ring axiom violated: ") + to_string(v.axiom) + " (" + v.detail + ")"),
      violation(std::move(v)) {}

RingTable::RingTable(std::size_t order, std::vector<ElementId> add, std::vector<ElementId> mul,
                     ElementId zero, ElementId one, std::string label)
    : impl_(std::make_shared<Impl>()) {
    if (order == 0) throw MalformedTable("ring order must be positive");
    if (add.size() != order * order || mul.size() != order * order)
        throw MalformedTable("tables must be order x order");
    auto in_range = [order](ElementId e) { return e.index < order; };
    if (!std::all_of(add.begin(), add.end(), in_range) ||
        !std::all_of(mul.begin(), mul.end(), in_range) || !in_range(zero) || !in_range(one))
        throw MalformedTable("table entry out of range");

    impl_->order = order;
    impl_->add = std::move(add);
    impl_->mul = std::move(mul);
    impl_->zero = zero;
    impl_->one = one;
    impl_->label = std::move(label);

    // neg[a] = the x with a + x = 0; `order` marks a missing inverse.
    impl_->neg.assign(order, ElementId(static_cast<std::uint32_t>(order)));
    for (std::uint32_t a = 0; a < order; ++a) {
        for (std::uint32_t x = 0; x < order; ++x) {
            if (impl_->add[a * order + x] == zero) {
                impl_->neg[a] = ElementId(x);
                break;
            }
        }
    }
}

ElementId RingTable::pow(ElementId a, unsigned exponent) const noexcept {
    ElementId result = one();
    ElementId base = a;
    while (exponent > 0) {
        if (exponent & 1U) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1U;
    }
    return result;
}

ElementId RingTable::element(std::size_t i) const {
    if (i >= order()) throw std::out_of_range("element index " + std::to_string(i) + " out of range");
    return ElementId(static_cast<std::uint32_t>(i));
}

std::vector<ElementId> RingTable::elements() const {
    std::vector<ElementId> out(order());
    for (std::uint32_t i = 0; i < order(); ++i) out[i] = ElementId(i);
    return out;
}

bool RingTable::is_commutative() const {
    std::call_once(impl_->commutative_once, [this] {
        const auto n = static_cast<std::uint32_t>(order());
        bool ok = true;
        for (std::uint32_t a = 0; a < n && ok; ++a)
            for (std::uint32_t b = a + 1; b < n && ok; ++b)
                ok = mul(ElementId(a), ElementId(b)) == mul(ElementId(b), ElementId(a));
        impl_->commutative = ok;
    });
    return impl_->commutative;
}

RingTable RingTable::relabeled(std::string label) const {
    return RingTable(order(), impl_->add, impl_->mul, zero(), one(), std::move(label));
}

bool operator==(const RingTable& x, const RingTable& y) {
    if (x.impl_ == y.impl_) return true;
    return x.order() == y.order() && x.zero() == y.zero() && x.one() == y.one() &&
           x.impl_->add == y.impl_->add && x.impl_->mul == y.impl_->mul;
}

const char* to_string(Axiom axiom) {
    switch (axiom) {
        case Axiom::AdditiveGroup: return "additive group";
        case Axiom::AdditiveCommutativity: return "commutativity of +";
        case Axiom::Identity: return "multiplicative identity";
        case Axiom::Distributivity: return "distributivity";
        case Axiom::MultiplicativeAssociativity: return "associativity of *";
    }
    return "unknown";
}

Validation validate_ring(const RingTable& r) {
    const auto n = static_cast<std::uint32_t>(r.order());
    const ElementId zero = r.zero();
    const ElementId one = r.one();
    auto id = [](std::uint32_t i) { return ElementId(i); };

    if (n == 1 && zero != one)
        return AxiomViolation{Axiom::Identity, "trivial ring needs zero = one", {zero, one}};

    for (std::uint32_t a = 0; a < n; ++a) {
        if (r.add(zero, id(a)) != id(a) || r.add(id(a), zero) != id(a))
            return AxiomViolation{Axiom::AdditiveGroup, "zero is not an additive identity", {id(a)}};
    }
    for (std::uint32_t a = 0; a < n; ++a) {
        if (!r.has_neg(id(a)))
            return AxiomViolation{Axiom::AdditiveGroup, "element has no additive inverse", {id(a)}};
    }
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                if (r.add(r.add(id(a), id(b)), id(c)) != r.add(id(a), r.add(id(b), id(c))))
                    return AxiomViolation{Axiom::AdditiveGroup, "(a+b)+c != a+(b+c)",
                                          {id(a), id(b), id(c)}};

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            if (r.add(id(a), id(b)) != r.add(id(b), id(a)))
                return AxiomViolation{Axiom::AdditiveCommutativity, "a+b != b+a", {id(a), id(b)}};

    for (std::uint32_t a = 0; a < n; ++a)
        if (r.mul(one, id(a)) != id(a) || r.mul(id(a), one) != id(a))
            return AxiomViolation{Axiom::Identity, "one is not a two-sided identity", {id(a)}};

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c) {
                const ElementId x(a), y(b), z(c);
                if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z)))
                    return AxiomViolation{Axiom::Distributivity, "a(b+c) != ab+ac", {x, y, z}};
                if (r.mul(r.add(x, y), z) != r.add(r.mul(x, z), r.mul(y, z)))
                    return AxiomViolation{Axiom::Distributivity, "(a+b)c != ac+bc", {x, y, z}};
            }

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c) {
                const ElementId x(a), y(b), z(c);
                if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z)))
                    return AxiomViolation{Axiom::MultiplicativeAssociativity, "(ab)c != a(bc)",
                                          {x, y, z}};
            }
    return std::nullopt;
}

const RingTable& require_valid(const RingTable& ring) {
    if (auto v = validate_ring(ring)) throw InvalidRing(std::move(*v));
    return ring;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingTable make_zn(std::uint64_t n, const BuildOptions& opts) {
    if (n == 0) throw RingError("Z/n requires n >= 1");
    enforce_cap(static_cast<std::size_t>(n), opts);
    const auto order = static_cast<std::size_t>(n);
    std::vector<ElementId> add(order * order), mul(order * order);
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = 0; b < n; ++b) {
            add[a * n + b] = ElementId(static_cast<std::uint32_t>((a + b) % n));
            mul[a * n + b] = ElementId(static_cast<std::uint32_t>((a * b) % n));
        }
    return RingTable(order, std::move(add), std::move(mul), ElementId(0),
                     ElementId(static_cast<std::uint32_t>(1 % n)), "Z/" + std::to_string(n));
}

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first

// Remainder of `num` modulo the monic polynomial `den` over Z/p.
Poly poly_mod(Poly num, const Poly& den, std::uint64_t p) {
    const std::size_t dd = den.size() - 1;
    while (num.size() > dd) {
        const std::uint64_t lead = num.back() % p;
        if (lead != 0) {
            const std::size_t shift = num.size() - 1 - dd;
            for (std::size_t i = 0; i <= dd; ++i)
                num[shift + i] = (num[shift + i] + (p - lead) * den[i]) % p;
        }
        num.pop_back();
    }
    return num;
}

bool is_zero_poly(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](std::uint64_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        const std::size_t count = checked_pow(static_cast<std::size_t>(p), d, SIZE_MAX / 2);
        for (std::size_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::size_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            if (is_zero_poly(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

Poly gf_modulus(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw NotPrime(p);
    if (k == 0) throw RingError("GF(p^k) requires k >= 1");
    const std::size_t count = checked_pow(static_cast<std::size_t>(p), k, SIZE_MAX / 2);
    // Enumerate (c0, ..., c_{k-1}) lexicographically with c0 most significant.
    for (std::size_t code = 0; code < count; ++code) {
        Poly f(k + 1, 0);
        f[k] = 1;
        std::size_t c = code;
        for (std::size_t i = k; i-- > 0;) {
            f[i] = c % p;
            c /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw RingError("no irreducible polynomial found");  // unreachable for prime p
}

RingTable make_gf(std::uint64_t p, unsigned k, const BuildOptions& opts) {
    if (!is_prime(p)) throw NotPrime(p);
    if (k == 0) throw RingError("GF(p^k) requires k >= 1");
    const std::size_t order = checked_pow(static_cast<std::size_t>(p), k, opts.order_cap);
    enforce_cap(order, opts);
    const std::string label = "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    if (k == 1) return make_zn(p, opts).relabeled(label);

    const Poly modulus = gf_modulus(p, k);
    auto decode = [&](std::size_t idx) {
        Poly f(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            f[i] = idx % p;
            idx /= p;
        }
        return f;
    };
    auto encode = [&](const Poly& f) {
        std::size_t idx = 0;
        for (std::size_t i = f.size(); i-- > 0;) idx = idx * p + f[i] % p;
        return ElementId(static_cast<std::uint32_t>(idx));
    };

    std::vector<ElementId> add(order * order), mul(order * order);
    for (std::size_t a = 0; a < order; ++a) {
        const Poly fa = decode(a);
        for (std::size_t b = 0; b < order; ++b) {
            const Poly fb = decode(b);
            Poly sum(k), prod(2 * k - 1, 0);
            for (unsigned i = 0; i < k; ++i) sum[i] = (fa[i] + fb[i]) % p;
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p;
            Poly reduced = poly_mod(prod, modulus, p);
            reduced.resize(k, 0);
            add[a * order + b] = encode(sum);
            mul[a * order + b] = encode(reduced);
        }
    }
    return RingTable(order, std::move(add), std::move(mul), ElementId(0), ElementId(1), label);
}

RingTable make_matrix_ring(const RingTable& base, unsigned k, const BuildOptions& opts) {
    if (k == 0) throw RingError("matrix dimension must be >= 1");
    const std::size_t q = base.order();
    const std::size_t cells = static_cast<std::size_t>(k) * k;
    const std::size_t order = checked_pow(q, cells, opts.order_cap);
    enforce_cap(order, opts);

    // Row-major entries, first entry most significant.
    auto decode = [&](std::size_t idx) {
        std::vector<ElementId> m(cells);
        for (std::size_t i = cells; i-- > 0;) {
            m[i] = ElementId(static_cast<std::uint32_t>(idx % q));
            idx /= q;
        }
        return m;
    };
    auto encode = [&](const std::vector<ElementId>& m) {
        std::size_t idx = 0;
        for (ElementId e : m) idx = idx * q + e.index;
        return ElementId(static_cast<std::uint32_t>(idx));
    };

    std::vector<std::vector<ElementId>> mats(order);
    for (std::size_t i = 0; i < order; ++i) mats[i] = decode(i);

    std::vector<ElementId> add(order * order), mul(order * order);
    std::vector<ElementId> tmp(cells);
    for (std::size_t a = 0; a < order; ++a) {
        const auto& ma = mats[a];
        for (std::size_t b = 0; b < order; ++b) {
            const auto& mb = mats[b];
            for (std::size_t i = 0; i < cells; ++i) tmp[i] = base.add(ma[i], mb[i]);
            add[a * order + b] = encode(tmp);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) {
                    ElementId acc = base.zero();
                    for (unsigned l = 0; l < k; ++l)
                        acc = base.add(acc, base.mul(ma[i * k + l], mb[l * k + j]));
                    tmp[i * k + j] = acc;
                }
            mul[a * order + b] = encode(tmp);
        }
    }
    std::vector<ElementId> zero_m(cells, base.zero()), one_m(cells, base.zero());
    for (unsigned i = 0; i < k; ++i) one_m[i * k + i] = base.one();
    return RingTable(order, std::move(add), std::move(mul), encode(zero_m), encode(one_m),
                     "M" + std::to_string(k) + "(" + base.label() + ")");
}

RingTable make_product(const RingTable& r1, const RingTable& r2, const BuildOptions& opts) {
    const std::size_t n1 = r1.order(), n2 = r2.order();
    if (n1 > opts.order_cap / n2) throw OrderCapExceeded(n1 * n2, opts.order_cap);
    const std::size_t order = n1 * n2;
    auto pair = [n2](ElementId x, ElementId y) {
        return ElementId(static_cast<std::uint32_t>(x.index * n2 + y.index));
    };
    std::vector<ElementId> add(order * order), mul(order * order);
    for (std::uint32_t a1 = 0; a1 < n1; ++a1)
        for (std::uint32_t a2 = 0; a2 < n2; ++a2)
            for (std::uint32_t b1 = 0; b1 < n1; ++b1)
                for (std::uint32_t b2 = 0; b2 < n2; ++b2) {
                    const std::size_t a = a1 * n2 + a2, b = b1 * n2 + b2;
                    const ElementId x1(a1), x2(a2), y1(b1), y2(b2);
                    add[a * order + b] = pair(r1.add(x1, y1), r2.add(x2, y2));
                    mul[a * order + b] = pair(r1.mul(x1, y1), r2.mul(x2, y2));
                }
    return RingTable(order, std::move(add), std::move(mul), pair(r1.zero(), r2.zero()),
                     pair(r1.one(), r2.one()), r1.label() + " x " + r2.label());
}

std::uint64_t characteristic(const RingTable& r) {
    std::uint64_t m = 1;
    ElementId acc = r.one();
    while (acc != r.zero()) {
        acc = r.add(acc, r.one());
        ++m;
    }
    return m;
}

ElementId int_embed(const RingTable& r, std::int64_t m) {
    const auto ch = static_cast<std::int64_t>(characteristic(r));
    std::int64_t reduced = m % ch;
    if (reduced < 0) reduced += ch;
    ElementId acc = r.zero();
    for (std::int64_t i = 0; i < reduced; ++i) acc = r.add(acc, r.one());
    return acc;
}

CornerRing corner_ring(const RingTable& r, ElementId e) {
    if (r.mul(e, e) != e) throw NotIdempotent(e);
    for (ElementId x : r.elements())
        if (r.mul(e, x) != r.mul(x, e)) throw NotCentral(e, x);

    std::vector<ElementId> embedding;
    std::vector<std::uint32_t> position(r.order(), UINT32_MAX);
    for (ElementId x : r.elements()) {
        const ElementId ex = r.mul(e, x);
        if (position[ex.index] == UINT32_MAX) {
            position[ex.index] = 0;
            embedding.push_back(ex);
        }
    }
    std::sort(embedding.begin(), embedding.end());
    for (std::uint32_t i = 0; i < embedding.size(); ++i) position[embedding[i].index] = i;

    const std::size_t n = embedding.size();
    std::vector<ElementId> add(n * n), mul(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            add[i * n + j] = ElementId(position[r.add(embedding[i], embedding[j]).index]);
            mul[i * n + j] = ElementId(position[r.mul(embedding[i], embedding[j]).index]);
        }
    RingTable corner(n, std::move(add), std::move(mul), ElementId(position[r.zero().index]),
                     ElementId(position[e.index]),
                     "corner(" + r.label() + ", " + std::to_string(e.index) + ")");
    return CornerRing{std::move(corner), std::move(embedding)};
}

namespace {

// Returns (g, x) with x*a = g mod b.
std::pair<std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    return {old_r, old_s};
}

}  // namespace

PrimaryDecomposition primary_decomposition(const RingTable& r) {
    const std::uint64_t ch = characteristic(r);
    std::vector<std::pair<std::uint64_t, unsigned>> prime_powers;
    std::uint64_t rest = ch;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        unsigned a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        if (a > 0) prime_powers.emplace_back(p, a);
    }
    if (rest > 1) prime_powers.emplace_back(rest, 1);

    PrimaryDecomposition out;
    if (prime_powers.size() <= 1) {
        const std::uint64_t p = prime_powers.empty() ? 1 : prime_powers[0].first;
        const unsigned a = prime_powers.empty() ? 0 : prime_powers[0].second;
        out.factors.push_back({r.one(), corner_ring(r, r.one()), p, a});
        return out;
    }
    for (auto [p, a] : prime_powers) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < a; ++i) q *= p;
        const auto cofactor = static_cast<std::int64_t>(ch / q);
        // u * cofactor = 1 mod q
        auto [g, u] = ext_gcd(cofactor % static_cast<std::int64_t>(q), static_cast<std::int64_t>(q));
        (void)g;
        std::int64_t unit = u % static_cast<std::int64_t>(q);
        if (unit < 0) unit += static_cast<std::int64_t>(q);
        const ElementId e = int_embed(r, unit * cofactor);
        out.factors.push_back({e, corner_ring(r, e), p, a});
    }
    return out;
}

std::optional<std::vector<ElementId>> find_isomorphism(const RingTable& r1, const RingTable& r2) {
    constexpr std::size_t kMaxOrder = 8;
    if (r1.order() != r2.order()) return std::nullopt;
    const std::size_t n = r1.order();
    if (n > kMaxOrder) throw RingError("find_isomorphism supports order <= 8 only");

    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
        auto phi = [&](ElementId x) { return ElementId(perm[x.index]); };
        if (phi(r1.zero()) != r2.zero() || phi(r1.one()) != r2.one()) continue;
        bool ok = true;
        for (std::uint32_t a = 0; a < n && ok; ++a)
            for (std::uint32_t b = 0; b < n && ok; ++b) {
                const ElementId x(a), y(b);
                ok = phi(r1.add(x, y)) == r2.add(phi(x), phi(y)) &&
                     phi(r1.mul(x, y)) == r2.mul(phi(x), phi(y));
            }
        if (ok) {
            std::vector<ElementId> map(n);
            for (std::size_t i = 0; i < n; ++i) map[i] = ElementId(perm[i]);
            return map;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace nilclean
