#pragma once

// Naive reference implementations used as test oracles. Everything here works
// on plain integer tables copied out of a RingTable, or on tables built from
// scratch, and deliberately shares no code with the library's element
// classification, decomposer or classifier.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilclean/ring.hpp"

namespace oracle {

struct Tables {
    int n = 0;
    int zero = 0;
    int one = 0;
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;

    int neg(int a) const {
        for (int b = 0; b < n; ++b)
            if (add[a][b] == zero) return b;
        return -1;
    }
    int sub(int a, int b) const { return add[a][neg(b)]; }
    int pow(int a, int k) const {
        int x = one;
        for (int i = 0; i < k; ++i) x = mul[x][a];
        return x;
    }
    // a^m = 0 for some m <= n.
    bool nilpotent(int a) const {
        int x = a;
        for (int m = 1; m <= n; ++m) {
            if (x == zero) return true;
            x = mul[x][a];
        }
        return false;
    }
    bool commute(int a, int b) const { return mul[a][b] == mul[b][a]; }
    bool unit(int a) const {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == one && mul[b][a] == one) return true;
        return false;
    }
    int embed(long m) const {
        int x = zero;
        for (long i = 0; i < (m < 0 ? -m : m); ++i) x = add[x][one];
        return m < 0 ? neg(x) : x;
    }
};

inline Tables tables_of(const nilclean::RingTable& r) {
    Tables t;
    t.n = static_cast<int>(r.order());
    t.zero = static_cast<int>(r.zero().index);
    t.one = static_cast<int>(r.one().index);
    t.add.assign(t.n, std::vector<int>(t.n));
    t.mul.assign(t.n, std::vector<int>(t.n));
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b) {
            t.add[a][b] = static_cast<int>(r.add_table()[a * t.n + b].index);
            t.mul[a][b] = static_cast<int>(r.mul_table()[a * t.n + b].index);
        }
    return t;
}

inline nilclean::RingTable ring_of(const Tables& t, const std::string& label) {
    std::vector<nilclean::ElementId> add, mul;
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b) {
            add.emplace_back(static_cast<std::uint32_t>(t.add[a][b]));
            mul.emplace_back(static_cast<std::uint32_t>(t.mul[a][b]));
        }
    return nilclean::RingTable(static_cast<std::size_t>(t.n), add, mul,
                               nilclean::ElementId(static_cast<std::uint32_t>(t.zero)),
                               nilclean::ElementId(static_cast<std::uint32_t>(t.one)), label);
}

// Z/m[x]/(f) for monic f given low degree first without its leading 1.
// Element index = sum c_i m^i.
inline Tables poly_quotient(int m, const std::vector<int>& f_low) {
    const int k = static_cast<int>(f_low.size());
    int n = 1;
    for (int i = 0; i < k; ++i) n *= m;
    auto decode = [&](int idx) {
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i, idx /= m) c[i] = idx % m;
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int i = k - 1; i >= 0; --i) idx = idx * m + ((c[i] % m) + m) % m;
        return idx;
    };
    Tables t;
    t.n = n;
    t.zero = 0;
    t.one = encode([&] { std::vector<int> c(k); c[0] = 1; return c; }());
    t.add.assign(n, std::vector<int>(n));
    t.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto x = decode(a), y = decode(b);
            std::vector<int> s(k);
            for (int i = 0; i < k; ++i) s[i] = x[i] + y[i];
            t.add[a][b] = encode(s);
            std::vector<int> p(2 * k, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) p[i + j] += x[i] * y[j];
            for (int d = 2 * k - 1; d >= k; --d) {
                const int c = p[d] % m;
                p[d] = 0;
                for (int i = 0; i < k; ++i) p[d - k + i] -= c * f_low[i];
            }
            t.mul[a][b] = encode(std::vector<int>(p.begin(), p.begin() + k));
        }
    return t;
}

// Upper triangular 2x2 matrices over Z/2: (a, b, d) -> [[a, b], [0, d]],
// index 4a + 2b + d. Order 8, noncommutative.
inline Tables upper_triangular_z2() {
    Tables t;
    t.n = 8;
    t.zero = 0;
    t.one = 5;
    t.add.assign(8, std::vector<int>(8));
    t.mul.assign(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            t.add[x][y] = x ^ y;
            const int a1 = x >> 2, b1 = (x >> 1) & 1, d1 = x & 1;
            const int a2 = y >> 2, b2 = (y >> 1) & 1, d2 = y & 1;
            const int a = a1 & a2, b = (a1 & b2) ^ (b1 & d2), d = d1 & d2;
            t.mul[x][y] = 4 * a + 2 * b + d;
        }
    return t;
}

// Small rings outside the survey corpus: local, noncommutative, and a cube
// of Z/2.
inline std::vector<std::pair<std::string, Tables>> extra_small_rings() {
    Tables cube;
    cube.n = 8;
    cube.one = 7;
    cube.add.assign(8, std::vector<int>(8));
    cube.mul.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            cube.add[a][b] = a ^ b;
            cube.mul[a][b] = a & b;
        }
    return {
        {"UT2(Z/2)", upper_triangular_z2()},
        {"Z/2[x]/(x^2)", poly_quotient(2, {0, 0})},
        {"Z/2[x]/(x^3)", poly_quotient(2, {0, 0, 0})},
        {"Z/3[x]/(x^2)", poly_quotient(3, {0, 0})},
        {"Z/2[x]/(x^3+x)", poly_quotient(2, {0, 1, 0})},
        {"(Z/2)^3", cube},
    };
}

enum Kind { Idem, Trip, Five, Invol };

inline bool has_kind(const Tables& t, int x, Kind k) {
    switch (k) {
        case Idem: return t.pow(x, 2) == x;
        case Trip: return t.pow(x, 3) == x;
        case Five: return t.pow(x, 5) == x;
        case Invol: return t.pow(x, 2) == t.one;
    }
    return false;
}

struct Witness {
    std::vector<int> parts;
    int nilpotent = 0;
};

// Full enumeration of part tuples for each nilpotent in increasing order;
// parts are enumerated lexicographically, no pruning.
inline std::optional<Witness> decompose(const Tables& t, int a, const std::vector<Kind>& shape) {
    const int k = static_cast<int>(shape.size());
    for (int w = 0; w < t.n; ++w) {
        if (!t.nilpotent(w)) continue;
        std::vector<int> parts(k, 0);
        while (true) {
            bool ok = true;
            int sum = w;
            for (int i = 0; i < k && ok; ++i) {
                ok = has_kind(t, parts[i], shape[i]);
                sum = t.add[sum][parts[i]];
            }
            if (ok && sum == a) {
                std::vector<int> all = parts;
                all.push_back(w);
                all.push_back(a);
                for (std::size_t i = 0; i < all.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < all.size() && ok; ++j) ok = t.commute(all[i], all[j]);
                if (ok) return Witness{parts, w};
            }
            int pos = k - 1;
            while (pos >= 0 && ++parts[pos] == t.n) parts[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return std::nullopt;
}

struct Verdict {
    bool holds = true;
    int witness = -1;
};

inline std::vector<int> squares(const Tables& t) {
    std::vector<bool> seen(t.n, false);
    for (int x = 0; x < t.n; ++x) seen[t.mul[x][x]] = true;
    std::vector<int> out;
    for (int x = 0; x < t.n; ++x)
        if (seen[x]) out.push_back(x);
    return out;
}

inline std::vector<int> all_elements(const Tables& t) {
    std::vector<int> v(t.n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

inline Verdict forall(const std::vector<int>& domain, const std::function<bool(int)>& p) {
    for (int a : domain)
        if (!p(a)) return Verdict{false, a};
    return Verdict{};
}

inline Verdict decomposes_all(const Tables& t, const std::vector<int>& domain,
                              const std::vector<Kind>& shape) {
    return forall(domain, [&](int a) { return decompose(t, a, shape).has_value(); });
}

inline Verdict power_defect(const Tables& t, int k) {
    return forall(all_elements(t), [&](int a) { return t.nilpotent(t.sub(a, t.pow(a, k))); });
}

// Characterizations keyed by their canonical names.
inline Verdict characterization(const Tables& t, const std::string& id) {
    const auto all = all_elements(t);
    const auto sq = squares(t);
    if (id == "S2NC-DEF") return decomposes_all(t, all, {Idem, Idem});
    if (id == "S2NC-A3") return power_defect(t, 3);
    if (id == "S2NC-TRIP-NIL") return decomposes_all(t, all, {Trip});
    if (id == "S2NC-SQ-1E") return decomposes_all(t, sq, {Idem});
    if (id == "S2NC-SQ-2E") return decomposes_all(t, sq, {Idem, Idem});
    if (id == "S2NC-SQ-3E") return decomposes_all(t, sq, {Idem, Idem, Idem});
    if (id == "S2NC-SQ-4E") return decomposes_all(t, sq, {Idem, Idem, Idem, Idem});
    if (id == "S2NC-SQ-E-INV") return decomposes_all(t, sq, {Idem, Invol});
    if (id == "ZNC-DEF") return decomposes_all(t, all, {Trip, Trip});
    if (id == "ZNC-A5") return power_defect(t, 5);
    if (id == "ZNC-5P-NIL") return decomposes_all(t, all, {Five});
    if (id == "ZNC-SQ-1T") return decomposes_all(t, sq, {Trip});
    if (id == "ZNC-SQ-2T") return decomposes_all(t, sq, {Trip, Trip});
    if (id == "ZNC-SQ-T-INV") return decomposes_all(t, sq, {Trip, Invol});
    if (id == "ZNC-7INV-SQ-4E") {
        const int seven = t.embed(7);
        if (!t.unit(seven)) return Verdict{false, seven};
        return decomposes_all(t, sq, {Idem, Idem, Idem, Idem});
    }
    if (id == "ZNC-SQ-5P") return decomposes_all(t, sq, {Five});
    return Verdict{false, -2};
}

inline long gcd(long a, long b) { return b == 0 ? a : gcd(b, a % b); }

// Z/n is S2NC iff n has no prime factor above 3, ZNC iff none above 5.
inline bool largest_prime_at_most(long n, long bound) {
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            if (p > bound) return false;
            n /= p;
        }
    return n == 1 || n <= bound;
}

}  // namespace oracle
