#include "nilclean/expr.hpp"

#include <cctype>
#include <limits>

namespace nilclean {

bool operator==(const RingExpr& a, const RingExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, expr::Zn>) return x.n == y.n;
            else if constexpr (std::is_same_v<T, expr::GF>) return x.p == y.p && x.k == y.k;
            else if constexpr (std::is_same_v<T, expr::Mat>) return x.k == y.k && *x.base == *y.base;
            else if constexpr (std::is_same_v<T, expr::Prod>) return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
            else return x.name == y.name;
        },
        a.node);
}

RingExprPtr make_zn_expr(std::uint64_t n) { return std::make_shared<RingExpr>(RingExpr{expr::Zn{n}}); }
RingExprPtr make_gf_expr(std::uint64_t p, std::uint64_t k) {
    return std::make_shared<RingExpr>(RingExpr{expr::GF{p, k}});
}
RingExprPtr make_mat_expr(std::uint64_t k, RingExprPtr base) {
    return std::make_shared<RingExpr>(RingExpr{expr::Mat{k, std::move(base)}});
}
RingExprPtr make_prod_expr(RingExprPtr lhs, RingExprPtr rhs) {
    return std::make_shared<RingExpr>(RingExpr{expr::Prod{std::move(lhs), std::move(rhs)}});
}
RingExprPtr make_named_expr(std::string name) {
    return std::make_shared<RingExpr>(RingExpr{expr::Named{std::move(name)}});
}

namespace {

std::string describe(std::size_t offset, const std::set<std::string>& expected) {
    std::string out = "parse error at offset " + std::to_string(offset) + ": expected ";
    bool first = true;
    for (const auto& e : expected) {
        out += (first ? "" : " or ") + e;
        first = false;
    }
    return out;
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingExprPtr parse() {
        RingExprPtr e = expression();
        skip_ws();
        if (pos_ != text_.size()) fail({"\"x\"", "end of input"});
        return e;
    }

private:
    RingExprPtr expression() {
        RingExprPtr lhs = term();
        while (peek() == 'x') {
            ++pos_;
            lhs = make_prod_expr(std::move(lhs), term());
        }
        return lhs;
    }

    RingExprPtr term() {
        switch (peek()) {
            case 'Z':
                ++pos_;
                expect('/');
                return make_zn_expr(integer());
            case 'G': {
                ++pos_;
                expect('F');
                expect('(');
                const std::uint64_t p = integer();
                expect('^');
                const std::uint64_t k = integer();
                expect(')');
                return make_gf_expr(p, k);
            }
            case 'M': {
                ++pos_;
                const std::uint64_t k = integer();
                expect('(');
                RingExprPtr inner = expression();
                expect(')');
                return make_mat_expr(k, std::move(inner));
            }
            case '@': {
                ++pos_;
                skip_ws();
                const std::size_t start = pos_;
                while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
                if (pos_ == start) fail({"NAME"});
                return make_named_expr(std::string(text_.substr(start, pos_ - start)));
            }
            default:
                fail({"\"Z/\"", "\"GF(\"", "\"M\"", "\"@\""});
        }
    }

    std::uint64_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail({"INT"}, start);
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) fail({"INT"});
        return value;
    }

    void expect(char c) {
        if (peek() != c) fail({std::string("\"") + c + "\""});
        ++pos_;
    }

    // Next non-space character, or '\0' at the end.
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(std::set<std::string> expected) { fail(std::move(expected), pos_); }
    [[noreturn]] void fail(std::set<std::string> expected, std::size_t at) {
        throw ParseError(at, std::move(expected));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t off, std::set<std::string> exp)
    : std::runtime_error(describe(off, exp)), offset(off), expected(std::move(exp)) {}

RingExprPtr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const RingExpr& e) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, expr::Zn>) return "Z/" + std::to_string(x.n);
            else if constexpr (std::is_same_v<T, expr::GF>)
                return "GF(" + std::to_string(x.p) + "^" + std::to_string(x.k) + ")";
            else if constexpr (std::is_same_v<T, expr::Mat>)
                return "M" + std::to_string(x.k) + "(" + to_string(*x.base) + ")";
            else if constexpr (std::is_same_v<T, expr::Prod>)
                return to_string(*x.lhs) + " x " + to_string(*x.rhs);
            else return "@" + x.name;
        },
        e.node);
}

RingTable build_ring(const RingExpr& e, const Catalog& catalog, const BuildOptions& opts) {
    return std::visit(
        [&](const auto& x) -> RingTable {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, expr::Zn>) {
                return make_zn(x.n, opts);
            } else if constexpr (std::is_same_v<T, expr::GF>) {
                if (x.k == 0 || x.k > 64) throw RingError("GF exponent must be in 1..64");
                return make_gf(x.p, static_cast<unsigned>(x.k), opts);
            } else if constexpr (std::is_same_v<T, expr::Mat>) {
                if (x.k == 0 || x.k > 64) throw RingError("matrix dimension must be in 1..64");
                return make_matrix_ring(build_ring(*x.base, catalog, opts), static_cast<unsigned>(x.k),
                                        opts);
            } else if constexpr (std::is_same_v<T, expr::Prod>) {
                return make_product(build_ring(*x.lhs, catalog, opts), build_ring(*x.rhs, catalog, opts),
                                    opts);
            } else {
                const RingTable& ring = catalog.get(x.name).ring;
                if (ring.order() > opts.order_cap) throw OrderCapExceeded(ring.order(), opts.order_cap);
                return ring;
            }
        },
        e.node);
}

}  // namespace nilclean
