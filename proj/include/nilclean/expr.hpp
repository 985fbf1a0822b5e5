#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "nilclean/catalog.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

struct RingExpr;
using RingExprPtr = std::shared_ptr<const RingExpr>;

namespace expr {
struct Zn {
    std::uint64_t n;
};
struct GF {
    std::uint64_t p;
    std::uint64_t k;
};
struct Mat {
    std::uint64_t k;
    RingExprPtr base;
};
struct Prod {
    RingExprPtr lhs;
    RingExprPtr rhs;
};
struct Named {
    std::string name;
};
}  // namespace expr

/// EXPR := TERM ("x" TERM)*
/// TERM := "Z/" INT | "GF(" INT "^" INT ")" | "M" INT "(" EXPR ")" | "@" NAME
struct RingExpr {
    std::variant<expr::Zn, expr::GF, expr::Mat, expr::Prod, expr::Named> node;
};

bool operator==(const RingExpr& a, const RingExpr& b);

RingExprPtr make_zn_expr(std::uint64_t n);
RingExprPtr make_gf_expr(std::uint64_t p, std::uint64_t k);
RingExprPtr make_mat_expr(std::uint64_t k, RingExprPtr base);
RingExprPtr make_prod_expr(RingExprPtr lhs, RingExprPtr rhs);
RingExprPtr make_named_expr(std::string name);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::set<std::string> expected);
    std::size_t offset;
    std::set<std::string> expected;
};

RingExprPtr parse_ring_expr(std::string_view text);

/// Canonical text; parse_ring_expr(to_string(e)) == e for left-nested products.
std::string to_string(const RingExpr& e);

RingTable build_ring(const RingExpr& e, const Catalog& catalog = Catalog::standard(),
                     const BuildOptions& opts = {});

}  // namespace nilclean
