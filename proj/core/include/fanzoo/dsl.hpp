#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "fanzoo/functional.hpp"

namespace fanzoo::dsl {

// Total expression language over one sequence variable f. Arithmetic is on
// naturals; "-" is truncated subtraction; if0 evaluates only the taken
// branch, so traces reflect exactly the bits a run looked at.
//
//   expr   := term { ("+" | "-") term }
//   term   := factor { "*" factor }
//   factor := NAT | "f" "[" expr "]" | "max" "(" expr "," expr ")"
//           | "if0" "(" expr "," expr "," expr ")" | "(" expr ")"
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { nat, bit, add, monus, mul, max, if_zero };

    Kind kind;
    std::uint64_t value = 0;  // nat only
    ExprPtr a, b, c;          // operands; if_zero uses all three
};

ExprPtr nat(std::uint64_t value);
ExprPtr bit(ExprPtr index);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr monus(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr max(ExprPtr a, ExprPtr b);
ExprPtr if_zero(ExprPtr cond, ExprPtr then_e, ExprPtr else_e);

// Syntax errors carry line:column positions.
ExprPtr parse(std::string_view source);

// Canonical rendering; parse(print(e)) reproduces e structurally.
std::string print(const Expr& e);

bool equal(const Expr& a, const Expr& b);

// The compiled functional's name is the canonical rendering. Arithmetic that
// would overflow 64 bits raises a resource-limit error.
Functional2 compile(const ExprPtr& e);

}
