#pragma once

#include <memory>

#include "gkwb/poly.hpp"

namespace gkwb {

// Expression grammar (CLI --expr values, element files, rule right-hand sides):
//
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | ident | '(' expr ')' | '[' expr ',' expr ']'
//
// '[a,b]' is the commutator a*b - b*a, evaluated in the free algebra.
// Identifiers are letters followed by optional digits (x, y, z1, ...).
// There is no juxtaposition product; '*' is always explicit.

struct ExprNode {
    enum class Kind { constant, generator, sum, difference, product, power, bracket };
    Kind kind;
    Rational value;      // constant
    Letter gen = 0;      // generator
    unsigned exponent = 0;  // power
    std::unique_ptr<ExprNode> lhs, rhs;
};

using ExprPtr = std::unique_ptr<ExprNode>;

// Throws ParseError (with byte offset) on syntax errors, unknown generator
// names, or negative exponents.
ExprPtr parse_ast(std::string_view text, const GensPtr& gens);
Poly eval_ast(const ExprNode& node, const GensPtr& gens);

// parse + evaluate in the free algebra; the result is NOT normal-formed
Poly parse_expr(std::string_view text, const GensPtr& gens);

// a single monomial with coefficient 1 (rule left-hand sides)
Word parse_word(std::string_view text, const GensPtr& gens);

}  // namespace gkwb
