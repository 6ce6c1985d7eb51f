#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gdua/core.hpp"

namespace gdua {

// Canonical textual forms.  Scalars: "-3/2", "(1+2*sqrt(-3))/2".  Elements:
// monomials printed in PBW order u-h-d and sorted by (Z-degree, u, h, d),
// e.g. "3*u*d^2 - h".  Printed output re-parses to an equal value.
std::string to_string(const Scalar& x);
std::string to_string(const Poly& p);
std::string to_string(const Monomial& m);
std::string to_string(const Element& x);

// Expression grammar over a session presentation:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := scalar | gen ('^' nat)? | '(' expr ')'
//   gen    := 'd' | 'u' | 'h'
//   scalar := rational | '(' a ('+'|'-') b '*sqrt(' int ')' ')' ['/' nat]
// Implicit multiplication is rejected; throws SyntaxError with a position.
struct ExprAst {
    enum class Kind { scalar, generator, power, product, sum };
    Kind kind;
    Scalar scalar;                                    // kind == scalar
    Gen gen = Gen::d;                                 // kind == generator
    long exponent = 0;                                // kind == power
    std::vector<std::shared_ptr<ExprAst>> children;   // power/product/sum
    std::vector<int> signs;                           // kind == sum, +1/-1 per child
};

std::shared_ptr<ExprAst> parse_expression(const std::string& text);
Element eval_ast(const Presentation& pres, const ExprAst& ast);
Element parse_element(const Presentation& pres, const std::string& text);

// Whole-string scalar literal, e.g. "-3/2" or "(1+1*sqrt(2))/2".  Also
// accepts "sqrt(n)" and normalizes it into the canonical quadratic form.
Scalar parse_scalar(const std::string& text);

} // namespace gdua
