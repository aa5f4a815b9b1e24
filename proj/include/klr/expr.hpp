#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klr/thick.hpp"

namespace klr {

/*
  Surface syntax for elements, mirroring the generator names:

    expr   := term (('+'|'-') term)*
    term   := [rat '*'] factor ('*' factor)*
    factor := atom ['^' uint] | '(' expr ')'
    rat    := int ['/' uint]
    atom   := 'e' '(' label (',' label)* ')' | 'e' '(' ')'
            | 'x' uint | 'y' uint | 'psi' uint | 'Psi' uint
            | 'E' '[' uint ',' label ',' uint ']'

  Labels are the configured names, '~'-prefixed for barred ones; 'L1'..'Lm'
  name the thick labels when a (lambda, nu) context is present.  Whitespace
  insensitive.
*/

struct ExprAst;

struct Atom {
    enum class Kind { Idem, X, Y, Psi, ThickPsi, ESym, Rational, Paren };
    Kind kind;
    std::size_t offset = 0;          // byte offset, for diagnostics
    int index = 0;                   // x/y/psi/Psi
    int power = 1;
    std::vector<std::string> labels; // Idem
    int esym_k = 0;                  // ESym
    std::string esym_color;
    int esym_j = 0;
    Rat value;                       // Rational
    std::shared_ptr<ExprAst> sub;    // Paren
};

struct ExprTerm {
    int sign = 1;
    std::vector<Atom> factors;
};

struct ExprAst {
    std::vector<ExprTerm> terms;
};

// Grammar parse only; label and index legality is checked at evaluation.
// Throws parse_error with byte offset and expected-token set.
ExprAst parse_expr(const std::string& text);

struct EvalContext {
    ContextPtr ambient;
    ThickContextPtr thick; // nullable
};

struct EvalResult {
    Element value;     // ambient expansion in either case
    bool used_thick = false;
};

EvalResult evaluate(const ExprAst& ast, const EvalContext& ctx);

// Canonical text; terms sorted by (degree, perm, exps, bottom).  The output
// re-parses and re-evaluates to the same element.
std::string print_element(const Element& e);
inline std::string print_element(const ThickElement& e) { return print_element(e.ambient); }

} // namespace klr
