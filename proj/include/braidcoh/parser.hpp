#pragma once

#include "braidcoh/braid.hpp"
#include "braidcoh/conditions.hpp"
#include "braidcoh/diagram.hpp"
#include "braidcoh/expr.hpp"
#include "braidcoh/model.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidcoh {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line),
          col(col) {}
    std::size_t line, col;
};

/* Object grammar (binary operators left-associative, * binds tighter):
     obj    := term ('+' term)*
     term   := factor ('*' factor)*
     factor := '0' | '1' | identifier | '(' obj ')'            */
Obj parse_object(std::string_view text);

/* Morphism grammar (three binary operators, all left-associative, ';'
   loosest, then '(+)', then '(x)'):
     morph   := sumExpr (';' sumExpr)*
     sumExpr := prodExpr ('(+)' prodExpr)*
     prodExpr:= primary ('(x)' primary)*
     primary := '(' morph ')' | 'inv' '(' morph ')' | 'id' '(' obj ')'
              | 'aP'|'aT' '(' obj ',' obj ',' obj ')'
              | 'gP'|'gT' '(' obj ',' obj ')'
              | 'lP'|'rP'|'lT'|'rT'|'eps' '(' obj ')'
              | 'delta' '(' obj ',' obj ',' obj ')'            */
Morph parse_morphism(std::string_view text);

/* Braid word: generators 's1 s2 ...' with a trailing apostrophe for the
   inverse, e.g. "s1 s2' s1". strands == 0 infers the count as the largest
   generator index + 1 (at least 1); an explicit count smaller than that is
   rejected. */
BraidWord parse_braid(std::string_view text, int strands = 0);

/* Assignment text: one atom per line, 'NAME = d1,d2,...' with integer
   degrees; an empty right side gives the empty basis. '#' starts a comment,
   blank lines are skipped. */
Assignment parse_assignment_text(std::string_view text);

// one 'NAME=d1,d2,...' command-line item folded into an assignment
void apply_atom_spec(Assignment& asg, std::string_view spec);

/* Diagram file:
     diagram NAME
     vertices:
       <object expression, one per line>
     edges:
       <src index> -> <dst index> : <morphism expression>
   '#' comments and blank lines allowed anywhere. */
Diagram parse_diagram_file(std::string_view text);

}  // namespace braidcoh
