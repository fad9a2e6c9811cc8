#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monosep/poly.hpp"

namespace monosep {

struct Term {
  BigInt coefficient;
  unsigned degree = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Parsed polynomial: nonzero terms with distinct degrees, descending.
struct PolyExpr {
  std::vector<Term> terms;

  IntPoly to_poly() const;
  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;
};

/// Grammar: term (('+' | '-') term)*, term := [sign] [integer] ['*'] 'x' ['^' integer]
/// or an integer. Whitespace is ignored, repeated degrees are summed. Throws
/// SyntaxError with the offending offset, or Error(ConstantTerm) for a
/// nonzero constant term.
PolyExpr parse_poly(std::string_view text);

IntPoly parse_int_poly(std::string_view text);

PolyExpr to_expr(const IntPoly& p);

}  // namespace monosep
