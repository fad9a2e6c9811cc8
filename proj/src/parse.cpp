#include "monosep/parse.hpp"

#include <cctype>
#include <map>

namespace monosep {

IntPoly PolyExpr::to_poly() const {
  IntPoly p;
  for (const Term& t : terms) p += IntPoly::monomial(t.coefficient, t.degree);
  return p;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyExpr run() {
    std::map<unsigned, BigInt> acc;
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw SyntaxError(pos_, "expected '+' or '-' between terms");
      }
      first = false;
      const std::size_t term_start = pos_;
      auto [coeff, degree] = term();
      if (sign < 0) coeff = -coeff;
      if (degree == 0 && coeff != 0)
        throw Error(ErrorKind::ConstantTerm,
                    "constant term at offset " + std::to_string(term_start) +
                        ": polynomials must have zero constant term (no free term)");
      acc[degree] += coeff;
      skip_ws();
      if (pos_ == text_.size()) break;
    }
    PolyExpr out;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
      if (it->second != 0) out.terms.push_back({it->second, it->first});
    }
    return out;
  }

 private:
  std::pair<BigInt, unsigned> term() {
    BigInt coeff = 1;
    bool have_number = false;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = integer();
      have_number = true;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != 'x') throw SyntaxError(pos_, "expected 'x' after '*'");
      }
    }
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      skip_ws();
      unsigned degree = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw SyntaxError(pos_, "expected exponent after '^'");
        const BigInt e = integer();
        if (e > 100000) throw SyntaxError(pos_, "exponent too large");
        degree = static_cast<unsigned>(e.get_ui());
      }
      return {coeff, degree};
    }
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(pos_, std::string("unknown variable '") + text_[pos_] + "'; only 'x' is accepted");
    if (!have_number) {
      if (pos_ == text_.size()) throw SyntaxError(pos_, "unexpected end of input");
      throw SyntaxError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    }
    return {coeff, 0};
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_poly(std::string_view text) { return Parser(text).run(); }

IntPoly parse_int_poly(std::string_view text) { return parse_poly(text).to_poly(); }

PolyExpr to_expr(const IntPoly& p) {
  PolyExpr out;
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i] != 0) out.terms.push_back({cs[i], static_cast<unsigned>(i)});
  }
  return out;
}

}  // namespace monosep
