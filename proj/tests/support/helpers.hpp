#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "monosep/parse.hpp"
#include "monosep/relation_ideal.hpp"

inline monosep::IntPoly P(std::string_view text) { return monosep::parse_int_poly(text); }

inline monosep::Presentation pres(std::initializer_list<std::string_view> relators) {
  std::vector<monosep::IntPoly> v;
  for (auto r : relators) v.push_back(P(r));
  return monosep::Presentation(std::move(v));
}

inline monosep::RatPoly R(std::initializer_list<monosep::BigRat> c) { return monosep::RatPoly(std::vector<monosep::BigRat>(c)); }
