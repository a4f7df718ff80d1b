// Text form of rational polynomials. The grammar is a sum of terms joined
// by '+'/'-'; a term is a '*'-separated product of rational constants
// ("5", "-7/3" only via a leading sign) and powered variables ("x2^3").
#pragma once

#include <stdexcept>
#include <string>

#include "polycrit/polynomial.hpp"

namespace polycrit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error("parse error at index " + std::to_string(pos) + ": " + msg),
        position(pos) {}

  std::size_t position;
};

Polynomial<Rat> parse_polynomial(const std::string& text, const RingPtr& ring);

// Canonical text: terms in descending grevlex order, coefficients as "p" or
// "p/q", unit coefficients omitted. Round-trips through parse_polynomial.
std::string format_polynomial(const Polynomial<Rat>& f);

}  // namespace polycrit
