#include "polycrit/parse.hpp"

#include <cctype>

namespace polycrit {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial<Rat> run() {
    Polynomial<Rat> acc(ring_);
    skip_ws();
    if (eof()) throw ParseError("empty polynomial", pos_);
    bool negative = consume_sign();
    parse_term(acc, negative);
    skip_ws();
    while (!eof()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      parse_term(acc, c == '-');
      skip_ws();
    }
    return acc;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool consume_sign() {
    skip_ws();
    if (!eof() && (peek() == '+' || peek() == '-')) {
      bool neg = peek() == '-';
      ++pos_;
      return neg;
    }
    return false;
  }

  void parse_term(Polynomial<Rat>& acc, bool negative) {
    Rat coef = negative ? Rat(-1) : Rat(1);
    Monomial mono(ring_->size());
    parse_factor(coef, mono);
    skip_ws();
    while (!eof() && peek() == '*') {
      ++pos_;
      parse_factor(coef, mono);
      skip_ws();
    }
    acc.add_term(mono, coef);
  }

  void parse_factor(Rat& coef, Monomial& mono) {
    skip_ws();
    if (eof()) throw ParseError("expected a factor", pos_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coef *= parse_rational();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name = parse_identifier();
      int index = ring_->index_of(name);
      if (index < 0) throw ParseError("unknown variable '" + name + "'", start);
      std::uint32_t exp = 1;
      skip_ws();
      if (!eof() && peek() == '^') {
        ++pos_;
        exp = parse_uint();
      }
      mono.e[static_cast<std::size_t>(index)] += exp;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Rat parse_rational() {
    Rat num(parse_digits());
    skip_ws();
    if (!eof() && peek() == '/') {
      ++pos_;
      std::size_t dpos = pos_;
      Rat den(parse_digits());
      if (is_zero(den)) throw ParseError("zero denominator", dpos);
      num /= den;
    }
    return num;
  }

  std::uint32_t parse_uint() {
    Rat v(parse_digits());
    if (v > Rat(1000000)) throw ParseError("exponent too large", pos_);
    return static_cast<std::uint32_t>(v.get_num().get_ui());
  }

  std::string parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", pos_);
    return text_.substr(start, pos_ - start);
  }

  std::string parse_identifier() {
    std::size_t start = pos_;
    ++pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  const std::string& text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial<Rat> parse_polynomial(const std::string& text, const RingPtr& ring) {
  if (!ring) throw std::invalid_argument("parse_polynomial: null ring");
  return Parser(text, ring).run();
}

std::string format_polynomial(const Polynomial<Rat>& f) {
  if (f.is_zero()) return "0";
  const auto& vars = f.ring()->vars;
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : f.terms()) {
    Rat mag = abs(coef);
    bool negative = sgn(coef) < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t v = 0; v < mono.e.size(); ++v) {
      if (mono.e[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += vars[v];
      if (mono.e[v] > 1) factors += "^" + std::to_string(mono.e[v]);
    }
    if (factors.empty()) {
      out += rat_to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += rat_to_string(mag) + "*" + factors;
    }
  }
  return out;
}

}  // namespace polycrit
