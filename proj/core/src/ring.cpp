#include "polycrit/ring.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace polycrit {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

RingPtr make_ring(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) {
      throw std::invalid_argument("invalid variable name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
  }
  auto r = std::make_shared<Ring>();
  r->vars = std::move(names);
  return r;
}

RingPtr ring_x(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return make_ring(std::move(names));
}

}  // namespace polycrit
