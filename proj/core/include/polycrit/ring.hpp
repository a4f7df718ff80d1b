// A polynomial ring is a fixed, ordered list of variable names. Rings are
// shared immutably; two rings are interchangeable when their name lists match.
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace polycrit {

struct Ring {
  std::vector<std::string> vars;

  std::size_t size() const { return vars.size(); }

  // Index of a variable name, or -1 when absent.
  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return static_cast<int>(i);
    }
    return -1;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

// Validates that names are nonempty identifiers without duplicates.
RingPtr make_ring(std::vector<std::string> names);

// Variables named <stem>1 .. <stem>n.
RingPtr ring_x(std::size_t n, const std::string& stem = "x");

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->vars == b->vars;
}

}  // namespace polycrit
