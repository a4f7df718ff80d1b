#include "polycrit/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polycrit {

namespace {

// |q - a| < |q - b| using exact arithmetic (doubles embed exactly into Rat).
bool closer(const Rat& q, double a, double b) {
  Rat da = q - Rat(a);
  Rat db = q - Rat(b);
  return cmp(abs(da), abs(db)) < 0;
}

}  // namespace

double to_double(const Rat& q) {
  double d = mpq_get_d(q.get_mpq_t());
  if (!std::isfinite(d)) return d;
  double inf = std::numeric_limits<double>::infinity();
  for (double cand : {std::nextafter(d, -inf), std::nextafter(d, inf)}) {
    if (std::isfinite(cand) && closer(q, cand, d)) d = cand;
  }
  return d;
}

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace polycrit
