#include "polycrit/degree_oracle.hpp"

#include <stdexcept>

namespace polycrit {

namespace {

// sum over (i1..ic) with i1+...+ic <= budget of prod_j bases[j]^{ij},
// computed from position idx onward.
Int truncated_power_sum(const std::vector<Int>& bases, std::size_t idx, int budget) {
  if (idx == bases.size()) return Int(1);
  Int total(0);
  Int power(1);
  for (int i = 0; i <= budget; ++i) {
    total += power * truncated_power_sum(bases, idx + 1, budget - i);
    power *= bases[idx];
  }
  return total;
}

void check_ci_args(int n, int c, const std::vector<int>& degrees) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  if (c < 1 || c > n) throw std::invalid_argument("codimension out of range");
  if (degrees.size() != static_cast<std::size_t>(c)) {
    throw std::invalid_argument("need exactly one degree per codimension");
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) throw std::invalid_argument("degrees must be positive");
    if (i > 0 && degrees[i] > degrees[i - 1]) {
      throw std::invalid_argument("degrees must be sorted descending");
    }
  }
}

Int ci_degree_sum(int n, int c, const std::vector<int>& degrees, int shift) {
  check_ci_args(n, c, degrees);
  Int product(1);
  std::vector<Int> bases;
  bases.reserve(degrees.size());
  for (int d : degrees) {
    product *= d;
    bases.emplace_back(d - shift);
  }
  return product * truncated_power_sum(bases, 0, n - c);
}

}  // namespace

Int ed_degree_ci(int n, int c, const std::vector<int>& degrees) {
  return ci_degree_sum(n, c, degrees, 1);
}

Int ml_degree_ci(int n, int c, const std::vector<int>& degrees) {
  return ci_degree_sum(n, c, degrees, 0);
}

Int ed_degree_curve(const Int& d, const Int& g) {
  if (d < 1) throw std::invalid_argument("curve degree must be positive");
  return 3 * d + 2 * g - 2;
}

Int ci_space_curve_genus(int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("surface degrees must be positive");
  Int a(d1), b(d2);
  Int twice = a * b * (a + b) - 4 * a * b + 2;
  if (twice % 2 != 0) throw std::logic_error("genus formula produced a half-integer");
  return twice / 2;
}

std::array<Int, 3> polar_degrees_surface(int d) {
  if (d < 1) throw std::invalid_argument("surface degree must be positive");
  Int dd(d);
  return {dd * (dd - 1) * (dd - 1), dd * (dd - 1), dd};
}

GaussianDegrees gaussian_ml_degrees_n4(int k) {
  static constexpr long kMl[] = {3, 9, 17, 21, 21, 17, 9, 3};
  static constexpr long kReciprocal[] = {5, 19, 45, 71, 81, 63, 29, 7};
  if (k < 2 || k > 9) throw std::invalid_argument("model dimension must be in [2, 9]");
  return {kMl[k - 2], kReciprocal[k - 2]};
}

std::optional<Int> cegm_ml_degree(int k, int m) {
  if (k < 2 || k > m - 2) throw std::invalid_argument("need 2 <= k <= m-2");
  int kk = std::min(k, m - k);
  if (kk == 2) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m - 3));
    return f;
  }
  if (kk == 3 && m >= 5 && m <= 9) {
    static constexpr long kCounts[] = {2, 26, 1272, 188112, 74570400};
    return Int(kCounts[m - 5]);
  }
  if (kk == 4 && m == 8) return Int(5211816);
  return std::nullopt;
}

}  // namespace polycrit
