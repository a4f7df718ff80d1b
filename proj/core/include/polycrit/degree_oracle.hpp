// Closed-form critical-point counts. These are the expected solution counts
// the solver checks itself against; everything here is exact big-integer
// arithmetic, no floating point.
#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <vector>

namespace polycrit {

using Int = mpz_class;

// Euclidean distance degree of a generic complete intersection of codimension
// c in C^n cut out by degrees d1 >= ... >= dc:
//   d1···dc * sum_{i1+...+ic <= n-c} (d1-1)^{i1} ··· (dc-1)^{ic}.
// Degrees must be passed sorted descending.
Int ed_degree_ci(int n, int c, const std::vector<int>& degrees);

// Euclidean distance degree of a smooth curve of degree d and genus g in any
// ambient dimension >= 3: 3d + 2g - 2.
Int ed_degree_curve(const Int& d, const Int& g);

// Genus of a smooth complete intersection curve of surfaces with degrees
// d1, d2 in 3-space: d1*d2*(d1+d2)/2 - 2*d1*d2 + 1.
Int ci_space_curve_genus(int d1, int d2);

// Polar degrees (delta_1, delta_2, delta_3) of a smooth surface of degree d
// in 3-space: (d(d-1)^2, d(d-1), d). Their sum is the ED degree d^3-d^2+d.
std::array<Int, 3> polar_degrees_surface(int d);

// Maximum likelihood degree of a generic complete intersection of codimension
// c in the n-simplex, same sum as ed_degree_ci but with factors dj^{ij}.
Int ml_degree_ci(int n, int c, const std::vector<int>& degrees);

struct GaussianDegrees {
  long ml;
  long reciprocal;
};

// ML degrees of generic k-dimensional linear concentration models on 4x4
// symmetric matrices, k in [2, 9]; `ml` is the count for the concentration
// parametrization and `reciprocal` for the covariance parametrization.
GaussianDegrees gaussian_ml_degrees_n4(int k);

// Known ML degrees of the (k,m) scattering models on the (k-1)(m-k-1)
// dimensional moduli space; k and m-k give the same value. Requires
// 2 <= k <= m-2. Returns nullopt where no closed value is known.
std::optional<Int> cegm_ml_degree(int k, int m);

}  // namespace polycrit
