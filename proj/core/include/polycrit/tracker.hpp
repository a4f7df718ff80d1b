// Total-degree homotopy continuation. Paths run from the roots of a random
// start system x_i^d - r_i to the target along gamma*(1-t)*G + t*F, with an
// Euler predictor, a Newton corrector, endpoint refinement against F alone,
// and bookkeeping that accounts for every tracked path.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "polycrit/rng.hpp"
#include "polycrit/square_system.hpp"

namespace polycrit {

struct TrackerConfig {
  std::uint64_t seed = 0;
  int threads = 1;
  double initial_step = 0.05;
  double min_step = 1e-7;
  double corrector_tol = 1e-10;
  int corrector_iters = 3;
  double endpoint_tol = 1e-13;
  int endpoint_iters = 50;
  double dedup_tol = 1e-8;
  double reality_tol = 1e-8;
  double divergence_bound = 1e8;
  double residual_tol = 1e-8;
  double contraction_bound = 0.5;
  double nonvanishing_tol = 1e-8;
  double consistency_tol = 1e-6;
  double rank_tol = 1e-6;
  int max_steps = 100000;

  void validate() const;
};

// Start system x_i^{degrees[i]} = constants[i]; its roots are all
// combinations of the d_i-th roots, indexed in mixed radix.
struct StartSystem {
  std::vector<int> degrees;
  std::vector<CD> constants;

  unsigned long long path_count() const;
  std::vector<CD> root(unsigned long long index) const;
  PolySystem<CD> to_system(const RingPtr& ring) const;
};

// Constants drawn on circles of radius in [1/2, 3/2).
StartSystem make_start_system(const std::vector<int>& degrees, SeededRng& rng);

enum class PathStatus { Converged, Diverged, Truncated };

struct PathResult {
  std::vector<CD> point;
  PathStatus status = PathStatus::Truncated;
  int steps = 0;
};

struct RefineResult {
  std::vector<CD> point;
  double residual = 0;
  double contraction = 0;
  bool converged = false;
};

class Homotopy {
 public:
  Homotopy(PolySystem<CD> target, StartSystem start, CD gamma);
  ~Homotopy();
  Homotopy(Homotopy&&) noexcept;
  Homotopy& operator=(Homotopy&&) noexcept;

  unsigned long long path_count() const;
  PathResult track(unsigned long long index, const TrackerConfig& cfg) const;
  // Newton against the target system alone, used on endpoints.
  RefineResult refine(std::vector<CD> x, const TrackerConfig& cfg) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct Solution {
  std::vector<CD> point;
  double residual = 0;
  double certificate = 0;  // contraction ratio of the last two Newton steps
  bool is_real = false;
  unsigned long long path_id = 0;
};

// Lexicographic by rounded (Re, Im) pairs at 1e-6 granularity, exact values
// as tiebreak; a total deterministic order on solution points.
bool canonical_less(std::span<const CD> a, std::span<const CD> b);

// Collapses points whose relative max-norm distance is within tol, keeping
// the first representative in input order; `extra` counts dropped entries.
std::vector<Solution> dedup_solutions(std::vector<Solution> sorted, double tol,
                                      std::size_t* extra = nullptr);

struct SolutionSet {
  std::vector<Solution> solutions;  // deduplicated, canonically sorted
  unsigned long long paths = 0;
  unsigned long long failed = 0;     // endpoint refinement rejected
  unsigned long long diverged = 0;
  unsigned long long filtered = 0;   // side conditions violated
  unsigned long long duplicates = 0; // extra paths landing on kept solutions
  std::optional<long long> expected_count;
  std::vector<std::string> warnings;

  std::size_t real_count() const {
    std::size_t n = 0;
    for (const auto& s : solutions) n += s.is_real ? 1 : 0;
    return n;
  }

  // Every tracked path lands in exactly one bucket.
  bool accounted() const {
    return solutions.size() + failed + diverged + filtered + duplicates == paths;
  }
};

SolutionSet solve(const SquareSystem& sys, const TrackerConfig& cfg);

std::size_t count_real(const SolutionSet& set);

// Real solution with the least objective value among those passing
// `feasible` (everything when empty); ties keep the canonically first.
// Throws std::runtime_error when no feasible real solution exists.
const Solution& select_minimizer(
    const SolutionSet& set, const std::function<double(std::span<const CD>)>& objective,
    const std::function<bool(std::span<const CD>)>& feasible = {});

}  // namespace polycrit
