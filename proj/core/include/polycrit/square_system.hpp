// A square polynomial system together with the side conditions that separate
// genuine critical points from artifacts of the construction (cleared
// denominators, symmetrized constraints, singular loci).
#pragma once

#include <optional>

#include "polycrit/poly_matrix.hpp"

namespace polycrit {

enum class VarRole { Model, Multiplier };

// Evaluated rank of `matrix` must equal `required` at genuine solutions.
struct RankCondition {
  PolyMatrix<Rat> matrix;
  int required = 0;
};

struct SquareSystem {
  PolySystem<Rat> equations;
  std::vector<VarRole> roles;                 // one entry per ring variable
  std::vector<Polynomial<Rat>> nonvanishing;  // must stay nonzero at solutions
  std::vector<Polynomial<Rat>> consistency;   // must vanish at solutions
  std::optional<RankCondition> rank_condition;
  std::optional<long long> expected_count;

  const RingPtr& ring() const { return equations.ring; }
  std::size_t num_vars() const { return equations.ring->size(); }

  std::size_t num_model_vars() const {
    std::size_t n = 0;
    for (VarRole r : roles) n += (r == VarRole::Model) ? 1 : 0;
    return n;
  }

  void validate() const {
    equations.validate();
    if (equations.size() != num_vars()) {
      throw std::invalid_argument("critical system is not square");
    }
    if (roles.size() != num_vars()) {
      throw std::invalid_argument("variable roles do not match the ring");
    }
    for (const auto& p : nonvanishing) {
      if (!same_ring(p.ring(), ring())) throw std::invalid_argument("side condition ring mismatch");
    }
    for (const auto& p : consistency) {
      if (!same_ring(p.ring(), ring())) throw std::invalid_argument("side condition ring mismatch");
    }
  }
};

}  // namespace polycrit
