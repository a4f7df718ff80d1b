// JSON faces of the library: model descriptions and membership problems on
// the way in, solution sets and run reports on the way out. The public
// surface trades in strings so the JSON implementation stays private.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycrit/critical_systems.hpp"
#include "polycrit/pde.hpp"
#include "polycrit/tracker.hpp"

namespace polycrit {

// Model files look like
//   {"variables": ["x1", "x2"], "generators": ["x1^2 + x2^2 - 1"], "codim": 1}
// Malformed documents raise std::invalid_argument with the offending field.
ModelSpec model_from_json(const std::string& text);
ModelSpec model_from_file(const std::string& path);
std::string model_to_json(const ModelSpec& model);

// Differential membership problems:
//   {"variables": [names],
//    "conditions": [{"operator": [{"coeff": poly, "partial": [ints]}],
//                    "prime": [variable indices]}]}
struct MembershipProblem {
  RingPtr ring;
  std::vector<std::pair<DiffOp, LinearPrime>> conditions;
};

MembershipProblem membership_from_json(const std::string& text);
MembershipProblem membership_from_file(const std::string& path);

// Scattering weight files: either an array of rationals aligned with
// `labels` or an object keyed by label. Values may be integers or "p/q"
// strings. Every label must be covered exactly once.
std::map<std::string, Rat> cegm_weights_from_json(const std::string& text,
                                                  const std::vector<std::string>& labels);
std::map<std::string, Rat> cegm_weights_from_file(const std::string& path,
                                                  const std::vector<std::string>& labels);

// Counts, tolerance echo, and the solutions themselves; reports with the
// same seed serialize byte for byte.
std::string solution_set_to_json(const SolutionSet& set, const TrackerConfig& cfg);

// One command run. `facts` carries command-specific scalar output (counts,
// minimizers, verification verdicts) in insertion order.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  int threads = 1;
  bool strict = false;
  std::optional<SolutionSet> result;
  std::optional<TrackerConfig> config;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> warnings;
  double wall_seconds = 0;
};

// Serializes with a fixed key order, wall_seconds last, so reports can be
// compared after dropping their final line.
std::string report_to_json(const RunReport& report);

}  // namespace polycrit
