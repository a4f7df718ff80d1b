#include "polycrit/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "polycrit/parse.hpp"

namespace polycrit {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON document");
  return doc;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> string_array(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw std::invalid_argument(std::string("missing array field: ") + key);
  }
  std::vector<std::string> out;
  for (const auto& item : doc[key]) {
    if (!item.is_string()) {
      throw std::invalid_argument(std::string("non-string entry in: ") + key);
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Json complex_pair(const CD& z) { return Json::array({z.real(), z.imag()}); }

Json solution_to_json(const Solution& s) {
  Json j;
  Json point = Json::array();
  for (const CD& z : s.point) point.push_back(complex_pair(z));
  j["point"] = std::move(point);
  j["residual"] = s.residual;
  j["is_real"] = s.is_real;
  j["certificate"] = s.certificate;
  return j;
}

Json config_to_json(const TrackerConfig& cfg) {
  Json j;
  j["initial_step"] = cfg.initial_step;
  j["min_step"] = cfg.min_step;
  j["corrector_tol"] = cfg.corrector_tol;
  j["endpoint_tol"] = cfg.endpoint_tol;
  j["dedup_tol"] = cfg.dedup_tol;
  j["reality_tol"] = cfg.reality_tol;
  j["divergence_bound"] = cfg.divergence_bound;
  j["residual_tol"] = cfg.residual_tol;
  j["contraction_bound"] = cfg.contraction_bound;
  j["nonvanishing_tol"] = cfg.nonvanishing_tol;
  j["consistency_tol"] = cfg.consistency_tol;
  j["rank_tol"] = cfg.rank_tol;
  j["max_steps"] = cfg.max_steps;
  return j;
}

Json set_to_json(const SolutionSet& set, const TrackerConfig& cfg) {
  Json j;
  j["config"] = config_to_json(cfg);
  j["paths"] = set.paths;
  j["found"] = set.solutions.size();
  j["real"] = set.real_count();
  j["failed"] = set.failed;
  j["diverged"] = set.diverged;
  j["filtered"] = set.filtered;
  j["duplicates"] = set.duplicates;
  if (set.expected_count.has_value()) {
    j["expected"] = *set.expected_count;
  } else {
    j["expected"] = nullptr;
  }
  j["warnings"] = set.warnings;
  Json sols = Json::array();
  for (const auto& s : set.solutions) sols.push_back(solution_to_json(s));
  j["solutions"] = std::move(sols);
  return j;
}

}  // namespace

ModelSpec model_from_json(const std::string& text) {
  Json doc = parse_document(text);
  ModelSpec model;
  RingPtr ring = make_ring(string_array(doc, "variables"));
  model.generators = PolySystem<Rat>(ring);
  for (const std::string& g : string_array(doc, "generators")) {
    model.generators.push_back(parse_polynomial(g, ring));
  }
  if (!doc.contains("codim") || !doc["codim"].is_number_integer()) {
    throw std::invalid_argument("missing integer field: codim");
  }
  model.codim = doc["codim"].get<int>();
  model.validate();
  return model;
}

ModelSpec model_from_file(const std::string& path) { return model_from_json(slurp(path)); }

std::string model_to_json(const ModelSpec& model) {
  Json j;
  j["variables"] = model.ring()->vars;
  Json gens = Json::array();
  for (const auto& g : model.generators.polys) gens.push_back(format_polynomial(g));
  j["generators"] = std::move(gens);
  j["codim"] = model.codim;
  return j.dump(2) + "\n";
}

MembershipProblem membership_from_json(const std::string& text) {
  Json doc = parse_document(text);
  MembershipProblem problem;
  problem.ring = make_ring(string_array(doc, "variables"));
  std::size_t n = problem.ring->size();
  if (!doc.contains("conditions") || !doc["conditions"].is_array()) {
    throw std::invalid_argument("missing array field: conditions");
  }
  for (const auto& cond : doc["conditions"]) {
    if (!cond.contains("operator") || !cond["operator"].is_array()) {
      throw std::invalid_argument("condition without operator term list");
    }
    DiffOp op(problem.ring);
    for (const auto& term : cond["operator"]) {
      if (!term.contains("coeff") || !term["coeff"].is_string() ||
          !term.contains("partial") || !term["partial"].is_array()) {
        throw std::invalid_argument("operator term needs coeff string and partial array");
      }
      Monomial order(n);
      const auto& partial = term["partial"];
      if (partial.size() != n) {
        throw std::invalid_argument("partial length does not match variables");
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (!partial[v].is_number_integer() || partial[v].get<int>() < 0) {
          throw std::invalid_argument("partial entries must be nonnegative integers");
        }
        order.e[v] = partial[v].get<std::uint32_t>();
      }
      op.add_term(order, parse_polynomial(term["coeff"].get<std::string>(), problem.ring));
    }
    LinearPrime prime;
    if (!cond.contains("prime") || !cond["prime"].is_array()) {
      throw std::invalid_argument("condition without prime index list");
    }
    for (const auto& idx : cond["prime"]) {
      if (!idx.is_number_integer() || idx.get<long>() < 0 ||
          idx.get<std::size_t>() >= n) {
        throw std::invalid_argument("prime indices must name ring variables");
      }
      prime.vanishing.push_back(idx.get<std::size_t>());
    }
    problem.conditions.emplace_back(std::move(op), std::move(prime));
  }
  return problem;
}

MembershipProblem membership_from_file(const std::string& path) {
  return membership_from_json(slurp(path));
}

namespace {

Rat rational_value(const Json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  throw std::invalid_argument("weights must be integers or rational strings");
}

}  // namespace

std::map<std::string, Rat> cegm_weights_from_json(const std::string& text,
                                                  const std::vector<std::string>& labels) {
  Json doc = parse_document(text);
  std::map<std::string, Rat> weights;
  if (doc.is_array()) {
    if (doc.size() != labels.size()) {
      throw std::invalid_argument("weight array length does not match coordinate count");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) weights[labels[i]] = rational_value(doc[i]);
    return weights;
  }
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) weights[key] = rational_value(value);
    for (const auto& label : labels) {
      if (weights.find(label) == weights.end()) {
        throw std::invalid_argument("missing weight for coordinate " + label);
      }
    }
    if (weights.size() != labels.size()) {
      throw std::invalid_argument("weight keys do not match the chart coordinates");
    }
    return weights;
  }
  throw std::invalid_argument("weights must be a JSON array or object");
}

std::map<std::string, Rat> cegm_weights_from_file(const std::string& path,
                                                  const std::vector<std::string>& labels) {
  return cegm_weights_from_json(slurp(path), labels);
}

std::string solution_set_to_json(const SolutionSet& set, const TrackerConfig& cfg) {
  return set_to_json(set, cfg).dump(2) + "\n";
}

std::string report_to_json(const RunReport& report) {
  Json j;
  j["command"] = report.command;
  j["seed"] = report.seed;
  j["threads"] = report.threads;
  j["strict"] = report.strict;
  if (!report.facts.empty()) {
    Json facts;
    for (const auto& [key, value] : report.facts) facts[key] = value;
    j["facts"] = std::move(facts);
  }
  j["warnings"] = report.warnings;
  if (report.result.has_value()) {
    j["result"] = set_to_json(*report.result,
                              report.config.value_or(TrackerConfig{}));
  }
  j["wall_seconds"] = report.wall_seconds;
  return j.dump(2) + "\n";
}

}  // namespace polycrit
