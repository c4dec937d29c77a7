#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "antifactor/degree_spec.hpp"
#include "antifactor/factor.hpp"
#include "antifactor/graph.hpp"

// Exact brute-force structure engine for small instances: deviation minimum,
// optimal degree sets, the (A, B, C, D) decomposition, criticality, the
// deficiency identity and the structural audits built on them.
namespace antifactor::oracle {

struct Config {
  int enum_cap = 24;    // max |E| for subset enumeration (hard limit 63)
  int subset_cap = 18;  // max |X| for the Tutte-type subset search
  int jobs = 1;         // workers for the enumeration sweep
};

// Set of small non-negative integers (degrees), as a bitmask.
class DegreeValues {
 public:
  DegreeValues() = default;
  explicit DegreeValues(std::uint64_t mask) : mask_(mask) {}

  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  bool contains(int d) const { return d >= 0 && d < 64 && ((mask_ >> d) & 1U); }
  int min() const;
  int max() const;
  bool is_interval() const;
  std::vector<int> values() const;
  void insert(int d) { mask_ |= std::uint64_t{1} << d; }

  friend bool operator==(const DegreeValues&, const DegreeValues&) = default;

 private:
  std::uint64_t mask_ = 0;
};

// Everything one full sweep over the optimal subgraphs yields. Subgraphs are
// edge bitmasks (bit i = edge i).
struct Sweep {
  long nabla = 0;
  // Lexicographically smallest optimal subgraph: edge 0 is the most
  // significant position and "absent" sorts before "present".
  std::uint64_t first_optimum = 0;
  std::vector<DegreeValues> degree_sets;  // I(v), flat-indexed
  // witness[v][d]: lexicographically smallest optimal subgraph with d_F(v) = d
  // (meaningful only when d is in I(v)).
  std::vector<std::vector<std::uint64_t>> witness;
  std::uint64_t optimum_count = 0;
};

Sweep sweep(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config = {});

struct Minimum {
  long nabla = 0;
  std::uint64_t first_optimum = 0;
};

// The minimizing half of sweep() alone.
Minimum minimize(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config = {});

// Calls `visit` on every optimal subgraph, in lexicographic order.
void for_each_optimum(const BipartiteGraph& g, const DegreeSpec& spec, long nabla,
                      const std::function<void(std::uint64_t)>& visit, const Config& config = {});

struct NablaResult {
  long value = 0;
  FactorSubgraph optimum;
};

NablaResult nabla(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config = {});

std::vector<DegreeValues> degree_profile(const BipartiteGraph& g, const DegreeSpec& spec,
                                         const Config& config = {});

enum class Label : std::uint8_t { A, B, C, D };

char label_char(Label l);

struct StructureReport {
  long nabla = 0;
  FactorSubgraph one_optimal;
  std::vector<DegreeValues> degree_sets;
  std::vector<Label> partition;  // flat-indexed
  bool critical = false;
  int component_count_d = 0;  // components of G[D]
  long deficiency_rhs = 0;
  bool deficiency_identity_holds = false;

  std::vector<Vertex> members(Label l, const BipartiteGraph& g) const;
};

// Labels by precedence C, A, B, D. A set with a tail has max +inf, so such
// vertices are never labelled A.
std::vector<Label> classify(const std::vector<DegreeValues>& degree_sets, const DegreeSpec& spec);

StructureReport decomposition(const BipartiteGraph& g, const DegreeSpec& spec,
                              const Config& config = {});

// Connected and every vertex labelled D. Throws ConsistencyError if a
// critical instance does not have deviation exactly 1.
bool is_critical(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config = {});

struct DeficiencyCheck {
  long lhs = 0;  // nabla
  long rhs = 0;  // omega(G[D]) + sum_B (min H - d_{G-A}) - sum_A max H
  bool holds() const { return lhs == rhs; }
};

DeficiencyCheck deficiency_identity(const BipartiteGraph& g, const DegreeSpec& spec,
                                    const Config& config = {});

struct CheckResult {
  std::string name;
  bool passed = true;
  nlohmann::json witness;  // counterexample (on failure) or supporting data
};

struct AuditReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

// Requires validate_allowed(spec). Checks: no C-D edges; I(v) an interval on
// D; I(v) n H(v) free of consecutive integers on D; every component R of
// G[D] critical under the degree spec shifted by edges into B, with every optimal
// subgraph restricting to an optimum there; the three existence
// observations, each witnessed by an explicit optimal subgraph; the critical
// => deviation 1 rule and the deficiency identity.
AuditReport structure_audit(const BipartiteGraph& g, const DegreeSpec& spec,
                            const Config& config = {});

// ---- the {-1, 1} / {0} u [2, inf) spec (ONE_PM) ----

struct TutteWitness {
  std::vector<int> s;  // X indices
  std::vector<std::vector<Vertex>> critical_components;
};

// First S (by size, then lexicographically) with more critical components in
// G - S than |S|, or nullopt when none exists.
std::optional<TutteWitness> tutte_witness(const BipartiteGraph& g, const Config& config = {});

struct CriticalProperties {
  bool deletions_have_factor = true;  // G - x has a factor for every x in X
  std::optional<int> failing_deletion;
  bool degrees_within_two = true;  // I(u) within {0, 1, 2}
  bool x_count_odd = true;
  bool triple_deletions_two = true;  // nabla(G - {x1, x2, x3, y}) == 2
  int triples_checked = 0;
  std::vector<long> triple_values;
  bool all() const {
    return deletions_have_factor && degrees_within_two && x_count_odd && triple_deletions_two;
  }
};

// Throws PreconditionError unless G is critical under ONE_PM.
CriticalProperties critical_properties(const BipartiteGraph& g, const Config& config = {});

// A is within X and B is empty under ONE_PM.
bool a_within_x_and_b_empty(const BipartiteGraph& g, const Config& config = {});

enum class Dichotomy { HasFactor, Critical };

// Connected k-regular input, k >= 3. Throws ConsistencyError when neither
// branch holds.
Dichotomy dichotomy_check(const BipartiteGraph& g, const Config& config = {});

struct OmegaConsistency {
  bool b_empty = false;
  int omega_d = 0;                    // components of G[D]
  int critical_components_minus_a = 0;  // critical components of G - A
  bool consistent() const { return !b_empty || omega_d == critical_components_minus_a; }
};

OmegaConsistency omega_consistency(const BipartiteGraph& g, const Config& config = {});

// ---- serialization ----

nlohmann::json to_json(const StructureReport& r, const BipartiteGraph& g);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json to_json(const std::optional<TutteWitness>& w, const BipartiteGraph& g);
nlohmann::json to_json(const CriticalProperties& p);
nlohmann::json vertex_json(const Vertex& v);
std::string vertex_name(const Vertex& v);

}  // namespace antifactor::oracle
