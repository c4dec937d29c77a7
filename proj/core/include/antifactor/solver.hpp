#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

#include "antifactor/factor.hpp"
#include "antifactor/graph.hpp"

// Exact 1-anti-factor search: find f: X -> Y with f(x) in N(x) such that no
// Y vertex has exactly one preimage.
namespace antifactor::solver {

enum class Status { Sat, Unsat, CapExceeded };

const char* status_name(Status s);

struct Stats {
  std::uint64_t nodes = 0;         // value trials at decision points
  std::uint64_t propagations = 0;  // forced assignments
  std::uint64_t backtracks = 0;    // failed value trials
  std::uint64_t restarts = 0;
  std::chrono::nanoseconds wall{0};
};

struct SolveOutcome {
  Status status = Status::Unsat;
  std::optional<Assignment> assignment;
  Stats stats;
};

struct Options {
  std::uint64_t budget = 50'000'000;  // node limit
  // > 1 splits the first decision's values across workers; the lowest
  // branch index with a solution wins. The budget then applies per branch.
  int jobs = 1;
  // Seeded restarts with randomized tie-breaking under a doubling node
  // schedule. Each attempt is itself a complete search, so UNSAT is still
  // only reported after an exhausted attempt.
  std::optional<std::uint64_t> restart_seed;
};

SolveOutcome solve_anti_factor(const BipartiteGraph& g, const Options& options = {});

bool verify_anti_factor(const BipartiteGraph& g, const Assignment& f);

// k-regular input with k >= 3 (PreconditionError otherwise). For k > 3 the
// search runs on a spanning 3-regular subgraph; Y loads do not depend on the
// extra edges, so its solutions are solutions of G.
SolveOutcome solve_regular(const BipartiteGraph& g, const Options& options = {});

// Status, assignment (Y indices ordered by X index, 1-based) and the
// deterministic counters. Wall time is left out so output is reproducible.
nlohmann::json to_json(const SolveOutcome& outcome);

}  // namespace antifactor::solver
