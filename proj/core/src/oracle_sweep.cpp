// Branch-and-bound enumeration of spanning subgraphs.
//
// Edges are decided in construction order, "exclude" before "include", so
// leaves are visited in lexicographic order. The bound at a node is the sum
// over vertices of the smallest deviation still reachable given the edges
// already taken (committed) and those not yet decided (open).

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "antifactor/errors.hpp"
#include "antifactor/oracle.hpp"

namespace antifactor::oracle {

namespace {

constexpr long kUnbounded = std::numeric_limits<long>::max();
constexpr int kMaxCap = 63;
constexpr int kPrefixEdges = 6;

void check_inputs(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config) {
  if (config.enum_cap < 0 || config.enum_cap > kMaxCap) {
    throw InputError("enumeration cap must lie in [0, 63]");
  }
  if (!spec.matches(g)) throw InputError("spec does not match graph");
  if (g.edge_count() > config.enum_cap) {
    throw ResourceError("graph has " + std::to_string(g.edge_count()) +
                        " edges, above the enumeration cap of " + std::to_string(config.enum_cap));
  }
  for (int v = 0; v < spec.vertex_count(); ++v) {
    if (spec.at_flat(v).empty()) throw InputError("empty degree set in spec");
  }
}

struct Tables {
  int vertices = 0;
  int edges = 0;
  std::vector<int> edge_x;
  std::vector<int> edge_y;
  std::vector<int> degree;
  std::vector<int> offset;
  // best[offset[v] + lo * (degree[v] + 1) + hi] = min deviation of v over
  // degrees in [lo, hi].
  std::vector<int> best;

  int best_within(int v, int lo, int hi) const {
    return best[offset[v] + lo * (degree[v] + 1) + hi];
  }
};

Tables prepare(const BipartiteGraph& g, const DegreeSpec& spec) {
  Tables t;
  t.vertices = g.vertex_count();
  t.edges = g.edge_count();
  for (const Edge& e : g.edges()) {
    t.edge_x.push_back(g.flat(x_vertex(e.x)));
    t.edge_y.push_back(g.flat(y_vertex(e.y)));
  }
  for (int v = 0; v < t.vertices; ++v) {
    const int deg = g.degree(g.vertex(v));
    const DegreeSet& allowed = spec.at_flat(v);
    t.degree.push_back(deg);
    t.offset.push_back(static_cast<int>(t.best.size()));
    t.best.resize(t.best.size() + static_cast<std::size_t>((deg + 1) * (deg + 1)), 0);
    for (int lo = 0; lo <= deg; ++lo) {
      int running = std::numeric_limits<int>::max();
      for (int hi = lo; hi <= deg; ++hi) {
        running = std::min(running, allowed.distance(hi));
        t.best[t.offset[v] + lo * (deg + 1) + hi] = running;
      }
    }
  }
  return t;
}

class Walker {
 public:
  explicit Walker(const Tables& t)
      : t_(t), committed_(static_cast<std::size_t>(t.vertices), 0), open_(t.degree) {
    for (int v = 0; v < t_.vertices; ++v) bound_ += lower(v);
  }

  // Fixes edges [0, len) according to `prefix` (edge 0 is the most significant
  // of the len bits), runs `body`, then restores the state.
  template <class Body>
  void with_prefix(std::uint64_t prefix, int len, Body&& body) {
    std::uint64_t mask = 0;
    for (int e = 0; e < len; ++e) {
      const bool take = (prefix >> (len - 1 - e)) & 1U;
      decide(e, take);
      if (take) mask |= std::uint64_t{1} << e;
    }
    body(len, mask);
    for (int e = len - 1; e >= 0; --e) undo(e, (prefix >> (len - 1 - e)) & 1U);
  }

  // Strict improvement only: the first leaf reaching the final minimum is the
  // lexicographically smallest optimum.
  void minimize(int e, std::uint64_t mask, long& best, std::uint64_t& best_mask) {
    if (bound_ >= best) return;
    if (e == t_.edges) {
      best = bound_;
      best_mask = mask;
      return;
    }
    decide(e, false);
    minimize(e + 1, mask, best, best_mask);
    undo(e, false);
    decide(e, true);
    minimize(e + 1, mask | (std::uint64_t{1} << e), best, best_mask);
    undo(e, true);
  }

  template <class Visit>
  void collect(int e, std::uint64_t mask, long target, Visit& visit) {
    if (bound_ > target) return;
    if (e == t_.edges) {
      visit(mask, committed_);
      return;
    }
    decide(e, false);
    collect(e + 1, mask, target, visit);
    undo(e, false);
    decide(e, true);
    collect(e + 1, mask | (std::uint64_t{1} << e), target, visit);
    undo(e, true);
  }

 private:
  int lower(int v) const { return t_.best_within(v, committed_[v], committed_[v] + open_[v]); }

  void shift(int v, int open_delta, int committed_delta) {
    bound_ -= lower(v);
    open_[v] += open_delta;
    committed_[v] += committed_delta;
    bound_ += lower(v);
  }

  void decide(int e, bool take) {
    shift(t_.edge_x[e], -1, take ? 1 : 0);
    shift(t_.edge_y[e], -1, take ? 1 : 0);
  }

  void undo(int e, bool take) {
    shift(t_.edge_x[e], 1, take ? -1 : 0);
    shift(t_.edge_y[e], 1, take ? -1 : 0);
  }

  const Tables& t_;
  std::vector<int> committed_;
  std::vector<int> open_;
  long bound_ = 0;
};

template <class Task>
void run_tasks(int count, int jobs, Task&& task) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min(jobs, count);
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct Partial {
  long best = kUnbounded;
  std::uint64_t best_mask = 0;
  std::vector<std::uint64_t> sets;
  std::vector<std::vector<std::uint64_t>> witness;
  std::uint64_t count = 0;
};

}  // namespace

namespace {

int prefix_length(const Tables& tables, const Config& config) {
  return config.jobs > 1 ? std::min(tables.edges, kPrefixEdges) : 0;
}

// Phase one: per-prefix minima, merged in prefix (= lexicographic) order.
Minimum run_minimize(const Tables& tables, const Config& config, std::vector<Partial>& parts) {
  const int prefix_len = prefix_length(tables, config);
  parts.assign(std::size_t{1} << prefix_len, Partial{});
  run_tasks(static_cast<int>(parts.size()), config.jobs, [&](int i) {
    Walker walker(tables);
    Partial& part = parts[i];
    walker.with_prefix(static_cast<std::uint64_t>(i), prefix_len, [&](int from, std::uint64_t mask) {
      walker.minimize(from, mask, part.best, part.best_mask);
    });
  });
  Minimum out{kUnbounded, 0};
  for (const Partial& part : parts) {
    if (part.best < out.nabla) {
      out.nabla = part.best;
      out.first_optimum = part.best_mask;
    }
  }
  return out;
}

}  // namespace

Minimum minimize(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config) {
  check_inputs(g, spec, config);
  const Tables tables = prepare(g, spec);
  std::vector<Partial> parts;
  return run_minimize(tables, config, parts);
}

Sweep sweep(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config) {
  check_inputs(g, spec, config);
  const Tables tables = prepare(g, spec);
  const int prefix_len = prefix_length(tables, config);
  const int tasks = 1 << prefix_len;
  std::vector<Partial> parts;
  const Minimum min = run_minimize(tables, config, parts);

  Sweep out;
  out.nabla = min.nabla;
  out.first_optimum = min.first_optimum;

  run_tasks(tasks, config.jobs, [&](int i) {
    Partial& part = parts[i];
    if (part.best != out.nabla) return;
    part.sets.assign(static_cast<std::size_t>(tables.vertices), 0);
    part.witness.resize(static_cast<std::size_t>(tables.vertices));
    for (int v = 0; v < tables.vertices; ++v) part.witness[v].assign(tables.degree[v] + 1, 0);
    auto visit = [&part](std::uint64_t mask, const std::vector<int>& degrees) {
      ++part.count;
      for (std::size_t v = 0; v < degrees.size(); ++v) {
        const std::uint64_t bit = std::uint64_t{1} << degrees[v];
        if (!(part.sets[v] & bit)) {
          part.sets[v] |= bit;
          part.witness[v][degrees[v]] = mask;
        }
      }
    };
    Walker walker(tables);
    walker.with_prefix(static_cast<std::uint64_t>(i), prefix_len, [&](int from, std::uint64_t mask) {
      walker.collect(from, mask, out.nabla, visit);
    });
  });

  out.degree_sets.assign(static_cast<std::size_t>(tables.vertices), DegreeValues{});
  out.witness.resize(static_cast<std::size_t>(tables.vertices));
  for (int v = 0; v < tables.vertices; ++v) out.witness[v].assign(tables.degree[v] + 1, 0);
  std::vector<std::uint64_t> merged(static_cast<std::size_t>(tables.vertices), 0);
  for (const Partial& part : parts) {
    if (part.best != out.nabla) continue;
    out.optimum_count += part.count;
    for (int v = 0; v < tables.vertices; ++v) {
      const std::uint64_t fresh = part.sets[v] & ~merged[v];
      for (int d = 0; d <= tables.degree[v]; ++d) {
        if ((fresh >> d) & 1U) out.witness[v][d] = part.witness[v][d];
      }
      merged[v] |= part.sets[v];
    }
  }
  for (int v = 0; v < tables.vertices; ++v) out.degree_sets[v] = DegreeValues(merged[v]);
  return out;
}

void for_each_optimum(const BipartiteGraph& g, const DegreeSpec& spec, long nabla,
                      const std::function<void(std::uint64_t)>& visit, const Config& config) {
  check_inputs(g, spec, config);
  const Tables tables = prepare(g, spec);
  Walker walker(tables);
  auto leaf = [&visit](std::uint64_t mask, const std::vector<int>&) { visit(mask); };
  walker.collect(0, 0, nabla, leaf);
}

}  // namespace antifactor::oracle
