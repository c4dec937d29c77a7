#include "antifactor/solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "antifactor/errors.hpp"
#include "antifactor/matching.hpp"

namespace antifactor::solver {

namespace {

// Backtracking over f: X -> Y.
//
// load[y] counts committed clients of y, open[y] its unassigned neighbours.
// y is a usable value iff load[y] >= 1 (joining keeps it at >= 2) or
// open[y] >= 2 (another client can still arrive). A y with load 1 and no
// open neighbour is dead; one with load 1 and exactly one open neighbour
// forces that neighbour onto it. dom[x] counts usable neighbours and drives
// the variable order.
class Search {
 public:
  enum class Result { Sat, Unsat, Budget };

  Search(const BipartiteGraph& g, std::vector<std::uint32_t> x_key,
         std::vector<std::uint32_t> y_key)
      : g_(g),
        x_key_(std::move(x_key)),
        y_key_(std::move(y_key)),
        assign_(static_cast<std::size_t>(g.x_count()), -1),
        dom_(static_cast<std::size_t>(g.x_count()), 0),
        load_(static_cast<std::size_t>(g.y_count()), 0),
        open_(static_cast<std::size_t>(g.y_count()), 0) {}

  // Initial state; false if some X vertex has no usable value.
  bool prepare() {
    for (int y = 0; y < g_.y_count(); ++y) open_[y] = g_.degree(y_vertex(y));
    bool ok = true;
    for (int x = 0; x < g_.x_count(); ++x) {
      for (int y : g_.x_neighbors(x)) dom_[x] += usable(y) ? 1 : 0;
      queue_.emplace(dom_[x], x_key_[x], x);
      if (dom_[x] == 0) ok = false;
    }
    return ok;
  }

  bool done() const { return queue_.empty(); }

  int pick() const { return std::get<2>(*queue_.begin()); }

  std::vector<int> ordered_values(int x) const {
    std::vector<int> values;
    for (int y : g_.x_neighbors(x)) {
      if (usable(y)) values.push_back(y);
    }
    std::sort(values.begin(), values.end(), [this](int a, int b) {
      const auto rank = [this](int y) {
        return std::make_tuple(load_[y] == 1 ? 0 : 1, -open_[y], y_key_[y]);
      };
      return rank(a) < rank(b);
    });
    return values;
  }

  // Complete search. With `first`, the root decision is pinned to that pair.
  Result run(std::uint64_t budget, std::optional<std::pair<int, int>> first = std::nullopt) {
    struct Frame {
      int x;
      std::vector<int> values;
      std::size_t next;
      std::size_t mark;
    };
    std::vector<Frame> frames;
    bool pinned = first.has_value();
    while (true) {
      if (done()) return Result::Sat;
      if (pinned) {
        frames.push_back({first->first, {first->second}, 0, trail_.size()});
        pinned = false;
      } else {
        const int x = pick();
        frames.push_back({x, ordered_values(x), 0, trail_.size()});
      }
      bool advanced = false;
      while (!frames.empty()) {
        Frame& f = frames.back();
        undo_to(f.mark);
        if (f.next == f.values.size()) {
          frames.pop_back();
          continue;
        }
        const int y = f.values[f.next++];
        if (++stats.nodes > budget) return Result::Budget;
        if (commit(f.x, y)) {
          advanced = true;
          break;
        }
        ++stats.backtracks;
      }
      if (!advanced) return Result::Unsat;
    }
  }

  Assignment assignment() const { return Assignment{assign_}; }

  Stats stats;

 private:
  using Entry = std::tuple<int, std::uint32_t, int>;

  bool usable(int y) const { return load_[y] >= 1 || open_[y] >= 2; }

  void set_dom(int x, int value) {
    if (assign_[x] < 0) {
      queue_.erase(Entry{dom_[x], x_key_[x], x});
      queue_.emplace(value, x_key_[x], x);
    }
    dom_[x] = value;
  }

  // Applies x -> y (and everything it forces). False on conflict; the trail
  // still records every applied step so undo_to restores the state.
  bool commit(int x, int y) {
    pending_.clear();
    pending_.emplace_back(x, y);
    for (std::size_t i = 0; i < pending_.size(); ++i) {
      const auto [px, py] = pending_[i];
      if (assign_[px] >= 0) continue;
      if (i > 0) ++stats.propagations;
      if (!apply(px, py)) return false;
    }
    return true;
  }

  bool apply(int x, int y) {
    trail_.push_back(x);
    queue_.erase(Entry{dom_[x], x_key_[x], x});
    assign_[x] = y;
    const auto nbrs = g_.x_neighbors(x);
    before_.clear();
    for (int w : nbrs) before_.push_back(usable(w));
    ++load_[y];
    for (int w : nbrs) --open_[w];

    bool ok = true;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const int w = nbrs[i];
      const bool now = usable(w);
      if (now != before_[i]) {
        for (int u : g_.y_neighbors(w)) {
          set_dom(u, dom_[u] + (now ? 1 : -1));
          if (assign_[u] < 0 && dom_[u] == 0) ok = false;
        }
      }
      if (load_[w] == 1 && open_[w] == 0) ok = false;
      if (load_[w] == 1 && open_[w] == 1) {
        for (int u : g_.y_neighbors(w)) {
          if (assign_[u] < 0) {
            pending_.emplace_back(u, w);
            break;
          }
        }
      }
    }
    return ok;
  }

  void retract(int x) {
    const int y = assign_[x];
    const auto nbrs = g_.x_neighbors(x);
    before_.clear();
    for (int w : nbrs) before_.push_back(usable(w));
    --load_[y];
    for (int w : nbrs) ++open_[w];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const int w = nbrs[i];
      const bool now = usable(w);
      if (now == before_[i]) continue;
      for (int u : g_.y_neighbors(w)) set_dom(u, dom_[u] + (now ? 1 : -1));
    }
    assign_[x] = -1;
    queue_.emplace(dom_[x], x_key_[x], x);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      retract(trail_.back());
      trail_.pop_back();
    }
  }

  const BipartiteGraph& g_;
  std::vector<std::uint32_t> x_key_;
  std::vector<std::uint32_t> y_key_;
  std::vector<int> assign_;
  std::vector<int> dom_;
  std::vector<int> load_;
  std::vector<int> open_;
  std::set<Entry> queue_;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<bool> before_;
};

std::vector<std::uint32_t> identity_keys(int n) {
  std::vector<std::uint32_t> keys(static_cast<std::size_t>(n));
  std::iota(keys.begin(), keys.end(), 0U);
  return keys;
}

std::vector<std::uint32_t> shuffled_keys(int n, std::mt19937_64& rng) {
  auto keys = identity_keys(n);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(keys[i], keys[j]);
  }
  return keys;
}

void add_stats(Stats& into, const Stats& from) {
  into.nodes += from.nodes;
  into.propagations += from.propagations;
  into.backtracks += from.backtracks;
}

Status to_status(Search::Result r) {
  switch (r) {
    case Search::Result::Sat: return Status::Sat;
    case Search::Result::Unsat: return Status::Unsat;
    case Search::Result::Budget: return Status::CapExceeded;
  }
  return Status::CapExceeded;
}

SolveOutcome finish(Search& search, Search::Result r) {
  SolveOutcome out;
  out.status = to_status(r);
  out.stats = search.stats;
  if (r == Search::Result::Sat) out.assignment = search.assignment();
  return out;
}

SolveOutcome solve_sequential(const BipartiteGraph& g, const Options& options) {
  Search search(g, identity_keys(g.x_count()), identity_keys(g.y_count()));
  if (!search.prepare()) return finish(search, Search::Result::Unsat);
  return finish(search, search.run(options.budget));
}

SolveOutcome solve_portfolio(const BipartiteGraph& g, const Options& options) {
  Search root(g, identity_keys(g.x_count()), identity_keys(g.y_count()));
  if (!root.prepare()) return finish(root, Search::Result::Unsat);
  if (root.done()) return finish(root, root.run(options.budget));
  const int x = root.pick();
  const std::vector<int> values = root.ordered_values(x);
  if (values.empty()) return finish(root, Search::Result::Unsat);

  struct Branch {
    Search::Result result = Search::Result::Unsat;
    Stats stats;
    std::optional<Assignment> assignment;
  };
  std::vector<Branch> branches(values.size());
  auto work = [&](std::size_t b) {
    Search search(g, identity_keys(g.x_count()), identity_keys(g.y_count()));
    search.prepare();
    branches[b].result = search.run(options.budget, std::make_pair(x, values[b]));
    branches[b].stats = search.stats;
    if (branches[b].result == Search::Result::Sat) branches[b].assignment = search.assignment();
  };
  std::vector<std::thread> pool;
  std::size_t next = 0;
  while (next < values.size()) {
    pool.clear();
    for (int w = 0; w < options.jobs && next < values.size(); ++w) pool.emplace_back(work, next++);
    for (auto& t : pool) t.join();
  }

  SolveOutcome out;
  out.status = Status::Unsat;
  for (const Branch& b : branches) {
    add_stats(out.stats, b.stats);
    if (b.result == Search::Result::Sat) {
      out.status = Status::Sat;
      out.assignment = b.assignment;
      break;
    }
    if (b.result == Search::Result::Budget) out.status = Status::CapExceeded;
  }
  return out;
}

SolveOutcome solve_with_restarts(const BipartiteGraph& g, const Options& options) {
  std::mt19937_64 rng(*options.restart_seed);
  SolveOutcome out;
  std::uint64_t slice = 1024;
  std::uint64_t spent = 0;
  while (spent < options.budget) {
    const std::uint64_t limit = std::min(slice, options.budget - spent);
    Search search(g, shuffled_keys(g.x_count(), rng), shuffled_keys(g.y_count(), rng));
    const Search::Result r = search.prepare() ? search.run(limit) : Search::Result::Unsat;
    add_stats(out.stats, search.stats);
    spent += std::min(search.stats.nodes, limit);
    if (r != Search::Result::Budget) {
      out.status = to_status(r);
      if (r == Search::Result::Sat) out.assignment = search.assignment();
      return out;
    }
    ++out.stats.restarts;
    slice *= 2;
  }
  out.status = Status::CapExceeded;
  return out;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Sat: return "SAT";
    case Status::Unsat: return "UNSAT";
    case Status::CapExceeded: return "CAP_EXCEEDED";
  }
  return "?";
}

SolveOutcome solve_anti_factor(const BipartiteGraph& g, const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out = options.restart_seed ? solve_with_restarts(g, options)
                     : options.jobs > 1   ? solve_portfolio(g, options)
                                          : solve_sequential(g, options);
  out.stats.wall = std::chrono::steady_clock::now() - start;
  if (out.status == Status::Sat && !verify_anti_factor(g, *out.assignment)) {
    throw ConsistencyError("solver produced an invalid assignment");
  }
  return out;
}

bool verify_anti_factor(const BipartiteGraph& g, const Assignment& f) {
  if (static_cast<int>(f.target.size()) != g.x_count()) return false;
  std::vector<int> load(static_cast<std::size_t>(g.y_count()), 0);
  for (int x = 0; x < g.x_count(); ++x) {
    const int y = f.target[x];
    if (!g.adjacent(x, y)) return false;
    ++load[y];
  }
  return std::none_of(load.begin(), load.end(), [](int l) { return l == 1; });
}

SolveOutcome solve_regular(const BipartiteGraph& g, const Options& options) {
  const auto k = g.regular_degree();
  if (!k || *k < 3) throw PreconditionError("solve_regular needs a k-regular graph with k >= 3");
  if (*k == 3) return solve_anti_factor(g, options);
  const auto start = std::chrono::steady_clock::now();
  const BipartiteGraph cubic = extract_regular_factor(g, 3);
  SolveOutcome out = solve_anti_factor(cubic, options);
  out.stats.wall = std::chrono::steady_clock::now() - start;
  return out;
}

nlohmann::json to_json(const SolveOutcome& outcome) {
  nlohmann::json assignment = nullptr;
  if (outcome.assignment) {
    assignment = nlohmann::json::array();
    for (int y : outcome.assignment->target) assignment.push_back(y + 1);
  }
  return {{"status", status_name(outcome.status)},
          {"assignment", assignment},
          {"stats",
           {{"nodes", outcome.stats.nodes},
            {"propagations", outcome.stats.propagations},
            {"backtracks", outcome.stats.backtracks},
            {"restarts", outcome.stats.restarts}}}};
}

}  // namespace antifactor::solver
