#include "antifactor/canonical.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "antifactor/errors.hpp"

namespace antifactor {

namespace {

using Invariant = std::pair<int, std::vector<int>>;

}  // namespace

std::string canonical_form(const BipartiteGraph& g, int max_permutations) {
  const Side row_side = g.y_count() < g.x_count() ? Side::Y : Side::X;
  const Side col_side = opposite(row_side);
  const int rows = g.side_count(row_side);
  const int cols = g.side_count(col_side);

  std::map<Invariant, std::vector<int>> by_invariant;
  for (int r = 0; r < rows; ++r) {
    Invariant inv;
    inv.first = g.degree({row_side, r});
    for (int c : g.neighbors({row_side, r})) inv.second.push_back(g.degree({col_side, c}));
    std::sort(inv.second.begin(), inv.second.end());
    by_invariant[inv].push_back(r);
  }
  std::vector<std::vector<int>> classes;
  double orders = 1;
  for (auto& [inv, members] : by_invariant) {
    for (int i = 2; i <= static_cast<int>(members.size()); ++i) orders *= i;
    classes.push_back(members);
  }
  if (orders > max_permutations) {
    throw ResourceError("canonical form needs too many row orders");
  }

  std::string header = (row_side == Side::X ? "X" : "Y") + std::to_string(g.x_count()) + "," +
                       std::to_string(g.y_count()) + ":";
  std::string best;
  std::vector<int> pos(static_cast<std::size_t>(rows));
  std::vector<std::string> columns(static_cast<std::size_t>(cols));
  while (true) {
    int p = 0;
    for (const auto& cls : classes) {
      for (int r : cls) pos[r] = p++;
    }
    for (int c = 0; c < cols; ++c) {
      columns[c].assign(static_cast<std::size_t>(rows), '0');
      for (int r : g.neighbors({col_side, c})) columns[c][pos[r]] = '1';
    }
    std::sort(columns.begin(), columns.end());
    std::string candidate;
    candidate.reserve(static_cast<std::size_t>(rows * cols));
    for (const auto& col : columns) candidate += col;
    if (best.empty() || candidate < best) best = std::move(candidate);

    // Odometer over the classes' permutations.
    std::size_t k = 0;
    while (k < classes.size() && !std::next_permutation(classes[k].begin(), classes[k].end())) ++k;
    if (k == classes.size()) break;
  }
  return header + best;
}

}  // namespace antifactor
