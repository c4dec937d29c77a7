#include "antifactor/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "antifactor/errors.hpp"

namespace antifactor {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

int parse_int(std::string_view word, int line_no) {
  int value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || end != word.data() + word.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(word) + "'");
  }
  return value;
}

}  // namespace

std::string write_graph(const BipartiteGraph& g) {
  std::string out = "p bip " + std::to_string(g.x_count()) + " " + std::to_string(g.y_count()) +
                    " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.x + 1) + " " + std::to_string(e.y + 1) + "\n";
  }
  return out;
}

namespace {

struct Records {
  std::vector<int> counts;
  std::vector<std::pair<int, int>> edges;
};

// Shared reader for "p <kind> counts.." + "e a b" files. The last header
// count is the edge count; the others bound the endpoints.
Records read_records(std::string_view text, std::string_view kind, int count_arity,
                     const std::string& usage) {
  Records rec;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;
    if (words[0] == "p") {
      if (have_header) throw InputError("line " + std::to_string(line_no) + ": second header");
      if (static_cast<int>(words.size()) != count_arity + 2 || words[1] != kind) {
        throw InputError("line " + std::to_string(line_no) + ": expected '" + usage + "'");
      }
      for (int i = 0; i < count_arity; ++i) {
        const int c = parse_int(words[2 + i], line_no);
        if (c < 0) throw InputError("line " + std::to_string(line_no) + ": negative count in header");
        rec.counts.push_back(c);
      }
      have_header = true;
    } else if (words[0] == "e") {
      if (!have_header) throw InputError("line " + std::to_string(line_no) + ": edge before header");
      if (words.size() != 3) {
        throw InputError("line " + std::to_string(line_no) + ": expected 'e i j'");
      }
      const int a = parse_int(words[1], line_no);
      const int b = parse_int(words[2], line_no);
      const int a_max = rec.counts[0];
      const int b_max = count_arity == 3 ? rec.counts[1] : rec.counts[0];
      if (a < 1 || a > a_max || b < 1 || b > b_max) {
        throw InputError("line " + std::to_string(line_no) + ": edge index out of range");
      }
      rec.edges.emplace_back(a - 1, b - 1);
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unknown line type '" +
                       std::string(words[0]) + "'");
    }
  }
  if (!have_header) throw InputError("missing '" + usage + "' header");
  const int m = rec.counts.back();
  if (static_cast<int>(rec.edges.size()) != m) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(rec.edges.size()));
  }
  return rec;
}

}  // namespace

BipartiteGraph read_graph(std::string_view text) {
  Records rec = read_records(text, "bip", 3, "p bip NX NY M");
  std::vector<Edge> edges;
  edges.reserve(rec.edges.size());
  for (const auto& [x, y] : rec.edges) edges.push_back({x, y});
  return BipartiteGraph(rec.counts[0], rec.counts[1], std::move(edges));
}

std::string write_general_graph(const GeneralGraph& g) {
  std::string out = "p gen " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

GeneralGraph read_general_graph(std::string_view text) {
  Records rec = read_records(text, "gen", 2, "p gen N M");
  return GeneralGraph(rec.counts[0], std::move(rec.edges));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BipartiteGraph read_graph_file(const std::filesystem::path& path) {
  return read_graph(read_text_file(path));
}

DegreeSet degree_set_from_json(const nlohmann::json& j) {
  try {
    if (j.is_array()) return DegreeSet(j.get<std::vector<int>>());
    if (j.is_object()) {
      std::vector<int> base;
      if (j.contains("base")) base = j.at("base").get<std::vector<int>>();
      std::optional<int> tail;
      if (j.contains("tail_from") && !j.at("tail_from").is_null()) tail = j.at("tail_from").get<int>();
      return DegreeSet(std::move(base), tail);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed degree set: ") + e.what());
  }
  throw InputError("degree set must be a list or {base, tail_from}");
}

nlohmann::json to_json(const DegreeSet& s) {
  nlohmann::json base(std::vector<int>(s.base().begin(), s.base().end()));
  if (s.bounded()) return base;
  return {{"base", base}, {"tail_from", *s.tail_from()}};
}

DegreeSpec read_spec(const nlohmann::json& doc, const BipartiteGraph& g) {
  if (!doc.is_object() || !doc.contains("x_default") || !doc.contains("y_default")) {
    throw InputError("spec needs x_default and y_default");
  }
  std::vector<DegreeSet> xs(static_cast<std::size_t>(g.x_count()),
                            degree_set_from_json(doc.at("x_default")));
  std::vector<DegreeSet> ys(static_cast<std::size_t>(g.y_count()),
                            degree_set_from_json(doc.at("y_default")));
  if (doc.contains("overrides")) {
    for (const auto& o : doc.at("overrides")) {
      if (!o.is_object() || !o.contains("side") || !o.contains("index") || !o.contains("set")) {
        throw InputError("override needs side, index and set");
      }
      const auto side = o.at("side").get<std::string>();
      const int index = o.at("index").get<int>() - 1;
      auto& table = side == "x" ? xs : side == "y" ? ys : throw InputError("side must be x or y");
      if (index < 0 || index >= static_cast<int>(table.size())) {
        throw InputError("override index out of range");
      }
      table[index] = degree_set_from_json(o.at("set"));
    }
  }
  return make_custom_spec(g, std::move(xs), std::move(ys));
}

DegreeSpec read_spec_file(const std::filesystem::path& path, const BipartiteGraph& g) {
  try {
    return read_spec(nlohmann::json::parse(read_text_file(path)), g);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("spec file " + path.string() + ": " + e.what());
  }
}

}  // namespace antifactor
