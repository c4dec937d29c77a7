#include "cli.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "antifactor/errors.hpp"
#include "antifactor/generators.hpp"
#include "antifactor/io.hpp"
#include "antifactor/oracle.hpp"
#include "antifactor/reduction.hpp"
#include "antifactor/solver.hpp"

namespace antifactor::cli {

namespace {

using nlohmann::json;

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

struct Flags {
  std::string spec = "one_pm";
  std::uint64_t seed = 0;
  int jobs = 1;
  int enum_cap = 24;
  int subset_cap = 18;
  std::uint64_t budget = 50'000'000;
  std::string format = "json";
};

// What a command produced: the result document and its exit code.
struct Outcome {
  json result;
  int code = kFound;
  std::string text;  // raw text output (generators), printed as is
};

DegreeSpec resolve_spec(const std::string& name, const BipartiteGraph& g) {
  if (name == "one") return make_spec(SpecKind::One, g);
  if (name == "one_pm") return make_spec(SpecKind::OnePm, g);
  if (name == "anti") return make_spec(SpecKind::Anti, g, Side::Y);
  if (name == "anti_x") return make_spec(SpecKind::Anti, g, Side::X);
  if (!std::filesystem::exists(name)) {
    throw InputError("--spec: expected one, one_pm, anti, anti_x or a JSON file, got '" + name + "'");
  }
  return read_spec_file(name, g);
}

oracle::Config oracle_config(const Flags& f) { return {f.enum_cap, f.subset_cap, f.jobs}; }

json edge_list(const BipartiteGraph& g, const FactorSubgraph& f) {
  json out = json::array();
  for (int id : f.edge_ids()) out.push_back({g.edge(id).x + 1, g.edge(id).y + 1});
  return out;
}

void render_human(const json& j, const std::string& indent, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object() && !it->empty()) {
      out << indent << it.key() << ":\n";
      render_human(*it, indent + "  ", out);
    } else {
      out << indent << it.key() << ": " << it->dump() << "\n";
    }
  }
}

Outcome solve_command(const std::string& path, bool regular, bool restarts, const Flags& f) {
  if (restarts && f.jobs > 1) throw InputError("--restarts and --jobs > 1 are mutually exclusive");
  const BipartiteGraph g = read_graph_file(path);
  solver::Options opt;
  opt.budget = f.budget;
  opt.jobs = f.jobs;
  if (restarts) opt.restart_seed = f.seed;
  const solver::SolveOutcome r = regular ? solver::solve_regular(g, opt) : solver::solve_anti_factor(g, opt);
  const int code = r.status == solver::Status::Sat     ? kFound
                   : r.status == solver::Status::Unsat ? kNotFound
                                                       : kCapExceeded;
  return {solver::to_json(r), code, {}};
}

Outcome oracle_command(const std::string& op, const std::string& path, const Flags& f) {
  const BipartiteGraph g = read_graph_file(path);
  const oracle::Config cfg = oracle_config(f);
  if (op == "nabla") {
    const DegreeSpec spec = resolve_spec(f.spec, g);
    const oracle::NablaResult r = oracle::nabla(g, spec, cfg);
    return {{{"nabla", r.value}, {"optimum", edge_list(g, r.optimum)}}, r.value == 0 ? kFound : kNotFound, {}};
  }
  if (op == "decompose") {
    const DegreeSpec spec = resolve_spec(f.spec, g);
    return {oracle::to_json(oracle::decomposition(g, spec, cfg), g), kFound, {}};
  }
  if (op == "critical") {
    const DegreeSpec spec = resolve_spec(f.spec, g);
    const bool critical = oracle::is_critical(g, spec, cfg);
    json result = {{"critical", critical}};
    if (critical && spec == make_spec(SpecKind::OnePm, g)) {
      result["properties"] = oracle::to_json(oracle::critical_properties(g, cfg));
    }
    return {result, critical ? kFound : kNotFound, {}};
  }
  if (op == "audit") {
    const DegreeSpec spec = resolve_spec(f.spec, g);
    if (!validate_allowed(spec)) throw InputError("--spec: audit needs an allowed degree spec");
    const oracle::AuditReport r = oracle::structure_audit(g, spec, cfg);
    return {oracle::to_json(r), r.all_passed() ? kFound : kNotFound, {}};
  }
  if (op == "witness") {
    const auto w = oracle::tutte_witness(g, cfg);
    return {{{"witness", oracle::to_json(w, g)}}, w ? kFound : kNotFound, {}};
  }
  // dichotomy
  const oracle::Dichotomy d = oracle::dichotomy_check(g, cfg);
  return {{{"branch", d == oracle::Dichotomy::HasFactor ? "has_factor" : "critical"}}, kFound, {}};
}

json cover_json(const std::optional<reduction::PackingCover>& cover) {
  if (!cover) return nullptr;
  json lines = json::array();
  std::istringstream in(reduction::write_cover(*cover));
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

Outcome reduce_command(const std::string& op, const std::string& path, const Flags& f) {
  const GeneralGraph g0 = read_general_graph(read_text_file(path));
  std::optional<reduction::PackingCover> cover;
  json result;
  if (op == "pack") {
    solver::Options opt;
    opt.budget = f.budget;
    opt.jobs = f.jobs;
    const reduction::PackResult r = reduction::pack_edges_triangles(g0, opt);
    cover = r.cover;
    result["solver"] = solver::to_json(r.outcome);
  } else {
    cover = reduction::brute_force_cover(g0);
  }
  if (cover && !reduction::is_valid_cover(g0, *cover)) {
    throw ConsistencyError("reduction produced an invalid cover");
  }
  result["found"] = cover.has_value();
  result["cover"] = cover_json(cover);
  return {result, cover ? kFound : kNotFound, {}};
}

Outcome envelope_error(int code) { return {nullptr, code, {}}; }

}  // namespace

CampaignReport regular_campaign(const CampaignConfig& config) {
  if (config.degrees.empty()) throw InputError("--k: at least one degree is needed");
  CampaignReport report;
  std::mt19937_64 master(config.seed);
  solver::Options opt;
  opt.budget = config.budget;
  opt.jobs = config.jobs;
  oracle::Config ocfg;
  ocfg.enum_cap = config.enum_cap;
  ocfg.jobs = config.jobs;
  for (int i = 0; i < config.count; ++i) {
    const int k = config.degrees[static_cast<std::size_t>(i) % config.degrees.size()];
    const int lo = std::max(config.n_min, k);
    if (lo > config.n_max) throw InputError("--n-max is below the smallest usable side size");
    const int n = lo + static_cast<int>(gen::uniform_below(master, static_cast<std::uint64_t>(config.n_max - lo + 1)));
    const std::uint64_t seed = master();
    const BipartiteGraph g = gen::random_regular_bipartite(n, k, seed);
    const solver::SolveOutcome r = solver::solve_regular(g, opt);
    ++report.instances;
    const bool sat = r.status == solver::Status::Sat;
    const bool verified = sat && solver::verify_anti_factor(g, *r.assignment);
    report.sat += sat ? 1 : 0;
    report.verified += verified ? 1 : 0;
    bool agrees = true;
    if (n <= config.oracle_max_x) {
      ++report.oracle_checked;
      agrees = oracle::nabla(g, make_spec(SpecKind::OnePm, g), ocfg).value == 0;
      report.oracle_agreed += agrees ? 1 : 0;
    }
    if (!sat || !verified || !agrees) {
      report.failures.push_back({{"index", i},
                                 {"n", n},
                                 {"k", k},
                                 {"seed", seed},
                                 {"status", solver::status_name(r.status)},
                                 {"verified", verified},
                                 {"oracle_agrees", agrees}});
    }
  }
  return report;
}

json to_json(const CampaignReport& r) {
  return {{"instances", r.instances}, {"sat", r.sat},
          {"verified", r.verified},   {"oracle_checked", r.oracle_checked},
          {"oracle_agreed", r.oracle_agreed}, {"failures", r.failures},
          {"passed", r.passed()}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anti-factor solver, structure oracle and generators", "antifactor"};
  app.fallthrough();
  app.require_subcommand(1);
  Flags f;
  app.add_option("--spec", f.spec, "Degree spec: one, one_pm, anti, anti_x or a JSON file");
  app.add_option("--seed", f.seed, "Seed for every random choice");
  app.add_option("--jobs", f.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--enum-cap", f.enum_cap, "Max edges for oracle enumeration")->check(CLI::Range(1, 63));
  app.add_option("--subset-cap", f.subset_cap, "Max |X| for witness subset search")->check(CLI::Range(1, 30));
  app.add_option("--budget", f.budget, "Solver node budget")->check(CLI::PositiveNumber);
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "human"}));

  std::string command;
  std::string input;
  std::function<Outcome()> action;

  // solve
  bool regular = false;
  bool restarts = false;
  auto* solve = app.add_subcommand("solve", "Find a 1-anti-factor");
  solve->add_option("graph", input, "Bipartite graph file")->required()->check(CLI::ExistingFile);
  solve->add_flag("--regular", regular, "Use the k-regular pipeline (k >= 3)");
  solve->add_flag("--restarts", restarts, "Seeded restarts (benchmarking)");
  solve->callback([&] {
    command = "solve";
    action = [&] { return solve_command(input, regular, restarts, f); };
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exact structure oracle for small graphs");
  orc->require_subcommand(1);
  for (const char* op : {"nabla", "decompose", "critical", "audit", "witness", "dichotomy"}) {
    auto* sub = orc->add_subcommand(op);
    sub->add_option("graph", input, "Bipartite graph file")->required()->check(CLI::ExistingFile);
    sub->callback([&, name = std::string(op)] {
      command = "oracle " + name;
      action = [&, name] { return oracle_command(name, input, f); };
    });
  }

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate graphs (text format)");
  gen_cmd->require_subcommand(1);
  int n = 0;
  int k = 0;
  int nx = 0;
  int ny = 0;
  int max_x = 4;
  double p = 0.5;
  std::vector<int> lengths;
  std::string branch = "y";
  auto* g_regular = gen_cmd->add_subcommand("regular", "Random k-regular bipartite graph");
  g_regular->add_option("--n", n, "Side size")->required();
  g_regular->add_option("--k", k, "Degree")->required();
  g_regular->callback([&] {
    action = [&] { return Outcome{nullptr, kFound, write_graph(gen::random_regular_bipartite(n, k, f.seed))}; };
  });
  auto* g_cycle = gen_cmd->add_subcommand("cycle", "Even cycle");
  g_cycle->add_option("--n", n, "Length")->required();
  g_cycle->callback([&] { action = [&] { return Outcome{nullptr, kFound, write_graph(gen::cycle(n))}; }; });
  auto* g_theta = gen_cmd->add_subcommand("theta", "Generalized theta graph");
  g_theta->add_option("--lengths", lengths, "Path lengths")->required()->delimiter(',');
  g_theta->add_option("--branch", branch, "Side of the branch vertices")->check(CLI::IsMember({"x", "y"}));
  g_theta->callback([&] {
    action = [&] {
      return Outcome{nullptr, kFound, write_graph(gen::theta_graph(lengths, branch == "x" ? Side::X : Side::Y))};
    };
  });
  auto* g_h = gen_cmd->add_subcommand("hfamily", "Class H members, one per isomorphism class");
  g_h->add_option("--max-x", max_x, "Largest |X|")->check(CLI::Range(1, 6));
  g_h->callback([&] {
    action = [&] {
      std::string text;
      int index = 0;
      for (const auto& g : gen::enumerate_h_family(max_x)) {
        text += "c member " + std::to_string(++index) + "\n" + write_graph(g);
      }
      return Outcome{nullptr, kFound, text};
    };
  });
  auto* g_complete = gen_cmd->add_subcommand("complete", "Complete bipartite graph");
  g_complete->add_option("--nx", nx)->required();
  g_complete->add_option("--ny", ny)->required();
  g_complete->callback([&] {
    action = [&] { return Outcome{nullptr, kFound, write_graph(complete_bipartite(nx, ny))}; };
  });
  auto* g_random = gen_cmd->add_subcommand("random", "Random bipartite graph, edge probability p");
  g_random->add_option("--nx", nx)->required();
  g_random->add_option("--ny", ny)->required();
  g_random->add_option("--p", p)->check(CLI::Range(0.0, 1.0));
  g_random->callback([&] {
    action = [&] { return Outcome{nullptr, kFound, write_graph(gen::random_bipartite(nx, ny, p, f.seed))}; };
  });
  auto* g_er = gen_cmd->add_subcommand("er", "Erdos-Renyi general graph (reduction input)");
  g_er->add_option("--n", n)->required();
  g_er->add_option("--p", p)->check(CLI::Range(0.0, 1.0));
  g_er->callback([&] {
    action = [&] { return Outcome{nullptr, kFound, write_general_graph(gen::erdos_renyi(n, p, f.seed))}; };
  });

  // reduce
  auto* red = app.add_subcommand("reduce", "Edge and triangle covers of general graphs");
  red->require_subcommand(1);
  for (const char* op : {"pack", "oracle"}) {
    auto* sub = red->add_subcommand(op);
    sub->add_option("graph", input, "General graph file")->required()->check(CLI::ExistingFile);
    sub->callback([&, name = std::string(op)] {
      command = "reduce " + name;
      action = [&, name] { return reduce_command(name, input, f); };
    });
  }

  // verify-theorem
  CampaignConfig campaign;
  auto* vt = app.add_subcommand("verify-theorem", "Regular-graph campaign: generate, solve, verify");
  vt->add_option("--count", campaign.count)->check(CLI::PositiveNumber);
  vt->add_option("--k", campaign.degrees, "Degrees, used round-robin")->delimiter(',');
  vt->add_option("--n-min", campaign.n_min)->check(CLI::PositiveNumber);
  vt->add_option("--n-max", campaign.n_max)->check(CLI::PositiveNumber);
  vt->add_option("--oracle-max-x", campaign.oracle_max_x, "Cross-check with the oracle up to this |X|");
  vt->callback([&] {
    command = "verify-theorem";
    action = [&] {
      campaign.seed = f.seed;
      campaign.budget = f.budget;
      campaign.enum_cap = f.enum_cap;
      campaign.jobs = f.jobs;
      const CampaignReport r = regular_campaign(campaign);
      return Outcome{to_json(r), r.passed() ? kFound : kNotFound, {}};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kFound;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kFound;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Outcome result = envelope_error(kInputError);
  try {
    result = action();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kNotFound;
  }

  if (!result.text.empty() || result.result.is_null()) {
    out << result.text;
    return result.code;
  }
  const json report = {{"tool", {{"name", "antifactor"}, {"version", ANTIFACTOR_VERSION}}},
                       {"command", command},
                       {"input", input.empty() ? json(nullptr) : json(input)},
                       {"seed", f.seed},
                       {"spec", f.spec},
                       {"caps", {{"enum_cap", f.enum_cap}, {"subset_cap", f.subset_cap}, {"budget", f.budget}}},
                       {"result", result.result}};
  if (f.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    render_human(report, "", out);
  }
  return result.code;
}

}  // namespace antifactor::cli
