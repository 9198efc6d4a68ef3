#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpg/errors.hpp"
#include "gpg/families.hpp"
#include "gpg/game.hpp"
#include "gpg/graph_io.hpp"
#include "gpg/oracles.hpp"
#include "gpg/reductions.hpp"
#include "gpg/report.hpp"
#include "gpg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeLimit = 3;

int env_max_vertices() {
  const char* raw = std::getenv("GPGAMES_MAX_VERTICES");
  if (!raw) return 0;
  const int value = std::atoi(raw);
  return value > 0 ? value : 0;
}

struct Instance {
  gpg::Graph graph;
  std::string name;
  std::optional<gpg::FamilySpec> spec;
};

Instance load_instance(const std::string& graph_file,
                       const std::string& family) {
  if (graph_file.empty() == family.empty())
    throw gpg::ParseError("give exactly one of --graph and --family");
  if (!family.empty()) {
    gpg::FamilySpec spec = gpg::FamilySpec::parse(family);
    return {gpg::make_named(spec).graph, spec.to_string(), spec};
  }
  return {gpg::load_graph(graph_file), graph_file, std::nullopt};
}

gpg::GameKind parse_game(const std::string& name) {
  auto kind = gpg::game_kind_from_name(name);
  if (!kind)
    throw gpg::ParseError(
        "unknown game '" + name +
        "' (expected gp-achieve, gp-avoid, kayles, kayles-misere, clique or "
        "clique-misere)");
  return *kind;
}

// Degenerate family parameters whose instance coincides with a family the
// rule table does resolve: reroute before consulting it.
gpg::FamilySpec route_for_oracle(const gpg::FamilySpec& spec) {
  using Kind = gpg::FamilySpec::Kind;
  gpg::FamilySpec out = spec;
  if (spec.kind == Kind::Grid || spec.kind == Kind::Rook) {
    const int lo = std::min(spec.a, spec.b), hi = std::max(spec.a, spec.b);
    if (spec.kind == Kind::Grid && lo == 1) {
      out.kind = Kind::Path;
      out.a = hi;
      out.b = 0;
    } else if (lo == 2 && hi == 2) {
      out.kind = Kind::Cycle;  // P2xP2 and K2xK2 are both the 4-cycle
      out.a = 4;
      out.b = 0;
    }
  }
  return out;
}

int cmd_solve(const std::string& graph_file, const std::string& family,
              const std::string& game, bool json, bool strategy,
              bool by_oracle, const std::string& fallback) {
  Instance inst = load_instance(graph_file, family);
  const gpg::GameKind kind = parse_game(game);

  gpg::SolveOptions opts;
  opts.max_vertices = env_max_vertices();

  if (by_oracle) {
    if (!inst.spec)
      throw gpg::ParseError("--oracle needs a --family instance");
    if (!fallback.empty() && fallback != "solve")
      throw gpg::ParseError("--fallback accepts only 'solve'");
    gpg::OracleVerdict verdict =
        inst.spec->kind == gpg::FamilySpec::Kind::LexWithComplete
            ? gpg::lex_complete_oracle(*inst.spec->base, inst.spec->b, kind,
                                       opts)
            : gpg::oracle(route_for_oracle(*inst.spec), kind);
    if (!verdict.supported && fallback != "solve") {
      gpg::Report report;
      report.instance = inst.name;
      report.game = gpg::game_kind_name(kind);
      report.theorem_tag = verdict.theorem_tag;
      if (json) {
        std::cout << report.to_json().dump(2) << "\n";
      } else {
        std::cout << "instance: " << report.instance << "\n"
                  << "game:     " << report.game << "\n"
                  << "winner:   undecided (" << verdict.theorem_tag << ")\n"
                  << "hint:     pass '--fallback solve' to search instead\n";
      }
      return kExitOk;
    }
    if (verdict.supported) {
      gpg::Report report;
      report.instance = inst.name;
      report.game = gpg::game_kind_name(kind);
      report.winner = gpg::player_name(*verdict.winner);
      report.theorem_tag = verdict.theorem_tag;
      if (json) {
        std::cout << report.to_json().dump(2) << "\n";
      } else {
        std::cout << "instance: " << report.instance << "\n"
                  << "game:     " << report.game << "\n"
                  << "winner:   " << report.winner
                  << (report.winner == "A" ? "  (A = first mover)"
                                           : "  (B = second mover)")
                  << "\n"
                  << "rule:     " << *report.theorem_tag << "\n";
      }
      return kExitOk;
    }
    // unsupported with an explicit fallback: drop through to the engine
  }

  const auto start = std::chrono::steady_clock::now();
  gpg::SolveResult result = gpg::solve(inst.graph, kind, {}, opts);
  const auto stop = std::chrono::steady_clock::now();

  gpg::Report report;
  report.instance = inst.name;
  report.game = gpg::game_kind_name(kind);
  report.winner = gpg::player_name(result.winner);
  report.nodes = result.nodes_expanded;
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();
  report.pv = result.principal_variation;
  if (inst.spec) {
    // name the closed-form rule when it covers this instance correctly;
    // disagreements are the verify command's business
    gpg::OracleVerdict verdict = gpg::oracle(*inst.spec, kind);
    if (verdict.supported && *verdict.winner == result.winner)
      report.theorem_tag = verdict.theorem_tag;
  }

  if (json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << "instance: " << report.instance << "\n"
              << "game:     " << report.game << "\n"
              << "winner:   " << report.winner
              << (report.winner == "A" ? "  (A = first mover)"
                                       : "  (B = second mover)")
              << "\n"
              << "nodes:    " << report.nodes << "\n"
              << "elapsed:  " << report.elapsed_ms << " ms\n";
    if (report.theorem_tag)
      std::cout << "rule:     " << *report.theorem_tag << "\n";
    if (strategy) {
      std::cout << "pv:      ";
      for (int v : report.pv) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_reduce(const std::string& from, const std::string& input,
               const std::string& output) {
  gpg::ReducedGraph rg = [&]() {
    if (from == "clique")
      return gpg::clique_to_gp_achievement(gpg::load_graph(input));
    if (from == "clique-misere")
      return gpg::misere_clique_to_gp_avoidance(gpg::load_graph(input));
    if (from == "tqbf")
      return gpg::tqbf_to_misere_kayles(
          gpg::tqbf_normalize(gpg::load_qbf(input)));
    throw gpg::ParseError("unknown --from '" + from +
                          "' (expected clique, clique-misere or tqbf)");
  }();

  const std::string graph_path = output + ".gp";
  const std::string labels_path = output + ".labels";
  gpg::save_graph(rg.graph, graph_path);
  std::ofstream labels(labels_path);
  if (!labels) throw gpg::ParseError("cannot write " + labels_path);
  labels << gpg::format_labels(rg.roles);

  gpg::GraphProperties props = gpg::basic_properties(rg.graph);
  std::cout << "vertices: " << rg.graph.vertex_count() << "\n"
            << "edges:    " << rg.graph.edge_count() << "\n"
            << "diameter: " << props.diameter << "\n"
            << "wrote:    " << graph_path << ", " << labels_path << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_vertices, std::uint64_t seed,
               int jobs, bool json) {
  gpg::VerifyOptions opt;
  opt.seed = seed;
  opt.jobs = jobs;
  opt.max_vertices = max_vertices;
  gpg::VerifyResult result = gpg::run_suite(suite, opt);

  if (json) {
    nlohmann::json j;
    j["suite"] = result.suite;
    j["checked"] = result.reports.size();
    j["passed"] = result.ok();
    j["failures"] = result.failures;
    nlohmann::json reports = nlohmann::json::array();
    for (const gpg::Report& r : result.reports) reports.push_back(r.to_json());
    j["reports"] = reports;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const gpg::Report& r : result.reports) {
      const bool ok = r.agreement.value_or(true);
      std::cout << (ok ? "[ ok ] " : "[FAIL] ") << r.instance << " ("
                << r.game << ")";
      if (!r.winner.empty()) std::cout << " winner=" << r.winner;
      std::cout << "\n";
    }
    std::cout << "suite " << result.suite << ": " << result.reports.size()
              << " checks, " << result.failures.size() << " failure(s)\n";
    for (const std::string& f : result.failures)
      std::cout << "counterexample: " << f << "\n";
  }
  return result.ok() ? kExitOk : kExitDisagreement;
}

void explain_illegal_gp_move(const gpg::Graph& g, const gpg::DistanceMatrix& dm,
                             const gpg::VertexSet& selected, int x) {
  for (int u : selected)
    for (int v = selected.next_after(u); v != -1; v = selected.next_after(v))
      if (gpg::interval(g, dm, u, v).contains(x)) {
        std::cout << "illegal: condition (i) fails, " << x
                  << " lies on a shortest " << u << "-" << v << " path\n";
        return;
      }
  for (int u : selected) {
    gpg::VertexSet hit = gpg::interval(g, dm, x, u) & selected;
    hit.erase(u);
    if (!hit.empty()) {
      std::cout << "illegal: condition (ii) fails, a shortest " << x << "-"
                << u << " path passes through selected vertex " << hit.first()
                << "\n";
      return;
    }
  }
  std::cout << "illegal move\n";
}

int cmd_play(const std::string& graph_file, const std::string& family,
             const std::string& game, bool engine_starts) {
  Instance inst = load_instance(graph_file, family);
  const gpg::GameKind kind = parse_game(game);
  const gpg::Graph& g = inst.graph;
  gpg::DistanceMatrix dm = gpg::all_pairs_distances(g);

  gpg::SolveOptions opts;
  opts.max_vertices = env_max_vertices();

  const gpg::Player human =
      engine_starts ? gpg::Player::Second : gpg::Player::First;
  gpg::Position pos;

  std::cout << "playing " << gpg::game_kind_name(kind) << " on "
            << inst.name << " (" << g.vertex_count() << " vertices); you are "
            << gpg::player_name(human) << "\n";

  for (;;) {
    gpg::VertexSet legal = gpg::legal_moves(g, dm, pos, kind);
    if (legal.empty()) {
      const gpg::Player mover = pos.to_move();
      const gpg::Player winner =
          gpg::is_misere(kind) ? mover : gpg::opponent(mover);
      std::cout << gpg::player_name(mover) << " cannot move; "
                << gpg::player_name(winner) << " wins ("
                << (winner == human ? "you" : "engine") << ")\n";
      return kExitOk;
    }
    if (pos.to_move() == human) {
      std::cout << "your move, legal " << legal.to_string() << ": "
                << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << "\naborted\n";
        return kExitInputError;
      }
      int x;
      try {
        std::size_t used = 0;
        x = std::stoi(line, &used);
        while (used < line.size() && std::isspace(unsigned(line[used])))
          ++used;
        if (used != line.size()) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        std::cout << "enter a vertex index\n";
        continue;
      }
      if (x < 0 || x >= g.vertex_count()) {
        std::cout << "vertex out of range\n";
        continue;
      }
      if (!legal.contains(x)) {
        if (pos.selected.contains(x))
          std::cout << "illegal: already selected\n";
        else if (gpg::is_gp_kind(kind))
          explain_illegal_gp_move(g, dm, pos.selected, x);
        else if (kind == gpg::GameKind::NodeKayles ||
                 kind == gpg::GameKind::MisereNodeKayles)
          std::cout << "illegal: " << x
                    << " is adjacent to a selected vertex\n";
        else
          std::cout << "illegal: " << x
                    << " is not adjacent to every selected vertex\n";
        continue;
      }
      pos.selected.insert(x);
    } else {
      std::optional<int> mv = gpg::best_move(g, kind, pos, opts);
      std::cout << "engine plays " << *mv << "\n";
      pos.selected.insert(*mv);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gpgames: exact solver, reduction compiler and verification suite for "
      "vertex-selection games (general position, Node Kayles, "
      "clique-forming)"};
  app.require_subcommand(1);

  std::string graph_file, family, game = "gp-avoid";
  bool json = false, strategy = false, engine_starts = false;
  bool by_oracle = false;
  std::string fallback;

  CLI::App* solve = app.add_subcommand("solve", "solve a game instance");
  solve->add_option("--graph", graph_file, "graph file (p gp format)");
  solve->add_option("--family", family,
                    "family spec, e.g. cycle:5, rook:3,4, lexk:FILE,3");
  solve->add_option("--game", game,
                    "gp-achieve | gp-avoid | kayles | kayles-misere | clique "
                    "| clique-misere");
  solve->add_flag("--json", json, "emit a JSON report");
  solve->add_flag("--strategy", strategy, "print the principal variation");
  solve->add_flag("--oracle", by_oracle,
                  "answer from the closed-form rule table (families only)");
  solve->add_option("--fallback", fallback,
                    "'solve': search when the rule table declines");

  std::string from, input, output;
  CLI::App* reduce =
      app.add_subcommand("reduce", "compile a reduction to a labeled graph");
  reduce->add_option("--from", from, "clique | clique-misere | tqbf")
      ->required();
  reduce->add_option("--input", input, "input graph or formula file")
      ->required();
  reduce->add_option("--output", output, "output path prefix")->required();

  std::string suite;
  int max_vertices = 0;
  std::uint64_t seed = 1;
  int jobs = 0;
  CLI::App* verify =
      app.add_subcommand("verify", "run an oracle-vs-solver sweep");
  verify->add_option("--suite", suite, "one of: rook grid cylinder "
                                       "multipartite wheel cycle lex "
                                       "reductions tqbf properties all")
      ->required();
  verify->add_option("--max-vertices", max_vertices,
                     "override the sweep's standard size bound");
  verify->add_option("--seed", seed, "seed for the randomized sweeps");
  verify->add_option("--jobs", jobs, "worker threads (default: all cores)");
  verify->add_flag("--json", json, "emit a JSON summary");

  CLI::App* play =
      app.add_subcommand("play", "play against the engine on stdin");
  play->add_option("--graph", graph_file, "graph file (p gp format)");
  play->add_option("--family", family, "family spec");
  play->add_option("--game", game, "game kind");
  play->add_flag("--engine-starts", engine_starts,
                 "let the engine move first (engine plays A)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed())
      return cmd_solve(graph_file, family, game, json, strategy, by_oracle,
                       fallback);
    if (reduce->parsed()) return cmd_reduce(from, input, output);
    if (verify->parsed())
      return cmd_verify(suite, max_vertices, seed, jobs, json);
    if (play->parsed())
      return cmd_play(graph_file, family, game, engine_starts);
  } catch (const gpg::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
