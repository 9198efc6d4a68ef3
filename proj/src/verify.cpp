#include "gpg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gpg/families.hpp"
#include "gpg/game.hpp"
#include "gpg/oracles.hpp"
#include "gpg/reductions.hpp"

namespace gpg {

namespace {

struct Outcome {
  bool agree = true;
  std::string winner;
  std::uint64_t nodes = 0;
  std::optional<std::string> tag;
  std::string detail;
};

struct Check {
  std::string instance;
  std::string game;
  std::function<Outcome()> run;
};

std::vector<Report> run_checks(const std::vector<Check>& checks, int jobs,
                               std::vector<std::string>& failures) {
  if (jobs <= 0) jobs = int(std::thread::hardware_concurrency());
  if (jobs <= 0) jobs = 1;
  jobs = std::min<int>(jobs, std::max<int>(1, int(checks.size())));

  std::vector<Report> reports(checks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      const auto start = std::chrono::steady_clock::now();
      Outcome out;
      try {
        out = checks[i].run();
      } catch (const std::exception& e) {
        out.agree = false;
        out.detail = std::string("exception: ") + e.what();
      }
      const auto stop = std::chrono::steady_clock::now();
      Report r;
      r.instance = checks[i].instance;
      r.game = checks[i].game;
      r.winner = out.winner;
      r.nodes = out.nodes;
      r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         stop - start)
                         .count();
      r.theorem_tag = out.tag;
      r.agreement = out.agree;
      if (!out.agree && !out.detail.empty()) r.instance += " [" + out.detail + "]";
      reports[i] = std::move(r);
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const Report& r : reports)
    if (r.agreement && !*r.agreement)
      failures.push_back(r.instance + " (" + r.game + ")");
  return reports;
}

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return std::mt19937_64(mix(seed) ^ mix(stream * 0x100000001b3ULL + 17));
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

// random spanning tree first, then extra edges with probability p
Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (int v = 1; v < n; ++v)
    g.add_edge(v, int(rng() % std::uint64_t(v)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

// sides {0..n1-1} and {n1..n1+n2-1}; vertices join alternately and each
// attaches to an already-placed vertex of the other side, so the result
// is connected
Graph random_connected_bipartite(std::mt19937_64& rng, int n1, int n2,
                                 double p) {
  Graph g(n1 + n2);
  std::vector<int> placed_a = {0}, placed_b;
  for (int i = 0; i < std::max(n1, n2); ++i) {
    const int b = i;
    if (b < n2) {
      g.add_edge(n1 + b, placed_a[rng() % placed_a.size()]);
      placed_b.push_back(n1 + b);
    }
    const int a = i + 1;
    if (a < n1) {
      g.add_edge(a, placed_b[rng() % placed_b.size()]);
      placed_a.push_back(a);
    }
  }
  std::bernoulli_distribution edge(p);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      if (edge(rng)) g.add_edge(a, n1 + b);
  return g;
}

VertexSet random_subset(std::mt19937_64& rng, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (rng() & 1) s.insert(v);
  return s;
}

VertexSet grow_random_gp_set(std::mt19937_64& rng, const Graph& g,
                             const DistanceMatrix& dm) {
  VertexSet s;
  for (;;) {
    VertexSet playable = playable_set(g, dm, s);
    if (playable.empty()) return s;
    std::vector<int> options(playable.begin(), playable.end());
    s.insert(options[rng() % options.size()]);
  }
}

// labeled graph on k vertices from an edge-pair bitmask in lexicographic
// pair order (0,1),(0,2),...,(k-2,k-1)
Graph graph_from_mask(int k, std::uint64_t mask) {
  Graph g(k);
  int bit = 0;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

std::string player_str(Player p) { return player_name(p); }

// ---------------------------------------------------------------- families

void add_oracle_check(std::vector<Check>& checks, const FamilySpec& spec,
                      GameKind kind, int solve_cap = 0) {
  checks.push_back(
      {spec.to_string(), game_kind_name(kind), [spec, kind, solve_cap]() {
         Outcome out;
         OracleVerdict expected = oracle(spec, kind);
         if (!expected.supported) {
           out.agree = false;
           out.detail = "oracle unexpectedly unsupported: " +
                        expected.theorem_tag;
           return out;
         }
         BuiltFamily built = make_named(spec);
         SolveOptions opts;
         opts.max_vertices = solve_cap > 0 ? solve_cap : 0;
         SolveResult got = solve(built.graph, kind, {}, opts);
         out.winner = player_str(got.winner);
         out.nodes = got.nodes_expanded;
         out.tag = expected.theorem_tag;
         out.agree = got.winner == *expected.winner;
         if (!out.agree)
           out.detail = "oracle says " + player_str(*expected.winner) +
                        ", solver says " + player_str(got.winner);
         return out;
       }});
}

std::vector<FamilySpec> rook_specs(int cap) {
  std::vector<FamilySpec> out;
  for (int n = 2; n * n <= cap; ++n)
    for (int m = n; n * m <= cap; ++m) {
      FamilySpec s;
      s.kind = FamilySpec::Kind::Rook;
      s.a = n;
      s.b = m;
      out.push_back(s);
    }
  return out;
}

std::vector<FamilySpec> grid_specs(int cap) {
  std::vector<FamilySpec> out;
  for (int n = 3; 2 * n <= cap; ++n)
    for (int m = 2; n * m <= cap; ++m) {
      FamilySpec s;
      s.kind = FamilySpec::Kind::Grid;
      s.a = n;
      s.b = m;
      out.push_back(s);
    }
  return out;
}

std::vector<FamilySpec> cylinder_specs(int cap) {
  std::vector<FamilySpec> out;
  for (int n = 3; n <= 7 && 2 * n <= cap; ++n)
    for (int m = 2; n * m <= cap; ++m) {
      FamilySpec s;
      s.kind = FamilySpec::Kind::Cylinder;
      s.a = n;
      s.b = m;
      out.push_back(s);
    }
  return out;
}

std::vector<FamilySpec> multipartite_specs(int cap) {
  std::vector<FamilySpec> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (current.size() >= 2) {
      FamilySpec s;
      s.kind = FamilySpec::Kind::CompleteMultipartite;
      s.parts = current;
      out.push_back(s);
    }
    for (int p = std::min(max_part, remaining); p >= 2; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(cap, cap);
  return out;
}

std::vector<FamilySpec> wheel_specs(int cap) {
  std::vector<FamilySpec> out;
  for (int n = 1; n <= 3; ++n)
    for (int m = 3; m <= 8; ++m) {
      if (n + m > cap) continue;
      FamilySpec s;
      s.kind = FamilySpec::Kind::GeneralizedWheel;
      s.a = n;
      s.b = m;
      out.push_back(s);
    }
  return out;
}

std::vector<FamilySpec> spot_check_specs(int cap) {
  std::vector<FamilySpec> out;
  for (int n = 3; n <= cap; ++n) {
    FamilySpec s;
    s.kind = FamilySpec::Kind::Cycle;
    s.a = n;
    out.push_back(s);
  }
  for (int n = 1; n <= cap; ++n) {
    FamilySpec s;
    s.kind = FamilySpec::Kind::Path;
    s.a = n;
    out.push_back(s);
  }
  for (int n = 1; n <= cap; ++n) {
    FamilySpec s;
    s.kind = FamilySpec::Kind::Complete;
    s.a = n;
    out.push_back(s);
  }
  FamilySpec p;
  p.kind = FamilySpec::Kind::Petersen;
  out.push_back(p);
  return out;
}

std::vector<Check> family_suite(const std::string& name,
                                const VerifyOptions& opt) {
  std::vector<Check> checks;
  const int cap = opt.max_vertices;
  if (name == "rook") {
    for (const FamilySpec& s : rook_specs(cap > 0 ? cap : 16)) {
      add_oracle_check(checks, s, GameKind::GpAvoidance);
      add_oracle_check(checks, s, GameKind::GpAchievement);
    }
  } else if (name == "grid") {
    for (const FamilySpec& s : grid_specs(cap > 0 ? cap : 16)) {
      add_oracle_check(checks, s, GameKind::GpAvoidance);
      add_oracle_check(checks, s, GameKind::GpAchievement);
    }
  } else if (name == "cylinder") {
    for (const FamilySpec& s : cylinder_specs(cap > 0 ? cap : 14)) {
      add_oracle_check(checks, s, GameKind::GpAvoidance);
      if (s.a % 2 == 0)
        add_oracle_check(checks, s, GameKind::GpAchievement);
    }
  } else if (name == "multipartite") {
    for (const FamilySpec& s : multipartite_specs(cap > 0 ? cap : 12)) {
      add_oracle_check(checks, s, GameKind::GpAvoidance);
      add_oracle_check(checks, s, GameKind::GpAchievement);
    }
  } else if (name == "wheel") {
    for (const FamilySpec& s : wheel_specs(cap > 0 ? cap : 11))
      add_oracle_check(checks, s, GameKind::GpAvoidance);
  } else if (name == "cycle") {
    for (const FamilySpec& s : spot_check_specs(cap > 0 ? cap : 12)) {
      add_oracle_check(checks, s, GameKind::GpAvoidance);
      add_oracle_check(checks, s, GameKind::GpAchievement);
    }
  }
  return checks;
}

// ---------------------------------------------------------------- lex

std::vector<std::uint64_t> connected_masks(int k) {
  std::vector<std::uint64_t> out;
  const int pairs = k * (k - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
    if (basic_properties(graph_from_mask(k, mask)).connected)
      out.push_back(mask);
  return out;
}

std::vector<Check> lex_suite(const VerifyOptions& opt) {
  const int cap = opt.max_vertices > 0 ? opt.max_vertices : 16;
  std::vector<Check> checks;
  for (int k = 1; k <= 5; ++k) {
    for (std::uint64_t mask : connected_masks(k)) {
      for (int n = 1; n <= 3; ++n) {
        if (k * n > cap) continue;
        std::ostringstream name;
        name << "lex base(k=" << k << ",mask=" << mask << ") x K" << n;
        checks.push_back({name.str(), game_kind_name(GameKind::GpAvoidance),
                          [k, mask, n]() {
                            Outcome out;
                            Graph base = graph_from_mask(k, mask);
                            OracleVerdict expected =
                                lex_complete_oracle(base, n);
                            Graph product =
                                lexicographic_product(base, make_complete(n))
                                    .first;
                            SolveResult got =
                                solve(product, GameKind::GpAvoidance);
                            out.winner = player_str(got.winner);
                            out.nodes = got.nodes_expanded;
                            out.tag = expected.theorem_tag;
                            out.agree = got.winner == *expected.winner;
                            if (!out.agree)
                              out.detail = "oracle says " +
                                           player_str(*expected.winner) +
                                           ", solver says " + out.winner;
                            return out;
                          }});
      }
    }
  }
  return checks;
}

// ---------------------------------------------------------------- reductions

Check r1_check(std::string name, const Graph& h) {
  return {std::move(name), "gp-achieve vs clique", [h]() {
            Outcome out;
            ReducedGraph rg = clique_to_gp_achievement(h);
            GraphProperties props = basic_properties(rg.graph);
            if (!props.connected || props.diameter > 4) {
              out.agree = false;
              out.detail = "diameter bound violated";
              return out;
            }
            SolveResult gp = solve(rg.graph, GameKind::GpAchievement, {},
                                   SolveOptions{40, true, true});
            SolveResult cf = solve(h, GameKind::CliqueForming);
            out.winner = player_str(gp.winner);
            out.nodes = gp.nodes_expanded + cf.nodes_expanded;
            out.agree = (gp.winner == Player::First) ==
                        (cf.winner == Player::Second);
            if (!out.agree)
              out.detail = "gp-achievement " + player_str(gp.winner) +
                           " vs clique-forming " + player_str(cf.winner);
            return out;
          }};
}

Check r2_check(std::string name, const Graph& h) {
  return {std::move(name), "gp-avoid vs clique-misere", [h]() {
            Outcome out;
            ReducedGraph rg = misere_clique_to_gp_avoidance(h);
            GraphProperties props = basic_properties(rg.graph);
            if (!props.connected || props.diameter > 4) {
              out.agree = false;
              out.detail = "diameter bound violated";
              return out;
            }
            SolveResult gp = solve(rg.graph, GameKind::GpAvoidance, {},
                                   SolveOptions{40, true, true});
            SolveResult cf = solve(h, GameKind::MisereCliqueForming);
            out.winner = player_str(gp.winner);
            out.nodes = gp.nodes_expanded + cf.nodes_expanded;
            out.agree = (gp.winner == Player::First) ==
                        (cf.winner == Player::Second);
            if (!out.agree)
              out.detail = "gp-avoidance " + player_str(gp.winner) +
                           " vs misere clique-forming " + player_str(cf.winner);
            return out;
          }};
}

std::vector<Check> reductions_suite(const VerifyOptions& opt) {
  std::vector<Check> checks;
  for (int k = 1; k <= 4; ++k) {
    const int pairs = k * (k - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::ostringstream name;
      name << "R1:H(k=" << k << ",mask=" << mask << ")";
      checks.push_back(r1_check(name.str(), graph_from_mask(k, mask)));
    }
  }
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 rng = seeded_rng(opt.seed, 1000 + std::uint64_t(i));
    const int k = 5 + int(rng() % 2);
    Graph h = random_graph(rng, k, 0.5);
    std::ostringstream name;
    name << "R1:random#" << i << "(k=" << k << ")";
    checks.push_back(r1_check(name.str(), h));
  }

  for (int k = 1; k <= 3; ++k) {
    const int pairs = k * (k - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::ostringstream name;
      name << "R2:H(k=" << k << ",mask=" << mask << ")";
      checks.push_back(r2_check(name.str(), graph_from_mask(k, mask)));
    }
  }
  for (int i = 0; i < 30; ++i) {
    std::mt19937_64 rng = seeded_rng(opt.seed, 2000 + std::uint64_t(i));
    const int k = 4 + int(rng() % 2);
    Graph h = random_graph(rng, k, 0.5);
    std::ostringstream name;
    name << "R2:random#" << i << "(k=" << k << ")";
    checks.push_back(r2_check(name.str(), h));
  }
  return checks;
}

// ---------------------------------------------------------------- tqbf

Qbf worked_example_qbf() {
  Qbf f;
  f.num_vars = 4;
  f.clauses = {{4}, {-4, 3, 2}, {-4, 3, -2, 1}};
  return f;
}

// correspondence between the direct evaluation and the misere Kayles game
// on the compiled graph; the formula is normalized first
Outcome tqbf_outcome(const Qbf& f) {
  Outcome out;
  const QbfWinner direct = tqbf_evaluate(f);
  const Qbf norm = tqbf_normalize(f);
  if (tqbf_evaluate(norm) != direct) {
    out.agree = false;
    out.detail = "normalization changed the game value";
    return out;
  }
  ReducedGraph rg = tqbf_to_misere_kayles(norm);
  SolveResult kayles = solve(rg.graph, GameKind::MisereNodeKayles, {},
                             SolveOptions{40, true, true});
  out.winner = player_str(kayles.winner);
  out.nodes = kayles.nodes_expanded;
  out.agree = (direct == QbfWinner::Player1) ==
              (kayles.winner == Player::First);
  if (!out.agree)
    out.detail = std::string("evaluator says Player") +
                 (direct == QbfWinner::Player1 ? "1" : "2") +
                 ", kayles winner " + out.winner;
  return out;
}

std::vector<Check> tqbf_suite(const VerifyOptions& opt) {
  std::vector<Check> checks;

  checks.push_back({"tqbf:worked-example", "kayles-misere", []() {
                      // the second player must refute this formula; check
                      // that before the compiled-game correspondence
                      if (tqbf_evaluate(worked_example_qbf()) !=
                          QbfWinner::Player2) {
                        Outcome out;
                        out.agree = false;
                        out.detail = "expected Player2 on the worked example";
                        return out;
                      }
                      return tqbf_outcome(worked_example_qbf());
                    }});

  // every clause over variables {1,2}: the 15 nonempty literal subsets
  std::vector<std::vector<int>> universe;
  for (int m = 1; m < 16; ++m) {
    std::vector<int> clause;
    const int lits[4] = {1, -1, 2, -2};
    for (int b = 0; b < 4; ++b)
      if (m >> b & 1) clause.push_back(lits[b]);
    universe.push_back(clause);
  }

  auto add_exhaustive = [&](const std::vector<std::vector<int>>& extras) {
    Qbf f;
    f.num_vars = 2;
    f.clauses = {{1, -1}};
    for (const auto& c : extras) f.clauses.push_back(c);
    std::ostringstream name;
    name << "tqbf:n2;m" << f.clauses.size() << ";";
    for (const auto& c : f.clauses) {
      for (std::size_t i = 0; i < c.size(); ++i) name << (i ? "," : "") << c[i];
      name << "|";
    }
    checks.push_back({name.str(), "kayles-misere",
                      [f]() { return tqbf_outcome(f); }});
  };

  add_exhaustive({});
  for (const auto& c1 : universe) add_exhaustive({c1});
  for (const auto& c1 : universe)
    for (const auto& c2 : universe) add_exhaustive({c1, c2});

  for (int i = 0; i < 200; ++i) {
    std::mt19937_64 rng = seeded_rng(opt.seed, 3000 + std::uint64_t(i));
    Qbf f;
    f.num_vars = 1 + int(rng() % 4);
    const int m = 1 + int(rng() % 4);
    for (int c = 0; c < m; ++c) {
      std::vector<int> clause;
      for (int v = 1; v <= f.num_vars; ++v)
        if (rng() & 1) clause.push_back(rng() & 1 ? v : -v);
      if (clause.empty()) {
        int v = 1 + int(rng() % std::uint64_t(f.num_vars));
        clause.push_back(rng() & 1 ? v : -v);
      }
      f.clauses.push_back(clause);
    }
    std::ostringstream name;
    name << "tqbf:random#" << i << "(n=" << f.num_vars << ",m=" << m << ")";
    checks.push_back({name.str(), "kayles-misere",
                      [f]() { return tqbf_outcome(f); }});
  }
  return checks;
}

// ---------------------------------------------------------------- properties

Outcome gp_checker_equivalence(std::uint64_t seed) {
  Outcome out;
  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng = seeded_rng(seed, 4000 + std::uint64_t(i));
    const int n = 1 + int(rng() % 10);
    Graph g = random_connected_graph(rng, n, 0.2 + double(rng() % 7) / 10.0);
    DistanceMatrix dm = all_pairs_distances(g);
    VertexSet s = random_subset(rng, n);
    const bool direct = is_general_position(g, dm, s);
    const bool structural = is_gp_by_characterization(g, dm, s);
    if (direct != structural) {
      out.agree = false;
      out.detail = "checkers disagree on sample " + std::to_string(i) +
                   " set " + s.to_string();
      return out;
    }
  }
  return out;
}

Outcome playable_dual_agreement(std::uint64_t seed) {
  Outcome out;
  int gp_samples = 0;
  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng = seeded_rng(seed, 4000 + std::uint64_t(i));
    const int n = 1 + int(rng() % 10);
    Graph g = random_connected_graph(rng, n, 0.2 + double(rng() % 7) / 10.0);
    DistanceMatrix dm = all_pairs_distances(g);
    VertexSet s = random_subset(rng, n);
    if (!is_general_position(g, dm, s)) {
      bool rejected = false;
      try {
        playable_set(g, dm, s);
      } catch (const std::invalid_argument&) {
        rejected = true;
      }
      if (!rejected) {
        out.agree = false;
        out.detail = "non-gp set accepted on sample " + std::to_string(i);
        return out;
      }
      continue;
    }
    ++gp_samples;
    if (playable_set(g, dm, s) != playable_set_by_definition(g, dm, s)) {
      out.agree = false;
      out.detail = "routes disagree on sample " + std::to_string(i) + " set " +
                   s.to_string();
      return out;
    }
  }
  if (gp_samples == 0) {
    out.agree = false;
    out.detail = "corpus produced no general position samples";
  }
  return out;
}

Outcome cartesian_metric_laws(std::uint64_t seed) {
  Outcome out;
  for (int round = 0; round < 50; ++round) {
    std::mt19937_64 rng = seeded_rng(seed, 5000 + std::uint64_t(round));
    int a = 2 + int(rng() % 4);
    int b = 2 + int(rng() % 4);
    while (a * b > 20) (a > b ? a : b)--;
    Graph g = random_connected_graph(rng, a, 0.5);
    Graph h = random_connected_graph(rng, b, 0.5);
    auto [product, map] = cartesian_product(g, h);
    DistanceMatrix dg = all_pairs_distances(g);
    DistanceMatrix dh = all_pairs_distances(h);
    DistanceMatrix dp = all_pairs_distances(product);
    for (int g1 = 0; g1 < a; ++g1)
      for (int h1 = 0; h1 < b; ++h1)
        for (int g2 = 0; g2 < a; ++g2)
          for (int h2 = 0; h2 < b; ++h2) {
            const int p1 = map.index(g1, h1), p2 = map.index(g2, h2);
            if (dp.at(p1, p2) != dg.at(g1, g2) + dh.at(h1, h2)) {
              out.agree = false;
              out.detail = "distance law fails in round " +
                           std::to_string(round);
              return out;
            }
            VertexSet expected;
            for (int x : interval(g, dg, g1, g2))
              for (int y : interval(h, dh, h1, h2))
                expected.insert(map.index(x, y));
            if (interval(product, dp, p1, p2) != expected) {
              out.agree = false;
              out.detail = "interval law fails in round " +
                           std::to_string(round);
              return out;
            }
          }
  }
  return out;
}

Outcome layer_lemma(std::uint64_t seed) {
  Outcome out;
  for (int round = 0; round < 100; ++round) {
    std::mt19937_64 rng = seeded_rng(seed, 6000 + std::uint64_t(round));
    int a = 2 + int(rng() % 4);
    int b = 2 + int(rng() % 4);
    while (a * b > 20) (a > b ? a : b)--;
    Graph g = random_connected_graph(rng, a, 0.5);
    Graph h = random_connected_graph(rng, b, 0.5);
    auto [product, map] = cartesian_product(g, h);
    DistanceMatrix dp = all_pairs_distances(product);
    for (int grow = 0; grow < 3; ++grow) {
      VertexSet r = grow_random_gp_set(rng, product, dp);
      for (int u : r) {
        auto [gu, hu] = map.coords(u);
        int same_h_layer = 0, same_g_layer = 0;  // fixed g / fixed h
        for (int w : r) {
          auto [gw, hw] = map.coords(w);
          if (gw == gu) ++same_h_layer;
          if (hw == hu) ++same_g_layer;
        }
        if (same_h_layer != 1 && same_g_layer != 1) {
          out.agree = false;
          out.detail = "layer condition fails in round " +
                       std::to_string(round) + " at vertex " +
                       std::to_string(u);
          return out;
        }
      }
    }
  }
  return out;
}

Outcome bipartite_independence(std::uint64_t seed) {
  Outcome out;
  for (int round = 0; round < 100; ++round) {
    std::mt19937_64 rng = seeded_rng(seed, 7000 + std::uint64_t(round));
    const int n1 = 1 + int(rng() % 5);
    const int n2 = 1 + int(rng() % 5);
    Graph g = random_connected_bipartite(rng, n1, n2, 0.4);
    DistanceMatrix dm = all_pairs_distances(g);
    const int n = g.vertex_count();

    auto independent = [&](const VertexSet& s) {
      for (int u : s)
        if (g.neighbors(u).intersects(s)) return false;
      return true;
    };

    if (n <= 8) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) s.insert(v);
        if (s.count() >= 3 && is_general_position(g, dm, s) &&
            !independent(s)) {
          out.agree = false;
          out.detail = "dependent gp set " + s.to_string() + " in round " +
                       std::to_string(round);
          return out;
        }
      }
    } else {
      for (int grow = 0; grow < 5; ++grow) {
        VertexSet s = grow_random_gp_set(rng, g, dm);
        if (s.count() >= 3 && !independent(s)) {
          out.agree = false;
          out.detail = "dependent gp set " + s.to_string() + " in round " +
                       std::to_string(round);
          return out;
        }
      }
    }
  }
  return out;
}

Outcome shortcut_agreement(const std::vector<FamilySpec>& specs) {
  Outcome out;
  for (const FamilySpec& spec : specs) {
    BuiltFamily built = make_named(spec);
    for (GameKind kind : {GameKind::GpAvoidance, GameKind::GpAchievement}) {
      SolveOptions with, without;
      without.use_parity_shortcut = false;
      const Player a = solve(built.graph, kind, {}, with).winner;
      const Player b = solve(built.graph, kind, {}, without).winner;
      if (a != b) {
        out.agree = false;
        out.detail = spec.to_string() + " " + game_kind_name(kind) +
                     ": shortcut on " + player_str(a) + ", off " +
                     player_str(b);
        return out;
      }
    }
  }
  return out;
}

Outcome duality_agreement(std::uint64_t seed) {
  Outcome out;
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 rng = seeded_rng(seed, 8000 + std::uint64_t(i));
    const int n = 2 + int(rng() % 9);
    Graph g = random_graph(rng, n, 0.5);
    for (GameKind kind :
         {GameKind::NodeKayles, GameKind::MisereNodeKayles,
          GameKind::CliqueForming, GameKind::MisereCliqueForming}) {
      auto [dual_graph, dual_kind] = kayles_clique_duality(g, kind);
      const Player direct = solve(g, kind).winner;
      const Player dual = solve(dual_graph, dual_kind).winner;
      if (direct != dual) {
        out.agree = false;
        out.detail = "duality breaks on sample " + std::to_string(i) + " " +
                     game_kind_name(kind);
        return out;
      }
    }
  }
  return out;
}

std::vector<Check> properties_suite(const VerifyOptions& opt) {
  const std::uint64_t seed = opt.seed;
  std::vector<Check> checks;
  checks.push_back({"property:gp-characterization-equivalence(x1000)",
                    "property",
                    [seed]() { return gp_checker_equivalence(seed); }});
  checks.push_back({"property:playable-dual-route-agreement(x1000)",
                    "property",
                    [seed]() { return playable_dual_agreement(seed); }});
  checks.push_back({"property:cartesian-distance-and-interval-laws(x50)",
                    "property",
                    [seed]() { return cartesian_metric_laws(seed); }});
  checks.push_back({"property:product-layer-condition(x100)", "property",
                    [seed]() { return layer_lemma(seed); }});
  checks.push_back({"property:bipartite-gp-independence(x100)", "property",
                    [seed]() { return bipartite_independence(seed); }});
  checks.push_back({"property:shortcut-on-off(rook)", "property",
                    []() { return shortcut_agreement(rook_specs(16)); }});
  checks.push_back({"property:shortcut-on-off(grid)", "property",
                    []() { return shortcut_agreement(grid_specs(16)); }});
  checks.push_back({"property:shortcut-on-off(cylinder)", "property",
                    []() { return shortcut_agreement(cylinder_specs(14)); }});
  checks.push_back(
      {"property:shortcut-on-off(multipartite)", "property",
       []() { return shortcut_agreement(multipartite_specs(12)); }});
  checks.push_back({"property:shortcut-on-off(wheel)", "property",
                    []() { return shortcut_agreement(wheel_specs(11)); }});
  checks.push_back({"property:shortcut-on-off(spot-checks)", "property",
                    []() { return shortcut_agreement(spot_check_specs(12)); }});
  checks.push_back({"property:kayles-clique-duality(x100)", "property",
                    [seed]() { return duality_agreement(seed); }});
  return checks;
}

std::vector<Check> build_suite(const std::string& name,
                               const VerifyOptions& opt) {
  if (name == "rook" || name == "grid" || name == "cylinder" ||
      name == "multipartite" || name == "wheel" || name == "cycle")
    return family_suite(name, opt);
  if (name == "lex") return lex_suite(opt);
  if (name == "reductions") return reductions_suite(opt);
  if (name == "tqbf") return tqbf_suite(opt);
  if (name == "properties") return properties_suite(opt);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "rook",  "grid",       "cylinder", "multipartite", "wheel", "cycle",
      "lex",   "reductions", "tqbf",     "properties",   "all"};
  return names;
}

VerifyResult run_suite(const std::string& suite, const VerifyOptions& opt) {
  VerifyResult result;
  result.suite = suite;
  std::vector<Check> checks;
  if (suite == "all") {
    for (const std::string& name : suite_names()) {
      if (name == "all") continue;
      std::vector<Check> part = build_suite(name, opt);
      for (Check& c : part) {
        c.instance = name + "/" + c.instance;
        checks.push_back(std::move(c));
      }
    }
  } else {
    checks = build_suite(suite, opt);
  }
  result.reports = run_checks(checks, opt.jobs, result.failures);
  return result;
}

}  // namespace gpg
