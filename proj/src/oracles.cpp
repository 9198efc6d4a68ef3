#include "gpg/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpg {

namespace {

OracleVerdict verdict(Player winner, std::string tag) {
  return {true, winner, std::move(tag)};
}

OracleVerdict unsupported(std::string why) {
  return {false, std::nullopt, "unsupported: " + std::move(why)};
}

Player pick(bool first_wins) {
  return first_wins ? Player::First : Player::Second;
}

}  // namespace

OracleVerdict oracle(const FamilySpec& spec, GameKind kind) {
  using Kind = FamilySpec::Kind;
  if (kind != GameKind::GpAchievement && kind != GameKind::GpAvoidance)
    return unsupported("oracles cover the gp games only");
  const bool avoid = kind == GameKind::GpAvoidance;

  switch (spec.kind) {
    case Kind::Path: {
      const int n = spec.a;
      if (n < 1) return unsupported("path needs n >= 1");
      if (n == 1)
        return verdict(pick(!avoid), "single vertex: one forced move");
      return avoid ? verdict(Player::First,
                             "path: the second move empties the playable set")
                   : verdict(Player::Second,
                             "bipartite achievement: isolated-vertex parity "
                             "(cited)");
    }
    case Kind::Cycle: {
      const int n = spec.a;
      if (n < 3) return unsupported("cycle needs n >= 3");
      if (avoid)
        return verdict(pick(n == 4), "cycle: second wins avoidance iff n != 4");
      return verdict(pick(n % 2 == 1), "cycle: achievement parity (cited)");
    }
    case Kind::Complete: {
      const int n = spec.a;
      if (n < 1) return unsupported("complete graph needs n >= 1");
      return verdict(pick(avoid ? n % 2 == 0 : n % 2 == 1),
                     "complete: parity of the order");
    }
    case Kind::CompleteMultipartite: {
      const auto& parts = spec.parts;
      if (parts.size() < 2)
        return unsupported("complete multipartite rule needs k >= 2");
      if (std::any_of(parts.begin(), parts.end(),
                      [](int p) { return p < 2; }))
        return unsupported("complete multipartite rule needs every part >= 2");
      const bool k_even = parts.size() % 2 == 0;
      const bool some_even = std::any_of(parts.begin(), parts.end(),
                                         [](int p) { return p % 2 == 0; });
      const bool a_wins_avoidance = k_even && some_even;
      if (avoid)
        return verdict(pick(a_wins_avoidance),
                       "complete multipartite: even k with an even part");
      return verdict(pick(!a_wins_avoidance),
                     "complete multipartite: achievement opposite of "
                     "avoidance");
    }
    case Kind::GeneralizedWheel: {
      if (spec.a < 1 || spec.b < 3)
        return unsupported("generalized wheel needs n >= 1, m >= 3");
      if (!avoid)
        return unsupported("generalized wheel resolved for avoidance only");
      return verdict(pick(spec.b < 4), "generalized wheel: rim length >= 4");
    }
    case Kind::Rook: {
      const int n = std::min(spec.a, spec.b);
      const int m = std::max(spec.a, spec.b);
      if (n < 2) return unsupported("rook rule needs both factors >= 2");
      if (avoid) {
        const bool second = (n == 2 && m % 2 == 1) || (n == 3 && m % 2 == 0);
        return verdict(pick(!second),
                       "rook avoidance: n=2 with odd m, or n=3 with even m");
      }
      return verdict(pick(n % 2 == 1 && m % 2 == 1),
                     "rook achievement: both factors odd (cited)");
    }
    case Kind::Grid: {
      if (spec.a < 3 || spec.b < 2)
        return unsupported("grid rule needs n >= 3 and m >= 2");
      if (avoid) return verdict(Player::Second, "grid: second wins avoidance");
      return verdict(Player::Second,
                     "bipartite achievement: isolated-vertex parity (cited)");
    }
    case Kind::Cylinder: {
      const int n = spec.a;
      if (n < 3 || spec.b < 2)
        return unsupported("cylinder rule needs n >= 3 and m >= 2");
      if (avoid)
        return verdict(pick(n % 2 == 0), "cylinder avoidance: odd cycle wins "
                                         "for the second player");
      if (n % 2 == 1)
        return unsupported("cylinder achievement open for odd cycles");
      return verdict(Player::Second,
                     "bipartite achievement: isolated-vertex parity (cited)");
    }
    case Kind::Petersen:
      return avoid ? verdict(Player::First, "petersen: first wins avoidance")
                   : verdict(Player::Second,
                             "petersen: second wins achievement");
    case Kind::LexWithComplete:
      return unsupported(
          "use lex_complete_oracle, which must solve the base factor");
  }
  return unsupported("unknown family");
}

OracleVerdict lex_complete_oracle(const Graph& base, int n, GameKind kind,
                                  const SolveOptions& options) {
  if (!basic_properties(base).connected)
    throw std::invalid_argument("lex oracle requires a connected base");
  if (kind != GameKind::GpAvoidance)
    return unsupported("lexicographic rule resolved for avoidance only");
  if (n < 1) return unsupported("complete factor needs n >= 1");

  const Player base_winner =
      solve(base, GameKind::GpAvoidance, {}, options).winner;
  const bool second_wins = base_winner == Player::Second && n % 2 == 1;
  return verdict(pick(!second_wins),
                 "lexicographic with complete factor: base avoidance winner "
                 "and factor parity");
}

std::optional<int> even_clique_kernel(const Graph& g) {
  if (!basic_properties(g).connected)
    throw std::invalid_argument("even clique kernel requires a connected "
                                "graph");
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;  // the rule quantifies over a second vertex
  const DistanceMatrix dm = all_pairs_distances(g);

  auto clique_of_even_order = [&](const VertexSet& c) {
    if (c.count() % 2 != 0) return false;
    for (int u : c) {
      VertexSet rest = c;
      rest.erase(u);
      if (!rest.is_subset_of(g.neighbors(u))) return false;
    }
    return true;
  };

  for (int u = 0; u < n; ++u) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (v == u) continue;
      VertexSet pair;
      pair.insert(u);
      pair.insert(v);
      VertexSet together = playable_set(g, dm, pair) | pair;
      ok = clique_of_even_order(together);
    }
    if (ok) return u;
  }
  return std::nullopt;
}

}  // namespace gpg
