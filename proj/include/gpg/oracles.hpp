#pragma once

#include <optional>
#include <string>

#include "gpg/families.hpp"
#include "gpg/game.hpp"

namespace gpg {

/// Closed-form winner prediction. supported = false carries no winner;
/// theorem_tag names the rule clause that fired (or the guard that
/// declined). Tags marked "(cited)" restate results quoted from earlier
/// work rather than the rules established here.
struct OracleVerdict {
  bool supported = false;
  std::optional<Player> winner;
  std::string theorem_tag;
};

/// Dispatch over the resolved families, for the two gp kinds. Parameters
/// outside a rule's stated range yield supported = false, never a guess.
OracleVerdict oracle(const FamilySpec& spec, GameKind kind);

/// Avoidance on base∘K_n: the second player wins iff they win on the base
/// (decided by the engine, never on the product) and n is odd. Rejects a
/// disconnected base; kinds other than avoidance are unsupported.
OracleVerdict lex_complete_oracle(const Graph& base, int n,
                                  GameKind kind = GameKind::GpAvoidance,
                                  const SolveOptions& options = {});

/// A vertex u such that for every other v, playable_set({u,v}) + {u,v}
/// induces a clique of even order. When present, the first player wins
/// avoidance on g∘H for every connected H. Requires connected g with at
/// least two vertices.
std::optional<int> even_clique_kernel(const Graph& g);

}  // namespace gpg
