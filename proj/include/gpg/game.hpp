#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpg/graph.hpp"

namespace gpg {

/// The six supported games. Selection legality per kind:
///   GpAchievement / GpAvoidance   — selected set stays in general position
///   NodeKayles / MisereNodeKayles — selected set stays independent
///   CliqueForming / MisereCliqueForming — selected set stays a clique
/// Normal kinds: the player unable to move loses. Misere kinds: the player
/// unable to move wins.
enum class GameKind {
  GpAchievement,
  GpAvoidance,
  NodeKayles,
  MisereNodeKayles,
  CliqueForming,
  MisereCliqueForming
};

bool is_misere(GameKind kind);
bool is_gp_kind(GameKind kind);
std::string game_kind_name(GameKind kind);
std::optional<GameKind> game_kind_from_name(const std::string& name);

enum class Player { First, Second };
Player opponent(Player p);
/// First is the player moving at the empty position, printed as "A".
std::string player_name(Player p);

/// The mover is implied by parity: First moves when |selected| is even.
struct Position {
  VertexSet selected;
  Player to_move() const {
    return selected.count() % 2 == 0 ? Player::First : Player::Second;
  }
};

struct SolveOptions {
  int max_vertices = 0;  // 0: kind default (24 gp kinds, 32 kayles/clique)
  bool use_parity_shortcut = true;
  bool use_memo = true;
};

struct SolveResult {
  Player winner;
  int game_length_bound;  // moves along the recorded principal variation
  std::vector<int> principal_variation;
  std::uint64_t nodes_expanded;
};

bool position_is_legal(const Graph& g, const DistanceMatrix& dm,
                       const Position& pos, GameKind kind);

/// Throws std::invalid_argument on an illegal position.
VertexSet legal_moves(const Graph& g, const DistanceMatrix& dm,
                      const Position& pos, GameKind kind);

/// If selected + playable is itself a general position set, every line of
/// play lasts exactly r = |playable| more moves, so the winner follows
/// from parity alone: the mover wins iff r is odd (normal) or r is even
/// (misere; r = 0 is the terminal "unable to move" case). Returns the
/// absolute winner when the guard holds, nullopt otherwise. gp kinds only.
std::optional<Player> parity_shortcut(const Graph& g, const DistanceMatrix& dm,
                                      const Position& pos, GameKind kind);

/// Exact winner under optimal play, by memoized search over selected-set
/// bitmasks. Throws SizeLimitError above the configured vertex limit and
/// std::invalid_argument on an illegal start.
SolveResult solve(const Graph& g, GameKind kind, const Position& start = {},
                  const SolveOptions& options = {});

/// A move preserving the solve verdict: the lowest-index winning move if
/// one exists, else the lowest-index legal move; nullopt when terminal.
std::optional<int> best_move(const Graph& g, GameKind kind,
                             const Position& pos,
                             const SolveOptions& options = {});

}  // namespace gpg
