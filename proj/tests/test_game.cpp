#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gpg/errors.hpp"
#include "gpg/families.hpp"
#include "gpg/game.hpp"
#include "test_helpers.hpp"

using namespace gpg;
using namespace testutil;

namespace {

constexpr GameKind kAllKinds[] = {
    GameKind::GpAchievement,      GameKind::GpAvoidance,
    GameKind::NodeKayles,         GameKind::MisereNodeKayles,
    GameKind::CliqueForming,      GameKind::MisereCliqueForming};

}  // namespace

TEST_CASE("kind names and tags") {
  CHECK(is_misere(GameKind::GpAvoidance));
  CHECK(is_misere(GameKind::MisereNodeKayles));
  CHECK(is_misere(GameKind::MisereCliqueForming));
  CHECK_FALSE(is_misere(GameKind::GpAchievement));
  CHECK_FALSE(is_misere(GameKind::NodeKayles));
  CHECK_FALSE(is_misere(GameKind::CliqueForming));

  CHECK(is_gp_kind(GameKind::GpAvoidance));
  CHECK_FALSE(is_gp_kind(GameKind::NodeKayles));

  for (GameKind kind : kAllKinds)
    CHECK(game_kind_from_name(game_kind_name(kind)) == kind);
  CHECK_FALSE(game_kind_from_name("chess").has_value());

  CHECK(player_name(Player::First) == "A");
  CHECK(player_name(Player::Second) == "B");
  CHECK(Position{}.to_move() == Player::First);
  CHECK(Position{VertexSet::singleton(2)}.to_move() == Player::Second);
}

TEST_CASE("legal moves per kind") {
  Graph p5 = make_path(5);
  DistanceMatrix dm = all_pairs_distances(p5);

  for (GameKind kind : kAllKinds)
    CHECK(legal_moves(p5, dm, {}, kind) == VertexSet::full(5));

  VertexSet two;
  two.insert(0);
  two.insert(3);
  CHECK(legal_moves(p5, dm, {two}, GameKind::GpAvoidance) == VertexSet{});

  // selecting the isolated vertex of the 3-vertex reduction input kills
  // the clique game immediately
  Graph h = small_h_graph();
  DistanceMatrix dh = all_pairs_distances(h);
  CHECK(legal_moves(h, dh, {VertexSet::singleton(0)},
                    GameKind::CliqueForming) == VertexSet{});

  VertexSet kayles_pos = VertexSet::singleton(1);
  VertexSet expected = VertexSet::full(5);
  expected.erase(0);
  expected.erase(1);
  expected.erase(2);
  CHECK(legal_moves(p5, dm, {kayles_pos}, GameKind::NodeKayles) == expected);

  VertexSet bad;
  bad.insert(0);
  bad.insert(1);
  bad.insert(2);
  CHECK_THROWS_AS(legal_moves(p5, dm, {bad}, GameKind::GpAchievement),
                  std::invalid_argument);
  CHECK_THROWS_AS(legal_moves(p5, dm, {bad}, GameKind::NodeKayles),
                  std::invalid_argument);
}

TEST_CASE("parity shortcut on the petersen graph after adjacent openings") {
  Graph pet = make_petersen();
  DistanceMatrix dm = all_pairs_distances(pet);

  // vertices 0 = {0,1} and 7 = {2,3} are adjacent in the Kneser labeling
  REQUIRE(pet.adjacent(0, 7));
  VertexSet opening;
  opening.insert(0);
  opening.insert(7);

  VertexSet playable = playable_set(pet, dm, opening);
  CHECK(playable.count() == 4);
  CHECK(is_general_position(pet, dm, opening | playable));
  CHECK(parity_shortcut(pet, dm, {opening}, GameKind::GpAvoidance) ==
        Player::First);
}

TEST_CASE("parity shortcut terminal and guard cases") {
  Graph p3 = make_path(3);
  DistanceMatrix dm = all_pairs_distances(p3);
  VertexSet ends;
  ends.insert(0);
  ends.insert(2);
  // no playable vertex left: the mover wins the misere game, loses the
  // normal one
  CHECK(parity_shortcut(p3, dm, {ends}, GameKind::GpAvoidance) ==
        Player::First);
  CHECK(parity_shortcut(p3, dm, {ends}, GameKind::GpAchievement) ==
        Player::Second);

  // guard fails at the empty position of a path with >= 3 vertices
  CHECK_FALSE(parity_shortcut(p3, dm, {}, GameKind::GpAvoidance).has_value());

  CHECK_THROWS_AS(parity_shortcut(p3, dm, {}, GameKind::NodeKayles),
                  std::invalid_argument);
}

TEST_CASE("parity shortcut agrees with full search whenever it fires") {
  std::mt19937_64 rng(79);
  int fired = 0;
  for (int rep = 0; rep < 120; ++rep) {
    const int n = 2 + int(rng() % 8);
    Graph g = random_graph(rng, n, 0.4);
    DistanceMatrix dm = all_pairs_distances(g);

    VertexSet s;
    for (int step = int(rng() % 3); step > 0; --step) {
      VertexSet playable = playable_set(g, dm, s);
      if (playable.empty()) break;
      std::vector<int> opts(playable.begin(), playable.end());
      s.insert(opts[rng() % opts.size()]);
    }
    for (GameKind kind : {GameKind::GpAvoidance, GameKind::GpAchievement}) {
      auto hint = parity_shortcut(g, dm, {s}, kind);
      if (!hint) continue;
      ++fired;
      SolveOptions unpruned;
      unpruned.use_parity_shortcut = false;
      CHECK(*hint == solve(g, kind, {s}, unpruned).winner);
    }
  }
  CHECK(fired > 0);
}

TEST_CASE("solver matches the reference solver on every kind") {
  std::mt19937_64 rng(83);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + int(rng() % 7);
    Graph g = random_graph(rng, n, 0.5);
    for (GameKind kind : kAllKinds) {
      CAPTURE(rep);
      CHECK(solve(g, kind).winner == naive_winner(g, kind));
    }
  }
}

TEST_CASE("solver matches the reference solver from arbitrary legal starts") {
  std::mt19937_64 rng(151);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 2 + int(rng() % 5);
    Graph g = random_graph(rng, n, 0.5);
    DistanceMatrix dm = all_pairs_distances(g);
    for (GameKind kind : kAllKinds) {
      Position pos;
      for (int steps = int(rng() % 3); steps > 0; --steps) {
        VertexSet legal = legal_moves(g, dm, pos, kind);
        if (legal.empty()) break;
        std::vector<int> opts(legal.begin(), legal.end());
        pos.selected.insert(opts[rng() % opts.size()]);
      }
      const bool mover = naive_mover_wins(g, pos.selected, kind);
      const Player expected = mover ? pos.to_move() : opponent(pos.to_move());
      CHECK(solve(g, kind, pos).winner == expected);
    }
  }
}

TEST_CASE("known winners") {
  CHECK(solve(make_cycle(4), GameKind::GpAvoidance).winner == Player::First);
  CHECK(solve(make_cycle(5), GameKind::GpAvoidance).winner == Player::Second);
  CHECK(solve(make_cycle(6), GameKind::GpAchievement).winner ==
        Player::Second);
  CHECK(solve(make_petersen(), GameKind::GpAchievement).winner ==
        Player::Second);
  CHECK(solve(make_petersen(), GameKind::GpAvoidance).winner == Player::First);

  Graph k2k3 = cartesian_product(make_complete(2), make_complete(3)).first;
  CHECK(solve(k2k3, GameKind::GpAvoidance).winner == Player::Second);

  Graph k1(1);
  CHECK(solve(k1, GameKind::GpAchievement).winner == Player::First);
  CHECK(solve(k1, GameKind::GpAvoidance).winner == Player::Second);

  // the hub-plus-prism graph is a first-player win in both gp games
  Graph hub = prism_hub_graph();
  CHECK(solve(hub, GameKind::GpAchievement).winner == Player::First);
  CHECK(solve(hub, GameKind::GpAvoidance).winner == Player::First);
}

TEST_CASE("solving from a non-empty start respects absolute player names") {
  Graph c4 = make_cycle(4);
  // after any first move the avoidance game still ends on B's reply
  SolveResult from_mid = solve(c4, GameKind::GpAvoidance,
                               {VertexSet::singleton(1)});
  CHECK(from_mid.winner == Player::First);
  CHECK(from_mid.game_length_bound == 1);
}

TEST_CASE("solve validates inputs") {
  Graph p5 = make_path(5);
  VertexSet bad;
  bad.insert(0);
  bad.insert(1);
  bad.insert(2);
  CHECK_THROWS_AS(solve(p5, GameKind::GpAchievement, {bad}),
                  std::invalid_argument);

  Graph p27 = make_path(27);
  CHECK_THROWS_AS(solve(p27, GameKind::GpAvoidance), SizeLimitError);
  CHECK_NOTHROW(solve(p27, GameKind::NodeKayles));  // kayles default is 32
  SolveOptions raised;
  raised.max_vertices = 40;
  CHECK_NOTHROW(solve(p27, GameKind::GpAvoidance, {}, raised));
  CHECK_THROWS_AS(solve(make_path(33), GameKind::NodeKayles), SizeLimitError);
}

TEST_CASE("principal variation replays to the reported winner") {
  std::mt19937_64 rng(89);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 1 + int(rng() % 8);
    Graph g = random_graph(rng, n, 0.5);
    DistanceMatrix dm = all_pairs_distances(g);
    for (GameKind kind : kAllKinds) {
      SolveResult result = solve(g, kind);
      CHECK(result.game_length_bound == int(result.principal_variation.size()));

      Position pos;
      for (int mv : result.principal_variation) {
        CHECK(legal_moves(g, dm, pos, kind).contains(mv));
        pos.selected.insert(mv);
      }
      CHECK(legal_moves(g, dm, pos, kind).empty());

      // mover at the terminal position loses normal play, wins misere
      const Player terminal_mover = pos.to_move();
      const Player winner =
          is_misere(kind) ? terminal_mover : opponent(terminal_mover);
      CHECK(winner == result.winner);
    }
  }
}

TEST_CASE("memoization and pruning do not change winners") {
  std::mt19937_64 rng(97);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 1 + int(rng() % 8);
    Graph g = random_graph(rng, n, 0.5);
    for (GameKind kind : kAllKinds) {
      SolveOptions plain;
      SolveOptions no_memo;
      no_memo.use_memo = false;
      SolveOptions no_shortcut;
      no_shortcut.use_parity_shortcut = false;
      const Player reference = solve(g, kind, {}, plain).winner;
      CHECK(reference == solve(g, kind, {}, no_memo).winner);
      CHECK(reference == solve(g, kind, {}, no_shortcut).winner);
    }
  }
}

TEST_CASE("memoized verdicts survive fresh recomputation from subpositions") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 3 + int(rng() % 6);
    Graph g = random_graph(rng, n, 0.5);
    DistanceMatrix dm = all_pairs_distances(g);
    for (GameKind kind : {GameKind::GpAvoidance, GameKind::MisereNodeKayles}) {
      // random playout; every visited position must give the same verdict
      // when solved fresh and when reached inside the parent's solve
      Position pos;
      for (;;) {
        SolveResult fresh = solve(g, kind, pos);
        SolveOptions cold;
        cold.use_memo = false;
        CHECK(fresh.winner == solve(g, kind, pos, cold).winner);
        VertexSet legal = legal_moves(g, dm, pos, kind);
        if (legal.empty()) break;
        std::vector<int> opts(legal.begin(), legal.end());
        pos.selected.insert(opts[rng() % opts.size()]);
      }
    }
  }
}

TEST_CASE("duality carries winners across the complement") {
  std::mt19937_64 rng(103);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + int(rng() % 8);
    Graph g = random_graph(rng, n, 0.5);
    CHECK(solve(g, GameKind::NodeKayles).winner ==
          solve(complement(g), GameKind::CliqueForming).winner);
    CHECK(solve(g, GameKind::MisereNodeKayles).winner ==
          solve(complement(g), GameKind::MisereCliqueForming).winner);
  }
}

TEST_CASE("best move is deterministic and verdict-preserving") {
  // any opening works on K2; the engine must pick the lowest index
  CHECK(best_move(make_complete(2), GameKind::GpAvoidance, {}) == 0);

  // B holds the avoidance win on C5 and the reply must keep it
  Graph c5 = make_cycle(5);
  REQUIRE(solve(c5, GameKind::GpAvoidance).winner == Player::Second);
  for (int a1 = 0; a1 < 5; ++a1) {
    Position pos{VertexSet::singleton(a1)};
    std::optional<int> reply = best_move(c5, GameKind::GpAvoidance, pos);
    REQUIRE(reply.has_value());
    pos.selected.insert(*reply);
    CHECK(solve(c5, GameKind::GpAvoidance, pos).winner == Player::Second);
  }

  // the hub is the winning opening on the hub-plus-prism graph
  Graph hub = prism_hub_graph();
  CHECK(best_move(hub, GameKind::GpAchievement, {}) == 0);

  // terminal position yields no move
  Graph p3 = make_path(3);
  VertexSet ends;
  ends.insert(0);
  ends.insert(2);
  CHECK_FALSE(best_move(p3, GameKind::GpAvoidance, {ends}).has_value());
}

TEST_CASE("best move always preserves the solve verdict") {
  std::mt19937_64 rng(107);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + int(rng() % 7);
    Graph g = random_graph(rng, n, 0.5);
    DistanceMatrix dm = all_pairs_distances(g);
    for (GameKind kind : kAllKinds) {
      Position pos;
      while (!legal_moves(g, dm, pos, kind).empty()) {
        const Player before = solve(g, kind, pos).winner;
        std::optional<int> mv = best_move(g, kind, pos);
        REQUIRE(mv.has_value());
        Position next{pos.selected};
        next.selected.insert(*mv);
        const Player after = solve(g, kind, next).winner;
        // a winning mover must stay winning; a losing mover cannot improve
        if (before == pos.to_move()) CHECK(after == before);
        pos = next;
      }
    }
  }
}
