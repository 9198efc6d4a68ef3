#include <doctest.h>

#include <random>
#include <string>

#include "gpg/errors.hpp"
#include "gpg/graph_io.hpp"
#include "gpg/game.hpp"
#include "gpg/report.hpp"
#include "test_helpers.hpp"

using namespace gpg;
using namespace testutil;

TEST_CASE("graph text parsing") {
  Graph g = parse_graph(
      "c a triangle with a tail\n"
      "p gp 4\n"
      "e 0 1\n"
      "e 1 2\n"
      "e 2 0\n"
      "e 2 3\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(2, 3));

  // duplicates and reversed edges collapse
  Graph dup = parse_graph("p gp 3\ne 0 1\ne 1 0\ne 0 1\n");
  CHECK(dup.edge_count() == 1);

  // blank lines are fine
  CHECK_NOTHROW(parse_graph("p gp 2\n\ne 0 1\n\n"));
}

TEST_CASE("graph text errors carry line numbers") {
  auto message_of = [](const std::string& text) {
    try {
      parse_graph(text);
      return std::string("no error");
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("p gp 3\ne 0 1\ne 2 2\n").find("line 3") !=
        std::string::npos);
  CHECK(message_of("p gp 3\ne 0 1\ne 2 2\n").find("self-loop") !=
        std::string::npos);
  CHECK(message_of("p gp 2\ne 0 2\n").find("out of range") !=
        std::string::npos);
  CHECK(message_of("e 0 1\n").find("header") != std::string::npos);
  CHECK(message_of("p gp 2\np gp 2\n").find("duplicate") != std::string::npos);
  CHECK(message_of("p gp 2\nq 0 1\n").find("unknown") != std::string::npos);
  CHECK(message_of("").find("header") != std::string::npos);
  CHECK(message_of("p gp 0\n").find("vertex count") != std::string::npos);
  CHECK(message_of("p gp 129\n").find("vertex count") != std::string::npos);
}

TEST_CASE("graph serialization round-trips bit-exactly") {
  std::mt19937_64 rng(139);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 1 + int(rng() % 16);
    Graph g = random_graph(rng, n, 0.4);
    const std::string text = format_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(format_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("reports round-trip through json") {
  Report r;
  r.instance = "rook:3,4";
  r.game = "gp-avoid";
  r.winner = "B";
  r.nodes = 12345;
  r.elapsed_ms = 17;
  r.pv = {0, 5, 2};
  r.theorem_tag = "rook avoidance: n=2 with odd m, or n=3 with even m";
  r.agreement = true;
  CHECK(Report::from_json(r.to_json()) == r);

  Report bare;
  bare.instance = "petersen";
  bare.game = "gp-achieve";
  bare.winner = "B";
  CHECK_FALSE(bare.to_json().contains("theorem_tag"));
  CHECK_FALSE(bare.to_json().contains("agreement"));
  CHECK(Report::from_json(bare.to_json()) == bare);

  // winner strings are the fixed player names
  CHECK(player_name(Player::First) == "A");
  CHECK(player_name(Player::Second) == "B");
}
