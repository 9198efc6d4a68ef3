#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "gpg/errors.hpp"
#include "gpg/families.hpp"
#include "gpg/graph_io.hpp"
#include "test_helpers.hpp"

using namespace gpg;
using namespace testutil;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out.insert({u, v});
  return out;
}

}  // namespace

TEST_CASE("named family shapes") {
  CHECK(make_path(1).edge_count() == 0);
  CHECK(make_path(6).edge_count() == 5);
  CHECK(make_cycle(5).edge_count() == 5);
  CHECK(make_complete(6).edge_count() == 15);

  Graph k23 = make_complete_multipartite({2, 3});
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK_FALSE(k23.adjacent(0, 1));  // first block
  CHECK_FALSE(k23.adjacent(2, 3));  // second block
  CHECK(k23.adjacent(0, 2));

  Graph w15 = make_generalized_wheel(1, 5);
  CHECK(w15.vertex_count() == 6);
  CHECK(w15.edge_count() == 10);

  Graph w23 = make_generalized_wheel(2, 3);
  CHECK(w23.vertex_count() == 5);
  CHECK(w23.edge_count() == 9);
  CHECK_FALSE(w23.adjacent(0, 1));  // hubs are pairwise non-adjacent
  CHECK(w23.adjacent(0, 2));
  CHECK(w23.adjacent(2, 3));

  Graph pet = make_petersen();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  // triangle-free
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = b + 1; c < 10; ++c) {
        const bool triangle = pet.adjacent(a, b) && pet.adjacent(b, c) &&
                              pet.adjacent(a, c);
        CHECK_FALSE(triangle);
      }

  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(make_generalized_wheel(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_generalized_wheel(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_complete_multipartite({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_complete_multipartite({}), std::invalid_argument);
}

TEST_CASE("product vertex map is the row-major bijection") {
  ProductVertexMap map{4, 5};
  int expected = 0;
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 5; ++h) {
      CHECK(map.index(g, h) == expected);
      CHECK(map.coords(expected) == std::pair{g, h});
      ++expected;
    }
  CHECK(map.size() == 20);
}

TEST_CASE("cartesian product shapes") {
  auto [c4, map22] = cartesian_product(make_complete(2), make_complete(2));
  CHECK(edge_set(c4) ==
        std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

  // rook 2x2 is the 4-cycle
  BuiltFamily rook = make_named(FamilySpec::parse("rook:2,2"));
  CHECK(edge_set(rook.graph) == edge_set(c4));
  CHECK(rook.map.has_value());

  auto [p3p2, map32] = cartesian_product(make_path(3), make_path(2));
  DistanceMatrix dm = all_pairs_distances(p3p2);
  CHECK(dm.at(map32.index(0, 0), map32.index(2, 1)) == 3);

  Graph big = make_complete(12);
  CHECK_THROWS_AS(cartesian_product(big, big), SizeLimitError);
}

TEST_CASE("cartesian distances and intervals factor through the map") {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 25; ++rep) {
    const int a = 2 + int(rng() % 4);
    const int b = 2 + int(rng() % 3);
    Graph g = random_connected_graph(rng, a, 0.5);
    Graph h = random_connected_graph(rng, b, 0.5);
    auto [prod, map] = cartesian_product(g, h);
    DistanceMatrix dg = all_pairs_distances(g);
    DistanceMatrix dh = all_pairs_distances(h);
    DistanceMatrix dp = all_pairs_distances(prod);
    for (int g1 = 0; g1 < a; ++g1)
      for (int h1 = 0; h1 < b; ++h1)
        for (int g2 = 0; g2 < a; ++g2)
          for (int h2 = 0; h2 < b; ++h2) {
            const int p1 = map.index(g1, h1), p2 = map.index(g2, h2);
            CHECK(dp.at(p1, p2) == dg.at(g1, g2) + dh.at(h1, h2));
            VertexSet expected;
            for (int x : interval(g, dg, g1, g2))
              for (int y : interval(h, dh, h1, h2))
                expected.insert(map.index(x, y));
            CHECK(interval(prod, dp, p1, p2) == expected);
          }
  }
}

TEST_CASE("lexicographic product shapes") {
  // identity first factor
  std::mt19937_64 rng(47);
  for (int rep = 0; rep < 10; ++rep) {
    Graph h = random_graph(rng, 1 + int(rng() % 8), 0.5);
    auto [prod, map] = lexicographic_product(make_complete(1), h);
    CHECK(prod == h);
  }

  auto [k4, map] = lexicographic_product(make_path(2), make_complete(2));
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);

  // within a layer over a positive-degree base vertex, distances cap at 2
  auto [pp, map33] = lexicographic_product(make_path(3), make_path(3));
  DistanceMatrix dpp = all_pairs_distances(pp);
  CHECK(dpp.at(map33.index(1, 0), map33.index(1, 2)) == 2);

  // over an isolated base vertex the layer keeps the second factor's metric
  auto [ip, imap] = lexicographic_product(Graph(2), make_path(4));
  DistanceMatrix dip = all_pairs_distances(ip);
  CHECK(dip.at(imap.index(0, 0), imap.index(0, 3)) == 3);
  CHECK_FALSE(dip.reachable(imap.index(0, 0), imap.index(1, 0)));
}

TEST_CASE("lexicographic distances follow the three-case rule") {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 25; ++rep) {
    const int a = 1 + int(rng() % 4);
    const int b = 1 + int(rng() % 4);
    Graph g = random_graph(rng, a, 0.5);
    Graph h = random_graph(rng, b, 0.5);
    auto [prod, map] = lexicographic_product(g, h);
    DistanceMatrix dg = all_pairs_distances(g);
    DistanceMatrix dh = all_pairs_distances(h);
    DistanceMatrix dp = all_pairs_distances(prod);
    for (int g1 = 0; g1 < a; ++g1)
      for (int h1 = 0; h1 < b; ++h1)
        for (int g2 = 0; g2 < a; ++g2)
          for (int h2 = 0; h2 < b; ++h2) {
            const int d = dp.at(map.index(g1, h1), map.index(g2, h2));
            if (g1 != g2) {
              CHECK(d == dg.at(g1, g2));
            } else if (g.degree(g1) == 0) {
              CHECK(d == dh.at(h1, h2));
            } else {
              const int dh12 = dh.at(h1, h2);
              const int expected =
                  dh.reachable(h1, h2) ? std::min(dh12, 2) : 2;
              CHECK(d == expected);
            }
          }
  }
}

TEST_CASE("projections") {
  ProductVertexMap map{3, 4};
  VertexSet layer;  // the full layer over base vertex 1
  for (int h = 0; h < 4; ++h) layer.insert(map.index(1, h));
  CHECK(project(map, layer, Factor::First) == VertexSet::singleton(1));
  CHECK(project(map, layer, Factor::Second) == VertexSet::full(4));
  CHECK(project(map, {}, Factor::First) == VertexSet{});
}

TEST_CASE("gp sets of a lexicographic product project to gp sets") {
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 60; ++rep) {
    const int a = 2 + int(rng() % 3);
    const int b = 2 + int(rng() % 3);
    Graph g = random_connected_graph(rng, a, 0.5);
    Graph h = random_connected_graph(rng, b, 0.5);
    auto [prod, map] = lexicographic_product(g, h);
    DistanceMatrix dp = all_pairs_distances(prod);
    DistanceMatrix dg = all_pairs_distances(g);

    VertexSet s;
    for (int step = 0; step < 3; ++step) {
      VertexSet playable = playable_set(prod, dp, s);
      if (playable.empty()) break;
      std::vector<int> options(playable.begin(), playable.end());
      s.insert(options[rng() % options.size()]);
    }
    CHECK(is_general_position(g, dg, project(map, s, Factor::First)));
  }
}

TEST_CASE("combined layer conditions suffice for general position") {
  // pair a gp set of G with a gp set of H bijectively; both hypotheses of
  // the sufficiency rule hold, so the result must be in general position
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 60; ++rep) {
    const int a = 2 + int(rng() % 4);
    const int b = 2 + int(rng() % 3);
    Graph g = random_connected_graph(rng, a, 0.5);
    Graph h = random_connected_graph(rng, b, 0.5);
    auto [prod, map] = cartesian_product(g, h);
    DistanceMatrix dg = all_pairs_distances(g);
    DistanceMatrix dh = all_pairs_distances(h);
    DistanceMatrix dp = all_pairs_distances(prod);

    VertexSet sg, sh;
    for (int step = 0; step < 3; ++step) {
      VertexSet pg = playable_set(g, dg, sg);
      if (!pg.empty()) {
        std::vector<int> opts(pg.begin(), pg.end());
        sg.insert(opts[rng() % opts.size()]);
      }
      VertexSet ph = playable_set(h, dh, sh);
      if (!ph.empty()) {
        std::vector<int> opts(ph.begin(), ph.end());
        sh.insert(opts[rng() % opts.size()]);
      }
    }
    std::vector<int> gs(sg.begin(), sg.end());
    std::vector<int> hs(sh.begin(), sh.end());
    const std::size_t k = std::min(gs.size(), hs.size());
    std::shuffle(hs.begin(), hs.end(), rng);
    VertexSet r;
    for (std::size_t i = 0; i < k; ++i) r.insert(map.index(gs[i], hs[i]));
    CHECK(is_general_position(prod, dp, r));
  }
}

TEST_CASE("injective gp projection lifts to general position") {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 60; ++rep) {
    const int a = 2 + int(rng() % 4);
    const int b = 2 + int(rng() % 3);
    Graph g = random_connected_graph(rng, a, 0.5);
    Graph h = random_connected_graph(rng, b, 0.5);
    auto [prod, map] = cartesian_product(g, h);
    DistanceMatrix dg = all_pairs_distances(g);
    DistanceMatrix dp = all_pairs_distances(prod);

    VertexSet sg;
    for (int step = 0; step < 3; ++step) {
      VertexSet pg = playable_set(g, dg, sg);
      if (pg.empty()) break;
      std::vector<int> opts(pg.begin(), pg.end());
      sg.insert(opts[rng() % opts.size()]);
    }
    VertexSet r;  // any H-coordinate works as long as G-coords stay distinct
    for (int gv : sg)
      r.insert(map.index(gv, int(rng() % std::uint64_t(b))));
    CHECK(project(map, r, Factor::First) == sg);
    CHECK(int(sg.count()) == r.count());
    CHECK(is_general_position(prod, dp, r));
  }
}

TEST_CASE("maximal gp sets of base x complete are exactly lifted base sets") {
  std::mt19937_64 rng(71);
  std::vector<Graph> bases;
  bases.push_back(make_path(3));
  bases.push_back(make_cycle(5));
  bases.push_back(make_complete(4));
  bases.push_back(random_connected_graph(rng, 5, 0.5));
  bases.push_back(random_connected_graph(rng, 4, 0.4));

  for (const Graph& base : bases) {
    DistanceMatrix db = all_pairs_distances(base);
    const int bn = base.vertex_count();

    // all maximal gp sets of the base
    std::vector<VertexSet> base_maximal;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bn); ++mask) {
      VertexSet s = subset_from_mask(mask, bn);
      if (!is_general_position(base, db, s)) continue;
      if (playable_set(base, db, s).empty()) base_maximal.push_back(s);
    }

    for (int n = 1; n <= 3; ++n) {
      if (bn * n > 15) continue;
      auto [prod, map] = lexicographic_product(base, make_complete(n));
      DistanceMatrix dp = all_pairs_distances(prod);
      const int pn = prod.vertex_count();

      std::vector<VertexSet> prod_maximal;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pn); ++mask) {
        VertexSet s = subset_from_mask(mask, pn);
        if (!is_general_position(prod, dp, s)) continue;
        if (playable_set(prod, dp, s).empty()) prod_maximal.push_back(s);
      }

      std::vector<VertexSet> lifted;
      for (const VertexSet& s : base_maximal) {
        VertexSet l;
        for (int gv : s)
          for (int hv = 0; hv < n; ++hv) l.insert(map.index(gv, hv));
        lifted.push_back(l);
      }
      auto key = [](const VertexSet& s) {
        return std::pair{s.word(0), s.word(1)};
      };
      auto cmp = [&](const VertexSet& x, const VertexSet& y) {
        return key(x) < key(y);
      };
      std::sort(prod_maximal.begin(), prod_maximal.end(), cmp);
      std::sort(lifted.begin(), lifted.end(), cmp);
      CHECK(prod_maximal == lifted);
    }
  }
}

TEST_CASE("gp sets of path x cycle with a doubled cycle layer stay small") {
  std::mt19937_64 rng(73);
  for (auto [r, s] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4},
                      {4, 3}}) {
    auto [prod, map] = cartesian_product(make_path(r), make_cycle(s));
    DistanceMatrix dp = all_pairs_distances(prod);
    for (int rep = 0; rep < 80; ++rep) {
      VertexSet set;
      for (;;) {
        VertexSet playable = playable_set(prod, dp, set);
        if (playable.empty()) break;
        std::vector<int> opts(playable.begin(), playable.end());
        set.insert(opts[rng() % opts.size()]);
      }
      for (int path_v = 0; path_v < r; ++path_v) {
        int in_layer = 0;  // the cycle layer through path vertex path_v
        for (int idx : set)
          if (map.coords(idx).first == path_v) ++in_layer;
        if (in_layer == 2) CHECK(set.count() <= 4);
      }
    }
  }
}

TEST_CASE("family spec grammar") {
  for (const char* text :
       {"path:7", "cycle:5", "complete:4", "multi:2,2,3", "wheel:1,5",
        "petersen", "rook:3,4", "grid:3,4", "cylinder:5,2"}) {
    FamilySpec spec = FamilySpec::parse(text);
    CHECK(spec.to_string() == text);
    CHECK(make_named(spec).graph.vertex_count() >= 1);
  }
  CHECK(make_named(FamilySpec::parse("grid:3,4")).graph.vertex_count() == 12);
  CHECK(make_named(FamilySpec::parse("cylinder:5,2")).graph.vertex_count() ==
        10);

  CHECK_THROWS_AS(FamilySpec::parse("hypercube:3"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("path:x"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("rook:3"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("petersen:1"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("multi:"), ParseError);

  // lexk loads its base from a file
  const std::string path = "lexk_base_test.gp";
  {
    std::ofstream out(path);
    out << format_graph(make_cycle(5));
  }
  FamilySpec lex = FamilySpec::parse("lexk:" + path + ",3");
  BuiltFamily built = make_named(lex);
  CHECK(built.graph.vertex_count() == 15);
  CHECK(built.map.has_value());
  std::remove(path.c_str());
}
