#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpg/graph.hpp"

namespace gpg {

/// Row-major bijection between product vertex indices and coordinate
/// pairs: index = g * h_size + h.
struct ProductVertexMap {
  int g_size = 0;
  int h_size = 0;

  int size() const { return g_size * h_size; }
  int index(int gv, int hv) const { return gv * h_size + hv; }
  std::pair<int, int> coords(int idx) const {
    return {idx / h_size, idx % h_size};
  }
};

enum class Factor { First, Second };

/// Coordinates of s in the chosen factor.
VertexSet project(const ProductVertexMap& map, const VertexSet& s,
                  Factor factor);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
/// Blocks in input order; all edges run between distinct blocks.
Graph make_complete_multipartite(const std::vector<int>& parts);
/// Join of n pairwise non-adjacent hub vertices with the cycle C_m.
/// Hubs first (0..n-1), rim in cycle order after them.
Graph make_generalized_wheel(int n, int m);
/// Kneser graph K(5,2): the ten 2-subsets of {0..4} in lexicographic
/// order, adjacent when disjoint.
Graph make_petersen();

std::pair<Graph, ProductVertexMap> cartesian_product(const Graph& g,
                                                     const Graph& h);
std::pair<Graph, ProductVertexMap> lexicographic_product(const Graph& g,
                                                         const Graph& h);

/// A named family instance. String grammar (CLI):
///   path:7  cycle:5  complete:4  multi:2,2,3  wheel:1,5  petersen
///   rook:3,4  grid:3,4  cylinder:5,2  lexk:FILE,3
struct FamilySpec {
  enum class Kind {
    Path,
    Cycle,
    Complete,
    CompleteMultipartite,
    GeneralizedWheel,
    Petersen,
    Rook,
    Grid,
    Cylinder,
    LexWithComplete
  };

  Kind kind = Kind::Path;
  int a = 0;                  // first parameter
  int b = 0;                  // second parameter
  std::vector<int> parts;     // CompleteMultipartite
  std::optional<Graph> base;  // LexWithComplete
  std::string base_name;      // display name of the base graph

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

struct BuiltFamily {
  Graph graph;
  std::optional<ProductVertexMap> map;  // present for product kinds
};

BuiltFamily make_named(const FamilySpec& spec);

}  // namespace gpg
