#pragma once

#include <vector>

#include "gpg/vertex_set.hpp"

namespace gpg {

/// Undirected simple graph on vertices 0..n-1 with per-vertex neighborhood
/// bitmasks. Symmetric and loop-free by construction; capacity is
/// VertexSet::kCapacity vertices.
class Graph {
 public:
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;

  /// Adds an undirected edge. Duplicate insertions are harmless;
  /// self-loops and out-of-range endpoints throw.
  void add_edge(int u, int v);

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  /// Mask of all n vertices.
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<VertexSet> adj_;
};

/// Exact geodesic distances for all vertex pairs; kUnreachable marks pairs
/// in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix(int n, int fill) : n_(n), d_(std::size_t(n) * n, fill) {}

  int n() const { return n_; }
  int at(int u, int v) const { return d_[std::size_t(u) * n_ + v]; }
  void set(int u, int v, int d) { d_[std::size_t(u) * n_ + v] = d; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

 private:
  int n_;
  std::vector<int> d_;
};

struct GraphProperties {
  bool connected;
  bool bipartite;
  int diameter;  // DistanceMatrix::kUnreachable when disconnected
};

/// BFS from every source.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Vertices on some shortest u,v-path. interval(u,u) = {u}; an unreachable
/// pair has no internal vertices, so the result is exactly {u, v}.
VertexSet interval(const Graph& g, const DistanceMatrix& dm, int u, int v);

/// Union of interval(u, v) over all unordered pairs of s (including u = v,
/// so a singleton closes to itself).
VertexSet interval_closure(const Graph& g, const DistanceMatrix& dm,
                           const VertexSet& s);

/// True iff no three distinct members of s lie on a common shortest path.
bool is_general_position(const Graph& g, const DistanceMatrix& dm,
                         const VertexSet& s);

/// Structural test: the components of the subgraph induced by s are
/// cliques whose vertex classes form an in-transitive, distance-constant
/// partition. Agrees with is_general_position on connected graphs; throws
/// std::invalid_argument when g is disconnected.
bool is_gp_by_characterization(const Graph& g, const DistanceMatrix& dm,
                               const VertexSet& s);

/// Vertices x whose addition keeps s in general position, computed from
/// the two interval conditions: (i) x lies in no I[u,v] over pairs u,v of
/// s and (ii) I[x,u] meets s exactly in {u} for every u in s.
/// Throws std::invalid_argument when s itself is not in general position.
VertexSet playable_set(const Graph& g, const DistanceMatrix& dm,
                       const VertexSet& s);

/// Same set computed directly from the definition: {x : s + x is in
/// general position}. Independent route kept for cross-checking.
VertexSet playable_set_by_definition(const Graph& g, const DistanceMatrix& dm,
                                     const VertexSet& s);

/// Maximum cardinality of a general position set, by branch and bound
/// with a greedy initial bound. Throws SizeLimitError above max_vertices.
int gp_number(const Graph& g, int max_vertices = 24);

GraphProperties basic_properties(const Graph& g);

Graph complement(const Graph& g);

/// Interval masks for all vertex pairs, precomputed once. Used where the
/// same graph is queried many times (game search, gp_number).
class IntervalTable {
 public:
  IntervalTable(const Graph& g, const DistanceMatrix& dm);

  const VertexSet& at(int u, int v) const {
    return iv_[std::size_t(u) * n_ + v];
  }
  int n() const { return n_; }

  /// is_general_position via the table.
  bool gp(const VertexSet& s) const;

  /// With s in general position and x, y each individually playable on s,
  /// decides whether s + {x, y} stays in general position. Only triples
  /// containing both x and y can break, so this is O(|s|) lookups.
  bool pair_compatible(const VertexSet& s, int x, int y) const;

 private:
  int n_;
  std::vector<VertexSet> iv_;
};

}  // namespace gpg
