#include "gpg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gpg/errors.hpp"

namespace gpg {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > VertexSet::kCapacity)
    throw SizeLimitError("graph must have between 1 and " +
                         std::to_string(VertexSet::kCapacity) +
                         " vertices, got " + std::to_string(n));
  adj_.resize(n);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].count();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("edge endpoint out of range: " +
                            std::to_string(u) + " " + std::to_string(v));
  if (u == v)
    throw std::invalid_argument("self-loop rejected at vertex " +
                                std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dm(n, DistanceMatrix::kUnreachable);
  std::vector<int> queue(n);
  for (int src = 0; src < n; ++src) {
    int head = 0, tail = 0;
    queue[tail++] = src;
    dm.set(src, src, 0);
    while (head < tail) {
      int u = queue[head++];
      int du = dm.at(src, u);
      for (int w : g.neighbors(u)) {
        if (!dm.reachable(src, w)) {
          dm.set(src, w, du + 1);
          queue[tail++] = w;
        }
      }
    }
  }
  return dm;
}

VertexSet interval(const Graph& g, const DistanceMatrix& dm, int u, int v) {
  const int n = g.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::out_of_range("interval endpoint out of range");
  VertexSet out;
  out.insert(u);
  out.insert(v);
  if (u == v || !dm.reachable(u, v)) return out;
  const int duv = dm.at(u, v);
  for (int x = 0; x < n; ++x) {
    if (dm.reachable(u, x) && dm.reachable(x, v) &&
        dm.at(u, x) + dm.at(x, v) == duv)
      out.insert(x);
  }
  return out;
}

VertexSet interval_closure(const Graph& g, const DistanceMatrix& dm,
                           const VertexSet& s) {
  VertexSet out;
  for (int u : s)
    for (int v = u; v != -1; v = s.next_after(v)) out |= interval(g, dm, u, v);
  return out;
}

bool is_general_position(const Graph& g, const DistanceMatrix& dm,
                         const VertexSet& s) {
  for (int u : s) {
    for (int v = s.next_after(u); v != -1; v = s.next_after(v)) {
      VertexSet inner = interval(g, dm, u, v) & s;
      inner.erase(u);
      inner.erase(v);
      if (!inner.empty()) return false;
    }
  }
  return true;
}

namespace {

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> comps;
  VertexSet todo = s;
  while (!todo.empty()) {
    VertexSet comp;
    VertexSet frontier = VertexSet::singleton(todo.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v) & s;
      frontier = next - comp;
    }
    comps.push_back(comp);
    todo -= comp;
  }
  return comps;
}

}  // namespace

bool is_gp_by_characterization(const Graph& g, const DistanceMatrix& dm,
                               const VertexSet& s) {
  if (!basic_properties(g).connected)
    throw std::invalid_argument(
        "characterization requires a connected graph");

  std::vector<VertexSet> comps = induced_components(g, s);

  for (const VertexSet& c : comps)
    for (int v : c) {
      VertexSet rest = c;
      rest.erase(v);
      if (!rest.is_subset_of(g.neighbors(v))) return false;  // not a clique
    }

  // distance-constant: one value per component pair
  const int p = int(comps.size());
  std::vector<int> paird(std::size_t(p) * p, 0);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      int d = -2;
      for (int u : comps[i])
        for (int v : comps[j]) {
          if (d == -2)
            d = dm.at(u, v);
          else if (dm.at(u, v) != d)
            return false;
        }
      paird[std::size_t(i) * p + j] = paird[std::size_t(j) * p + i] = d;
    }
  }

  // in-transitive: no class metrically between two others
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) {
        if (i == j || j == k || i == k) continue;
        if (paird[std::size_t(i) * p + k] ==
            paird[std::size_t(i) * p + j] + paird[std::size_t(j) * p + k])
          return false;
      }
  return true;
}

VertexSet playable_set(const Graph& g, const DistanceMatrix& dm,
                       const VertexSet& s) {
  if (!is_general_position(g, dm, s))
    throw std::invalid_argument(
        "playable_set requires a general position set, got " + s.to_string());
  const int n = g.vertex_count();

  // (i) x avoids every interval spanned by a pair of s
  VertexSet blocked;
  for (int u : s)
    for (int v = s.next_after(u); v != -1; v = s.next_after(v))
      blocked |= interval(g, dm, u, v);

  VertexSet out;
  for (int x = 0; x < n; ++x) {
    if (s.contains(x) || blocked.contains(x)) continue;
    // (ii) I[x,u] meets s exactly in {u}
    bool ok = true;
    for (int u : s) {
      if ((interval(g, dm, x, u) & s) != VertexSet::singleton(u)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

VertexSet playable_set_by_definition(const Graph& g, const DistanceMatrix& dm,
                                     const VertexSet& s) {
  if (!is_general_position(g, dm, s))
    throw std::invalid_argument(
        "playable_set requires a general position set, got " + s.to_string());
  VertexSet out;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (s.contains(x)) continue;
    VertexSet t = s;
    t.insert(x);
    if (is_general_position(g, dm, t)) out.insert(x);
  }
  return out;
}

IntervalTable::IntervalTable(const Graph& g, const DistanceMatrix& dm)
    : n_(g.vertex_count()), iv_(std::size_t(n_) * n_) {
  for (int u = 0; u < n_; ++u)
    for (int v = u; v < n_; ++v) {
      VertexSet iv = interval(g, dm, u, v);
      iv_[std::size_t(u) * n_ + v] = iv;
      iv_[std::size_t(v) * n_ + u] = iv;
    }
}

bool IntervalTable::gp(const VertexSet& s) const {
  for (int u : s)
    for (int v = s.next_after(u); v != -1; v = s.next_after(v)) {
      VertexSet inner = at(u, v) & s;
      inner.erase(u);
      inner.erase(v);
      if (!inner.empty()) return false;
    }
  return true;
}

bool IntervalTable::pair_compatible(const VertexSet& s, int x, int y) const {
  if (at(x, y).intersects(s)) return false;
  for (int u : s) {
    if (at(x, u).contains(y)) return false;
    if (at(y, u).contains(x)) return false;
  }
  return true;
}

namespace {

struct GpSearch {
  const IntervalTable& table;
  int best = 0;

  // cand holds the vertices that individually extend chosen; all of them
  // are > the last branched vertex in the fixed ordering.
  void run(const VertexSet& chosen, const std::vector<int>& cand) {
    best = std::max(best, chosen.count());
    const int m = int(cand.size());
    for (int i = 0; i < m; ++i) {
      if (chosen.count() + (m - i) <= best) return;  // bound
      int x = cand[i];
      VertexSet next_chosen = chosen;
      next_chosen.insert(x);
      std::vector<int> next_cand;
      next_cand.reserve(m - i - 1);
      for (int k = i + 1; k < m; ++k)
        if (table.pair_compatible(chosen, x, cand[k]))
          next_cand.push_back(cand[k]);
      run(next_chosen, next_cand);
    }
  }
};

}  // namespace

int gp_number(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw SizeLimitError("gp_number limited to " +
                         std::to_string(max_vertices) + " vertices, got " +
                         std::to_string(n));
  DistanceMatrix dm = all_pairs_distances(g);
  IntervalTable table(g, dm);

  // high-degree vertices first
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  GpSearch search{table};

  // greedy lower bound
  VertexSet greedy;
  for (int v : order) {
    VertexSet t = greedy;
    t.insert(v);
    if (table.gp(t)) greedy = t;
  }
  search.best = greedy.count();

  search.run(VertexSet{}, order);
  return search.best;
}

GraphProperties basic_properties(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> queue(n);
  bool bipartite = true;
  int first_component = 0;
  for (int src = 0; src < n; ++src) {
    if (color[src] != -1) continue;
    int head = 0, tail = 0;
    queue[tail++] = src;
    color[src] = 0;
    while (head < tail) {
      int u = queue[head++];
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = color[u] ^ 1;
          queue[tail++] = w;
        } else if (color[w] == color[u]) {
          bipartite = false;
        }
      }
    }
    if (src == 0) first_component = tail;
  }
  const bool connected = (first_component == n);

  int diameter = DistanceMatrix::kUnreachable;
  if (connected) {
    DistanceMatrix dm = all_pairs_distances(g);
    diameter = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) diameter = std::max(diameter, dm.at(u, v));
  }
  return {connected, bipartite, diameter};
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

}  // namespace gpg
