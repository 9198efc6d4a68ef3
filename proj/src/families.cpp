#include "gpg/families.hpp"

#include <sstream>
#include <stdexcept>

#include "gpg/errors.hpp"
#include "gpg/graph_io.hpp"

namespace gpg {

VertexSet project(const ProductVertexMap& map, const VertexSet& s,
                  Factor factor) {
  VertexSet out;
  for (int idx : s) {
    auto [gv, hv] = map.coords(idx);
    out.insert(factor == Factor::First ? gv : hv);
  }
  return out;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty())
    throw std::invalid_argument("multipartite needs at least one part");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("multipartite parts must be >= 1");
    n += p;
  }
  Graph g(n);
  // block boundaries in input order
  std::vector<int> start;
  int acc = 0;
  for (int p : parts) {
    start.push_back(acc);
    acc += p;
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (int u = start[i]; u < start[i] + parts[i]; ++u)
        for (int v = start[j]; v < start[j] + parts[j]; ++v) g.add_edge(u, v);
  return g;
}

Graph make_generalized_wheel(int n, int m) {
  if (n < 1 || m < 3)
    throw std::invalid_argument("generalized wheel needs n >= 1, m >= 3");
  Graph g(n + m);
  for (int r = 0; r < m; ++r) g.add_edge(n + r, n + (r + 1) % m);
  for (int hub = 0; hub < n; ++hub)
    for (int r = 0; r < m; ++r) g.add_edge(hub, n + r);
  return g;
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

namespace {

ProductVertexMap checked_map(const Graph& g, const Graph& h) {
  const int total = g.vertex_count() * h.vertex_count();
  if (total > VertexSet::kCapacity)
    throw SizeLimitError("product has " + std::to_string(total) +
                         " vertices, capacity is " +
                         std::to_string(VertexSet::kCapacity));
  return {g.vertex_count(), h.vertex_count()};
}

}  // namespace

std::pair<Graph, ProductVertexMap> cartesian_product(const Graph& g,
                                                     const Graph& h) {
  ProductVertexMap map = checked_map(g, h);
  Graph out(map.size());
  for (int g1 = 0; g1 < map.g_size; ++g1)
    for (int h1 = 0; h1 < map.h_size; ++h1) {
      for (int h2 : h.neighbors(h1))
        if (h1 < h2) out.add_edge(map.index(g1, h1), map.index(g1, h2));
      for (int g2 : g.neighbors(g1))
        if (g1 < g2) out.add_edge(map.index(g1, h1), map.index(g2, h1));
    }
  return {out, map};
}

std::pair<Graph, ProductVertexMap> lexicographic_product(const Graph& g,
                                                         const Graph& h) {
  ProductVertexMap map = checked_map(g, h);
  Graph out(map.size());
  for (int g1 = 0; g1 < map.g_size; ++g1) {
    for (int h1 = 0; h1 < map.h_size; ++h1) {
      for (int h2 : h.neighbors(h1))
        if (h1 < h2) out.add_edge(map.index(g1, h1), map.index(g1, h2));
      for (int g2 : g.neighbors(g1))
        if (g1 < g2)
          for (int h2 = 0; h2 < map.h_size; ++h2)
            out.add_edge(map.index(g1, h1), map.index(g2, h2));
    }
  }
  return {out, map};
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int value = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("bad integer");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty parameter list");
  return out;
}

ParseError bad_spec(const std::string& text, const std::string& why) {
  return ParseError("bad family spec '" + text + "': " + why);
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  FamilySpec spec;
  const std::size_t colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : text.substr(colon + 1);

  auto ints = [&](std::size_t want) {
    std::vector<int> v;
    try {
      v = parse_int_list(args);
    } catch (const std::exception& e) {
      throw bad_spec(text, e.what());
    }
    if (want != 0 && v.size() != want)
      throw bad_spec(text, "expected " + std::to_string(want) +
                               " parameter(s), got " +
                               std::to_string(v.size()));
    return v;
  };

  if (head == "path") {
    spec.kind = Kind::Path;
    spec.a = ints(1)[0];
  } else if (head == "cycle") {
    spec.kind = Kind::Cycle;
    spec.a = ints(1)[0];
  } else if (head == "complete") {
    spec.kind = Kind::Complete;
    spec.a = ints(1)[0];
  } else if (head == "multi") {
    spec.kind = Kind::CompleteMultipartite;
    spec.parts = ints(0);
  } else if (head == "wheel") {
    spec.kind = Kind::GeneralizedWheel;
    auto v = ints(2);
    spec.a = v[0];
    spec.b = v[1];
  } else if (head == "petersen") {
    spec.kind = Kind::Petersen;
    if (!args.empty()) throw bad_spec(text, "petersen takes no parameters");
  } else if (head == "rook" || head == "grid" || head == "cylinder") {
    spec.kind = head == "rook" ? Kind::Rook
                               : (head == "grid" ? Kind::Grid : Kind::Cylinder);
    auto v = ints(2);
    spec.a = v[0];
    spec.b = v[1];
  } else if (head == "lexk") {
    spec.kind = Kind::LexWithComplete;
    const std::size_t comma = args.rfind(',');
    if (comma == std::string::npos)
      throw bad_spec(text, "expected lexk:FILE,n");
    const std::string file = args.substr(0, comma);
    try {
      spec.b = std::stoi(args.substr(comma + 1));
    } catch (const std::exception&) {
      throw bad_spec(text, "bad complete-factor order");
    }
    spec.base = load_graph(file);
    spec.base_name = file;
  } else {
    throw bad_spec(text, "unknown family");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case Kind::Path:
      return "path:" + std::to_string(a);
    case Kind::Cycle:
      return "cycle:" + std::to_string(a);
    case Kind::Complete:
      return "complete:" + std::to_string(a);
    case Kind::CompleteMultipartite: {
      std::string out = "multi:";
      for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? "," : "") + std::to_string(parts[i]);
      return out;
    }
    case Kind::GeneralizedWheel:
      return "wheel:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Petersen:
      return "petersen";
    case Kind::Rook:
      return "rook:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Grid:
      return "grid:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Cylinder:
      return "cylinder:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::LexWithComplete:
      return "lexk:" + (base_name.empty() ? "<graph>" : base_name) + "," +
             std::to_string(b);
  }
  return "?";
}

BuiltFamily make_named(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::Path:
      return {make_path(spec.a), std::nullopt};
    case Kind::Cycle:
      return {make_cycle(spec.a), std::nullopt};
    case Kind::Complete:
      return {make_complete(spec.a), std::nullopt};
    case Kind::CompleteMultipartite:
      return {make_complete_multipartite(spec.parts), std::nullopt};
    case Kind::GeneralizedWheel:
      return {make_generalized_wheel(spec.a, spec.b), std::nullopt};
    case Kind::Petersen:
      return {make_petersen(), std::nullopt};
    case Kind::Rook: {
      auto [g, map] = cartesian_product(make_complete(spec.a),
                                        make_complete(spec.b));
      return {g, map};
    }
    case Kind::Grid: {
      auto [g, map] = cartesian_product(make_path(spec.a), make_path(spec.b));
      return {g, map};
    }
    case Kind::Cylinder: {
      auto [g, map] = cartesian_product(make_cycle(spec.a), make_path(spec.b));
      return {g, map};
    }
    case Kind::LexWithComplete: {
      if (!spec.base)
        throw std::invalid_argument("lexk spec is missing its base graph");
      auto [g, map] =
          lexicographic_product(*spec.base, make_complete(spec.b));
      return {g, map};
    }
  }
  throw std::invalid_argument("unknown family kind");
}

}  // namespace gpg
