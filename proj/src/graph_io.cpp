#include "gpg/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "gpg/errors.hpp"

namespace gpg {

Graph parse_graph(std::istream& in) {
  std::optional<Graph> g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (g) throw ParseError(lineno, "duplicate header");
      std::string kind;
      int n;
      if (!(ls >> kind >> n) || kind != "gp")
        throw ParseError(lineno, "expected header 'p gp <n>'");
      if (n < 1 || n > VertexSet::kCapacity)
        throw ParseError(lineno, "vertex count " + std::to_string(n) +
                                     " outside 1.." +
                                     std::to_string(VertexSet::kCapacity));
      g.emplace(n);
      continue;
    }
    if (tag == "e") {
      if (!g) throw ParseError(lineno, "edge before 'p gp <n>' header");
      int u, v;
      if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
      if (u < 0 || v < 0 || u >= g->vertex_count() || v >= g->vertex_count())
        throw ParseError(lineno, "edge endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop rejected");
      g->add_edge(u, v);
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + tag + "'");
  }
  if (!g) throw ParseError("missing 'p gp <n>' header");
  return *g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p gp " << g.vertex_count() << "\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << "e " << u << " " << v << "\n";
  return out.str();
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write graph file: " + path);
  out << format_graph(g);
}

}  // namespace gpg
