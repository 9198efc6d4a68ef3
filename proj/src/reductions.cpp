#include "gpg/reductions.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "gpg/errors.hpp"

namespace gpg {

void Qbf::validate() const {
  if (num_vars < 1) throw std::invalid_argument("formula needs >= 1 variable");
  if (clauses.empty()) throw std::invalid_argument("formula has no clauses");
  for (const auto& clause : clauses) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
    for (int lit : clause) {
      int var = std::abs(lit);
      if (lit == 0 || var > num_vars)
        throw std::invalid_argument("literal " + std::to_string(lit) +
                                    " out of range for " +
                                    std::to_string(num_vars) + " variables");
    }
  }
}

std::string VertexRole::to_string() const {
  switch (tag) {
    case Tag::Universal:
      return "universal";
    case Tag::Original:
      return "original:" + std::to_string(a);
    case Tag::Friend:
      return "friend:" + std::to_string(a);
    case Tag::GadgetC5:
      return "c5:" + std::to_string(a) + ":" + std::string(1, char('a' + b));
    case Tag::PosLiteral:
      return "pos:" + std::to_string(a);
    case Tag::NegLiteral:
      return "neg:" + std::to_string(a);
    case Tag::Clause:
      return "clause:" + std::to_string(a);
    case Tag::TwinY:
      return "twin:" + std::to_string(a) + ":" + std::to_string(b) + ":" +
             std::to_string(c);
  }
  return "?";
}

namespace {

using Tag = VertexRole::Tag;

void audit_roles(const ReducedGraph& rg,
                 const std::function<bool(const VertexRole&,
                                          const VertexRole&)>& rule) {
  const int n = rg.graph.vertex_count();
  if (int(rg.roles.size()) != n)
    throw std::logic_error("role count does not match vertex count");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rg.graph.adjacent(u, v) != rule(rg.roles[u], rg.roles[v]))
        throw std::logic_error("construction bug: adjacency of " +
                               rg.roles[u].to_string() + " and " +
                               rg.roles[v].to_string() +
                               " contradicts its role");
}

void check_diameter(const ReducedGraph& rg, int bound) {
  GraphProperties props = basic_properties(rg.graph);
  if (!props.connected || props.diameter > bound)
    throw std::logic_error("construction bug: diameter exceeds " +
                           std::to_string(bound));
}

void check_capacity(long long total) {
  if (total > VertexSet::kCapacity)
    throw SizeLimitError("reduction output needs " + std::to_string(total) +
                         " vertices, capacity is " +
                         std::to_string(VertexSet::kCapacity));
}

}  // namespace

ReducedGraph clique_to_gp_achievement(const Graph& h) {
  const int n = h.vertex_count();
  check_capacity(2LL * n + 1);

  Graph g(2 * n + 1);
  std::vector<VertexRole> roles(2 * n + 1);
  const int universal = n;
  auto friend_of = [&](int i) { return n + 1 + i; };

  for (int i = 0; i < n; ++i) {
    roles[i] = {Tag::Original, i};
    roles[friend_of(i)] = {Tag::Friend, i};
    g.add_edge(universal, i);
    g.add_edge(i, friend_of(i));
    for (int j : h.neighbors(i))
      if (i < j) g.add_edge(i, j);
  }
  roles[universal] = {Tag::Universal};

  ReducedGraph rg{std::move(g), std::move(roles)};
  audit_roles(rg, [&h](const VertexRole& x, const VertexRole& y) {
    auto ordered = [&](const VertexRole& p, const VertexRole& q) {
      if (p.tag == Tag::Universal) return q.tag == Tag::Original;
      if (p.tag == Tag::Original && q.tag == Tag::Original)
        return h.adjacent(p.a, q.a);
      if (p.tag == Tag::Original && q.tag == Tag::Friend) return p.a == q.a;
      return false;
    };
    return ordered(x, y) || ordered(y, x);
  });
  check_diameter(rg, 4);
  return rg;
}

ReducedGraph misere_clique_to_gp_avoidance(const Graph& h) {
  const int n = h.vertex_count();
  check_capacity(6LL * n + 1);

  Graph g(6 * n + 1);
  std::vector<VertexRole> roles(6 * n + 1);
  const int universal = n;
  auto gadget = [&](int i, int p) { return n + 1 + 5 * i + p; };

  for (int i = 0; i < n; ++i) {
    roles[i] = {Tag::Original, i};
    g.add_edge(universal, i);
    for (int j : h.neighbors(i))
      if (i < j) g.add_edge(i, j);
    for (int p = 0; p < 5; ++p) {
      roles[gadget(i, p)] = {Tag::GadgetC5, i, p};
      g.add_edge(gadget(i, p), gadget(i, (p + 1) % 5));
      g.add_edge(gadget(i, p), i);
    }
  }
  roles[universal] = {Tag::Universal};

  ReducedGraph rg{std::move(g), std::move(roles)};
  audit_roles(rg, [&h](const VertexRole& x, const VertexRole& y) {
    auto ordered = [&](const VertexRole& p, const VertexRole& q) {
      if (p.tag == Tag::Universal) return q.tag == Tag::Original;
      if (p.tag == Tag::Original && q.tag == Tag::Original)
        return h.adjacent(p.a, q.a);
      if (p.tag == Tag::Original && q.tag == Tag::GadgetC5) return p.a == q.a;
      if (p.tag == Tag::GadgetC5 && q.tag == Tag::GadgetC5)
        return p.a == q.a &&
               ((p.b + 1) % 5 == q.b || (q.b + 1) % 5 == p.b);
      return false;
    };
    return ordered(x, y) || ordered(y, x);
  });
  check_diameter(rg, 4);
  return rg;
}

namespace {

bool is_x1_tautology(const std::vector<int>& clause) {
  bool pos = false, neg = false;
  for (int lit : clause) {
    if (lit == 1)
      pos = true;
    else if (lit == -1)
      neg = true;
    else
      return false;
  }
  return pos && neg;
}

bool is_normalized(const Qbf& f) {
  return f.num_vars % 2 == 0 && !f.clauses.empty() &&
         is_x1_tautology(f.clauses.front());
}

}  // namespace

Qbf tqbf_normalize(const Qbf& f) {
  f.validate();
  Qbf out = f;
  if (out.num_vars % 2 == 1) {
    // fresh innermost variable: it takes index 1 and appears in no clause,
    // so every original variable keeps its mover and the value is unchanged
    out.num_vars += 1;
    for (auto& clause : out.clauses)
      for (int& lit : clause) lit += lit > 0 ? 1 : -1;
  }
  if (!is_x1_tautology(out.clauses.front()))
    out.clauses.insert(out.clauses.begin(), {1, -1});
  return out;
}

QbfWinner tqbf_evaluate(const Qbf& f) {
  f.validate();
  const int n = f.num_vars;
  std::vector<char> value(std::size_t(n) + 1, 0);

  auto satisfied = [&]() {
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        int var = std::abs(lit);
        if ((lit > 0) == bool(value[var])) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  };

  // variable i is assigned in move n-i+1; odd moves belong to Player 1,
  // who wins exactly when the formula ends up true
  std::function<bool(int)> wins_true = [&](int i) -> bool {
    if (i == 0) return satisfied();
    const bool existential = (n - i) % 2 == 0;
    for (char v : {char(0), char(1)}) {
      value[i] = v;
      const bool outcome = wins_true(i - 1);
      if (existential && outcome) return true;
      if (!existential && !outcome) return false;
    }
    return !existential;
  };

  return wins_true(n) ? QbfWinner::Player1 : QbfWinner::Player2;
}

ReducedGraph tqbf_to_misere_kayles(const Qbf& f) {
  f.validate();
  if (!is_normalized(f))
    throw std::invalid_argument(
        "formula must be normalized: even variable count and the clause "
        "(x1 or not-x1) first");

  const int n = f.num_vars;
  const int m = int(f.clauses.size());
  check_capacity(2LL * n + m + 1LL * n * (n + 1));

  auto pos_of = [&](int i) { return 2 * (i - 1); };        // i in 1..n
  auto neg_of = [&](int i) { return 2 * (i - 1) + 1; };
  auto clause_of = [&](int k) { return 2 * n + (k - 1); };  // k in 1..m
  const int twin_base = 2 * n + m;
  auto twin_of = [&](int i, int j, int which) {            // which in 1..2
    return twin_base + i * (i - 1) + 2 * j + (which - 1);
  };

  const int total = 2 * n + m + n * (n + 1);
  Graph g(total);
  std::vector<VertexRole> roles(total);

  for (int i = 1; i <= n; ++i) {
    roles[pos_of(i)] = {Tag::PosLiteral, i};
    roles[neg_of(i)] = {Tag::NegLiteral, i};
    for (int j = 0; j < i; ++j) {
      roles[twin_of(i, j, 1)] = {Tag::TwinY, i, j, 1};
      roles[twin_of(i, j, 2)] = {Tag::TwinY, i, j, 2};
    }
  }
  for (int k = 1; k <= m; ++k) roles[clause_of(k)] = {Tag::Clause, k};

  // X_0: the clause vertices form a clique
  for (int k = 1; k <= m; ++k)
    for (int l = k + 1; l <= m; ++l) g.add_edge(clause_of(k), clause_of(l));

  // X_i: literal pair plus level-i twins, a clique except inside twin pairs
  for (int i = 1; i <= n; ++i) {
    std::vector<int> level = {pos_of(i), neg_of(i)};
    for (int j = 0; j < i; ++j) {
      level.push_back(twin_of(i, j, 1));
      level.push_back(twin_of(i, j, 2));
    }
    for (std::size_t p = 0; p < level.size(); ++p)
      for (std::size_t q = p + 1; q < level.size(); ++q) {
        const VertexRole& rp = roles[level[p]];
        const VertexRole& rq = roles[level[q]];
        if (rp.tag == Tag::TwinY && rq.tag == Tag::TwinY && rp.b == rq.b)
          continue;  // false twins stay non-adjacent
        g.add_edge(level[p], level[q]);
      }
  }

  // literal membership edges
  for (int k = 1; k <= m; ++k)
    for (int lit : f.clauses[std::size_t(k) - 1]) {
      int i = std::abs(lit);
      g.add_edge(lit > 0 ? pos_of(i) : neg_of(i), clause_of(k));
    }

  // each twin of y_{i,j} attaches to all of X_0..X_{i-1} except X_j
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < i; ++j)
      for (int which = 1; which <= 2; ++which) {
        const int y = twin_of(i, j, which);
        if (j != 0)
          for (int k = 1; k <= m; ++k) g.add_edge(y, clause_of(k));
        for (int level = 1; level < i; ++level) {
          if (level == j) continue;
          g.add_edge(y, pos_of(level));
          g.add_edge(y, neg_of(level));
          for (int jj = 0; jj < level; ++jj) {
            g.add_edge(y, twin_of(level, jj, 1));
            g.add_edge(y, twin_of(level, jj, 2));
          }
        }
      }

  ReducedGraph rg{std::move(g), std::move(roles)};
  audit_roles(rg, [&f](const VertexRole& x, const VertexRole& y) {
    auto ordered = [&](const VertexRole& p, const VertexRole& q) -> bool {
      const auto& clauses = f.clauses;
      if (p.tag == Tag::Clause && q.tag == Tag::Clause) return true;
      if (p.tag == Tag::PosLiteral && q.tag == Tag::NegLiteral)
        return p.a == q.a;
      if (p.tag == Tag::Clause &&
          (q.tag == Tag::PosLiteral || q.tag == Tag::NegLiteral)) {
        const int lit = q.tag == Tag::PosLiteral ? q.a : -q.a;
        const auto& cl = clauses[std::size_t(p.a) - 1];
        return std::find(cl.begin(), cl.end(), lit) != cl.end();
      }
      if (p.tag == Tag::Clause && q.tag == Tag::TwinY) return q.b != 0;
      if ((p.tag == Tag::PosLiteral || p.tag == Tag::NegLiteral) &&
          q.tag == Tag::TwinY)
        return p.a == q.a || (p.a < q.a && p.a != q.b);
      if (p.tag == Tag::TwinY && q.tag == Tag::TwinY) {
        if (p.a == q.a) return p.b != q.b;
        const VertexRole& lo = p.a < q.a ? p : q;
        const VertexRole& hi = p.a < q.a ? q : p;
        return lo.a != hi.b;
      }
      return false;
    };
    return ordered(x, y) || ordered(y, x);
  });
  return rg;
}

std::pair<Graph, GameKind> kayles_clique_duality(const Graph& g,
                                                 GameKind kind) {
  GameKind dual;
  switch (kind) {
    case GameKind::NodeKayles:
      dual = GameKind::CliqueForming;
      break;
    case GameKind::CliqueForming:
      dual = GameKind::NodeKayles;
      break;
    case GameKind::MisereNodeKayles:
      dual = GameKind::MisereCliqueForming;
      break;
    case GameKind::MisereCliqueForming:
      dual = GameKind::MisereNodeKayles;
      break;
    default:
      throw std::invalid_argument(
          "duality applies to kayles and clique kinds only");
  }
  return {complement(g), dual};
}

Qbf parse_qbf(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0, m = 0;
  Qbf f;
  std::vector<int> current;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "cnf")
        throw ParseError(lineno, "expected header 'p cnf <n> <m>'");
      if (n < 1 || m < 1)
        throw ParseError(lineno, "need at least one variable and clause");
      have_header = true;
      f.num_vars = n;
      continue;
    }
    if (!have_header)
      throw ParseError(lineno, "clause before 'p cnf' header");
    // clause tokens, possibly spanning lines; 0 terminates a clause
    std::istringstream body(line);
    int lit;
    while (body >> lit) {
      if (lit == 0) {
        if (current.empty()) throw ParseError(lineno, "empty clause");
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > n)
          throw ParseError(lineno, "literal " + std::to_string(lit) +
                                       " out of range");
        current.push_back(lit);
      }
    }
    if (body.fail() && !body.eof())
      throw ParseError(lineno, "bad clause token");
  }
  if (!have_header) throw ParseError("missing 'p cnf <n> <m>' header");
  if (!current.empty())
    throw ParseError(lineno, "unterminated clause (missing 0)");
  if (int(f.clauses.size()) != m)
    throw ParseError("clause count " + std::to_string(f.clauses.size()) +
                     " does not match header " + std::to_string(m));
  f.validate();
  return f;
}

Qbf parse_qbf(const std::string& text) {
  std::istringstream in(text);
  return parse_qbf(in);
}

Qbf load_qbf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open formula file: " + path);
  return parse_qbf(in);
}

std::string format_qbf(const Qbf& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

std::string format_labels(const std::vector<VertexRole>& roles) {
  std::ostringstream out;
  for (std::size_t v = 0; v < roles.size(); ++v)
    out << v << " " << roles[v].to_string() << "\n";
  return out.str();
}

}  // namespace gpg
