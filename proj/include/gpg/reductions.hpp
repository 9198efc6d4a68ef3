#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gpg/game.hpp"
#include "gpg/graph.hpp"

namespace gpg {

/// Totally quantified CNF with a fixed alternation convention: variable i
/// is assigned in move n-i+1, Player 1 moves first, and the outermost
/// variable x_n is existential; quantifiers strictly alternate inward.
struct Qbf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // literals +v / -v, variables 1..n

  /// Throws std::invalid_argument on out-of-range literals, an empty
  /// clause list, or an empty clause.
  void validate() const;
};

enum class QbfWinner { Player1, Player2 };

/// Gadget origin of a vertex in a reduction output.
struct VertexRole {
  enum class Tag {
    Universal,   // the vertex adjacent to every original vertex
    Original,    // v_i kept from the input graph   (a = input index)
    Friend,      // pendant attached to v_a
    GadgetC5,    // five-cycle guard on v_a          (b = position 0..4)
    PosLiteral,  // a = variable, 1-based
    NegLiteral,  // a = variable
    Clause,      // a = clause number, 1-based
    TwinY        // a = level i, b = j in 0..i-1, c = twin 1 or 2
  };

  Tag tag = Tag::Universal;
  int a = 0;
  int b = 0;
  int c = 0;

  std::string to_string() const;
  bool operator==(const VertexRole&) const = default;
};

/// A reduction output: the graph plus one role per vertex. Constructors
/// re-derive every adjacency from the roles and the source instance and
/// refuse to return on any mismatch, so the labels are trustworthy.
struct ReducedGraph {
  Graph graph;
  std::vector<VertexRole> roles;
};

/// Clique-forming position game on h -> gp achievement instance.
/// Output order: the n vertices of h, the universal vertex, then one
/// pendant friend per input vertex (2n+1 total, diameter <= 4).
ReducedGraph clique_to_gp_achievement(const Graph& h);

/// Misere clique-forming on h -> gp avoidance instance. Output order: the
/// n vertices of h, the universal vertex, then per input vertex a
/// five-cycle whose members all attach to it (6n+1 total, diameter <= 4).
ReducedGraph misere_clique_to_gp_avoidance(const Graph& h);

/// Pads to an even variable count with a fresh innermost variable (new
/// index 1, everything else shifted up) and prepends the clause
/// (x1 or not-x1) unless it is already first. Preserves the game value.
Qbf tqbf_normalize(const Qbf& f);

/// Schaefer-style construction with each y vertex split into two false
/// twins; requires a normalized formula. Output order: literal vertices
/// ascending by variable (positive before negative), clause vertices,
/// then twins by (level, j, twin).
ReducedGraph tqbf_to_misere_kayles(const Qbf& f);

/// Winner of the quantified game; Player 1 wins iff the formula is true.
QbfWinner tqbf_evaluate(const Qbf& f);

/// Complement the graph and swap the game for its dual. The winner is
/// invariant. Rejects gp kinds.
std::pair<Graph, GameKind> kayles_clique_duality(const Graph& g,
                                                 GameKind kind);

/// QDIMACS subset: 'c' comments, one 'p cnf <n> <m>' header, clause lines
/// of signed integers terminated by 0 (clauses may span lines). No
/// quantifier lines; the alternation convention is fixed.
Qbf parse_qbf(std::istream& in);
Qbf parse_qbf(const std::string& text);
Qbf load_qbf(const std::string& path);
std::string format_qbf(const Qbf& f);

/// One line '<vertex-index> <role>' per vertex.
std::string format_labels(const std::vector<VertexRole>& roles);

}  // namespace gpg
