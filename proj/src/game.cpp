#include "gpg/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "gpg/errors.hpp"

namespace gpg {

bool is_misere(GameKind kind) {
  return kind == GameKind::GpAvoidance || kind == GameKind::MisereNodeKayles ||
         kind == GameKind::MisereCliqueForming;
}

bool is_gp_kind(GameKind kind) {
  return kind == GameKind::GpAchievement || kind == GameKind::GpAvoidance;
}

std::string game_kind_name(GameKind kind) {
  switch (kind) {
    case GameKind::GpAchievement:
      return "gp-achieve";
    case GameKind::GpAvoidance:
      return "gp-avoid";
    case GameKind::NodeKayles:
      return "kayles";
    case GameKind::MisereNodeKayles:
      return "kayles-misere";
    case GameKind::CliqueForming:
      return "clique";
    case GameKind::MisereCliqueForming:
      return "clique-misere";
  }
  return "?";
}

std::optional<GameKind> game_kind_from_name(const std::string& name) {
  for (GameKind k :
       {GameKind::GpAchievement, GameKind::GpAvoidance, GameKind::NodeKayles,
        GameKind::MisereNodeKayles, GameKind::CliqueForming,
        GameKind::MisereCliqueForming})
    if (game_kind_name(k) == name) return k;
  return std::nullopt;
}

Player opponent(Player p) {
  return p == Player::First ? Player::Second : Player::First;
}

std::string player_name(Player p) { return p == Player::First ? "A" : "B"; }

bool position_is_legal(const Graph& g, const DistanceMatrix& dm,
                       const Position& pos, GameKind kind) {
  const VertexSet& s = pos.selected;
  if (!s.is_subset_of(g.vertices())) return false;
  if (is_gp_kind(kind)) return is_general_position(g, dm, s);
  if (kind == GameKind::NodeKayles || kind == GameKind::MisereNodeKayles) {
    for (int u : s)
      if (g.neighbors(u).intersects(s)) return false;
    return true;
  }
  for (int u : s) {
    VertexSet rest = s;
    rest.erase(u);
    if (!rest.is_subset_of(g.neighbors(u))) return false;
  }
  return true;
}

namespace {

int default_limit(GameKind kind) { return is_gp_kind(kind) ? 24 : 32; }

VertexSet kayles_legal(const Graph& g, const VertexSet& selected) {
  VertexSet out = g.vertices() - selected;
  for (int u : selected) out -= g.neighbors(u);
  return out;
}

VertexSet clique_legal(const Graph& g, const VertexSet& selected) {
  VertexSet out = g.vertices() - selected;
  for (int u : selected) out &= g.neighbors(u);
  return out;
}

/// Open-addressing memo keyed on the full selected bitmask. Values are
/// mover-relative: does the player to move win from this position?
class MemoTable {
 public:
  MemoTable() : slots_(1024) {}

  std::optional<bool> lookup(const VertexSet& key) const {
    std::size_t i = key.hash() & (slots_.size() - 1);
    while (slots_[i].state != kEmpty) {
      if (slots_[i].key == key) return slots_[i].state == kWin;
      i = (i + 1) & (slots_.size() - 1);
    }
    return std::nullopt;
  }

  void insert(const VertexSet& key, bool win) {
    if (count_ * 10 >= slots_.size() * 7) grow();
    std::size_t i = key.hash() & (slots_.size() - 1);
    while (slots_[i].state != kEmpty) {
      if (slots_[i].key == key) return;
      i = (i + 1) & (slots_.size() - 1);
    }
    slots_[i] = {key, win ? kWin : kLoss};
    ++count_;
  }

 private:
  static constexpr std::uint8_t kEmpty = 0, kWin = 1, kLoss = 2;
  struct Slot {
    VertexSet key;
    std::uint8_t state = kEmpty;
  };

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.size() * 2, Slot{});
    for (const Slot& s : old) {
      if (s.state == kEmpty) continue;
      std::size_t i = s.key.hash() & (slots_.size() - 1);
      while (slots_[i].state != kEmpty) i = (i + 1) & (slots_.size() - 1);
      slots_[i] = s;
    }
  }

  std::vector<Slot> slots_;
  std::size_t count_ = 0;
};

struct Searcher {
  const Graph& g;
  const DistanceMatrix& dm;
  const IntervalTable& table;
  GameKind kind;
  SolveOptions opt;
  bool misere;
  bool gp;
  MemoTable memo;
  std::uint64_t nodes = 0;

  Searcher(const Graph& g_, const DistanceMatrix& dm_,
           const IntervalTable& table_, GameKind kind_,
           const SolveOptions& opt_)
      : g(g_),
        dm(dm_),
        table(table_),
        kind(kind_),
        opt(opt_),
        misere(is_misere(kind_)),
        gp(is_gp_kind(kind_)) {}

  VertexSet legal_from_scratch(const VertexSet& selected) const {
    if (gp) {
      VertexSet blocked;
      for (int u : selected)
        for (int v = selected.next_after(u); v != -1;
             v = selected.next_after(v))
          blocked |= table.at(u, v);
      VertexSet out;
      for (int x = 0; x < g.vertex_count(); ++x) {
        if (selected.contains(x) || blocked.contains(x)) continue;
        bool ok = true;
        for (int u : selected)
          if ((table.at(x, u) & selected) != VertexSet::singleton(u)) {
            ok = false;
            break;
          }
        if (ok) out.insert(x);
      }
      return out;
    }
    if (kind == GameKind::NodeKayles || kind == GameKind::MisereNodeKayles)
      return kayles_legal(g, selected);
    return clique_legal(g, selected);
  }

  VertexSet child_legal(const VertexSet& selected, const VertexSet& legal,
                        int x) const {
    VertexSet rest = legal;
    rest.erase(x);
    if (gp) {
      VertexSet out;
      for (int y : rest)
        if (table.pair_compatible(selected, x, y)) out.insert(y);
      return out;
    }
    if (kind == GameKind::NodeKayles || kind == GameKind::MisereNodeKayles)
      return rest - g.neighbors(x);
    return rest & g.neighbors(x);
  }

  // Guard for the parity collapse: once selected + legal is itself a valid
  // selection for the kind, the remaining game length is fixed at |legal|.
  bool union_closes(const VertexSet& selected, const VertexSet& legal) const {
    if (gp) return table.gp(selected | legal);
    if (kind == GameKind::NodeKayles || kind == GameKind::MisereNodeKayles) {
      for (int x : legal)
        if (g.neighbors(x).intersects(legal)) return false;
      return true;
    }
    for (int x : legal) {
      VertexSet rest = legal;
      rest.erase(x);
      if (!rest.is_subset_of(g.neighbors(x))) return false;
    }
    return true;
  }

  bool mover_wins(const VertexSet& selected, const VertexSet& legal) {
    if (legal.empty()) return misere;
    if (opt.use_memo)
      if (auto hit = memo.lookup(selected)) return *hit;
    ++nodes;

    bool win;
    if (opt.use_parity_shortcut && union_closes(selected, legal)) {
      const int r = legal.count();
      win = misere ? (r % 2 == 0) : (r % 2 == 1);
    } else {
      struct Child {
        int size;
        int move;
        VertexSet legal;
      };
      std::vector<Child> children;
      children.reserve(std::size_t(legal.count()));
      for (int x : legal) {
        VertexSet cl = child_legal(selected, legal, x);
        children.push_back({cl.count(), x, cl});
      }
      // fail-fast ordering; index tie-break keeps the search deterministic
      std::sort(children.begin(), children.end(),
                [](const Child& a, const Child& b) {
                  return a.size != b.size ? a.size < b.size : a.move < b.move;
                });
      win = false;
      for (const Child& c : children) {
        VertexSet next = selected;
        next.insert(c.move);
        if (!mover_wins(next, c.legal)) {
          win = true;
          break;
        }
      }
    }
    if (opt.use_memo) memo.insert(selected, win);
    return win;
  }

  // Lowest-index move that preserves the verdict.
  std::optional<int> pick_move(const VertexSet& selected,
                               const VertexSet& legal) {
    if (legal.empty()) return std::nullopt;
    int fallback = legal.first();
    for (int x : legal) {
      VertexSet next = selected;
      next.insert(x);
      if (!mover_wins(next, child_legal(selected, legal, x))) return x;
    }
    return fallback;
  }
};

}  // namespace

VertexSet legal_moves(const Graph& g, const DistanceMatrix& dm,
                      const Position& pos, GameKind kind) {
  if (!position_is_legal(g, dm, pos, kind))
    throw std::invalid_argument("position " + pos.selected.to_string() +
                               " is illegal for " + game_kind_name(kind));
  if (is_gp_kind(kind)) return playable_set(g, dm, pos.selected);
  if (kind == GameKind::NodeKayles || kind == GameKind::MisereNodeKayles)
    return kayles_legal(g, pos.selected);
  return clique_legal(g, pos.selected);
}

std::optional<Player> parity_shortcut(const Graph& g, const DistanceMatrix& dm,
                                      const Position& pos, GameKind kind) {
  if (!is_gp_kind(kind))
    throw std::invalid_argument("parity shortcut applies to gp kinds only");
  if (!position_is_legal(g, dm, pos, kind))
    throw std::invalid_argument("illegal position");
  VertexSet playable = playable_set(g, dm, pos.selected);
  VertexSet together = pos.selected | playable;
  if (!is_general_position(g, dm, together)) return std::nullopt;
  const int r = playable.count();
  const bool mover_wins =
      is_misere(kind) ? (r % 2 == 0) : (r % 2 == 1);
  return mover_wins ? pos.to_move() : opponent(pos.to_move());
}

SolveResult solve(const Graph& g, GameKind kind, const Position& start,
                  const SolveOptions& options) {
  const int limit =
      options.max_vertices > 0 ? options.max_vertices : default_limit(kind);
  if (g.vertex_count() > limit)
    throw SizeLimitError("solve limited to " + std::to_string(limit) +
                         " vertices for " + game_kind_name(kind) + ", got " +
                         std::to_string(g.vertex_count()));

  DistanceMatrix dm = all_pairs_distances(g);
  if (!position_is_legal(g, dm, start, kind))
    throw std::invalid_argument("illegal start position " +
                                start.selected.to_string());
  IntervalTable table(g, dm);
  Searcher searcher(g, dm, table, kind, options);

  const VertexSet root_legal = searcher.legal_from_scratch(start.selected);
  const bool root_mover_wins = searcher.mover_wins(start.selected, root_legal);
  const std::uint64_t nodes = searcher.nodes;

  SolveResult result;
  result.winner = root_mover_wins ? start.to_move() : opponent(start.to_move());
  result.nodes_expanded = nodes;

  // principal variation: follow pick_move to a terminal position
  VertexSet selected = start.selected;
  VertexSet legal = root_legal;
  while (true) {
    std::optional<int> mv = searcher.pick_move(selected, legal);
    if (!mv) break;
    result.principal_variation.push_back(*mv);
    legal = searcher.child_legal(selected, legal, *mv);
    selected.insert(*mv);
  }
  result.game_length_bound = int(result.principal_variation.size());
  return result;
}

std::optional<int> best_move(const Graph& g, GameKind kind,
                             const Position& pos,
                             const SolveOptions& options) {
  const int limit =
      options.max_vertices > 0 ? options.max_vertices : default_limit(kind);
  if (g.vertex_count() > limit)
    throw SizeLimitError("solve limited to " + std::to_string(limit) +
                         " vertices for " + game_kind_name(kind));
  DistanceMatrix dm = all_pairs_distances(g);
  if (!position_is_legal(g, dm, pos, kind))
    throw std::invalid_argument("illegal position");
  IntervalTable table(g, dm);
  Searcher searcher(g, dm, table, kind, options);
  return searcher.pick_move(pos.selected,
                            searcher.legal_from_scratch(pos.selected));
}

}  // namespace gpg
