// Sub-cell groupings (per-tile boxes and run-following lines) and the
// deterministic digit-placement solver built on them.
#include "tredoku/puzzle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "tredoku/error.hpp"

namespace tredoku {

namespace {

constexpr std::uint16_t kAllDigits = 0x1FF;  // bits 0..8 <-> digits 1..9

int sub_index(const SubCell& s) { return s.tile * 9 + s.i * 3 + s.j; }

bool sub_cell_in_range(const Pattern& p, const SubCell& s) {
  return s.tile >= 0 && s.tile < p.size() && s.i >= 0 && s.i < 3 && s.j >= 0 &&
         s.j < 3;
}

// True when `other` is glued to `t` across the e-edge on the far side of t's
// frame (the edge translated by the transverse frame vector), false when it
// sits across the origin-side e-edge.  A tile glued across one e-edge can
// contain at most one corner of the other e-edge, so testing both endpoints
// identifies the side.
bool attaches_far_side(const Tile& t, const Tile& other, Direction e) {
  const TileFrame f = tile_frame(t);
  const Vertex ev = direction_vector(e);
  const Direction transverse = (f.du == e) ? f.dw : f.du;
  const Vertex fv = direction_vector(transverse);
  const Vertex far0{f.origin.a + fv.a, f.origin.b + fv.b};
  const Vertex far1{far0.a + ev.a, far0.b + ev.b};
  const std::array<Vertex, 4> corners = tile_corners(other);
  const auto has = [&corners](const Vertex& v) {
    return std::find(corners.begin(), corners.end(), v) != corners.end();
  };
  return has(far0) && has(far1);
}

// Flat constraint model: one variable per sub-cell, groups as index lists.
struct PuzzleIndex {
  int cells = 0;
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<int>> peers;  // distinct cells sharing a group
};

PuzzleIndex build_index(const Pattern& p) {
  PuzzleIndex idx;
  idx.cells = 9 * p.size();
  const GroupingsResult gr = groupings(p);
  idx.groups.reserve(gr.groups.size());
  std::vector<std::set<int>> peer_sets(static_cast<std::size_t>(idx.cells));
  for (const Grouping& g : gr.groups) {
    std::vector<int> members;
    members.reserve(9);
    for (const SubCell& s : g.cells) members.push_back(sub_index(s));
    for (int a : members) {
      for (int b : members) {
        if (a != b) peer_sets[static_cast<std::size_t>(a)].insert(b);
      }
    }
    idx.groups.push_back(std::move(members));
  }
  idx.peers.reserve(peer_sets.size());
  for (std::set<int>& s : peer_sets) {
    idx.peers.emplace_back(s.begin(), s.end());
  }
  return idx;
}

// Backtracking search with naked-single propagation.  Deterministic: the
// branch cell is the lowest-index cell among those with fewest candidates,
// and digits are tried in ascending order.
class Solver {
 public:
  Solver(const PuzzleIndex& idx, std::int64_t node_cap)
      : idx_(idx),
        node_cap_(node_cap),
        cand_(static_cast<std::size_t>(idx.cells), kAllDigits),
        value_(static_cast<std::size_t>(idx.cells), 0),
        unassigned_(idx.cells) {}

  // Applies one clue; false on contradiction.
  bool assign_clue(int cell, int digit) { return assign(cell, digit); }

  // Finds the first solution in the deterministic order.
  bool search_one() { return dfs(/*counting=*/false, /*cap=*/1, /*found=*/nullptr); }

  // Counts completions up to `cap`.
  std::int64_t count_up_to(std::int64_t cap) {
    std::int64_t found = 0;
    dfs(/*counting=*/true, cap, &found);
    return found;
  }

  bool capped() const { return capped_; }
  std::int64_t nodes() const { return nodes_; }
  const std::vector<int>& values() const { return value_; }

 private:
  static int single_digit(std::uint16_t mask) { return std::countr_zero(mask) + 1; }

  bool assign(int cell, int digit) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << (digit - 1));
    if ((cand_[static_cast<std::size_t>(cell)] & bit) == 0) return false;
    cand_[static_cast<std::size_t>(cell)] = bit;
    value_[static_cast<std::size_t>(cell)] = digit;
    --unassigned_;
    for (int peer : idx_.peers[static_cast<std::size_t>(cell)]) {
      const auto pi = static_cast<std::size_t>(peer);
      if (value_[pi] != 0) {
        if (value_[pi] == digit) return false;
        continue;
      }
      cand_[pi] = static_cast<std::uint16_t>(cand_[pi] & ~bit);
      if (cand_[pi] == 0) return false;
    }
    return true;
  }

  // Assigns every unassigned cell with a unique candidate until a fixpoint;
  // false on contradiction.  The fixpoint is order-independent.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < idx_.cells; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        if (value_[ci] != 0) continue;
        if (std::popcount(cand_[ci]) == 1) {
          if (!assign(c, single_digit(cand_[ci]))) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  // Returns true to stop the search (first solution found, count cap reached,
  // or node budget exhausted).
  bool dfs(bool counting, std::int64_t cap, std::int64_t* found) {
    ++nodes_;
    if (node_cap_ > 0 && nodes_ > node_cap_) {
      capped_ = true;
      return true;
    }
    if (!propagate()) return false;
    if (unassigned_ == 0) {
      if (!counting) return true;
      ++*found;
      return *found >= cap;
    }
    int best = -1;
    int best_count = 10;
    for (int c = 0; c < idx_.cells; ++c) {
      const auto ci = static_cast<std::size_t>(c);
      if (value_[ci] != 0) continue;
      const int n = std::popcount(cand_[ci]);
      if (n < best_count) {
        best_count = n;
        best = c;
      }
    }
    const std::uint16_t options = cand_[static_cast<std::size_t>(best)];
    for (int digit = 1; digit <= 9; ++digit) {
      if ((options & (1u << (digit - 1))) == 0) continue;
      const std::vector<std::uint16_t> saved_cand = cand_;
      const std::vector<int> saved_value = value_;
      const int saved_unassigned = unassigned_;
      if (assign(best, digit) && dfs(counting, cap, found)) return true;
      cand_ = saved_cand;
      value_ = saved_value;
      unassigned_ = saved_unassigned;
    }
    return false;
  }

  const PuzzleIndex& idx_;
  std::int64_t node_cap_ = 0;
  std::vector<std::uint16_t> cand_;
  std::vector<int> value_;
  int unassigned_ = 0;
  std::int64_t nodes_ = 0;
  bool capped_ = false;
};

// Shared clue validation: malformed clues are errors; contradictory clues are
// a solver outcome, not an error.
void check_clues_well_formed(const Pattern& p, const Assignment& clues) {
  for (const auto& [cell, digit] : clues) {
    if (!sub_cell_in_range(p, cell)) {
      fail(Errc::InvalidArgument, "clue names a sub-cell outside the pattern");
    }
    if (digit < 1 || digit > 9) {
      fail(Errc::InvalidArgument, "clue digit must be between 1 and 9");
    }
  }
}

}  // namespace

GroupingsResult groupings(const Pattern& p) {
  if (!check_run_lengths(p)) {
    fail(Errc::PreconditionFailed,
         "groupings requires every maximal run to have length 1 or 3");
  }
  GroupingsResult res;
  res.weak_only_warning = !is_tredoku(p);

  for (int t = 0; t < p.size(); ++t) {
    Grouping box;
    box.kind = GroupKind::Box;
    int out = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) box.cells[out++] = SubCell{t, i, j};
    }
    res.groups.push_back(box);
  }

  for (const Run& r : maximal_runs(p)) {
    if (r.length() != 3) continue;
    // Line k of the run takes, from each tile, the 3 sub-cells whose index
    // along r.dir is k.  Both neighbours of a shared edge parameterize it
    // from its r.dir-minimal endpoint, so the choice is consistent across
    // the run.  Within a tile the cells are ordered along the direction of
    // travel, making each line edge-connected in the embedding.
    std::array<const Tile*, 3> tiles{};
    for (int m = 0; m < 3; ++m) {
      tiles[static_cast<std::size_t>(m)] =
          &p.tiles()[static_cast<std::size_t>(r.tiles[static_cast<std::size_t>(m)])];
    }
    std::array<bool, 3> along_du{};
    std::array<bool, 3> forward{};
    for (int m = 0; m < 3; ++m) {
      const auto mi = static_cast<std::size_t>(m);
      const TileFrame f = tile_frame(*tiles[mi]);
      along_du[mi] = (f.du == r.dir);
      forward[mi] = (m == 0) ? attaches_far_side(*tiles[0], *tiles[1], r.dir)
                             : !attaches_far_side(*tiles[mi], *tiles[mi - 1], r.dir);
    }
    for (int k = 0; k < 3; ++k) {
      Grouping line;
      line.kind = GroupKind::Line;
      int out = 0;
      for (int m = 0; m < 3; ++m) {
        const auto mi = static_cast<std::size_t>(m);
        for (int step = 0; step < 3; ++step) {
          const int across = forward[mi] ? step : 2 - step;
          const int i = along_du[mi] ? k : across;
          const int j = along_du[mi] ? across : k;
          line.cells[out++] = SubCell{r.tiles[mi], i, j};
        }
      }
      res.groups.push_back(line);
    }
  }
  return res;
}

SolveResult solve(const Pattern& p, const Assignment& clues, std::int64_t node_cap) {
  check_clues_well_formed(p, clues);
  const PuzzleIndex idx = build_index(p);
  Solver solver(idx, node_cap);
  SolveResult res;
  for (const auto& [cell, digit] : clues) {
    if (!solver.assign_clue(sub_index(cell), digit)) {
      res.status = SolveStatus::Unsat;
      res.nodes = solver.nodes();
      return res;
    }
  }
  const bool solved = solver.search_one();
  res.nodes = solver.nodes();
  if (solver.capped()) {
    res.status = SolveStatus::Capped;
    return res;
  }
  if (!solved) {
    res.status = SolveStatus::Unsat;
    return res;
  }
  res.status = SolveStatus::Solved;
  Assignment full;
  for (int t = 0; t < p.size(); ++t) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const SubCell s{t, i, j};
        full[s] = solver.values()[static_cast<std::size_t>(sub_index(s))];
      }
    }
  }
  res.assignment = std::move(full);
  return res;
}

bool verify_solution(const Pattern& p, const Assignment& a) {
  const GroupingsResult gr = groupings(p);
  for (const auto& [cell, digit] : a) {
    if (!sub_cell_in_range(p, cell)) {
      fail(Errc::InvalidArgument, "assignment names a sub-cell outside the pattern");
    }
    if (digit < 1 || digit > 9) {
      fail(Errc::InvalidArgument, "assigned digit must be between 1 and 9");
    }
  }
  if (static_cast<int>(a.size()) != 9 * p.size()) {
    fail(Errc::PreconditionFailed, "assignment does not cover every sub-cell");
  }
  for (const Grouping& g : gr.groups) {
    std::uint16_t seen = 0;
    for (const SubCell& s : g.cells) {
      seen = static_cast<std::uint16_t>(seen | (1u << (a.at(s) - 1)));
    }
    if (seen != kAllDigits) return false;
  }
  return true;
}

std::int64_t count_solutions(const Pattern& p, const Assignment& clues, std::int64_t cap) {
  check_clues_well_formed(p, clues);
  if (cap <= 0) return 0;
  const PuzzleIndex idx = build_index(p);
  Solver solver(idx, 0);
  for (const auto& [cell, digit] : clues) {
    if (!solver.assign_clue(sub_index(cell), digit)) return 0;
  }
  return solver.count_up_to(cap);
}

}  // namespace tredoku
