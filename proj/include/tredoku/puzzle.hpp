// Puzzle layer: subdividing each tile into a 3x3 grid of sub-cells, deriving
// the box/line groupings, and a deterministic solver for the resulting
// overlapping-groups placement puzzle (digits 1..9, no repeats per group).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tredoku/analysis.hpp"
#include "tredoku/geometry.hpp"

namespace tredoku {

// Sub-cell (i, j) of a tile occupies the region O + [i,i+1]/3 * u +
// [j,j+1]/3 * w in the tile's frame (see tile_frame).  tile indexes into
// Pattern::tiles().
struct SubCell {
  int tile = 0;
  int i = 0;
  int j = 0;
  friend constexpr auto operator<=>(const SubCell&, const SubCell&) = default;
};

enum class GroupKind { Box, Line };

struct Grouping {
  GroupKind kind = GroupKind::Box;
  std::array<SubCell, 9> cells;
};

struct GroupingsResult {
  std::vector<Grouping> groups;  // size() boxes followed by 3*rho lines
  // Set when the pattern is not a tredoku pattern (groupings still returned).
  bool weak_only_warning = false;
};

// One Box per tile and, for every length-3 run, the three Lines of nine
// sub-cells that follow the run.  Errors (PreconditionFailed) if some run has
// a length outside {1,3}; single tiles and two-tile patterns are permitted
// structurally (boxes only / with warnings).
GroupingsResult groupings(const Pattern& p);

// A (partial) assignment of digits 1..9 to sub-cells.
using Assignment = std::map<SubCell, int>;

enum class SolveStatus { Solved, Unsat, Capped };

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<Assignment> assignment;  // complete, when status == Solved
  std::int64_t nodes = 0;
};

// Deterministic solver: repeated naked-single propagation plus
// fewest-candidates-first backtracking (ties by sub-cell order, digits tried
// ascending).  Errors on malformed clues (bad indices or digit range);
// contradictory clues yield Unsat.  node_cap = 0 means unlimited; exceeding
// it yields Capped.
SolveResult solve(const Pattern& p, const Assignment& clues, std::int64_t node_cap = 0);

// Independent check that a complete assignment uses digits 1..9 exactly once
// in every group.  Errors if the assignment does not cover every sub-cell.
bool verify_solution(const Pattern& p, const Assignment& a);

// Number of completions of the clues, counted up to the cap (inclusive);
// returns min(count, cap).
std::int64_t count_solutions(const Pattern& p, const Assignment& clues, std::int64_t cap);

}  // namespace tredoku
