// Structural analysis of tile patterns: maximal runs, leaves, counting
// statistics, connectivity, topology (Euler characteristic / holes), corner
// fans, and the validity predicates built from them.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tredoku/geometry.hpp"

namespace tredoku {

// A maximal chain of tiles glued along parallel full edges of direction dir;
// tiles are listed in order along the chain (ends first and last).  Every
// tile lies in exactly two runs, one per boundary direction of its type.
struct Run {
  Direction dir = Direction::D1;
  std::vector<int> tiles;  // indices into Pattern::tiles()
  int length() const { return static_cast<int>(tiles.size()); }
};

// All maximal runs, in a deterministic order (by direction, then smallest
// tile index).  Total membership over all runs is exactly 2 * size().
std::vector<Run> maximal_runs(const Pattern& p);

// True iff every maximal run has length 1 or 3.
bool check_run_lengths(const Pattern& p);

// Indices of leaf tiles (tiles one of whose two runs has length 1).
// Errors (PreconditionFailed) unless check_run_lengths holds.
std::vector<int> leaves(const Pattern& p);

struct PatternStats {
  int tiles = 0;                           // tau
  int runs3 = 0;                           // rho: number of length-3 runs
  int leaves = 0;                          // number of length-1 runs
  std::map<int, int> run_length_hist;      // length -> count, all runs
  std::array<int, 4> runs3_by_leaf_count{};  // length-3 runs holding k leaves
  std::array<int, 3> type_counts{};        // tiles per TileType rank
};

// Total on every pattern (no run-length precondition): counts runs of each
// length; runs3_by_leaf_count is filled only when run lengths are all {1,3}.
PatternStats stats(const Pattern& p);

// Adjacency lists of the tile graph (tiles joined when sharing a full edge).
std::vector<std::vector<int>> tile_graph(const Pattern& p);
// Adjacency lists of the contact graph (tiles joined when sharing an edge or
// just a corner).
std::vector<std::vector<int>> touch_graph(const Pattern& p);

bool is_edge_connected(const Pattern& p);

// V - E + F of the closed region covered by the tiles (F counts the 2*size()
// unit triangles).  A connected union is simply connected iff this equals 1;
// each extra hole lowers it by 1.
int euler_characteristic(const Pattern& p);

// Connected (allowing corner contact) and without holes.
bool is_simply_connected(const Pattern& p);

// Removing any single tile leaves the remaining tiles connected in the
// contact graph (edge or corner sharing).  Vacuously true below 2 tiles.
bool is_removal_connected(const Pattern& p);

// The fan at corner v: tiles having v as a corner, joined by full-edge
// sharing.  A corner is singular when its fan is disconnected.
bool is_corner_singular(const Pattern& p, const Vertex& v);
bool is_nonsingular(const Pattern& p);

// Validity predicates.  All require at least 3 tiles.
bool is_weak_tredoku(const Pattern& p);       // runs {1,3}, edge-connected, no holes
bool is_tredoku(const Pattern& p);            // weak + single-tile-removal connected
bool is_generalized_tredoku(const Pattern& p);  // runs {1,3}, edge-connected,
                                                // nonsingular, removal-connected
// Characterisation used as an independent check: a weak pattern is a tredoku
// pattern iff no leaf sits at the centre of its length-3 run.
bool is_tredoku_via_leaf_rule(const Pattern& p);

// Maximum-leaf patterns: leaves == ceil(tiles/2) + 1.  Errors
// (PreconditionFailed) unless is_tredoku(p).
bool is_verdant(const Pattern& p);

// (3/2) * rho <= tau <= 2 * rho + 1, computed from stats().  Meaningful for
// (weak) tredoku patterns; no revalidation is performed.
bool preece_inequality_holds(const Pattern& p);

// First violated validity condition for reporting, or nullopt when valid.
enum class Strictness { Weak, Tredoku, Generalized };
struct Violation {
  int condition = 0;     // 1-based index in the definition's numbering
  std::string message;   // e.g. "Condition 4: removal of centre tile disconnects"
};
std::optional<Violation> first_violation(const Pattern& p, Strictness s);

}  // namespace tredoku
