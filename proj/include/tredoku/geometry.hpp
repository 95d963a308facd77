// Triangular-lattice geometry: unit triangles, diamond tiles made of two
// edge-glued triangles, the 12-element point-symmetry group, and a canonical
// form for tile sets under congruence (rotation/reflection/translation).
//
// Coordinates: the lattice vertex v(a,b) sits at a*E1 + b*E2 in the plane,
// with E1 = (1,0) and E2 = (1/2, sqrt(3)/2).  All geometry below is exact
// integer arithmetic in (a,b); the Euclidean embedding only matters for
// rendering.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tredoku/error.hpp"

namespace tredoku {

// Coordinates are kept within this bound; construction and enumeration stay
// far inside it, and packed canonical keys rely on it.
inline constexpr int kCoordLimit = 500;

struct Vertex {
  int a = 0;
  int b = 0;
  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Up(a,b) has vertices v(a,b), v(a+1,b), v(a,b+1); Down(a,b) has vertices
// v(a+1,b), v(a,b+1), v(a+1,b+1).  Up and Down triangles with equal (a,b)
// share their "hypotenuse" edge.
enum class CellKind : std::uint8_t { Up = 0, Down = 1 };

struct TriCell {
  int a = 0;
  int b = 0;
  CellKind kind = CellKind::Up;
  friend constexpr auto operator<=>(const TriCell&, const TriCell&) = default;
};

// Lattice edge directions, each taken with a canonical sign (positive b
// component, or positive a when b = 0):
//   D1 = E1      -> (1,0)
//   D2 = E2      -> (0,1)
//   D3 = E2 - E1 -> (-1,1)
enum class Direction : std::uint8_t { D1 = 0, D2 = 1, D3 = 2 };

constexpr Vertex direction_vector(Direction d) {
  switch (d) {
    case Direction::D1: return {1, 0};
    case Direction::D2: return {0, 1};
    case Direction::D3: return {-1, 1};
  }
  return {0, 0};
}

// A tile is a rhombus of two edge-glued unit triangles, classified by the
// direction of its internal (glued) edge:
//   Top(a,b)   = Up(a,b) + Down(a,b)     internal D3, boundary D1 and D2
//   Left(a,b)  = Up(a,b) + Down(a-1,b)   internal D2, boundary D1 and D3
//   Right(a,b) = Up(a,b) + Down(a,b-1)   internal D1, boundary D2 and D3
// The rank order Top < Left < Right is part of the canonical tile order.
enum class TileType : std::uint8_t { Top = 0, Left = 1, Right = 2 };

const char* to_string(TileType t);
std::optional<TileType> tile_type_from_string(const std::string& s);

struct Tile {
  int a = 0;
  int b = 0;
  TileType type = TileType::Top;
  friend constexpr bool operator==(const Tile&, const Tile&) = default;
};

// Canonical tile order: lexicographic by (b, a, rank).  Packed into one
// integer so sorting and canonical-form comparison are plain integer work.
// Layout: (b + 512) << 12 | (a + 512) << 2 | rank, valid while |a|,|b| < 512.
std::uint32_t tile_key(const Tile& t);
Tile tile_from_key(std::uint32_t key);
inline bool tile_less(const Tile& x, const Tile& y) { return tile_key(x) < tile_key(y); }

// --- Cell geometry ---------------------------------------------------------

std::array<Vertex, 3> cell_vertices(const TriCell& c);
// The three cells sharing a full edge with c (an Up cell's neighbours are all
// Down and vice versa).
std::array<TriCell, 3> cell_edge_neighbors(const TriCell& c);
// Inverse of cell_vertices: identifies the unit triangle with the given
// corner set (order-insensitive).  Errors if the vertices span no cell.
TriCell cell_from_vertices(std::array<Vertex, 3> vs);

// --- Tile geometry ---------------------------------------------------------

// The two triangles of a tile, as {up cell, down cell}.
std::pair<TriCell, TriCell> tile_triangles(const Tile& t);
// Inverse: the tile whose triangles are exactly {x, y}; errors unless x and y
// are an edge-adjacent Up/Down pair.
Tile tile_from_triangles(const TriCell& x, const TriCell& y);

Direction internal_direction(TileType t);
// The two boundary edge directions, ascending.
std::array<Direction, 2> boundary_directions(TileType t);
// The four corners, in the cyclic order O, O+u, O+u+w, O+w where u and w are
// the canonical vectors of the two boundary directions (u = the smaller one).
std::array<Vertex, 4> tile_corners(const Tile& t);
// Rhombus frame: base corner O plus the boundary directions (du, dw) such
// that the corners are O, O+u, O+w, O+u+w.  Used by sub-cell geometry.
struct TileFrame {
  Vertex origin;
  Direction du;
  Direction dw;
};
TileFrame tile_frame(const Tile& t);

// For boundary direction d of tile t: the two cells immediately across t's
// two d-edges (one per side, deterministic order).  A tile containing such a
// cell shares a full d-edge with t.  Errors if d is t's internal direction.
std::array<TriCell, 2> across_cells(const Tile& t, Direction d);

bool tiles_overlap(const Tile& x, const Tile& y);
bool tiles_edge_adjacent(const Tile& x, const Tile& y);
// Direction of the shared full edge; errors unless tiles_edge_adjacent.
Direction shared_direction(const Tile& x, const Tile& y);
// Tiles sharing at least one corner (full-edge sharing included).
bool tiles_touch(const Tile& x, const Tile& y);

// --- Symmetries -------------------------------------------------------------

// The 12 point symmetries fixing the lattice: ops 0..5 are rotations by
// 60*op degrees counter-clockwise about v(0,0); ops 6..11 are the same
// rotations composed with (applied after) the reflection across the E1 axis.
inline constexpr int kNumPointOps = 12;

// Point part of the op applied to a vertex (linear in (a,b)).
Vertex apply_point_op(int op, const Vertex& v);
TriCell apply_point_op(int op, const TriCell& c);
Tile apply_point_op(int op, const Tile& t);
// Image of an edge direction (as an undirected line) under the op.
Direction apply_point_op(int op, Direction d);
// Group structure on point ops: compose(f, g) acts like f after g.
int compose_point_ops(int f, int g);
int inverse_point_op(int op);

// A full congruence: point op followed by a translation in (a,b).
struct Symmetry {
  int op = 0;
  int ta = 0;
  int tb = 0;
};
Vertex apply(const Symmetry& s, const Vertex& v);
Tile apply(const Symmetry& s, const Tile& t);

// --- Patterns ----------------------------------------------------------------

// A finite set of pairwise non-overlapping tiles, stored sorted by tile_key.
class Pattern {
 public:
  Pattern() = default;
  // Sorts, verifies there are no duplicate or overlapping tiles, and indexes
  // the covered cells.  Errors (InvalidPattern) otherwise.  Empty is allowed
  // here; operations that need tiles state their own preconditions.
  static Pattern from_tiles(std::vector<Tile> tiles);

  const std::vector<Tile>& tiles() const { return tiles_; }
  int size() const { return static_cast<int>(tiles_.size()); }
  bool empty() const { return tiles_.empty(); }

  bool contains_tile(const Tile& t) const;
  // Index into tiles() of the tile covering cell c, or -1.
  int tile_index_of_cell(const TriCell& c) const;
  bool covers_cell(const TriCell& c) const { return tile_index_of_cell(c) >= 0; }
  // All covered cells, sorted.
  const std::vector<TriCell>& cells() const { return cells_; }

  Pattern translated(int da, int db) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Tile> tiles_;            // sorted by tile_key
  std::vector<TriCell> cells_;         // sorted
  std::vector<int> cell_owner_;        // parallel to cells_: index into tiles_
};

Pattern apply_symmetry(const Pattern& p, const Symmetry& s);

// Canonical congruence-class representative: over all 12 point ops, translate
// the image so its minimal tile key sits at (a,b) = (0,0), and keep the
// lexicographically smallest sorted key vector.  Errors on the empty pattern.
Pattern canonical_form(const Pattern& p);
// The canonical key vector itself (cheap identity for hashing/dedup).
std::vector<std::uint32_t> canonical_key(const Pattern& p);
// All point ops op such that translating op's image of p yields the canonical
// key vector, paired with that translation.  Used by canonical augmentation.
std::vector<Symmetry> canonizing_symmetries(const Pattern& p);

// --- Hexagon windows ---------------------------------------------------------

// H_m = all cells whose three vertices satisfy |a| <= m, |b| <= m,
// |a+b| <= m (a hexagon of side m centred on v(0,0); m = 1 gives 6 cells).
bool vertex_in_hexagon(const Vertex& v, int m);
bool cell_in_hexagon(const TriCell& c, int m);
bool tile_in_hexagon(const Tile& t, int m);
std::vector<TriCell> hexagon_cells(int m);

}  // namespace tredoku
