#include "tredoku/geometry.hpp"

#include <algorithm>
#include <array>

namespace tredoku {

namespace {

void check_coord(int a, int b) {
  if (a < -kCoordLimit || a > kCoordLimit || b < -kCoordLimit || b > kCoordLimit) {
    fail(Errc::InvalidArgument, "lattice coordinate out of supported range");
  }
}

int type_rank(TileType t) { return static_cast<int>(t); }

}  // namespace

const char* to_string(TileType t) {
  switch (t) {
    case TileType::Top: return "top";
    case TileType::Left: return "left";
    case TileType::Right: return "right";
  }
  return "?";
}

std::optional<TileType> tile_type_from_string(const std::string& s) {
  if (s == "top") return TileType::Top;
  if (s == "left") return TileType::Left;
  if (s == "right") return TileType::Right;
  return std::nullopt;
}

std::uint32_t tile_key(const Tile& t) {
  check_coord(t.a, t.b);
  return (static_cast<std::uint32_t>(t.b + 512) << 12) |
         (static_cast<std::uint32_t>(t.a + 512) << 2) |
         static_cast<std::uint32_t>(type_rank(t.type));
}

Tile tile_from_key(std::uint32_t key) {
  Tile t;
  t.type = static_cast<TileType>(key & 3u);
  t.a = static_cast<int>((key >> 2) & 1023u) - 512;
  t.b = static_cast<int>(key >> 12) - 512;
  return t;
}

// --- Cells -------------------------------------------------------------------

std::array<Vertex, 3> cell_vertices(const TriCell& c) {
  if (c.kind == CellKind::Up) {
    return {Vertex{c.a, c.b}, Vertex{c.a + 1, c.b}, Vertex{c.a, c.b + 1}};
  }
  return {Vertex{c.a + 1, c.b}, Vertex{c.a, c.b + 1}, Vertex{c.a + 1, c.b + 1}};
}

std::array<TriCell, 3> cell_edge_neighbors(const TriCell& c) {
  if (c.kind == CellKind::Up) {
    return {TriCell{c.a, c.b, CellKind::Down}, TriCell{c.a - 1, c.b, CellKind::Down},
            TriCell{c.a, c.b - 1, CellKind::Down}};
  }
  return {TriCell{c.a, c.b, CellKind::Up}, TriCell{c.a + 1, c.b, CellKind::Up},
          TriCell{c.a, c.b + 1, CellKind::Up}};
}

TriCell cell_from_vertices(std::array<Vertex, 3> vs) {
  std::sort(vs.begin(), vs.end());
  const auto [x, y] = std::pair{vs[0].a, vs[0].b};
  if (vs[1] == Vertex{x, y + 1} && vs[2] == Vertex{x + 1, y}) {
    return TriCell{x, y, CellKind::Up};
  }
  if (vs[1] == Vertex{x + 1, y - 1} && vs[2] == Vertex{x + 1, y}) {
    return TriCell{x, y - 1, CellKind::Down};
  }
  fail(Errc::InvalidArgument, "vertices do not span a unit triangle");
}

// --- Tiles -------------------------------------------------------------------

std::pair<TriCell, TriCell> tile_triangles(const Tile& t) {
  const TriCell up{t.a, t.b, CellKind::Up};
  switch (t.type) {
    case TileType::Top: return {up, TriCell{t.a, t.b, CellKind::Down}};
    case TileType::Left: return {up, TriCell{t.a - 1, t.b, CellKind::Down}};
    case TileType::Right: return {up, TriCell{t.a, t.b - 1, CellKind::Down}};
  }
  fail(Errc::InvalidArgument, "bad tile type");
}

Tile tile_from_triangles(const TriCell& x, const TriCell& y) {
  const TriCell& up = (x.kind == CellKind::Up) ? x : y;
  const TriCell& dn = (x.kind == CellKind::Up) ? y : x;
  if (up.kind != CellKind::Up || dn.kind != CellKind::Down) {
    fail(Errc::InvalidArgument, "tile needs one up and one down triangle");
  }
  if (dn.a == up.a && dn.b == up.b) return Tile{up.a, up.b, TileType::Top};
  if (dn.a == up.a - 1 && dn.b == up.b) return Tile{up.a, up.b, TileType::Left};
  if (dn.a == up.a && dn.b == up.b - 1) return Tile{up.a, up.b, TileType::Right};
  fail(Errc::InvalidArgument, "triangles are not edge-adjacent");
}

Direction internal_direction(TileType t) {
  switch (t) {
    case TileType::Top: return Direction::D3;
    case TileType::Left: return Direction::D2;
    case TileType::Right: return Direction::D1;
  }
  fail(Errc::InvalidArgument, "bad tile type");
}

std::array<Direction, 2> boundary_directions(TileType t) {
  switch (t) {
    case TileType::Top: return {Direction::D1, Direction::D2};
    case TileType::Left: return {Direction::D1, Direction::D3};
    case TileType::Right: return {Direction::D2, Direction::D3};
  }
  fail(Errc::InvalidArgument, "bad tile type");
}

TileFrame tile_frame(const Tile& t) {
  switch (t.type) {
    case TileType::Top:
      return TileFrame{Vertex{t.a, t.b}, Direction::D1, Direction::D2};
    case TileType::Left:
      return TileFrame{Vertex{t.a, t.b}, Direction::D1, Direction::D3};
    case TileType::Right:
      return TileFrame{Vertex{t.a + 1, t.b - 1}, Direction::D2, Direction::D3};
  }
  fail(Errc::InvalidArgument, "bad tile type");
}

std::array<Vertex, 4> tile_corners(const Tile& t) {
  const TileFrame f = tile_frame(t);
  const Vertex u = direction_vector(f.du);
  const Vertex w = direction_vector(f.dw);
  return {f.origin, Vertex{f.origin.a + u.a, f.origin.b + u.b},
          Vertex{f.origin.a + u.a + w.a, f.origin.b + u.b + w.b},
          Vertex{f.origin.a + w.a, f.origin.b + w.b}};
}

std::array<TriCell, 2> across_cells(const Tile& t, Direction d) {
  const int a = t.a, b = t.b;
  switch (t.type) {
    case TileType::Top:
      if (d == Direction::D1)
        return {TriCell{a, b - 1, CellKind::Down}, TriCell{a, b + 1, CellKind::Up}};
      if (d == Direction::D2)
        return {TriCell{a - 1, b, CellKind::Down}, TriCell{a + 1, b, CellKind::Up}};
      break;
    case TileType::Left:
      if (d == Direction::D1)
        return {TriCell{a, b - 1, CellKind::Down}, TriCell{a - 1, b + 1, CellKind::Up}};
      if (d == Direction::D3)
        return {TriCell{a, b, CellKind::Down}, TriCell{a - 1, b, CellKind::Up}};
      break;
    case TileType::Right:
      if (d == Direction::D2)
        return {TriCell{a - 1, b, CellKind::Down}, TriCell{a + 1, b - 1, CellKind::Up}};
      if (d == Direction::D3)
        return {TriCell{a, b, CellKind::Down}, TriCell{a, b - 1, CellKind::Up}};
      break;
  }
  fail(Errc::InvalidArgument, "direction is internal to the tile");
}

bool tiles_overlap(const Tile& x, const Tile& y) {
  const auto [xu, xd] = tile_triangles(x);
  const auto [yu, yd] = tile_triangles(y);
  return xu == yu || xd == yd;
}

bool tiles_edge_adjacent(const Tile& x, const Tile& y) {
  if (tiles_overlap(x, y)) return false;
  const auto [xu, xd] = tile_triangles(x);
  const auto [yu, yd] = tile_triangles(y);
  // Adjacent cells are always an up/down pair.
  for (const TriCell& n : cell_edge_neighbors(xu)) {
    if (n == yd) return true;
  }
  for (const TriCell& n : cell_edge_neighbors(xd)) {
    if (n == yu) return true;
  }
  return false;
}

Direction shared_direction(const Tile& x, const Tile& y) {
  if (!tiles_edge_adjacent(x, y)) {
    fail(Errc::PreconditionFailed, "tiles share no full edge");
  }
  const auto [xu, xd] = tile_triangles(x);
  const auto [yu, yd] = tile_triangles(y);
  // Up(a,b) shares its D3 edge with Down(a,b), its D2 edge with Down(a-1,b),
  // and its D1 edge with Down(a,b-1).
  auto dir_between = [](const TriCell& up, const TriCell& dn) -> std::optional<Direction> {
    if (dn == TriCell{up.a, up.b, CellKind::Down}) return Direction::D3;
    if (dn == TriCell{up.a - 1, up.b, CellKind::Down}) return Direction::D2;
    if (dn == TriCell{up.a, up.b - 1, CellKind::Down}) return Direction::D1;
    return std::nullopt;
  };
  if (auto d = dir_between(xu, yd)) return *d;
  if (auto d = dir_between(yu, xd)) return *d;
  fail(Errc::PreconditionFailed, "tiles share no full edge");
}

bool tiles_touch(const Tile& x, const Tile& y) {
  const auto cx = tile_corners(x);
  const auto cy = tile_corners(y);
  for (const Vertex& v : cx) {
    for (const Vertex& w : cy) {
      if (v == w) return true;
    }
  }
  return false;
}

// --- Point symmetries ---------------------------------------------------------

namespace {

// 2x2 integer matrices acting on column vectors (a,b).  Ops 0..5 are powers of
// the 60-degree rotation R: (a,b) -> (-b, a+b).  Ops 6..11 are R^k composed
// with the reflection M: (a,b) -> (a+b, -b) applied first.
struct Mat {
  int m00, m01, m10, m11;
  friend constexpr bool operator==(const Mat&, const Mat&) = default;
};

constexpr Mat kOpMat[kNumPointOps] = {
    {1, 0, 0, 1},    {0, -1, 1, 1},   {-1, -1, 1, 0},  {-1, 0, 0, -1},
    {0, 1, -1, -1},  {1, 1, -1, 0},   {1, 1, 0, -1},   {0, 1, 1, 0},
    {-1, 0, 1, 1},   {-1, -1, 0, 1},  {0, -1, -1, 0},  {1, 0, -1, -1},
};

constexpr Mat mat_mul(const Mat& f, const Mat& g) {
  return Mat{f.m00 * g.m00 + f.m01 * g.m10, f.m00 * g.m01 + f.m01 * g.m11,
             f.m10 * g.m00 + f.m11 * g.m10, f.m10 * g.m01 + f.m11 * g.m11};
}

int op_of_matrix(const Mat& m) {
  for (int i = 0; i < kNumPointOps; ++i) {
    if (kOpMat[i] == m) return i;
  }
  fail(Errc::InvalidArgument, "matrix is not a lattice point symmetry");
}

struct TileOpEntry {
  int da, db;
  TileType type;
};

// Image of Tile{0,0,type} under each op, computed once from the generic
// cell-level maps; tile images are then linear-map-plus-offset.
const std::array<std::array<TileOpEntry, 3>, kNumPointOps>& tile_op_table() {
  static const auto table = [] {
    std::array<std::array<TileOpEntry, 3>, kNumPointOps> t{};
    for (int op = 0; op < kNumPointOps; ++op) {
      for (int ty = 0; ty < 3; ++ty) {
        const Tile base{0, 0, static_cast<TileType>(ty)};
        const auto [cu, cd] = tile_triangles(base);
        auto map_cell = [op](const TriCell& c) {
          auto vs = cell_vertices(c);
          for (Vertex& v : vs) v = apply_point_op(op, v);
          return cell_from_vertices(vs);
        };
        const Tile img = tile_from_triangles(map_cell(cu), map_cell(cd));
        t[op][ty] = TileOpEntry{img.a, img.b, img.type};
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

Vertex apply_point_op(int op, const Vertex& v) {
  if (op < 0 || op >= kNumPointOps) fail(Errc::InvalidArgument, "bad point op");
  const Mat& m = kOpMat[op];
  return Vertex{m.m00 * v.a + m.m01 * v.b, m.m10 * v.a + m.m11 * v.b};
}

TriCell apply_point_op(int op, const TriCell& c) {
  auto vs = cell_vertices(c);
  for (Vertex& v : vs) v = apply_point_op(op, v);
  return cell_from_vertices(vs);
}

Tile apply_point_op(int op, const Tile& t) {
  if (op < 0 || op >= kNumPointOps) fail(Errc::InvalidArgument, "bad point op");
  const Vertex lin = apply_point_op(op, Vertex{t.a, t.b});
  const TileOpEntry& e = tile_op_table()[op][type_rank(t.type)];
  return Tile{lin.a + e.da, lin.b + e.db, e.type};
}

Direction apply_point_op(int op, Direction d) {
  Vertex v = apply_point_op(op, direction_vector(d));
  if (v.b < 0 || (v.b == 0 && v.a < 0)) {
    v.a = -v.a;
    v.b = -v.b;
  }
  for (Direction e : {Direction::D1, Direction::D2, Direction::D3}) {
    if (direction_vector(e) == v) return e;
  }
  fail(Errc::InvalidArgument, "op image is not an edge direction");
}

int compose_point_ops(int f, int g) {
  if (f < 0 || f >= kNumPointOps || g < 0 || g >= kNumPointOps) {
    fail(Errc::InvalidArgument, "bad point op");
  }
  return op_of_matrix(mat_mul(kOpMat[f], kOpMat[g]));
}

int inverse_point_op(int op) {
  for (int i = 0; i < kNumPointOps; ++i) {
    if (compose_point_ops(op, i) == 0) return i;
  }
  fail(Errc::InvalidArgument, "bad point op");
}

Vertex apply(const Symmetry& s, const Vertex& v) {
  const Vertex w = apply_point_op(s.op, v);
  return Vertex{w.a + s.ta, w.b + s.tb};
}

Tile apply(const Symmetry& s, const Tile& t) {
  Tile w = apply_point_op(s.op, t);
  w.a += s.ta;
  w.b += s.tb;
  return w;
}

// --- Pattern -------------------------------------------------------------------

Pattern Pattern::from_tiles(std::vector<Tile> tiles) {
  std::sort(tiles.begin(), tiles.end(), tile_less);
  for (std::size_t i = 1; i < tiles.size(); ++i) {
    if (tiles[i] == tiles[i - 1]) {
      fail(Errc::InvalidPattern, "duplicate tile in pattern");
    }
  }
  Pattern p;
  p.tiles_ = std::move(tiles);
  std::vector<std::pair<TriCell, int>> cells;
  cells.reserve(p.tiles_.size() * 2);
  for (std::size_t i = 0; i < p.tiles_.size(); ++i) {
    const auto [u, d] = tile_triangles(p.tiles_[i]);
    cells.emplace_back(u, static_cast<int>(i));
    cells.emplace_back(d, static_cast<int>(i));
  }
  std::sort(cells.begin(), cells.end());
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (cells[i].first == cells[i - 1].first) {
      fail(Errc::InvalidPattern, "overlapping tiles in pattern");
    }
  }
  p.cells_.reserve(cells.size());
  p.cell_owner_.reserve(cells.size());
  for (const auto& [c, owner] : cells) {
    p.cells_.push_back(c);
    p.cell_owner_.push_back(owner);
  }
  return p;
}

bool Pattern::contains_tile(const Tile& t) const {
  const auto it = std::lower_bound(tiles_.begin(), tiles_.end(), t, tile_less);
  return it != tiles_.end() && *it == t;
}

int Pattern::tile_index_of_cell(const TriCell& c) const {
  const auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return -1;
  return cell_owner_[static_cast<std::size_t>(it - cells_.begin())];
}

Pattern Pattern::translated(int da, int db) const {
  std::vector<Tile> ts = tiles_;
  for (Tile& t : ts) {
    t.a += da;
    t.b += db;
  }
  return from_tiles(std::move(ts));
}

Pattern apply_symmetry(const Pattern& p, const Symmetry& s) {
  std::vector<Tile> ts = p.tiles();
  for (Tile& t : ts) t = apply(s, t);
  return Pattern::from_tiles(std::move(ts));
}

// --- Canonical form --------------------------------------------------------------

namespace {

struct CanonScan {
  std::vector<std::uint32_t> best;   // canonical sorted key vector
  std::vector<Symmetry> achievers;   // point op + translation reaching best
};

CanonScan canon_scan(const Pattern& p) {
  if (p.empty()) fail(Errc::InvalidPattern, "canonical form of empty pattern");
  CanonScan out;
  std::vector<Tile> img(p.tiles().size());
  std::vector<std::uint32_t> keys(p.tiles().size());
  for (int op = 0; op < kNumPointOps; ++op) {
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = apply_point_op(op, p.tiles()[i]);
    }
    // Anchor: minimal (b, a, rank) tile of the image moves to (0,0).
    const Tile* anchor = &img[0];
    for (const Tile& t : img) {
      if (std::tuple{t.b, t.a, type_rank(t.type)} <
          std::tuple{anchor->b, anchor->a, type_rank(anchor->type)}) {
        anchor = &t;
      }
    }
    const int ta = -anchor->a, tb = -anchor->b;
    for (std::size_t i = 0; i < img.size(); ++i) {
      keys[i] = tile_key(Tile{img[i].a + ta, img[i].b + tb, img[i].type});
    }
    std::sort(keys.begin(), keys.end());
    if (out.best.empty() || keys < out.best) {
      out.best = keys;
      out.achievers.clear();
      out.achievers.push_back(Symmetry{op, ta, tb});
    } else if (keys == out.best) {
      out.achievers.push_back(Symmetry{op, ta, tb});
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> canonical_key(const Pattern& p) {
  return canon_scan(p).best;
}

Pattern canonical_form(const Pattern& p) {
  const auto scan = canon_scan(p);
  std::vector<Tile> tiles;
  tiles.reserve(scan.best.size());
  for (std::uint32_t k : scan.best) tiles.push_back(tile_from_key(k));
  return Pattern::from_tiles(std::move(tiles));
}

std::vector<Symmetry> canonizing_symmetries(const Pattern& p) {
  return canon_scan(p).achievers;
}

// --- Hexagon windows -----------------------------------------------------------

bool vertex_in_hexagon(const Vertex& v, int m) {
  return std::abs(v.a) <= m && std::abs(v.b) <= m && std::abs(v.a + v.b) <= m;
}

bool cell_in_hexagon(const TriCell& c, int m) {
  for (const Vertex& v : cell_vertices(c)) {
    if (!vertex_in_hexagon(v, m)) return false;
  }
  return true;
}

bool tile_in_hexagon(const Tile& t, int m) {
  const auto [u, d] = tile_triangles(t);
  return cell_in_hexagon(u, m) && cell_in_hexagon(d, m);
}

std::vector<TriCell> hexagon_cells(int m) {
  std::vector<TriCell> out;
  for (int a = -m - 1; a <= m; ++a) {
    for (int b = -m - 1; b <= m; ++b) {
      for (CellKind k : {CellKind::Up, CellKind::Down}) {
        const TriCell c{a, b, k};
        if (cell_in_hexagon(c, m)) out.push_back(c);
      }
    }
  }
  return out;
}

}  // namespace tredoku
