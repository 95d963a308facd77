#include "tredoku/construct.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace tredoku {

namespace {

constexpr Tile T(int a, int b) { return Tile{a, b, TileType::Top}; }
constexpr Tile L(int a, int b) { return Tile{a, b, TileType::Left}; }
constexpr Tile R(int a, int b) { return Tile{a, b, TileType::Right}; }

void append(std::vector<Tile>& out, const std::vector<Tile>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// --- Shared building blocks for the infinite families -------------------------
//
// The spine of every family is a staircase of Right tiles climbing to the
// north-west; caps of fixed shape close it off at either end so that every
// run reaches length 3 except for the intended leaves.

// 4 + 3*s Right tiles; the last (north-west) tile sits at
// (x0 - (s+1), 2*s + 2).
std::vector<Tile> staircase(int x0, int s) {
  std::vector<Tile> out = {R(x0, 0), R(x0, 1)};
  for (int k = 1; k <= s; ++k) {
    out.push_back(R(x0 - k, 2 * k - 1));
    out.push_back(R(x0 - k, 2 * k));
    out.push_back(R(x0 - k, 2 * k + 1));
  }
  out.push_back(R(x0 - (s + 1), 2 * s + 1));
  out.push_back(R(x0 - (s + 1), 2 * s + 2));
  return out;
}

// Closes the south-east end leaving no leaves (7 tiles).
std::vector<Tile> bottom_cap7(int x0) {
  return {L(x0, -1),     T(x0 + 1, -1), T(x0, -2),    R(x0 + 1, -2),
          L(x0 + 2, -2), T(x0 + 2, -3), L(x0 + 1, -3)};
}

// Closes the south-east end leaving exactly one leaf (9 tiles).
std::vector<Tile> bottom_cap9(int x0) {
  return {L(x0, -1),     R(x0 + 1, -1), R(x0 + 1, -2), R(x0 + 1, -3), R(x0 + 2, -4),
          L(x0 + 3, -4), T(x0 + 3, -5), R(x0 + 3, -3), T(x0 + 2, -3)};
}

// Closes the south-east end leaving two leaves (2 tiles).
std::vector<Tile> bottom_cap2(int x0) { return {L(x0, -1), T(x0 + 1, -1)}; }

// Closes the north-west end (last staircase tile at (xl, yl)) with no leaves.
std::vector<Tile> top_cap7(int xl, int yl) {
  return {L(xl + 1, yl),     T(xl - 1, yl), L(xl - 1, yl + 1), T(xl, yl + 1),
          R(xl - 1, yl + 2), L(xl, yl + 2), T(xl - 2, yl + 2)};
}

// Closes the north-west end leaving two leaves.
std::vector<Tile> top_cap2(int xl, int yl) { return {L(xl + 1, yl), T(xl - 1, yl)}; }

// Family with 0 leaves and 18 + 3*i tiles.
std::vector<Tile> family_leaves0(int i) {
  std::vector<Tile> out = bottom_cap7(0);
  append(out, staircase(0, i));
  append(out, top_cap7(-(i + 1), 2 * i + 2));
  return out;
}

// Family with 1 leaf and 20 + 3*i tiles.
std::vector<Tile> family_leaves1(int i) {
  std::vector<Tile> out = bottom_cap9(0);
  append(out, staircase(0, i));
  append(out, top_cap7(-(i + 1), 2 * i + 2));
  return out;
}

// Family with 2 leaves and 13 + 3*i tiles.
std::vector<Tile> family_leaves2(int i) {
  std::vector<Tile> out = bottom_cap2(0);
  append(out, staircase(0, i));
  append(out, top_cap7(-(i + 1), 2 * i + 2));
  return out;
}

// Family with 3 leaves and 15 + 3*i tiles.
std::vector<Tile> family_leaves3(int i) {
  std::vector<Tile> out = top_cap2(-(i + 1), 2 * i + 2);
  append(out, staircase(0, i));
  append(out, bottom_cap9(0));
  return out;
}

// Family with 4 leaves and 11 + 3*i tiles; the designated extendable leaf is
// Right(1,-1).
std::vector<Tile> family_leaves4(int i) {
  const int s = i + 1;
  std::vector<Tile> out = top_cap2(-(s + 1), 2 * s + 2);
  append(out, staircase(0, s));
  append(out, {L(1, 1), R(1, -1)});
  return out;
}

// --- Small fixed instances ------------------------------------------------------

// Zero leaves, 9 tiles.
const std::vector<Tile> kZeroLeaf9 = {
    R(-10, 0),  R(-10, -1), R(-10, -2), T(-9, -1), T(-9, -2),
    T(-9, -3),  T(-11, 0),  T(-11, -1), T(-11, -2)};

// Zero leaves, 15 tiles.
const std::vector<Tile> kZeroLeaf15 = {
    R(0, 0),  R(0, -1), R(0, -2), R(-1, -1), R(-1, 0), T(-2, -1), T(-2, 0), L(-1, -2),
    R(1, -1), R(2, -2), R(1, 0),  R(2, -1),  L(3, -1), L(2, 0),   T(3, -2)};

// One leaf: 8, 11, 14, 17 tiles.
const std::vector<Tile> kOneLeaf8 = {L(0, 0),  T(1, 0),  R(0, 1),  L(1, 1),
                                     T(-1, 1), T(-1, 2), T(0, 2),  T(-2, 2)};
const std::vector<Tile> kOneLeaf11 = {R(6, 1), R(6, 2), R(6, 3), R(5, 2), R(5, 3), R(5, 4),
                                      T(4, 2), L(4, 3), R(4, 4), R(4, 5), L(3, 4)};
const std::vector<Tile> kOneLeaf14 = {R(11, 1), L(11, 0), T(12, 0), T(10, 1), L(12, 1),
                                      L(10, 2), T(11, 2), T(12, 2), T(13, 2), T(13, 3),
                                      L(12, 3), R(12, 4), L(13, 4), T(11, 4)};
const std::vector<Tile> kOneLeaf17 = {T(17, 0), R(19, 0), T(18, 0), T(18, 1), T(19, 1),
                                      T(18, 2), T(19, 2), T(17, 1), T(17, 2), T(19, 3),
                                      T(20, 3), T(21, 3), T(21, 4), L(20, 4), R(20, 5),
                                      L(21, 5), T(19, 5)};

// Two leaves: 7 and 10 tiles.
const std::vector<Tile> kTwoLeaf7 = {L(-4, -1), T(-6, -1), L(-6, 0), T(-5, 0),
                                     R(-6, 1),  L(-5, 1),  T(-7, 1)};
const std::vector<Tile> kTwoLeaf10 = {R(0, 0),  R(0, 1),  R(0, 2),  R(-1, 1), R(-1, 2),
                                      R(-1, 3), R(1, -1), L(-2, 2), R(-2, 3), R(-2, 4)};

// Three leaves: 6, 9, 12 tiles.
const std::vector<Tile> kThreeLeaf6 = {T(-1, 0), T(-1, 1), R(-2, 2),
                                       R(-3, 3), L(-1, 2), L(0, 2)};
const std::vector<Tile> kThreeLeaf9 = {L(6, 0), L(7, 0), R(5, 0), T(3, 3), L(4, 1),
                                       T(5, 1), R(4, 2), L(5, 2), T(3, 2)};
const std::vector<Tile> kThreeLeaf12 = {R(12, 0), R(12, 1), R(12, 2), R(11, 1),
                                        R(11, 2), R(11, 3), R(13, -1), L(14, -1),
                                        R(13, -2), L(10, 2), R(10, 3), R(10, 4)};

// Four leaves, 8 tiles; the designated extendable leaf is Right(1,-1).
const std::vector<Tile> kFourLeaf8 = {R(-1, 3), T(-2, 2), L(1, 1),  R(0, 0),
                                      R(0, 1),  R(-1, 1), R(-1, 2), R(1, -1)};

// --- Maximum-leaf catalog ---------------------------------------------------------

// Four 5-tile patterns, then 7, 9, two 11s, two 13s, 17.
const std::vector<std::vector<Tile>> kVerdantCatalog = {
    /* 5a */ {R(0, 0), R(0, 1), R(0, -1), R(1, -1), R(-1, 1)},
    /* 5b */ {R(0, 0), R(0, 1), R(0, -1), T(1, -1), R(-1, 1)},
    /* 5c */ {R(0, 0), R(0, 1), R(0, -1), T(1, -1), T(-1, 0)},
    /* 5d */ {R(0, 0), R(0, 1), L(0, -1), T(1, -1), R(-1, 1)},
    /* 7 */
    {R(0, 0), R(0, 1), R(0, 2), R(1, -1), T(-1, 0), R(-1, 2), T(1, 0)},
    /* 9 */
    {R(0, 0), R(0, 1), R(1, 0), L(1, 1), T(-1, 1), L(-1, 2), R(-1, 3), L(-2, 2), L(-2, 3)},
    /* 11a */
    {R(0, 0), R(0, 1), R(0, 2), R(-1, 3), R(-1, 4), R(-1, 5), T(1, 0), T(-1, 1), T(-2, 3),
     R(-2, 5), T(0, 3)},
    /* 11b */
    {R(0, 0), R(0, 1), R(0, 2), R(-1, 3), R(-1, 4), R(-1, 5), R(1, 0), T(-1, 1), T(-2, 3),
     R(-2, 5), T(0, 3)},
    /* 13a */
    {R(0, 0), R(-1, 1), R(-2, 2), R(-2, 3), R(-3, 4), R(-3, 5), R(-4, 6), R(-3, 6),
     T(-2, 4), T(-4, 4), L(-2, 1), R(-1, 0), L(0, 1)},
    /* 13b */
    {R(-2, 3), R(-3, 4), R(-3, 5), R(-4, 6), R(-3, 6), T(-2, 4), T(-4, 4), L(-2, 2),
     L(-3, 2), R(-2, 1), L(-1, 1), L(0, 1), L(0, 0)},
    /* 17 */
    {R(0, 0), R(0, 1), R(0, 2), R(1, -1), T(-1, 0), R(-1, 2), T(1, 0), R(1, -2), R(1, -3),
     T(0, -2), T(2, -3), R(2, -4), R(2, -5), R(2, -6), T(1, -5), R(3, -6), T(3, -5)},
};

// Catalog index of the representative used by construct() on the
// maximum-leaf diagonal, by tile count.
int catalog_index_for_tiles(int tau) {
  switch (tau) {
    case 5: return 0;
    case 7: return 4;
    case 9: return 5;
    case 11: return 6;
    case 13: return 8;
    case 17: return 10;
  }
  return -1;
}

bool is_sporadic_tredoku(const ParameterTriple& t) {
  static const std::set<std::tuple<int, int, int>> fixed = {
      {3, 1, 3}, {3, 2, 0}, {4, 2, 2}, {5, 3, 1}, {6, 4, 0}, {12, 8, 0}, {15, 7, 9}};
  if (fixed.count({t.tiles, t.runs3, t.leaves})) return true;
  // The whole maximum-leaf diagonal beyond 17 tiles.
  return t.runs3 >= 9 && t.tiles == 2 * t.runs3 + 1 && t.leaves == t.runs3 + 2;
}

bool is_sporadic_weak(const ParameterTriple& t) {
  static const std::set<std::tuple<int, int, int>> fixed = {
      {3, 2, 0}, {4, 2, 2}, {5, 3, 1}, {6, 4, 0}, {12, 8, 0}};
  return fixed.count({t.tiles, t.runs3, t.leaves}) > 0;
}

ParamClass classify_impl(const ParameterTriple& t, bool weak) {
  if (t.tiles < 3 || t.runs3 < 0 || t.leaves < 0 || t.leaves > t.tiles ||
      t.leaves != 2 * t.tiles - 3 * t.runs3) {
    return ParamClass::Infeasible;
  }
  if (t.leaves > (t.tiles + 1) / 2 + 1) {
    return ParamClass::ExcludedByLeafBound;
  }
  if (weak ? is_sporadic_weak(t) : is_sporadic_tredoku(t)) {
    return ParamClass::ExcludedSporadic;
  }
  return ParamClass::Exists;
}

std::string triple_str(const ParameterTriple& t) {
  std::ostringstream os;
  os << "(" << t.tiles << ", " << t.runs3 << ", " << t.leaves << ")";
  return os.str();
}

// --- Two-leaf staircase template ---------------------------------------------------
//
// In the normalised frame the extendable leaf is Right(0,0) with its
// length-1 direction D3.  Step m adds two tiles, performing one two-leaf
// extension at the previous step's south-east leaf; coordinates are
// cumulative in the fixed frame.
std::pair<Tile, Tile> template_step(int m) {
  if (m % 2 == 1) {
    const int k = (m - 1) / 2;
    return {L(1 + k, -2 * k), R(k, -1 - 2 * k)};
  }
  const int k = m / 2;
  return {R(k, -2 * k), T(k - 2, -2 * k + 1)};
}

// The single length-3 run through tile index i, if any (leaf tiles have
// exactly one in a connected pattern of 3+ tiles).
struct LeafRuns {
  Direction dir1;  // direction of the length-1 run
  Direction dir3;  // direction of the length-3 run
};
LeafRuns leaf_runs(const Pattern& p, int leaf_index) {
  std::optional<Direction> d1, d3;
  for (const Run& r : maximal_runs(p)) {
    if (std::find(r.tiles.begin(), r.tiles.end(), leaf_index) == r.tiles.end()) continue;
    if (r.length() == 1) d1 = r.dir;
    if (r.length() == 3) d3 = r.dir;
  }
  if (!d1 || !d3) {
    fail(Errc::PreconditionFailed, "tile is not a leaf with a crossing length-3 run");
  }
  return LeafRuns{*d1, *d3};
}

}  // namespace

const char* to_string(ParamClass c) {
  switch (c) {
    case ParamClass::Infeasible: return "infeasible";
    case ParamClass::ExcludedByLeafBound: return "excluded by the leaf bound";
    case ParamClass::ExcludedSporadic: return "excluded sporadic";
    case ParamClass::Exists: return "exists";
  }
  return "?";
}

ParamClass classify_parameters(const ParameterTriple& t) { return classify_impl(t, false); }
ParamClass classify_weak_parameters(const ParameterTriple& t) { return classify_impl(t, true); }

std::vector<Pattern> verdant_catalog() {
  std::vector<Pattern> out;
  out.reserve(kVerdantCatalog.size());
  for (const auto& tiles : kVerdantCatalog) out.push_back(Pattern::from_tiles(tiles));
  return out;
}

Pattern weak_staircase(int rho) {
  if (rho < 1) fail(Errc::InvalidArgument, "weak_staircase requires rho >= 1");
  std::vector<Tile> tiles = {T(0, 0)};
  int a = 0, b = 0;
  for (int k = 1; k <= rho; ++k) {
    if (k % 2 == 1) {
      tiles.push_back(T(a, b + 1));
      tiles.push_back(T(a, b + 2));
      b += 2;
    } else {
      tiles.push_back(T(a - 1, b));
      tiles.push_back(T(a - 2, b));
      a -= 2;
    }
  }
  return Pattern::from_tiles(std::move(tiles));
}

Pattern construct(const ParameterTriple& t) {
  const ParamClass cls = classify_parameters(t);
  if (cls != ParamClass::Exists) {
    fail(Errc::PreconditionFailed,
         "construct" + triple_str(t) + ": parameters are " + to_string(cls));
  }
  const int tau = t.tiles, ell = t.leaves;

  // Maximum-leaf diagonal: serve the catalog representative.
  if (ell == (tau + 1) / 2 + 1) {
    const int idx = catalog_index_for_tiles(tau);
    if (idx < 0) {
      fail(Errc::PreconditionFailed,
           "construct" + triple_str(t) + ": no maximum-leaf pattern of this size");
    }
    return Pattern::from_tiles(kVerdantCatalog[static_cast<std::size_t>(idx)]);
  }

  switch (ell) {
    case 0:
      if (tau == 9) return Pattern::from_tiles(kZeroLeaf9);
      if (tau == 15) return Pattern::from_tiles(kZeroLeaf15);
      return Pattern::from_tiles(family_leaves0((tau - 18) / 3));
    case 1:
      if (tau == 8) return Pattern::from_tiles(kOneLeaf8);
      if (tau == 11) return Pattern::from_tiles(kOneLeaf11);
      if (tau == 14) return Pattern::from_tiles(kOneLeaf14);
      if (tau == 17) return Pattern::from_tiles(kOneLeaf17);
      return Pattern::from_tiles(family_leaves1((tau - 20) / 3));
    case 2:
      if (tau == 7) return Pattern::from_tiles(kTwoLeaf7);
      if (tau == 10) return Pattern::from_tiles(kTwoLeaf10);
      return Pattern::from_tiles(family_leaves2((tau - 13) / 3));
    case 3:
      if (tau == 6) return Pattern::from_tiles(kThreeLeaf6);
      if (tau == 9) return Pattern::from_tiles(kThreeLeaf9);
      if (tau == 12) return Pattern::from_tiles(kThreeLeaf12);
      return Pattern::from_tiles(family_leaves3((tau - 15) / 3));
    case 4:
      if (tau == 8) return Pattern::from_tiles(kFourLeaf8);
      return Pattern::from_tiles(family_leaves4((tau - 11) / 3));
    default: {
      // ell >= 5 off the diagonal: grow a 4-leaf base by ell-4 staircase
      // steps at its designated leaf (one extra leaf per step).
      const int k = ell - 4;
      const ParameterTriple base{tau - 2 * k, t.runs3 - k, 4};
      return extend_at_leaf(construct(base), R(1, -1), k);
    }
  }
}

std::vector<std::pair<Tile, Tile>> two_leaf_placements(const Pattern& p, const Tile& leaf) {
  if (!p.contains_tile(leaf)) {
    fail(Errc::PreconditionFailed, "two_leaf_placements: tile is not in the pattern");
  }
  int leaf_index = -1;
  for (int i = 0; i < p.size(); ++i) {
    if (p.tiles()[i] == leaf) leaf_index = i;
  }
  const std::vector<int> lv = leaves(p);
  if (!std::binary_search(lv.begin(), lv.end(), leaf_index)) {
    fail(Errc::PreconditionFailed, "two_leaf_placements: tile is not a leaf");
  }
  const Direction d1 = leaf_runs(p, leaf_index).dir1;

  // Vertices already used by the pattern; new tiles may only touch them at
  // corners of the leaf itself.
  std::set<Vertex> used;
  for (const Tile& t : p.tiles()) {
    for (const Vertex& v : tile_corners(t)) used.insert(v);
  }
  const auto leaf_corners = tile_corners(leaf);
  auto admissible = [&](const Tile& s) {
    const auto [cu, cd] = tile_triangles(s);
    if (p.covers_cell(cu) || p.covers_cell(cd)) return false;
    for (const Vertex& v : tile_corners(s)) {
      if (used.count(v) && !std::count(leaf_corners.begin(), leaf_corners.end(), v)) {
        return false;
      }
    }
    return true;
  };

  // Candidates per side: the across cell X plus one of its two remaining
  // neighbours (the third neighbour of X is the leaf's own triangle).
  const auto sides = across_cells(leaf, d1);
  std::array<std::vector<Tile>, 2> cand;
  for (int s = 0; s < 2; ++s) {
    const TriCell x = sides[s];
    if (p.covers_cell(x)) continue;  // cannot happen for a true leaf
    for (const TriCell& y : cell_edge_neighbors(x)) {
      if (p.covers_cell(y)) continue;
      const Tile cand_tile = tile_from_triangles(x, y);
      if (tiles_overlap(cand_tile, leaf)) continue;
      if (admissible(cand_tile)) cand[static_cast<std::size_t>(s)].push_back(cand_tile);
    }
  }

  std::vector<std::pair<Tile, Tile>> out;
  for (const Tile& s1 : cand[0]) {
    for (const Tile& s2 : cand[1]) {
      if (tiles_overlap(s1, s2)) continue;
      // Validate the full extension before advertising the placement.
      std::vector<Tile> tiles = p.tiles();
      tiles.push_back(s1);
      tiles.push_back(s2);
      Pattern q;
      try {
        q = Pattern::from_tiles(std::move(tiles));
      } catch (const Error&) {
        continue;
      }
      const PatternStats before = stats(p), after = stats(q);
      if (is_tredoku(q) && after.tiles == before.tiles + 2 &&
          after.runs3 == before.runs3 + 1 && after.leaves == before.leaves + 1) {
        out.emplace_back(s1, s2);
      }
    }
  }
  return out;
}

Pattern two_leaf_extension(const Pattern& p, const Tile& leaf,
                           const std::pair<Tile, Tile>& placement) {
  const auto options = two_leaf_placements(p, leaf);
  auto same = [](const std::pair<Tile, Tile>& x, const std::pair<Tile, Tile>& y) {
    return (x.first == y.first && x.second == y.second) ||
           (x.first == y.second && x.second == y.first);
  };
  for (const auto& opt : options) {
    if (same(opt, placement)) {
      std::vector<Tile> tiles = p.tiles();
      tiles.push_back(placement.first);
      tiles.push_back(placement.second);
      return Pattern::from_tiles(std::move(tiles));
    }
  }
  fail(Errc::GeometryBlocked,
       "two_leaf_extension: placement is not admissible at this leaf (cells occupied, "
       "foreign vertex contact, or the result fails validation)");
}

Pattern extend_at_leaf(const Pattern& p, const Tile& leaf, int j) {
  if (j < 1) fail(Errc::InvalidArgument, "extend_at_leaf requires j >= 1");
  if (!is_tredoku(p)) {
    fail(Errc::PreconditionFailed, "extend_at_leaf requires a tredoku pattern");
  }
  if (!p.contains_tile(leaf)) {
    fail(Errc::PreconditionFailed, "extend_at_leaf: tile is not in the pattern");
  }
  int leaf_index = -1;
  for (int i = 0; i < p.size(); ++i) {
    if (p.tiles()[i] == leaf) leaf_index = i;
  }
  const std::vector<int> lv = leaves(p);
  if (!std::binary_search(lv.begin(), lv.end(), leaf_index)) {
    fail(Errc::PreconditionFailed, "extend_at_leaf: tile is not a leaf");
  }
  const Direction d1 = leaf_runs(p, leaf_index).dir1;

  const PatternStats before = stats(p);
  // Try the normalisations taking (leaf, d1) to (Right(0,0), D3); the two
  // solutions are mirror images, and a staircase might fit in only one.
  for (int op = 0; op < kNumPointOps; ++op) {
    const Tile img = apply_point_op(op, leaf);
    if (img.type != TileType::Right) continue;
    if (apply_point_op(op, d1) != Direction::D3) continue;
    const Symmetry phi{op, -img.a, -img.b};
    const Symmetry inv{inverse_point_op(op),
                       -apply_point_op(inverse_point_op(op), Vertex{phi.ta, phi.tb}).a,
                       -apply_point_op(inverse_point_op(op), Vertex{phi.ta, phi.tb}).b};
    std::vector<Tile> tiles = p.tiles();
    bool ok = true;
    for (int m = 1; m <= j && ok; ++m) {
      const auto [s1, s2] = template_step(m);
      for (const Tile& s : {s1, s2}) {
        const Tile placed = apply(inv, s);
        for (const Tile& existing : tiles) {
          if (tiles_overlap(existing, placed)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        tiles.push_back(placed);
      }
    }
    if (!ok) continue;
    Pattern q;
    try {
      q = Pattern::from_tiles(std::move(tiles));
    } catch (const Error&) {
      continue;
    }
    const PatternStats after = stats(q);
    if (is_tredoku(q) && after.tiles == before.tiles + 2 * j &&
        after.runs3 == before.runs3 + j && after.leaves == before.leaves + j) {
      return q;
    }
  }
  fail(Errc::GeometryBlocked,
       "extend_at_leaf: no staircase orientation fits at this leaf");
}

Pattern merge_patterns(const Pattern& p1, const Pattern& p2, const Tile& t) {
  if (!is_tredoku(p1) || !is_tredoku(p2)) {
    fail(Errc::PreconditionFailed, "merge_patterns requires two tredoku patterns");
  }
  if (!p1.contains_tile(t) || !p2.contains_tile(t)) {
    fail(Errc::PreconditionFailed, "merge_patterns: tile must belong to both patterns");
  }
  auto index_of = [](const Pattern& p, const Tile& x) {
    for (int i = 0; i < p.size(); ++i) {
      if (p.tiles()[i] == x) return i;
    }
    return -1;
  };
  const int i1 = index_of(p1, t), i2 = index_of(p2, t);
  const std::vector<int> lv1 = leaves(p1), lv2 = leaves(p2);
  if (!std::binary_search(lv1.begin(), lv1.end(), i1) ||
      !std::binary_search(lv2.begin(), lv2.end(), i2)) {
    fail(Errc::PreconditionFailed, "merge_patterns: tile must be a leaf of both patterns");
  }
  const LeafRuns r1 = leaf_runs(p1, i1), r2 = leaf_runs(p2, i2);
  if (r1.dir3 == r2.dir3) {
    fail(Errc::PreconditionFailed,
         "merge_patterns: the length-3 runs through the shared leaf must differ in "
         "direction");
  }
  // Tiles overlap exactly in t.
  for (const TriCell& c : p1.cells()) {
    if (p2.covers_cell(c)) {
      const auto [cu, cd] = tile_triangles(t);
      if (c != cu && c != cd) {
        fail(Errc::PreconditionFailed,
             "merge_patterns: patterns overlap outside the shared tile");
      }
    }
  }
  // Vertex contact only at corners of t.
  std::set<Vertex> v2;
  for (const Tile& x : p2.tiles()) {
    for (const Vertex& v : tile_corners(x)) v2.insert(v);
  }
  const auto tc = tile_corners(t);
  for (const Tile& x : p1.tiles()) {
    for (const Vertex& v : tile_corners(x)) {
      if (v2.count(v) && !std::count(tc.begin(), tc.end(), v)) {
        fail(Errc::PreconditionFailed,
             "merge_patterns: patterns share a vertex away from the shared tile");
      }
    }
  }
  std::vector<Tile> tiles = p1.tiles();
  for (const Tile& x : p2.tiles()) {
    if (!(x == t)) tiles.push_back(x);
  }
  Pattern q = Pattern::from_tiles(std::move(tiles));
  const PatternStats s1 = stats(p1), s2 = stats(p2), sq = stats(q);
  if (!is_tredoku(q) || sq.tiles != s1.tiles + s2.tiles - 1 ||
      sq.runs3 != s1.runs3 + s2.runs3 || sq.leaves != s1.leaves + s2.leaves - 2) {
    fail(Errc::GeometryBlocked, "merge_patterns: glued pattern failed validation");
  }
  return q;
}

}  // namespace tredoku
