// Analysis tests against hand-derived fixtures: run decomposition, leaf
// detection, counting identities, Euler characteristic / holes, corner fans,
// and the validity predicates.
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tredoku/analysis.hpp"

using namespace tredoku;

namespace {

Pattern make(const std::vector<Tile>& ts) { return Pattern::from_tiles(ts); }

// 7 tiles, 4 length-3 runs, 2 leaves; the leaves are Left(2,-2) and Top(1,1).
const std::vector<Tile> kExample7 = {
    {0, 0, TileType::Right}, {1, 0, TileType::Left}, {2, 0, TileType::Left},
    {1, -1, TileType::Top},  {2, -1, TileType::Top}, {2, -2, TileType::Left},
    {1, 1, TileType::Top},
};

// A single vertical length-3 run: every tile is a leaf, the middle one at the
// centre of the run, so the pattern is weak but not removal-connected.
const std::vector<Tile> kColumn3 = {
    {0, 0, TileType::Top}, {1, 0, TileType::Top}, {2, 0, TileType::Top}};

// Three rhombi joined only at corners around the uncovered cell Up(0,0):
// edge-disconnected, Euler characteristic 0.
const std::vector<Tile> kPinwheel = {
    {1, 0, TileType::Left}, {-1, 0, TileType::Top}, {0, -1, TileType::Top}};

// Ten tiles encircling the uncovered cell Up(0,0), closing the loop through a
// single shared corner at v(1,0): all runs have length 1 or 3, the tile graph
// is connected, but the covered region has a hole (and the corner v(1,0) is
// singular).
const std::vector<Tile> kHoled10 = {
    {1, 0, TileType::Left},  {0, 1, TileType::Left},  {-1, 1, TileType::Left},
    {-1, 0, TileType::Top},  {-1, -1, TileType::Top}, {0, -1, TileType::Top},
    {-1, 2, TileType::Top},  {0, 2, TileType::Right}, {1, 1, TileType::Top},
    {-2, 0, TileType::Right},
};

// Maximum-leaf 5-tile pattern: two crossing length-3 runs sharing the centre.
const std::vector<Tile> kVerdant5 = {
    {0, 0, TileType::Right},  {0, 1, TileType::Right}, {0, -1, TileType::Right},
    {1, -1, TileType::Right}, {-1, 1, TileType::Right},
};

int run_membership_total(const Pattern& p) {
  int total = 0;
  for (const Run& r : maximal_runs(p)) total += r.length();
  return total;
}

}  // namespace

TEST_CASE("run decomposition of the 7-tile example") {
  const Pattern p = make(kExample7);
  const auto runs = maximal_runs(p);
  CHECK(run_membership_total(p) == 2 * p.size());

  // Expected runs as tile sets (order-insensitive).
  auto tiles_of = [&](const Run& r) {
    std::set<std::uint32_t> s;
    for (int i : r.tiles) s.insert(tile_key(p.tiles()[i]));
    return s;
  };
  auto key_set = [](const std::vector<Tile>& ts) {
    std::set<std::uint32_t> s;
    for (const Tile& t : ts) s.insert(tile_key(t));
    return s;
  };
  std::vector<std::set<std::uint32_t>> got3, got1;
  for (const Run& r : runs) {
    REQUIRE((r.length() == 1 || r.length() == 3));
    (r.length() == 3 ? got3 : got1).push_back(tiles_of(r));
  }
  REQUIRE(got3.size() == 4);
  REQUIRE(got1.size() == 2);
  const std::vector<std::vector<Tile>> want3 = {
      {{0, 0, TileType::Right}, {1, 0, TileType::Left}, {2, 0, TileType::Left}},
      {{2, -1, TileType::Top}, {2, 0, TileType::Left}, {1, 1, TileType::Top}},
      {{1, 0, TileType::Left}, {1, -1, TileType::Top}, {2, -2, TileType::Left}},
      {{0, 0, TileType::Right}, {1, -1, TileType::Top}, {2, -1, TileType::Top}},
  };
  for (const auto& w : want3) {
    CHECK(std::count(got3.begin(), got3.end(), key_set(w)) == 1);
  }
  const std::vector<std::vector<Tile>> want1 = {
      {{2, -2, TileType::Left}}, {{1, 1, TileType::Top}}};
  for (const auto& w : want1) {
    CHECK(std::count(got1.begin(), got1.end(), key_set(w)) == 1);
  }

  // Each run is a chain of consecutive tiles sharing edges of its direction.
  for (const Run& r : runs) {
    for (std::size_t i = 0; i + 1 < r.tiles.size(); ++i) {
      const Tile& x = p.tiles()[r.tiles[i]];
      const Tile& y = p.tiles()[r.tiles[i + 1]];
      CHECK(tiles_edge_adjacent(x, y));
      CHECK(shared_direction(x, y) == r.dir);
    }
  }
}

TEST_CASE("stats and leaves of the 7-tile example") {
  const Pattern p = make(kExample7);
  const PatternStats s = stats(p);
  CHECK(s.tiles == 7);
  CHECK(s.runs3 == 4);
  CHECK(s.leaves == 2);
  CHECK(3 * s.runs3 + s.leaves == 2 * s.tiles);
  CHECK(s.type_counts == std::array<int, 3>{3, 3, 1});
  CHECK(s.runs3_by_leaf_count == std::array<int, 4>{2, 2, 0, 0});
  const auto lv = leaves(p);
  REQUIRE(lv.size() == 2);
  CHECK(p.tiles()[lv[0]] == Tile{2, -2, TileType::Left});
  CHECK(p.tiles()[lv[1]] == Tile{1, 1, TileType::Top});

  CHECK(is_weak_tredoku(p));
  CHECK(is_tredoku(p));
  CHECK(is_tredoku_via_leaf_rule(p));
  CHECK(is_generalized_tredoku(p));
  CHECK(is_nonsingular(p));
  CHECK(is_removal_connected(p));
  CHECK(euler_characteristic(p) == 1);
  CHECK(is_simply_connected(p));
  CHECK(preece_inequality_holds(p));
  CHECK(!is_verdant(p));
  CHECK(!first_violation(p, Strictness::Tredoku).has_value());
  CHECK(!first_violation(p, Strictness::Weak).has_value());
  CHECK(!first_violation(p, Strictness::Generalized).has_value());
}

TEST_CASE("single length-3 run: weak but not tredoku") {
  const Pattern p = make(kColumn3);
  const PatternStats s = stats(p);
  CHECK(s.tiles == 3);
  CHECK(s.runs3 == 1);
  CHECK(s.leaves == 3);
  CHECK(s.runs3_by_leaf_count == std::array<int, 4>{0, 0, 0, 1});
  CHECK(is_weak_tredoku(p));
  CHECK(!is_tredoku(p));
  CHECK(!is_tredoku_via_leaf_rule(p));
  CHECK(!is_removal_connected(p));
  // Weak implies nonsingular.
  CHECK(is_nonsingular(p));
  const auto v = first_violation(p, Strictness::Tredoku);
  REQUIRE(v.has_value());
  CHECK(v->condition == 4);
  CHECK(v->message == "Condition 4: removal of centre tile disconnects");
  CHECK(!first_violation(p, Strictness::Weak).has_value());
  CHECK_THROWS_AS((void)is_verdant(p), Error);
}

TEST_CASE("run length violations") {
  const Pattern p = make({{0, 0, TileType::Top}, {1, 0, TileType::Top}});
  CHECK(!check_run_lengths(p));
  CHECK_THROWS_AS((void)leaves(p), Error);
  const PatternStats s = stats(p);  // stats stays total
  CHECK(s.run_length_hist.at(2) == 1);
  CHECK(s.run_length_hist.at(1) == 2);
  const auto v = first_violation(p, Strictness::Weak);
  REQUIRE(v.has_value());
  CHECK(v->condition == 0);  // two tiles: below the minimum size
  const Pattern q =
      make({{0, 0, TileType::Top}, {1, 0, TileType::Top}, {1, 1, TileType::Top}});
  const auto vq = first_violation(q, Strictness::Weak);
  REQUIRE(vq.has_value());
  CHECK(vq->condition == 1);
  CHECK(vq->message == "Condition 1: a maximal run has length 2");
}

TEST_CASE("pinwheel: corner contact only") {
  const Pattern p = make(kPinwheel);
  CHECK(euler_characteristic(p) == 0);
  CHECK(!is_edge_connected(p));
  CHECK(!is_simply_connected(p));
  CHECK(check_run_lengths(p));  // three isolated length-1 runs
  const auto v = first_violation(p, Strictness::Weak);
  REQUIRE(v.has_value());
  CHECK(v->condition == 2);
  // The three tiles all meet corner v(0,1)? No: they pairwise touch at three
  // distinct corners, each fan there being disconnected.
  CHECK(!is_nonsingular(p));
  // Touch graph is connected even though the tile graph is not.
  CHECK(!is_removal_connected(p) == false);
}

TEST_CASE("ten-tile ring with a hole") {
  const Pattern p = make(kHoled10);
  CHECK(p.size() == 10);
  CHECK(check_run_lengths(p));
  CHECK(is_edge_connected(p));
  CHECK(euler_characteristic(p) == 0);
  CHECK(!is_simply_connected(p));
  CHECK(!is_weak_tredoku(p));
  const PatternStats s = stats(p);
  CHECK(s.runs3 == 5);
  CHECK(s.leaves == 5);
  CHECK(3 * s.runs3 + s.leaves == 2 * s.tiles);
  const auto v = first_violation(p, Strictness::Weak);
  REQUIRE(v.has_value());
  CHECK(v->condition == 3);
  CHECK(v->message == "Condition 3: covered region is not simply connected");
  // The loop closes through corner v(1,0), whose fan {Left(1,0), Top(0,-1)}
  // has no edge contact: singular.
  CHECK(is_corner_singular(p, Vertex{1, 0}));
  CHECK(!is_nonsingular(p));
  const auto vg = first_violation(p, Strictness::Generalized);
  REQUIRE(vg.has_value());
  CHECK(vg->condition == 3);
  CHECK(vg->message == "Condition 3: a corner fan is disconnected");
}

TEST_CASE("euler characteristic baselines") {
  CHECK(euler_characteristic(make({{0, 0, TileType::Top}})) == 1);
  CHECK(euler_characteristic(make({{0, 0, TileType::Left}})) == 1);
  CHECK(euler_characteristic(make({{0, 0, TileType::Right}})) == 1);
  // Two far-apart tiles: two contractible components.
  CHECK(euler_characteristic(make({{0, 0, TileType::Top}, {10, 10, TileType::Top}})) == 2);
  CHECK(!is_simply_connected(make({{0, 0, TileType::Top}, {10, 10, TileType::Top}})));
}

TEST_CASE("corner fans on the captioned six fixtures") {
  // Nonsingular at every corner:
  CHECK(is_nonsingular(make({{0, 0, TileType::Right}})));
  CHECK(is_nonsingular(make({{0, 0, TileType::Right}, {0, 1, TileType::Right}})));
  CHECK(is_nonsingular(
      make({{0, 0, TileType::Right}, {1, 0, TileType::Left}, {2, -1, TileType::Left}})));
  // Singular at v(1,0):
  const Pattern s1 = make({{0, 0, TileType::Right}, {1, 0, TileType::Right}});
  CHECK(is_corner_singular(s1, Vertex{1, 0}));
  CHECK(!is_nonsingular(s1));
  const Pattern s2 =
      make({{0, -1, TileType::Top}, {1, 0, TileType::Top}, {0, 0, TileType::Left}});
  CHECK(is_corner_singular(s2, Vertex{1, 0}));
  CHECK(!is_nonsingular(s2));
  const Pattern s3 =
      make({{1, -1, TileType::Right}, {1, 0, TileType::Top}, {0, 0, TileType::Left}});
  CHECK(is_corner_singular(s3, Vertex{1, 0}));
  CHECK(!is_nonsingular(s3));
}

TEST_CASE("maximum-leaf predicate") {
  const Pattern p = make(kVerdant5);
  CHECK(is_tredoku(p));
  const PatternStats s = stats(p);
  CHECK(s.tiles == 5);
  CHECK(s.runs3 == 2);
  CHECK(s.leaves == 4);
  CHECK(is_verdant(p));
  CHECK(preece_inequality_holds(p));  // tau = 2*rho + 1 boundary case
}

TEST_CASE("tile and touch graphs") {
  const Pattern p = make(kExample7);
  const auto eg = tile_graph(p);
  const auto tg = touch_graph(p);
  int edge_deg = 0, touch_deg = 0;
  for (int i = 0; i < p.size(); ++i) {
    edge_deg += static_cast<int>(eg[i].size());
    touch_deg += static_cast<int>(tg[i].size());
    // Every edge neighbour is also a touch neighbour.
    for (int j : eg[i]) {
      CHECK(std::count(tg[i].begin(), tg[i].end(), j) == 1);
      CHECK(tiles_edge_adjacent(p.tiles()[i], p.tiles()[j]));
    }
  }
  CHECK(edge_deg % 2 == 0);
  CHECK(touch_deg >= edge_deg);
}
