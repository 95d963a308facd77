// Tests for exhaustive enumeration: canonical augmentation against an
// independent placed-window oracle, frozen census regression values, theorem
// verification at desk scale, the zero-leaf searches, maximum-leaf
// enumeration against the catalog, hexagon counts, determinism across worker
// counts, and budget handling.
#include "tredoku/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "tredoku/analysis.hpp"
#include "tredoku/construct.hpp"
#include "tredoku/error.hpp"
#include "tredoku/geometry.hpp"

using namespace tredoku;

namespace {

using Triple = std::tuple<int, int, int>;
using CountMap = std::map<Triple, std::int64_t>;

// Collects one canonical key per emitted class, grouped by (tau, rho, ell).
std::map<Triple, std::set<std::vector<std::uint32_t>>> keys_by_triple(
    const EnumQuery& query) {
  std::map<Triple, std::set<std::vector<std::uint32_t>>> out;
  enumerate_patterns(query, {}, [&](const Pattern& p) {
    const PatternStats st = stats(p);
    out[{st.tiles, st.runs3, st.leaves}].insert(canonical_key(p));
  });
  return out;
}

EnumQuery query_of(int max_tiles, Variant v) {
  EnumQuery q;
  q.max_tiles = max_tiles;
  q.variant = v;
  return q;
}

EnumQuery window_query(int max_tiles, Variant v, int side) {
  EnumQuery q = query_of(max_tiles, v);
  q.hexagon_side = side;
  return q;
}

const CountMap kTredokuCensus8 = {
    {{5, 2, 4}, 4},  {{6, 3, 3}, 8}, {{7, 3, 5}, 1},
    {{7, 4, 2}, 9},  {{8, 4, 4}, 72}, {{8, 5, 1}, 9},
};

const CountMap kTredokuCensus9 = {
    {{5, 2, 4}, 4},  {{6, 3, 3}, 8},  {{7, 3, 5}, 1},
    {{7, 4, 2}, 9},  {{8, 4, 4}, 72}, {{8, 5, 1}, 9},
    {{9, 4, 6}, 1},  {{9, 5, 3}, 84}, {{9, 6, 0}, 3},
};

const CountMap kWeakCensus8 = {
    {{3, 1, 3}, 3},  {{5, 2, 4}, 33},  {{6, 3, 3}, 8}, {{7, 3, 5}, 316},
    {{7, 4, 2}, 9},  {{8, 4, 4}, 144}, {{8, 5, 1}, 9},
};

}  // namespace

TEST_CASE("variant names and option resolution") {
  CHECK(std::string(to_string(Variant::Tredoku)) == "tredoku");
  CHECK(std::string(to_string(Variant::Weak)) == "weak");
  CHECK(std::string(to_string(Variant::Generalized)) == "generalized");
  EnumOptions opts;
  opts.workers = 3;
  CHECK(resolve_workers(opts) == 3);
  CHECK(resolve_workers({}) >= 1);
  opts.node_budget = 1234;
  CHECK(resolve_node_budget(opts) == 1234);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(enumerate_patterns(query_of(2, Variant::Weak)), Error);
  EnumQuery bad = query_of(5, Variant::Weak);
  bad.runs3 = -1;
  CHECK_THROWS_AS(enumerate_patterns(bad), Error);
  CHECK_THROWS_AS(enumerate_patterns(window_query(5, Variant::Weak, 0)), Error);
  // Unrestricted tile counts in windows beyond the desk scale are refused.
  CHECK_THROWS_AS(enumerate_patterns(window_query(12, Variant::Weak, 3)), Error);
  CHECK_THROWS_AS(enumerate_patterns(window_query(5, Variant::Weak, 7)), Error);
  CHECK_THROWS_AS(search_zero_leaf(2), Error);
  CHECK_THROWS_AS(enumerate_verdant(2), Error);
  CHECK_THROWS_AS(count_hexagon(0, Variant::Tredoku), Error);
  CHECK_THROWS_AS(count_hexagon(3, Variant::Tredoku), Error);
}

// The augmentation must agree, class for class, with a naive oracle that
// enumerates every placed tile set inside a bounding hexagon and quotients by
// canonical form.  H_5 is saturated for 6 tiles: H_6 finds the same classes.
TEST_CASE("augmentation agrees with the placed-window oracle up to 6 tiles") {
  for (Variant v : {Variant::Tredoku, Variant::Weak, Variant::Generalized}) {
    CAPTURE(to_string(v));
    const auto aug = keys_by_triple(query_of(6, v));
    const auto oracle = keys_by_triple(window_query(6, v, 5));
    CHECK(aug == oracle);
  }
  const CensusReport h5 = enumerate_patterns(window_query(6, Variant::Tredoku, 5));
  const CensusReport h6 = enumerate_patterns(window_query(6, Variant::Tredoku, 6));
  CHECK(h5.counts == h6.counts);
}

TEST_CASE("weak patterns with 3 tiles form exactly three classes") {
  std::vector<Pattern> pats;
  const CensusReport rep = enumerate_patterns(query_of(3, Variant::Weak), {},
                                              [&](const Pattern& p) { pats.push_back(p); });
  REQUIRE(rep.total_patterns == 3);
  REQUIRE(pats.size() == 3);
  // Each is a single run of three tiles; the three classes are told apart by
  // the tile-type sequence along the run: AAA, AAB, ABA up to symmetry.
  std::multiset<std::multiset<int>> type_shapes;
  for (const Pattern& p : pats) {
    const PatternStats st = stats(p);
    CHECK(st.tiles == 3);
    CHECK(st.runs3 == 1);
    CHECK(st.leaves == 3);
    CHECK(maximal_runs(p).size() == 4);  // one 3-run, three 1-runs
    type_shapes.insert({st.type_counts[0], st.type_counts[1], st.type_counts[2]});
  }
  const std::multiset<std::multiset<int>> expected = {
      {3, 0, 0}, {2, 1, 0}, {2, 1, 0}};
  CHECK(type_shapes == expected);
  // No 3-tile pattern satisfies the strict definition.
  CHECK(enumerate_patterns(query_of(3, Variant::Tredoku)).total_patterns == 0);
  CHECK(enumerate_patterns(query_of(4, Variant::Tredoku)).total_patterns == 0);
}

TEST_CASE("tredoku census up to 8 tiles matches frozen values") {
  const TheoremReport rep = verify_main_theorem(8);
  CHECK(rep.ok());
  for (const std::string& d : rep.disagreements) CAPTURE(d);
  CHECK(rep.census.counts == kTredokuCensus8);
  CHECK(rep.census.total_patterns == 103);
  CHECK(rep.census.complete);
}

TEST_CASE("weak census up to 8 tiles matches frozen values and the weak classification") {
  const TheoremReport rep = verify_main_weak_theorem(8);
  CHECK(rep.ok());
  CHECK(rep.census.counts == kWeakCensus8);
  CHECK(rep.census.total_patterns == 522);

  // The leaf bound: no realised triple exceeds ceil(tau/2) + 1 leaves.
  for (const auto& [k, v] : rep.census.counts) {
    const auto [tau, rho, ell] = k;
    CHECK(ell <= (tau + 1) / 2 + 1);
    CHECK(ell == 2 * tau - 3 * rho);
  }
  // The three small exclusions stay absent, the single run and the staircase
  // diagonal are present.
  CHECK(rep.census.counts.count({4, 2, 2}) == 0);
  CHECK(rep.census.counts.count({5, 3, 1}) == 0);
  CHECK(rep.census.counts.count({6, 4, 0}) == 0);
  CHECK(rep.census.counts.at({3, 1, 3}) > 0);
  CHECK(rep.census.counts.at({5, 2, 4}) > 0);
  CHECK(rep.census.counts.at({7, 3, 5}) > 0);
}

TEST_CASE("main theorem verification at 9 tiles") {
  const TheoremReport rep = verify_main_theorem(9);
  CHECK(rep.ok());
  CHECK(rep.census.counts == kTredokuCensus9);
  CHECK(rep.census.total_patterns == 191);
  // The unique 9-tile maximum-leaf pattern and the three zero-leaf classes.
  CHECK(rep.census.counts.at({9, 4, 6}) == 1);
  CHECK(rep.census.counts.at({9, 6, 0}) == 3);
}

TEST_CASE("census is identical across worker counts") {
  EnumOptions one;
  one.workers = 1;
  EnumOptions three;
  three.workers = 3;
  const TheoremReport a = verify_main_theorem(7, one);
  const TheoremReport b = verify_main_theorem(7, three);
  CHECK(a.ok());
  CHECK(b.ok());
  CHECK(a.census.counts == b.census.counts);
  CHECK(a.census.total_patterns == b.census.total_patterns);
  CHECK(a.census.nodes_explored == b.census.nodes_explored);
  // Emission order is also worker-independent.
  std::vector<std::vector<std::uint32_t>> keys_a, keys_b;
  enumerate_patterns(query_of(6, Variant::Weak), one,
                     [&](const Pattern& p) { keys_a.push_back(canonical_key(p)); });
  enumerate_patterns(query_of(6, Variant::Weak), three,
                     [&](const Pattern& p) { keys_b.push_back(canonical_key(p)); });
  CHECK(keys_a == keys_b);
}

TEST_CASE("emission order is ascending (size, canonical key) and enumerate_all matches") {
  std::vector<Pattern> sunk;
  enumerate_patterns(query_of(6, Variant::Weak), {},
                     [&](const Pattern& p) { sunk.push_back(p); });
  const std::vector<Pattern> all = enumerate_all(query_of(6, Variant::Weak));
  REQUIRE(sunk.size() == all.size());
  for (std::size_t i = 0; i < sunk.size(); ++i) {
    CHECK(canonical_key(sunk[i]) == canonical_key(all[i]));
    if (i > 0) {
      const int prev = sunk[i - 1].size(), cur = sunk[i].size();
      CHECK(prev <= cur);
      if (prev == cur) {
        CHECK(canonical_key(sunk[i - 1]) < canonical_key(sunk[i]));
      }
    }
  }
  // Every emission is a canonical form already.
  for (const Pattern& p : sunk) {
    CHECK(canonical_form(p).tiles() == p.tiles());
  }
}

TEST_CASE("rho and leaf filters restrict the census") {
  EnumQuery q = query_of(6, Variant::Weak);
  q.runs3 = 1;
  CHECK(enumerate_patterns(q).total_patterns == 3);  // only (3,1,3)
  q = query_of(6, Variant::Weak);
  q.leaves = 3;
  const CensusReport rep = enumerate_patterns(q);
  CHECK(rep.counts == CountMap{{{3, 1, 3}, 3}, {{6, 3, 3}, 8}});
}

TEST_CASE("zero-leaf search at small sizes") {
  CHECK(search_zero_leaf(4).empty());   // tile count not divisible by 3
  CHECK(search_zero_leaf(5).empty());
  CHECK(search_zero_leaf(3).empty());   // a 3-run's tiles are all leaves
  CHECK(search_zero_leaf(6).empty());
  const std::vector<Pattern> nine = search_zero_leaf(9);
  REQUIRE(nine.size() == 3);
  std::set<std::vector<std::uint32_t>> nine_keys;
  for (const Pattern& p : nine) {
    const PatternStats st = stats(p);
    CHECK(st.tiles == 9);
    CHECK(st.runs3 == 6);
    CHECK(st.leaves == 0);
    CHECK(is_tredoku(p));
    for (int c : st.type_counts) CHECK(c % 3 == 0);
    nine_keys.insert(canonical_key(p));
  }
  CHECK(nine_keys.size() == 3);
  // The constructive witness for (9, 6, 0) is one of the three classes.
  CHECK(nine_keys.count(canonical_key(construct({9, 6, 0}))) == 1);
  // Structural pruning does not change the answer.
  const std::vector<Pattern> nine_cross = search_zero_leaf(9, false);
  REQUIRE(nine_cross.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(canonical_key(nine[i]) == canonical_key(nine_cross[i]));
  }
  // Cross-engine: the canonical-augmentation census finds the same classes.
  EnumQuery q = query_of(9, Variant::Tredoku);
  q.runs3 = 6;
  q.leaves = 0;
  std::set<std::vector<std::uint32_t>> census_keys;
  enumerate_patterns(q, {}, [&](const Pattern& p) { census_keys.insert(canonical_key(p)); });
  CHECK(census_keys == nine_keys);
}

TEST_CASE("no 12-tile zero-leaf pattern exists, in both pruning modes") {
  const TwelveTileReport rep = verify_twelve_tile_zero_leaf();
  CHECK(rep.pruned_classes == 0);
  CHECK(rep.crosscheck_classes == 0);
  CHECK(rep.modes_agree);
  CHECK(rep.nine_tile_classes == 3);
  CHECK(rep.nine_tile_type_counts_divisible_by_3);
  CHECK(rep.fifteen_tile_classes == -1);  // not requested
}

TEST_CASE("maximum-leaf enumeration matches the catalog") {
  std::vector<Pattern> found;
  const CensusReport rep = enumerate_verdant(9, &found);
  CHECK(rep.counts == CountMap{{{5, 2, 4}, 4}, {{7, 3, 5}, 1}, {{9, 4, 6}, 1}});
  CHECK(rep.total_patterns == 6);
  REQUIRE(found.size() == 6);

  const std::vector<Pattern> catalog = verdant_catalog();
  std::set<std::vector<std::uint32_t>> catalog_keys;
  for (std::size_t i = 0; i < 6; ++i) {  // the 5-, 7- and 9-tile entries
    catalog_keys.insert(canonical_key(catalog[i]));
  }
  std::set<std::vector<std::uint32_t>> found_keys;
  for (const Pattern& p : found) {
    CHECK(is_verdant(p));
    found_keys.insert(canonical_key(p));
  }
  CHECK(found_keys == catalog_keys);
}

TEST_CASE("budget exhaustion is reported, never silently truncated") {
  EnumOptions tiny;
  tiny.node_budget = 20;
  const CensusReport rep = enumerate_patterns(query_of(8, Variant::Weak), tiny);
  CHECK_FALSE(rep.complete);
  const TheoremReport t = verify_main_theorem(8, tiny);
  CHECK_FALSE(t.ok());
  REQUIRE(t.disagreements.size() >= 1);
  CHECK(t.disagreements.front().find("incomplete") != std::string::npos);
  CHECK_THROWS_AS(search_zero_leaf(9, true, tiny), Error);
}

TEST_CASE("hexagon pattern counts") {
  for (Variant v : {Variant::Tredoku, Variant::Weak, Variant::Generalized}) {
    CAPTURE(to_string(v));
    const HexagonCount h1 = count_hexagon(1, v);
    CHECK(h1.placed == 0);
    CHECK(h1.classes == 0);
  }
  const HexagonCount t2 = count_hexagon(2, Variant::Tredoku);
  CHECK(t2.placed == 428);
  CHECK(t2.classes == 37);
  const HexagonCount w2 = count_hexagon(2, Variant::Weak);
  CHECK(w2.placed == 938);
  CHECK(w2.classes == 70);
  const HexagonCount g2 = count_hexagon(2, Variant::Generalized);
  CHECK(g2.placed == 452);
  CHECK(g2.classes == 39);
}

// Independent check of the placed count: every placed pattern is a symmetric
// image of one of the classes, so summing each class's distinct in-window
// placements over all 12 point maps and all translations must reproduce it.
TEST_CASE("hexagon placed count equals the orbit sum over classes") {
  std::vector<Pattern> classes;
  enumerate_patterns(window_query(12, Variant::Tredoku, 2), {},
                     [&](const Pattern& p) { classes.push_back(p); });
  CHECK(classes.size() == 37);
  std::set<std::vector<std::uint32_t>> placements;
  for (const Pattern& rep : classes) {
    for (int op = 0; op < 12; ++op) {
      std::vector<Tile> img;
      for (const Tile& t : rep.tiles()) img.push_back(apply(Symmetry{op, 0, 0}, t));
      // Try every translation that could land the image inside H_2.
      for (int da = -8; da <= 8; ++da) {
        for (int db = -8; db <= 8; ++db) {
          std::vector<std::uint32_t> keys;
          bool inside = true;
          for (const Tile& t : img) {
            const Tile moved{t.a + da, t.b + db, t.type};
            if (!tile_in_hexagon(moved, 2)) {
              inside = false;
              break;
            }
            keys.push_back(tile_key(moved));
          }
          if (!inside) continue;
          std::sort(keys.begin(), keys.end());
          placements.insert(std::move(keys));
        }
      }
    }
  }
  CHECK(placements.size() == 428);
}
