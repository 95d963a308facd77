// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.  Shared sweeps (the weak and strict censuses, the
// construction coverage, the maximum-leaf enumeration) are computed once and
// reused; every valid pattern they touch feeds the final inequality sweep.
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tredoku/analysis.hpp"
#include "tredoku/construct.hpp"
#include "tredoku/enumerate.hpp"
#include "tredoku/error.hpp"
#include "tredoku/io.hpp"
#include "tredoku/puzzle.hpp"

using namespace tredoku;

namespace {

bool g_all_pass = true;

void report(const std::string& number, bool ok, const std::string& label) {
  std::printf("criterion %3s: %s  %s\n", number.c_str(), ok ? "PASS" : "FAIL",
              label.c_str());
  std::fflush(stdout);
  if (!ok) g_all_pass = false;
}

EnumQuery census_query(int max_tiles, Variant variant) {
  EnumQuery q;
  q.max_tiles = max_tiles;
  q.variant = variant;
  return q;
}

std::tuple<int, int, int> triple_of(const Pattern& p) {
  const PatternStats st = stats(p);
  return {st.tiles, st.runs3, st.leaves};
}

// Every triple realisable by a tredoku pattern with at most max_tiles tiles.
std::vector<ParameterTriple> exists_triples(int max_tiles) {
  std::vector<ParameterTriple> out;
  for (int tau = 3; tau <= max_tiles; ++tau) {
    for (int rho = 0; 3 * rho <= 2 * tau; ++rho) {
      const ParameterTriple t{tau, rho, 2 * tau - 3 * rho};
      if (classify_parameters(t) == ParamClass::Exists) out.push_back(t);
    }
  }
  return out;
}

// Every way of merging p1 with a congruent copy of p2base at a leaf of p1:
// leaves of p1 x point images of p2base x leaves of the image, translating
// the image leaf onto the p1 leaf.  Inadmissible positions throw inside
// merge_patterns and are skipped.
std::vector<std::pair<Pattern, std::pair<PatternStats, PatternStats>>> all_merges(
    const Pattern& p1, const Pattern& p2base) {
  std::vector<std::pair<Pattern, std::pair<PatternStats, PatternStats>>> out;
  const PatternStats s1 = stats(p1);
  for (int li : leaves(p1)) {
    const Tile t = p1.tiles()[li];
    for (int op = 0; op < kNumPointOps; ++op) {
      const Pattern q = apply_symmetry(p2base, Symmetry{op, 0, 0});
      const PatternStats s2 = stats(q);
      for (int lj : leaves(q)) {
        const Tile s = q.tiles()[lj];
        if (s.type != t.type) continue;
        const Pattern q2 = q.translated(t.a - s.a, t.b - s.b);
        try {
          out.emplace_back(merge_patterns(p1, q2, t), std::make_pair(s1, s2));
        } catch (const Error&) {
        }
      }
    }
  }
  return out;
}

Pattern make(std::vector<Tile> tiles) { return Pattern::from_tiles(std::move(tiles)); }

}  // namespace

int main() {
  // Shared sweeps.
  const std::vector<Pattern> weak8 = enumerate_all(census_query(8, Variant::Weak));
  const std::vector<Pattern> tred9 = enumerate_all(census_query(9, Variant::Tredoku));
  std::vector<Pattern> tred8;
  for (const Pattern& p : tred9) {
    if (p.size() <= 8) tred8.push_back(p);
  }
  const std::vector<ParameterTriple> exists30 = exists_triples(30);
  std::vector<Pattern> constructed30;
  for (const ParameterTriple& t : exists30) constructed30.push_back(construct(t));

  // Everything swept by criteria 1-8 that is a valid pattern, for criterion 11.
  std::vector<const Pattern*> encountered;
  std::vector<Pattern> extras;  // owns patterns built on the fly
  for (const Pattern& p : weak8) encountered.push_back(&p);
  for (const Pattern& p : tred9) encountered.push_back(&p);
  for (const Pattern& p : constructed30) encountered.push_back(&p);

  // 1. Leaf-count identity on every enumerated and constructed pattern.
  {
    bool ok = true;
    for (const Pattern& p : weak8) {
      const PatternStats st = stats(p);
      ok = ok && st.leaves == 2 * st.tiles - 3 * st.runs3;
    }
    for (const Pattern& p : tred8) {
      const PatternStats st = stats(p);
      ok = ok && st.leaves == 2 * st.tiles - 3 * st.runs3;
    }
    for (std::size_t i = 0; i < exists30.size(); ++i) {
      const PatternStats st = stats(constructed30[i]);
      ok = ok && st.tiles == exists30[i].tiles && st.runs3 == exists30[i].runs3 &&
           st.leaves == exists30[i].leaves &&
           st.leaves == 2 * st.tiles - 3 * st.runs3;
    }
    report("1", ok,
           "leaves = 2*tiles - 3*runs3 on every enumerated (tau <= 8) and "
           "constructed (tau <= 30) pattern");
  }

  // 2. Direct definition and leaf-rule characterisation agree on weak patterns.
  {
    int disagreements = 0;
    for (const Pattern& p : weak8) {
      if (is_tredoku(p) != is_tredoku_via_leaf_rule(p)) ++disagreements;
    }
    report("2", disagreements == 0,
           "is_tredoku agrees with is_tredoku_via_leaf_rule on all " +
               std::to_string(weak8.size()) + " weak patterns with tau <= 8");
  }

  // 3. The classification matches the census at tau <= 9.
  std::string census9_bytes;
  {
    const TheoremReport rep = verify_main_theorem(9);
    bool ok = rep.ok() && rep.census.complete && rep.census.total_patterns == 191;
    const std::vector<std::tuple<int, int, int>> empty = {
        {3, 1, 3}, {3, 2, 0}, {4, 2, 2}, {5, 3, 1}, {6, 4, 0}};
    for (const auto& t : empty) ok = ok && rep.census.counts.count(t) == 0;
    const std::vector<std::tuple<int, int, int>> nonempty = {
        {5, 2, 4}, {6, 3, 3}, {7, 3, 5}, {7, 4, 2}, {8, 4, 4},
        {8, 5, 1}, {9, 4, 6}, {9, 5, 3}, {9, 6, 0}};
    for (const auto& t : nonempty) {
      ok = ok && rep.census.counts.count(t) == 1 && rep.census.counts.at(t) > 0;
    }
    census9_bytes = write_census_document(rep.census, census_query(9, Variant::Tredoku));
    report("3", ok,
           "classification verified against the tau <= 9 census (191 classes; "
           "expected empty and nonempty triples check out)");
  }

  // 4. No 12-tile zero-leaf pattern, in both search modes.
  {
    const TwelveTileReport rep = verify_twelve_tile_zero_leaf(false);
    const bool ok = rep.pruned_classes == 0 && rep.crosscheck_classes == 0 &&
                    rep.modes_agree && rep.nine_tile_classes == 3;
    for (const Pattern& p : search_zero_leaf(9)) {
      extras.push_back(p);
    }
    report("4", ok,
           "search_zero_leaf(12) is empty in pruned and cross-check modes "
           "(and finds the 3 nine-tile classes)");
  }

  // 5. Maximum-leaf enumeration matches the catalog.
  std::string verdant9_bytes;
  {
    const std::vector<Pattern> catalog = verdant_catalog();
    std::set<std::vector<std::uint32_t>> catalog_keys;
    for (const Pattern& c : catalog) catalog_keys.insert(canonical_key(c));

    auto check_at = [&](int max_tiles, const std::map<int, int>& expected,
                        std::string* bytes) {
      std::vector<Pattern> found;
      const CensusReport rep = enumerate_verdant(max_tiles, &found);
      if (bytes) {
        *bytes = write_census_document(rep, census_query(max_tiles, Variant::Tredoku));
      }
      std::map<int, int> by_size;
      bool ok = rep.complete;
      for (const Pattern& p : found) {
        ++by_size[p.size()];
        ok = ok && is_verdant(p) && catalog_keys.count(canonical_key(p)) == 1;
        extras.push_back(p);
      }
      return ok && by_size == expected;
    };

    report("5", check_at(9, {{5, 4}, {7, 1}, {9, 1}}, &verdant9_bytes),
           "maximum-leaf classes for tau <= 9 are exactly {5:4, 7:1, 9:1}, all "
           "in the catalog");
    report("5s", check_at(11, {{5, 4}, {7, 1}, {9, 1}, {11, 2}}, nullptr),
           "stretch: tau <= 11 adds exactly the two 11-tile catalog members");
  }

  // 6. Weak census: leaf bound, excluded triples, staircase diagonal.
  {
    std::map<std::tuple<int, int, int>, int> weak_census;
    std::set<std::vector<std::uint32_t>> weak_keys;
    for (const Pattern& p : weak8) {
      ++weak_census[triple_of(p)];
      weak_keys.insert(canonical_key(p));
    }
    bool ok = true;
    for (const auto& [t, n] : weak_census) {
      const auto [tau, rho, ell] = t;
      (void)rho;
      (void)n;
      ok = ok && ell <= (tau + 1) / 2 + 1;
    }
    const std::vector<std::tuple<int, int, int>> excluded = {
        {4, 2, 2}, {5, 3, 1}, {6, 4, 0}};
    for (const auto& t : excluded) ok = ok && weak_census.count(t) == 0;
    ok = ok && weak_census.count({3, 1, 3}) == 1;
    // The staircase family realises the maximum-leaf diagonal (2k+1, k, k+2);
    // each staircase is one of the enumerated weak classes.
    for (int k = 1; 2 * k + 1 <= 8; ++k) {
      const Pattern s = weak_staircase(k);
      const PatternStats st = stats(s);
      ok = ok && st.tiles == 2 * k + 1 && st.runs3 == k && st.leaves == k + 2;
      ok = ok && is_weak_tredoku(s) && !is_tredoku(s);
      ok = ok && weak_census.count({2 * k + 1, k, k + 2}) == 1;
      ok = ok && weak_keys.count(canonical_key(s)) == 1;
      extras.push_back(s);
    }
    ok = ok && verify_main_weak_theorem(8).ok();
    report("6", ok,
           "weak census at tau <= 8: leaf bound holds, excluded triples absent, "
           "staircase diagonal present");
  }

  // 7. No singular corners on weak patterns; the captioned corner fans.
  {
    bool ok = true;
    for (const Pattern& p : weak8) ok = ok && is_nonsingular(p);
    ok = ok && is_nonsingular(make({{0, 0, TileType::Right}}));
    ok = ok && is_nonsingular(make({{0, 0, TileType::Right}, {0, 1, TileType::Right}}));
    ok = ok && is_nonsingular(make(
                    {{0, 0, TileType::Right}, {1, 0, TileType::Left}, {2, -1, TileType::Left}}));
    const Pattern s1 = make({{0, 0, TileType::Right}, {1, 0, TileType::Right}});
    const Pattern s2 =
        make({{0, -1, TileType::Top}, {1, 0, TileType::Top}, {0, 0, TileType::Left}});
    const Pattern s3 =
        make({{1, -1, TileType::Right}, {1, 0, TileType::Top}, {0, 0, TileType::Left}});
    for (const Pattern* s : {&s1, &s2, &s3}) {
      ok = ok && is_corner_singular(*s, Vertex{1, 0}) && !is_nonsingular(*s);
    }
    report("7", ok,
           "every weak pattern with tau <= 8 is nonsingular; the six corner-fan "
           "fixtures classify as captioned");
  }

  // 8. Construction coverage and the extension/merge stat deltas.
  {
    bool ok = true;
    for (const Pattern& p : constructed30) ok = ok && is_tredoku(p);
    ok = ok && exists30.size() == 90;

    int extension_apps = 0;
    const std::vector<Pattern> catalog = verdant_catalog();
    for (const Pattern& c : catalog) {
      const PatternStats before = stats(c);
      for (int li : leaves(c)) {
        const Tile leaf = c.tiles()[li];
        for (const auto& pl : two_leaf_placements(c, leaf)) {
          const Pattern q = two_leaf_extension(c, leaf, pl);
          const PatternStats after = stats(q);
          ok = ok && is_tredoku(q) && after.tiles == before.tiles + 2 &&
               after.runs3 == before.runs3 + 1 && after.leaves == before.leaves + 1;
          extras.push_back(q);
          ++extension_apps;
        }
      }
    }

    int merge_apps = 0;
    for (const Pattern& p1 : catalog) {
      for (const Pattern& p2 : catalog) {
        for (auto& [merged, parents] : all_merges(p1, p2)) {
          const PatternStats after = stats(merged);
          const auto& [s1, s2] = parents;
          ok = ok && is_tredoku(merged) && after.tiles == s1.tiles + s2.tiles - 1 &&
               after.runs3 == s1.runs3 + s2.runs3 &&
               after.leaves == s1.leaves + s2.leaves - 2;
          extras.push_back(std::move(merged));
          ++merge_apps;
        }
      }
    }
    ok = ok && extension_apps > 0 && merge_apps > 0;
    report("8", ok,
           "construct() covers all 90 realisable triples with tau <= 30; stat "
           "deltas hold on " +
               std::to_string(extension_apps) + " extensions and " +
               std::to_string(merge_apps) + " merges");
  }

  // 9. The blank puzzle is fillable on every desk-scale pattern.
  {
    bool ok = true;
    int solved = 0;
    for (const ParameterTriple& t : exists_triples(15)) {
      const Pattern p = construct(t);
      const SolveResult r = solve(p, {});
      ok = ok && r.status == SolveStatus::Solved && r.assignment &&
           verify_solution(p, *r.assignment);
      ++solved;
    }
    for (const Pattern& p : tred8) {
      const SolveResult r = solve(p, {});
      ok = ok && r.status == SolveStatus::Solved && r.assignment &&
           verify_solution(p, *r.assignment);
      ++solved;
    }
    report("9", ok,
           "blank-grid solve succeeds and verifies on all " + std::to_string(solved) +
               " constructed (tau <= 15) and enumerated (tau <= 8) patterns");
  }

  // 10. Census bytes are identical across repeated runs and worker counts.
  {
    EnumOptions one;
    one.workers = 1;
    EnumOptions three;
    three.workers = 3;
    const EnumQuery q9 = census_query(9, Variant::Tredoku);
    const std::string again = write_census_document(enumerate_patterns(q9, one), q9);
    const std::string wide = write_census_document(enumerate_patterns(q9, three), q9);
    bool ok = census9_bytes == again && census9_bytes == wide;

    const EnumQuery qv = census_query(9, Variant::Tredoku);
    std::string v_again, v_wide;
    {
      const CensusReport r = enumerate_verdant(9, nullptr, one);
      v_again = write_census_document(r, qv);
    }
    {
      const CensusReport r = enumerate_verdant(9, nullptr, three);
      v_wide = write_census_document(r, qv);
    }
    ok = ok && verdant9_bytes == v_again && verdant9_bytes == v_wide;
    report("10", ok,
           "census documents are byte-identical across consecutive runs and "
           "worker counts (1 vs 3)");
  }

  // 11. The leaf-bound inequality holds on every valid pattern encountered.
  {
    for (const Pattern& p : extras) encountered.push_back(&p);
    bool ok = true;
    for (const Pattern* p : encountered) ok = ok && preece_inequality_holds(*p);
    report("11", ok,
           "leaf-bound inequality holds on all " + std::to_string(encountered.size()) +
               " patterns encountered above");
  }

  std::printf("%s\n", g_all_pass ? "ACCEPTANCE: all criteria passed"
                                 : "ACCEPTANCE: FAILURES PRESENT");
  return g_all_pass ? 0 : 1;
}
