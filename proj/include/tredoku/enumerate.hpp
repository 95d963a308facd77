// Exhaustive enumeration of patterns up to congruence via canonical
// augmentation, plus the searches built on it: census generation, theorem
// verification, the zero-leaf search, maximum-leaf enumeration, and counting
// patterns inside hexagonal windows.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tredoku/analysis.hpp"
#include "tredoku/construct.hpp"
#include "tredoku/geometry.hpp"

namespace tredoku {

enum class Variant { Tredoku, Weak, Generalized };
const char* to_string(Variant v);

struct EnumQuery {
  int max_tiles = 3;
  Variant variant = Variant::Tredoku;
  std::optional<int> runs3;          // emit only patterns with this rho
  std::optional<int> leaves;         // emit only patterns with this leaf count
  std::optional<int> hexagon_side;   // restrict tiles to the hexagon H_m
};

struct EnumOptions {
  int workers = 0;                   // 0: use TREDOKU_WORKERS env or 1
  std::int64_t node_budget = 0;      // 0: use TREDOKU_NODE_BUDGET env or none
};
int resolve_workers(const EnumOptions& opts);
std::int64_t resolve_node_budget(const EnumOptions& opts);

struct CensusReport {
  // (tau, rho, leaves) -> number of congruence classes.
  std::map<std::tuple<int, int, int>, std::int64_t> counts;
  std::int64_t total_patterns = 0;
  std::int64_t nodes_explored = 0;
  double wall_seconds = 0.0;  // informational; never serialised
  bool complete = true;       // false when the node budget was exhausted
};

// Enumerates one representative per congruence class of patterns matching the
// query, calling sink (if given) in a deterministic order: ascending size,
// then canonical key.  The census is byte-for-byte reproducible across runs
// and worker counts.  Every emitted pattern is revalidated from scratch.
CensusReport enumerate_patterns(const EnumQuery& query, const EnumOptions& opts = {},
                                const std::function<void(const Pattern&)>& sink = {});

std::vector<Pattern> enumerate_all(const EnumQuery& query, const EnumOptions& opts = {});

// Compares the enumerated set of realised (tau, rho, leaves) triples for
// tau <= max_tiles against classify_parameters / classify_weak_parameters.
// Each disagreement is reported as a human-readable line; empty means the
// classification and the exhaustive search agree exactly.
struct TheoremReport {
  std::vector<std::string> disagreements;
  CensusReport census;
  bool ok() const { return disagreements.empty(); }
};
TheoremReport verify_main_theorem(int max_tiles, const EnumOptions& opts = {});
TheoremReport verify_main_weak_theorem(int max_tiles, const EnumOptions& opts = {});

// All congruence classes of weak patterns with exactly tau tiles and zero
// leaves (every run closed to length 3).  Dead-run pruning: a partial pattern
// is abandoned once any run can no longer reach length 3.  When
// structural_pruning is set and tau == 12, type-count bounds implied by
// disjoint-run packing are applied as well; the cross-check mode drops them.
std::vector<Pattern> search_zero_leaf(int tau, bool structural_pruning = true,
                                      const EnumOptions& opts = {});

// Runs search_zero_leaf(12) in both modes and summarises the evidence that
// the two agree, plus context at neighbouring sizes.
struct TwelveTileReport {
  std::int64_t pruned_classes = 0;      // structural pruning on
  std::int64_t crosscheck_classes = 0;  // structural pruning off
  bool modes_agree = false;
  std::int64_t nine_tile_classes = 0;   // tau = 9 zero-leaf classes (nonempty)
  bool nine_tile_type_counts_divisible_by_3 = true;
  std::int64_t fifteen_tile_classes = -1;  // computed only when requested
};
TwelveTileReport verify_twelve_tile_zero_leaf(bool include_fifteen = false,
                                              const EnumOptions& opts = {});

// Enumerates maximum-leaf tredoku patterns up to max_tiles, pruning partial
// patterns that already contain too many tiles that can never be leaves.
CensusReport enumerate_verdant(int max_tiles, std::vector<Pattern>* out = nullptr,
                               const EnumOptions& opts = {});

// Number of valid patterns (of the variant) whose tiles fit inside the
// hexagon H_m, counted as placed tile sets (no congruence quotient), plus the
// number of congruence classes among them for context.
struct HexagonCount {
  std::int64_t placed = 0;
  std::int64_t classes = 0;
};
HexagonCount count_hexagon(int m, Variant variant);

}  // namespace tredoku
