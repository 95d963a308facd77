// Explicit constructions: classification of parameter triples, a builder
// returning a valid pattern for every realisable triple, leaf extensions,
// merging, weak staircases, and the catalog of maximum-leaf patterns.
#pragma once

#include <utility>
#include <vector>

#include "tredoku/analysis.hpp"
#include "tredoku/geometry.hpp"

namespace tredoku {

struct ParameterTriple {
  int tiles = 0;   // tau
  int runs3 = 0;   // rho
  int leaves = 0;  // ell
};

enum class ParamClass {
  Infeasible,           // violates tau >= 3, 0 <= ell <= tau, or ell = 2*tau - 3*rho
  ExcludedByLeafBound,  // ell > ceil(tau/2) + 1
  ExcludedSporadic,     // feasible but proven non-realisable
  Exists,
};
const char* to_string(ParamClass c);

// Realisability of the triple by a tredoku pattern.
ParamClass classify_parameters(const ParameterTriple& t);
// Realisability by a weak pattern (fewer sporadic exclusions: a single
// length-3 run realises (3,1,3), and staircases realise the maximum-leaf
// diagonal for every rho >= 1).
ParamClass classify_weak_parameters(const ParameterTriple& t);

// Builds a tredoku pattern with the given statistics.  Deterministic; errors
// (PreconditionFailed) naming the classification when it is not Exists.
Pattern construct(const ParameterTriple& t);

// Grows the pattern by j successive two-tile steps at the given leaf, adding
// one leaf per step: stats go from (tau, rho, ell) to (tau+2j, rho+j, ell+j).
// Errors if leaf is not a leaf of p or the staircase hits occupied ground.
Pattern extend_at_leaf(const Pattern& p, const Tile& leaf, int j);

// All placements (s1, s2) such that two_leaf_extension(p, leaf, {s1, s2}) is
// valid: s1, leaf, s2 becomes a new length-3 run across leaf's length-1
// direction, with leaf at its centre.
std::vector<std::pair<Tile, Tile>> two_leaf_placements(const Pattern& p, const Tile& leaf);

// Applies one such extension; the result is again a tredoku pattern with
// stats (tau+2, rho+1, ell+1), and stays maximum-leaf if p was.  Errors
// (PreconditionFailed / GeometryBlocked) listing the failed requirement.
Pattern two_leaf_extension(const Pattern& p, const Tile& leaf,
                           const std::pair<Tile, Tile>& placement);

// Glues two patterns that intersect exactly in the common tile t, where t is
// a leaf of both, its length-3 runs run in different directions, and t is an
// end of both.  Result stats: (tau1+tau2-1, rho1+rho2, ell1+ell2-2).
Pattern merge_patterns(const Pattern& p1, const Pattern& p2, const Tile& t);

// The weak-but-not-tredoku staircase with rho length-3 runs, 2*rho+1 tiles,
// and rho+2 leaves (its inner leaves sit at run centres).  rho >= 1.
Pattern weak_staircase(int rho);

// All maximum-leaf patterns up to congruence, in a fixed order:
// 4 with 5 tiles, then 1 with 7, 1 with 9, 2 with 11, 2 with 13, 1 with 17.
std::vector<Pattern> verdant_catalog();

}  // namespace tredoku
