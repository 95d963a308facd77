#include "tredoku/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

namespace tredoku {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::Tredoku: return "tredoku";
    case Variant::Weak: return "weak";
    case Variant::Generalized: return "generalized";
  }
  return "?";
}

int resolve_workers(const EnumOptions& opts) {
  if (opts.workers > 0) return opts.workers;
  if (const char* env = std::getenv("TREDOKU_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

std::int64_t resolve_node_budget(const EnumOptions& opts) {
  if (opts.node_budget > 0) return opts.node_budget;
  if (const char* env = std::getenv("TREDOKU_NODE_BUDGET")) {
    const long long b = std::atoll(env);
    if (b > 0) return b;
  }
  return 0;
}

namespace {

// ---- internal search specification -----------------------------------------

struct SearchSpec {
  int max_tiles = 3;
  Variant variant = Variant::Tredoku;
  std::optional<int> want_rho;
  std::optional<int> want_ell;
  std::optional<int> exact_tiles;  // emit only patterns of this size
  bool zero_leaf_mode = false;     // every run below length 3 must stay extendable
  bool type_cap_633 = false;       // sorted type counts must fit under (6,3,3)
  bool verdant_mode = false;       // cap the tiles that can no longer become leaves
};

bool variant_valid(const Pattern& p, Variant v) {
  switch (v) {
    case Variant::Tredoku: return is_tredoku(p);
    case Variant::Weak: return is_weak_tredoku(p);
    case Variant::Generalized: return is_generalized_tredoku(p);
  }
  return false;
}

// ---- growth-potential scanning ----------------------------------------------

// A run end at uncovered cell x (adjacent to the run's end tile across the run
// direction) can still grow iff some further tile can cover x, i.e. one of x's
// edge-neighbours besides the run cell is uncovered.
bool end_alive(const Pattern& p, const TriCell& x, const Tile& end_tile) {
  const auto [cu, cd] = tile_triangles(end_tile);
  for (const TriCell& y : cell_edge_neighbors(x)) {
    if (y == cu || y == cd) continue;
    if (!p.covers_cell(y)) return true;
  }
  return false;
}

struct RunScan {
  bool lengths_ok = true;        // every maximal run has length <= 3
  bool two_runs_alive = true;    // every length-2 run has a live end
  bool short_runs_alive = true;  // every run below length 3 has a live end
  int stuck_tiles = 0;           // tiles in two runs of length >= 2
};

RunScan scan_runs(const Pattern& p) {
  RunScan out;
  const std::vector<Run> runs = maximal_runs(p);
  std::vector<int> deep(static_cast<std::size_t>(p.size()), 0);
  for (const Run& r : runs) {
    const int len = r.length();
    if (len >= 4) {
      out.lengths_ok = false;
      return out;
    }
    if (len >= 2) {
      for (int i : r.tiles) ++deep[static_cast<std::size_t>(i)];
    }
    if (len >= 3) continue;
    // A run of length 1 or 2 can only reach 3 through an uncovered cell
    // beyond one of its end tiles.
    bool alive = false;
    for (int end_index : {r.tiles.front(), r.tiles.back()}) {
      const Tile end_tile = p.tiles()[static_cast<std::size_t>(end_index)];
      for (const TriCell& x : across_cells(end_tile, r.dir)) {
        if (p.covers_cell(x)) continue;  // interior side of a length-2 run
        if (end_alive(p, x, end_tile)) {
          alive = true;
          break;
        }
      }
      if (alive) break;
    }
    if (!alive) {
      out.short_runs_alive = false;
      if (len == 2) out.two_runs_alive = false;
    }
  }
  for (int d : deep) {
    if (d == 2) ++out.stuck_tiles;
  }
  return out;
}

bool type_counts_fit_633(const Pattern& p) {
  std::array<int, 3> c{};
  for (const Tile& t : p.tiles()) ++c[static_cast<std::size_t>(t.type)];
  std::sort(c.begin(), c.end(), std::greater<int>());
  return c[0] <= 6 && c[1] <= 3;
}

// ---- canonical augmentation --------------------------------------------------

// Deleting this tile from the canonical form designates the unique parent of
// the pattern's class: the largest-key tile whose removal keeps the tile
// graph connected.
int designated_index(const Pattern& K) {
  const int n = K.size();
  if (n <= 2) return n - 1;
  const std::vector<std::vector<int>> adj = tile_graph(K);
  std::vector<int> stack, seen(static_cast<std::size_t>(n));
  for (int cand = n - 1; cand >= 0; --cand) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, cand == 0 ? 1 : 0);
    seen[static_cast<std::size_t>(stack[0])] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j : adj[static_cast<std::size_t>(i)]) {
        if (j == cand || seen[static_cast<std::size_t>(j)]) continue;
        seen[static_cast<std::size_t>(j)] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
    if (reached == n - 1) return cand;
  }
  fail(Errc::InvalidPattern, "designated_index: pattern is not edge-connected");
}

struct Node {
  Pattern pat;                     // canonical form
  std::vector<std::uint32_t> key;  // its canonical key
};

// Children of a canonical pattern under the augmentation's parent rule,
// deduplicated and sorted by canonical key.
std::vector<Node> children_of(const Pattern& C, const SearchSpec& spec) {
  // Candidate additions: tiles covering an uncovered cell adjacent to the
  // pattern plus an uncovered neighbour of it.
  std::set<std::uint32_t> cand_keys;
  for (const TriCell& c : C.cells()) {
    for (const TriCell& x : cell_edge_neighbors(c)) {
      if (C.covers_cell(x)) continue;
      for (const TriCell& y : cell_edge_neighbors(x)) {
        if (C.covers_cell(y)) continue;
        cand_keys.insert(tile_key(tile_from_triangles(x, y)));
      }
    }
  }

  std::vector<Node> out;
  std::set<std::vector<std::uint32_t>> seen;
  for (const std::uint32_t ck : cand_keys) {
    const Tile t = tile_from_key(ck);
    std::vector<Tile> tv = C.tiles();
    tv.push_back(t);
    const Pattern child = Pattern::from_tiles(std::move(tv));

    const RunScan rs = scan_runs(child);
    if (!rs.lengths_ok || !rs.two_runs_alive) continue;
    if (spec.zero_leaf_mode && !rs.short_runs_alive) continue;
    if (spec.verdant_mode && rs.stuck_tiles > spec.max_tiles / 2 - 1) continue;
    if (spec.type_cap_633 && !type_counts_fit_633(child)) continue;

    const std::vector<Symmetry> syms = canonizing_symmetries(child);
    const Pattern K = apply_symmetry(child, syms.front());
    const Tile d = K.tiles()[static_cast<std::size_t>(designated_index(K))];
    // The parent rule must be tested for this specific addition: congruent
    // children reached by different additions from the same parent can sit in
    // different automorphism orbits, so only deduplicate accepted children.
    bool genuine = false;
    for (const Symmetry& s : syms) {
      if (apply(s, t) == d) {
        genuine = true;
        break;
      }
    }
    if (!genuine) continue;
    std::vector<std::uint32_t> key;  // == canonical_key(child): K's sorted tile keys
    key.reserve(K.tiles().size());
    for (const Tile& kt : K.tiles()) key.push_back(tile_key(kt));
    if (!seen.insert(key).second) continue;
    out.push_back(Node{K, std::move(key)});
  }
  std::sort(out.begin(), out.end(),
            [](const Node& a, const Node& b) { return a.key < b.key; });
  return out;
}

// ---- search driver -------------------------------------------------------------

struct Emission {
  int size = 0;
  std::vector<std::uint32_t> key;
  Pattern pat;
};

struct PartialResult {
  std::map<std::tuple<int, int, int>, std::int64_t> counts;
  std::vector<Emission> emissions;
};

class Enumerator {
 public:
  Enumerator(const SearchSpec& spec, int workers, std::int64_t budget, bool retain)
      : spec_(spec), workers_(workers), budget_(budget), retain_(retain) {}

  // Runs the full search; emissions (if retained) come back sorted by
  // (size, canonical key).
  PartialResult run(CensusReport* report) {
    const auto t0 = std::chrono::steady_clock::now();

    PartialResult prefix;
    Node root{Pattern::from_tiles({Tile{0, 0, TileType::Top}}), {}};
    root.key = canonical_key(root.pat);
    charge();
    visit(root, prefix);

    // Breadth-first prefix: process every class up to the split depth, then
    // hand the subtrees below the frontier to the workers round-robin.
    const int split = std::min(4, spec_.max_tiles);
    std::vector<Node> frontier;
    frontier.push_back(std::move(root));
    for (int depth = 1; depth < split && !capped_.load(std::memory_order_relaxed);
         ++depth) {
      std::vector<Node> next;
      for (const Node& nd : frontier) {
        for (Node& ch : children_of(nd.pat, spec_)) {
          if (!charge()) break;
          visit(ch, prefix);
          next.push_back(std::move(ch));
        }
        if (capped_.load(std::memory_order_relaxed)) break;
      }
      frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end(),
              [](const Node& a, const Node& b) { return a.key < b.key; });

    std::vector<PartialResult> locals(static_cast<std::size_t>(workers_));
    if (spec_.max_tiles > split && !capped_.load(std::memory_order_relaxed)) {
      auto work = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < frontier.size();
             i += static_cast<std::size_t>(workers_)) {
          expand_below(frontier[i], locals[static_cast<std::size_t>(w)]);
        }
      };
      if (workers_ == 1) {
        work(0);
      } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers_));
        for (int w = 0; w < workers_; ++w) threads.emplace_back(work, w);
        for (std::thread& th : threads) th.join();
      }
    }

    PartialResult total = std::move(prefix);
    for (PartialResult& pr : locals) {
      for (const auto& [k, v] : pr.counts) total.counts[k] += v;
      total.emissions.insert(total.emissions.end(),
                             std::make_move_iterator(pr.emissions.begin()),
                             std::make_move_iterator(pr.emissions.end()));
    }
    std::sort(total.emissions.begin(), total.emissions.end(),
              [](const Emission& a, const Emission& b) {
                if (a.size != b.size) return a.size < b.size;
                return a.key < b.key;
              });

    if (report) {
      report->counts = total.counts;
      report->total_patterns = 0;
      for (const auto& [k, v] : total.counts) report->total_patterns += v;
      report->nodes_explored = nodes_.load(std::memory_order_relaxed);
      report->complete = !capped_.load(std::memory_order_relaxed);
      report->wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return total;
  }

 private:
  bool charge() {
    const std::int64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_ > 0 && n > budget_) {
      capped_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void visit(const Node& nd, PartialResult& local) {
    const Pattern& p = nd.pat;
    const int n = p.size();
    if (n < 3 || n > spec_.max_tiles) return;
    if (spec_.exact_tiles && n != *spec_.exact_tiles) return;
    if (!variant_valid(p, spec_.variant)) return;
    const PatternStats st = stats(p);
    if (spec_.want_rho && st.runs3 != *spec_.want_rho) return;
    if (spec_.want_ell && st.leaves != *spec_.want_ell) return;
    if (spec_.zero_leaf_mode && st.leaves != 0) return;
    if (spec_.verdant_mode && !is_verdant(p)) return;
    local.counts[{st.tiles, st.runs3, st.leaves}] += 1;
    if (retain_) local.emissions.push_back(Emission{n, nd.key, p});
  }

  void expand_below(const Node& nd, PartialResult& local) {
    if (nd.pat.size() >= spec_.max_tiles) return;
    for (const Node& ch : children_of(nd.pat, spec_)) {
      if (capped_.load(std::memory_order_relaxed)) return;
      if (!charge()) return;
      visit(ch, local);
      expand_below(ch, local);
    }
  }

  SearchSpec spec_;
  int workers_;
  std::int64_t budget_;
  bool retain_;
  std::atomic<std::int64_t> nodes_{0};
  std::atomic<bool> capped_{false};
};

CensusReport run_search(const SearchSpec& spec, const EnumOptions& opts,
                        std::vector<Pattern>* out,
                        const std::function<void(const Pattern&)>& sink) {
  const bool retain = out != nullptr || static_cast<bool>(sink);
  Enumerator e(spec, resolve_workers(opts), resolve_node_budget(opts), retain);
  CensusReport report;
  PartialResult res = e.run(&report);
  for (const Emission& em : res.emissions) {
    if (!variant_valid(em.pat, spec.variant)) {
      fail(Errc::InvalidPattern, "enumeration emitted a pattern that fails revalidation");
    }
    if (out) out->push_back(em.pat);
    if (sink) sink(em.pat);
  }
  return report;
}

// ---- placed enumeration inside hexagons ------------------------------------------

// Calls visit exactly once for every edge-connected, non-overlapping placed
// tile set inside H_m whose maximal runs all have length <= 3 and whose size
// is at most cap.  Classic rooted connected-subset recursion: each set is
// generated from its minimum-key tile only, with candidates popped once and
// implicitly banned for the rest of the branch.
class PlacedEnumerator {
 public:
  PlacedEnumerator(int m, int cap, std::function<void(const std::vector<Tile>&)> visit)
      : cap_(cap), visit_(std::move(visit)) {
    for (int a = -m - 2; a <= m + 2; ++a) {
      for (int b = -m - 2; b <= m + 2; ++b) {
        for (TileType ty : {TileType::Top, TileType::Left, TileType::Right}) {
          const Tile t{a, b, ty};
          if (tile_in_hexagon(t, m)) tiles_.push_back(t);
        }
      }
    }
    std::sort(tiles_.begin(), tiles_.end(), tile_less);
    adj_.resize(tiles_.size());
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
      for (std::size_t j = i + 1; j < tiles_.size(); ++j) {
        if (tiles_edge_adjacent(tiles_[i], tiles_[j])) {
          adj_[i].push_back(static_cast<int>(j));
          adj_[j].push_back(static_cast<int>(i));
        }
      }
    }
    queued_.assign(tiles_.size(), 0);
  }

  std::int64_t visited_sets() const { return visited_; }

  void run() {
    for (std::size_t r = 0; r < tiles_.size(); ++r) {
      root_ = static_cast<int>(r);
      queued_[r] = 1;
      include(static_cast<int>(r), {});
      queued_[r] = 0;
    }
  }

 private:
  // Adds tile i to the current set, visits it, and explores all extensions
  // drawn from `untried` plus i's own later neighbours.
  void include(int i, std::vector<int> untried) {
    const Tile t = tiles_[static_cast<std::size_t>(i)];
    const auto [cu, cd] = tile_triangles(t);
    current_.push_back(t);
    covered_.insert(cu);
    covered_.insert(cd);
    ++visited_;
    visit_(current_);

    if (static_cast<int>(current_.size()) < cap_) {
      std::vector<int> marked;
      for (int nb : adj_[static_cast<std::size_t>(i)]) {
        if (nb <= root_ || queued_[static_cast<std::size_t>(nb)]) continue;
        queued_[static_cast<std::size_t>(nb)] = 1;
        marked.push_back(nb);
        untried.push_back(nb);
      }
      while (!untried.empty()) {
        const int c = untried.back();
        untried.pop_back();
        if (admissible(c)) include(c, untried);
        // c stays popped: excluded for the rest of this branch.
      }
      for (int nb : marked) queued_[static_cast<std::size_t>(nb)] = 0;
    }

    covered_.erase(cu);
    covered_.erase(cd);
    current_.pop_back();
  }

  bool admissible(int c) {
    const Tile t = tiles_[static_cast<std::size_t>(c)];
    const auto [cu, cd] = tile_triangles(t);
    if (covered_.count(cu) || covered_.count(cd)) return false;
    // Reject immediately if the addition creates a run of length 4.
    std::vector<Tile> tv = current_;
    tv.push_back(t);
    const Pattern p = Pattern::from_tiles(std::move(tv));
    for (const Run& r : maximal_runs(p)) {
      if (r.length() >= 4) return false;
    }
    return true;
  }

  std::vector<Tile> tiles_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> queued_;
  std::set<TriCell> covered_;
  std::vector<Tile> current_;
  int cap_ = 0;
  int root_ = -1;
  std::int64_t visited_ = 0;
  std::function<void(const std::vector<Tile>&)> visit_;
};

// Runs in {1,3} is a cheap precondition for every validity variant; test it
// before paying for the full validator.
bool runs_all_1_or_3(const Pattern& p) {
  for (const Run& r : maximal_runs(p)) {
    const int len = r.length();
    if (len != 1 && len != 3) return false;
  }
  return true;
}

struct HexagonScan {
  std::int64_t placed = 0;
  std::map<std::vector<std::uint32_t>, Pattern> classes;  // key -> representative
  std::int64_t visited_sets = 0;
};

HexagonScan scan_hexagon(int m, Variant variant, int max_tiles) {
  HexagonScan out;
  PlacedEnumerator pe(m, max_tiles, [&](const std::vector<Tile>& tiles) {
    if (tiles.size() < 3) return;
    const Pattern p = Pattern::from_tiles(std::vector<Tile>(tiles));
    if (!runs_all_1_or_3(p)) return;
    if (!variant_valid(p, variant)) return;
    ++out.placed;
    std::vector<std::uint32_t> key = canonical_key(p);
    if (!out.classes.count(key)) {
      out.classes.emplace(std::move(key), canonical_form(p));
    }
  });
  pe.run();
  out.visited_sets = pe.visited_sets();
  return out;
}

// ---- exact-size zero-leaf search ---------------------------------------------

// True when a single further tile could close the one-tile gap between two
// aligned single-tile runs: one of its cells sits across a run edge of t1, the
// other across a run edge of t2, both cells are free, and the shared direction
// stays on its boundary.
bool gap_bridgeable(const Pattern& p, const Tile& t1, const Tile& t2, Direction d) {
  const auto far_side = across_cells(t2, d);
  for (const TriCell& x : across_cells(t1, d)) {
    if (p.covers_cell(x)) continue;
    for (const TriCell& y : cell_edge_neighbors(x)) {
      if (y != far_side[0] && y != far_side[1]) continue;
      if (p.covers_cell(y)) continue;
      const Tile u = tile_from_triangles(x, y);
      const auto bd = boundary_directions(u.type);
      if (bd[0] == d || bd[1] == d) return true;
    }
  }
  return false;
}

struct ZeroLeafScan {
  bool dead = false;  // a run of length >= 4, or a short run that cannot grow
  int needed_lb = 0;  // lower bound on further tiles before all runs reach 3
};

// Write D for the sum of (3 - length) over runs of length 1 or 2.  A future
// tile meets two runs, one per boundary direction, and per direction either
// extends one incomplete run by a single tile (D drops by 1) or closes the
// one-tile gap between two aligned single-tile runs (D drops by 4).  Gap
// closures consume disjoint pairs of the currently gapped single-tile runs,
// so with m an upper bound on that pairing, completion takes at least
// ceil((D - 3m) / 2) further tiles.
ZeroLeafScan zero_leaf_scan(const Pattern& p) {
  ZeroLeafScan out;
  std::array<std::vector<int>, 3> singles;  // 1-run tile index, per direction
  int deficit = 0;
  for (const Run& r : maximal_runs(p)) {
    const int len = r.length();
    if (len >= 4) {
      out.dead = true;
      return out;
    }
    if (len == 3) continue;
    deficit += 3 - len;
    if (len == 1) {
      singles[static_cast<std::size_t>(r.dir)].push_back(r.tiles.front());
    }
    bool alive = false;
    for (int end_index : {r.tiles.front(), r.tiles.back()}) {
      const Tile end_tile = p.tiles()[static_cast<std::size_t>(end_index)];
      for (const TriCell& x : across_cells(end_tile, r.dir)) {
        if (p.covers_cell(x)) continue;
        if (end_alive(p, x, end_tile)) {
          alive = true;
          break;
        }
      }
      if (alive) break;
    }
    if (!alive) {
      out.dead = true;
      return out;
    }
  }
  int pairable = 0;
  for (std::size_t d = 0; d < 3; ++d) {
    int partnered = 0;
    const std::vector<int>& runs1 = singles[d];
    for (std::size_t i = 0; i < runs1.size(); ++i) {
      const Tile ti = p.tiles()[static_cast<std::size_t>(runs1[i])];
      for (std::size_t j = 0; j < runs1.size(); ++j) {
        if (j == i) continue;
        const Tile tj = p.tiles()[static_cast<std::size_t>(runs1[j])];
        if (gap_bridgeable(p, ti, tj, static_cast<Direction>(d))) {
          ++partnered;
          break;
        }
      }
    }
    pairable += partnered / 2;
  }
  const int effective = deficit - 3 * pairable;
  out.needed_lb = effective > 0 ? (effective + 1) / 2 : 0;
  return out;
}

// Enumerates every placed pattern with exactly tau tiles and all runs of
// length 3, rooted at its minimum-key tile translated to the origin, and
// collects one canonical representative per congruence class.  The rooted
// include/exclude recursion visits each placed set once; a partial set is
// abandoned when it overlaps, grows a run past 3, strands a short run, or
// cannot reach tau tiles under the deficit bound.
class ZeroLeafSearcher {
 public:
  ZeroLeafSearcher(int tau, bool type_cap, std::int64_t budget)
      : tau_(tau), type_cap_(type_cap), budget_(budget) {
    // Anchor coordinates drift by at most 2 per adjacency step, so every
    // connected pattern of tau tiles whose minimum-key tile sits at the
    // origin fits inside this window (keys order by (b, a, rank), hence
    // b >= 0 throughout).
    const int reach = 2 * tau + 2;
    for (int b = 0; b <= reach; ++b) {
      for (int a = -reach; a <= reach; ++a) {
        for (TileType ty : {TileType::Top, TileType::Left, TileType::Right}) {
          tiles_.push_back(Tile{a, b, ty});
        }
      }
    }
    std::sort(tiles_.begin(), tiles_.end(), tile_less);
    std::map<std::uint32_t, int> index;
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
      index.emplace(tile_key(tiles_[i]), static_cast<int>(i));
    }
    adj_.resize(tiles_.size());
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
      const auto [cu, cd] = tile_triangles(tiles_[i]);
      std::set<int> nbrs;
      for (const TriCell& c : {cu, cd}) {
        for (const TriCell& x : cell_edge_neighbors(c)) {
          if (x == cu || x == cd) continue;
          for (const TriCell& y : cell_edge_neighbors(x)) {
            const auto it = index.find(tile_key(tile_from_triangles(x, y)));
            if (it != index.end() && it->second != static_cast<int>(i)) {
              nbrs.insert(it->second);
            }
          }
        }
      }
      adj_[i].assign(nbrs.begin(), nbrs.end());
    }
    queued_.assign(tiles_.size(), 0);
  }

  // Roots: the three tile types anchored at the origin.
  void run() {
    for (std::size_t r = 0; r < tiles_.size(); ++r) {
      const Tile& t = tiles_[r];
      if (t.a != 0 || t.b != 0) continue;
      root_ = static_cast<int>(r);
      queued_[r] = 1;
      include(static_cast<int>(r), {});
      queued_[r] = 0;
    }
  }

  std::int64_t nodes() const { return nodes_; }
  bool capped() const { return capped_; }
  std::map<std::vector<std::uint32_t>, Pattern>& classes() { return classes_; }

 private:
  void include(int i, std::vector<int> untried) {
    if (capped_) return;
    ++nodes_;
    if (budget_ > 0 && nodes_ > budget_) {
      capped_ = true;
      return;
    }
    const Tile t = tiles_[static_cast<std::size_t>(i)];
    const auto [cu, cd] = tile_triangles(t);
    current_.push_back(t);
    covered_.insert(cu);
    covered_.insert(cd);

    const Pattern p = Pattern::from_tiles(std::vector<Tile>(current_));
    const ZeroLeafScan scan = zero_leaf_scan(p);
    const int n = static_cast<int>(current_.size());
    const bool viable = !scan.dead && n + scan.needed_lb <= tau_ &&
                        (!type_cap_ || type_counts_fit_633(p));
    if (viable && n == tau_) {
      const PatternStats st = stats(p);
      if (st.leaves == 0 && is_tredoku(p)) {
        std::vector<std::uint32_t> key = canonical_key(p);
        if (!classes_.count(key)) classes_.emplace(std::move(key), canonical_form(p));
      }
    } else if (viable) {
      std::vector<int> marked;
      for (int nb : adj_[static_cast<std::size_t>(i)]) {
        if (nb <= root_ || queued_[static_cast<std::size_t>(nb)]) continue;
        queued_[static_cast<std::size_t>(nb)] = 1;
        marked.push_back(nb);
        untried.push_back(nb);
      }
      while (!untried.empty() && !capped_) {
        const int c = untried.back();
        untried.pop_back();
        const auto [xu, xd] = tile_triangles(tiles_[static_cast<std::size_t>(c)]);
        if (!covered_.count(xu) && !covered_.count(xd)) include(c, untried);
        // c stays popped: excluded for the rest of this branch.
      }
      for (int nb : marked) queued_[static_cast<std::size_t>(nb)] = 0;
    }

    covered_.erase(cu);
    covered_.erase(cd);
    current_.pop_back();
  }

  std::vector<Tile> tiles_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> queued_;
  std::set<TriCell> covered_;
  std::vector<Tile> current_;
  std::map<std::vector<std::uint32_t>, Pattern> classes_;
  int tau_ = 0;
  bool type_cap_ = false;
  std::int64_t budget_ = 0;
  int root_ = -1;
  std::int64_t nodes_ = 0;
  bool capped_ = false;
};

}  // namespace

CensusReport enumerate_patterns(const EnumQuery& query, const EnumOptions& opts,
                                const std::function<void(const Pattern&)>& sink) {
  if (query.max_tiles < 3) {
    fail(Errc::InvalidArgument, "enumerate_patterns requires max_tiles >= 3");
  }
  if ((query.runs3 && *query.runs3 < 0) || (query.leaves && *query.leaves < 0)) {
    fail(Errc::InvalidArgument, "enumerate_patterns: negative filter value");
  }

  if (query.hexagon_side) {
    const int m = *query.hexagon_side;
    if (m < 1) fail(Errc::InvalidArgument, "hexagon side must be >= 1");
    // Unrestricted tile counts are affordable only in the two desk-scale
    // windows; larger windows stay tractable for very small patterns, which
    // is what the naive cross-check oracle needs.
    if (m > 2 && query.max_tiles > 7) {
      fail(Errc::BudgetExceeded, "hexagon windows support m <= 2, or m <= 6 when max_tiles <= 7");
    }
    if (m > 6) fail(Errc::BudgetExceeded, "hexagon windows support m <= 6");
    const auto t0 = std::chrono::steady_clock::now();
    const HexagonScan scan = scan_hexagon(m, query.variant, query.max_tiles);
    CensusReport report;
    for (const auto& [key, p] : scan.classes) {
      const PatternStats st = stats(p);
      if (query.runs3 && st.runs3 != *query.runs3) continue;
      if (query.leaves && st.leaves != *query.leaves) continue;
      report.counts[{st.tiles, st.runs3, st.leaves}] += 1;
      report.total_patterns += 1;
    }
    report.nodes_explored = scan.visited_sets;
    report.complete = true;
    if (sink) {
      std::vector<Emission> ems;
      for (const auto& [key, p] : scan.classes) {
        const PatternStats st = stats(p);
        if (query.runs3 && st.runs3 != *query.runs3) continue;
        if (query.leaves && st.leaves != *query.leaves) continue;
        ems.push_back(Emission{p.size(), key, p});
      }
      std::sort(ems.begin(), ems.end(), [](const Emission& a, const Emission& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.key < b.key;
      });
      for (const Emission& em : ems) sink(em.pat);
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }

  SearchSpec spec;
  spec.max_tiles = query.max_tiles;
  spec.variant = query.variant;
  spec.want_rho = query.runs3;
  spec.want_ell = query.leaves;
  return run_search(spec, opts, nullptr, sink);
}

std::vector<Pattern> enumerate_all(const EnumQuery& query, const EnumOptions& opts) {
  std::vector<Pattern> out;
  enumerate_patterns(query, opts, [&](const Pattern& p) { out.push_back(p); });
  return out;
}

namespace {

TheoremReport verify_theorem(int max_tiles, Variant variant,
                             ParamClass (*classify)(const ParameterTriple&),
                             const EnumOptions& opts) {
  if (max_tiles < 3) fail(Errc::InvalidArgument, "verification requires max_tiles >= 3");
  TheoremReport rep;
  EnumQuery q;
  q.max_tiles = max_tiles;
  q.variant = variant;
  rep.census = enumerate_patterns(q, opts);
  if (!rep.census.complete) {
    rep.disagreements.push_back("enumeration hit the node budget; census incomplete");
    return rep;
  }
  for (int tau = 3; tau <= max_tiles; ++tau) {
    for (int rho = 0; rho <= tau; ++rho) {
      const int ell = 2 * tau - 3 * rho;
      if (ell < 0 || ell > tau) continue;
      const bool should_exist = classify({tau, rho, ell}) == ParamClass::Exists;
      const auto it = rep.census.counts.find({tau, rho, ell});
      const bool found = it != rep.census.counts.end() && it->second > 0;
      if (should_exist == found) continue;
      std::ostringstream os;
      os << "(" << tau << ", " << rho << ", " << ell << "): classification says "
         << (should_exist ? "exists" : "excluded") << " but enumeration found "
         << (found ? it->second : 0) << " class(es)";
      rep.disagreements.push_back(os.str());
    }
  }
  // A census entry whose triple is arithmetically infeasible would indicate a
  // broken counting identity; report it as a disagreement too.
  for (const auto& [k, v] : rep.census.counts) {
    const auto [tau, rho, ell] = k;
    if (ell == 2 * tau - 3 * rho && ell >= 0 && ell <= tau && tau >= 3) continue;
    std::ostringstream os;
    os << "census contains arithmetically infeasible triple (" << tau << ", " << rho
       << ", " << ell << ") with " << v << " class(es)";
    rep.disagreements.push_back(os.str());
  }
  return rep;
}

}  // namespace

TheoremReport verify_main_theorem(int max_tiles, const EnumOptions& opts) {
  return verify_theorem(max_tiles, Variant::Tredoku, classify_parameters, opts);
}

TheoremReport verify_main_weak_theorem(int max_tiles, const EnumOptions& opts) {
  return verify_theorem(max_tiles, Variant::Weak, classify_weak_parameters, opts);
}

std::vector<Pattern> search_zero_leaf(int tau, bool structural_pruning,
                                      const EnumOptions& opts) {
  if (tau < 3) fail(Errc::InvalidArgument, "search_zero_leaf requires tau >= 3");
  if (tau % 3 != 0) return {};  // 2*tau = 3*rho forces tau divisible by 3
  // Zero-leaf weak patterns are tredoku (the centre-leaf rule is vacuous), so
  // the search validates against the strict definition directly.
  ZeroLeafSearcher searcher(tau, structural_pruning && tau == 12,
                            resolve_node_budget(opts));
  searcher.run();
  if (searcher.capped()) {
    fail(Errc::BudgetExceeded, "search_zero_leaf hit the node budget");
  }
  std::vector<Pattern> out;
  out.reserve(searcher.classes().size());
  for (auto& [key, pat] : searcher.classes()) out.push_back(std::move(pat));
  return out;
}

TwelveTileReport verify_twelve_tile_zero_leaf(bool include_fifteen,
                                              const EnumOptions& opts) {
  TwelveTileReport rep;
  const std::vector<Pattern> pruned = search_zero_leaf(12, true, opts);
  const std::vector<Pattern> cross = search_zero_leaf(12, false, opts);
  rep.pruned_classes = static_cast<std::int64_t>(pruned.size());
  rep.crosscheck_classes = static_cast<std::int64_t>(cross.size());
  rep.modes_agree = pruned.size() == cross.size();
  for (std::size_t i = 0; rep.modes_agree && i < pruned.size(); ++i) {
    rep.modes_agree = canonical_key(pruned[i]) == canonical_key(cross[i]);
  }
  const std::vector<Pattern> nine = search_zero_leaf(9, true, opts);
  rep.nine_tile_classes = static_cast<std::int64_t>(nine.size());
  for (const Pattern& p : nine) {
    const PatternStats st = stats(p);
    for (int c : st.type_counts) {
      if (c % 3 != 0) rep.nine_tile_type_counts_divisible_by_3 = false;
    }
  }
  if (include_fifteen) {
    rep.fifteen_tile_classes =
        static_cast<std::int64_t>(search_zero_leaf(15, true, opts).size());
  }
  return rep;
}

CensusReport enumerate_verdant(int max_tiles, std::vector<Pattern>* out,
                               const EnumOptions& opts) {
  if (max_tiles < 3) fail(Errc::InvalidArgument, "enumerate_verdant requires max_tiles >= 3");
  SearchSpec spec;
  spec.max_tiles = max_tiles;
  spec.variant = Variant::Tredoku;
  spec.verdant_mode = true;
  return run_search(spec, opts, out, {});
}

HexagonCount count_hexagon(int m, Variant variant) {
  if (m < 1) fail(Errc::InvalidArgument, "count_hexagon requires m >= 1");
  if (m > 2) fail(Errc::BudgetExceeded, "count_hexagon supports m <= 2");
  // The side-m hexagon holds 6*m*m cells, so at most 3*m*m tiles fit.
  const HexagonScan scan = scan_hexagon(m, variant, 3 * m * m);
  HexagonCount out;
  out.placed = scan.placed;
  out.classes = static_cast<std::int64_t>(scan.classes.size());
  return out;
}

}  // namespace tredoku
