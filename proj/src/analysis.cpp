#include "tredoku/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace tredoku {

namespace {

// Tile indices across the two d-edges of tile i (-1 where uncovered).
std::array<int, 2> neighbors_in_dir(const Pattern& p, int i, Direction d) {
  const auto cells = across_cells(p.tiles()[i], d);
  return {p.tile_index_of_cell(cells[0]), p.tile_index_of_cell(cells[1])};
}

// BFS connectivity over adjacency lists, optionally skipping one vertex.
bool connected_skipping(const std::vector<std::vector<int>>& adj, int skip) {
  const int n = static_cast<int>(adj.size());
  int start = -1, want = 0;
  for (int i = 0; i < n; ++i) {
    if (i == skip) continue;
    ++want;
    if (start < 0) start = i;
  }
  if (want <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : adj[v]) {
      if (w == skip || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return reached == want;
}

}  // namespace

std::vector<Run> maximal_runs(const Pattern& p) {
  const int n = p.size();
  std::vector<Run> runs;
  // visited[i][s]: slot s of tile i, where s indexes boundary_directions.
  std::vector<std::array<char, 2>> visited(n, {0, 0});
  auto slot_of = [&](int i, Direction d) {
    const auto bd = boundary_directions(p.tiles()[i].type);
    return d == bd[0] ? 0 : 1;
  };
  for (int i = 0; i < n; ++i) {
    for (Direction d : boundary_directions(p.tiles()[i].type)) {
      if (visited[i][slot_of(i, d)]) continue;
      // Walk to one end of the chain of d-edge-glued tiles through i.
      int cur = i, prev = -1;
      for (;;) {
        const auto nb = neighbors_in_dir(p, cur, d);
        const int next = (nb[0] != prev && nb[0] >= 0) ? nb[0]
                        : (nb[1] != prev && nb[1] >= 0) ? nb[1]
                                                        : -1;
        if (next < 0) break;
        prev = cur;
        cur = next;
      }
      // Collect from that end.
      Run run;
      run.dir = d;
      prev = -1;
      while (cur >= 0) {
        run.tiles.push_back(cur);
        visited[cur][slot_of(cur, d)] = 1;
        const auto nb = neighbors_in_dir(p, cur, d);
        const int next = (nb[0] != prev && nb[0] >= 0) ? nb[0]
                        : (nb[1] != prev && nb[1] >= 0) ? nb[1]
                                                        : -1;
        prev = cur;
        cur = next;
      }
      if (run.tiles.front() > run.tiles.back()) {
        std::reverse(run.tiles.begin(), run.tiles.end());
      }
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

bool check_run_lengths(const Pattern& p) {
  for (const Run& r : maximal_runs(p)) {
    if (r.length() != 1 && r.length() != 3) return false;
  }
  return true;
}

std::vector<int> leaves(const Pattern& p) {
  std::vector<int> out;
  std::vector<Run> runs = maximal_runs(p);
  for (const Run& r : runs) {
    if (r.length() != 1 && r.length() != 3) {
      fail(Errc::PreconditionFailed, "leaves: pattern has a run of length " +
                                         std::to_string(r.length()));
    }
  }
  for (const Run& r : runs) {
    if (r.length() == 1) out.push_back(r.tiles[0]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PatternStats stats(const Pattern& p) {
  PatternStats s;
  s.tiles = p.size();
  const std::vector<Run> runs = maximal_runs(p);
  bool lengths_ok = true;
  std::set<int> leaf_tiles;
  for (const Run& r : runs) {
    ++s.run_length_hist[r.length()];
    if (r.length() == 3) ++s.runs3;
    if (r.length() == 1) {
      ++s.leaves;
      leaf_tiles.insert(r.tiles[0]);
    }
    if (r.length() != 1 && r.length() != 3) lengths_ok = false;
  }
  if (lengths_ok) {
    for (const Run& r : runs) {
      if (r.length() != 3) continue;
      int k = 0;
      for (int t : r.tiles) k += leaf_tiles.count(t) ? 1 : 0;
      ++s.runs3_by_leaf_count[static_cast<std::size_t>(k)];
    }
  }
  for (const Tile& t : p.tiles()) {
    ++s.type_counts[static_cast<std::size_t>(t.type)];
  }
  return s;
}

std::vector<std::vector<int>> tile_graph(const Pattern& p) {
  const int n = p.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (Direction d : boundary_directions(p.tiles()[i].type)) {
      for (int j : neighbors_in_dir(p, i, d)) {
        if (j >= 0) adj[i].push_back(j);
      }
    }
    std::sort(adj[i].begin(), adj[i].end());
    adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
  }
  return adj;
}

std::vector<std::vector<int>> touch_graph(const Pattern& p) {
  const int n = p.size();
  std::map<Vertex, std::vector<int>> at_corner;
  for (int i = 0; i < n; ++i) {
    for (const Vertex& v : tile_corners(p.tiles()[i])) at_corner[v].push_back(i);
  }
  std::vector<std::set<int>> nb(n);
  for (const auto& [v, ts] : at_corner) {
    for (int x : ts) {
      for (int y : ts) {
        if (x != y) nb[x].insert(y);
      }
    }
  }
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) adj[i].assign(nb[i].begin(), nb[i].end());
  return adj;
}

bool is_edge_connected(const Pattern& p) {
  return connected_skipping(tile_graph(p), -1);
}

int euler_characteristic(const Pattern& p) {
  std::set<Vertex> vertices;
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const Tile& t : p.tiles()) {
    for (const TriCell& c : {tile_triangles(t).first, tile_triangles(t).second}) {
      const auto vs = cell_vertices(c);
      for (int i = 0; i < 3; ++i) {
        vertices.insert(vs[i]);
        Vertex x = vs[i], y = vs[(i + 1) % 3];
        if (y < x) std::swap(x, y);
        edges.insert({x, y});
      }
    }
  }
  const int faces = 2 * p.size();
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) + faces;
}

bool is_simply_connected(const Pattern& p) {
  if (p.empty()) return true;
  return connected_skipping(touch_graph(p), -1) && euler_characteristic(p) == 1;
}

bool is_removal_connected(const Pattern& p) {
  if (p.size() <= 2) return true;
  const auto adj = touch_graph(p);
  for (int i = 0; i < p.size(); ++i) {
    if (!connected_skipping(adj, i)) return false;
  }
  return true;
}

bool is_corner_singular(const Pattern& p, const Vertex& v) {
  std::vector<int> fan;
  for (int i = 0; i < p.size(); ++i) {
    const auto cs = tile_corners(p.tiles()[i]);
    if (std::count(cs.begin(), cs.end(), v)) fan.push_back(i);
  }
  const int m = static_cast<int>(fan.size());
  if (m <= 1) return false;
  std::vector<std::vector<int>> adj(m);
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (tiles_edge_adjacent(p.tiles()[fan[x]], p.tiles()[fan[y]])) {
        adj[x].push_back(y);
        adj[y].push_back(x);
      }
    }
  }
  return !connected_skipping(adj, -1);
}

bool is_nonsingular(const Pattern& p) {
  std::set<Vertex> corners;
  for (const Tile& t : p.tiles()) {
    for (const Vertex& v : tile_corners(t)) corners.insert(v);
  }
  for (const Vertex& v : corners) {
    if (is_corner_singular(p, v)) return false;
  }
  return true;
}

bool is_weak_tredoku(const Pattern& p) {
  return p.size() >= 3 && check_run_lengths(p) && is_edge_connected(p) &&
         is_simply_connected(p);
}

bool is_tredoku(const Pattern& p) {
  return is_weak_tredoku(p) && is_removal_connected(p);
}

bool is_generalized_tredoku(const Pattern& p) {
  return p.size() >= 3 && check_run_lengths(p) && is_edge_connected(p) &&
         is_nonsingular(p) && is_removal_connected(p);
}

bool is_tredoku_via_leaf_rule(const Pattern& p) {
  if (!is_weak_tredoku(p)) return false;
  const std::vector<Run> runs = maximal_runs(p);
  std::set<int> leaf_tiles;
  for (const Run& r : runs) {
    if (r.length() == 1) leaf_tiles.insert(r.tiles[0]);
  }
  for (const Run& r : runs) {
    if (r.length() == 3 && leaf_tiles.count(r.tiles[1])) return false;
  }
  return true;
}

bool is_verdant(const Pattern& p) {
  if (!is_tredoku(p)) {
    fail(Errc::PreconditionFailed, "is_verdant requires a tredoku pattern");
  }
  const PatternStats s = stats(p);
  return s.leaves == (s.tiles + 1) / 2 + 1;
}

bool preece_inequality_holds(const Pattern& p) {
  const PatternStats s = stats(p);
  return 3 * s.runs3 <= 2 * s.tiles && s.tiles <= 2 * s.runs3 + 1;
}

std::optional<Violation> first_violation(const Pattern& p, Strictness strict) {
  if (p.size() < 3) {
    return Violation{0, "fewer than 3 tiles"};
  }
  for (const Run& r : maximal_runs(p)) {
    if (r.length() != 1 && r.length() != 3) {
      return Violation{1, "Condition 1: a maximal run has length " +
                              std::to_string(r.length())};
    }
  }
  if (!is_edge_connected(p)) {
    return Violation{2, "Condition 2: tile graph is disconnected"};
  }
  switch (strict) {
    case Strictness::Weak:
    case Strictness::Tredoku:
      if (!is_simply_connected(p)) {
        return Violation{3, "Condition 3: covered region is not simply connected"};
      }
      if (strict == Strictness::Tredoku && !is_removal_connected(p)) {
        return Violation{4, "Condition 4: removal of centre tile disconnects"};
      }
      break;
    case Strictness::Generalized:
      if (!is_nonsingular(p)) {
        return Violation{3, "Condition 3: a corner fan is disconnected"};
      }
      if (!is_removal_connected(p)) {
        return Violation{4, "Condition 4: removal of a tile disconnects the rest"};
      }
      break;
  }
  return std::nullopt;
}

}  // namespace tredoku
