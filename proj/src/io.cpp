// JSON pattern/puzzle/census documents, SVG / TikZ / ASCII renderers, and the
// command-line front end.
#include "tredoku/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tredoku/analysis.hpp"
#include "tredoku/construct.hpp"
#include "tredoku/error.hpp"

namespace tredoku {

namespace {

using Json = nlohmann::ordered_json;

// --- Document helpers ----------------------------------------------------------

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::InvalidDocument, std::string("document is not valid JSON: ") + e.what());
  }
}

void reject_unknown_fields(const Json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(Errc::InvalidDocument, where + ": unknown field \"" + item.key() + "\"");
    }
  }
}

const Json& require_field(const Json& obj, const char* name, const std::string& where) {
  const auto it = obj.find(name);
  if (it == obj.end()) {
    fail(Errc::InvalidDocument, where + ": missing field \"" + name + "\"");
  }
  return *it;
}

int require_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    fail(Errc::InvalidDocument, where + ": expected an integer");
  }
  return v.get<int>();
}

void check_version(const Json& doc, const std::string& where) {
  const Json& version = require_field(doc, "format_version", where);
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    fail(Errc::InvalidDocument,
         where + ": unsupported format_version (expected \"" + kFormatVersion + "\")");
  }
}

Pattern pattern_from_json(const Json& doc, std::vector<std::string>* warnings,
                          std::initializer_list<const char*> allowed) {
  if (!doc.is_object()) fail(Errc::InvalidDocument, "document root must be an object");
  reject_unknown_fields(doc, allowed, "document");
  check_version(doc, "document");
  const Json& tiles = require_field(doc, "tiles", "document");
  if (!tiles.is_array()) fail(Errc::InvalidDocument, "tiles: expected an array");
  if (tiles.empty()) fail(Errc::InvalidDocument, "tiles: the tile list is empty");
  std::vector<Tile> out;
  out.reserve(tiles.size());
  int idx = 0;
  for (const Json& e : tiles) {
    const std::string where = "tiles[" + std::to_string(idx) + "]";
    if (!e.is_object()) fail(Errc::InvalidDocument, where + ": expected an object");
    reject_unknown_fields(e, {"a", "b", "type"}, where);
    const int a = require_int(require_field(e, "a", where), where + ".a");
    const int b = require_int(require_field(e, "b", where), where + ".b");
    if (a < -kCoordLimit || a > kCoordLimit || b < -kCoordLimit || b > kCoordLimit) {
      fail(Errc::InvalidDocument, where + ": coordinate out of supported range");
    }
    const Json& ty = require_field(e, "type", where);
    if (!ty.is_string()) fail(Errc::InvalidDocument, where + ".type: expected a string");
    const std::optional<TileType> type = tile_type_from_string(ty.get<std::string>());
    if (!type) {
      fail(Errc::InvalidDocument,
           where + ".type: unknown tile type \"" + ty.get<std::string>() + "\"");
    }
    out.push_back(Tile{a, b, *type});
    ++idx;
  }
  if (warnings && out.size() < 3) {
    warnings->push_back("pattern has fewer than 3 tiles; validity checks will reject it");
  }
  return Pattern::from_tiles(std::move(out));
}

Json tiles_to_json(const Pattern& p) {
  Json arr = Json::array();
  for (const Tile& t : p.tiles()) {
    Json e = Json::object();
    e["a"] = t.a;
    e["b"] = t.b;
    e["type"] = to_string(t.type);
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

Pattern parse_pattern_document(const std::string& text, std::vector<std::string>* warnings) {
  const Json doc = parse_json(text);
  return pattern_from_json(doc, warnings, {"format_version", "tiles"});
}

std::string write_pattern_document(const Pattern& p) {
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["tiles"] = tiles_to_json(p);
  return dump_document(doc);
}

PuzzleDocument parse_puzzle_document(const std::string& text,
                                     std::vector<std::string>* warnings) {
  const Json doc = parse_json(text);
  PuzzleDocument out;
  out.pattern = pattern_from_json(doc, warnings, {"format_version", "tiles", "clues"});
  const auto it = doc.find("clues");
  if (it == doc.end()) return out;  // clues are optional when parsing
  if (!it->is_array()) fail(Errc::InvalidDocument, "clues: expected an array");
  int idx = 0;
  for (const Json& e : *it) {
    const std::string where = "clues[" + std::to_string(idx) + "]";
    if (!e.is_object()) fail(Errc::InvalidDocument, where + ": expected an object");
    reject_unknown_fields(e, {"tile_index", "i", "j", "value"}, where);
    SubCell cell;
    cell.tile = require_int(require_field(e, "tile_index", where), where + ".tile_index");
    cell.i = require_int(require_field(e, "i", where), where + ".i");
    cell.j = require_int(require_field(e, "j", where), where + ".j");
    const int value = require_int(require_field(e, "value", where), where + ".value");
    if (cell.tile < 0 || cell.tile >= out.pattern.size()) {
      fail(Errc::InvalidDocument, where + ".tile_index: out of range");
    }
    if (cell.i < 0 || cell.i > 2 || cell.j < 0 || cell.j > 2) {
      fail(Errc::InvalidDocument, where + ": sub-cell index out of range");
    }
    if (value < 1 || value > 9) {
      fail(Errc::InvalidDocument, where + ".value: digit must be between 1 and 9");
    }
    if (out.clues.count(cell) != 0) {
      fail(Errc::InvalidDocument, where + ": duplicate clue for one sub-cell");
    }
    out.clues[cell] = value;
    ++idx;
  }
  return out;
}

std::string write_puzzle_document(const PuzzleDocument& doc) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["tiles"] = tiles_to_json(doc.pattern);
  Json clues = Json::array();
  for (const auto& [cell, value] : doc.clues) {
    Json e = Json::object();
    e["tile_index"] = cell.tile;
    e["i"] = cell.i;
    e["j"] = cell.j;
    e["value"] = value;
    clues.push_back(std::move(e));
  }
  j["clues"] = std::move(clues);
  return dump_document(j);
}

std::string write_census_document(const CensusReport& report, const EnumQuery& query) {
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  Json q = Json::object();
  q["max_tiles"] = query.max_tiles;
  q["variant"] = to_string(query.variant);
  q["runs3"] = query.runs3 ? Json(*query.runs3) : Json(nullptr);
  q["leaves"] = query.leaves ? Json(*query.leaves) : Json(nullptr);
  q["hexagon_side"] = query.hexagon_side ? Json(*query.hexagon_side) : Json(nullptr);
  doc["query"] = std::move(q);
  doc["complete"] = report.complete;
  doc["total_patterns"] = report.total_patterns;
  Json records = Json::array();
  for (const auto& [triple, count] : report.counts) {
    Json r = Json::object();
    r["tiles"] = std::get<0>(triple);
    r["runs3"] = std::get<1>(triple);
    r["leaves"] = std::get<2>(triple);
    r["count"] = count;
    records.push_back(std::move(r));
  }
  doc["records"] = std::move(records);
  return dump_document(doc);
}

// --- Renderers -------------------------------------------------------------------

namespace {

constexpr double kRowHeight = 0.8660254037844386;  // sqrt(3) / 2

struct XY {
  double x = 0;
  double y = 0;
};

// Euclidean embedding; the y axis is flipped for screen coordinates.
XY embed(const Vertex& v, double s) {
  return {s * (v.a + 0.5 * v.b), -s * (kRowHeight * v.b)};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

// The glued edge between the tile's two triangles: their two common corners.
std::pair<Vertex, Vertex> internal_edge(const Tile& t) {
  const auto [up, down] = tile_triangles(t);
  const std::array<Vertex, 3> a = cell_vertices(up);
  const std::array<Vertex, 3> b = cell_vertices(down);
  std::vector<Vertex> common;
  for (const Vertex& v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) common.push_back(v);
  }
  return {common[0], common[1]};
}

const char* svg_fill(TileType t, bool shading) {
  if (!shading) return "#ffffff";
  switch (t) {
    case TileType::Top: return "#ffffff";  // unshaded
    case TileType::Left: return "#d9d9d9";
    case TileType::Right: return "#ababab";
  }
  return "#ffffff";
}

std::string render_svg(const Pattern& p, const RenderOptions& opts) {
  const double s = 40.0 * opts.scale;
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  bool first = true;
  for (const Tile& t : p.tiles()) {
    for (const Vertex& v : tile_corners(t)) {
      const XY q = embed(v, s);
      if (first) {
        min_x = max_x = q.x;
        min_y = max_y = q.y;
        first = false;
      }
      min_x = std::min(min_x, q.x);
      max_x = std::max(max_x, q.x);
      min_y = std::min(min_y, q.y);
      max_y = std::max(max_y, q.y);
    }
  }
  const double margin = 0.5 * s;
  const double x0 = min_x - margin, y0 = min_y - margin;
  const double w = (max_x - min_x) + 2 * margin, h = (max_y - min_y) + 2 * margin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << " "
      << fmt(y0) << " " << fmt(w) << " " << fmt(h) << "\" width=\"" << fmt(w)
      << "\" height=\"" << fmt(h) << "\">\n";
  out << "  <g stroke=\"#000000\" stroke-width=\"" << fmt(0.04 * s)
      << "\" stroke-linejoin=\"round\">\n";
  for (const Tile& t : p.tiles()) {
    out << "    <polygon points=\"";
    bool sep = false;
    for (const Vertex& v : tile_corners(t)) {
      const XY q = embed(v, s);
      if (sep) out << " ";
      out << fmt(q.x) << "," << fmt(q.y);
      sep = true;
    }
    out << "\" fill=\"" << svg_fill(t.type, opts.shading) << "\"/>\n";
    const auto [e0, e1] = internal_edge(t);
    const XY q0 = embed(e0, s), q1 = embed(e1, s);
    out << "    <line x1=\"" << fmt(q0.x) << "\" y1=\"" << fmt(q0.y) << "\" x2=\""
        << fmt(q1.x) << "\" y2=\"" << fmt(q1.y) << "\" stroke=\"#808080\" stroke-width=\""
        << fmt(0.02 * s) << "\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string render_tikz(const Pattern& p, const RenderOptions& opts) {
  std::ostringstream out;
  out << "% Diamond-tiling picture: one macro call per tile, arguments are the\n"
         "% oblique (a, b) lattice coordinates of the tile.\n";
  out << "\\begin{tikzpicture}[x={(1cm,0cm)},y={(0.5cm," << fmt(kRowHeight)
      << "cm)},scale=" << fmt(opts.scale) << "]\n";
  const char* top_fill = opts.shading ? "white" : "white";
  const char* left_fill = opts.shading ? "black!15" : "white";
  const char* right_fill = opts.shading ? "black!35" : "white";
  out << "\\newcommand{\\tileTop}[2]{\\filldraw[fill=" << top_fill
      << ",draw=black] (#1,#2) -- ({#1+1},#2) -- ({#1+1},{#2+1}) -- (#1,{#2+1}) -- "
         "cycle; \\draw[black!50,thin] ({#1+1},#2) -- (#1,{#2+1});}\n";
  out << "\\newcommand{\\tileLeft}[2]{\\filldraw[fill=" << left_fill
      << ",draw=black] (#1,#2) -- ({#1+1},#2) -- (#1,{#2+1}) -- ({#1-1},{#2+1}) -- "
         "cycle; \\draw[black!50,thin] (#1,#2) -- (#1,{#2+1});}\n";
  out << "\\newcommand{\\tileRight}[2]{\\filldraw[fill=" << right_fill
      << ",draw=black] ({#1+1},{#2-1}) -- ({#1+1},#2) -- (#1,{#2+1}) -- (#1,#2) -- "
         "cycle; \\draw[black!50,thin] (#1,#2) -- ({#1+1},#2);}\n";
  for (const Tile& t : p.tiles()) {
    switch (t.type) {
      case TileType::Top: out << "\\tileTop{" << t.a << "}{" << t.b << "}\n"; break;
      case TileType::Left: out << "\\tileLeft{" << t.a << "}{" << t.b << "}\n"; break;
      case TileType::Right: out << "\\tileRight{" << t.a << "}{" << t.b << "}\n"; break;
    }
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

// ASCII raster: the shear x = 4a + 2b gives every lattice row two text rows;
// each tile is drawn as its rhombus outline ('/', '\', '_'), with the glued
// internal edge omitted so the tile boundaries stay readable.
std::string render_ascii(const Pattern& p) {
  if (p.empty()) return "";
  struct Placement {
    int strip;  // lattice row of the edge
    int row_in_strip;  // 0 = upper text row, 1 = lower text row
    int col;
    char ch;
  };
  std::vector<Placement> marks;
  auto add = [&marks](int strip, int row_in_strip, int col, char ch) {
    marks.push_back({strip, row_in_strip, col, ch});
  };
  // One entry per boundary edge, as (direction, base vertex): the base is the
  // endpoint from which the edge runs along the canonical direction vector.
  for (const Tile& t : p.tiles()) {
    const TileFrame f = tile_frame(t);
    const Vertex u = direction_vector(f.du);
    const Vertex w = direction_vector(f.dw);
    const Vertex o = f.origin;
    const Vertex ou{o.a + u.a, o.b + u.b};
    const Vertex ow{o.a + w.a, o.b + w.b};
    const std::pair<Direction, Vertex> edges[4] = {
        {f.du, o}, {f.du, ow}, {f.dw, o}, {f.dw, ou}};
    for (const auto& [dir, base] : edges) {
      const int x = base.a, y = base.b;
      switch (dir) {
        case Direction::D1:
          add(y, 1, 4 * x + 2 * y + 1, '_');
          add(y, 1, 4 * x + 2 * y + 2, '_');
          break;
        case Direction::D2:
          add(y, 1, 4 * x + 2 * y, '/');
          add(y, 0, 4 * x + 2 * y + 1, '/');
          break;
        case Direction::D3:
          add(y, 0, 4 * x + 2 * y - 2, '\\');
          add(y, 1, 4 * x + 2 * y - 1, '\\');
          break;
      }
    }
  }
  int strip_max = marks.front().strip, col_min = marks.front().col, col_max = col_min;
  int strip_min = strip_max;
  for (const Placement& m : marks) {
    strip_min = std::min(strip_min, m.strip);
    strip_max = std::max(strip_max, m.strip);
    col_min = std::min(col_min, m.col);
    col_max = std::max(col_max, m.col);
  }
  const int rows = 2 * (strip_max - strip_min) + 2;
  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(static_cast<std::size_t>(col_max - col_min + 1), ' '));
  for (const Placement& m : marks) {
    const int row = 2 * (strip_max - m.strip) + m.row_in_strip;
    grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(m.col - col_min)] = m.ch;
  }
  std::string out;
  for (std::string& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (line.empty() && out.empty()) continue;  // drop a blank leading row
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_pattern(const Pattern& p, const RenderOptions& opts) {
  if (!(opts.scale > 0)) fail(Errc::InvalidArgument, "render scale must be positive");
  switch (opts.format) {
    case RenderFormat::Svg: return render_svg(p, opts);
    case RenderFormat::TikZ: return render_tikz(p, opts);
    case RenderFormat::Ascii: return render_ascii(p);
  }
  fail(Errc::InvalidArgument, "unknown render format");
}

// --- CLI -------------------------------------------------------------------------

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidDocument, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::InvalidDocument, "cannot write file: " + path);
  out << text;
}

Variant variant_from_string(const std::string& s) {
  if (s == "tredoku") return Variant::Tredoku;
  if (s == "weak") return Variant::Weak;
  if (s == "generalized") return Variant::Generalized;
  fail(Errc::InvalidArgument,
       "unknown variant \"" + s + "\" (expected tredoku, weak, or generalized)");
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

Json stats_to_json(const PatternStats& st) {
  Json j = Json::object();
  j["tiles"] = st.tiles;
  j["runs3"] = st.runs3;
  j["leaves"] = st.leaves;
  j["type_counts"] = Json::array({st.type_counts[0], st.type_counts[1], st.type_counts[2]});
  Json hist = Json::object();
  for (const auto& [len, n] : st.run_length_hist) hist[std::to_string(len)] = n;
  j["run_length_hist"] = std::move(hist);
  return j;
}

int cmd_validate(const std::string& file, Strictness strictness) {
  std::vector<std::string> warnings;
  const Pattern p = parse_pattern_document(read_file(file), &warnings);
  print_warnings(warnings);
  const std::optional<Violation> violation = first_violation(p, strictness);
  const char* name = strictness == Strictness::Weak        ? "weak"
                     : strictness == Strictness::Tredoku   ? "tredoku"
                                                           : "generalized";
  Json out = Json::object();
  out["valid"] = !violation.has_value();
  out["strictness"] = name;
  out["stats"] = stats_to_json(stats(p));
  if (violation) {
    Json v = Json::object();
    v["condition"] = violation->condition;
    v["message"] = violation->message;
    out["violation"] = std::move(v);
  } else {
    out["violation"] = nullptr;
  }
  std::cout << dump_document(out);
  return violation ? 1 : 0;
}

int cmd_stats(const std::string& file) {
  std::vector<std::string> warnings;
  const Pattern p = parse_pattern_document(read_file(file), &warnings);
  print_warnings(warnings);
  Json out = stats_to_json(stats(p));
  out["is_weak_tredoku"] = is_weak_tredoku(p);
  out["is_tredoku"] = is_tredoku(p);
  out["is_generalized_tredoku"] = is_generalized_tredoku(p);
  out["preece_inequality"] = preece_inequality_holds(p);
  std::cout << dump_document(out);
  return 0;
}

int cmd_construct(int tiles, int runs, const std::string& out_path) {
  const ParameterTriple t{tiles, runs, 2 * tiles - 3 * runs};
  const Pattern p = construct(t);
  write_output(out_path, write_pattern_document(p));
  return 0;
}

int cmd_enumerate(const EnumQuery& query, const EnumOptions& opts,
                  const std::string& census_path) {
  const CensusReport report = enumerate_patterns(query, opts);
  write_output(census_path, write_census_document(report, query));
  std::cerr << "classes: " << report.total_patterns
            << (report.complete ? "" : " (INCOMPLETE: node budget exhausted)") << "\n";
  return report.complete ? 0 : 1;
}

int cmd_verify(const std::string& theorem, std::optional<int> max_tiles,
               const EnumOptions& opts) {
  if (theorem == "main" || theorem == "main-weak") {
    const int n = max_tiles.value_or(8);
    const TheoremReport report = theorem == "main" ? verify_main_theorem(n, opts)
                                                   : verify_main_weak_theorem(n, opts);
    for (const auto& [triple, count] : report.census.counts) {
      std::cout << "(" << std::get<0>(triple) << "," << std::get<1>(triple) << ","
                << std::get<2>(triple) << ") " << count << "\n";
    }
    std::cout << "classes: " << report.census.total_patterns << "\n";
    for (const std::string& d : report.disagreements) {
      std::cout << "disagreement: " << d << "\n";
    }
    std::cout << (report.ok() ? "verification passed" : "verification FAILED") << "\n";
    return report.ok() ? 0 : 1;
  }
  if (theorem == "verdant") {
    const int n = max_tiles.value_or(9);
    std::vector<Pattern> found;
    const CensusReport report = enumerate_verdant(n, &found, opts);
    std::map<int, std::int64_t> by_size;
    for (const auto& [triple, count] : report.counts) {
      by_size[std::get<0>(triple)] += count;
    }
    std::map<int, std::int64_t> expected;
    std::vector<std::vector<std::uint32_t>> catalog_keys;
    for (const Pattern& c : verdant_catalog()) {
      if (c.size() <= n) {
        ++expected[c.size()];
        catalog_keys.push_back(canonical_key(c));
      }
    }
    bool ok = by_size == expected && report.complete;
    for (const Pattern& p : found) {
      const std::vector<std::uint32_t> key = canonical_key(p);
      ok = ok && std::find(catalog_keys.begin(), catalog_keys.end(), key) != catalog_keys.end();
    }
    std::cout << "maximum-leaf classes by tile count (tau <= " << n << "):";
    for (const auto& [size, count] : by_size) std::cout << " " << size << ":" << count;
    std::cout << "\n"
              << (ok ? "all classes match the catalog\nverification passed"
                     : "verification FAILED")
              << "\n";
    return ok ? 0 : 1;
  }
  if (theorem == "twelve") {
    const TwelveTileReport report = verify_twelve_tile_zero_leaf(false, opts);
    std::cout << "12-tile zero-leaf search: " << report.pruned_classes
              << " patterns found\n";
    std::cout << (report.modes_agree ? "pruned and cross-check modes agree"
                                     : "MODES DISAGREE")
              << "\n";
    std::cout << "9-tile zero-leaf classes: " << report.nine_tile_classes
              << (report.nine_tile_type_counts_divisible_by_3
                      ? " (type counts divisible by 3)"
                      : " (TYPE COUNTS NOT DIVISIBLE BY 3)")
              << "\n";
    const bool ok = report.pruned_classes == 0 && report.crosscheck_classes == 0 &&
                    report.modes_agree && report.nine_tile_classes == 3 &&
                    report.nine_tile_type_counts_divisible_by_3;
    std::cout << (ok ? "verification passed" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
  }
  fail(Errc::InvalidArgument,
       "unknown theorem \"" + theorem + "\" (expected main, main-weak, verdant, or twelve)");
}

int cmd_solve(const std::string& file, std::optional<std::int64_t> count_cap) {
  std::vector<std::string> warnings;
  const PuzzleDocument doc = parse_puzzle_document(read_file(file), &warnings);
  print_warnings(warnings);
  const SolveResult result = solve(doc.pattern, doc.clues);
  Json out = Json::object();
  out["format_version"] = kFormatVersion;
  out["status"] = result.status == SolveStatus::Solved  ? "solved"
                  : result.status == SolveStatus::Unsat ? "unsat"
                                                        : "capped";
  if (result.assignment) {
    Json cells = Json::array();
    for (const auto& [cell, value] : *result.assignment) {
      Json e = Json::object();
      e["tile_index"] = cell.tile;
      e["i"] = cell.i;
      e["j"] = cell.j;
      e["value"] = value;
      cells.push_back(std::move(e));
    }
    out["solution"] = std::move(cells);
  }
  if (count_cap) {
    Json c = Json::object();
    c["cap"] = *count_cap;
    c["count"] = count_solutions(doc.pattern, doc.clues, *count_cap);
    out["completions"] = std::move(c);
  }
  std::cout << dump_document(out);
  return result.status == SolveStatus::Solved ? 0 : 1;
}

int cmd_render(const std::string& file, const std::string& format, double scale,
               bool no_shading, const std::string& out_path) {
  std::vector<std::string> warnings;
  const Pattern p = parse_pattern_document(read_file(file), &warnings);
  print_warnings(warnings);
  RenderOptions opts;
  if (format == "svg") {
    opts.format = RenderFormat::Svg;
  } else if (format == "tikz") {
    opts.format = RenderFormat::TikZ;
  } else if (format == "ascii") {
    opts.format = RenderFormat::Ascii;
  } else {
    fail(Errc::InvalidArgument,
         "unknown render format \"" + format + "\" (expected svg, tikz, or ascii)");
  }
  opts.shading = !no_shading;
  opts.scale = scale;
  write_output(out_path, render_pattern(p, opts));
  return 0;
}

int cmd_count_hexagon(int side, const std::string& variant) {
  const Variant v = variant_from_string(variant);
  const HexagonCount count = count_hexagon(side, v);
  Json out = Json::object();
  out["side"] = side;
  out["variant"] = variant;
  out["placed"] = count.placed;
  out["classes"] = count.classes;
  std::cout << dump_document(out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"diamond tilings of the triangular lattice with run lengths 1 and 3"};
  app.require_subcommand(1);

  // validate
  auto* validate = app.add_subcommand("validate", "check a pattern file and print stats");
  std::string validate_file;
  bool flag_weak = false, flag_generalized = false;
  validate->add_option("file", validate_file, "pattern document")->required();
  auto* weak_opt = validate->add_flag("--weak", flag_weak, "check the weak definition");
  validate->add_flag("--generalized", flag_generalized, "check the generalized definition")
      ->excludes(weak_opt);

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "print pattern statistics");
  std::string stats_file;
  stats_cmd->add_option("file", stats_file, "pattern document")->required();

  // construct
  auto* construct_cmd =
      app.add_subcommand("construct", "build a pattern with the given parameters");
  int con_tiles = 0, con_runs = 0;
  std::string con_out;
  construct_cmd->add_option("--tiles", con_tiles, "number of tiles")->required();
  construct_cmd->add_option("--runs", con_runs, "number of length-3 runs")->required();
  construct_cmd->add_option("--out", con_out, "output file (default stdout)");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "census of patterns up to congruence");
  int enum_max = 3, enum_workers = 0;
  std::int64_t enum_budget = 0;
  std::string enum_variant = "tredoku", enum_census;
  std::optional<int> enum_rho, enum_leaves;
  enum_cmd->add_option("--max-tiles", enum_max, "maximum tile count")->required();
  enum_cmd->add_option("--variant", enum_variant, "tredoku | weak | generalized");
  enum_cmd->add_option("--rho", enum_rho, "only patterns with this many length-3 runs");
  enum_cmd->add_option("--leaves", enum_leaves, "only patterns with this many leaves");
  enum_cmd->add_option("--census", enum_census, "census output file (default stdout)");
  enum_cmd->add_option("--workers", enum_workers, "worker threads (overrides TREDOKU_WORKERS)");
  enum_cmd->add_option("--node-budget", enum_budget,
                       "search node budget (overrides TREDOKU_NODE_BUDGET)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "re-check a classification result");
  std::string verify_theorem;
  std::optional<int> verify_max;
  int verify_workers = 0;
  std::int64_t verify_budget = 0;
  verify_cmd->add_option("--theorem", verify_theorem, "main | main-weak | verdant | twelve")
      ->required();
  verify_cmd->add_option("--max-tiles", verify_max, "census size (defaults per theorem)");
  verify_cmd->add_option("--workers", verify_workers, "worker threads");
  verify_cmd->add_option("--node-budget", verify_budget, "search node budget");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve the digit puzzle on a pattern");
  std::string solve_file;
  std::optional<std::int64_t> solve_cap;
  solve_cmd->add_option("file", solve_file, "puzzle document (pattern + clues)")->required();
  solve_cmd->add_option("--count-cap", solve_cap, "also count completions up to this cap");

  // render
  auto* render_cmd = app.add_subcommand("render", "render a pattern to svg, tikz, or ascii");
  std::string render_file, render_format, render_out;
  double render_scale = 1.0;
  bool render_no_shading = false;
  render_cmd->add_option("file", render_file, "pattern document")->required();
  render_cmd->add_option("--format", render_format, "svg | tikz | ascii")->required();
  render_cmd->add_option("--scale", render_scale, "scale factor (default 1)");
  render_cmd->add_flag("--no-shading", render_no_shading, "draw all tiles unshaded");
  render_cmd->add_option("--out", render_out, "output file (default stdout)");

  // count-hexagon
  auto* hex_cmd = app.add_subcommand("count-hexagon",
                                     "count patterns inside the hexagon of a given side");
  int hex_side = 1;
  std::string hex_variant = "tredoku";
  hex_cmd->add_option("--side", hex_side, "hexagon side length")->required();
  hex_cmd->add_option("--variant", hex_variant, "tredoku | weak | generalized");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) {
      const Strictness s = flag_weak          ? Strictness::Weak
                           : flag_generalized ? Strictness::Generalized
                                              : Strictness::Tredoku;
      return cmd_validate(validate_file, s);
    }
    if (app.got_subcommand(stats_cmd)) return cmd_stats(stats_file);
    if (app.got_subcommand(construct_cmd)) {
      return cmd_construct(con_tiles, con_runs, con_out);
    }
    if (app.got_subcommand(enum_cmd)) {
      EnumQuery query;
      query.max_tiles = enum_max;
      query.variant = variant_from_string(enum_variant);
      query.runs3 = enum_rho;
      query.leaves = enum_leaves;
      EnumOptions opts;
      opts.workers = enum_workers;
      opts.node_budget = enum_budget;
      return cmd_enumerate(query, opts, enum_census);
    }
    if (app.got_subcommand(verify_cmd)) {
      EnumOptions opts;
      opts.workers = verify_workers;
      opts.node_budget = verify_budget;
      return cmd_verify(verify_theorem, verify_max, opts);
    }
    if (app.got_subcommand(solve_cmd)) return cmd_solve(solve_file, solve_cap);
    if (app.got_subcommand(render_cmd)) {
      return cmd_render(render_file, render_format, render_scale, render_no_shading,
                        render_out);
    }
    if (app.got_subcommand(hex_cmd)) return cmd_count_hexagon(hex_side, hex_variant);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == Errc::InvalidArgument || e.code() == Errc::InvalidDocument;
    return usage ? 2 : 1;
  }
  return 2;
}

}  // namespace tredoku
