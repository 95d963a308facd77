// Serialisation and presentation: versioned JSON documents for patterns,
// puzzles, and censuses; SVG / TikZ / ASCII renderers; and the command-line
// front end.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tredoku/enumerate.hpp"
#include "tredoku/geometry.hpp"
#include "tredoku/puzzle.hpp"

namespace tredoku {

inline constexpr const char* kFormatVersion = "1";

// --- Documents -----------------------------------------------------------------

// Pattern document: {"format_version":"1","tiles":[{"a":..,"b":..,"type":..}]}.
// Unknown fields anywhere are rejected.  Fewer than 3 tiles parses with a
// warning; an empty tile list is an error.
Pattern parse_pattern_document(const std::string& text,
                               std::vector<std::string>* warnings = nullptr);
std::string write_pattern_document(const Pattern& p);

struct PuzzleDocument {
  Pattern pattern;
  Assignment clues;
};
// Adds "clues":[{"tile_index":..,"i":..,"j":..,"value":..}] to the pattern
// document; indices and digits are range-checked against the pattern.  A
// missing "clues" field parses as an empty clue set; writing always emits it.
PuzzleDocument parse_puzzle_document(const std::string& text,
                                     std::vector<std::string>* warnings = nullptr);
std::string write_puzzle_document(const PuzzleDocument& doc);

// Census document: reproducible bytes (records sorted; no timing fields).
std::string write_census_document(const CensusReport& report, const EnumQuery& query);

// --- Rendering -----------------------------------------------------------------

enum class RenderFormat { Svg, TikZ, Ascii };

struct RenderOptions {
  RenderFormat format = RenderFormat::Svg;
  bool shading = true;   // light fill per tile type (SVG/TikZ only)
  double scale = 1.0;    // multiplies the base edge length
};

// SVG: Euclidean embedding of the tile outlines; translation-covariant (the
// same pattern translated yields translated coordinates, no recentring).
// TikZ: self-contained picture using locally defined rhombus macros.
// ASCII: fixed raster, two text rows per lattice row, suitable for golden
// files.
std::string render_pattern(const Pattern& p, const RenderOptions& opts);

// --- CLI -----------------------------------------------------------------------

// Entry point used by the tredoku binary.  Exit codes: 0 success (and, for
// `validate`, valid); 1 domain failure (invalid pattern, unsatisfiable
// puzzle, failed verification); 2 usage or parse errors.
int run_cli(int argc, const char* const* argv);

}  // namespace tredoku
