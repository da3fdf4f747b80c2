#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "flipforge/heawood.h"
#include "flipforge/signing.h"
#include "flipforge/triangulation.h"
#include "flipforge/words.h"

namespace flipforge {

using nlohmann::json;

/// Triangulation file contents: {"n", "diagonals", "colors"?, "signs"?}.
struct TriangulationDoc {
  Triangulation triangulation;
  std::optional<Coloring> colors;
  std::optional<Coloring> signs;
};

json to_json(const Triangulation& t);
json to_json(const TriangulationDoc& doc);
/// Throws DomainError on schema violations or an invalid triangulation.
TriangulationDoc triangulation_from_json(const json& j);

/// {"n", "north": [[i,j],...], "south": [[i,j],...], "signs"?: {"N:i": s, "S:i": s}}.
json to_json(const SphereTriangulation& s);
SphereTriangulation sphere_from_json(const json& j);

/// One JSON object per line: {"word": [...]} first, then {"word": [...], "kind": "K1"|"K2"}.
std::string certificate_to_jsonl(const Certificate& cert);
Certificate certificate_from_jsonl(std::string_view text);

/// Path file: {"n", "triangulations": [...]} or {"perms": [[...], ...]}; permutations
/// are mapped through phi with consecutive repeats dropped.
std::vector<Triangulation> path_from_json(const json& j);

/// Parses a JSON document, reporting syntax errors as DomainError.
json parse_json(std::string_view text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

enum class WordStyle { Letters, Digits, Commas };

struct ParsedWord {
  Word word;
  WordStyle style = WordStyle::Commas;
};

/// Letters a-z are colors 1..26; a digit string is one value per digit; a
/// comma list may hold any integers (signed words use a leading '-').
ParsedWord parse_word(std::string_view text);
std::string format_word(const Word& w, WordStyle style);

/// "2,3,2,1" -> {2, 3, 2, 1}.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace flipforge
