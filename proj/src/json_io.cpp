#include "flipforge/json_io.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "flipforge/errors.h"
#include "flipforge/phi.h"

namespace flipforge {

namespace {

json diagonals_json(const Triangulation& t) {
  json out = json::array();
  for (const Diagonal& d : t.diagonals()) out.push_back({d.lo, d.hi});
  return out;
}

std::vector<Diagonal> diagonals_from(const json& arr) {
  if (!arr.is_array()) throw DomainError("diagonals must be an array of pairs");
  std::vector<Diagonal> out;
  for (const json& d : arr) {
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
      throw DomainError("each diagonal must be a pair of integers");
    }
    out.push_back(make_diagonal(d[0].get<int>(), d[1].get<int>()));
  }
  return out;
}

int require_n(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw DomainError("expected an object with integer field \"n\"");
  }
  const int n = j["n"].get<int>();
  if (n < 0) throw DomainError("n must be nonnegative");
  return n;
}

Coloring coloring_from(const json& arr, int n, const char* field, bool signs) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
    throw DomainError(std::string("\"") + field + "\" must be an array of length n");
  }
  std::vector<int> values;
  for (const json& v : arr) {
    if (!v.is_number_integer()) throw DomainError(std::string("\"") + field + "\" entries must be integers");
    const int x = v.get<int>();
    if (signs && x != 1 && x != -1) throw DomainError("signs must be +1 or -1");
    if (!signs && x < 1) throw DomainError("colors must be positive");
    values.push_back(x);
  }
  return Coloring(std::move(values));
}

// A hemisphere given either as a diagonal list or as a triangulation object.
Triangulation hemisphere(const json& j, int n, const char* field) {
  if (j.is_object()) {
    TriangulationDoc doc = triangulation_from_json(j);
    if (doc.triangulation.n() != n) throw DomainError(std::string(field) + " has a different n");
    return doc.triangulation;
  }
  return Triangulation(n, diagonals_from(j));
}

}  // namespace

json to_json(const Triangulation& t) { return json{{"n", t.n()}, {"diagonals", diagonals_json(t)}}; }

json to_json(const TriangulationDoc& doc) {
  json out = to_json(doc.triangulation);
  if (doc.colors) out["colors"] = doc.colors->values();
  if (doc.signs) out["signs"] = doc.signs->values();
  return out;
}

TriangulationDoc triangulation_from_json(const json& j) {
  const int n = require_n(j);
  if (!j.contains("diagonals")) throw DomainError("missing field \"diagonals\"");
  TriangulationDoc doc{Triangulation(n, diagonals_from(j["diagonals"])), std::nullopt, std::nullopt};
  if (j.contains("colors")) doc.colors = coloring_from(j["colors"], n, "colors", false);
  if (j.contains("signs")) doc.signs = coloring_from(j["signs"], n, "signs", true);
  return doc;
}

json to_json(const SphereTriangulation& s) {
  json out{{"n", s.n()}, {"north", diagonals_json(s.north)}, {"south", diagonals_json(s.south)}};
  if (s.signs) {
    json signs = json::object();
    for (int i = 1; i <= s.n(); ++i) {
      signs["N:" + std::to_string(i)] = s.signs->north.color_of(i);
      signs["S:" + std::to_string(i)] = s.signs->south.color_of(i);
    }
    out["signs"] = signs;
  }
  return out;
}

SphereTriangulation sphere_from_json(const json& j) {
  const int n = require_n(j);
  if (!j.contains("north") || !j.contains("south")) throw DomainError("sphere needs \"north\" and \"south\"");
  SphereTriangulation s = glue(hemisphere(j["north"], n, "north"), hemisphere(j["south"], n, "south"));
  if (j.contains("signs")) {
    const json& sj = j["signs"];
    if (!sj.is_object()) throw DomainError("\"signs\" must be an object");
    SphereSigning signs{Coloring::constant(n, 0), Coloring::constant(n, 0)};
    for (const auto& [key, value] : sj.items()) {
      if (key.size() < 3 || (key[0] != 'N' && key[0] != 'S') || key[1] != ':') {
        throw DomainError("bad sign key \"" + key + "\"");
      }
      int label = 0;
      try {
        std::size_t used = 0;
        label = std::stoi(key.substr(2), &used);
        if (used != key.size() - 2) throw DomainError("");
      } catch (const std::exception&) {
        throw DomainError("bad sign key \"" + key + "\"");
      }
      if (label < 1 || label > n) throw DomainError("sign key \"" + key + "\" is out of range");
      if (!value.is_number_integer() || (value.get<int>() != 1 && value.get<int>() != -1)) {
        throw DomainError("sign \"" + key + "\" must be +1 or -1");
      }
      (key[0] == 'N' ? signs.north : signs.south).set(label, value.get<int>());
    }
    for (int i = 1; i <= n; ++i) {
      if (signs.north.color_of(i) == 0 || signs.south.color_of(i) == 0) {
        throw DomainError("sphere signing is partial: missing label " + std::to_string(i));
      }
    }
    s.signs = std::move(signs);
  }
  return s;
}

std::string certificate_to_jsonl(const Certificate& cert) {
  std::string out;
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    json line{{"word", cert.chain[i]}};
    if (i > 0) line["kind"] = to_string(cert.kinds.at(i - 1));
    out += line.dump() + "\n";
  }
  return out;
}

Certificate certificate_from_jsonl(std::string_view text) {
  Certificate cert;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json j = parse_json(line);
    const std::string where = "certificate line " + std::to_string(number);
    if (!j.is_object() || !j.contains("word") || !j["word"].is_array()) {
      throw DomainError(where + ": expected {\"word\": [...]}");
    }
    SignedWord w;
    for (const json& x : j["word"]) {
      if (!x.is_number_integer()) throw DomainError(where + ": letters must be integers");
      w.push_back(x.get<int>());
    }
    if (cert.chain.empty()) {
      if (j.contains("kind")) throw DomainError(where + ": the first word has no step kind");
    } else {
      if (!j.contains("kind") || !j["kind"].is_string()) throw DomainError(where + ": missing step kind");
      auto kind = step_kind_from_string(j["kind"].get<std::string>());
      if (!kind) throw DomainError(where + ": step kind must be K1 or K2");
      cert.kinds.push_back(*kind);
    }
    cert.chain.push_back(std::move(w));
  }
  if (cert.chain.empty()) throw DomainError("empty certificate");
  return cert;
}

std::vector<Triangulation> path_from_json(const json& j) {
  std::vector<Triangulation> path;
  if (j.is_object() && j.contains("perms")) {
    if (!j["perms"].is_array()) throw DomainError("\"perms\" must be an array");
    for (const json& p : j["perms"]) {
      Permutation sigma;
      if (p.is_string()) {
        sigma = parse_word(p.get<std::string>()).word;
      } else {
        sigma = p.get<Permutation>();
      }
      Triangulation t = phi(sigma);
      if (path.empty() || path.back() != t) path.push_back(std::move(t));
    }
  } else if (j.is_object() && j.contains("triangulations")) {
    if (!j["triangulations"].is_array()) throw DomainError("\"triangulations\" must be an array");
    for (const json& t : j["triangulations"]) path.push_back(triangulation_from_json(t).triangulation);
  } else {
    throw DomainError("path file needs \"triangulations\" or \"perms\"");
  }
  if (path.empty()) throw DomainError("empty path");
  if (j.contains("n") && j["n"].is_number_integer() && j["n"].get<int>() != path.front().n()) {
    throw DomainError("path entries disagree with \"n\"");
  }
  return path;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << contents;
}

ParsedWord parse_word(std::string_view text) {
  ParsedWord out;
  if (text.empty()) return out;
  const bool letters = std::all_of(text.begin(), text.end(), [](char c) { return c >= 'a' && c <= 'z'; });
  const bool digits = std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (letters) {
    out.style = WordStyle::Letters;
    for (char c : text) out.word.push_back(c - 'a' + 1);
  } else if (digits && text.size() <= 9) {
    out.style = WordStyle::Digits;
    for (char c : text) out.word.push_back(c - '0');
  } else if (digits) {
    throw DomainError("bare digit strings are limited to 9 letters; use a comma list");
  } else {
    out.style = WordStyle::Commas;
    out.word = parse_int_list(text);
  }
  return out;
}

std::string format_word(const Word& w, WordStyle style) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (style) {
      case WordStyle::Letters:
        if (w[i] < 1 || w[i] > 26) return format_word(w, WordStyle::Commas);
        out += static_cast<char>('a' + w[i] - 1);
        break;
      case WordStyle::Digits:
        if (w[i] < 0 || w[i] > 9) return format_word(w, WordStyle::Commas);
        out += static_cast<char>('0' + w[i]);
        break;
      case WordStyle::Commas:
        if (i) out += ',';
        out += std::to_string(w[i]);
        break;
    }
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string item(text.substr(pos, comma - pos));
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("not an integer list: \"" + std::string(text) + "\"");
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace flipforge
