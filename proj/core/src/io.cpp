#include "steenrod/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

namespace steenrod {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string regex_escape(const std::string& s) {
  static const std::regex special(R"([.^$|()\[\]{}*+?\\])");
  return std::regex_replace(s, special, R"(\$&)");
}

// Best-effort location of `"key": "value"`; the `occurrence`-th match (0-based).
ParseError located(std::string_view text, const std::string& message, const std::string& key, const std::string& value,
                   std::size_t occurrence = 0) {
  const std::string s(text);
  const std::regex pattern("\"" + regex_escape(key) + "\"\\s*:\\s*\"" + regex_escape(value) + "\"");
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), pattern); it != std::sregex_iterator(); ++it, ++seen) {
    if (seen == occurrence) {
      const auto [line, column] = position(text, static_cast<std::size_t>(it->position()));
      return ParseError(message, line, column);
    }
  }
  return ParseError(message, 0, 0);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = position(text, offset);
    std::string what = e.what();
    // Drop the library prefix "[json.exception.parse_error.101] parse error at line 1, column 2: ".
    if (auto colon = what.find(": "); colon != std::string::npos && what.rfind("[json.exception", 0) == 0) {
      what = what.substr(colon + 2);
    }
    throw ParseError(what, line, column);
  }
}

const json& member(const json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string(where) + ": missing \"" + key + "\"", 0, 0);
  return obj.at(key);
}

std::string string_member(const json& obj, const char* key, const char* where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) throw ParseError(std::string(where) + ": \"" + key + "\" must be a string", 0, 0);
  return v.get<std::string>();
}

void check_name(std::string_view text, const json& doc, const char* key, const std::string& expected) {
  if (!doc.contains(key)) return;
  const std::string got = string_member(doc, key, "map");
  if (got != expected) {
    throw located(text, "map " + std::string(key) + " '" + got + "' does not match complex '" + expected + "'", key, got);
  }
}

Cell lookup(std::string_view text, const DeltaComplex& x, const std::string& id, const char* key) {
  const auto c = x.find(id);
  if (!c) throw located(text, "unknown simplex '" + id + "' in complex '" + x.name() + "'", key, id);
  return *c;
}

}  // namespace

ParsedComplex parse_complex(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("a complex file must hold a JSON object", 1, 1);
  ParsedComplex out;
  if (doc.contains("kind")) {
    const std::string kind = string_member(doc, "kind", "complex");
    if (kind == "simplicial") {
      out.simplicial = true;
    } else if (kind != "delta") {
      throw located(text, "unknown kind '" + kind + "'", "kind", kind);
    }
  }
  if (doc.contains("max_dim")) {
    if (!doc["max_dim"].is_number_integer() || doc["max_dim"].get<int>() < 0) {
      throw ParseError("\"max_dim\" must be a natural number", 0, 0);
    }
    out.max_dim = doc["max_dim"].get<int>();
  }
  out.complex.set_name(doc.contains("name") ? string_member(doc, "name", "complex") : std::string("complex"));
  const json& simplices = member(doc, "simplices", "complex");
  if (!simplices.is_array()) throw ParseError("\"simplices\" must be an array", 0, 0);

  std::unordered_map<std::string, std::size_t> seen;
  for (const json& s : simplices) {
    const std::string id = string_member(s, "id", "simplex");
    const json& dim_value = member(s, "dim", "simplex");
    if (!dim_value.is_number_integer() || dim_value.get<long long>() < 0 || dim_value.get<long long>() > 64) {
      throw located(text, "simplex '" + id + "': \"dim\" must be a small natural number", "id", id, seen[id]);
    }
    const int dim = dim_value.get<int>();
    std::vector<std::string> faces;
    if (dim > 0) {
      const json& f = member(s, "faces", "simplex");
      if (!f.is_array()) throw located(text, "simplex '" + id + "': \"faces\" must be an array", "id", id, seen[id]);
      for (const json& face : f) {
        if (!face.is_string()) throw located(text, "simplex '" + id + "': face ids must be strings", "id", id, seen[id]);
        faces.push_back(face.get<std::string>());
      }
    } else if (s.contains("faces") && !s["faces"].empty()) {
      throw located(text, "vertex '" + id + "' cannot have faces", "id", id, seen[id]);
    }
    if (seen.contains(id)) throw located(text, "duplicate simplex id '" + id + "'", "id", id, seen[id]);
    try {
      out.complex.add(id, dim, std::move(faces));
    } catch (const std::invalid_argument& e) {
      throw located(text, e.what(), "id", id, seen[id]);
    }
    seen[id] += 1;
  }
  return out;
}

DeltaMap parse_delta_map(std::string_view text, const ComplexPtr& source, const ComplexPtr& target) {
  const json doc = parse_json(text);
  check_name(text, doc, "source", source->name());
  check_name(text, doc, "target", target->name());
  const json& list = member(doc, "assignment", "map");
  if (!list.is_array()) throw ParseError("\"assignment\" must be an array", 0, 0);
  DeltaMap f(source, target);
  for (const json& entry : list) {
    const Cell from = lookup(text, *source, string_member(entry, "from", "assignment"), "from");
    const Cell to = lookup(text, *target, string_member(entry, "to", "assignment"), "to");
    f.assign(from, to);
  }
  return f;
}

ChainMap parse_chain_map(std::string_view text, const ChainComplexPtr& source, const ChainComplexPtr& target) {
  const json doc = parse_json(text);
  check_name(text, doc, "source", source->name());
  check_name(text, doc, "target", target->name());
  const json& maps = member(doc, "maps", "chain map");
  if (!maps.is_object()) throw ParseError("\"maps\" must be an object keyed by degree", 0, 0);
  ChainMap f(source, target);
  for (const auto& [key, list] : maps.items()) {
    int degree = -1;
    try {
      std::size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) degree = -1;
    } catch (const std::exception&) {
      degree = -1;
    }
    if (degree < 0) throw ParseError("degree key '" + key + "' is not a natural number", 0, 0);
    if (!list.is_array()) throw ParseError("degree " + key + ": expected an array", 0, 0);
    for (const json& entry : list) {
      const std::string from = string_member(entry, "from", "chain map entry");
      const auto g = source->find(degree, from);
      if (!g) throw located(text, "unknown source generator '" + from + "' in degree " + key, "from", from);
      Chain image(degree);
      for (const json& term : member(entry, "to", "chain map entry")) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_number_integer()) {
          throw located(text, "image of '" + from + "' must be a list of [id, coefficient] pairs", "from", from);
        }
        const std::string id = term[0].get<std::string>();
        const auto h = target->find(degree, id);
        if (!h) throw located(text, "unknown target generator '" + id + "' in degree " + key, "from", from);
        image.add(*h, term[1].get<Coeff>());
      }
      f.set(degree, *g, std::move(image));
    }
  }
  return f;
}

bool is_chain_map_text(std::string_view text) {
  const json doc = parse_json(text);
  return doc.is_object() && doc.contains("maps");
}

namespace {

using ordered = nlohmann::ordered_json;

ordered simplex_entry(const std::string& id, int dim, const std::vector<std::string>& faces) {
  ordered s = ordered::object();
  s["id"] = id;
  s["dim"] = dim;
  if (dim > 0) s["faces"] = faces;
  return s;
}

ordered simplices_json(const DeltaComplex& x) {
  ordered list = ordered::array();
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const Cell c : x.cells(d)) list.push_back(simplex_entry(x.id(c), d, x.face_ids(c)));
  }
  return list;
}

}  // namespace

std::string complex_to_json(const DeltaComplex& x) {
  nlohmann::ordered_json doc;
  doc["name"] = x.name();
  doc["simplices"] = simplices_json(x);
  return doc.dump(2) + "\n";
}

std::string simplicial_to_json(const SimplicialSet& s, int max_dim) {
  nlohmann::ordered_json doc;
  doc["kind"] = "simplicial";
  doc["name"] = s.core().name();
  doc["max_dim"] = max_dim;
  doc["simplices"] = simplices_json(s.core());
  ordered degenerate = ordered::array();
  for (int m = 1; m <= max_dim; ++m) {
    for (const auto& x : s.simplices(m)) {
      if (x.eta.is_identity()) continue;
      std::vector<std::string> faces;
      for (int i = 0; i <= m; ++i) faces.push_back(s.label(s.face(x, i)));
      degenerate.push_back(simplex_entry(s.label(x), m, faces));
    }
  }
  doc["degenerate"] = degenerate;
  return doc.dump(2) + "\n";
}

std::string delta_map_to_json(const DeltaMap& f) {
  nlohmann::ordered_json doc;
  doc["source"] = f.source().name();
  doc["target"] = f.target().name();
  ordered list = ordered::array();
  for (int d = 0; d <= f.source().dimension(); ++d) {
    for (const Cell c : f.source().cells(d)) {
      if (const auto img = f.image(c)) list.push_back(ordered{{"from", f.source().id(c)}, {"to", f.target().id(*img)}});
    }
  }
  doc["assignment"] = list;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace steenrod
