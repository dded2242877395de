#include "lalg/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace lalg::io {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte is the 1-based offset of the offending character
    const std::size_t offset =
        std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ": invalid JSON", line, column);
  }
}

Json load_document(const fs::path& path) {
  return parse_json(read_file(path), path.string());
}

namespace {

const Json& field(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object()) {
    throw StructuralError(std::string(what) + " must be a JSON object");
  }
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw StructuralError(std::string(what) + ": missing field '" + key + "'");
  }
  return *it;
}

std::string text(const Json& v, const char* what) {
  if (!v.is_string()) {
    throw StructuralError(std::string(what) + " must be a string");
  }
  return v.get<std::string>();
}

/// Resolves a path-or-inline reference; returns the document and the
/// directory that nested references resolve against.
std::pair<Json, fs::path> resolve(const Json& ref, const fs::path& base) {
  if (ref.is_string()) {
    fs::path p = ref.get<std::string>();
    if (p.is_relative()) p = base / p;
    return {load_document(p), p.parent_path()};
  }
  return {ref, base};
}

Element element(const FiniteLAlgebra& L, const Json& name, const char* what) {
  return L.find(text(name, what));
}

Rational rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw StructuralError("state value must be an integer or a \"p/q\" string");
}

}  // namespace

RawTable raw_table_from_json(const Json& doc) {
  const auto& elements = field(doc, "elements", "algebra document");
  const auto& arrow = field(doc, "arrow", "algebra document");
  if (!elements.is_array() || !arrow.is_array()) {
    throw StructuralError("algebra document: 'elements' and 'arrow' must be arrays");
  }
  std::vector<std::string> names;
  for (const auto& e : elements) names.push_back(text(e, "element name"));
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : arrow) {
    if (!row.is_array()) throw StructuralError("arrow rows must be arrays");
    std::vector<std::string> r;
    for (const auto& cell : row) r.push_back(text(cell, "arrow cell"));
    rows.push_back(std::move(r));
  }
  const auto unit = text(field(doc, "unit", "algebra document"), "unit");
  std::optional<std::string> zero;
  if (doc.contains("zero") && !doc["zero"].is_null()) {
    zero = text(doc["zero"], "zero");
  }
  return RawTable::from_names(std::move(names), rows, unit,
                              zero ? std::optional<std::string_view>(*zero)
                                   : std::nullopt);
}

FiniteLAlgebra algebra_from_json(const Json& doc, Mode mode,
                                 const fs::path& base) {
  auto [resolved, dir] = resolve(doc, base);
  return FiniteLAlgebra(raw_table_from_json(resolved), mode);
}

OrderedJson to_json(const FiniteLAlgebra& L) {
  OrderedJson j;
  j["elements"] = L.names();
  j["unit"] = L.name(L.unit());
  if (L.bounded()) j["zero"] = L.name(L.bottom());
  OrderedJson rows = OrderedJson::array();
  for (Element x = 0; x < L.size(); ++x) {
    OrderedJson row = OrderedJson::array();
    for (Element y = 0; y < L.size(); ++y) row.push_back(L.name(L.arrow(x, y)));
    rows.push_back(std::move(row));
  }
  j["arrow"] = std::move(rows);
  return j;
}

ElementMap map_from_json(const Json& map, const FiniteLAlgebra& source,
                         const FiniteLAlgebra& target) {
  ElementMap out(source.size(), source.size());
  if (map.is_array()) {
    if (map.size() != source.size()) {
      throw StructuralError("map has " + std::to_string(map.size()) +
                            " entries for " + std::to_string(source.size()) +
                            " elements");
    }
    for (Element x = 0; x < source.size(); ++x) {
      out[x] = element(target, map[x], "map value");
    }
    return out;
  }
  if (!map.is_object()) throw StructuralError("map must be an object or array");
  std::vector<bool> seen(source.size(), false);
  for (const auto& [key, value] : map.items()) {
    const auto x = source.find(key);
    seen[x] = true;
    out[x] = element(target, value, "map value");
  }
  for (Element x = 0; x < source.size(); ++x) {
    if (!seen[x]) {
      throw StructuralError("map is partial: no image for '" + source.name(x) +
                            "'");
    }
  }
  return out;
}

UnaryOperator operator_from_json(const Json& doc, Mode mode,
                                 const fs::path& base) {
  auto [resolved, dir] = resolve(doc, base);
  auto L = algebra_from_json(field(resolved, "algebra", "operator document"),
                             mode, dir);
  auto values = map_from_json(field(resolved, "map", "operator document"), L, L);
  return UnaryOperator(L, std::move(values));
}

OrderedJson to_json(const UnaryOperator& op) {
  OrderedJson map;
  const auto& L = op.algebra();
  for (Element x = 0; x < L.size(); ++x) map[L.name(x)] = L.name(op(x));
  return map;
}

std::vector<Rational> values_from_json(const Json& values,
                                       const FiniteLAlgebra& L) {
  std::vector<Rational> out(L.size());
  if (values.is_array()) {
    if (values.size() != L.size()) {
      throw StructuralError("state has " + std::to_string(values.size()) +
                            " values for " + std::to_string(L.size()) +
                            " elements");
    }
    for (Element x = 0; x < L.size(); ++x) out[x] = rational(values[x]);
    return out;
  }
  if (!values.is_object()) {
    throw StructuralError("state values must be an object or array");
  }
  std::vector<bool> seen(L.size(), false);
  for (const auto& [key, value] : values.items()) {
    const auto x = L.find(key);
    seen[x] = true;
    out[x] = rational(value);
  }
  for (Element x = 0; x < L.size(); ++x) {
    if (!seen[x]) {
      throw StructuralError("state has no value for '" + L.name(x) + "'");
    }
  }
  return out;
}

State state_from_json(const Json& doc, Mode mode, const fs::path& base) {
  auto [resolved, dir] = resolve(doc, base);
  auto L = algebra_from_json(field(resolved, "algebra", "state document"), mode,
                             dir);
  auto values = values_from_json(field(resolved, "values", "state document"), L);
  return validate_state(L, std::move(values));
}

OrderedJson to_json(const State& m) {
  OrderedJson values;
  const auto& L = m.algebra();
  for (Element x = 0; x < L.size(); ++x) values[L.name(x)] = to_string(m(x));
  return values;
}

std::vector<Element> blocks_from_json(const Json& blocks,
                                      const FiniteLAlgebra& L) {
  if (!blocks.is_array()) throw StructuralError("blocks must be an array");
  std::vector<Element> out;
  for (const auto& b : blocks) out.push_back(element(L, b, "block"));
  return out;
}

Partition partition_from_json(const Json& doc, Mode mode, const fs::path& base) {
  auto [resolved, dir] = resolve(doc, base);
  auto m = state_from_json(field(resolved, "state", "partition document"), mode,
                           dir);
  auto blocks = blocks_from_json(field(resolved, "blocks", "partition document"),
                                 m.algebra());
  return validate_partition(std::move(blocks), m);
}

OrderedJson to_json(const Partition& p) {
  OrderedJson blocks = OrderedJson::array();
  for (auto b : p.blocks()) blocks.push_back(p.algebra().name(b));
  return blocks;
}

LSystem system_from_json(const Json& doc, Mode mode, const fs::path& base) {
  auto [resolved, dir] = resolve(doc, base);
  const auto& state_ref = field(resolved, "state", "system document");
  std::optional<State> m;
  if (state_ref.is_object() && !state_ref.contains("algebra")) {
    auto L = algebra_from_json(field(resolved, "algebra", "system document"),
                               mode, dir);
    m = validate_state(L, values_from_json(
                              field(state_ref, "values", "system state"), L));
  } else {
    m = state_from_json(state_ref, mode, dir);
  }
  const auto& L = m->algebra();
  UnaryOperator T(L, map_from_json(field(resolved, "T", "system document"), L, L));
  return validate_system(T, *m);
}

OrderedJson to_json(const LSystem& sys) {
  OrderedJson j;
  j["algebra"] = to_json(sys.algebra());
  j["T"] = to_json(sys.map());
  j["state"] = {{"values", to_json(sys.state())}};
  return j;
}

OrderedJson number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

OrderedJson to_json(const ClaimRecord& rec) {
  OrderedJson j;
  j["id"] = rec.id;
  j["statement"] = rec.statement;
  j["scenario"] = rec.scenario;
  OrderedJson hyps = OrderedJson::object();
  for (const auto& h : rec.hypotheses) hyps[h.name] = h.met ? "met" : "unmet";
  j["hypotheses"] = std::move(hyps);
  j["lhs"] = rec.lhs ? number(*rec.lhs) : OrderedJson(nullptr);
  j["rhs"] = rec.rhs ? number(*rec.rhs) : OrderedJson(nullptr);
  j["delta"] = rec.delta ? number(*rec.delta) : OrderedJson(nullptr);
  j["verdict"] = std::string(to_string(rec.verdict));
  if (!rec.witness.empty()) j["witness"] = rec.witness;
  if (!rec.note.empty()) j["note"] = rec.note;
  return j;
}

}  // namespace lalg::io
