#pragma once

#include "lalg/dynamics.hpp"

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

/// JSON documents for algebras, operators, states, partitions and systems.
///
/// Wherever a document expects a nested algebra or state it accepts either
/// the object inline or a path string, resolved against `base`.
namespace lalg::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

/// Throws Error when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

/// Throws ParseError carrying the 1-based line and column.
Json parse_json(std::string_view text, const std::string& source);

Json load_document(const std::filesystem::path& path);

/// {"elements": [...], "unit": "1", "zero": "0"?, "arrow": [[...], ...]}
RawTable raw_table_from_json(const Json& doc);
FiniteLAlgebra algebra_from_json(const Json& doc, Mode mode,
                                 const std::filesystem::path& base = {});
OrderedJson to_json(const FiniteLAlgebra& algebra);

/// A map given as {"x": "y", ...} or as an array of names in element order.
ElementMap map_from_json(const Json& map, const FiniteLAlgebra& source,
                         const FiniteLAlgebra& target);

/// {"algebra": ..., "map": ...}
UnaryOperator operator_from_json(const Json& doc, Mode mode,
                                 const std::filesystem::path& base = {});
OrderedJson to_json(const UnaryOperator& op);

/// Values as {"x": "p/q", ...} or an array in element order; each value is
/// a rational string or an integer.
std::vector<Rational> values_from_json(const Json& values,
                                       const FiniteLAlgebra& algebra);

/// {"algebra": ..., "values": ...}
State state_from_json(const Json& doc, Mode mode,
                      const std::filesystem::path& base = {});
OrderedJson to_json(const State& m);

/// {"state": ..., "blocks": ["x", ...]}
Partition partition_from_json(const Json& doc, Mode mode,
                              const std::filesystem::path& base = {});
std::vector<Element> blocks_from_json(const Json& blocks,
                                      const FiniteLAlgebra& algebra);
OrderedJson to_json(const Partition& p);

/// {"algebra": ..., "T": map, "state": state document or {"values": ...}}
LSystem system_from_json(const Json& doc, Mode mode,
                         const std::filesystem::path& base = {});
OrderedJson to_json(const LSystem& sys);

/// A finite double, or null for NaN and infinities.
OrderedJson number(double v);
OrderedJson to_json(const ClaimRecord& rec);

}  // namespace lalg::io
