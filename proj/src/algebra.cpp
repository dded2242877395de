#include "lalg/algebra.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace lalg {

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::strict ? "strict" : "lenient";
}

RawTable RawTable::from_names(std::vector<std::string> names,
                              const std::vector<std::vector<std::string>>& rows,
                              std::string_view unit,
                              std::optional<std::string_view> zero) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw StructuralError("empty element name");
    if (!index.emplace(names[i], i).second) {
      throw StructuralError("duplicate element name '" + names[i] + "'");
    }
  }
  auto lookup = [&](std::string_view name) {
    auto it = index.find(std::string(name));
    if (it == index.end()) {
      throw StructuralError("unknown element '" + std::string(name) + "'");
    }
    return it->second;
  };
  RawTable table;
  table.names = std::move(names);
  if (rows.size() != table.names.size()) {
    throw StructuralError("arrow table has " + std::to_string(rows.size()) +
                          " rows for " + std::to_string(table.names.size()) +
                          " elements");
  }
  for (const auto& row : rows) {
    if (row.size() != table.names.size()) {
      throw StructuralError("arrow table is not square");
    }
    std::vector<Element> out;
    out.reserve(row.size());
    for (const auto& cell : row) out.push_back(lookup(cell));
    table.arrow.push_back(std::move(out));
  }
  table.unit = lookup(unit);
  if (zero) table.zero = lookup(*zero);
  return table;
}

RawTable RawTable::from_indices(std::vector<std::vector<Element>> rows,
                                Element unit, std::vector<std::string> names) {
  RawTable table;
  if (names.empty()) {
    for (Element i = 0, k = 0; i < rows.size(); ++i) {
      names.push_back(i == unit ? "1" : "x" + std::to_string(k++));
    }
  }
  table.names = std::move(names);
  table.arrow = std::move(rows);
  table.unit = unit;
  table.check_shape();
  return table;
}

void RawTable::check_shape() const {
  const auto n = names.size();
  if (n == 0) throw StructuralError("algebra has no elements");
  if (arrow.size() != n) throw StructuralError("arrow table is not square");
  for (const auto& row : arrow) {
    if (row.size() != n) throw StructuralError("arrow table is not square");
    for (auto v : row) {
      if (v >= n) {
        throw StructuralError("arrow cell " + std::to_string(v) +
                              " is out of range");
      }
    }
  }
  if (unit >= n) throw StructuralError("unit is out of range");
  if (zero && *zero >= n) throw StructuralError("zero is out of range");
}

bool AxiomReport::violates(int axiom) const noexcept {
  return find(axiom) != nullptr;
}

const AxiomViolation* AxiomReport::find(int axiom) const noexcept {
  for (const auto& v : violations) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

bool AxiomReport::passed_except(int ignored) const noexcept {
  return std::all_of(violations.begin(), violations.end(),
                     [&](const auto& v) { return v.axiom == ignored; });
}

AxiomReport check_axioms(const RawTable& table) {
  table.check_shape();
  const auto n = table.size();
  const auto u = table.unit;
  const auto& t = table.arrow;
  AxiomReport report;
  auto first = [&](int axiom, auto&& fails, std::size_t arity) {
    std::vector<Element> w(arity, 0);
    // Lexicographic walk over arity-tuples.
    while (true) {
      if (fails(w)) {
        report.violations.push_back({axiom, w});
        return;
      }
      std::size_t k = arity;
      while (k > 0 && ++w[k - 1] == n) w[--k] = 0;
      if (k == 0) return;
    }
  };
  first(1, [&](const auto& w) { return t[w[0]][w[0]] != u; }, 1);
  first(2, [&](const auto& w) { return t[w[0]][u] != u; }, 1);
  first(3, [&](const auto& w) { return t[u][w[0]] != w[0]; }, 1);
  first(4,
        [&](const auto& w) {
          auto x = w[0], y = w[1], z = w[2];
          return t[t[x][y]][t[x][z]] != t[t[y][x]][t[y][z]];
        },
        3);
  first(5,
        [&](const auto& w) {
          return w[0] != w[1] && t[w[0]][w[1]] == u && t[w[1]][w[0]] == u;
        },
        2);
  return report;
}

namespace {

std::string describe(const AxiomReport& report, const RawTable* table) {
  std::string out = "L-algebra axioms fail:";
  for (const auto& v : report.violations) {
    out += " (" + std::to_string(v.axiom) + ")";
    if (table == nullptr) continue;
    out += " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out += ",";
      out += table->names.at(v.witness[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace

AxiomError::AxiomError(AxiomReport report)
    : Error(describe(report, nullptr)), report_(std::move(report)) {}

AxiomError::AxiomError(AxiomReport report, const RawTable& table)
    : Error(describe(report, &table)), report_(std::move(report)) {}

FiniteLAlgebra::FiniteLAlgebra(RawTable table, Mode mode) {
  auto report = check_axioms(table);
  const bool ok =
      mode == Mode::strict ? report.passed() : report.passed_except(5);
  if (!ok) throw AxiomError(std::move(report), table);

  auto impl = std::make_shared<Impl>();
  const auto n = table.size();
  impl->size = n;
  impl->mode = mode;
  impl->report = std::move(report);
  impl->flat.resize(n * n);
  impl->order.resize(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      impl->flat[x * n + y] = table.arrow[x][y];
      impl->order[x * n + y] = table.arrow[x][y] == table.unit;
    }
  }
  std::optional<Element> least;
  for (Element x = 0; x < n && !least; ++x) {
    bool below_all = true;
    for (Element y = 0; y < n && below_all; ++y) {
      below_all = impl->order[x * n + y] != 0;
    }
    if (below_all) least = x;
  }
  if (table.zero) {
    for (Element y = 0; y < n; ++y) {
      if (!impl->order[*table.zero * n + y]) {
        throw StructuralError("declared zero '" + table.names[*table.zero] +
                              "' is not below '" + table.names[y] + "'");
      }
    }
    least = table.zero;
  }
  impl->zero = least;
  table.zero = least;
  impl->table = std::move(table);
  impl_ = std::move(impl);
}

Element FiniteLAlgebra::bottom() const {
  if (!impl_->zero) throw ContractError("algebra is not bounded");
  return *impl_->zero;
}

Element FiniteLAlgebra::find(std::string_view name) const {
  const auto& names = impl_->table.names;
  for (Element i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw StructuralError("unknown element '" + std::string(name) + "'");
}

void FiniteLAlgebra::throw_unknown(Element x) const {
  throw StructuralError("unknown element index " + std::to_string(x) +
                        " (algebra has " + std::to_string(impl_->size) +
                        " elements)");
}

void require_same_algebra(const FiniteLAlgebra& a, const FiniteLAlgebra& b,
                          std::string_view what) {
  if (!a.same_as(b)) {
    throw StructuralError(std::string(what) + " live on different algebras");
  }
}

bool leq(const FiniteLAlgebra& algebra, Element x, Element y) {
  return algebra.leq(x, y);
}

OrderRelation::OrderRelation(const FiniteLAlgebra& algebra)
    : size_(algebra.size()), rel_(size_ * size_) {
  for (Element x = 0; x < size_; ++x) {
    for (Element y = 0; y < size_; ++y) rel_[x * size_ + y] = algebra.leq(x, y);
  }
}

std::vector<std::pair<Element, Element>> OrderRelation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size_; ++x) {
    for (Element y = 0; y < size_; ++y) {
      if (holds(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

bool OrderRelation::reflexive() const {
  for (Element x = 0; x < size_; ++x) {
    if (!holds(x, x)) return false;
  }
  return true;
}

bool OrderRelation::antisymmetric() const {
  for (Element x = 0; x < size_; ++x) {
    for (Element y = x + 1; y < size_; ++y) {
      if (holds(x, y) && holds(y, x)) return false;
    }
  }
  return true;
}

bool OrderRelation::transitive() const {
  for (Element x = 0; x < size_; ++x) {
    for (Element y = 0; y < size_; ++y) {
      if (!holds(x, y)) continue;
      for (Element z = 0; z < size_; ++z) {
        if (holds(y, z) && !holds(x, z)) return false;
      }
    }
  }
  return true;
}

OrderRelation induced_order(const FiniteLAlgebra& algebra) {
  return OrderRelation(algebra);
}

std::optional<Element> least_element(const FiniteLAlgebra& algebra) {
  std::optional<Element> found;
  for (Element x = 0; x < algebra.size(); ++x) {
    bool below_all = true;
    for (Element y = 0; y < algebra.size() && below_all; ++y) {
      below_all = algebra.leq(x, y);
    }
    if (below_all) {
      if (found) return std::nullopt;  // only possible without axiom (5)
      found = x;
    }
  }
  return found;
}

std::optional<Element> greatest_lower_bound(const FiniteLAlgebra& algebra,
                                            std::span<const Element> subset) {
  std::vector<Element> lower;
  for (Element c = 0; c < algebra.size(); ++c) {
    if (std::all_of(subset.begin(), subset.end(),
                    [&](Element s) { return algebra.leq(c, s); })) {
      lower.push_back(c);
    }
  }
  std::optional<Element> glb;
  for (auto c : lower) {
    if (std::all_of(lower.begin(), lower.end(),
                    [&](Element d) { return algebra.leq(d, c); })) {
      if (glb) return std::nullopt;
      glb = c;
    }
  }
  return glb;
}

bool is_subalgebra(const FiniteLAlgebra& algebra,
                   std::span<const Element> subset) {
  std::set<Element> members;
  for (auto x : subset) {
    algebra.check(x);
    members.insert(x);
  }
  if (!members.count(algebra.unit())) return false;
  for (auto x : members) {
    for (auto y : members) {
      if (!members.count(algebra.arrow(x, y))) return false;
    }
  }
  return true;
}

bool is_homomorphism(const ElementMap& f, const FiniteLAlgebra& src,
                     const FiniteLAlgebra& dst) {
  if (f.size() != src.size()) {
    throw StructuralError("map covers " + std::to_string(f.size()) + " of " +
                          std::to_string(src.size()) + " elements");
  }
  for (auto v : f) dst.check(v);
  if (f[src.unit()] != dst.unit()) return false;
  for (Element x = 0; x < src.size(); ++x) {
    for (Element y = 0; y < src.size(); ++y) {
      if (f[src.arrow(x, y)] != dst.arrow(f[x], f[y])) return false;
    }
  }
  return true;
}

bool LawReport::all_hold() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.holds; });
}

const LawCheck* LawReport::find(std::string_view law) const noexcept {
  for (const auto& c : checks) {
    if (c.law == law) return &c;
  }
  return nullptr;
}

LawReport check_derived_laws(const FiniteLAlgebra& algebra) {
  const auto n = algebra.size();
  const auto u = algebra.unit();
  auto arrow = [&](Element x, Element y) { return algebra.arrow(x, y); };
  auto le = [&](Element x, Element y) { return algebra.leq(x, y); };
  LawReport report;

  {
    LawCheck c{std::string(laws::unit_unique), true, {}};
    for (Element v = 0; v < n && c.holds; ++v) {
      if (v == u) continue;
      bool is_unit = true;
      for (Element x = 0; x < n && is_unit; ++x) {
        is_unit = arrow(x, x) == v && arrow(x, v) == v && arrow(v, x) == x;
      }
      if (is_unit) c = {c.law, false, {v}};
    }
    report.checks.push_back(std::move(c));
  }

  auto scan2 = [&](std::string_view law, auto&& holds) {
    LawCheck c{std::string(law), true, {}};
    for (Element x = 0; x < n && c.holds; ++x) {
      for (Element y = 0; y < n && c.holds; ++y) {
        if (!holds(x, y)) c = {c.law, false, {x, y}};
      }
    }
    report.checks.push_back(std::move(c));
  };
  scan2(laws::exchange, [&](Element x, Element y) {
    return arrow(x, arrow(y, x)) == arrow(y, arrow(x, y));
  });
  scan2(laws::unit_right, [&](Element x, Element y) {
    return arrow(arrow(x, y), u) == arrow(arrow(x, u), arrow(y, u));
  });
  scan2(laws::unit_left, [&](Element x, Element y) {
    return arrow(u, arrow(x, y)) == arrow(arrow(u, x), arrow(u, y));
  });

  auto first_triple = [&](auto&& fails) -> std::optional<std::vector<Element>> {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (fails(x, y, z)) return std::vector<Element>{x, y, z};
        }
      }
    }
    return std::nullopt;
  };

  {
    auto w = first_triple([&](Element x, Element y, Element z) {
      return le(x, y) && !le(arrow(z, x), arrow(z, y));
    });
    report.checks.push_back(
        {std::string(laws::monotone), !w, w.value_or(std::vector<Element>{})});
  }

  {
    // Each item is read as a sentence quantified over all x, y, z; the
    // three resulting truth values must coincide.
    auto w1 = first_triple([&](Element x, Element y, Element) {
      return !le(x, arrow(y, x));
    });
    auto w2 = first_triple([&](Element x, Element y, Element z) {
      return le(x, z) && !le(arrow(z, y), arrow(x, y));
    });
    auto w3 = first_triple([&](Element x, Element y, Element z) {
      auto p = arrow(arrow(x, y), z);
      return !le(arrow(p, z), arrow(p, arrow(arrow(y, x), z)));
    });
    const bool agree = w1.has_value() == w2.has_value() &&
                       w2.has_value() == w3.has_value();
    std::vector<Element> witness;
    if (!agree) {
      for (const auto* w : {&w1, &w2, &w3}) {
        if (w->has_value()) {
          witness = **w;
          break;
        }
      }
    }
    report.checks.push_back({std::string(laws::equivalence), agree, witness});
  }
  return report;
}

}  // namespace lalg
