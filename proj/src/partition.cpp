#include "lalg/partition.hpp"

#include <algorithm>

namespace lalg {

std::optional<PartitionFailure> partition_failure(
    const std::vector<Element>& blocks, const State& m) {
  const auto& L = m.algebra();
  if (blocks.empty()) return PartitionFailure{};
  for (auto b : blocks) L.check(b);
  Element sum = blocks.front();
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    if (!orthogonal(L, sum, blocks[k])) {
      return PartitionFailure{PartitionFailure::Kind::orthogonality, k, {}};
    }
    sum = oplus(L, sum, blocks[k]);
  }
  if (m(sum) != Rational(1)) {
    return PartitionFailure{PartitionFailure::Kind::measure, 0, m(sum)};
  }
  return std::nullopt;
}

namespace {

std::string names_of(const FiniteLAlgebra& L, const std::vector<Element>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += L.name(xs[i]);
  }
  return out + ")";
}

std::string failure_message(const FiniteLAlgebra& L,
                            const std::vector<Element>& blocks,
                            const PartitionFailure& f) {
  switch (f.kind) {
    case PartitionFailure::Kind::empty:
      return "partition has no blocks";
    case PartitionFailure::Kind::orthogonality:
      return "block " + std::to_string(f.index) + " of " + names_of(L, blocks) +
             " is not orthogonal to the sum of the blocks before it";
    case PartitionFailure::Kind::measure:
      return "blocks " + names_of(L, blocks) + " have total measure " +
             to_string(f.total);
  }
  return {};
}

[[noreturn]] void throw_failure(const FiniteLAlgebra& L,
                                const std::vector<Element>& blocks,
                                const PartitionFailure& f) {
  auto msg = failure_message(L, blocks, f);
  switch (f.kind) {
    case PartitionFailure::Kind::orthogonality:
      throw BlockOrthogonalityError(f.index, msg);
    case PartitionFailure::Kind::measure:
      throw MeasureNotOne(f.total, msg);
    default:
      throw PartitionError(msg);
  }
}

}  // namespace

Partition validate_partition(std::vector<Element> blocks, const State& m) {
  if (auto f = partition_failure(blocks, m)) {
    throw_failure(m.algebra(), blocks, *f);
  }
  const auto& L = m.algebra();
  Element sum = blocks.front();
  for (std::size_t k = 1; k < blocks.size(); ++k) sum = oplus(L, sum, blocks[k]);
  return Partition(m, std::move(blocks), sum);
}

Partition unit_partition(const State& m) {
  return validate_partition({m.algebra().unit()}, m);
}

std::string describe(const Partition& p) {
  return names_of(p.algebra(), p.blocks());
}

void require_same_state(const Partition& a, const Partition& b) {
  if (!(a.state() == b.state())) {
    throw StructuralError("partitions " + describe(a) + " and " + describe(b) +
                          " use different states");
  }
}

bool refines(const Partition& fine, const Partition& coarse) {
  require_same_state(fine, coarse);
  const auto& L = fine.algebra();
  const auto zero = L.bottom();
  std::vector<std::optional<Element>> folds(coarse.size());
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == fine.size()) {
      for (std::size_t b = 0; b < coarse.size(); ++b) {
        if (folds[b].value_or(zero) != coarse[b]) return false;
      }
      return true;
    }
    for (std::size_t b = 0; b < coarse.size(); ++b) {
      auto saved = folds[b];
      if (!saved) {
        folds[b] = fine[i];
      } else if (orthogonal(L, *saved, fine[i])) {
        folds[b] = oplus(L, *saved, fine[i]);
      } else {
        continue;
      }
      if (self(self, i + 1)) return true;
      folds[b] = saved;
    }
    return false;
  };
  return assign(assign, 0);
}

std::vector<Element> join_blocks(const FiniteLAlgebra& algebra,
                                 const std::vector<Element>& xi,
                                 const std::vector<Element>& eta) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    for (std::size_t j = 0; j < eta.size(); ++j) {
      auto r = odot(algebra, xi[i], eta[j]);
      if (!r.defined()) {
        auto msg = "join block (" + std::to_string(i) + ", " +
                   std::to_string(j) + "): '" + algebra.name(xi[i]) +
                   "' (.) '" + algebra.name(eta[j]) + "' is " +
                   std::string(to_string(r.kind));
        throw OdotUndefined(xi[i], eta[j], std::move(r), std::move(msg),
                            std::pair{i, j});
      }
      out.push_back(r.value);
    }
  }
  return out;
}

std::vector<Element> join_blocks(const Partition& xi, const Partition& eta) {
  require_same_state(xi, eta);
  return join_blocks(xi.algebra(), xi.blocks(), eta.blocks());
}

std::vector<Element> nonzero_blocks(const State& m,
                                    const std::vector<Element>& blocks) {
  std::vector<Element> out;
  for (auto b : blocks) {
    if (m(b) != Rational(0)) out.push_back(b);
  }
  return out;
}

Partition common_refinement(const Partition& xi, const Partition& eta) {
  auto blocks = join_blocks(xi, eta);
  if (auto f = partition_failure(blocks, xi.state())) {
    auto msg = "join " + describe(xi) + " v " + describe(eta) +
               " is not a partition: " +
               failure_message(xi.algebra(), blocks, *f);
    throw JoinNotPartition(std::move(blocks), *f, std::move(msg));
  }
  return validate_partition(std::move(blocks), xi.state());
}

Partition prune_zero_blocks(const Partition& p) {
  std::vector<Element> kept;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.measure(i) != Rational(0)) kept.push_back(p[i]);
  }
  if (kept.size() == p.size() || kept.empty()) return p;
  if (partition_failure(kept, p.state())) return p;
  return validate_partition(std::move(kept), p.state());
}

JoinCheck check_join(const Partition& xi, const Partition& eta) {
  JoinCheck c;
  try {
    c.blocks = join_blocks(xi, eta);
  } catch (const OdotUndefined&) {
    return c;
  }
  c.defined = true;
  if (partition_failure(c.blocks, xi.state())) return c;
  c.is_partition = true;
  auto joined = prune_zero_blocks(validate_partition(c.blocks, xi.state()));
  c.refines_left = refines(joined, prune_zero_blocks(xi));
  c.refines_right = refines(joined, prune_zero_blocks(eta));
  return c;
}

BayesCheck has_bayes_property(const Partition& xi, Element y) {
  const auto& L = xi.algebra();
  const auto& m = xi.state();
  BayesCheck c;
  c.target = m(y);
  auto whole = odot(L, xi.sum(), y);
  if (!whole.defined()) return c;
  c.lhs = m(whole.value);
  Rational sum = 0;
  for (auto x : xi.blocks()) {
    auto r = odot(L, x, y);
    if (!r.defined()) return c;
    sum += m(r.value);
  }
  c.sum = sum;
  c.defined = true;
  c.def_holds = c.lhs == c.target;
  c.decomposition_holds = c.sum == c.target;
  return c;
}

BayesSummary bayes_against(const Partition& xi, const Partition& eta) {
  require_same_state(xi, eta);
  BayesSummary s;
  for (auto y : eta.blocks()) {
    auto c = has_bayes_property(xi, y);
    if (!(c.defined && c.def_holds) && s.def_holds) {
      s.def_holds = false;
      s.def_witness = y;
    }
    if (!(c.defined && c.decomposition_holds) && s.decomposition_holds) {
      s.decomposition_holds = false;
      s.decomposition_witness = y;
    }
  }
  return s;
}

bool interior_subset(const Partition& xi, const Partition& eta) {
  require_same_state(xi, eta);
  const auto& L = xi.algebra();
  const auto& m = xi.state();
  for (auto y : eta.blocks()) {
    bool found = false;
    for (auto x : xi.blocks()) {
      if (m(odot_value(L, x, y)) == m(y)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool interior_equal(const Partition& xi, const Partition& eta) {
  return interior_subset(xi, eta) && interior_subset(eta, xi);
}

bool independent(const Partition& xi, const Partition& eta) {
  require_same_state(xi, eta);
  const auto& L = xi.algebra();
  const auto& m = xi.state();
  for (auto x : xi.blocks()) {
    for (auto y : eta.blocks()) {
      if (m(odot_value(L, x, y)) != m(x) * m(y)) return false;
    }
  }
  return true;
}

DistributivityReport is_self_distributive(const FiniteLAlgebra& algebra) {
  const auto n = algebra.size();
  DistributivityReport r;
  auto prod = [&](Element a, Element b) { return odot_value(algebra, a, b); };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        std::vector<Element> w{x, y, z};
        try {
          if (prod(x, prod(y, z)) != prod(prod(x, y), prod(x, z)) && r.left) {
            r.left = false;
            r.left_witness = w;
          }
          if (prod(prod(x, y), z) != prod(prod(x, z), prod(y, z)) && r.right) {
            r.right = false;
            r.right_witness = w;
          }
        } catch (const OdotUndefined&) {
          r.undefined.push_back(w);
          if (r.left) r.left_witness = w;
          if (r.right) r.right_witness = w;
          r.left = r.right = false;
        }
      }
    }
  }
  return r;
}

CommutativityReport is_odot_commutative(const FiniteLAlgebra& algebra) {
  const auto n = algebra.size();
  CommutativityReport r;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto a = odot(algebra, x, y), b = odot(algebra, y, x);
      if (!a.defined() || !b.defined()) {
        r.undefined.emplace_back(x, y);
        if (r.holds) r.witness = std::pair{x, y};
        r.holds = false;
      } else if (a.value != b.value && r.holds) {
        r.holds = false;
        r.witness = std::pair{x, y};
      }
    }
  }
  return r;
}

std::vector<Partition> enumerate_partitions(const State& m,
                                            std::size_t max_blocks,
                                            std::size_t max_candidates) {
  const auto n = m.algebra().size();
  std::size_t total = 0, power = 1;
  for (std::size_t k = 1; k <= max_blocks; ++k) {
    if (power > max_candidates / n) {
      throw CapacityError("partition_candidates", max_candidates,
                          max_candidates + 1);
    }
    power *= n;
    total += power;
  }
  if (total > max_candidates) {
    throw CapacityError("partition_candidates", max_candidates, total);
  }
  std::vector<Partition> out;
  std::vector<Element> blocks;
  auto extend = [&](auto&& self, std::size_t len) -> void {
    if (blocks.size() == len) {
      if (!partition_failure(blocks, m)) {
        out.push_back(validate_partition(blocks, m));
      }
      return;
    }
    for (Element x = 0; x < n; ++x) {
      blocks.push_back(x);
      self(self, len);
      blocks.pop_back();
    }
  };
  for (std::size_t len = 1; len <= max_blocks; ++len) extend(extend, len);
  return out;
}

}  // namespace lalg
