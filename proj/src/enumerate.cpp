#include "lalg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>

namespace lalg {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LALG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RawTable relabel(const RawTable& table, const std::vector<Element>& perm) {
  const auto n = table.size();
  RawTable out;
  out.names.resize(n);
  out.arrow.assign(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    out.names[perm[x]] = table.names[x];
    for (Element y = 0; y < n; ++y) {
      out.arrow[perm[x]][perm[y]] = perm[table.arrow[x][y]];
    }
  }
  out.unit = perm[table.unit];
  if (table.zero) out.zero = perm[*table.zero];
  return out;
}

namespace {

// Calls visit(perm) for every permutation of 0..n-1 fixing `unit`.
template <class F>
void for_each_unit_fixing(std::size_t n, Element unit, F&& visit) {
  std::vector<Element> rest;
  for (Element i = 0; i < n; ++i) {
    if (i != unit) rest.push_back(i);
  }
  std::vector<Element> perm(n);
  do {
    perm[unit] = unit;
    for (std::size_t k = 0, i = 0; i < n; ++i) {
      if (i != unit) perm[i] = rest[k++];
    }
    visit(perm);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

// Relabeled arrow table, flattened row-major.
std::vector<Element> relabeled_cells(const std::vector<std::vector<Element>>& t,
                                     const std::vector<Element>& perm) {
  const auto n = t.size();
  std::vector<Element> out(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) out[perm[x] * n + perm[y]] = perm[t[x][y]];
  }
  return out;
}

std::vector<Element> flatten(const std::vector<std::vector<Element>>& t) {
  std::vector<Element> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

bool is_canonical(const std::vector<std::vector<Element>>& t, Element unit) {
  const auto self = flatten(t);
  bool canonical = true;
  for_each_unit_fixing(t.size(), unit, [&](const auto& perm) {
    if (canonical && relabeled_cells(t, perm) < self) canonical = false;
  });
  return canonical;
}

constexpr Element kUnknown = static_cast<Element>(-1);

class Search {
 public:
  Search(std::size_t n, bool up_to_iso) : n_(n), u_(n - 1), iso_(up_to_iso) {
    t_.assign(n, std::vector<Element>(n, kUnknown));
    for (Element x = 0; x < n; ++x) {
      t_[x][x] = u_;
      t_[x][u_] = u_;
      t_[u_][x] = x;
    }
    for (Element x = 0; x + 1 < n; ++x) {
      for (Element y = 0; y + 1 < n; ++y) {
        if (x != y) free_.emplace_back(x, y);
      }
    }
  }

  std::size_t free_cells() const { return free_.size(); }

  // Runs the search with the first free cell pinned to `first` (when any).
  void run(std::optional<Element> first,
           const std::function<void(const RawTable&)>& visit) {
    visit_ = &visit;
    if (free_.empty()) {
      if (consistent()) emit();
      return;
    }
    if (first) {
      assign(0, *first);
    } else {
      for (Element v = 0; v < n_; ++v) assign(0, v);
    }
  }

 private:
  void assign(std::size_t k, Element v) {
    auto [x, y] = free_[k];
    t_[x][y] = v;
    if (consistent()) {
      if (k + 1 == free_.size()) {
        emit();
      } else {
        for (Element w = 0; w < n_; ++w) assign(k + 1, w);
      }
    }
    t_[x][y] = kUnknown;
  }

  Element at(Element x, Element y) const { return t_[x][y]; }

  // Axioms (4) and (5) on every fully determined instance.
  bool consistent() const {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        auto xy = at(x, y), yx = at(y, x);
        if (x != y && xy == u_ && yx == u_) return false;
        if (xy == kUnknown || yx == kUnknown) continue;
        for (Element z = 0; z < n_; ++z) {
          auto xz = at(x, z), yz = at(y, z);
          if (xz == kUnknown || yz == kUnknown) continue;
          auto lhs = at(xy, xz), rhs = at(yx, yz);
          if (lhs != kUnknown && rhs != kUnknown && lhs != rhs) return false;
        }
      }
    }
    return true;
  }

  void emit() {
    if (iso_ && !is_canonical(t_, u_)) return;
    (*visit_)(RawTable::from_indices(t_, u_));
  }

  std::size_t n_;
  Element u_;
  bool iso_;
  std::vector<std::vector<Element>> t_;
  std::vector<std::pair<Element, Element>> free_;
  const std::function<void(const RawTable&)>* visit_ = nullptr;
};

void check_order(std::size_t n, const EnumerateOptions& options) {
  if (n == 0) throw ContractError("order must be at least 1");
  if (n > options.max_order) {
    throw CapacityError("max_order", options.max_order, n);
  }
}

}  // namespace

RawTable canonical_form(const RawTable& table) {
  table.check_shape();
  std::vector<Element> best_perm;
  std::vector<Element> best;
  for_each_unit_fixing(table.size(), table.unit, [&](const auto& perm) {
    auto cells = relabeled_cells(table.arrow, perm);
    if (best_perm.empty() || cells < best) {
      best = std::move(cells);
      best_perm = perm;
    }
  });
  return relabel(table, best_perm);
}

bool isomorphic_tables(const RawTable& a, const RawTable& b) {
  if (a.size() != b.size()) return false;
  // Unit positions may differ; move both units to the last index first.
  auto to_last = [](const RawTable& t) {
    std::vector<Element> perm(t.size());
    std::iota(perm.begin(), perm.end(), Element{0});
    std::swap(perm[t.unit], perm[t.size() - 1]);
    return relabel(t, perm);
  };
  return canonical_form(to_last(a)).arrow == canonical_form(to_last(b)).arrow;
}

void for_each_l_algebra(std::size_t n, const EnumerateOptions& options,
                        const std::function<void(const RawTable&)>& visit) {
  check_order(n, options);
  Search(n, options.up_to_iso).run(std::nullopt, visit);
}

std::vector<RawTable> enumerate_tables(std::size_t n,
                                       const EnumerateOptions& options) {
  check_order(n, options);
  const auto threads = resolve_threads(options.threads);
  Search probe(n, options.up_to_iso);
  std::vector<RawTable> out;
  if (threads <= 1 || probe.free_cells() == 0) {
    probe.run(std::nullopt, [&](const RawTable& t) { out.push_back(t); });
    return out;
  }
  // One shard per value of the first free cell; shards are concatenated in
  // value order, which is the sequential visiting order.
  std::vector<std::vector<RawTable>> shards(n);
  std::vector<std::thread> workers;
  std::atomic<Element> next{0};
  for (unsigned w = 0; w < std::min<std::size_t>(threads, n); ++w) {
    workers.emplace_back([&] {
      for (Element v = next++; v < n; v = next++) {
        Search s(n, options.up_to_iso);
        s.run(v, [&](const RawTable& t) { shards[v].push_back(t); });
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& shard : shards) {
    std::move(shard.begin(), shard.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<FiniteLAlgebra> enumerate_l_algebras(
    std::size_t n, const EnumerateOptions& options) {
  std::vector<FiniteLAlgebra> out;
  for (auto& table : enumerate_tables(n, options)) {
    out.emplace_back(std::move(table));
  }
  return out;
}

}  // namespace lalg
