#pragma once

// Reference implementations used by the tests. They work on plain integer
// tables and doubles and share no code with the library.

#include <cmath>
#include <cstddef>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

inline bool ax1(const Table& t, int u) {
  for (int x = 0; x < int(t.size()); ++x)
    if (t[x][x] != u) return false;
  return true;
}
inline bool ax2(const Table& t, int u) {
  for (int x = 0; x < int(t.size()); ++x)
    if (t[x][u] != u) return false;
  return true;
}
inline bool ax3(const Table& t, int u) {
  for (int x = 0; x < int(t.size()); ++x)
    if (t[u][x] != x) return false;
  return true;
}
inline bool ax4(const Table& t) {
  const int n = int(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x][y]][t[x][z]] != t[t[y][x]][t[y][z]]) return false;
  return true;
}
inline bool ax5(const Table& t, int u) {
  const int n = int(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && t[x][y] == u && t[y][x] == u) return false;
  return true;
}
inline bool is_l_algebra(const Table& t, int u) {
  return ax1(t, u) && ax2(t, u) && ax3(t, u) && ax4(t) && ax5(t, u);
}

/// Every table of order n with unit n-1 that satisfies the axioms, found by
/// walking all n^(n*n) tables.
inline std::set<Table> all_l_algebras(int n) {
  std::set<Table> out;
  const int cells = n * n;
  std::vector<int> flat(cells, 0);
  while (true) {
    Table t(n, std::vector<int>(n));
    for (int i = 0; i < cells; ++i) t[i / n][i % n] = flat[i];
    if (is_l_algebra(t, n - 1)) out.insert(t);
    int k = cells;
    while (k > 0 && ++flat[k - 1] == n) flat[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

inline bool leq(const Table& t, int u, int x, int y) { return t[x][y] == u; }

/// Closure operators found by filtering the whole map space.
inline std::set<std::vector<int>> closure_operators(const Table& t, int u) {
  const int n = int(t.size());
  std::set<std::vector<int>> out;
  std::vector<int> l(n, 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = leq(t, u, x, l[x]) && l[l[x]] == l[x];
      for (int y = 0; y < n && ok; ++y) {
        if (leq(t, u, x, y) && !leq(t, u, l[x], l[y])) ok = false;
        if (!leq(t, u, l[t[x][y]], t[l[x]][l[y]])) ok = false;
      }
    }
    if (ok) out.insert(l);
    int k = n;
    while (k > 0 && ++l[k - 1] == n) l[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

/// Lukasiewicz t-norm on the chain {0, 1/top, ..., 1}, in numerators.
inline int luk_odot(int x, int y, int top) { return std::max(0, x + y - top); }

inline double plogp(double p) { return p > 0 ? p * std::log2(p) : 0.0; }

/// H of a sequence of probabilities.
inline double entropy(const std::vector<double>& p) {
  double h = 0;
  for (double v : p) h -= plogp(v);
  return h;
}

/// H(xi | eta) on a Lukasiewicz chain with m(x) = x, blocks as numerators.
inline double luk_conditional(const std::vector<int>& xi,
                              const std::vector<int>& eta, int top) {
  double h = 0;
  for (int y : eta) {
    if (y == 0) continue;
    for (int x : xi) {
      const double joint = double(luk_odot(x, y, top)) / top;
      if (joint > 0) h -= joint * std::log2(joint / (double(y) / top));
    }
  }
  return h;
}

}  // namespace oracle
