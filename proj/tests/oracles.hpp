// Brute-force reference implementations. Nothing here calls the library's
// algorithms; only plain vectors and exhaustive search.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "kschur/integer.hpp"

namespace oracle {

using Parts = std::vector<int>;
using Cell = std::pair<int, int>;  // (row, col), 1-based, rows from the bottom
using Integer = kschur::Integer;

inline int size(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int at(const Parts& p, int row) {
  return row >= 1 && row <= static_cast<int>(p.size()) ? p[row - 1] : 0;
}

// All partitions of n, any order.
inline std::vector<Parts> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  std::vector<Parts> out;
  Parts cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

inline std::set<Cell> cells(const Parts& p) {
  std::set<Cell> s;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i)
    for (int j = 1; j <= p[i - 1]; ++j) s.insert({i, j});
  return s;
}

inline Parts from_cells(const std::set<Cell>& s) {
  Parts p;
  for (const auto& [r, c] : s) {
    if (static_cast<int>(p.size()) < r) p.resize(static_cast<std::size_t>(r), 0);
    p[r - 1] = std::max(p[r - 1], c);
  }
  return p;
}

inline Parts conjugate(const Parts& p) {
  std::set<Cell> t;
  for (const auto& [r, c] : cells(p)) t.insert({c, r});
  return from_cells(t);
}

inline bool contains(const Parts& outer, const Parts& inner) {
  const auto o = cells(outer);
  for (const auto& c : cells(inner))
    if (!o.count(c)) return false;
  return true;
}

// Hook of cell s in outer/inner counting only skew cells.
inline int hook(const Parts& outer, const Parts& inner, Cell s) {
  auto skew = [&](int r, int c) { return c <= at(outer, r) && c > at(inner, r); };
  int h = skew(s.first, s.second) ? 1 : 0;
  for (int c = s.second + 1; c <= at(outer, s.first); ++c) h += skew(s.first, c);
  for (int r = s.first + 1; at(outer, r) >= s.second && r <= static_cast<int>(outer.size()); ++r)
    h += skew(r, s.second);
  return h;
}

inline int hook(const Parts& p, Cell s) { return hook(p, {}, s); }

inline bool is_core(const Parts& p, int period) {
  for (const auto& c : cells(p))
    if (hook(p, c) == period) return false;
  return true;
}

inline int bounded_hooks(const Parts& p, int k) {
  int n = 0;
  for (const auto& c : cells(p)) n += hook(p, c) <= k;
  return n;
}

// Every n-rim hook of p as (remaining shape, width): p/mu is a connected set
// of n cells with no 2x2 block and mu a partition.
inline std::vector<std::pair<Parts, int>> rim_hooks(const Parts& p, int n) {
  std::vector<std::pair<Parts, int>> out;
  const int total = size(p);
  if (total < n) return out;
  const auto pc = cells(p);
  for (const auto& mu : partitions(total - n)) {
    if (!contains(p, mu)) continue;
    std::set<Cell> strip = pc;
    for (const auto& c : cells(mu)) strip.erase(c);
    bool square = false;
    for (const auto& [r, c] : strip)
      if (strip.count({r + 1, c}) && strip.count({r, c + 1}) && strip.count({r + 1, c + 1}))
        square = true;
    if (square) continue;
    std::set<Cell> seen{*strip.begin()};
    std::vector<Cell> stack{*strip.begin()};
    while (!stack.empty()) {
      auto [r, c] = stack.back();
      stack.pop_back();
      for (Cell nb : {Cell{r + 1, c}, Cell{r - 1, c}, Cell{r, c + 1}, Cell{r, c - 1}})
        if (strip.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    if (seen.size() != strip.size()) continue;
    std::set<int> cols;
    for (const auto& c : strip) cols.insert(c.second);
    out.emplace_back(mu, static_cast<int>(cols.size()) - 1);
  }
  return out;
}

// (core, d, sorted widths) reached by every order of rim hook removal.
struct CoreOutcome {
  Parts core;
  int d;
  bool operator<(const CoreOutcome& o) const {
    return std::tie(core, d) < std::tie(o.core, o.d);
  }
};
inline std::set<CoreOutcome> all_removal_orders(const Parts& p, int n) {
  std::set<CoreOutcome> out;
  std::function<void(const Parts&, int)> rec = [&](const Parts& q, int d) {
    const auto hooks = rim_hooks(q, n);
    if (hooks.empty()) {
      out.insert({q, d});
      return;
    }
    for (const auto& [mu, w] : hooks) rec(mu, d + 1);
  };
  rec(p, 0);
  return out;
}

// All (outer, inner) skew shapes whose rows have lengths lam (bottom row
// first), no skew cell hook exceeds k, and every inner cell has hook > k.
inline std::vector<std::pair<Parts, Parts>> k_skew_layouts(const Parts& lam, int k, int max_offset) {
  const int len = static_cast<int>(lam.size());
  std::vector<std::pair<Parts, Parts>> out;
  std::vector<int> off(static_cast<std::size_t>(len), 0);
  // Offsets are chosen from the top row down; hooks only look upward.
  std::function<void(int)> rec = [&](int i) {
    if (i < 0) {
      Parts outer(static_cast<std::size_t>(len)), inner;
      for (int r = 0; r < len; ++r) outer[static_cast<std::size_t>(r)] = off[static_cast<std::size_t>(r)] + lam[static_cast<std::size_t>(r)];
      for (int r = 0; r < len; ++r)
        if (off[static_cast<std::size_t>(r)] > 0) inner.push_back(off[static_cast<std::size_t>(r)]);
      out.emplace_back(outer, inner);
      return;
    }
    const int lo = i + 1 < len ? off[static_cast<std::size_t>(i + 1)] : 0;
    for (int o = lo; o <= max_offset; ++o) {
      if (i + 1 < len && o + lam[static_cast<std::size_t>(i)] < off[static_cast<std::size_t>(i + 1)] + lam[static_cast<std::size_t>(i + 1)])
        continue;
      off[static_cast<std::size_t>(i)] = o;
      // Check row i+1 (1-based) against rows above, already placed.
      Parts outer, inner;
      for (int r = 0; r < len; ++r) {
        if (r < i) {
          outer.push_back(1 << 20);  // rows below are irrelevant to hooks here
          inner.push_back(1 << 20);
        } else {
          outer.push_back(off[static_cast<std::size_t>(r)] + lam[static_cast<std::size_t>(r)]);
          inner.push_back(off[static_cast<std::size_t>(r)]);
        }
      }
      bool ok = true;
      for (int c = 1; c <= outer[static_cast<std::size_t>(i)] && ok; ++c) {
        const int h = hook(outer, inner, {i + 1, c});
        if (c > o && h > k) ok = false;
        if (c <= o && h <= k) ok = false;
      }
      if (ok) rec(i - 1);
    }
  };
  if (len == 0) return {{{}, {}}};
  rec(len - 1);
  return out;
}

// Semistandard tableaux of shape / inner with the given content.
inline Integer ssyt_count(const Parts& shape, const std::vector<int>& weight) {
  const auto all = cells(shape);
  std::vector<Cell> order(all.begin(), all.end());
  std::map<Cell, int> fill;
  std::vector<int> left = weight;
  Integer count = 0;
  const int r = static_cast<int>(weight.size());
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == order.size()) {
      ++count;
      return;
    }
    const auto [row, col] = order[idx];
    int lo = 1;
    if (col > 1) lo = std::max(lo, fill[{row, col - 1}]);
    if (row > 1) lo = std::max(lo, fill[{row - 1, col}] + 1);
    for (int x = lo; x <= r; ++x) {
      if (left[static_cast<std::size_t>(x - 1)] == 0) continue;
      --left[static_cast<std::size_t>(x - 1)];
      fill[{row, col}] = x;
      rec(idx + 1);
      ++left[static_cast<std::size_t>(x - 1)];
    }
  };
  rec(0);
  return count;
}

// Fillings of outer/inner by letters 1..r, rows weak, columns strict, where
// letter i covers exactly weight[i-1] distinct (k+1)-residues. Each filling
// is returned as rows from the bottom with inner cells 0.
inline std::vector<std::vector<std::vector<int>>> k_tableaux(int k, const Parts& outer,
                                                             const Parts& inner,
                                                             const std::vector<int>& weight) {
  const int r = static_cast<int>(weight.size());
  std::vector<Cell> order;
  for (int i = 1; i <= static_cast<int>(outer.size()); ++i)
    for (int j = at(inner, i) + 1; j <= outer[static_cast<std::size_t>(i - 1)]; ++j) order.push_back({i, j});
  std::vector<std::vector<int>> rows(outer.size());
  for (std::size_t i = 0; i < outer.size(); ++i) rows[i].assign(static_cast<std::size_t>(outer[i]), 0);
  std::vector<std::set<int>> residues(static_cast<std::size_t>(r));
  std::vector<std::vector<std::vector<int>>> out;
  auto letter = [&](int row, int col) { return rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; };
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == order.size()) {
      for (int i = 0; i < r; ++i)
        if (static_cast<int>(residues[static_cast<std::size_t>(i)].size()) != weight[static_cast<std::size_t>(i)]) return;
      out.push_back(rows);
      return;
    }
    const auto [row, col] = order[idx];
    int lo = 1;
    if (col > at(inner, row) + 1) lo = std::max(lo, letter(row, col - 1));
    if (row > 1 && col > at(inner, row - 1)) lo = std::max(lo, letter(row - 1, col) + 1);
    const int res = (((col - row) % (k + 1)) + (k + 1)) % (k + 1);
    for (int x = lo; x <= r; ++x) {
      auto& set = residues[static_cast<std::size_t>(x - 1)];
      const bool fresh = set.insert(res).second;
      if (static_cast<int>(set.size()) <= weight[static_cast<std::size_t>(x - 1)]) {
        rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = x;
        rec(idx + 1);
        rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = 0;
      }
      if (fresh) set.erase(res);
    }
  };
  rec(0);
  return out;
}

// Number of standard Young tableaux by the hook length formula.
inline Integer syt_count(const Parts& p) {
  Integer num = 1;
  for (int i = 2; i <= size(p); ++i) num *= i;
  Integer den = 1;
  for (const auto& c : cells(p)) den *= hook(p, c);
  return num / den;
}

// Polynomials in d variables as exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Integer>;

inline Poly monomial(const Parts& lam, int d) {
  Poly out;
  std::vector<int> v(lam.begin(), lam.end());
  v.resize(static_cast<std::size_t>(d), 0);
  std::sort(v.begin(), v.end());
  do out[v] = 1;
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// su(2) fusion at level K: (a) x (b) = sum of (c), |a-b| <= c <= min(a+b, 2K-a-b),
// c = a+b mod 2. Weights are one-row partitions (c) with c <= K.
inline std::map<int, int> su2_fusion(int a, int b, int level) {
  std::map<int, int> out;
  for (int c = std::abs(a - b); c <= std::min(a + b, 2 * level - a - b); c += 2) out[c] = 1;
  return out;
}

}  // namespace oracle
