#include "kschur/ktableaux.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

#include "kschur/errors.hpp"

namespace kschur {

namespace {

using Rows = std::vector<int>;

struct RowsHash {
  std::size_t operator()(const Rows& r) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : r) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

using StateMap = std::unordered_map<Rows, Integer, RowsHash>;

Rows padded(const Partition& p, std::size_t len) {
  Rows r(len, 0);
  for (std::size_t i = 0; i < len; ++i) r[i] = p.part(i);
  return r;
}

// Calls f(next) for every shape next with from <= next <= bound such that
// next/from is a horizontal strip whose cells carry exactly `target`
// distinct residues mod `period`.
template <class F>
void for_each_strip(const Rows& from, const Rows& bound, int period, int target,
                    F&& f) {
  const std::size_t len = from.size();
  Rows next = from;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t mask) -> void {
    if (i == len) {
      if (std::popcount(mask) == target) f(next);
      return;
    }
    const int lo = from[i];
    const int hi = std::min(bound[i], i == 0 ? bound[0] : from[i - 1]);
    std::uint64_t m = mask;
    for (int x = lo; x <= hi; ++x) {
      if (x > lo) {
        int res = (x - static_cast<int>(i + 1)) % period;
        if (res < 0) res += period;
        m |= std::uint64_t{1} << res;
        if (std::popcount(m) > target) break;
      }
      next[i] = x;
      self(self, i + 1, m);
    }
    next[i] = from[i];
  };
  rec(rec, 0, 0);
}

void check_k(int k) {
  require(k >= 1, "bound k must be at least 1");
  require(k + 1 <= 64, "bound k must be at most 63");
}

void check_weight(std::span<const int> weight) {
  for (int w : weight) require(w >= 0, "k-weight entries must be nonnegative");
}

int weight_size(std::span<const int> weight) {
  return std::accumulate(weight.begin(), weight.end(), 0);
}

}  // namespace

std::vector<int> KTableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows)
    for (int x : row)
      if (x != 0) w.push_back(x);
  return w;
}

std::vector<Integer> count_core_fillings(int k, const Partition& outer_core,
                                         const Partition& inner_core,
                                         const std::vector<std::vector<int>>& weights) {
  check_k(k);
  const int period = k + 1;
  std::vector<Integer> result(weights.size());
  if (!contains(outer_core, inner_core)) return result;
  const std::size_t len = static_cast<std::size_t>(outer_core.length());
  const Rows bound = padded(outer_core, len);
  const Rows target = bound;

  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a] < weights[b];
  });

  StateMap start;
  start.emplace(padded(inner_core, len), Integer(1));

  // Depth-first over the trie of weight prefixes; [lo, hi) indexes `order`
  // entries sharing the first `depth` letters.
  auto rec = [&](auto&& self, const StateMap& states, std::size_t depth,
                 std::size_t lo, std::size_t hi) -> void {
    std::size_t i = lo;
    while (i < hi && weights[order[i]].size() == depth) {
      auto it = states.find(target);
      if (it != states.end()) result[order[i]] = it->second;
      ++i;
    }
    while (i < hi) {
      const int part = weights[order[i]][depth];
      std::size_t j = i;
      while (j < hi && weights[order[j]][depth] == part) ++j;
      StateMap next;
      for (const auto& [shape, count] : states)
        for_each_strip(shape, bound, period, part,
                       [&](const Rows& s) { next[s] += count; });
      if (!next.empty()) self(self, next, depth + 1, i, j);
      i = j;
    }
  };
  rec(rec, start, 0, 0, order.size());
  return result;
}

namespace {

std::vector<KTableau> enumerate_fillings(int k, const Partition& outer,
                                         const Partition& inner,
                                         std::span<const int> weight) {
  const int period = k + 1;
  const std::size_t len = static_cast<std::size_t>(outer.length());
  const Rows bound = padded(outer, len);
  std::vector<KTableau> out;

  KTableau cur;
  cur.k = k;
  cur.outer = outer;
  cur.inner = inner;
  cur.weight.assign(weight.begin(), weight.end());
  cur.rows.resize(len);
  for (std::size_t i = 0; i < len; ++i)
    cur.rows[i].assign(static_cast<std::size_t>(outer.part(i)), 0);

  auto rec = [&](auto&& self, const Rows& shape, std::size_t letter) -> void {
    if (letter == weight.size()) {
      if (shape == bound) out.push_back(cur);
      return;
    }
    for_each_strip(shape, bound, period, weight[letter], [&](const Rows& next) {
      for (std::size_t i = 0; i < len; ++i)
        for (int c = shape[i]; c < next[i]; ++c)
          cur.rows[i][static_cast<std::size_t>(c)] = static_cast<int>(letter + 1);
      self(self, next, letter + 1);
      for (std::size_t i = 0; i < len; ++i)
        for (int c = shape[i]; c < next[i]; ++c)
          cur.rows[i][static_cast<std::size_t>(c)] = 0;
    });
  };
  rec(rec, padded(inner, len), 0);
  std::sort(out.begin(), out.end(), [](const KTableau& a, const KTableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

}  // namespace

std::vector<KTableau> enumerate_k_tableaux(int k, const CoreShape& shape,
                                           std::span<const int> weight) {
  check_k(k);
  check_weight(weight);
  require(shape.period() == k + 1, "shape must be a (k+1)-core");
  const int m = k_bounded_hooks(shape, k);
  require(weight_size(weight) == m,
          "k-weight " + to_string(weight) + " does not sum to the " +
              std::to_string(m) + " k-bounded hooks of " + to_string(shape.shape()));
  return enumerate_fillings(k, shape.shape(), Partition{}, weight);
}

std::vector<KTableau> enumerate_skew_k_tableaux(int k, const CoreShape& outer,
                                                const CoreShape& inner,
                                                std::span<const int> weight) {
  check_k(k);
  check_weight(weight);
  require(outer.period() == k + 1 && inner.period() == k + 1,
          "shapes must be (k+1)-cores");
  require(contains(outer.shape(), inner.shape()),
          "inner core " + to_string(inner.shape()) + " not contained in " +
              to_string(outer.shape()));
  const int m = k_bounded_hooks(outer, k) - k_bounded_hooks(inner, k);
  require(weight_size(weight) == m,
          "k-weight " + to_string(weight) + " does not sum to " + std::to_string(m));
  return enumerate_fillings(k, outer.shape(), inner.shape(), weight);
}

Integer count_k_tableaux(int k, const Partition& mu, std::span<const int> weight) {
  check_k(k);
  check_weight(weight);
  require(mu.largest() <= k, to_string(mu) + " is not k-bounded");
  require(weight_size(weight) == mu.degree(),
          "k-weight " + to_string(weight) + " does not sum to |" + to_string(mu) + "|");
  const auto core = to_core(mu, k);
  return count_core_fillings(k, core.shape(), Partition{},
                             {std::vector<int>(weight.begin(), weight.end())})[0];
}

Integer count_skew_k_tableaux(int k, const Partition& nu, const Partition& mu,
                              std::span<const int> weight) {
  check_k(k);
  check_weight(weight);
  require(nu.largest() <= k && mu.largest() <= k, "partitions must be k-bounded");
  require(contains(nu, mu), to_string(mu) + " is not contained in " + to_string(nu));
  require(weight_size(weight) == nu.degree() - mu.degree(),
          "k-weight " + to_string(weight) + " does not sum to |nu| - |mu|");
  const auto outer = to_core(nu, k);
  const auto inner = to_core(mu, k);
  return count_core_fillings(k, outer.shape(), inner.shape(),
                             {std::vector<int>(weight.begin(), weight.end())})[0];
}

Integer count_standard(int k, const Partition& mu) {
  return count_k_tableaux(k, mu, std::vector<int>(static_cast<std::size_t>(mu.degree()), 1));
}

bool prefix_shapes_are_cores(const KTableau& t) {
  const int letters = static_cast<int>(t.weight.size());
  for (int a = 0; a <= letters; ++a) {
    std::vector<int> rows;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      int c = t.inner.part(i);
      for (std::size_t j = static_cast<std::size_t>(c); j < t.rows[i].size(); ++j)
        if (t.rows[i][j] <= a) c = static_cast<int>(j) + 1;
      rows.push_back(c);
    }
    if (!is_p_core(Partition(rows), t.k + 1)) return false;
  }
  return true;
}

std::string to_string(const KTableau& t) {
  std::string s;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    s += '[';
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j) s += ',';
      s += t.rows[i][j] == 0 ? std::string(".") : std::to_string(t.rows[i][j]);
    }
    s += "]\n";
  }
  return s;
}

}  // namespace kschur
