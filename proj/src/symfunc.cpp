#include "kschur/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>

#include "kschur/errors.hpp"

namespace kschur {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::h: return "h";
    case Basis::m: return "m";
    case Basis::s: return "s";
    case Basis::kschur: return "kschur";
    case Basis::dual_kschur: return "dual_kschur";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "h") return Basis::h;
  if (name == "m") return Basis::m;
  if (name == "s") return Basis::s;
  if (name == "kschur") return Basis::kschur;
  if (name == "dual_kschur") return Basis::dual_kschur;
  throw ParseError("unknown basis '" + std::string(name) + "'");
}

namespace {
bool is_k_basis(Basis b) { return b == Basis::kschur || b == Basis::dual_kschur; }
}  // namespace

SymPoly::SymPoly(Basis basis, int degree, int k)
    : basis_(basis), degree_(degree), k_(is_k_basis(basis) ? k : 0) {
  require(degree >= 0, "degree must be nonnegative");
  if (is_k_basis(basis)) require(k >= 1, "k-Schur bases need k >= 1");
}

SymPoly SymPoly::single(Basis basis, const Partition& index, Integer coeff, int k) {
  SymPoly f(basis, index.degree(), k);
  f.add(index, coeff);
  return f;
}

Integer SymPoly::coeff(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SymPoly::add(const Partition& index, const Integer& c) {
  require(index.degree() == degree_, "index " + to_string(index) +
                                         " does not have degree " +
                                         std::to_string(degree_));
  if (k_ > 0)
    require(index.largest() <= k_, "index " + to_string(index) + " is not " +
                                       std::to_string(k_) + "-bounded");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SymPoly::check_compatible(const SymPoly& other) const {
  require(basis_ == other.basis_ && k_ == other.k_,
          "cannot combine expansions in different bases");
  require(degree_ == other.degree_, "cannot combine expansions of different degree");
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  check_compatible(other);
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  check_compatible(other);
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

Integer hall_pair(const SymPoly& f, const SymPoly& g) {
  require(f.basis() == Basis::h && g.basis() == Basis::m,
          "hall_pair pairs an h-expansion with an m-expansion");
  require(f.degree() == g.degree(), "hall_pair needs equal degrees");
  Integer acc = 0;
  for (const auto& [p, c] : f.terms()) acc += c * g.coeff(p);
  return acc;
}

// --- classical Kostka numbers ---------------------------------------------

namespace {

using Rows = std::vector<int>;

// Shapes next with from <= next <= bound, next/from a horizontal strip of
// exactly `size` cells.
void horizontal_strips(const Rows& from, const Rows& bound, int size,
                       const std::function<void(const Rows&)>& f) {
  Rows next = from;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == from.size()) {
      if (left == 0) f(next);
      return;
    }
    const int hi = std::min(bound[i], i == 0 ? bound[0] : from[i - 1]);
    for (int x = from[i]; x <= hi && x - from[i] <= left; ++x) {
      next[i] = x;
      rec(i + 1, left - (x - from[i]));
    }
    next[i] = from[i];
  };
  rec(0, size);
}

struct KostkaMemo {
  std::mutex mu;
  std::map<std::pair<Partition, std::vector<int>>, Integer> values;
  std::map<int, std::shared_ptr<const ClassicalKostkaTable>> tables;
};

KostkaMemo& kostka_memo() {
  static KostkaMemo memo;
  return memo;
}

}  // namespace

Integer classical_kostka(const Partition& shape, std::span<const int> weight) {
  for (int w : weight) require(w >= 0, "weight entries must be nonnegative");
  require(std::accumulate(weight.begin(), weight.end(), 0) == shape.degree(),
          "weight " + to_string(weight) + " does not sum to |" + to_string(shape) + "|");
  std::vector<int> key_weight(weight.begin(), weight.end());
  auto& memo = kostka_memo();
  {
    std::lock_guard lock(memo.mu);
    auto it = memo.values.find({shape, key_weight});
    if (it != memo.values.end()) return it->second;
  }
  const std::size_t len = static_cast<std::size_t>(shape.length());
  Rows bound(len);
  for (std::size_t i = 0; i < len; ++i) bound[i] = shape.part(i);
  std::map<Rows, Integer> states{{Rows(len, 0), Integer(1)}};
  for (int w : key_weight) {
    std::map<Rows, Integer> next;
    for (const auto& [s, c] : states)
      horizontal_strips(s, bound, w, [&](const Rows& t) { next[t] += c; });
    states = std::move(next);
  }
  Integer value = 0;
  if (auto it = states.find(bound); it != states.end()) value = it->second;
  std::lock_guard lock(memo.mu);
  memo.values.emplace(std::make_pair(shape, std::move(key_weight)), value);
  return value;
}

Integer classical_kostka(const Partition& shape, const Partition& weight) {
  return classical_kostka(shape, weight.view());
}

std::size_t ClassicalKostkaTable::position(const Partition& p) const {
  auto it = std::lower_bound(index.begin(), index.end(), p, DescendingLex{});
  ensure(it != index.end() && *it == p, "partition " + to_string(p) +
                                            " missing from the Kostka index");
  return static_cast<std::size_t>(it - index.begin());
}

const ClassicalKostkaTable& classical_kostka_table(int degree) {
  require(degree >= 0, "degree must be nonnegative");
  auto& memo = kostka_memo();
  {
    std::lock_guard lock(memo.mu);
    if (auto it = memo.tables.find(degree); it != memo.tables.end()) return *it->second;
  }
  auto table = std::make_shared<ClassicalKostkaTable>();
  table->degree = degree;
  table->index = enumerate_partitions(degree);
  const std::size_t n = table->index.size();
  table->forward.assign(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (dominates(table->index[i], table->index[j]))
        table->forward[i][j] = classical_kostka(table->index[i], table->index[j]);
  table->inverse = unitriangular_inverse(table->forward);
  std::lock_guard lock(memo.mu);
  auto [it, inserted] = memo.tables.emplace(degree, std::move(table));
  return *it->second;
}

SymPoly convert(const SymPoly& f, Basis target) {
  const auto classical = [](Basis b) {
    return b == Basis::h || b == Basis::m || b == Basis::s;
  };
  require(classical(f.basis()) && classical(target),
          "convert supports only the h, m and s bases");
  if (f.basis() == target) return f;
  const auto& t = classical_kostka_table(f.degree());
  const std::size_t n = t.index.size();

  std::vector<Integer> v(n);
  for (const auto& [p, c] : f.terms()) v[t.position(p)] = c;

  // Schur coefficients first.
  std::vector<Integer> s(n);
  switch (f.basis()) {
    case Basis::s: s = v; break;
    case Basis::h:  // h_mu = sum_lambda K_{lambda mu} s_lambda
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          if (v[j] != 0 && t.forward[i][j] != 0) s[i] += t.forward[i][j] * v[j];
      break;
    case Basis::m:  // m = s K  =>  s = m K^{-1}
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          if (v[i] != 0 && t.inverse[i][j] != 0) s[j] += v[i] * t.inverse[i][j];
      break;
    default: break;
  }

  std::vector<Integer> out(n);
  switch (target) {
    case Basis::s: out = s; break;
    case Basis::m:
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          if (s[i] != 0 && t.forward[i][j] != 0) out[j] += s[i] * t.forward[i][j];
      break;
    case Basis::h:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          if (s[j] != 0 && t.inverse[i][j] != 0) out[i] += t.inverse[i][j] * s[j];
      break;
    default: break;
  }
  SymPoly g(target, f.degree());
  for (std::size_t i = 0; i < n; ++i) g.add(t.index[i], out[i]);
  return g;
}

SymPoly classical_pieri(int r, const Partition& lambda) {
  require(r >= 1, "Pieri needs r >= 1");
  const std::size_t len = static_cast<std::size_t>(lambda.length()) + 1;
  Rows from(len, 0), bound(len, 0);
  for (std::size_t i = 0; i < len; ++i) from[i] = lambda.part(i);
  bound[0] = lambda.largest() + r;
  for (std::size_t i = 1; i < len; ++i) bound[i] = from[i - 1];
  SymPoly out(Basis::s, lambda.degree() + r);
  horizontal_strips(from, bound, r, [&](const Rows& t) { out.add(Partition(t), 1); });
  return out;
}

SymPoly classical_pieri(int r, const SymPoly& f) {
  require(f.basis() == Basis::s, "Pieri acts on the Schur basis");
  SymPoly out(Basis::s, f.degree() + r);
  for (const auto& [p, c] : f.terms()) out += classical_pieri(r, p) * c;
  return out;
}

namespace {

SymPoly lr_by_pieri(const Partition& lambda, const Partition& mu) {
  const SymPoly lam_h = convert(SymPoly::single(Basis::s, lambda), Basis::h);
  SymPoly out(Basis::s, lambda.degree() + mu.degree());
  for (const auto& [alpha, c] : lam_h.terms()) {
    SymPoly acc = SymPoly::single(Basis::s, mu);
    for (int part : alpha.parts()) acc = classical_pieri(part, acc);
    out += acc * c;
  }
  return out;
}

}  // namespace

SymPoly classical_lr_lattice(const Partition& lambda, const Partition& mu) {
  const int total = lambda.degree() + mu.degree();
  SymPoly out(Basis::s, total);
  for (const Partition& nu : enumerate_partitions(total)) {
    if (!contains(nu, lambda)) continue;
    const std::size_t len = static_cast<std::size_t>(nu.length());
    Rows bound(len), start(len);
    for (std::size_t i = 0; i < len; ++i) {
      bound[i] = nu.part(i);
      start[i] = lambda.part(i);
    }
    // Fill letter by letter, keeping the grid to test the lattice condition.
    std::vector<std::vector<int>> grid(len);
    for (std::size_t i = 0; i < len; ++i)
      grid[i].assign(static_cast<std::size_t>(bound[i]), 0);
    Integer count = 0;
    std::function<void(const Rows&, std::size_t)> rec = [&](const Rows& shape,
                                                             std::size_t letter) {
      if (letter == static_cast<std::size_t>(mu.length())) {
        if (shape != bound) return;
        // Rows longest first, each read right to left.
        std::vector<int> seen(static_cast<std::size_t>(mu.length()) + 2, 0);
        for (std::size_t i = 0; i < len; ++i)
          for (std::size_t j = grid[i].size(); j-- > static_cast<std::size_t>(start[i]);) {
            const auto x = static_cast<std::size_t>(grid[i][j]);
            ++seen[x];
            if (x > 1 && seen[x] > seen[x - 1]) return;
          }
        ++count;
        return;
      }
      horizontal_strips(shape, bound, mu.part(letter), [&](const Rows& next) {
        for (std::size_t i = 0; i < len; ++i)
          for (int c = shape[i]; c < next[i]; ++c)
            grid[i][static_cast<std::size_t>(c)] = static_cast<int>(letter + 1);
        rec(next, letter + 1);
      });
    };
    rec(start, 0);
    out.add(nu, count);
  }
  return out;
}

SymPoly classical_lr(const Partition& lambda, const Partition& mu) {
  SymPoly out = lr_by_pieri(lambda, mu);
  if (lambda.degree() + mu.degree() <= 8)
    ensure(out == classical_lr_lattice(lambda, mu),
           "classical Littlewood-Richardson routes disagree for " + to_string(lambda) +
               " * " + to_string(mu));
  for (const auto& [nu, c] : out.terms())
    ensure(c > 0, "negative Littlewood-Richardson coefficient");
  return out;
}

namespace {

// Number of exponent vectors a over gamma.size() variables that rearrange
// `parts` (zero padded), satisfy a <= gamma, and leave gamma - a a
// rearrangement of `rest`.
Integer count_splits(const std::vector<int>& gamma, const Partition& parts,
                     const Partition& rest) {
  const std::size_t d = gamma.size();
  std::map<int, int> avail;
  for (int x : parts.parts()) ++avail[x];
  avail[0] += static_cast<int>(d) - parts.length();
  std::map<int, int> need;
  for (int x : rest.parts()) ++need[x];
  need[0] += static_cast<int>(d) - rest.length();
  Integer count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d) {
      ++count;
      return;
    }
    for (auto& [v, cnt] : avail) {
      if (cnt == 0 || v > gamma[i]) continue;
      const int b = gamma[i] - v;
      auto it = need.find(b);
      if (it == need.end() || it->second == 0) continue;
      --cnt;
      --it->second;
      rec(i + 1);
      ++cnt;
      ++it->second;
    }
  };
  rec(0);
  return count;
}

}  // namespace

Integer monomial_product_coefficient(const SymPoly& f, const SymPoly& g,
                                     const Partition& gamma) {
  require(f.basis() == Basis::m && g.basis() == Basis::m,
          "monomial products take two m-expansions");
  require(f.degree() + g.degree() == gamma.degree(),
          "degree of the monomial must equal the product degree");
  const std::size_t d = static_cast<std::size_t>(gamma.degree());
  std::vector<int> gvec(d, 0);
  for (std::size_t i = 0; i < d; ++i) gvec[i] = gamma.part(i);
  Integer acc = 0;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      const Integer n = count_splits(gvec, a, b);
      if (n != 0) acc += ca * cb * n;
    }
  return acc;
}

Partition partition_union(const Partition& a, const Partition& b) {
  std::vector<int> v(a.parts());
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return sort_to_partition(v);
}

SymPoly multiply_h(const SymPoly& f, const SymPoly& g) {
  require(f.basis() == Basis::h && g.basis() == Basis::h,
          "multiply_h takes two h-expansions");
  SymPoly out(Basis::h, f.degree() + g.degree());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out.add(partition_union(a, b), ca * cb);
  return out;
}

Tensor coproduct_h(const SymPoly& f) {
  require(f.basis() == Basis::h, "coproduct_h needs an h-expansion");
  Tensor out;
  for (const auto& [lam, c] : f.terms()) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> acc{
        {{{}, {}}, Integer(1)}};
    for (int part : lam.parts()) {
      decltype(acc) next;
      for (const auto& [xy, v] : acc)
        for (int j = 0; j <= part; ++j) {
          auto x = xy.first;
          auto y = xy.second;
          if (part - j > 0) x.push_back(part - j);
          if (j > 0) y.push_back(j);
          next[{x, y}] += v;
        }
      acc = std::move(next);
    }
    for (const auto& [xy, v] : acc) {
      auto key = std::make_pair(sort_to_partition(xy.first), sort_to_partition(xy.second));
      out[key] += v * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Tensor coproduct_m(const SymPoly& f) {
  require(f.basis() == Basis::m, "coproduct_m needs an m-expansion");
  Tensor out;
  for (const auto& [lam, c] : f.terms()) {
    // Each distinct way to split the multiset of parts contributes once.
    std::map<int, int> mult;
    for (int x : lam.parts()) ++mult[x];
    std::vector<std::pair<int, int>> items(mult.begin(), mult.end());
    std::vector<int> x, y;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == items.size()) {
        out[{sort_to_partition(x), sort_to_partition(y)}] += c;
        return;
      }
      const auto [value, count] = items[i];
      for (int take = 0; take <= count; ++take) {
        for (int t = 0; t < take; ++t) x.push_back(value);
        for (int t = take; t < count; ++t) y.push_back(value);
        rec(i + 1);
        x.resize(x.size() - static_cast<std::size_t>(take));
        y.resize(y.size() - static_cast<std::size_t>(count - take));
      }
    };
    rec(0);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace kschur
