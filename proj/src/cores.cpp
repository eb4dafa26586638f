#include "kschur/cores.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "kschur/errors.hpp"

namespace kschur {

namespace {

// Beta-number (edge-sequence) form: with L rows (zero padded), row i
// (0-based) carries bead p_i + L - 1 - i. Moving a bead down by n removes
// an n-rim hook; the beads jumped over count its leg.
struct Beads {
  std::vector<bool> occupied;
  int rows = 0;

  Beads(const Partition& p, int padding) {
    rows = p.length() + padding;
    const int top = p.largest() + rows;
    occupied.assign(static_cast<std::size_t>(top + padding + 1), false);
    for (int i = 0; i < rows; ++i)
      occupied[static_cast<std::size_t>(bead_of_row(p, i))] = true;
  }

  int bead_of_row(const Partition& p, int i) const {
    return p.part(static_cast<std::size_t>(i)) + rows - 1 - i;
  }

  bool has(int pos) const {
    return pos >= 0 && pos < static_cast<int>(occupied.size()) &&
           occupied[static_cast<std::size_t>(pos)];
  }

  int beads_between(int lo, int hi) const {
    int c = 0;
    for (int q = lo + 1; q < hi; ++q) c += has(q) ? 1 : 0;
    return c;
  }

  void move(int from, int to) {
    if (to >= static_cast<int>(occupied.size()))
      occupied.resize(static_cast<std::size_t>(to + 1), false);
    occupied[static_cast<std::size_t>(from)] = false;
    occupied[static_cast<std::size_t>(to)] = true;
  }

  Partition partition() const {
    std::vector<int> parts;
    int i = 0;
    for (int pos = static_cast<int>(occupied.size()) - 1; pos >= 0; --pos) {
      if (!occupied[static_cast<std::size_t>(pos)]) continue;
      parts.push_back(pos - (rows - 1 - i));
      ++i;
    }
    return Partition(std::move(parts));
  }
};

void check_period(int n) { require(n >= 2, "period must be at least 2"); }

void check_bounded(const Partition& p, int k) {
  require(k >= 1, "bound k must be at least 1");
  require(p.largest() <= k,
          "partition " + to_string(p) + " is not " + std::to_string(k) + "-bounded");
}

}  // namespace

CoreShape::CoreShape(Partition shape, int period)
    : shape_(std::move(shape)), period_(period) {
  check_period(period_);
  require(is_p_core(shape_, period_), to_string(shape_) + " is not a " +
                                          std::to_string(period_) + "-core");
}

int residue(Cell c, int p) {
  check_period(p);
  const int r = (c.col - c.row) % p;
  return r < 0 ? r + p : r;
}

bool is_p_core(const Partition& p, int period) {
  check_period(period);
  for (int i = 0; i < p.length(); ++i)
    for (int j = 1; j <= p.part(static_cast<std::size_t>(i)); ++j)
      if (hook_length(p, Cell{i + 1, j}) == period) return false;
  return true;
}

std::optional<std::pair<Partition, int>> remove_rim_hook(const Partition& p,
                                                         int n, int lowest_row) {
  check_period(n);
  if (lowest_row < 1 || lowest_row > p.length()) return std::nullopt;
  Beads beads(p, 0);
  const int b = beads.bead_of_row(p, lowest_row - 1);
  if (b - n < 0 || beads.has(b - n)) return std::nullopt;
  const int leg = beads.beads_between(b - n, b);
  beads.move(b, b - n);
  return std::make_pair(beads.partition(), n - 1 - leg);
}

std::optional<std::pair<Partition, int>> remove_rim_hook_first_column(
    const Partition& p, int n) {
  check_period(n);
  for (int i = 1; i <= p.length(); ++i)
    if (hook_length(p, Cell{i, 1}) == n) return remove_rim_hook(p, n, i);
  return std::nullopt;
}

RimHookRecord n_core(const Partition& p, int n) {
  check_period(n);
  RimHookRecord rec{p, 0, {}};
  while (true) {
    auto step = remove_rim_hook_first_column(rec.removed_shape, n);
    for (int i = 1; !step && i <= rec.removed_shape.length(); ++i)
      step = remove_rim_hook(rec.removed_shape, n, i);
    if (!step) break;
    rec.removed_shape = std::move(step->first);
    rec.widths.push_back(step->second);
    ++rec.hooks_removed;
  }
  return rec;
}

int epsilon(const RimHookRecord& rec, int l) {
  int w = 0;
  for (int x : rec.widths) w += x;
  return rec.hooks_removed * (l - 1) - w;
}

namespace {

SkewShape build_k_skew(const Partition& p, int k) {
  const int len = p.length();
  std::vector<int> offset(static_cast<std::size_t>(len), 0);
  std::vector<int> outer(static_cast<std::size_t>(len), 0);
  // Rows go in from the top (shortest) down; a lower row never changes the
  // hooks of the rows above it.
  for (int i = len - 1; i >= 0; --i) {
    const int row_len = p.part(static_cast<std::size_t>(i));
    const int min_off = i + 1 < len ? offset[static_cast<std::size_t>(i + 1)] : 0;
    const int max_off = i + 1 < len ? outer[static_cast<std::size_t>(i + 1)] : 0;
    bool placed = false;
    for (int off = min_off; off <= max_off && !placed; ++off) {
      bool ok = true;
      for (int j = off + 1; j <= off + row_len && ok; ++j) {
        int leg = 0;
        for (int r = i + 1; r < len; ++r) {
          const auto ur = static_cast<std::size_t>(r);
          if (offset[ur] < j && j <= outer[ur]) ++leg;
        }
        if (off + row_len - j + leg + 1 > k) ok = false;
      }
      if (ok) {
        offset[static_cast<std::size_t>(i)] = off;
        outer[static_cast<std::size_t>(i)] = off + row_len;
        placed = true;
      }
    }
    ensure(placed, "k-skew construction found no admissible offset for " +
                       to_string(p));
  }
  return SkewShape(Partition(outer), Partition(offset));
}

// Layout conditions: row lengths, skew hooks <= k, hooks of inner squares > k.
void verify_k_skew(const SkewShape& s, const Partition& p, int k) {
  for (int i = 0; i < p.length(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    ensure(s.outer().part(ui) - s.inner().part(ui) == p.part(ui),
           "k-skew row length mismatch for " + to_string(p));
    for (int j = 1; j <= s.outer().part(ui); ++j) {
      const int h = hook_length(s, Cell{i + 1, j});
      if (j > s.inner().part(ui))
        ensure(h <= k, "k-skew cell with hook exceeding k for " + to_string(p));
      else
        ensure(h > k, "k-skew inner square with bounded hook for " + to_string(p));
    }
  }
}

struct CoreMemo {
  std::mutex mu;
  std::map<std::pair<int, Partition>, SkewShape> skew;
};

CoreMemo& core_memo() {
  static CoreMemo memo;
  return memo;
}

}  // namespace

SkewShape k_skew(const Partition& p, int k) {
  check_bounded(p, k);
  auto& memo = core_memo();
  {
    std::lock_guard lock(memo.mu);
    if (auto it = memo.skew.find({k, p}); it != memo.skew.end()) return it->second;
  }
  SkewShape s = build_k_skew(p, k);
  verify_k_skew(s, p, k);
  ensure(is_p_core(s.outer(), k + 1),
         "outer shape of the k-skew diagram of " + to_string(p) +
             " is not a (k+1)-core");
  std::lock_guard lock(memo.mu);
  memo.skew.emplace(std::make_pair(k, p), s);
  return s;
}

CoreShape to_core(const Partition& p, int k) {
  return CoreShape(k_skew(p, k).outer(), k + 1);
}

Partition from_core(const Partition& core, int k) {
  require(k >= 1, "bound k must be at least 1");
  require(is_p_core(core, k + 1),
          to_string(core) + " is not a " + std::to_string(k + 1) + "-core");
  std::vector<int> rows;
  for (int i = 0; i < core.length(); ++i) {
    int c = 0;
    for (int j = 1; j <= core.part(static_cast<std::size_t>(i)); ++j)
      if (hook_length(core, Cell{i + 1, j}) <= k) ++c;
    rows.push_back(c);
  }
  return Partition(std::move(rows));
}

Partition from_core(const CoreShape& core, int k) {
  require(core.period() == k + 1, "core period must be k + 1");
  return from_core(core.shape(), k);
}

int k_bounded_hooks(const CoreShape& core, int k) {
  return from_core(core, k).degree();
}

Partition k_conjugate(const Partition& p, int k) {
  return from_core(conjugate(to_core(p, k).shape()), k);
}

Partition rim_up(const Partition& p, int l, int n) {
  require(in_Pi(p, l, n), to_string(p) + " is not in Pi^{" + std::to_string(l) +
                              "," + std::to_string(n) + "}");
  Beads base(p, n);
  std::optional<Partition> found;
  for (int pos = 0; pos < static_cast<int>(base.occupied.size()); ++pos) {
    if (!base.has(pos) || base.has(pos + n)) continue;
    Beads b = base;
    b.move(pos, pos + n);
    Partition q = b.partition();
    // The added cells must span exactly columns 1..l.
    int min_col = q.largest() + 1, max_col = 0;
    for (int i = 0; i < q.length(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (q.part(ui) > p.part(ui)) {
        min_col = std::min(min_col, p.part(ui) + 1);
        max_col = std::max(max_col, q.part(ui));
      }
    }
    if (min_col == 1 && max_col == l) {
      ensure(!found, "rim hook from column l to column 1 is not unique for " +
                         to_string(p));
      found = std::move(q);
    }
  }
  ensure(found.has_value(), "no n-rim hook from column l to column 1 for " +
                                to_string(p));
  ensure(in_Pi(*found, l, n), "rim_up left Pi^{ln}");
  return *found;
}

Partition rim_down(const Partition& p, int l, int n) {
  require(in_Pi(p, l, n), to_string(p) + " is not in Pi^{" + std::to_string(l) +
                              "," + std::to_string(n) + "}");
  require(!is_p_core(p, n), to_string(p) + " is an " + std::to_string(n) + "-core");
  auto step = remove_rim_hook_first_column(p, n);
  ensure(step.has_value(), "no first-column n-rim hook in " + to_string(p));
  ensure(step->second == l - 1, "first-column rim hook of " + to_string(p) +
                                    " does not have width l - 1");
  ensure(in_Pi(step->first, l, n), "rim_down left Pi^{ln}");
  return step->first;
}

}  // namespace kschur
