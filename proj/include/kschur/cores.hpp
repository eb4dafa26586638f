#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kschur/partition.hpp"

namespace kschur {

/// A partition certified to be a p-core: no cell has hook length p.
class CoreShape {
 public:
  /// Throws PreconditionError when `shape` has a hook of length `period`.
  CoreShape(Partition shape, int period);

  const Partition& shape() const noexcept { return shape_; }
  int period() const noexcept { return period_; }

  bool operator==(const CoreShape&) const = default;

 private:
  Partition shape_;
  int period_;
};

/// Result of stripping n-rim hooks until an n-core remains.
struct RimHookRecord {
  Partition removed_shape;  ///< the n-core
  int hooks_removed = 0;    ///< d
  std::vector<int> widths;  ///< columns occupied minus one, per hook
};

/// (col - row) mod p, in [0, p).
int residue(Cell c, int p);

bool is_p_core(const Partition& p, int period);

/// Removes the n-rim hook whose lowest row is `lowest_row` (1-based), i.e.
/// the rim running from the end of that row up to column c where the hook
/// of cell (lowest_row, c) is n. Returns the smaller partition and the
/// hook's width, or nothing when no such hook exists.
std::optional<std::pair<Partition, int>> remove_rim_hook(const Partition& p,
                                                         int n, int lowest_row);

/// Removes the n-rim hook whose leftmost cell lies in the first column.
std::optional<std::pair<Partition, int>> remove_rim_hook_first_column(
    const Partition& p, int n);

/// Strips n-rim hooks until none is left. First-column hooks are taken
/// first; otherwise the hook with the lowest starting row.
RimHookRecord n_core(const Partition& p, int n);

/// d (l - 1) minus the sum of the widths.
int epsilon(const RimHookRecord& rec, int l);

/// The k-skew diagram: rows of length p_i placed leftmost such that no
/// skew cell has a hook exceeding k. Requires p to be k-bounded.
SkewShape k_skew(const Partition& p, int k);

/// Outer shape of the k-skew diagram, a (k+1)-core.
CoreShape to_core(const Partition& p, int k);

/// Row i counts the cells of row i of the core whose hook is at most k.
Partition from_core(const CoreShape& core, int k);
Partition from_core(const Partition& core, int k);

int k_bounded_hooks(const CoreShape& core, int k);

/// from_core(conjugate(to_core(p, k)), k).
Partition k_conjugate(const Partition& p, int k);

/// Adds the n-rim hook that starts in column l and ends in column 1.
/// Requires p in Pi^{ln}.
Partition rim_up(const Partition& p, int l, int n);

/// Removes the n-rim hook starting in the first column. Requires p in
/// Pi^{ln} and p not an n-core; the removed hook has width l - 1.
Partition rim_down(const Partition& p, int l, int n);

}  // namespace kschur
