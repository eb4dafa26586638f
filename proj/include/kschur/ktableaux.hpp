#pragma once

#include <span>
#include <string>
#include <vector>

#include "kschur/cores.hpp"
#include "kschur/integer.hpp"
#include "kschur/partition.hpp"

namespace kschur {

/// A (skew) k-tableau: a filling of outer/inner, both (k+1)-cores, whose
/// rows weakly increase, columns strictly increase, and where letter i
/// covers exactly weight[i-1] distinct (k+1)-residues.
struct KTableau {
  int k = 1;
  Partition outer;
  Partition inner;
  /// rows[r][c] is the letter in cell (r+1, c+1), bottom row first; inner
  /// cells hold 0.
  std::vector<std::vector<int>> rows;
  std::vector<int> weight;

  /// Row reading word: bottom row left to right, then the next row up.
  std::vector<int> reading_word() const;
  bool operator==(const KTableau&) const = default;
};

/// All k-tableaux of the given core shape and k-weight, sorted by reading
/// word. Zero weight entries mean the letter does not occur.
std::vector<KTableau> enumerate_k_tableaux(int k, const CoreShape& shape,
                                           std::span<const int> weight);

/// Skew version on outer/inner.
std::vector<KTableau> enumerate_skew_k_tableaux(int k, const CoreShape& outer,
                                                const CoreShape& inner,
                                                std::span<const int> weight);

/// K^{(k)}_{mu,alpha}: k-tableaux of shape c(mu) and k-weight alpha.
Integer count_k_tableaux(int k, const Partition& mu, std::span<const int> weight);

/// K^{(k)}_{nu/mu,alpha}: skew k-tableaux of shape c(nu)/c(mu).
Integer count_skew_k_tableaux(int k, const Partition& nu, const Partition& mu,
                              std::span<const int> weight);

/// Standard k-tableaux of shape c(mu), i.e. k-weight (1,...,1).
Integer count_standard(int k, const Partition& mu);

/// Batched counting on core shapes: result[i] counts fillings of
/// outer_core / inner_core with k-weight weights[i]. Weights sharing a
/// prefix share work. No precondition on weight sizes; mismatched sizes
/// simply count zero.
std::vector<Integer> count_core_fillings(int k, const Partition& outer_core,
                                         const Partition& inner_core,
                                         const std::vector<std::vector<int>>& weights);

/// True iff every letter-prefix shape (cells holding letters <= i, plus the
/// inner shape) is a (k+1)-core.
bool prefix_shapes_are_cores(const KTableau& t);

/// Rows bottom to top, one bracketed row per line; inner cells print as '.'.
std::string to_string(const KTableau& t);

}  // namespace kschur
