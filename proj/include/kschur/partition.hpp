#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kschur {

/// A weakly decreasing sequence of positive integers. Stored without
/// trailing zeros; part(i) pads logically with zeros.
///
/// Row i of the Ferrers diagram (1-based, counted from the bottom) has
/// part(i - 1) cells.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError if the sequence increases or has negative
  /// entries. Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::span<const int> view() const noexcept { return parts_; }

  /// Zero-based part access with zero padding past the end.
  int part(std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }
  int operator[](std::size_t i) const noexcept { return part(i); }

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int degree() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  bool operator==(const Partition&) const = default;
  /// Plain lexicographic order on the part sequences.
  std::strong_ordering operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Strict weak order used for every index set: descending lexicographic.
/// On partitions of equal degree it refines dominance.
struct DescendingLex {
  bool operator()(const Partition& a, const Partition& b) const {
    return b < a;
  }
};

/// Cell (row, col), both 1-based. Rows count from the bottom.
struct Cell {
  int row = 1;
  int col = 1;
  bool operator==(const Cell&) const = default;
};

/// outer / inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  /// Cells of outer that are not in inner.
  int size() const noexcept { return outer_.degree() - inner_.degree(); }
  bool contains(Cell c) const noexcept;

  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

Partition conjugate(const Partition& p);

/// inner fits inside outer, componentwise.
bool contains(const Partition& outer, const Partition& inner);

/// True iff |a| = |b| and every prefix sum of a is at least that of b.
bool dominates(const Partition& a, const Partition& b);

/// Number of cells of shape.outer()/shape.inner() inside the L cornered at
/// s: arm to the right in s's row, leg above in s's column, plus s itself
/// when s is a skew cell. s may lie in the inner shape.
int hook_length(const SkewShape& shape, Cell s);
/// Straight-shape hook length.
int hook_length(const Partition& p, Cell s);

/// Hook length of cell (1,1); 0 for the empty partition.
int main_hook(const Partition& p);

bool is_horizontal_strip(const Partition& outer, const Partition& inner);
bool is_vertical_strip(const Partition& outer, const Partition& inner);

/// Fits in the rectangle with n - l rows of size l.
bool in_rectangle(const Partition& p, int l, int n);
/// p_1 <= l and at most n - l parts are smaller than l.
bool in_Pi(const Partition& p, int l, int n);

/// Partitions of n with largest part at most k, descending lexicographic.
std::vector<Partition> enumerate_bounded(int n, int k);
/// All partitions of n, descending lexicographic.
std::vector<Partition> enumerate_partitions(int n);
/// Partitions contained in the rectangle with `rows` rows of size `cols`,
/// sorted by degree and then descending lexicographic.
std::vector<Partition> enumerate_in_box(int rows, int cols);

/// Sort a composition into a partition (zeros dropped).
Partition sort_to_partition(std::span<const int> composition);

/// `[4,3,2,2,1,1]`, `[]` for the empty partition.
std::string to_string(const Partition& p);
std::string to_string(std::span<const int> seq);
/// Parses the bracket form. Whitespace is allowed around tokens. Throws
/// ParseError on malformed text and PreconditionError if the sequence is
/// not a partition.
Partition parse_partition(std::string_view text);
/// Bracket form for an arbitrary nonnegative sequence (weights).
std::vector<int> parse_sequence(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace kschur

template <>
struct std::hash<kschur::Partition> {
  std::size_t operator()(const kschur::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};
