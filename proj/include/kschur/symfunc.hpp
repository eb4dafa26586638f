#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>

#include "kschur/integer.hpp"
#include "kschur/matrix.hpp"
#include "kschur/partition.hpp"

namespace kschur {

enum class Basis { h, m, s, kschur, dual_kschur };

/// "h", "m", "s", "kschur", "dual_kschur".
std::string basis_name(Basis b);
Basis parse_basis(std::string_view name);

/// A homogeneous symmetric function written in one basis: a finite map
/// from partitions of `degree` to nonzero integer coefficients. The k-Schur
/// and dual k-Schur bases carry their bound k and only accept k-bounded
/// indices.
class SymPoly {
 public:
  using Terms = std::map<Partition, Integer, DescendingLex>;

  SymPoly(Basis basis, int degree, int k = 0);
  static SymPoly single(Basis basis, const Partition& index, Integer coeff = 1,
                        int k = 0);

  Basis basis() const noexcept { return basis_; }
  int degree() const noexcept { return degree_; }
  /// The bound for kschur / dual_kschur; 0 otherwise.
  int k() const noexcept { return k_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coeff(const Partition& index) const;
  /// Adds c to the coefficient of index; zero results are erased.
  void add(const Partition& index, const Integer& c);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Integer& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Integer& c) { return a *= c; }

  bool operator==(const SymPoly& other) const = default;

 private:
  void check_compatible(const SymPoly& other) const;

  Basis basis_;
  int degree_;
  int k_;
  Terms terms_;
};

/// Coefficients on a tensor product of two bases, keyed by index pairs.
using Tensor = std::map<std::pair<Partition, Partition>, Integer>;

/// <f, g> with <h_a, m_b> = delta_{ab}. f in h, g in m, equal degrees.
Integer hall_pair(const SymPoly& f, const SymPoly& g);

/// Semistandard tableaux of the given shape and weight (a composition).
Integer classical_kostka(const Partition& shape, std::span<const int> weight);
Integer classical_kostka(const Partition& shape, const Partition& weight);

/// Classical Kostka matrix over all partitions of n (descending
/// lexicographic) and its exact inverse. Cached per degree.
struct ClassicalKostkaTable {
  int degree = 0;
  std::vector<Partition> index;
  IntMatrix forward;  ///< forward[i][j] = K_{index[i], index[j]}
  IntMatrix inverse;
  std::size_t position(const Partition& p) const;
};
const ClassicalKostkaTable& classical_kostka_table(int degree);

/// Re-expresses f (in h, m or s) in the target basis among h, m, s.
SymPoly convert(const SymPoly& f, Basis target);

/// h_r s_lambda: sum of s_mu over horizontal r-strips mu / lambda.
SymPoly classical_pieri(int r, const Partition& lambda);
/// Applies classical_pieri termwise to an s-basis element.
SymPoly classical_pieri(int r, const SymPoly& f);

/// s_lambda s_mu in the Schur basis. Iterated Pieri on the h-expansion of
/// s_lambda; for joint degree <= 8 the result is re-derived by counting
/// lattice-word skew tableaux and the routes must agree.
SymPoly classical_lr(const Partition& lambda, const Partition& mu);
/// Lattice-word (Littlewood-Richardson tableau) route alone.
SymPoly classical_lr_lattice(const Partition& lambda, const Partition& mu);

/// Coefficient of x^gamma in f g, for f, g in the m basis. Uses exactly
/// |gamma| variables.
Integer monomial_product_coefficient(const SymPoly& f, const SymPoly& g,
                                     const Partition& gamma);

/// Product in the h basis (h_a h_b = h_{a union b}).
SymPoly multiply_h(const SymPoly& f, const SymPoly& g);

/// f(x, y) expanded in h(x) (x) h(y). f must be in the h basis.
Tensor coproduct_h(const SymPoly& f);
/// f(x, y) expanded in m(x) (x) m(y). f must be in the m basis.
Tensor coproduct_m(const SymPoly& f);

/// Union of the parts of a and b, sorted.
Partition partition_union(const Partition& a, const Partition& b);

}  // namespace kschur
