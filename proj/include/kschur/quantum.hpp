#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "kschur/integer.hpp"
#include "kschur/partition.hpp"
#include "kschur/symfunc.hpp"

namespace kschur {

/// Orders (d, nu) by d, then nu in descending lexicographic order.
struct GWOrder {
  bool operator()(const std::pair<int, Partition>& a,
                  const std::pair<int, Partition>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return DescendingLex{}(a.second, b.second);
  }
};

/// sum q^d C^{nu,d}_{lambda mu} s_nu for one product in the quantum
/// cohomology of the Grassmannian with parameters (l, n).
struct GWExpansion {
  int l = 1;
  int n = 2;
  Partition lambda;
  Partition mu;
  std::map<std::pair<int, Partition>, Integer, GWOrder> terms;  ///< (d, nu) -> C

  Integer coeff(const Partition& nu, int d) const;
  bool operator==(const GWExpansion&) const = default;
};

/// Image of s_nu modulo J_q: sign * q^d * s_core, or nothing when the
/// n-core falls outside the l x (n-l) rectangle. Requires nu_1 <= l.
struct ReducedSchur {
  int sign = 1;
  int d = 0;
  Partition core;
};
std::optional<ReducedSchur> schur_mod_Jq(const Partition& nu, int l, int n);

/// Classical product, terms with nu_1 > l dropped, the rest reduced by
/// schur_mod_Jq. Requires lambda, mu in the rectangle.
GWExpansion quantum_product_oracle(const Partition& lambda, const Partition& mu, int l,
                                   int n);

/// From k-Littlewood-Richardson coefficients at k = n-1: every gamma in
/// Pi^{ln} contributes c^{gamma} at (n-core of gamma, number of hooks
/// removed). Requires lambda, mu in the rectangle.
GWExpansion gw_invariants(const Partition& lambda, const Partition& mu, int l, int n);

/// True when p fits in (n-l) columns and l-1 rows, the weights of su(l) at
/// level n-l.
bool in_fusion_box(const Partition& p, int l, int n);

/// Fusion coefficients N^{nu}_{lambda mu} for su(l) at level n-l, keyed by
/// nu (the terms have mixed degrees). Requires lambda, mu in the fusion box.
using FusionTerms = std::map<Partition, Integer, DescendingLex>;
FusionTerms fusion(const Partition& lambda, const Partition& mu, int l, int n);

/// s_lambda when lambda is in Pi^{ln}, zero otherwise. Requires lambda
/// (n-1)-bounded.
SymPoly modth_image(const Partition& lambda, int l, int n);

/// Standard (n-1)-tableaux of shape c(lambda'). Requires lambda' in Pi^{ln}.
Integer hecke_dimension(const Partition& lambda, int l, int n);

/// One record per line: {nu: [..], d: int, coeff: int}.
std::string to_string(const GWExpansion& g);

}  // namespace kschur
