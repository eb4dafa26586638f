#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kschur/integer.hpp"
#include "kschur/matrix.hpp"
#include "kschur/partition.hpp"
#include "kschur/symfunc.hpp"

namespace kschur {

/// k-Kostka numbers over the k-bounded partitions of one degree and their
/// exact inverse.
///
/// `index` is in descending lexicographic order, which makes `forward`
/// upper unitriangular: forward[i][j] = K^{(k)}_{index[i], index[j]}.
/// `inverse` holds Kbar^{(k)} in the same layout.
struct KostkaMatrix {
  int k = 1;
  int degree = 0;
  std::vector<Partition> index;
  IntMatrix forward;
  IntMatrix inverse;

  std::size_t position(const Partition& p) const;
  const Integer& K(const Partition& mu, const Partition& lambda) const;
  const Integer& Kbar(const Partition& mu, const Partition& lambda) const;
  bool operator==(const KostkaMatrix&) const = default;
};

/// Computes from scratch (no memory or disk cache).
KostkaMatrix compute_kostka_matrix(int k, int n);

/// Shared, cached matrix for (k, n). Concurrent requests for one key
/// compute it once; completed matrices are loaded from and saved to the
/// disk cache when one is configured.
std::shared_ptr<const KostkaMatrix> kostka_matrix(int k, int n);

/// Drops the in-memory matrix and product caches (disk is untouched).
void clear_memory_caches();

/// Versioned JSON with an embedded checksum.
std::string kostka_to_json(const KostkaMatrix& m);
/// Throws ParseError on malformed input or checksum mismatch.
KostkaMatrix kostka_from_json(const std::string& text);
/// File name used in the cache directory.
std::string kostka_cache_name(int k, int n);

/// s^{(k)}_lambda = sum_mu Kbar_{mu lambda} h_mu.
SymPoly kschur_in_h(const Partition& lambda, int k);
/// h_lambda = sum_mu K_{mu lambda} s^{(k)}_mu.
SymPoly h_in_kschur(const Partition& lambda, int k);
/// Linear extensions of the two maps above.
SymPoly kschur_to_h(const SymPoly& f);
SymPoly h_to_kschur(const SymPoly& f, int k);

/// Partitions lambda with lambda/nu a horizontal l-strip and
/// lambda^{w_k}/nu^{w_k} a vertical l-strip, descending lexicographic.
std::vector<Partition> k_pieri_set(const Partition& nu, int l, int k);

/// h_lambda s^{(k)}_mu = sum_nu K^{(k)}_{nu/mu, lambda} s^{(k)}_nu.
SymPoly h_times_kschur(const Partition& lambda, const Partition& mu, int k);

/// k-Littlewood-Richardson coefficients c^{nu,k}_{lambda mu} as a k-Schur
/// expansion. Primary route: sum_alpha Kbar_{alpha lambda}
/// K_{nu/mu, alpha}. When the joint degree is within the guard, the
/// product is re-derived in the h basis and the routes must agree.
SymPoly klr(const Partition& lambda, const Partition& mu, int k);
SymPoly klr_skew_route(const Partition& lambda, const Partition& mu, int k);
SymPoly klr_h_route(const Partition& lambda, const Partition& mu, int k);

/// Joint degree up to which klr also runs the h route (default 10).
int klr_guard_degree();
void set_klr_guard_degree(int d);

}  // namespace kschur
