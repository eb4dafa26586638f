#include "kschur/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "kschur/cores.hpp"
#include "kschur/dual.hpp"
#include "kschur/errors.hpp"
#include "kschur/kschur.hpp"
#include "kschur/ktableaux.hpp"
#include "kschur/quantum.hpp"
#include "kschur/symfunc.hpp"

namespace kschur::selftest {

namespace {

class Runner {
 public:
  explicit Runner(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }

  void count() { ++result_.cases; }

  void fail(const std::string& what) {
    if (result_.passed) result_.detail = what;
    result_.passed = false;
  }

  void expect(bool ok, const std::function<std::string()>& what) {
    count();
    if (!ok) fail(what());
  }

  CheckResult finish() {
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

  template <class Body>
  CheckResult run(Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    return finish();
  }

 private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Partition> bounded_up_to(int dmax, int k) {
  std::vector<Partition> out;
  for (int d = 0; d <= dmax; ++d)
    for (auto& p : enumerate_bounded(d, k)) out.push_back(std::move(p));
  return out;
}

void compositions(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    prefix.push_back(first);
    compositions(n - first, prefix, out);
    prefix.pop_back();
  }
}

std::string show(const Partition& a, const Partition& b, int k) {
  return to_string(a) + ", " + to_string(b) + " at k=" + std::to_string(k);
}

}  // namespace

CheckResult bijection(int kmin, int kmax, int dmax) {
  Runner r("c / c^-1 round trip");
  return r.run([&] {
    for (int k = kmin; k <= kmax; ++k)
      for (const auto& p : bounded_up_to(dmax, k)) {
        const Partition core = to_core(p, k).shape();
        r.expect(is_p_core(core, k + 1) && from_core(core, k) == p,
                 [&] { return "round trip fails for " + to_string(p) + " at k=" + std::to_string(k); });
      }
  });
}

CheckResult duality(int kmax, int dmax) {
  Runner r("k-Schur / dual k-Schur pairing is the identity");
  return r.run([&] {
    for (int k = 1; k <= kmax; ++k)
      for (int n = 0; n <= dmax; ++n) {
        const auto index = enumerate_bounded(n, k);
        for (const auto& a : index) {
          const SymPoly s = kschur_in_h(a, k);
          for (const auto& b : index) {
            const Integer v = hall_pair(s, dual_kschur_in_m(b, k));
            r.expect(v == (a == b ? 1 : 0), [&] { return "pairing " + show(a, b, k); });
          }
        }
      }
  });
}

CheckResult degeneration(int dmax) {
  Runner r("k-Schur equals Schur for small main hook");
  return r.run([&] {
    for (int d = 0; d <= dmax; ++d)
      for (const auto& p : enumerate_partitions(d)) {
        const int lo = std::max(1, main_hook(p));
        const SymPoly schur = convert(SymPoly::single(Basis::s, p), Basis::h);
        for (int k = lo; k <= std::max(lo, d); ++k)
          r.expect(kschur_in_h(p, k) == schur, [&] {
            return "s^(" + std::to_string(k) + ")" + to_string(p) + " differs from s" +
                   to_string(p);
          });
      }
  });
}

CheckResult gw_oracle(int nmax) {
  Runner r("Gromov-Witten invariants match the quotient-ring oracle");
  return r.run([&] {
    for (int n = 3; n <= nmax; ++n)
      for (int l = 2; l < n; ++l) {
        const auto box = enumerate_in_box(n - l, l);
        for (const auto& a : box)
          for (const auto& b : box)
            r.expect(gw_invariants(a, b, l, n) == quantum_product_oracle(a, b, l, n), [&] {
              return "GW mismatch for " + to_string(a) + " * " + to_string(b) +
                     " at l=" + std::to_string(l) + ", n=" + std::to_string(n);
            });
      }
  });
}

CheckResult gw_classical_layer(int nmax) {
  Runner r("q^0 layer of GW invariants is classical LR in the rectangle");
  return r.run([&] {
    for (int n = 3; n <= nmax; ++n)
      for (int l = 2; l < n; ++l) {
        const auto box = enumerate_in_box(n - l, l);
        for (const auto& a : box)
          for (const auto& b : box) {
            const GWExpansion g = gw_invariants(a, b, l, n);
            std::map<Partition, Integer> layer, expected;
            for (const auto& [key, c] : g.terms)
              if (key.first == 0) layer[key.second] = c;
            const SymPoly classical = classical_lr(a, b);
            for (const auto& [nu, c] : classical.terms())
              if (in_rectangle(nu, l, n)) expected[nu] = c;
            r.expect(layer == expected, [&] {
              return "q^0 layer differs for " + to_string(a) + " * " + to_string(b) +
                     " at l=" + std::to_string(l) + ", n=" + std::to_string(n);
            });
          }
      }
  });
}

CheckResult omega_klr(int kmax, int dmax) {
  Runner r("k-conjugation symmetry of k-LR coefficients");
  return r.run([&] {
    for (int k = 1; k <= kmax; ++k) {
      const auto all = bounded_up_to(dmax, k);
      for (const auto& a : all)
        for (const auto& b : all) {
          if (a.degree() + b.degree() > dmax) continue;
          const SymPoly p = klr(a, b, k);
          const SymPoly q = klr(k_conjugate(a, k), k_conjugate(b, k), k);
          bool ok = p.size() == q.size();
          for (const auto& [nu, c] : p.terms()) ok = ok && q.coeff(k_conjugate(nu, k)) == c;
          r.expect(ok, [&] { return "omega symmetry of c fails for " + show(a, b, k); });
        }
    }
  });
}

CheckResult omega_d(int kmax, int dmax) {
  Runner r("k-conjugation symmetry of d-coefficients");
  return r.run([&] {
    for (int k = 1; k <= kmax; ++k) {
      const auto all = bounded_up_to(dmax, k);
      for (const auto& a : all)
        for (const auto& b : all) {
          if (a.degree() + b.degree() > dmax) continue;
          const SymPoly p = d_coefficients(a, b, k);
          const SymPoly q = d_coefficients(k_conjugate(a, k), k_conjugate(b, k), k);
          bool ok = p.size() == q.size();
          for (const auto& [nu, c] : p.terms()) ok = ok && q.coeff(k_conjugate(nu, k)) == c;
          r.expect(ok, [&] { return "omega symmetry of d fails for " + show(a, b, k); });
        }
    }
  });
}

CheckResult d_routes(int kmax, int dmax) {
  Runner r("d-coefficients: monomial route equals coproduct route");
  return r.run([&] {
    for (int k = 1; k <= kmax; ++k) {
      const auto all = bounded_up_to(dmax, k);
      for (const auto& a : all)
        for (const auto& b : all) {
          if (a.degree() + b.degree() > dmax) continue;
          r.expect(d_coefficients_monomial_route(a, b, k) ==
                       d_coefficients_coproduct_route(a, b, k),
                   [&] { return "d routes differ for " + show(a, b, k); });
        }
    }
  });
}

CheckResult skew_theorem(int kmax, int dmax) {
  Runner r("skew dual k-Schur expands with k-LR coefficients");
  return r.run([&] {
    for (int k = 1; k <= kmax; ++k) {
      const auto all = bounded_up_to(dmax, k);
      for (const auto& nu : all)
        for (const auto& mu : all) {
          if (!contains(nu, mu)) continue;
          const int degree = nu.degree() - mu.degree();
          SymPoly lhs(Basis::m, degree);
          for (const auto& lam : enumerate_bounded(degree, k)) {
            const Integer c = klr(mu, lam, k).coeff(nu);
            if (c != 0) lhs += dual_kschur_in_m(lam, k) * c;
          }
          r.expect(lhs == skew_dual_in_m(nu, mu, k),
                   [&] { return "skew expansion fails for " + show(nu, mu, k); });
        }
    }
  });
}

CheckResult cauchy(int kmax, int dmax) {
  Runner r("Cauchy kernel identity");
  return r.run([&] {
    for (int k = 1; k <= kmax; ++k)
      for (int n = 0; n <= dmax; ++n)
        r.expect(cauchy_check(k, n), [&] {
          return "Cauchy identity fails at k=" + std::to_string(k) + ", n=" + std::to_string(n);
        });
  });
}

CheckResult klr_algebra(int kmax, int dmax) {
  Runner r("k-LR products are commutative and associative");
  return r.run([&] {
    for (int k = 1; k <= kmax; ++k) {
      const auto all = bounded_up_to(dmax, k);
      for (const auto& a : all)
        for (const auto& b : all) {
          if (a.degree() + b.degree() > dmax) continue;
          r.expect(klr(a, b, k) == klr(b, a, k),
                   [&] { return "commutativity fails for " + show(a, b, k); });
        }
      for (const auto& a : all)
        for (const auto& b : all)
          for (const auto& c : all) {
            const int total = a.degree() + b.degree() + c.degree();
            if (total > dmax) continue;
            SymPoly left(Basis::kschur, total, k), right(Basis::kschur, total, k);
            const SymPoly ab = klr(a, b, k);
            for (const auto& [g, x] : ab.terms()) left += klr(g, c, k) * x;
            const SymPoly bc = klr(b, c, k);
            for (const auto& [g, x] : bc.terms()) right += klr(a, g, k) * x;
            r.expect(left == right, [&] {
              return "associativity fails for " + to_string(a) + ", " + to_string(b) + ", " +
                     to_string(c) + " at k=" + std::to_string(k);
            });
          }
    }
  });
}

CheckResult weight_permutation(int kmax, int dmax) {
  Runner r("k-tableau counts are invariant under weight permutation");
  return r.run([&] {
    for (int n = 0; n <= dmax; ++n) {
      std::vector<std::vector<int>> weights;
      std::vector<int> prefix;
      compositions(n, prefix, weights);
      std::vector<std::vector<int>> sorted;
      for (const auto& w : weights) sorted.push_back(sort_to_partition(w).parts());
      for (int k = 1; k <= kmax; ++k)
        for (const auto& mu : enumerate_bounded(n, k)) {
          const Partition core = to_core(mu, k).shape();
          const auto counts = count_core_fillings(k, core, Partition{}, weights);
          const auto sorted_counts = count_core_fillings(k, core, Partition{}, sorted);
          for (std::size_t i = 0; i < weights.size(); ++i)
            r.expect(counts[i] == sorted_counts[i], [&] {
              return "count for weight " + to_string(weights[i]) + " differs from sorted, shape " +
                     to_string(mu) + " at k=" + std::to_string(k);
            });
        }
    }
  });
}

CheckResult skew_coproduct(int kmax, int dmax) {
  Runner r("skew coproduct identities");
  return r.run([&] {
    for (int k = 1; k <= kmax; ++k) {
      const auto all = bounded_up_to(dmax, k);
      for (const auto& nu : all)
        for (const auto& mu : all) {
          if (!contains(nu, mu)) continue;
          r.expect(skew_coproduct_check(nu, mu, k),
                   [&] { return "skew coproduct fails for " + show(nu, mu, k); });
        }
    }
  });
}

std::vector<CheckResult> run_all(int degree) {
  const int d = std::max(degree, 0);
  const int gw_n = std::clamp(d - 2, 3, 6);
  return {bijection(1, 5, d),       duality(4, d),
          degeneration(d),          gw_oracle(gw_n),
          gw_classical_layer(gw_n), omega_klr(3, d),
          omega_d(3, std::max(d - 1, 0)), d_routes(3, std::max(d - 1, 0)),
          skew_theorem(3, d),       cauchy(4, d),
          klr_algebra(3, d),        weight_permutation(4, d),
          skew_coproduct(2, std::min(d, 5))};
}

}  // namespace kschur::selftest
