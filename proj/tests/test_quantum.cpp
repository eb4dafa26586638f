#include "doctest.h"
#include "kschur/cores.hpp"
#include "kschur/errors.hpp"
#include "kschur/ktableaux.hpp"
#include "kschur/quantum.hpp"
#include "oracles.hpp"

using namespace kschur;

namespace {

Partition ones(int a) { return Partition(std::vector<int>(static_cast<std::size_t>(a), 1)); }

}  // namespace

TEST_CASE("reduction modulo the quantum ideal") {
  for (int n = 2; n <= 6; ++n)
    for (int l = 1; l < n; ++l)
      for (int deg = 0; deg <= 10; ++deg)
        for (const auto& nu : enumerate_bounded(deg, l)) {
          const auto r = schur_mod_Jq(nu, l, n);
          const auto outcomes = oracle::all_removal_orders(nu.parts(), n);
          REQUIRE(outcomes.size() == 1);
          const auto& o = *outcomes.begin();
          if (!r) {
            CHECK_FALSE(in_rectangle(Partition(o.core), l, n));
            continue;
          }
          CHECK(r->core == Partition(o.core));
          CHECK(r->d == o.d);
          CHECK(in_rectangle(r->core, l, n));
          CHECK((r->sign == 1 || r->sign == -1));
        }
  CHECK_THROWS_AS(schur_mod_Jq({3}, 2, 4), PreconditionError);
}

TEST_CASE("small quantum products") {
  const GWExpansion g = gw_invariants({2, 2}, {2, 2}, 2, 4);
  REQUIRE(g.terms.size() == 1);
  CHECK(g.coeff(Partition{}, 2) == 1);
  CHECK(to_string(g) == "{nu: [], d: 2, coeff: 1}\n");
  CHECK(g == quantum_product_oracle({2, 2}, {2, 2}, 2, 4));

  const GWExpansion h = quantum_product_oracle({2, 2}, {1}, 2, 4);
  REQUIRE(h.terms.size() == 1);
  CHECK(h.coeff({1}, 1) == 1);
  CHECK(gw_invariants({2, 2}, {1}, 2, 4) == h);

  const GWExpansion c = gw_invariants({1}, {1}, 2, 4);
  CHECK(c.coeff({2}, 0) == 1);
  CHECK(c.coeff({1, 1}, 0) == 1);
  CHECK(c.terms.size() == 2);
  CHECK_THROWS_AS(gw_invariants({3}, {1}, 2, 4), PreconditionError);
}

TEST_CASE("projective space") {
  // Gr(1, n): sigma_a sigma_b = q^{[a+b>=n]} sigma_{a+b mod n}
  for (int n = 2; n <= 6; ++n)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const GWExpansion g = gw_invariants(ones(a), ones(b), 1, n);
        REQUIRE(g.terms.size() == 1);
        const int d = a + b >= n ? 1 : 0;
        CHECK(g.coeff(ones(a + b - d * n), d) == 1);
      }
}

TEST_CASE("quantum products are commutative and agree with the oracle") {
  for (int n = 2; n <= 5; ++n)
    for (int l = 1; l < n; ++l) {
      const auto box = enumerate_in_box(n - l, l);
      for (const auto& a : box)
        for (const auto& b : box) {
          const GWExpansion g = gw_invariants(a, b, l, n);
          CHECK(g == quantum_product_oracle(a, b, l, n));
          const GWExpansion h = gw_invariants(b, a, l, n);
          CHECK(g.terms == h.terms);
          for (const auto& [key, c] : g.terms) {
            CHECK(c > 0);
            CHECK(key.second.degree() + n * key.first == a.degree() + b.degree());
          }
        }
    }
}

TEST_CASE("su(2) fusion") {
  SUBCASE("example") {
    const FusionTerms f = fusion({1}, {1}, 2, 4);
    CHECK(f.size() == 2);
    CHECK(f.at({2}) == 1);
    CHECK(f.at({}) == 1);
  }
  for (int n = 3; n <= 8; ++n) {
    const int level = n - 2;
    for (int a = 0; a <= level; ++a)
      for (int b = 0; b <= level; ++b) {
        const FusionTerms f = fusion(Partition{a}, Partition{b}, 2, n);
        std::map<int, int> got;
        for (const auto& [nu, c] : f) {
          REQUIRE(nu.length() <= 1);
          got[nu.largest()] = static_cast<int>(c);
        }
        CHECK(got == oracle::su2_fusion(a, b, level));
      }
  }
  CHECK_THROWS_AS(fusion({1, 1}, {1}, 2, 4), PreconditionError);
}

TEST_CASE("fusion is commutative with nonnegative coefficients") {
  for (int n = 3; n <= 6; ++n)
    for (int l = 2; l < n; ++l) {
      std::vector<Partition> box;
      for (const auto& p : enumerate_in_box(l - 1, n - l))
        if (in_fusion_box(p, l, n)) box.push_back(p);
      for (const auto& a : box)
        for (const auto& b : box) {
          const FusionTerms f = fusion(a, b, l, n);
          CHECK(f == fusion(b, a, l, n));
          for (const auto& [nu, c] : f) {
            CHECK(c > 0);
            CHECK(in_fusion_box(nu, l, n));
          }
        }
    }
  // the empty weight is the unit
  CHECK(fusion({2, 1}, {}, 3, 6) == FusionTerms{{Partition{2, 1}, 1}});
}

TEST_CASE("image in the quotient ring") {
  CHECK(modth_image({2, 1}, 2, 4) == SymPoly::single(Basis::s, {2, 1}));
  CHECK(modth_image({2, 2, 1}, 2, 4) == SymPoly::single(Basis::s, {2, 2, 1}));
  CHECK(modth_image({2, 1, 1, 1}, 2, 4).is_zero());
  for (int n = 2; n <= 5; ++n)
    for (int l = 1; l < n; ++l)
      for (int deg = 0; deg <= 6; ++deg)
        for (const auto& p : enumerate_bounded(deg, n - 1))
          CHECK(modth_image(p, l, n).is_zero() != in_Pi(p, l, n));
}

TEST_CASE("Hecke algebra module dimensions") {
  for (int n = 2; n <= 5; ++n)
    for (int l = 1; l < n; ++l)
      for (int deg = 0; deg <= 6; ++deg)
        for (const auto& p : enumerate_partitions(deg)) {
          const Partition pc = conjugate(p);
          if (!in_Pi(pc, l, n) || pc.largest() > n - 1) continue;
          const Partition core = to_core(pc, n - 1).shape();
          const std::vector<int> w(static_cast<std::size_t>(deg), 1);
          CHECK(hecke_dimension(p, l, n) ==
                Integer(oracle::k_tableaux(n - 1, core.parts(), {}, w).size()));
        }
  // in the classical range the count is the number of standard tableaux
  CHECK(hecke_dimension({2, 1}, 2, 5) == 2);
  CHECK(hecke_dimension({2, 1}, 2, 4) == 2);
  CHECK(hecke_dimension({1}, 2, 4) == 1);
}
