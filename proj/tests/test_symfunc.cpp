#include "doctest.h"
#include "kschur/errors.hpp"
#include "kschur/symfunc.hpp"
#include "oracles.hpp"

using namespace kschur;

namespace {

SymPoly S(const Partition& p) { return SymPoly::single(Basis::s, p); }
SymPoly H(const Partition& p) { return SymPoly::single(Basis::h, p); }
SymPoly M(const Partition& p) { return SymPoly::single(Basis::m, p); }

// Expand an m-basis polynomial into monomials in d variables.
oracle::Poly to_poly(const SymPoly& f, int vars) {
  oracle::Poly out;
  for (const auto& [p, c] : f.terms()) {
    if (p.length() > vars) continue;
    for (const auto& [e, x] : oracle::monomial(p.parts(), vars)) out[e] += c * x;
  }
  return out;
}

}  // namespace

TEST_CASE("sympoly arithmetic") {
  SymPoly f(Basis::h, 2);
  CHECK(f.is_zero());
  f.add({2}, 3);
  f.add({1, 1}, -1);
  f.add({1, 1}, 1);
  CHECK(f.size() == 1);
  CHECK(f.coeff({2}) == 3);
  CHECK(f.coeff({1, 1}) == 0);
  CHECK((f - f).is_zero());
  CHECK((f * 2).coeff({2}) == 6);
  CHECK_THROWS_AS(f += S({2}), PreconditionError);
  CHECK_THROWS_AS(f += H({3}), PreconditionError);
  CHECK_THROWS_AS(f.add({3}, 1), PreconditionError);
  CHECK(parse_basis("dual_kschur") == Basis::dual_kschur);
  CHECK(basis_name(Basis::kschur) == "kschur");
  CHECK_THROWS_AS(parse_basis("e"), ParseError);
}

TEST_CASE("hall pairing of h and m is the identity") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& a : enumerate_partitions(n))
      for (const auto& b : enumerate_partitions(n))
        CHECK(hall_pair(H(a), M(b)) == (a == b ? 1 : 0));
  // Schur functions are orthonormal.
  for (int n = 0; n <= 5; ++n)
    for (const auto& a : enumerate_partitions(n))
      for (const auto& b : enumerate_partitions(n))
        CHECK(hall_pair(convert(S(a), Basis::h), convert(S(b), Basis::m)) == (a == b ? 1 : 0));
}

TEST_CASE("classical Kostka numbers count semistandard tableaux") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& a : enumerate_partitions(n))
      for (const auto& b : enumerate_partitions(n))
        CHECK(classical_kostka(a, b) == oracle::ssyt_count(a.parts(), b.parts()));
  CHECK(classical_kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(classical_kostka({3, 2}, {2, 2, 1}) == 2);
}

TEST_CASE("basis changes") {
  CHECK(convert(S({2}), Basis::h) == H({2}));
  // s_{11} = h_{11} - h_2.
  SymPoly e2(Basis::h, 2);
  e2.add({1, 1}, 1);
  e2.add({2}, -1);
  CHECK(convert(S({1, 1}), Basis::h) == e2);
  // h_2 = m_2 + m_{11}.
  SymPoly h2(Basis::m, 2);
  h2.add({2}, 1);
  h2.add({1, 1}, 1);
  CHECK(convert(H({2}), Basis::m) == h2);
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : enumerate_partitions(n))
      for (Basis from : {Basis::h, Basis::m, Basis::s})
        for (Basis to : {Basis::h, Basis::m, Basis::s}) {
          const SymPoly f = SymPoly::single(from, p);
          CHECK(convert(convert(f, to), from) == f);
        }
}

TEST_CASE("Pieri and Littlewood-Richardson rules") {
  SymPoly p(Basis::s, 3);
  p.add({3}, 1);
  p.add({2, 1}, 1);
  CHECK(classical_pieri(1, Partition{2}) == p);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& la : enumerate_partitions(a))
        for (const auto& mu : enumerate_partitions(b)) {
          const SymPoly lr = classical_lr(la, mu);
          CHECK(lr == classical_lr_lattice(la, mu));
          CHECK(lr == classical_lr(mu, la));
          // f^la f^mu binom(a+b, a) = sum c f^nu
          Integer lhs = oracle::syt_count(la.parts()) * oracle::syt_count(mu.parts());
          for (int i = 1; i <= b; ++i) lhs = lhs * (a + i) / i;
          Integer rhs = 0;
          for (const auto& [nu, c] : lr.terms()) rhs += c * oracle::syt_count(nu.parts());
          CHECK(lhs == rhs);
          // the product computed in monomials
          const int vars = a + b;
          CHECK(to_poly(convert(lr, Basis::m), vars) ==
                oracle::multiply(to_poly(convert(S(la), Basis::m), vars),
                                 to_poly(convert(S(mu), Basis::m), vars)));
        }
  SymPoly e(Basis::s, 4);
  e.add({3, 1}, 1);
  e.add({2, 2}, 1);
  e.add({2, 1, 1}, 1);
  CHECK(classical_lr({2, 1}, {1}) == e);
}

TEST_CASE("monomial products") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& la : enumerate_partitions(a))
        for (const auto& mu : enumerate_partitions(b)) {
          const int vars = a + b;
          const auto prod = oracle::multiply(oracle::monomial(la.parts(), vars),
                                             oracle::monomial(mu.parts(), vars));
          for (const auto& g : enumerate_partitions(a + b)) {
            std::vector<int> e(g.parts());
            e.resize(static_cast<std::size_t>(vars), 0);
            std::sort(e.begin(), e.end());
            const auto it = prod.find(e);
            const Integer want = it == prod.end() ? Integer(0) : it->second;
            CHECK(monomial_product_coefficient(M(la), M(mu), g) == want);
          }
        }
  CHECK(multiply_h(H({2}), H({2, 1})) == H({2, 2, 1}));
  CHECK(partition_union({3, 1}, {2, 1}) == Partition{3, 2, 1, 1});
}

TEST_CASE("coproducts") {
  // Delta h_2 = h_2 (x) 1 + h_1 (x) h_1 + 1 (x) h_2
  const Tensor t = coproduct_h(H({2}));
  CHECK(t.size() == 3);
  CHECK(t.at({Partition{2}, Partition{}}) == 1);
  CHECK(t.at({Partition{1}, Partition{1}}) == 1);
  CHECK(t.at({Partition{}, Partition{2}}) == 1);
  // Delta m_{21} = m_{21} (x) 1 + m_2 (x) m_1 + m_1 (x) m_2 + 1 (x) m_{21}
  const Tensor u = coproduct_m(M({2, 1}));
  CHECK(u.size() == 4);
  CHECK(u.at({Partition{2}, Partition{1}}) == 1);
  CHECK(u.at({Partition{1}, Partition{2}}) == 1);
  // Delta h_{11} has h_1 (x) h_1 with coefficient 2.
  CHECK(coproduct_h(H({1, 1})).at({Partition{1}, Partition{1}}) == 2);
}
