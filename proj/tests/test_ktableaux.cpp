#include <set>

#include "doctest.h"
#include "kschur/cores.hpp"
#include "kschur/errors.hpp"
#include "kschur/ktableaux.hpp"
#include "kschur/symfunc.hpp"
#include "oracles.hpp"

using namespace kschur;

namespace {

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = 1; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace

TEST_CASE("the three 3-tableaux of shape (8,5,2,1)") {
  const std::vector<int> weight{1, 3, 1, 2, 1, 1};
  const auto ts = enumerate_k_tableaux(3, CoreShape({8, 5, 2, 1}, 4), weight);
  REQUIRE(ts.size() == 3);
  using Rows = std::vector<std::vector<int>>;
  const std::set<Rows> expected{
      {{1, 2, 2, 2, 3, 4, 4, 6}, {2, 3, 4, 4, 6}, {4, 6}, {5}},
      {{1, 2, 2, 2, 3, 4, 4, 5}, {2, 3, 4, 4, 5}, {4, 5}, {6}},
      {{1, 2, 2, 2, 4, 4, 5, 6}, {2, 4, 4, 5, 6}, {3, 6}, {4}},
  };
  std::set<Rows> got;
  for (const auto& t : ts) {
    got.insert(t.rows);
    CHECK(t.weight == weight);
    CHECK(prefix_shapes_are_cores(t));
  }
  CHECK(got == expected);
  CHECK(ts[0].reading_word() < ts[1].reading_word());
  CHECK(ts[1].reading_word() < ts[2].reading_word());
  CHECK(count_k_tableaux(3, from_core(Partition{8, 5, 2, 1}, 3), weight) == 3);
  const auto brute = oracle::k_tableaux(3, {8, 5, 2, 1}, {}, weight);
  CHECK(std::set<Rows>(brute.begin(), brute.end()) == expected);
}

TEST_CASE("empty tableau and precondition errors") {
  const auto ts = enumerate_k_tableaux(2, CoreShape(Partition{}, 3), std::vector<int>{});
  CHECK(ts.size() == 1);
  CHECK_THROWS_AS(enumerate_k_tableaux(3, CoreShape({8, 5, 2, 1}, 4), std::vector<int>{1, 1}),
                  PreconditionError);
  CHECK_THROWS_AS(count_skew_k_tableaux(2, {1}, {2}, std::vector<int>{}), PreconditionError);
  CHECK_THROWS_AS(count_k_tableaux(2, {3}, std::vector<int>{3}), PreconditionError);
}

TEST_CASE("k-tableaux agree with exhaustive filling") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 6; ++n)
      for (const auto& mu : enumerate_bounded(n, k)) {
        const Partition core = to_core(mu, k).shape();
        for (const auto& w : compositions(n)) {
          const auto brute = oracle::k_tableaux(k, core.parts(), {}, w);
          const auto got = enumerate_k_tableaux(k, CoreShape(core, k + 1), w);
          REQUIRE(got.size() == brute.size());
          std::set<std::vector<std::vector<int>>> a(brute.begin(), brute.end()), b;
          for (const auto& t : got) b.insert(t.rows);
          CHECK(a == b);
          CHECK(count_k_tableaux(k, mu, w) == Integer(brute.size()));
          for (std::size_t i = 1; i < got.size(); ++i)
            CHECK(got[i - 1].reading_word() < got[i].reading_word());
        }
      }
}

TEST_CASE("skew k-tableaux agree with exhaustive filling") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 6; ++n)
      for (const auto& nu : enumerate_bounded(n, k))
        for (int m = 0; m <= n; ++m)
          for (const auto& mu : enumerate_bounded(m, k)) {
            if (!contains(nu, mu)) continue;
            const Partition outer = to_core(nu, k).shape();
            const Partition inner = to_core(mu, k).shape();
            for (const auto& w : compositions(n - m)) {
              const Integer got = count_skew_k_tableaux(k, nu, mu, w);
              if (!contains(outer, inner)) {
                CHECK(got == 0);
                continue;
              }
              CHECK(got == Integer(oracle::k_tableaux(k, outer.parts(), inner.parts(), w).size()));
            }
          }
  CHECK(count_skew_k_tableaux(2, {2, 1}, {}, std::vector<int>{2, 1}) ==
        count_k_tableaux(2, {2, 1}, std::vector<int>{2, 1}));
  CHECK(count_skew_k_tableaux(2, {2, 1}, {2, 1}, std::vector<int>{}) == 1);
  CHECK(count_skew_k_tableaux(2, {2, 1}, {1}, std::vector<int>{1, 1}) ==
        Integer(oracle::k_tableaux(2, to_core({2, 1}, 2).shape().parts(), {1}, {1, 1}).size()));
}

TEST_CASE("standard k-tableaux") {
  CHECK(count_standard(3, Partition{}) == 1);
  CHECK(count_standard(3, Partition{1}) == 1);
  const Partition core = to_core({2, 1}, 2).shape();
  CHECK(count_standard(2, {2, 1}) == Integer(oracle::k_tableaux(2, core.parts(), {}, {1, 1, 1}).size()));
}

TEST_CASE("large k recovers semistandard tableaux") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : enumerate_partitions(n))
      for (const auto& w : compositions(n)) {
        const Integer ssyt = oracle::ssyt_count(mu.parts(), w);
        CHECK(count_k_tableaux(std::max(n, 1), mu, w) == ssyt);
        CHECK(classical_kostka(mu, w) == ssyt);
      }
}

TEST_CASE("k-Kostka numbers are unitriangular") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 8; ++n) {
      const auto idx = enumerate_bounded(n, k);
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) {
          const Integer c = count_k_tableaux(k, idx[i], idx[j].parts());
          if (i == j) CHECK(c == 1);
          if (!dominates(idx[i], idx[j])) CHECK(c == 0);
          if (j < i) CHECK(c == 0);
        }
    }
}

TEST_CASE("counts depend only on the sorted weight") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 6; ++n)
      for (const auto& mu : enumerate_bounded(n, k))
        for (const auto& w : compositions(n))
          CHECK(count_k_tableaux(k, mu, w) == count_k_tableaux(k, mu, sort_to_partition(w).parts()));
}

TEST_CASE("letter-prefix shapes of k-tableaux are cores") {
  // Observed, not assumed by the enumerator.
  std::size_t seen = 0;
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 7; ++n)
      for (const auto& mu : enumerate_bounded(n, k))
        for (const auto& w : enumerate_bounded(n, k))
          for (const auto& t : enumerate_k_tableaux(k, to_core(mu, k), w.parts())) {
            CHECK(prefix_shapes_are_cores(t));
            ++seen;
          }
  MESSAGE("prefix shapes checked on " << seen << " tableaux");
}

TEST_CASE("tableau text form") {
  const auto ts = enumerate_k_tableaux(2, to_core({2, 1}, 2), std::vector<int>{2, 1});
  REQUIRE(ts.size() == 1);
  CHECK(to_core({2, 1}, 2).shape() == Partition{3, 1});
  CHECK(to_string(ts[0]) == "[1,1,2]\n[2]\n");
  const auto sk = enumerate_skew_k_tableaux(2, to_core({2, 1}, 2), to_core({1}, 2),
                                            std::vector<int>{1, 1});
  REQUIRE_FALSE(sk.empty());
  for (const auto& t : sk) CHECK(to_string(t).find('.') != std::string::npos);
}
