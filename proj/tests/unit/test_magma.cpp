#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qtsg/error.hpp"
#include "qtsg/magma.hpp"

using namespace qtsg;

TEST_CASE("construction validates entries") {
  CHECK_THROWS_AS(FiniteBinOp(2, {1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(FiniteBinOp(2, {1, 2, 3, 1}), InvalidArgument);
  CHECK_THROWS_AS(FiniteBinOp(2, {0, 1, 1, 2}), InvalidArgument);
  const FiniteBinOp f = FiniteBinOp::from_function(3, [](int x, int y) { return x < y ? y : x; });
  CHECK(f == maximum(TotalOrder::natural(3)));
  CHECK(f(1, 3) == 3);
}

TEST_CASE("projections and maximum") {
  const FiniteBinOp l = projection(3, Side::left);
  const FiniteBinOp r = projection(3, Side::right);
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y) {
      CHECK(l(x, y) == x);
      CHECK(r(x, y) == y);
    }
  CHECK(is_associative(l));
  CHECK(is_quasitrivial(r));
  CHECK_FALSE(is_commutative(l));
  const FiniteBinOp m = fixtures::fig4();
  CHECK(m(4, 3) == 3);
  CHECK(m(1, 6) == 6);
  CHECK(m(2, 5) == 2);
}

TEST_CASE("property predicates on the figures") {
  const FiniteBinOp f3 = fixtures::fig3();
  CHECK(is_associative(f3));
  CHECK(is_idempotent(f3));
  CHECK_FALSE(is_quasitrivial(f3));
  CHECK(is_commutative(f3));
  CHECK(annihilator_elements(f3) == ElementSet{2});
  CHECK(neutral_elements(f3).empty());

  const FiniteBinOp f4 = fixtures::fig4();
  CHECK(is_associative(f4));
  CHECK(is_quasitrivial(f4));
  CHECK(is_commutative(f4));
  CHECK(neutral_elements(f4) == ElementSet{4});
  CHECK(annihilator_elements(f4) == ElementSet{6});
  CHECK(is_order_preserving(f4, fixtures::fig4_order()));
  // 4 3 5 2 1 6 is single-peaked for the natural order
  CHECK(is_order_preserving(f4, TotalOrder::natural(6)));
  const int peak_last[] = {1, 3, 2};
  CHECK_FALSE(is_order_preserving(maximum(TotalOrder::from_sequence(peak_last)),
                                  TotalOrder::natural(3)));

  const FiniteBinOp f5 = fixtures::fig5();
  CHECK(is_associative(f5));
  CHECK(is_quasitrivial(f5));
  CHECK_FALSE(is_commutative(f5));
  CHECK(neutral_elements(f5) == ElementSet{2});

  CHECK(is_order_preserving(fixtures::fig8(), TotalOrder::natural(4)));
  CHECK_FALSE(is_order_preserving(fixtures::fig9(), TotalOrder::natural(4)));
  CHECK(is_associative(fixtures::fig9()));
}

TEST_CASE("degrees of the figures") {
  CHECK(degree_sequence(fixtures::fig4()).values == std::vector<int>{0, 2, 4, 6, 8, 10});
  CHECK(degrees(fixtures::fig4())[3] == 0);
  CHECK(degree_sequence(fixtures::fig5()).values == std::vector<int>{0, 4, 4, 4});
  CHECK(degrees(fixtures::fig8()) == std::vector<int>{3, 0, 3, 6});
  CHECK(degree_sequence(fixtures::fig2()).sum() == 30);
  CHECK(f_degree(fixtures::fig3(), 2) == 6);
  CHECK(f_degree(fixtures::fig3(), 1) == 0);
}

TEST_CASE("degree sum is n(n-1) on random idempotent tables") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 7;
    const oracle::Table t = oracle::random_idempotent(rng, n);
    const FiniteBinOp f(n, t);
    const auto d = degree_sequence(f);
    REQUIRE(d.sum() == static_cast<long long>(n) * (n - 1));
    REQUIRE(std::is_sorted(d.values.begin(), d.values.end()));
  }
}

TEST_CASE("order preservation agrees with the definition") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 5;
    const oracle::Table t = oracle::random_idempotent(rng, n);
    const std::vector<int> perm = oracle::random_permutation(rng, n);
    const FiniteBinOp f(n, t);
    const TotalOrder ord = TotalOrder::from_sequence(perm);
    const std::vector<int> pos(ord.ranks().begin(), ord.ranks().end());
    const bool expected = oracle::preserves(t, n, pos);
    REQUIRE(is_order_preserving(f, ord) == expected);
    REQUIRE(is_order_preserving_by_definition(f, ord) == expected);
  }
}

TEST_CASE("graphical quasitriviality agrees with quasitriviality, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const int cells = n * n;
    long long total = 1;
    for (int i = 0; i < cells; ++i) total *= n;
    for (long long m = 0; m < total; ++m) {
      oracle::Table t(static_cast<size_t>(cells));
      long long r = m;
      for (int i = 0; i < cells; ++i) {
        t[static_cast<size_t>(i)] = static_cast<int>(r % n) + 1;
        r /= n;
      }
      const FiniteBinOp f(n, t);
      REQUIRE(graphical_quasitriviality_test(f) == oracle::quasitrivial(t, n));
      REQUIRE(is_quasitrivial(f) == oracle::quasitrivial(t, n));
      REQUIRE(is_associative(f) == oracle::associative(t, n));
    }
  }
}

TEST_CASE("rectangle test agrees with associativity on quasitrivial tables, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    long long agree = 0;
    for (const auto& t : oracle::all_quasitrivial(n)) {
      const FiniteBinOp f(n, t);
      REQUIRE(rectangle_associativity_test(f) == oracle::associative(t, n));
      ++agree;
    }
    CHECK(agree == (1LL << (n * (n - 1))));
  }
  CHECK_THROWS_AS(rectangle_associativity_test(fixtures::fig3()), PreconditionViolation);
}

TEST_CASE("neutral and annihilator from the definition") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 4;
    const auto all = oracle::all_quasitrivial(n);
    const oracle::Table& t = all[static_cast<size_t>(rng() % all.size())];
    const FiniteBinOp f(n, t);
    ElementSet e, a;
    for (int z = 1; z <= n; ++z) {
      bool ne = true, an = true;
      for (int x = 1; x <= n; ++x) {
        ne = ne && oracle::at(t, n, x, z) == x && oracle::at(t, n, z, x) == x;
        an = an && oracle::at(t, n, x, z) == z && oracle::at(t, n, z, x) == z;
      }
      if (ne) e.push_back(z);
      if (an) a.push_back(z);
    }
    REQUIRE(neutral_elements(f) == e);
    REQUIRE(annihilator_elements(f) == a);
  }
}
