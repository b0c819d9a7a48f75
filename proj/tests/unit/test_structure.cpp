#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qtsg/error.hpp"
#include "qtsg/structure.hpp"

using namespace qtsg;

namespace {

// Every decomposition on X_n: all weak orders times all side choices.
std::vector<KimuraDecomposition> all_decompositions(int n) {
  std::vector<KimuraDecomposition> out;
  for (const auto& ranks : oracle::all_rank_vectors(n)) {
    const WeakOrder w = WeakOrder::from_ranks(ranks);
    std::vector<int> big;
    for (const auto& cls : equivalence_classes(w))
      if (cls.size() >= 2) big.push_back(w.rank(cls.front()));
    for (unsigned mask = 0; mask < (1U << big.size()); ++mask) {
      std::map<int, Side> choices;
      for (size_t i = 0; i < big.size(); ++i)
        choices[big[i]] = ((mask >> i) & 1U) ? Side::right : Side::left;
      out.emplace_back(w, choices);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("decomposition of the figures") {
  const KimuraDecomposition d5 = decompose(fixtures::fig5());
  CHECK(d5.order() == WeakOrder::from_ranks({2, 1, 2, 2}));
  CHECK(d5.choices() == std::map<int, Side>{{2, Side::right}});
  CHECK(d5.side_of(3) == Side::right);

  const KimuraDecomposition d8 = decompose(fixtures::fig8());
  CHECK(d8.order() == fixtures::fig8_order());
  CHECK(d8.choices() == std::map<int, Side>{{2, Side::left}});

  const KimuraDecomposition d9 = decompose(fixtures::fig9());
  CHECK(d9.order() == fixtures::fig9_order());
  CHECK(d9.choices() == std::map<int, Side>{{3, Side::left}});

  const KimuraDecomposition d4 = decompose(fixtures::fig4());
  CHECK(d4.order() == fixtures::fig4_order().as_weak());
  CHECK(d4.choices().empty());
}

TEST_CASE("decompose rejects non-semigroups") {
  CHECK_THROWS_AS(decompose(fixtures::fig3()), PreconditionViolation);
  CHECK_THROWS_AS(induced_weak_order(FiniteBinOp(3, {1, 2, 1, 1, 2, 3, 3, 2, 3})),
                  PreconditionViolation);
}

TEST_CASE("decomposition constructor validates choices") {
  const WeakOrder w = fixtures::fig8_order();
  CHECK_THROWS_AS(KimuraDecomposition(w, {}), InvalidArgument);
  CHECK_THROWS_AS(KimuraDecomposition(w, {{1, Side::left}}), InvalidArgument);
  CHECK_NOTHROW(KimuraDecomposition(w, {{2, Side::right}}));
  CHECK(KimuraDecomposition::uniform(w, Side::left) == KimuraDecomposition(w, {{2, Side::left}}));
}

TEST_CASE("build follows the description") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : all_decompositions(n)) {
      const FiniteBinOp f = build(d);
      const WeakOrder& w = d.order();
      for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
          int expected;
          if (w.less(x, y)) expected = y;
          else if (w.less(y, x)) expected = x;
          else if (x == y) expected = x;
          else expected = d.side_of(x) == Side::left ? x : y;
          REQUIRE(f(x, y) == expected);
        }
    }
  }
}

TEST_CASE("build and decompose are mutually inverse, n <= 5") {
  const long long expected[] = {0, 1, 4, 20, 138, 1182};
  for (int n = 1; n <= 5; ++n) {
    const auto all = all_decompositions(n);
    CHECK(static_cast<long long>(all.size()) == expected[n]);
    std::set<std::vector<int>> tables;
    for (const auto& d : all) {
      const FiniteBinOp f = build(d);
      REQUIRE(oracle::associative(oracle::table_of(f), n));
      REQUIRE(oracle::quasitrivial(oracle::table_of(f), n));
      REQUIRE(decompose(f) == d);
      REQUIRE(build(decompose(f)) == f);
      tables.insert(oracle::table_of(f));
    }
    CHECK(tables.size() == all.size());
  }
}

TEST_CASE("degree formula and order recovery, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : all_decompositions(n)) {
      const FiniteBinOp f = build(d);
      const WeakOrder& w = d.order();
      for (int x = 1; x <= n; ++x) {
        int below = 0, peers = 0, at_most = 0;
        for (int z = 1; z <= n; ++z) {
          below += w.less(z, x);
          peers += w.equivalent(z, x) && z != x;
          at_most += w.less_equal(z, x);
        }
        REQUIRE(f_degree(f, x) == 2 * below + peers);
        REQUIRE(f_degree(f, x) == below + at_most - 1);
      }
      for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
          REQUIRE(w.less_equal(x, y) == (f_degree(f, x) <= f_degree(f, y)));
      REQUIRE(weak_order_from_degrees(f) == w);
      REQUIRE(induced_weak_order(f) == w);
    }
  }
}

TEST_CASE("neutral and annihilator match unique extremes") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& d : all_decompositions(n)) {
      const FiniteBinOp f = build(d);
      const ElementSet lo = minimal_elements(d.order());
      const ElementSet hi = maximal_elements(d.order());
      REQUIRE(neutral_elements(f) == (lo.size() == 1 ? lo : ElementSet{}));
      REQUIRE(annihilator_elements(f) == (hi.size() == 1 ? hi : ElementSet{}));
    }
  }
}

TEST_CASE("commutative characterizations") {
  const auto t = commutative_characterization(fixtures::fig4());
  REQUIRE(t);
  CHECK(*t == fixtures::fig4_order());
  CHECK(commutative_characterization_by_degrees(fixtures::fig4()) == t);
  CHECK_FALSE(commutative_characterization(fixtures::fig5()));
  CHECK_FALSE(commutative_characterization(fixtures::fig3()));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& tab : oracle::all_quasitrivial(n)) {
      const FiniteBinOp f(n, tab);
      const bool sym = is_commutative(f);
      const bool is_max = sym && oracle::associative(tab, n);
      REQUIRE(commutative_characterization(f).has_value() == is_max);
      // degree route: quasitrivial with sequence (0, 2, ..., 2n-2)
      std::vector<int> staircase;
      for (int i = 0; i < n; ++i) staircase.push_back(2 * i);
      const bool stair = degree_sequence(f).values == staircase;
      REQUIRE(commutative_characterization_by_degrees(f).has_value() == stair);
      REQUIRE(stair == is_max);
      if (is_max) REQUIRE(maximum(*commutative_characterization(f)) == f);
    }
  }
}

TEST_CASE("monotonizing search") {
  const MonotonizingSearch s5 = search_monotonizing_order(fixtures::fig5());
  CHECK_FALSE(s5.order);
  CHECK(s5.examined == 24);
  CHECK(s5.total == 24);
  const auto t4 = exists_monotonizing_order(fixtures::fig4());
  REQUIRE(t4);
  CHECK(is_order_preserving(fixtures::fig4(), *t4));
  const MonotoneOrders m = monotone_orders(fixtures::fig8(), 100);
  CHECK_FALSE(m.truncated);
  CHECK(m.count >= 1);
  CHECK(std::find(m.orders.begin(), m.orders.end(), TotalOrder::natural(4)) != m.orders.end());
  const MonotoneOrders few = monotone_orders(projection(4, Side::left), 3);
  CHECK(few.truncated);
  CHECK(few.orders.size() == 3);
  CHECK_THROWS_AS(search_monotonizing_order(projection(9, Side::left)), CapacityError);
}

TEST_CASE("classification report") {
  const ClassificationReport r = classify(fixtures::fig8(), TotalOrder::natural(4));
  CHECK(r.associative);
  CHECK(r.quasitrivial);
  CHECK_FALSE(r.commutative);
  CHECK(r.monotone_for_reference);
  CHECK(r.weakly_single_peaked_for_reference);
  CHECK(r.neutral == ElementSet{2});
  CHECK(r.annihilator == ElementSet{4});
  REQUIRE(r.decomposition);
  CHECK(r.degree_sequence.values == std::vector<int>{0, 3, 3, 6});
  const std::string text = to_text(r);
  CHECK(text.find("associative: true") != std::string::npos);
  CHECK(to_text(r) == text);

  const ClassificationReport r3 = classify(fixtures::fig3(), TotalOrder::natural(3));
  CHECK_FALSE(r3.quasitrivial);
  CHECK_FALSE(r3.decomposition);
}
