#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qtsg/counting.hpp"
#include "qtsg/error.hpp"

using namespace qtsg;

namespace {

std::vector<long long> column(ExactInt (*f)(int), int from, int to) {
  std::vector<long long> out;
  for (int n = from; n <= to; ++n) out.push_back(static_cast<long long>(f(n)));
  return out;
}

using V = std::vector<long long>;

}  // namespace

TEST_CASE("binomials and Stirling numbers against independent counts") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == oracle::pascal(n, k));
      CHECK(stirling2(n, k) == stirling2_recurrence(n, k));
      if (n <= 9) CHECK(stirling2(n, k) == oracle::count_set_partitions(n, k));
    }
  CHECK_THROWS_AS(binomial(3, 4), InvalidArgument);
  CHECK_THROWS_AS(stirling2(2, -1), InvalidArgument);
  CHECK(factorial(20) == ExactInt("2432902008176640000"));
  CHECK(factorial(25) == ExactInt("15511210043330985984000000"));
}

TEST_CASE("ordered Bell numbers") {
  const V p{1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
  CHECK(column(ordered_bell, 0, 8) == p);
  CHECK(column(ordered_bell_recurrence, 0, 8) == p);
  CHECK(column(ordered_bell_egf, 0, 8) == p);
  for (int n = 0; n <= 6; ++n)
    CHECK(ordered_bell(n) == ExactInt(oracle::all_rank_vectors(n).size()));
  for (int n = 0; n <= 25; ++n) {
    REQUIRE(ordered_bell(n) == ordered_bell_recurrence(n));
    REQUIRE(ordered_bell(n) == ordered_bell_egf(n));
  }
}

TEST_CASE("q by every formula") {
  const V q{1, 1, 4, 20, 138, 1182, 12166};
  CHECK(column(q_closed, 0, 6) == q);
  CHECK(column(q_recurrence, 0, 6) == q);
  CHECK(column(q_egf, 0, 6) == q);
  CHECK(column(q_appendix, 0, 6) == q);
  const V qe{0, 1, 2, 12, 80, 690, 7092};
  CHECK(column(q_neutral, 0, 6) == qe);
  CHECK(column(q_annihilator, 0, 6) == qe);
  CHECK(column(q_both, 0, 6) == V{0, 0, 2, 6, 48, 400, 4140});
  for (int n = 0; n <= 30; ++n) {
    REQUIRE(q_closed(n) == q_recurrence(n));
    REQUIRE(q_closed(n) == q_egf(n));
    REQUIRE(q_closed(n) == q_appendix(n));
  }
}

TEST_CASE("q against raw tables, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    long long c = 0;
    for (const auto& t : oracle::all_quasitrivial(n)) c += oracle::associative(t, n);
    CHECK(q_closed(n) == c);
  }
}

TEST_CASE("rational generating functions") {
  // 1/(1 - z - z^2): Fibonacci
  const auto fib = rational_gf_terms({1}, {1, -1, -1}, 10);
  CHECK(fib == std::vector<ExactInt>{1, 1, 2, 3, 5, 8, 13, 21, 34, 55});
  CHECK(rational_gf_terms({0, 1}, {1, -2}, 5) == std::vector<ExactInt>{0, 1, 2, 4, 8});
  CHECK_THROWS_AS(rational_gf_terms({1}, {0, 1}, 3), InvalidArgument);
  CHECK_THROWS_AS(rational_gf_terms({1}, {2, 1}, 3), InternalConsistencyError);
}

TEST_CASE("u family") {
  const V u{0, 1, 3, 8, 20, 49, 119};
  CHECK(column(u_recurrence, 0, 6) == u);
  CHECK(column(u_closed, 0, 6) == u);
  CHECK(column(u_gf, 0, 6) == u);
  const V ue{0, 1, 2, 5, 12, 29, 70};
  CHECK(column(u_e_recurrence, 0, 6) == ue);
  CHECK(column(u_e_closed, 0, 6) == ue);
  CHECK(column(u_e_gf, 0, 6) == ue);
  CHECK(column(u_a, 0, 6) == V{0, 0, 2, 6, 16, 40, 98});
  CHECK(column(u_ea, 0, 6) == V{0, 0, 2, 4, 10, 24, 58});
  for (int n = 0; n <= 40; ++n) {
    const FamilyCounts c = u_family(n);
    REQUIRE(c.plain == u_closed(n));
    REQUIRE(c.with_neutral == u_e_gf(n));
    REQUIRE(c.with_annihilator == u_a(n));
    REQUIRE(c.with_both == u_ea(n));
  }
  // Pell numbers
  for (int n = 2; n <= 40; ++n) REQUIRE(u_e_closed(n) == 2 * u_e_closed(n - 1) + u_e_closed(n - 2));
}

TEST_CASE("v family") {
  const V v{0, 1, 4, 12, 34, 94, 258};
  CHECK(column(v_recurrence, 0, 6) == v);
  CHECK(column(v_closed, 0, 6) == v);
  CHECK(column(v_gf, 0, 6) == v);
  const V ve{0, 1, 2, 6, 16, 44, 120};
  CHECK(column(v_e_recurrence, 0, 6) == ve);
  CHECK(column(v_e_closed, 0, 6) == ve);
  CHECK(column(v_e_gf, 0, 6) == ve);
  CHECK(column(v_a, 0, 6) == V{0, 0, 2, 8, 24, 68, 188});
  CHECK(column(v_ea, 0, 6) == V{0, 0, 2, 4, 12, 32, 88});
  for (int n = 0; n <= 40; ++n) {
    const FamilyCounts c = v_family(n);
    REQUIRE(c.plain == v_gf(n));
    REQUIRE(c.with_neutral == v_e_closed(n));
  }
}

TEST_CASE("radical forms track the exact values") {
  for (int n = 1; n <= 25; ++n) {
    CAPTURE(n);
    const auto near = [](double approx, const ExactInt& exact) {
      const double e = static_cast<double>(exact);
      return std::fabs(approx - e) <= 1e-6 * std::max(1.0, e);
    };
    CHECK(near(u_radical(n), u_closed(n)));
    CHECK(near(u_e_radical(n), u_e_closed(n)));
    CHECK(near(v_radical(n), v_closed(n)));
    CHECK(near(v_e_radical(n), v_e_closed(n)));
  }
}

TEST_CASE("closed-form family counts") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(commutative_count(n) == factorial(n));
    CHECK(single_peaked_count(n) == ExactInt(1) << (n - 1));
  }
  CHECK_THROWS_AS(commutative_count(0), InvalidArgument);
}

TEST_CASE("singularity probe") {
  const SingularityProbe p = singularity_probe(30);
  CHECK(p.r == doctest::Approx(0.583).epsilon(0.002));
  CHECK(std::fabs(p.r - 0.583) < 1e-3);
  CHECK(std::fabs(p.inverse_r - 1.715) < 1e-3);
  CHECK(p.residual < 1e-12);
  CHECK(std::fabs(p.r + 3 - 2 * std::exp(p.r)) < 1e-9);
  REQUIRE(p.ratios.size() == 29);
  CHECK(p.ratios[0] == doctest::Approx(2.0));
  CHECK(p.ratios[1] == doctest::Approx(20.0 / 12.0));
}
