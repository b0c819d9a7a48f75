// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// blocking criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qtsg/counting.hpp"
#include "qtsg/enumeration.hpp"
#include "qtsg/oracle.hpp"
#include "qtsg/sequences.hpp"
#include "qtsg/structure.hpp"

using namespace qtsg;

namespace {

using Values = std::vector<long long>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no limit
  bool blocking;
  std::function<void(Outcome&)> body;
};

std::string str(const ExactInt& v) { return v.str(); }

void table_by_methods(Outcome& o, const std::string& name, const Values& want,
                      const std::vector<Method>& methods, int enumerate_max) {
  for (int n = find_sequence(name)->min_n; n < static_cast<int>(want.size()); ++n) {
    for (Method m : methods) {
      if (m == Method::enumerate && n > enumerate_max) continue;
      const ExactInt got = sequence_value(name, n, m);
      o.require(got == want[static_cast<size_t>(n)],
                name + "(" + std::to_string(n) + ") by " + std::string(to_string(m)) + " = " +
                    str(got) + ", expected " + std::to_string(want[static_cast<size_t>(n)]));
    }
  }
}

std::vector<std::pair<FiniteBinOp, KimuraDecomposition>> population(int n) {
  std::vector<std::pair<FiniteBinOp, KimuraDecomposition>> out;
  FamilyStream s(FamilySpec{Family::qt_semigroups, n, {}, std::nullopt});
  while (auto obj = s.next()) out.emplace_back(std::get<FiniteBinOp>(*obj), *s.last_decomposition());
  return out;
}

std::vector<Criterion> criteria() {
  using M = Method;
  std::vector<Criterion> c;

  c.push_back({1, "q, q_e, q_a, q_ea for n = 0..6 by every method", 5.0, true, [](Outcome& o) {
                 const std::vector<M> q_methods{M::closed, M::recurrence, M::egf, M::appendix,
                                                M::enumerate};
                 table_by_methods(o, "q", {1, 1, 4, 20, 138, 1182, 12166}, q_methods, 6);
                 const std::vector<M> shift{M::closed, M::enumerate};
                 table_by_methods(o, "q_e", {0, 1, 2, 12, 80, 690, 7092}, shift, 6);
                 table_by_methods(o, "q_a", {0, 1, 2, 12, 80, 690, 7092}, shift, 6);
                 table_by_methods(o, "q_ea", {0, 0, 2, 6, 48, 400, 4140}, shift, 6);
               }});

  c.push_back({2, "raw table search gives 20, 138, 1182 for n = 3, 4, 5", 120.0, true, [](Outcome& o) {
                 const long long want[] = {0, 0, 0, 20, 138, 1182};
                 for (int n = 3; n <= 5; ++n) {
                   const OracleCount r = brute_count_qt_associative(n);
                   o.require(r.count == want[n], "oracle q(" + std::to_string(n) + ") = " + str(r.count));
                   o.require(r.visited == (std::uint64_t{1} << (n * (n - 1))),
                             "oracle visited count at n = " + std::to_string(n));
                 }
               }});

  c.push_back({3, "u, u_e, u_a, u_ea for n = 0..6", 2.0, true, [](Outcome& o) {
                 const std::vector<M> all{M::recurrence, M::closed, M::gf, M::enumerate};
                 const std::vector<M> shift{M::closed, M::enumerate};
                 table_by_methods(o, "u", {0, 1, 3, 8, 20, 49, 119}, all, 6);
                 table_by_methods(o, "u_e", {0, 1, 2, 5, 12, 29, 70}, all, 6);
                 table_by_methods(o, "u_a", {0, 0, 2, 6, 16, 40, 98}, shift, 6);
                 table_by_methods(o, "u_ea", {0, 0, 2, 4, 10, 24, 58}, shift, 6);
               }});

  c.push_back({4, "v, v_e, v_a, v_ea for n = 0..6", 10.0, true, [](Outcome& o) {
                 const std::vector<M> all{M::recurrence, M::closed, M::gf, M::enumerate};
                 const std::vector<M> shift{M::closed, M::enumerate};
                 table_by_methods(o, "v", {0, 1, 4, 12, 34, 94, 258}, all, 6);
                 table_by_methods(o, "v_e", {0, 1, 2, 6, 16, 44, 120}, all, 6);
                 table_by_methods(o, "v_a", {0, 0, 2, 8, 24, 68, 188}, shift, 6);
                 table_by_methods(o, "v_ea", {0, 0, 2, 4, 12, 32, 88}, shift, 6);
               }});

  c.push_back({5, "build and decompose are inverse at n = 4 and 5", 0, true, [](Outcome& o) {
                 const size_t want[] = {0, 0, 0, 0, 138, 1182};
                 for (int n = 4; n <= 5; ++n) {
                   const auto pop = population(n);
                   o.require(pop.size() == want[n], "population size at n = " + std::to_string(n));
                   for (const auto& [f, d] : pop) {
                     o.require(build(decompose(f)) == f, "build(decompose(f)) != f");
                     o.require(decompose(build(d)) == d, "decompose(build(d)) != d");
                   }
                 }
               }});

  c.push_back({6, "order-preserving iff weakly single-peaked over all 1182 at n = 5", 0, true,
               [](Outcome& o) {
                 const TotalOrder t = TotalOrder::natural(5);
                 size_t seen = 0;
                 for (const auto& [f, d] : population(5)) {
                   ++seen;
                   o.require(is_order_preserving(f, t) == is_weakly_single_peaked(t, induced_weak_order(f)),
                             "exception: " + std::to_string(seen));
                 }
                 o.require(seen == 1182, "population size " + std::to_string(seen));
               }});

  c.push_back({7, "weakly single-peaked iff V-, L-, reversed-L-free over all 4683 weak orders", 1.0,
               true, [](Outcome& o) {
                 const TotalOrder t = TotalOrder::natural(6);
                 FamilyStream s = ordered_set_partitions(6);
                 size_t seen = 0;
                 while (auto obj = s.next()) {
                   const WeakOrder& w = std::get<WeakOrder>(*obj);
                   const PatternReport r = pattern_report(t, w);
                   o.require(is_weakly_single_peaked(t, w) ==
                                 (r.v_free && r.l_free && r.reversed_l_free),
                             "exception at weak order #" + std::to_string(seen));
                   ++seen;
                 }
                 o.require(seen == 4683, "weak order count " + std::to_string(seen));
               }});

  c.push_back({8, "commutative ones number n! (n <= 6), monotone ones 2^(n-1) (n <= 8)", 0, true,
               [](Outcome& o) {
                 for (int n = 1; n <= 8; ++n) {
                   if (n <= 6) {
                     const ExactInt comm =
                         count(FamilySpec{Family::qt_semigroups, n, {Filter::commutative}, std::nullopt});
                     o.require(comm == factorial(n), "comm(" + std::to_string(n) + ") = " + str(comm));
                   }
                   const ExactInt sp = count(FamilySpec{
                       Family::qt_semigroups, n, {Filter::commutative, Filter::monotone_for_reference},
                       std::nullopt});
                   o.require(sp == ExactInt(1) << (n - 1), "sp(" + std::to_string(n) + ") = " + str(sp));
                 }
               }});

  c.push_back({9, "monotonizable counts 1, 4, 20, 130", 60.0, true, [](Outcome& o) {
                 const long long want[] = {0, 1, 4, 20, 130};
                 for (int n = 1; n <= 4; ++n) {
                   const ExactInt got = brute_count_monotonizable(n);
                   o.require(got == want[n], "monotonizable(" + std::to_string(n) + ") = " + str(got));
                 }
               }});

  c.push_back({10, "lemma searches at n = 3 and n = 5", 30.0, true, [](Outcome& o) {
                 o.require(brute_verify_lemma_cd(3).holds, "lemma-cd counterexample");
                 o.require(brute_verify_lemma_qia(5).holds, "lemma-qia counterexample");
               }});

  c.push_back({11, "degree formula and order recovery; degree sums", 0, true, [](Outcome& o) {
                 for (int n = 1; n <= 4; ++n) {
                   for (const auto& [f, d] : population(n)) {
                     const WeakOrder& w = d.order();
                     for (int x = 1; x <= n; ++x) {
                       int below = 0, peers = 0;
                       for (int z = 1; z <= n; ++z) {
                         below += w.less(z, x);
                         peers += w.equivalent(z, x) && z != x;
                       }
                       o.require(f_degree(f, x) == 2 * below + peers, "degree formula");
                       for (int y = 1; y <= n; ++y)
                         o.require(w.less_equal(x, y) == (f_degree(f, x) <= f_degree(f, y)),
                                   "order recovery from degrees");
                     }
                     o.require(weak_order_from_degrees(f) == w, "weak_order_from_degrees");
                   }
                 }
                 std::mt19937 rng(2718);
                 for (int trial = 0; trial < 10000; ++trial) {
                   const int n = 1 + static_cast<int>(rng() % 8);
                   std::uniform_int_distribution<int> d(1, n);
                   std::vector<Element> e(static_cast<size_t>(n * n));
                   for (int x = 1; x <= n; ++x)
                     for (int y = 1; y <= n; ++y)
                       e[static_cast<size_t>((x - 1) * n + y - 1)] = x == y ? x : d(rng);
                   const FiniteBinOp f(n, std::move(e));
                   o.require(degree_sequence(f).sum() == static_cast<long long>(n) * (n - 1),
                             "degree sum on random idempotent table");
                 }
               }});

  c.push_back({12, "singularity probe (diagnostic)", 0, false, [](Outcome& o) {
                 const SingularityProbe p = singularity_probe(30);
                 std::printf("    r = %.6f, 1/r = %.6f, residual = %.2e\n", p.r, p.inverse_r, p.residual);
                 std::printf("    n   q(n+1)/((n+1)q(n))\n");
                 for (size_t i = 0; i < p.ratios.size(); ++i)
                   std::printf("    %2zu  %.6f\n", i + 1, p.ratios[i]);
                 o.require(std::fabs(p.r - 0.583) <= 1e-3, "r out of tolerance");
                 o.require(std::fabs(p.inverse_r - 1.715) <= 1e-3, "1/r out of tolerance");
               }});

  c.push_back({13, "every multi-method sequence agrees for n <= 30", 5.0, true, [](Outcome& o) {
                 for (const auto& s : sequence_registry()) {
                   std::vector<Method> formulas;
                   for (Method m : s.methods)
                     if (m != Method::enumerate && m != Method::bruteforce) formulas.push_back(m);
                   if (formulas.size() < 2) continue;
                   for (int n = s.min_n; n <= 30; ++n) {
                     o.require(evaluate(s.name, n, formulas).consistent(),
                               std::string(s.name) + "(" + std::to_string(n) + ") disagreement");
                   }
                 }
               }});
  return c;
}

}  // namespace

int main() {
  int blocking_failures = 0;
  for (const Criterion& c : criteria()) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      std::ostringstream os;
      os << "took " << secs << " s, limit " << c.limit_seconds << " s";
      o.require(false, os.str());
    }
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.ok ? "" : " -- ", o.detail.c_str());
    if (!o.ok && c.blocking) ++blocking_failures;
  }
  return blocking_failures == 0 ? 0 : 1;
}
