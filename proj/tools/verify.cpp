#include "verify.hpp"

#include <functional>

#include "qtsg/counting.hpp"
#include "qtsg/enumeration.hpp"
#include "qtsg/oracle.hpp"
#include "qtsg/sequences.hpp"
#include "qtsg/structure.hpp"

namespace qtsg::cli {

Goldens default_goldens() {
  Goldens g;
  g.tables = {
      {"q", {1, 1, 4, 20, 138, 1182, 12166}},
      {"q_e", {0, 1, 2, 12, 80, 690, 7092}},
      {"q_a", {0, 1, 2, 12, 80, 690, 7092}},
      {"q_ea", {0, 0, 2, 6, 48, 400, 4140}},
      {"u", {0, 1, 3, 8, 20, 49, 119}},
      {"u_e", {0, 1, 2, 5, 12, 29, 70}},
      {"u_a", {0, 0, 2, 6, 16, 40, 98}},
      {"u_ea", {0, 0, 2, 4, 10, 24, 58}},
      {"v", {0, 1, 4, 12, 34, 94, 258}},
      {"v_e", {0, 1, 2, 6, 16, 44, 120}},
      {"v_a", {0, 0, 2, 8, 24, 68, 188}},
      {"v_ea", {0, 0, 2, 4, 12, 32, 88}},
      {"p", {1, 1, 3, 13, 75, 541, 4683}},
  };
  g.monotonizable = {1, 4, 20, 130};
  return g;
}

namespace {

class Suite {
 public:
  Suite(VerifyReport& report, std::ostream& log) : report_(report), log_(log) {}

  void expect(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) {
      report_.failures.push_back(what);
      log_ << "FAIL " << what << '\n';
    }
  }

  // Runs a block, turning any exception into a failure.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }

  std::ostream& log() { return log_; }

 private:
  VerifyReport& report_;
  std::ostream& log_;
};

std::string mismatch(const std::string& name, int n, std::string_view method,
                     const ExactInt& got, const ExactInt& want) {
  return name + " n=" + std::to_string(n) + " method=" + std::string(method) +
         ": got " + got.str() + ", expected " + want.str();
}

void check_tables(Suite& s, const Goldens& g, int enumerate_max) {
  for (const auto& [name, values] : g.tables) {
    const SequenceInfo* info = find_sequence(name);
    if (!info) {
      s.expect(false, "unknown sequence in reference table: " + name);
      continue;
    }
    for (int n = info->min_n; n < static_cast<int>(values.size()); ++n) {
      for (Method m : info->methods) {
        if (m == Method::bruteforce) continue;
        if (m == Method::enumerate && n > enumerate_max) continue;
        s.guarded(name + " n=" + std::to_string(n), [&] {
          const ExactInt got = sequence_value(name, n, m);
          const ExactInt want(values[static_cast<size_t>(n)]);
          s.expect(got == want, mismatch(name, n, to_string(m), got, want));
        });
      }
    }
  }
  s.log() << "tables: formulas n <= 6, enumeration n <= " << enumerate_max << '\n';
}

void check_oracle(Suite& s, const Goldens& g) {
  const auto it = g.tables.find("q");
  if (it == g.tables.end()) return;
  for (int n = 1; n <= kOracleMaxQt; ++n) {
    s.guarded("oracle q n=" + std::to_string(n), [&] {
      const OracleCount c = brute_count_qt_associative(n);
      const ExactInt want(it->second[static_cast<size_t>(n)]);
      s.expect(c.count == want, mismatch("q", n, "bruteforce", c.count, want));
      s.expect(c.visited == (std::uint64_t{1} << (n * (n - 1))),
               "oracle q n=" + std::to_string(n) + ": visited count");
      if (n == kOracleMaxQt) s.log() << "q(5) oracle = " << c.count.str() << '\n';
    });
  }
}

void check_lemmas(Suite& s, const Goldens& g) {
  s.guarded("lemma-cd", [&] {
    s.expect(brute_verify_lemma_cd(kOracleMaxLemmaCd).holds, "lemma-cd n=3");
  });
  s.guarded("lemma-qia", [&] {
    s.expect(brute_verify_lemma_qia(kOracleMaxLemmaQia).holds, "lemma-qia n=5");
  });
  for (size_t i = 0; i < g.monotonizable.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    s.guarded("monotonizable n=" + std::to_string(n), [&] {
      const ExactInt got = brute_count_monotonizable(n);
      const ExactInt want(g.monotonizable[i]);
      s.expect(got == want, mismatch("monotonizable", n, "bruteforce", got, want));
    });
  }
  s.log() << "lemmas and monotonizable counts checked\n";
}

void check_structure(Suite& s) {
  for (int n = 1; n <= 5; ++n) {
    s.guarded("bijection n=" + std::to_string(n), [&] {
      FamilyStream stream(FamilySpec{Family::qt_semigroups, n, {}, std::nullopt});
      const TotalOrder natural = TotalOrder::natural(n);
      bool bijective = true;
      bool equivalence = true;
      while (auto obj = stream.next()) {
        const auto& f = std::get<FiniteBinOp>(*obj);
        const KimuraDecomposition d = decompose(f);
        bijective = bijective && d == *stream.last_decomposition() && build(d) == f;
        equivalence = equivalence &&
                      is_order_preserving(f, natural) ==
                          is_weakly_single_peaked(natural, induced_weak_order(f));
      }
      s.expect(bijective, "build/decompose round trip n=" + std::to_string(n));
      s.expect(equivalence,
               "order-preserving iff weakly single-peaked n=" + std::to_string(n));
    });
  }
  for (int n = 0; n <= 6; ++n) {
    s.guarded("patterns n=" + std::to_string(n), [&] {
      const TotalOrder t = TotalOrder::natural(n);
      FamilyStream stream = ordered_set_partitions(n);
      bool ok = true;
      while (auto obj = stream.next()) {
        const auto& w = std::get<WeakOrder>(*obj);
        ok = ok && is_weakly_single_peaked(t, w) == pattern_report(t, w).all_free();
      }
      s.expect(ok, "weakly single-peaked iff V/L/reversed-L free n=" +
                       std::to_string(n));
    });
  }
  for (int n = 1; n <= 7; ++n) {
    s.guarded("commutative counts n=" + std::to_string(n), [&] {
      if (n <= 6) {
        const ExactInt c = count(
            FamilySpec{Family::qt_semigroups, n, {Filter::commutative}, std::nullopt});
        s.expect(c == commutative_count(n),
                 mismatch("comm", n, "enumerate", c, commutative_count(n)));
      }
      const ExactInt sp = count(FamilySpec{Family::qt_semigroups, n,
                                           {Filter::commutative,
                                            Filter::monotone_for_reference},
                                           std::nullopt});
      s.expect(sp == single_peaked_count(n),
               mismatch("sp", n, "enumerate", sp, single_peaked_count(n)));
    });
  }
  s.log() << "structural suites checked\n";
}

void check_sweep(Suite& s) {
  for (const auto& info : sequence_registry()) {
    for (int n = info.min_n; n <= 30; ++n) {
      std::vector<Method> formulas;
      for (Method m : info.methods) {
        if (m != Method::enumerate && m != Method::bruteforce) formulas.push_back(m);
      }
      if (formulas.size() < 2) continue;
      s.guarded(std::string(info.name) + " sweep", [&] {
        const SequenceTable t = evaluate(info.name, n, formulas);
        s.expect(t.consistent(), std::string(info.name) + " n=" + std::to_string(n) +
                                     ": methods disagree");
      });
    }
  }
  s.log() << "method agreement n <= 30 checked\n";
}

}  // namespace

VerifyReport run_verify(VerifyLevel level, const Goldens& goldens,
                        std::ostream& log) {
  VerifyReport report;
  Suite s(report, log);
  check_tables(s, goldens, level == VerifyLevel::full ? 6 : 5);
  if (level == VerifyLevel::full) {
    check_oracle(s, goldens);
    check_lemmas(s, goldens);
    check_structure(s);
    check_sweep(s);
  }
  return report;
}

}  // namespace qtsg::cli
