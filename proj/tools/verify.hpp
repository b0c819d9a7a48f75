#pragma once

// The self-check suite behind `qtsg verify`. Reference values are passed in
// so tests can tamper with them and watch the suite fail.

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qtsg::cli {

struct Goldens {
  // Sequence name -> values for n = 0..6.
  std::map<std::string, std::vector<long long>> tables;
  // Operations monotone for some total order, n = 1..4.
  std::vector<long long> monotonizable;
};

Goldens default_goldens();

enum class VerifyLevel { quick, full };

struct VerifyReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

// quick: every formula method against the goldens for n <= 6 and enumeration
// for n <= 5. full adds the brute-force oracle at n <= 5, the lemma searches
// and the exhaustive property suites. Progress lines go to `log`.
VerifyReport run_verify(VerifyLevel level, const Goldens& goldens,
                        std::ostream& log);

}  // namespace qtsg::cli
