#pragma once

// Exact counting of quasitrivial semigroups and the related order families.
// Every sequence is available through several independent methods (closed
// form, recurrence, generating-function extraction) so they can be checked
// against each other and against enumeration.
//
// Conventions at n = 0: q(0) = p(0) = 1; every other sequence is 0.

#include <vector>

#include "qtsg/exact.hpp"
#include "qtsg/power_series.hpp"

namespace qtsg {

ExactInt factorial(int n);
// C(n, k). Throws InvalidArgument unless 0 <= k <= n.
ExactInt binomial(int n, int k);

// Stirling numbers of the second kind by the alternating sum
// (1/k!) sum_i (-1)^(k-i) C(k,i) i^n. Throws InvalidArgument unless
// 0 <= k <= n.
ExactInt stirling2(int n, int k);
// Same numbers from S(n,k) = k S(n-1,k) + S(n-1,k-1).
ExactInt stirling2_recurrence(int n, int k);

// Ordered Bell numbers p(n): number of weak orders on an n-set.
ExactInt ordered_bell(int n);             // sum_k S(n,k) k!
ExactInt ordered_bell_recurrence(int n);  // p(n+1) = sum_{k<=n} C(n+1,k) p(k)
ExactInt ordered_bell_egf(int n);         // n! [z^n] 1/(2 - e^z)

// q(n): associative quasitrivial operations on an n-set.
ExactInt q_closed(int n);
ExactInt q_recurrence(int n);
ExactInt q_egf(int n);       // n! [z^n] 1/(z + 3 - 2e^z)
ExactInt q_appendix(int n);  // the permuted double sum

ExactInt q_neutral(int n);      // n q(n-1)
ExactInt q_annihilator(int n);  // n q(n-1)
ExactInt q_both(int n);         // n (n-1) q(n-2)

// Terms 0..count-1 of num(z)/den(z) via the linear recurrence induced by the
// denominator. Coefficients are listed constant term first; den[0] != 0.
std::vector<ExactInt> rational_gf_terms(const std::vector<long long>& num,
                                        const std::vector<long long>& den,
                                        size_t count);

// u: weak orders that are weakly single-peaked for the natural order.
ExactInt u_recurrence(int n);
ExactInt u_closed(int n);  // 2u + 1 = sum_k C(n+1,2k) 2^k
ExactInt u_gf(int n);      // z / (z^3 + z^2 - 3z + 1)
ExactInt u_e_recurrence(int n);
ExactInt u_e_closed(int n);  // sum_k C(n,2k+1) 2^k
ExactInt u_e_gf(int n);      // -z / (z^2 + 2z - 1)
ExactInt u_a(int n);         // 2 u(n-1)
ExactInt u_ea(int n);        // 2 u_e(n-1)

// v: associative quasitrivial operations preserving the natural order.
ExactInt v_recurrence(int n);
ExactInt v_closed(int n);  // 3v + 2 = sum_k 3^k (2C(n,2k) + 3C(n,2k+1))
ExactInt v_gf(int n);      // z(z+1) / (2z^3 - 3z + 1)
ExactInt v_e_recurrence(int n);
ExactInt v_e_closed(int n);  // sum_k C(n,2k+1) 3^k
ExactInt v_e_gf(int n);      // -z / (2z^2 + 2z - 1)
ExactInt v_a(int n);         // 2 v(n-1)
ExactInt v_ea(int n);        // 2 v_e(n-1)

// Floating evaluations of the radical closed forms; diagnostics only.
double u_radical(int n);
double u_e_radical(int n);
double v_radical(int n);
double v_e_radical(int n);

struct FamilyCounts {
  ExactInt plain;
  ExactInt with_neutral;
  ExactInt with_annihilator;
  ExactInt with_both;
};

// Computes u and u_e by recurrence, closed form and GF extraction and throws
// InternalConsistencyError if any two disagree.
FamilyCounts u_family(int n);
FamilyCounts v_family(int n);

ExactInt single_peaked_count(int n);  // 2^(n-1), n >= 1
ExactInt commutative_count(int n);    // n!, n >= 1

struct SingularityProbe {
  double r = 0;          // positive root of x + 3 - 2e^x
  double inverse_r = 0;  // 1 / r
  double residual = 0;   // |r + 3 - 2e^r|
  // ratios[i] = q(n+1) / ((n+1) q(n)) for n = i + 1.
  std::vector<double> ratios;
};

// Bisection on [0, 1] to a residual below 1e-12. The ratios are reported for
// inspection only.
SingularityProbe singularity_probe(int max_n);

}  // namespace qtsg
