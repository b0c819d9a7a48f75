#include "qtsg/counting.hpp"

#include <cmath>
#include <string>

#include "qtsg/error.hpp"

namespace qtsg {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + ": n must be >= 0");
}

// C(n, k) with the usual zero outside 0 <= k <= n.
ExactInt choose(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ExactInt power(long long base, int e) {
  ExactInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

ExactInt alternating_stirling(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  ExactInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    ExactInt term = choose(k, i) * power(i, n);
    if ((k - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const ExactInt kf = factorial(k);
  if (sum % kf != 0) {
    throw InternalConsistencyError("alternating Stirling sum not divisible by k!");
  }
  return sum / kf;
}

ExactInt exact_div(const ExactInt& a, long long d, const char* what) {
  if (a % d != 0) {
    throw InternalConsistencyError(std::string(what) + " is not divisible by " +
                                   std::to_string(d));
  }
  return a / d;
}

// Terms a(0..n) of a(k+2) = c1 a(k+1) + c0 a(k) + inhom.
ExactInt second_order(int n, long long a0, long long a1, long long c1,
                      long long c0, long long inhom) {
  ExactInt prev = a0;
  ExactInt cur = a1;
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    ExactInt next = c1 * cur + c0 * prev + inhom;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ExactInt gf_term(const std::vector<long long>& num,
                 const std::vector<long long>& den, int n) {
  return rational_gf_terms(num, den, static_cast<size_t>(n) + 1).back();
}

void agree(const ExactInt& a, const ExactInt& b, const char* name, int n,
           const char* how) {
  if (a != b) {
    throw InternalConsistencyError(std::string(name) + "(" + std::to_string(n) +
                                   "): " + how + " disagree (" + a.str() +
                                   " vs " + b.str() + ")");
  }
}

}  // namespace

ExactInt factorial(int n) {
  require_nonnegative(n, "factorial");
  ExactInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

ExactInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw InvalidArgument("binomial(" + std::to_string(n) + ", " +
                          std::to_string(k) + "): need 0 <= k <= n");
  }
  return choose(n, k);
}

ExactInt stirling2(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw InvalidArgument("stirling2(" + std::to_string(n) + ", " +
                          std::to_string(k) + "): need 0 <= k <= n");
  }
  return alternating_stirling(n, k);
}

ExactInt stirling2_recurrence(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw InvalidArgument("stirling2(" + std::to_string(n) + ", " +
                          std::to_string(k) + "): need 0 <= k <= n");
  }
  // row[j] = S(m, j)
  std::vector<ExactInt> row(static_cast<size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      row[static_cast<size_t>(j)] =
          j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<size_t>(k)];
}

ExactInt ordered_bell(int n) {
  require_nonnegative(n, "ordered_bell");
  ExactInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += alternating_stirling(n, k) * factorial(k);
  return sum;
}

ExactInt ordered_bell_recurrence(int n) {
  require_nonnegative(n, "ordered_bell");
  std::vector<ExactInt> p{1};
  for (int m = 0; m < n; ++m) {
    ExactInt next = 0;
    for (int k = 0; k <= m; ++k) next += choose(m + 1, k) * p[static_cast<size_t>(k)];
    p.push_back(std::move(next));
  }
  return p[static_cast<size_t>(n)];
}

ExactInt ordered_bell_egf(int n) {
  require_nonnegative(n, "ordered_bell");
  const size_t order = static_cast<size_t>(n) + 1;
  PowerSeries denom = PowerSeries::polynomial({2}, order) - PowerSeries::exp(order);
  return egf_coefficient(denom.reciprocal(), static_cast<size_t>(n));
}

ExactInt q_closed(int n) {
  require_nonnegative(n, "q");
  ExactInt sum = 0;
  for (int i = 0; i <= n; ++i) {
    ExactInt inner = 0;
    for (int k = 0; k <= n - i; ++k) {
      ExactInt term = choose(n, k) * alternating_stirling(n - k, i) * factorial(i + k);
      if (k % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    sum += power(2, i) * inner;
  }
  return sum;
}

ExactInt q_recurrence(int n) {
  require_nonnegative(n, "q");
  std::vector<ExactInt> q{1};
  for (int m = 0; m < n; ++m) {
    ExactInt next = (m + 1) * q[static_cast<size_t>(m)];
    ExactInt tail = 0;
    for (int k = 0; k < m; ++k) tail += choose(m + 1, k) * q[static_cast<size_t>(k)];
    next += 2 * tail;
    q.push_back(std::move(next));
  }
  return q[static_cast<size_t>(n)];
}

ExactInt q_egf(int n) {
  require_nonnegative(n, "q");
  const size_t order = static_cast<size_t>(n) + 1;
  PowerSeries denom = PowerSeries::polynomial({3, 1}, order) -
                      PowerSeries::exp(order) * Rational(2);
  return egf_coefficient(denom.reciprocal(), static_cast<size_t>(n));
}

ExactInt q_appendix(int n) {
  require_nonnegative(n, "q");
  if (n == 0) return 1;
  ExactInt sum = 0;
  for (int i = 0; i <= n; ++i) {
    ExactInt inner = 0;
    for (int k = i; k <= n; ++k) {
      ExactInt term = choose(n, k - i) * alternating_stirling(n - k + i, i) * factorial(k);
      if (k % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    if (i % 2 == 0) {
      sum += power(2, i) * inner;
    } else {
      sum -= power(2, i) * inner;
    }
  }
  return sum;
}

ExactInt q_neutral(int n) {
  require_nonnegative(n, "q_e");
  if (n == 0) return 0;
  return n * q_recurrence(n - 1);
}

ExactInt q_annihilator(int n) {
  require_nonnegative(n, "q_a");
  if (n == 0) return 0;
  return n * q_recurrence(n - 1);
}

ExactInt q_both(int n) {
  require_nonnegative(n, "q_ea");
  if (n < 2) return 0;
  return ExactInt(n) * (n - 1) * q_recurrence(n - 2);
}

std::vector<ExactInt> rational_gf_terms(const std::vector<long long>& num,
                                        const std::vector<long long>& den,
                                        size_t count) {
  if (den.empty() || den[0] == 0) {
    throw InvalidArgument("denominator needs a nonzero constant term");
  }
  std::vector<ExactInt> a;
  a.reserve(count);
  for (size_t m = 0; m < count; ++m) {
    ExactInt acc = m < num.size() ? ExactInt(num[m]) : ExactInt(0);
    for (size_t k = 1; k < den.size() && k <= m; ++k) acc -= den[k] * a[m - k];
    if (acc % den[0] != 0) {
      throw InternalConsistencyError("GF coefficient is not an integer");
    }
    a.push_back(acc / den[0]);
  }
  return a;
}

ExactInt u_recurrence(int n) {
  require_nonnegative(n, "u");
  return second_order(n, 0, 1, 2, 1, 1);
}

ExactInt u_closed(int n) {
  require_nonnegative(n, "u");
  ExactInt s = 0;
  for (int k = 0; 2 * k <= n + 1; ++k) s += choose(n + 1, 2 * k) * power(2, k);
  return exact_div(s - 1, 2, "2u+1 closed form minus one");
}

ExactInt u_gf(int n) {
  require_nonnegative(n, "u");
  return gf_term({0, 1}, {1, -3, 1, 1}, n);
}

ExactInt u_e_recurrence(int n) {
  require_nonnegative(n, "u_e");
  return second_order(n, 0, 1, 2, 1, 0);
}

ExactInt u_e_closed(int n) {
  require_nonnegative(n, "u_e");
  ExactInt s = 0;
  for (int k = 0; 2 * k + 1 <= n; ++k) s += choose(n, 2 * k + 1) * power(2, k);
  return s;
}

ExactInt u_e_gf(int n) {
  require_nonnegative(n, "u_e");
  return gf_term({0, -1}, {-1, 2, 1}, n);
}

ExactInt u_a(int n) {
  require_nonnegative(n, "u_a");
  return n == 0 ? ExactInt(0) : 2 * u_recurrence(n - 1);
}

ExactInt u_ea(int n) {
  require_nonnegative(n, "u_ea");
  return n == 0 ? ExactInt(0) : 2 * u_e_recurrence(n - 1);
}

ExactInt v_recurrence(int n) {
  require_nonnegative(n, "v");
  return second_order(n, 0, 1, 2, 2, 2);
}

ExactInt v_closed(int n) {
  require_nonnegative(n, "v");
  ExactInt s = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    s += power(3, k) * (2 * choose(n, 2 * k) + 3 * choose(n, 2 * k + 1));
  }
  return exact_div(s - 2, 3, "3v+2 closed form minus two");
}

ExactInt v_gf(int n) {
  require_nonnegative(n, "v");
  return gf_term({0, 1, 1}, {1, -3, 0, 2}, n);
}

ExactInt v_e_recurrence(int n) {
  require_nonnegative(n, "v_e");
  return second_order(n, 0, 1, 2, 2, 0);
}

ExactInt v_e_closed(int n) {
  require_nonnegative(n, "v_e");
  ExactInt s = 0;
  for (int k = 0; 2 * k + 1 <= n; ++k) s += choose(n, 2 * k + 1) * power(3, k);
  return s;
}

ExactInt v_e_gf(int n) {
  require_nonnegative(n, "v_e");
  return gf_term({0, -1}, {-1, 2, 2}, n);
}

ExactInt v_a(int n) {
  require_nonnegative(n, "v_a");
  return n == 0 ? ExactInt(0) : 2 * v_recurrence(n - 1);
}

ExactInt v_ea(int n) {
  require_nonnegative(n, "v_ea");
  return n == 0 ? ExactInt(0) : 2 * v_e_recurrence(n - 1);
}

// Radical forms, obtained by solving the recurrences over the reals.
double u_radical(int n) {
  const double s = std::sqrt(2.0);
  return (std::pow(1 + s, n + 1) + std::pow(1 - s, n + 1)) / 4.0 - 0.5;
}

double u_e_radical(int n) {
  const double s = std::sqrt(2.0);
  return (std::pow(1 + s, n) - std::pow(1 - s, n)) / (2 * s);
}

double v_radical(int n) {
  const double s = std::sqrt(3.0);
  const double a = 1 + s;
  const double b = 1 - s;
  return ((2 + s) * std::pow(a, n) + (2 - s) * std::pow(b, n)) / 6.0 - 2.0 / 3.0;
}

double v_e_radical(int n) {
  const double s = std::sqrt(3.0);
  return (std::pow(1 + s, n) - std::pow(1 - s, n)) / (2 * s);
}

FamilyCounts u_family(int n) {
  require_nonnegative(n, "u");
  const ExactInt u = u_recurrence(n);
  agree(u, u_closed(n), "u", n, "recurrence and closed form");
  agree(u, u_gf(n), "u", n, "recurrence and GF");
  const ExactInt ue = u_e_recurrence(n);
  agree(ue, u_e_closed(n), "u_e", n, "recurrence and closed form");
  agree(ue, u_e_gf(n), "u_e", n, "recurrence and GF");
  return {u, ue, u_a(n), u_ea(n)};
}

FamilyCounts v_family(int n) {
  require_nonnegative(n, "v");
  const ExactInt v = v_recurrence(n);
  agree(v, v_closed(n), "v", n, "recurrence and closed form");
  agree(v, v_gf(n), "v", n, "recurrence and GF");
  const ExactInt ve = v_e_recurrence(n);
  agree(ve, v_e_closed(n), "v_e", n, "recurrence and closed form");
  agree(ve, v_e_gf(n), "v_e", n, "recurrence and GF");
  return {v, ve, v_a(n), v_ea(n)};
}

ExactInt single_peaked_count(int n) {
  if (n < 1) throw InvalidArgument("single_peaked_count needs n >= 1");
  return power(2, n - 1);
}

ExactInt commutative_count(int n) {
  if (n < 1) throw InvalidArgument("commutative_count needs n >= 1");
  return factorial(n);
}

SingularityProbe singularity_probe(int max_n) {
  if (max_n < 2) throw InvalidArgument("singularity_probe needs max_n >= 2");
  auto g = [](double x) { return x + 3 - 2 * std::exp(x); };
  double lo = 0.0;  // g > 0
  double hi = 1.0;  // g < 0
  double mid = 0.5;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::fabs(gm) < 1e-12 || hi - lo < 1e-15) break;
    if (gm > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  SingularityProbe p;
  p.r = mid;
  p.inverse_r = 1.0 / mid;
  p.residual = std::fabs(g(mid));
  std::vector<ExactInt> q{1};
  for (int m = 0; m < max_n; ++m) {
    ExactInt next = (m + 1) * q[static_cast<size_t>(m)];
    ExactInt tail = 0;
    for (int k = 0; k < m; ++k) tail += choose(m + 1, k) * q[static_cast<size_t>(k)];
    next += 2 * tail;
    q.push_back(std::move(next));
  }
  for (int m = 1; m < max_n; ++m) {
    const Rational ratio(q[static_cast<size_t>(m) + 1],
                         (m + 1) * q[static_cast<size_t>(m)]);
    p.ratios.push_back(ratio.convert_to<double>());
  }
  return p;
}

}  // namespace qtsg
