#include "qtsg/order.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qtsg/error.hpp"

namespace qtsg {

namespace {

void require_same_size(int a, int b) {
  if (a != b) {
    throw InvalidArgument("orders have different cardinalities (" +
                          std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// TotalOrder

TotalOrder::TotalOrder(std::vector<int> ranks) : rank_(std::move(ranks)) {
  const int n = size();
  sequence_.assign(static_cast<size_t>(n), 0);
  for (int x = 1; x <= n; ++x) {
    sequence_[static_cast<size_t>(rank_[static_cast<size_t>(x - 1)] - 1)] = x;
  }
}

TotalOrder TotalOrder::natural(int n) {
  if (n < 0) throw InvalidArgument("cardinality must be nonnegative");
  std::vector<int> r(static_cast<size_t>(n));
  std::iota(r.begin(), r.end(), 1);
  return TotalOrder(std::move(r));
}

TotalOrder TotalOrder::from_ranks(std::vector<int> ranks) {
  const int n = static_cast<int>(ranks.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int r : ranks) {
    if (r < 1 || r > n || seen[static_cast<size_t>(r)]) {
      throw InvalidArgument("total order ranks must be a permutation of 1.." +
                            std::to_string(n));
    }
    seen[static_cast<size_t>(r)] = true;
  }
  return TotalOrder(std::move(ranks));
}

TotalOrder TotalOrder::from_sequence(std::span<const Element> low_to_high) {
  const int n = static_cast<int>(low_to_high.size());
  std::vector<int> ranks(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Element x = low_to_high[static_cast<size_t>(i)];
    if (x < 1 || x > n || ranks[static_cast<size_t>(x - 1)] != 0) {
      throw InvalidArgument("total order must list each of 1.." +
                            std::to_string(n) + " exactly once");
    }
    ranks[static_cast<size_t>(x - 1)] = i + 1;
  }
  return TotalOrder(std::move(ranks));
}

size_t TotalOrder::index(Element x) const {
  if (x < 1 || x > size()) {
    throw InvalidArgument("element " + std::to_string(x) + " outside 1.." +
                          std::to_string(size()));
  }
  return static_cast<size_t>(x - 1);
}

TotalOrder TotalOrder::inverse() const {
  std::vector<int> r(rank_);
  for (int& v : r) v = size() + 1 - v;
  return TotalOrder(std::move(r));
}

WeakOrder TotalOrder::as_weak() const { return WeakOrder::from_ranks(rank_); }

// ---------------------------------------------------------------------------
// WeakOrder

WeakOrder::WeakOrder(std::vector<int> ranks, int classes)
    : rank_(std::move(ranks)), classes_(classes) {}

WeakOrder WeakOrder::from_ranks(std::vector<int> ranks) {
  const int n = static_cast<int>(ranks.size());
  int k = 0;
  for (int r : ranks) {
    if (r < 1 || r > n) {
      throw InvalidArgument("weak order rank " + std::to_string(r) +
                            " outside 1.." + std::to_string(n));
    }
    k = std::max(k, r);
  }
  std::vector<bool> seen(static_cast<size_t>(k) + 1, false);
  for (int r : ranks) seen[static_cast<size_t>(r)] = true;
  for (int r = 1; r <= k; ++r) {
    if (!seen[static_cast<size_t>(r)]) {
      throw InvalidArgument("weak order ranks must be surjective onto 1.." +
                            std::to_string(k) + "; rank " + std::to_string(r) +
                            " is missing");
    }
  }
  return WeakOrder(std::move(ranks), k);
}

WeakOrder WeakOrder::from_classes(const std::vector<ElementSet>& classes,
                                  int n) {
  std::vector<int> ranks(static_cast<size_t>(n), 0);
  int r = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) throw InvalidArgument("empty class in ordered partition");
    ++r;
    for (Element x : cls) {
      if (x < 1 || x > n || ranks[static_cast<size_t>(x - 1)] != 0) {
        throw InvalidArgument("classes must partition 1.." + std::to_string(n));
      }
      ranks[static_cast<size_t>(x - 1)] = r;
    }
  }
  if (std::find(ranks.begin(), ranks.end(), 0) != ranks.end()) {
    throw InvalidArgument("classes must cover 1.." + std::to_string(n));
  }
  return WeakOrder(std::move(ranks), r);
}

size_t WeakOrder::index(Element x) const {
  if (x < 1 || x > size()) {
    throw InvalidArgument("element " + std::to_string(x) + " outside 1.." +
                          std::to_string(size()));
  }
  return static_cast<size_t>(x - 1);
}

std::optional<TotalOrder> WeakOrder::as_total() const {
  if (classes_ != size()) return std::nullopt;
  return TotalOrder::from_ranks(rank_);
}

WeakOrder WeakOrder::inverse() const {
  std::vector<int> r(rank_);
  for (int& v : r) v = classes_ + 1 - v;
  return WeakOrder(std::move(r), classes_);
}

// ---------------------------------------------------------------------------
// Derived views

std::vector<ElementSet> equivalence_classes(const WeakOrder& w) {
  std::vector<ElementSet> out(static_cast<size_t>(w.num_classes()));
  for (Element x = 1; x <= w.size(); ++x) {
    out[static_cast<size_t>(w.rank(x) - 1)].push_back(x);
  }
  return out;
}

ElementSet minimal_elements(const WeakOrder& w) {
  ElementSet out;
  for (Element x = 1; x <= w.size(); ++x) {
    if (w.rank(x) == 1) out.push_back(x);
  }
  return out;
}

ElementSet maximal_elements(const WeakOrder& w) {
  ElementSet out;
  for (Element x = 1; x <= w.size(); ++x) {
    if (w.rank(x) == w.num_classes()) out.push_back(x);
  }
  return out;
}

ElementSet strict_convex_hull(const TotalOrder& t, Element x, Element y) {
  if (x == y) {
    throw InvalidArgument("strict convex hull needs two distinct elements");
  }
  int lo = t.rank(x);
  int hi = t.rank(y);
  if (lo > hi) std::swap(lo, hi);
  ElementSet out;
  for (int r = lo + 1; r < hi; ++r) out.push_back(t.at_rank(r));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_convex(const TotalOrder& t, std::span<const Element> s) {
  if (s.empty()) return true;
  int lo = t.size() + 1;
  int hi = 0;
  for (Element x : s) {
    lo = std::min(lo, t.rank(x));
    hi = std::max(hi, t.rank(x));
  }
  std::vector<bool> in(static_cast<size_t>(t.size()) + 1, false);
  for (Element x : s) in[static_cast<size_t>(x)] = true;
  for (int r = lo; r <= hi; ++r) {
    if (!in[static_cast<size_t>(t.at_rank(r))]) return false;
  }
  return true;
}

bool is_weakly_single_peaked(const TotalOrder& t, const WeakOrder& w) {
  require_same_size(t.size(), w.size());
  const auto seq = t.sequence();
  const int n = t.size();
  for (int i = 0; i < n; ++i) {
    const Element a = seq[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const Element b = seq[static_cast<size_t>(j)];
      for (int k = j + 1; k < n; ++k) {
        const Element c = seq[static_cast<size_t>(k)];
        const bool ok = w.less(b, a) || w.less(b, c) ||
                        (w.equivalent(a, b) && w.equivalent(b, c));
        if (!ok) return false;
      }
    }
  }
  return true;
}

bool is_single_peaked(const TotalOrder& t, const TotalOrder& p) {
  // The a ~ b ~ c clause cannot fire on a total order.
  return is_weakly_single_peaked(t, p.as_weak());
}

bool is_dual_single_peaked(const TotalOrder& t, const TotalOrder& p) {
  require_same_size(t.size(), p.size());
  const auto seq = t.sequence();
  const int n = t.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Element a = seq[static_cast<size_t>(i)];
        const Element b = seq[static_cast<size_t>(j)];
        const Element c = seq[static_cast<size_t>(k)];
        if (!(p.less(a, b) || p.less(c, b))) return false;
      }
    }
  }
  return true;
}

bool condition_a(const TotalOrder& t, const WeakOrder& w) {
  require_same_size(t.size(), w.size());
  const auto seq = t.sequence();
  const int n = t.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Element a = seq[static_cast<size_t>(i)];
        const Element b = seq[static_cast<size_t>(j)];
        const Element c = seq[static_cast<size_t>(k)];
        if (!(w.less_equal(b, a) || w.less_equal(b, c))) return false;
      }
    }
  }
  return true;
}

bool lower_sets_convex(const TotalOrder& t, const WeakOrder& w) {
  require_same_size(t.size(), w.size());
  for (Element t0 = 1; t0 <= w.size(); ++t0) {
    ElementSet lower;
    for (Element x = 1; x <= w.size(); ++x) {
      if (w.less_equal(x, t0)) lower.push_back(x);
    }
    if (!is_convex(t, lower)) return false;
  }
  return true;
}

bool condition_b(const TotalOrder& t, const WeakOrder& w) {
  require_same_size(t.size(), w.size());
  const int n = w.size();
  for (Element a = 1; a <= n; ++a) {
    for (Element c = 1; c <= n; ++c) {
      if (a == c || !w.equivalent(a, c)) continue;
      for (Element b = 1; b <= n; ++b) {
        if (!w.less(b, a)) continue;
        const int rb = t.rank(b);
        const int lo = std::min(t.rank(a), t.rank(c));
        const int hi = std::max(t.rank(a), t.rank(c));
        if (!(lo < rb && rb < hi)) return false;
      }
    }
  }
  return true;
}

std::vector<ElementSet> plateaus(const TotalOrder& t, const WeakOrder& w) {
  require_same_size(t.size(), w.size());
  std::vector<ElementSet> out;
  const auto seq = t.sequence();
  const int n = t.size();
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && w.equivalent(seq[static_cast<size_t>(start)],
                                   seq[static_cast<size_t>(end)])) {
      ++end;
    }
    if (end - start >= 2) {
      ElementSet run(seq.begin() + start, seq.begin() + end);
      std::sort(run.begin(), run.end());
      out.push_back(std::move(run));
    }
    start = end;
  }
  return out;
}

bool condition_b_prime(const TotalOrder& t, const WeakOrder& w) {
  for (const auto& p : plateaus(t, w)) {
    if (w.rank(p.front()) != 1) return false;
  }
  return true;
}

PatternReport pattern_report(const TotalOrder& t, const WeakOrder& w) {
  require_same_size(t.size(), w.size());
  PatternReport report;
  const auto seq = t.sequence();
  const int n = t.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Element a = seq[static_cast<size_t>(i)];
        const Element b = seq[static_cast<size_t>(j)];
        const Element c = seq[static_cast<size_t>(k)];
        if (w.less(a, b) && w.less(c, b)) {
          report.v_patterns.push_back({a, b, c});
        }
      }
    }
  }
  for (const auto& p : plateaus(t, w)) {
    int lo = n + 1;
    int hi = 0;
    for (Element x : p) {
      lo = std::min(lo, t.rank(x));
      hi = std::max(hi, t.rank(x));
    }
    for (int r = 1; r <= n; ++r) {
      const Element z = t.at_rank(r);
      if (!w.less(z, p.front())) continue;
      if (r < lo) report.l_patterns.push_back({p, z});
      if (r > hi) report.reversed_l_patterns.push_back({p, z});
    }
  }
  report.v_free = report.v_patterns.empty();
  report.l_free = report.l_patterns.empty();
  report.reversed_l_free = report.reversed_l_patterns.empty();
  return report;
}

}  // namespace qtsg
