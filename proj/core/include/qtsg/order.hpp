#pragma once

// Total and weak orderings on X_n = {1, ..., n}, together with the
// peakedness, convexity and plateau predicates used to characterize
// order-preserving quasitrivial semigroups.
//
// Elements are the integers 1..n. Every element set returned by this header
// is sorted ascending by element label.

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace qtsg {

using Element = int;
using ElementSet = std::vector<Element>;

class WeakOrder;

// A ranking of 1..n by a permutation: rank(x) = 1 for the smallest element.
class TotalOrder {
 public:
  // The natural order 1 < 2 < ... < n.
  static TotalOrder natural(int n);
  // `ranks[x-1]` is the rank of x; must be a permutation of 1..n.
  static TotalOrder from_ranks(std::vector<int> ranks);
  // Elements listed from smallest to largest, e.g. {4,3,5,2,1,6}.
  static TotalOrder from_sequence(std::span<const Element> low_to_high);

  int size() const noexcept { return static_cast<int>(rank_.size()); }
  int rank(Element x) const { return rank_[index(x)]; }
  Element at_rank(int r) const { return sequence_[static_cast<size_t>(r - 1)]; }
  bool less(Element x, Element y) const { return rank(x) < rank(y); }

  std::span<const int> ranks() const noexcept { return rank_; }
  // Elements from smallest to largest.
  std::span<const Element> sequence() const noexcept { return sequence_; }

  TotalOrder inverse() const;
  WeakOrder as_weak() const;

  friend bool operator==(const TotalOrder&, const TotalOrder&) = default;
  friend auto operator<=>(const TotalOrder& a, const TotalOrder& b) {
    return a.rank_ <=> b.rank_;
  }

 private:
  explicit TotalOrder(std::vector<int> ranks);
  size_t index(Element x) const;

  std::vector<int> rank_;
  std::vector<Element> sequence_;
};

// A total preorder stored as a surjective rank vector onto 1..k.
// x ~ y iff rank(x) == rank(y); x < y iff rank(x) < rank(y).
class WeakOrder {
 public:
  // `ranks[x-1]` is the class rank of x; every value in 1..max must occur.
  static WeakOrder from_ranks(std::vector<int> ranks);
  // Classes listed from lowest to highest; must partition 1..n.
  static WeakOrder from_classes(const std::vector<ElementSet>& classes, int n);

  int size() const noexcept { return static_cast<int>(rank_.size()); }
  int num_classes() const noexcept { return classes_; }
  int rank(Element x) const { return rank_[index(x)]; }

  bool less(Element x, Element y) const { return rank(x) < rank(y); }
  bool less_equal(Element x, Element y) const { return rank(x) <= rank(y); }
  bool equivalent(Element x, Element y) const { return rank(x) == rank(y); }

  std::span<const int> ranks() const noexcept { return rank_; }

  // Present iff every class is a singleton.
  std::optional<TotalOrder> as_total() const;
  // a <=^{-1} b iff b <= a.
  WeakOrder inverse() const;

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;
  friend auto operator<=>(const WeakOrder& a, const WeakOrder& b) {
    return a.rank_ <=> b.rank_;
  }

 private:
  WeakOrder(std::vector<int> ranks, int classes);
  size_t index(Element x) const;

  std::vector<int> rank_;
  int classes_ = 0;
};

// Classes in increasing rank; class i is {x : rank(x) = i}.
std::vector<ElementSet> equivalence_classes(const WeakOrder& w);

ElementSet minimal_elements(const WeakOrder& w);
ElementSet maximal_elements(const WeakOrder& w);

// {z : x < z < y} (or y < z < x) under t. Throws InvalidArgument if x == y.
ElementSet strict_convex_hull(const TotalOrder& t, Element x, Element y);

bool is_convex(const TotalOrder& t, std::span<const Element> s);

// For every a <_t b <_t c: b <_p a or b <_p c.
bool is_single_peaked(const TotalOrder& t, const TotalOrder& p);
// For every a <_t b <_t c: a <_p b or c <_p b.
bool is_dual_single_peaked(const TotalOrder& t, const TotalOrder& p);

// For every a <_t b <_t c: b < a or b < c or a ~ b ~ c.
bool is_weakly_single_peaked(const TotalOrder& t, const WeakOrder& w);

// V-freeness: for all a, c and b strictly between them, b <= a or b <= c.
bool condition_a(const TotalOrder& t, const WeakOrder& w);
// Same property, phrased as: every lower set {x : x <= t0} is t-convex.
bool lower_sets_convex(const TotalOrder& t, const WeakOrder& w);

// For a != c with b < a ~ c, b lies strictly between a and c.
bool condition_b(const TotalOrder& t, const WeakOrder& w);

// Maximal runs of t-consecutive, mutually equivalent elements of size >= 2,
// listed in t order.
std::vector<ElementSet> plateaus(const TotalOrder& t, const WeakOrder& w);

// Every plateau is minimal: nothing lies strictly below it. Checking the
// maximal runs suffices since a sub-plateau has the same class.
bool condition_b_prime(const TotalOrder& t, const WeakOrder& w);

// A V at (a, b, c): a <_t b <_t c with a < b and c < b.
struct VPattern {
  Element left;
  Element middle;
  Element right;
  friend bool operator==(const VPattern&, const VPattern&) = default;
};

// A plateau together with an element strictly below it in the weak order.
// In the profile plot (vertical axis reversed) that element sits higher
// than the plateau. An L has it t-left of the plateau, a reversed L t-right.
struct PlateauPattern {
  ElementSet plateau;
  Element witness;
  friend bool operator==(const PlateauPattern&, const PlateauPattern&) = default;
};

struct PatternReport {
  bool v_free = true;
  bool l_free = true;
  bool reversed_l_free = true;
  std::vector<VPattern> v_patterns;
  std::vector<PlateauPattern> l_patterns;
  std::vector<PlateauPattern> reversed_l_patterns;

  bool all_free() const noexcept { return v_free && l_free && reversed_l_free; }
};

PatternReport pattern_report(const TotalOrder& t, const WeakOrder& w);

}  // namespace qtsg
