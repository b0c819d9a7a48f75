#pragma once

// The correspondence between associative quasitrivial operations and weak
// orders with a projection choice per non-singleton class: F is max for the
// weak order across classes and a fixed projection inside each class.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtsg/magma.hpp"
#include "qtsg/order.hpp"

namespace qtsg {

// Canonical form of a quasitrivial semigroup.
class KimuraDecomposition {
 public:
  // `choices` maps a class rank to its projection; it must hold exactly the
  // ranks of classes with two or more elements.
  KimuraDecomposition(WeakOrder order, std::map<int, Side> choices);

  // All classes of size >= 2 take `side`.
  static KimuraDecomposition uniform(WeakOrder order, Side side);

  const WeakOrder& order() const noexcept { return order_; }
  const std::map<int, Side>& choices() const noexcept { return choices_; }
  // Projection used on the class of x. Meaningless for singleton classes.
  Side side_of(Element x) const;

  friend bool operator==(const KimuraDecomposition&,
                         const KimuraDecomposition&) = default;

 private:
  WeakOrder order_;
  std::map<int, Side> choices_;
};

FiniteBinOp build(const KimuraDecomposition& d);

// x <= y iff F(x,y) = y or F(y,x) = y.
// Throws PreconditionViolation unless f is associative and quasitrivial.
WeakOrder induced_weak_order(const FiniteBinOp& f);

// x <= y iff deg(x) <= deg(y). Same precondition.
WeakOrder weak_order_from_degrees(const FiniteBinOp& f);

// Inverse of build(). Derives the order through both routes above and throws
// InternalConsistencyError if they differ.
KimuraDecomposition decompose(const FiniteBinOp& f);

// The total order t with f = max_t, when f is associative, quasitrivial and
// commutative. Cross-checked against the degree route below.
std::optional<TotalOrder> commutative_characterization(const FiniteBinOp& f);
// Quasitrivial with degree sequence (0, 2, ..., 2n-2); the order sorts the
// degrees.
std::optional<TotalOrder> commutative_characterization_by_degrees(
    const FiniteBinOp& f);

inline constexpr int kMaxMonotonizingSearch = 8;

struct MonotonizingSearch {
  std::optional<TotalOrder> order;  // first preserving order found
  long long examined = 0;           // total orders tried
  long long total = 0;              // n!
};

// Plain factorial search over total orders in lexicographic rank order.
// Throws CapacityError for n > kMaxMonotonizingSearch.
MonotonizingSearch search_monotonizing_order(const FiniteBinOp& f);
std::optional<TotalOrder> exists_monotonizing_order(const FiniteBinOp& f);

// Every total order that f preserves, stopping after `limit` hits. `count`
// carries the full number found when the search ran to completion.
struct MonotoneOrders {
  std::vector<TotalOrder> orders;
  long long count = 0;
  bool truncated = false;
};
MonotoneOrders monotone_orders(const FiniteBinOp& f, size_t limit);

struct ClassificationReport {
  int n = 0;
  bool associative = false;
  bool quasitrivial = false;
  bool commutative = false;
  bool idempotent = false;
  ElementSet neutral;
  ElementSet annihilator;
  std::optional<KimuraDecomposition> decomposition;
  DegreeSequence degree_sequence;
  std::optional<TotalOrder> is_max_of_total_order;
  TotalOrder reference = TotalOrder::natural(0);
  bool monotone_for_reference = false;
  std::vector<TotalOrder> monotone_for;  // possibly truncated
  std::optional<long long> monotone_for_count;  // absent when n is too large
  bool monotone_for_truncated = false;
  // Only meaningful when a decomposition exists.
  bool weakly_single_peaked_for_reference = false;
};

inline constexpr size_t kMonotoneListLimit = 8;

ClassificationReport classify(const FiniteBinOp& f, const TotalOrder& reference);

// One `key: value` line per field, fixed field order.
std::string to_text(const ClassificationReport& r);

}  // namespace qtsg
