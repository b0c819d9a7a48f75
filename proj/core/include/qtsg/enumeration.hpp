#pragma once

// Deterministic, restartable generators for the object families that get
// counted: total orders, weak orders (ordered set partitions), their
// single-peaked subfamilies, and quasitrivial semigroups.
//
// Generation order is part of the contract:
//   * orders are produced in lexicographic order of their rank vectors;
//   * quasitrivial semigroups are produced per weak order in that order, and
//     for each weak order the projection choices of its non-singleton classes
//     (taken in increasing class rank) run through binary counting with
//     left = 0 < right = 1, the lowest-ranked class being most significant.
//
// Sharding: with shard_count = K, shard i receives the objects whose base
// ordinal (position of the underlying order in the serial stream) is
// congruent to i modulo K. The union of all shards is the serial stream.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qtsg/exact.hpp"
#include "qtsg/magma.hpp"
#include "qtsg/order.hpp"
#include "qtsg/structure.hpp"

namespace qtsg {

enum class Family {
  total_orders,
  weak_orders,
  single_peaked_total_orders,
  weakly_single_peaked_weak_orders,
  qt_semigroups,
};

enum class Filter {
  // operation filters (qt-semigroups)
  neutral,
  annihilator,
  neutral_and_annihilator_distinct,
  commutative,
  monotone_for_reference,
  // order filters
  unique_min,
  unique_max,
  unique_min_and_max_distinct,
};

std::string_view to_string(Family f) noexcept;
std::string_view to_string(Filter f) noexcept;
std::optional<Family> parse_family(std::string_view name);
std::optional<Filter> parse_filter(std::string_view name);
bool is_order_family(Family f) noexcept;
bool is_operation_filter(Filter f) noexcept;

// Largest n the generator accepts for a family.
int capacity(Family f) noexcept;

struct FamilySpec {
  Family family = Family::weak_orders;
  int n = 0;
  std::vector<Filter> filters;
  // Reference order for the peakedness families and the monotone filter;
  // defaults to 1 < 2 < ... < n.
  std::optional<TotalOrder> reference;

  TotalOrder reference_order() const;
  // Throws InvalidArgument for inapplicable filters or a mismatched reference
  // and CapacityError when n is out of range.
  void validate() const;
};

using FamilyObject = std::variant<TotalOrder, WeakOrder, FiniteBinOp>;

// Steps `ranks` to the next surjective rank vector in lexicographic order.
// The first vector is all ones; returns false after the last, n n-1 ... 1.
bool next_weak_order_ranks(std::vector<int>& ranks);

// Pull-based stream over a family.
class FamilyStream {
 public:
  explicit FamilyStream(FamilySpec spec, int shard_index = 0,
                        int shard_count = 1);

  std::optional<FamilyObject> next();
  // For qt-semigroups, the decomposition behind the last object returned.
  const std::optional<KimuraDecomposition>& last_decomposition() const noexcept {
    return last_decomposition_;
  }
  void restart();

  const FamilySpec& spec() const noexcept { return spec_; }

 private:
  bool advance_base();
  bool passes_order_filters(const WeakOrder& w) const;
  bool passes_operation_filters(const FiniteBinOp& f) const;
  std::optional<FamilyObject> next_semigroup();

  FamilySpec spec_;
  TotalOrder reference_;
  int shard_index_;
  int shard_count_;

  std::vector<int> ranks_;
  bool started_ = false;
  bool exhausted_ = false;
  long long ordinal_ = -1;

  // qt-semigroup state for the current weak order
  std::optional<WeakOrder> current_order_;
  std::vector<int> big_classes_;
  unsigned long long choice_mask_ = 0;
  unsigned long long choice_end_ = 0;
  std::optional<KimuraDecomposition> last_decomposition_;
};

// Materialize every object of a spec (use only for small n).
std::vector<FamilyObject> generate(const FamilySpec& spec, int shard_index = 0,
                                   int shard_count = 1);

ExactInt count(const FamilySpec& spec, int shard_index = 0,
               int shard_count = 1);

// All weak orders on 1..n, i.e. the ordered set partitions.
FamilyStream ordered_set_partitions(int n);

}  // namespace qtsg
