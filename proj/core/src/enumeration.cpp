#include "qtsg/enumeration.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "qtsg/error.hpp"

namespace qtsg {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyName, 5> kFamilies{{
    {Family::total_orders, "total-orders"},
    {Family::weak_orders, "weak-orders"},
    {Family::single_peaked_total_orders, "single-peaked-total-orders"},
    {Family::weakly_single_peaked_weak_orders,
     "weakly-single-peaked-weak-orders"},
    {Family::qt_semigroups, "qt-semigroups"},
}};

struct FilterName {
  Filter filter;
  std::string_view name;
};

constexpr std::array<FilterName, 8> kFilters{{
    {Filter::neutral, "neutral"},
    {Filter::annihilator, "annihilator"},
    {Filter::neutral_and_annihilator_distinct,
     "neutral-and-annihilator-distinct"},
    {Filter::commutative, "commutative"},
    {Filter::monotone_for_reference, "monotone-for-reference"},
    {Filter::unique_min, "unique-min"},
    {Filter::unique_max, "unique-max"},
    {Filter::unique_min_and_max_distinct, "unique-min-and-max-distinct"},
}};

}  // namespace

std::string_view to_string(Family f) noexcept {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e.name;
  }
  return "?";
}

std::string_view to_string(Filter f) noexcept {
  for (const auto& e : kFilters) {
    if (e.filter == f) return e.name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& e : kFamilies) {
    if (e.name == name) return e.family;
  }
  return std::nullopt;
}

std::optional<Filter> parse_filter(std::string_view name) {
  for (const auto& e : kFilters) {
    if (e.name == name) return e.filter;
  }
  return std::nullopt;
}

bool is_order_family(Family f) noexcept { return f != Family::qt_semigroups; }

bool is_operation_filter(Filter f) noexcept {
  switch (f) {
    case Filter::neutral:
    case Filter::annihilator:
    case Filter::neutral_and_annihilator_distinct:
    case Filter::commutative:
    case Filter::monotone_for_reference:
      return true;
    default:
      return false;
  }
}

int capacity(Family f) noexcept {
  return f == Family::qt_semigroups ? 9 : 10;
}

TotalOrder FamilySpec::reference_order() const {
  return reference ? *reference : TotalOrder::natural(n);
}

void FamilySpec::validate() const {
  const int min_n = family == Family::qt_semigroups ? 1 : 0;
  if (n < min_n) {
    throw InvalidArgument(std::string(to_string(family)) + " needs n >= " +
                          std::to_string(min_n));
  }
  if (n > capacity(family)) {
    throw CapacityError(std::string(to_string(family)) +
                        " generation is limited to n <= " +
                        std::to_string(capacity(family)) + " (got n = " +
                        std::to_string(n) + ")");
  }
  for (Filter f : filters) {
    if (is_operation_filter(f) == is_order_family(family)) {
      throw InvalidArgument("filter '" + std::string(to_string(f)) +
                            "' does not apply to family '" +
                            std::string(to_string(family)) + "'");
    }
  }
  if (reference && reference->size() != n) {
    throw InvalidArgument("reference order has " +
                          std::to_string(reference->size()) +
                          " elements, expected " + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// Lexicographic surjective rank vectors

namespace {

// Rank vectors are small (n <= 64), so a fixed-size tally suffices.
struct Tally {
  std::array<int, 66> count{};
  int max = 0;
  int distinct = 0;

  void add(int v) {
    if (count[static_cast<size_t>(v)]++ == 0) ++distinct;
    max = std::max(max, v);
  }
  void remove(int v) {
    if (--count[static_cast<size_t>(v)] == 0) {
      --distinct;
      if (v == max) {
        while (max > 0 && count[static_cast<size_t>(max)] == 0) --max;
      }
    }
  }
  // Values in 1..max not yet present.
  int missing() const { return max - distinct; }
  int missing_after(int v) const {
    if (v <= max) return missing() - (count[static_cast<size_t>(v)] == 0 ? 1 : 0);
    return missing() + (v - max - 1);
  }
};

}  // namespace

bool next_weak_order_ranks(std::vector<int>& ranks) {
  const int n = static_cast<int>(ranks.size());
  Tally tally;
  for (int v : ranks) tally.add(v);
  for (int i = n - 1; i >= 0; --i) {
    tally.remove(ranks[static_cast<size_t>(i)]);
    const int remaining = n - 1 - i;
    for (int v = ranks[static_cast<size_t>(i)] + 1; v <= n; ++v) {
      if (tally.missing_after(v) > remaining) continue;
      ranks[static_cast<size_t>(i)] = v;
      tally.add(v);
      for (int j = i + 1; j < n; ++j) {
        const int left = n - 1 - j;
        for (int w = 1; w <= n; ++w) {
          if (tally.missing_after(w) <= left) {
            ranks[static_cast<size_t>(j)] = w;
            tally.add(w);
            break;
          }
        }
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// FamilyStream

FamilyStream::FamilyStream(FamilySpec spec, int shard_index, int shard_count)
    : spec_(std::move(spec)),
      reference_(TotalOrder::natural(0)),
      shard_index_(shard_index),
      shard_count_(shard_count) {
  spec_.validate();
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count) {
    throw InvalidArgument("shard index must lie in 0..shard_count-1");
  }
  reference_ = spec_.reference_order();
}

void FamilyStream::restart() {
  ranks_.clear();
  started_ = false;
  exhausted_ = false;
  ordinal_ = -1;
  current_order_.reset();
  big_classes_.clear();
  choice_mask_ = choice_end_ = 0;
  last_decomposition_.reset();
}

bool FamilyStream::advance_base() {
  if (exhausted_) return false;
  const bool total = spec_.family == Family::total_orders ||
                     spec_.family == Family::single_peaked_total_orders;
  if (!started_) {
    started_ = true;
    ranks_.assign(static_cast<size_t>(spec_.n), 1);
    if (total) std::iota(ranks_.begin(), ranks_.end(), 1);
  } else {
    const bool more = total ? std::next_permutation(ranks_.begin(), ranks_.end())
                            : next_weak_order_ranks(ranks_);
    if (!more) {
      exhausted_ = true;
      return false;
    }
  }
  ++ordinal_;
  return true;
}

bool FamilyStream::passes_order_filters(const WeakOrder& w) const {
  for (Filter f : spec_.filters) {
    switch (f) {
      case Filter::unique_min:
        if (minimal_elements(w).size() != 1) return false;
        break;
      case Filter::unique_max:
        if (maximal_elements(w).size() != 1) return false;
        break;
      case Filter::unique_min_and_max_distinct: {
        const auto lo = minimal_elements(w);
        const auto hi = maximal_elements(w);
        if (lo.size() != 1 || hi.size() != 1 || lo[0] == hi[0]) return false;
        break;
      }
      default:
        break;
    }
  }
  return true;
}

bool FamilyStream::passes_operation_filters(const FiniteBinOp& f) const {
  for (Filter filter : spec_.filters) {
    switch (filter) {
      case Filter::neutral:
        if (neutral_elements(f).empty()) return false;
        break;
      case Filter::annihilator:
        if (annihilator_elements(f).empty()) return false;
        break;
      case Filter::neutral_and_annihilator_distinct: {
        const auto e = neutral_elements(f);
        const auto a = annihilator_elements(f);
        bool found = false;
        for (Element x : e) {
          for (Element y : a) found = found || x != y;
        }
        if (!found) return false;
        break;
      }
      case Filter::commutative:
        if (!is_commutative(f)) return false;
        break;
      case Filter::monotone_for_reference:
        if (!is_order_preserving(f, reference_)) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

std::optional<FamilyObject> FamilyStream::next_semigroup() {
  while (true) {
    if (current_order_ && choice_mask_ < choice_end_) {
      std::map<int, Side> choices;
      const size_t m = big_classes_.size();
      for (size_t j = 0; j < m; ++j) {
        const bool right = (choice_mask_ >> (m - 1 - j)) & 1ULL;
        choices.emplace(big_classes_[j], right ? Side::right : Side::left);
      }
      ++choice_mask_;
      KimuraDecomposition d(*current_order_, std::move(choices));
      FiniteBinOp f = build(d);
      if (!passes_operation_filters(f)) continue;
      last_decomposition_ = std::move(d);
      return f;
    }
    current_order_.reset();
    do {
      if (!advance_base()) return std::nullopt;
    } while (ordinal_ % shard_count_ != shard_index_);
    WeakOrder w = WeakOrder::from_ranks(ranks_);
    std::vector<int> sizes(static_cast<size_t>(w.num_classes()), 0);
    for (int r : ranks_) ++sizes[static_cast<size_t>(r - 1)];
    big_classes_.clear();
    for (int r = 1; r <= w.num_classes(); ++r) {
      if (sizes[static_cast<size_t>(r - 1)] >= 2) big_classes_.push_back(r);
    }
    choice_mask_ = 0;
    choice_end_ = 1ULL << big_classes_.size();
    current_order_ = std::move(w);
  }
}

std::optional<FamilyObject> FamilyStream::next() {
  if (spec_.family == Family::qt_semigroups) return next_semigroup();
  while (advance_base()) {
    if (ordinal_ % shard_count_ != shard_index_) continue;
    WeakOrder w = WeakOrder::from_ranks(ranks_);
    switch (spec_.family) {
      case Family::single_peaked_total_orders:
      case Family::weakly_single_peaked_weak_orders:
        if (!is_weakly_single_peaked(reference_, w)) continue;
        break;
      default:
        break;
    }
    if (!passes_order_filters(w)) continue;
    if (spec_.family == Family::total_orders ||
        spec_.family == Family::single_peaked_total_orders) {
      return TotalOrder::from_ranks(ranks_);
    }
    return w;
  }
  return std::nullopt;
}

std::vector<FamilyObject> generate(const FamilySpec& spec, int shard_index,
                                   int shard_count) {
  FamilyStream s(spec, shard_index, shard_count);
  std::vector<FamilyObject> out;
  while (auto obj = s.next()) out.push_back(std::move(*obj));
  return out;
}

ExactInt count(const FamilySpec& spec, int shard_index, int shard_count) {
  FamilyStream s(spec, shard_index, shard_count);
  unsigned long long c = 0;
  while (s.next()) ++c;
  return ExactInt(c);
}

FamilyStream ordered_set_partitions(int n) {
  return FamilyStream(FamilySpec{Family::weak_orders, n, {}, std::nullopt});
}

}  // namespace qtsg
