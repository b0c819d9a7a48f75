#include "qtsg/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qtsg/error.hpp"
#include "qtsg/text_format.hpp"

namespace qtsg {

namespace {

void require_semigroup(const FiniteBinOp& f, const char* what) {
  if (!is_quasitrivial(f)) {
    throw PreconditionViolation(std::string(what) +
                                ": operation is not quasitrivial");
  }
  if (!is_associative(f)) {
    throw PreconditionViolation(std::string(what) +
                                ": operation is not associative");
  }
}

std::vector<int> class_sizes(const WeakOrder& w) {
  std::vector<int> sizes(static_cast<size_t>(w.num_classes()), 0);
  for (Element x = 1; x <= w.size(); ++x) ++sizes[static_cast<size_t>(w.rank(x) - 1)];
  return sizes;
}

// Dense ranks of `keys` (equal keys share a rank, ranks start at 1).
std::vector<int> dense_ranks(const std::vector<int>& keys) {
  std::vector<int> sorted(keys);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks;
  ranks.reserve(keys.size());
  for (int k : keys) {
    ranks.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()) + 1);
  }
  return ranks;
}

}  // namespace

// ---------------------------------------------------------------------------
// KimuraDecomposition

KimuraDecomposition::KimuraDecomposition(WeakOrder order,
                                         std::map<int, Side> choices)
    : order_(std::move(order)), choices_(std::move(choices)) {
  const auto sizes = class_sizes(order_);
  for (int r = 1; r <= order_.num_classes(); ++r) {
    const bool big = sizes[static_cast<size_t>(r - 1)] >= 2;
    const bool has = choices_.count(r) != 0;
    if (big && !has) {
      throw InvalidArgument("missing projection choice for class of rank " +
                            std::to_string(r));
    }
    if (!big && has) {
      throw InvalidArgument("class of rank " + std::to_string(r) +
                            " is a singleton and takes no projection choice");
    }
  }
  for (const auto& [r, side] : choices_) {
    if (r < 1 || r > order_.num_classes()) {
      throw InvalidArgument("projection choice for nonexistent class rank " +
                            std::to_string(r));
    }
  }
}

KimuraDecomposition KimuraDecomposition::uniform(WeakOrder order, Side side) {
  std::map<int, Side> choices;
  const auto sizes = class_sizes(order);
  for (int r = 1; r <= order.num_classes(); ++r) {
    if (sizes[static_cast<size_t>(r - 1)] >= 2) choices.emplace(r, side);
  }
  return KimuraDecomposition(std::move(order), std::move(choices));
}

Side KimuraDecomposition::side_of(Element x) const {
  auto it = choices_.find(order_.rank(x));
  return it == choices_.end() ? Side::left : it->second;
}

FiniteBinOp build(const KimuraDecomposition& d) {
  const WeakOrder& w = d.order();
  return FiniteBinOp::from_function(w.size(), [&](Element x, Element y) {
    if (w.less(x, y)) return y;
    if (w.less(y, x)) return x;
    return d.side_of(x) == Side::left ? x : y;
  });
}

WeakOrder induced_weak_order(const FiniteBinOp& f) {
  require_semigroup(f, "induced_weak_order");
  const int n = f.size();
  // Rank of x = 1 + number of classes strictly below; compute via the count
  // of y with y < x, which is monotone in the weak order.
  std::vector<int> below(static_cast<size_t>(n), 0);
  for (Element x = 1; x <= n; ++x) {
    for (Element y = 1; y <= n; ++y) {
      if (x == y) continue;
      const bool y_le_x = f(y, x) == x || f(x, y) == x;
      const bool x_le_y = f(x, y) == y || f(y, x) == y;
      if (y_le_x && !x_le_y) ++below[static_cast<size_t>(x - 1)];
    }
  }
  return WeakOrder::from_ranks(dense_ranks(below));
}

WeakOrder weak_order_from_degrees(const FiniteBinOp& f) {
  require_semigroup(f, "weak_order_from_degrees");
  return WeakOrder::from_ranks(dense_ranks(degrees(f)));
}

KimuraDecomposition decompose(const FiniteBinOp& f) {
  WeakOrder w = induced_weak_order(f);
  if (weak_order_from_degrees(f) != w) {
    throw InternalConsistencyError(
        "weak order from F-degrees differs from the induced weak order");
  }
  std::map<int, Side> choices;
  for (const auto& cls : equivalence_classes(w)) {
    if (cls.size() < 2) continue;
    const Side side = f(cls[0], cls[1]) == cls[0] ? Side::left : Side::right;
    for (Element x : cls) {
      for (Element y : cls) {
        if (x == y) continue;
        const Element expected = side == Side::left ? x : y;
        if (f(x, y) != expected) {
          throw InternalConsistencyError(
              "projection is not uniform on an equivalence class");
        }
      }
    }
    choices.emplace(w.rank(cls[0]), side);
  }
  KimuraDecomposition d(std::move(w), std::move(choices));
  if (build(d) != f) {
    throw InternalConsistencyError("rebuilt table differs from the input");
  }
  return d;
}

std::optional<TotalOrder> commutative_characterization_by_degrees(
    const FiniteBinOp& f) {
  if (!is_quasitrivial(f)) return std::nullopt;
  const int n = f.size();
  const auto deg = degrees(f);
  std::vector<int> sorted(deg);
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[static_cast<size_t>(i)] != 2 * i) return std::nullopt;
  }
  std::vector<int> ranks;
  ranks.reserve(deg.size());
  for (int d : deg) ranks.push_back(d / 2 + 1);
  return TotalOrder::from_ranks(std::move(ranks));
}

std::optional<TotalOrder> commutative_characterization(const FiniteBinOp& f) {
  std::optional<TotalOrder> algebraic;
  if (is_quasitrivial(f) && is_commutative(f) && is_associative(f)) {
    algebraic = induced_weak_order(f).as_total();
    if (!algebraic || maximum(*algebraic) != f) {
      throw InternalConsistencyError(
          "commutative quasitrivial semigroup is not a maximum of a chain");
    }
  }
  const auto by_degrees = commutative_characterization_by_degrees(f);
  if (algebraic != by_degrees) {
    throw InternalConsistencyError(
        "commutative characterization disagrees with the degree route");
  }
  return algebraic;
}

namespace {

template <typename Visit>
void for_each_total_order(int n, Visit&& visit) {
  std::vector<int> ranks(static_cast<size_t>(n));
  std::iota(ranks.begin(), ranks.end(), 1);
  do {
    if (!visit(TotalOrder::from_ranks(ranks))) return;
  } while (std::next_permutation(ranks.begin(), ranks.end()));
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void require_search_capacity(int n) {
  if (n > kMaxMonotonizingSearch) {
    throw CapacityError("monotonizing-order search is limited to n <= " +
                        std::to_string(kMaxMonotonizingSearch) + " (got n = " +
                        std::to_string(n) + ")");
  }
}

}  // namespace

MonotonizingSearch search_monotonizing_order(const FiniteBinOp& f) {
  require_search_capacity(f.size());
  MonotonizingSearch result;
  result.total = factorial(f.size());
  for_each_total_order(f.size(), [&](const TotalOrder& t) {
    ++result.examined;
    if (is_order_preserving(f, t)) {
      result.order = t;
      return false;
    }
    return true;
  });
  return result;
}

std::optional<TotalOrder> exists_monotonizing_order(const FiniteBinOp& f) {
  return search_monotonizing_order(f).order;
}

MonotoneOrders monotone_orders(const FiniteBinOp& f, size_t limit) {
  require_search_capacity(f.size());
  MonotoneOrders out;
  for_each_total_order(f.size(), [&](const TotalOrder& t) {
    if (is_order_preserving(f, t)) {
      ++out.count;
      if (out.orders.size() < limit) {
        out.orders.push_back(t);
      } else {
        out.truncated = true;
      }
    }
    return true;
  });
  return out;
}

ClassificationReport classify(const FiniteBinOp& f,
                              const TotalOrder& reference) {
  if (reference.size() != f.size()) {
    throw InvalidArgument("reference order and operation differ in size");
  }
  ClassificationReport r;
  r.n = f.size();
  r.reference = reference;
  r.associative = is_associative(f);
  r.quasitrivial = is_quasitrivial(f);
  r.commutative = is_commutative(f);
  r.idempotent = is_idempotent(f);
  r.neutral = neutral_elements(f);
  r.annihilator = annihilator_elements(f);
  r.degree_sequence = degree_sequence(f);
  if (r.associative && r.quasitrivial) {
    r.decomposition = decompose(f);
    r.weakly_single_peaked_for_reference =
        is_weakly_single_peaked(reference, r.decomposition->order());
  }
  r.is_max_of_total_order = commutative_characterization(f);
  r.monotone_for_reference = is_order_preserving(f, reference);
  if (f.size() <= kMaxMonotonizingSearch) {
    auto m = monotone_orders(f, kMonotoneListLimit);
    r.monotone_for = std::move(m.orders);
    r.monotone_for_count = m.count;
    r.monotone_for_truncated = m.truncated;
  }
  return r;
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const ElementSet& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

}  // namespace

std::string to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "n: " << r.n << '\n';
  os << "associative: " << yes_no(r.associative) << '\n';
  os << "quasitrivial: " << yes_no(r.quasitrivial) << '\n';
  os << "commutative: " << yes_no(r.commutative) << '\n';
  os << "idempotent: " << yes_no(r.idempotent) << '\n';
  os << "neutral: " << join(r.neutral) << '\n';
  os << "annihilator: " << join(r.annihilator) << '\n';
  os << "degree_sequence: (";
  for (size_t i = 0; i < r.degree_sequence.values.size(); ++i) {
    os << (i ? "," : "") << r.degree_sequence.values[i];
  }
  os << ")\n";
  if (r.decomposition) {
    os << "decomposition: " << emit_weak_order(r.decomposition->order()) << '\n';
    os << "choices: " << emit_choices(*r.decomposition) << '\n';
  } else {
    os << "decomposition: none\n";
    os << "choices: none\n";
  }
  os << "max_of_total_order: "
     << (r.is_max_of_total_order ? emit_total_order(*r.is_max_of_total_order)
                                 : std::string("none"))
     << '\n';
  os << "reference: " << emit_total_order(r.reference) << '\n';
  os << "monotone_for_reference: " << yes_no(r.monotone_for_reference) << '\n';
  if (r.monotone_for_count) {
    os << "monotone_for_count: " << *r.monotone_for_count << '\n';
  } else {
    os << "monotone_for_count: unknown\n";
  }
  os << "monotone_for:";
  if (r.monotone_for.empty()) os << " none";
  for (size_t i = 0; i < r.monotone_for.size(); ++i) {
    os << (i ? "; " : " ") << emit_total_order(r.monotone_for[i]);
  }
  if (r.monotone_for_truncated) os << "; ...";
  os << '\n';
  os << "weakly_single_peaked_for_reference: "
     << (r.decomposition ? yes_no(r.weakly_single_peaked_for_reference)
                         : "n/a")
     << '\n';
  return os.str();
}

}  // namespace qtsg
