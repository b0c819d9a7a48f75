#pragma once

// Registry of the named integer sequences and the methods that compute them.
//
//   q, q_e, q_a, q_ea    associative quasitrivial operations (with neutral,
//                        annihilator, both)
//   u, u_e, u_a, u_ea    weakly single-peaked weak orders for <=_n (with a
//                        unique minimum, unique maximum, both and distinct)
//   v, v_e, v_a, v_ea    associative quasitrivial operations preserving <=_n
//   p                    weak orders (ordered Bell numbers)
//   sp                   <=_n-preserving commutative ones, 2^(n-1)
//   comm                 commutative ones, n!
//
// At n = 0 every method returns the convention: q(0) = p(0) = 1, all other
// sequences 0. sp and comm start at n = 1.
//
// The shift formulas u_a(n) = 2u(n-1) and v_a(n) = 2v(n-1) give 0 at n = 1,
// while the single order on X_1 does have a unique maximum and the single
// operation an annihilator. The tabulated values follow the formulas, so the
// counting methods report u_a(1) = v_a(1) = 0 as a boundary convention; the
// raw family counts (1) remain available through count(FamilySpec).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtsg/enumeration.hpp"
#include "qtsg/exact.hpp"

namespace qtsg {

enum class Method { closed, recurrence, gf, egf, appendix, enumerate, bruteforce };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name);

struct SequenceInfo {
  std::string_view name;
  std::string_view description;
  std::string_view oeis;  // empty when none is known
  int min_n = 0;
  std::vector<Method> methods;  // canonical order; the first is the default
  // The structural family and filters behind the enumerate method.
  Family family = Family::weak_orders;
  std::vector<Filter> filters;
};

const std::vector<SequenceInfo>& sequence_registry();
const SequenceInfo* find_sequence(std::string_view name);

// The conventional value at a boundary n, if one applies.
std::optional<ExactInt> boundary_convention(std::string_view name, int n);

// Largest n each method accepts for a sequence, or nullopt when unbounded.
std::optional<int> method_limit(const SequenceInfo& s, Method m);
// Largest n at which `--method all` still includes m (keeps runs short).
std::optional<int> method_routine_limit(const SequenceInfo& s, Method m);

// Throws InvalidArgument for an unknown sequence, an unsupported method or
// n < min_n, CapacityError beyond method_limit.
ExactInt sequence_value(std::string_view name, int n, Method m);

struct SequenceEntry {
  int n = 0;
  ExactInt value;
  Method method = Method::closed;
};

struct SequenceTable {
  std::string name;
  std::vector<SequenceEntry> values;

  // Every pair of entries with the same n carries the same value.
  bool consistent() const;
};

// One entry per requested method at the given n.
SequenceTable evaluate(std::string_view name, int n,
                       const std::vector<Method>& methods);

}  // namespace qtsg
