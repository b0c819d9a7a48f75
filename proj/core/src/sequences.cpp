#include "qtsg/sequences.hpp"

#include <array>
#include <map>
#include <string>

#include "qtsg/counting.hpp"
#include "qtsg/error.hpp"
#include "qtsg/oracle.hpp"

namespace qtsg {

namespace {

using M = Method;
using F = Filter;

constexpr std::array<std::pair<Method, std::string_view>, 7> kMethodNames{{
    {M::closed, "closed"},
    {M::recurrence, "recurrence"},
    {M::gf, "gf"},
    {M::egf, "egf"},
    {M::appendix, "appendix"},
    {M::enumerate, "enumerate"},
    {M::bruteforce, "bruteforce"},
}};

std::vector<SequenceInfo> make_registry() {
  const std::vector<Method> q_methods{M::closed, M::recurrence, M::egf,
                                      M::appendix, M::enumerate, M::bruteforce};
  const std::vector<Method> shift{M::closed, M::enumerate};
  const std::vector<Method> triple{M::closed, M::recurrence, M::gf, M::enumerate};
  const auto qt = Family::qt_semigroups;
  const auto wsp = Family::weakly_single_peaked_weak_orders;
  return {
      {"q", "associative quasitrivial operations", "A292932", 0, q_methods, qt, {}},
      {"q_e", "... with a neutral element", "A292933", 0, shift, qt, {F::neutral}},
      {"q_a", "... with an annihilator", "A292933", 0, shift, qt, {F::annihilator}},
      {"q_ea", "... with a neutral element and an annihilator", "A292934", 0,
       shift, qt, {F::neutral_and_annihilator_distinct}},
      {"u", "weakly single-peaked weak orders for <=_n", "A048739", 0, triple, wsp, {}},
      {"u_e", "... with a unique minimal element", "A000129", 0, triple, wsp,
       {F::unique_min}},
      {"u_a", "... with a unique maximal element", "A293004", 0, shift, wsp,
       {F::unique_max}},
      {"u_ea", "... with distinct unique minimal and maximal elements",
       "A163271", 0, shift, wsp, {F::unique_min_and_max_distinct}},
      {"v", "<=_n-preserving associative quasitrivial operations", "A293005",
       0, triple, qt, {F::monotone_for_reference}},
      {"v_e", "... with a neutral element", "A002605", 0, triple, qt,
       {F::monotone_for_reference, F::neutral}},
      {"v_a", "... with an annihilator", "A293006", 0, shift, qt,
       {F::monotone_for_reference, F::annihilator}},
      {"v_ea", "... with a neutral element and an annihilator", "A293007", 0,
       shift, qt, {F::monotone_for_reference, F::neutral_and_annihilator_distinct}},
      {"p", "weak orders (ordered Bell numbers)", "A000670", 0,
       {M::closed, M::recurrence, M::egf, M::enumerate}, Family::weak_orders, {}},
      {"sp", "<=_n-preserving commutative associative quasitrivial operations",
       "A000079", 1, shift, qt, {F::commutative, F::monotone_for_reference}},
      {"comm", "commutative associative quasitrivial operations", "A000142", 1,
       shift, qt, {F::commutative}},
  };
}

bool supports(const SequenceInfo& s, Method m) {
  for (Method x : s.methods) {
    if (x == m) return true;
  }
  return false;
}


ExactInt formula(std::string_view name, int n, Method m) {
  using Fn = ExactInt (*)(int);
  static const std::map<std::pair<std::string_view, Method>, Fn> table{
      {{"q", M::closed}, q_closed},
      {{"q", M::recurrence}, q_recurrence},
      {{"q", M::egf}, q_egf},
      {{"q", M::appendix}, q_appendix},
      {{"q_e", M::closed}, q_neutral},
      {{"q_a", M::closed}, q_annihilator},
      {{"q_ea", M::closed}, q_both},
      {{"u", M::closed}, u_closed},
      {{"u", M::recurrence}, u_recurrence},
      {{"u", M::gf}, u_gf},
      {{"u_e", M::closed}, u_e_closed},
      {{"u_e", M::recurrence}, u_e_recurrence},
      {{"u_e", M::gf}, u_e_gf},
      {{"u_a", M::closed}, u_a},
      {{"u_ea", M::closed}, u_ea},
      {{"v", M::closed}, v_closed},
      {{"v", M::recurrence}, v_recurrence},
      {{"v", M::gf}, v_gf},
      {{"v_e", M::closed}, v_e_closed},
      {{"v_e", M::recurrence}, v_e_recurrence},
      {{"v_e", M::gf}, v_e_gf},
      {{"v_a", M::closed}, v_a},
      {{"v_ea", M::closed}, v_ea},
      {{"p", M::closed}, ordered_bell},
      {{"p", M::recurrence}, ordered_bell_recurrence},
      {{"p", M::egf}, ordered_bell_egf},
      {{"sp", M::closed}, single_peaked_count},
      {{"comm", M::closed}, commutative_count},
  };
  const auto it = table.find({name, m});
  if (it == table.end()) {
    throw InternalConsistencyError("no formula registered for " + std::string(name));
  }
  return it->second(n);
}

}  // namespace

std::optional<ExactInt> boundary_convention(std::string_view name, int n) {
  if (n == 0) return (name == "q" || name == "p") ? ExactInt(1) : ExactInt(0);
  if (n == 1 && (name == "u_a" || name == "v_a")) return ExactInt(0);
  return std::nullopt;
}

std::string_view to_string(Method m) noexcept {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [method, text] : kMethodNames) {
    if (text == name) return method;
  }
  return std::nullopt;
}

const std::vector<SequenceInfo>& sequence_registry() {
  static const std::vector<SequenceInfo> registry = make_registry();
  return registry;
}

const SequenceInfo* find_sequence(std::string_view name) {
  for (const auto& s : sequence_registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::optional<int> method_limit(const SequenceInfo& s, Method m) {
  if (m == M::enumerate) return capacity(s.family);
  if (m == M::bruteforce) return kOracleMaxQt;
  return std::nullopt;
}

std::optional<int> method_routine_limit(const SequenceInfo& s, Method m) {
  if (m == M::enumerate) return s.family == Family::qt_semigroups ? 7 : 10;
  if (m == M::bruteforce) return 4;
  return std::nullopt;
}

ExactInt sequence_value(std::string_view name, int n, Method m) {
  const SequenceInfo* s = find_sequence(name);
  if (!s) throw InvalidArgument("unknown sequence '" + std::string(name) + "'");
  if (!supports(*s, m)) {
    throw InvalidArgument("sequence '" + std::string(name) +
                          "' has no method '" + std::string(to_string(m)) + "'");
  }
  if (n < s->min_n) {
    throw InvalidArgument("sequence '" + std::string(name) + "' starts at n = " +
                          std::to_string(s->min_n));
  }
  if (const auto limit = method_limit(*s, m); limit && n > *limit) {
    throw CapacityError("method '" + std::string(to_string(m)) +
                        "' is limited to n <= " + std::to_string(*limit) +
                        " for sequence '" + std::string(name) + "' (got n = " +
                        std::to_string(n) + ")");
  }
  if (m == M::enumerate || m == M::bruteforce) {
    if (auto v = boundary_convention(name, n)) return *v;
  }
  switch (m) {
    case M::enumerate:
      return count(FamilySpec{s->family, n, s->filters, std::nullopt});
    case M::bruteforce:
      return brute_count_qt_associative(n).count;
    default:
      return formula(name, n, m);
  }
}

bool SequenceTable::consistent() const {
  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t j = i + 1; j < values.size(); ++j) {
      if (values[i].n == values[j].n && values[i].value != values[j].value) {
        return false;
      }
    }
  }
  return true;
}

SequenceTable evaluate(std::string_view name, int n,
                       const std::vector<Method>& methods) {
  SequenceTable t;
  t.name = std::string(name);
  for (Method m : methods) t.values.push_back({n, sequence_value(name, n, m), m});
  return t;
}

}  // namespace qtsg
