#pragma once

// Finite binary operations on X_n given by their Cayley tables, with the
// usual property predicates and the contour-plot style graphical tests.

#include <compare>
#include <functional>
#include <span>
#include <vector>

#include "qtsg/order.hpp"

namespace qtsg {

enum class Side { left, right };

const char* to_string(Side s) noexcept;

// An n x n Cayley table over 1..n. Immutable after construction.
class FiniteBinOp {
 public:
  // Row-major: entries[(x-1)*n + (y-1)] = F(x, y). Every entry must lie in
  // 1..n.
  FiniteBinOp(int n, std::vector<Element> entries);

  static FiniteBinOp from_function(
      int n, const std::function<Element(Element, Element)>& f);

  int size() const noexcept { return n_; }
  Element operator()(Element x, Element y) const {
    return entries_[static_cast<size_t>((x - 1) * n_ + (y - 1))];
  }
  std::span<const Element> entries() const noexcept { return entries_; }

  friend bool operator==(const FiniteBinOp&, const FiniteBinOp&) = default;
  friend auto operator<=>(const FiniteBinOp& a, const FiniteBinOp& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int n_;
  std::vector<Element> entries_;
};

// Nondecreasing list of F-degrees.
struct DegreeSequence {
  std::vector<int> values;

  long long sum() const noexcept;
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

FiniteBinOp projection(int n, Side side);
// max under a total order.
FiniteBinOp maximum(const TotalOrder& t);

bool is_associative(const FiniteBinOp& f);
bool is_idempotent(const FiniteBinOp& f);
bool is_quasitrivial(const FiniteBinOp& f);
bool is_commutative(const FiniteBinOp& f);

// F(x,y) <= F(x',y') whenever x <= x' and y <= y'. Checks only the adjacent
// increments in each argument; monotone in each argument separately is
// equivalent to the joint condition.
bool is_order_preserving(const FiniteBinOp& f, const TotalOrder& t);
// Direct quantification over all quadruples. O(n^4); reference only.
bool is_order_preserving_by_definition(const FiniteBinOp& f,
                                       const TotalOrder& t);

ElementSet neutral_elements(const FiniteBinOp& f);
ElementSet annihilator_elements(const FiniteBinOp& f);

// Number of points (x,y) != (z,z) with F(x,y) = F(z,z).
int f_degree(const FiniteBinOp& f, Element z);
// degrees[z-1] = f_degree(f, z), unsorted.
std::vector<int> degrees(const FiniteBinOp& f);
DegreeSequence degree_sequence(const FiniteBinOp& f);

// Idempotent and every off-diagonal point (x,y) is F-connected to (x,x) or
// (y,y).
bool graphical_quasitriviality_test(const FiniteBinOp& f);

// For quasitrivial f: every rectangle {a,b} x {a,c} with only the vertex
// (a,a) on the diagonal has two F-connected vertices among the other three.
// Throws PreconditionViolation for non-quasitrivial input.
bool rectangle_associativity_test(const FiniteBinOp& f);

}  // namespace qtsg
