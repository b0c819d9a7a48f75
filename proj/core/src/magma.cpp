#include "qtsg/magma.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qtsg/error.hpp"

namespace qtsg {

const char* to_string(Side s) noexcept {
  return s == Side::left ? "left" : "right";
}

FiniteBinOp::FiniteBinOp(int n, std::vector<Element> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw InvalidArgument("operation needs n >= 1");
  if (entries_.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw InvalidArgument("Cayley table of order " + std::to_string(n) +
                          " needs " + std::to_string(n * n) + " entries, got " +
                          std::to_string(entries_.size()));
  }
  for (size_t i = 0; i < entries_.size(); ++i) {
    const Element v = entries_[i];
    if (v < 1 || v > n) {
      throw InvalidArgument("entry F(" + std::to_string(i / n + 1) + "," +
                            std::to_string(i % n + 1) + ") = " +
                            std::to_string(v) + " outside 1.." +
                            std::to_string(n));
    }
  }
}

FiniteBinOp FiniteBinOp::from_function(
    int n, const std::function<Element(Element, Element)>& f) {
  std::vector<Element> e;
  e.reserve(static_cast<size_t>(n * n));
  for (Element x = 1; x <= n; ++x) {
    for (Element y = 1; y <= n; ++y) e.push_back(f(x, y));
  }
  return FiniteBinOp(n, std::move(e));
}

long long DegreeSequence::sum() const noexcept {
  return std::accumulate(values.begin(), values.end(), 0LL);
}

FiniteBinOp projection(int n, Side side) {
  return FiniteBinOp::from_function(n, [side](Element x, Element y) {
    return side == Side::left ? x : y;
  });
}

FiniteBinOp maximum(const TotalOrder& t) {
  return FiniteBinOp::from_function(t.size(), [&t](Element x, Element y) {
    return t.less(x, y) ? y : x;
  });
}

bool is_associative(const FiniteBinOp& f) {
  const int n = f.size();
  for (Element x = 1; x <= n; ++x) {
    for (Element y = 1; y <= n; ++y) {
      const Element xy = f(x, y);
      for (Element z = 1; z <= n; ++z) {
        if (f(xy, z) != f(x, f(y, z))) return false;
      }
    }
  }
  return true;
}

bool is_idempotent(const FiniteBinOp& f) {
  for (Element x = 1; x <= f.size(); ++x) {
    if (f(x, x) != x) return false;
  }
  return true;
}

bool is_quasitrivial(const FiniteBinOp& f) {
  for (Element x = 1; x <= f.size(); ++x) {
    for (Element y = 1; y <= f.size(); ++y) {
      const Element v = f(x, y);
      if (v != x && v != y) return false;
    }
  }
  return true;
}

bool is_commutative(const FiniteBinOp& f) {
  for (Element x = 1; x <= f.size(); ++x) {
    for (Element y = x + 1; y <= f.size(); ++y) {
      if (f(x, y) != f(y, x)) return false;
    }
  }
  return true;
}

bool is_order_preserving(const FiniteBinOp& f, const TotalOrder& t) {
  if (f.size() != t.size()) {
    throw InvalidArgument("operation and order have different cardinalities");
  }
  const auto seq = t.sequence();
  const int n = f.size();
  for (int i = 0; i < n; ++i) {
    const Element x = seq[static_cast<size_t>(i)];
    for (int j = 0; j + 1 < n; ++j) {
      const Element y0 = seq[static_cast<size_t>(j)];
      const Element y1 = seq[static_cast<size_t>(j + 1)];
      if (t.less(f(x, y1), f(x, y0))) return false;
      if (t.less(f(y1, x), f(y0, x))) return false;
    }
  }
  return true;
}

bool is_order_preserving_by_definition(const FiniteBinOp& f,
                                       const TotalOrder& t) {
  if (f.size() != t.size()) {
    throw InvalidArgument("operation and order have different cardinalities");
  }
  const int n = f.size();
  for (Element x = 1; x <= n; ++x) {
    for (Element x2 = 1; x2 <= n; ++x2) {
      if (t.less(x2, x)) continue;
      for (Element y = 1; y <= n; ++y) {
        for (Element y2 = 1; y2 <= n; ++y2) {
          if (t.less(y2, y)) continue;
          if (t.less(f(x2, y2), f(x, y))) return false;
        }
      }
    }
  }
  return true;
}

ElementSet neutral_elements(const FiniteBinOp& f) {
  ElementSet out;
  for (Element e = 1; e <= f.size(); ++e) {
    bool ok = true;
    for (Element x = 1; x <= f.size() && ok; ++x) {
      ok = f(x, e) == x && f(e, x) == x;
    }
    if (ok) out.push_back(e);
  }
  return out;
}

ElementSet annihilator_elements(const FiniteBinOp& f) {
  ElementSet out;
  for (Element a = 1; a <= f.size(); ++a) {
    bool ok = true;
    for (Element x = 1; x <= f.size() && ok; ++x) {
      ok = f(x, a) == a && f(a, x) == a;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

int f_degree(const FiniteBinOp& f, Element z) {
  if (z < 1 || z > f.size()) {
    throw InvalidArgument("element " + std::to_string(z) + " outside 1.." +
                          std::to_string(f.size()));
  }
  const Element target = f(z, z);
  const auto e = f.entries();
  // (z,z) itself always matches.
  return static_cast<int>(std::count(e.begin(), e.end(), target)) - 1;
}

std::vector<int> degrees(const FiniteBinOp& f) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(f.size()));
  for (Element z = 1; z <= f.size(); ++z) out.push_back(f_degree(f, z));
  return out;
}

DegreeSequence degree_sequence(const FiniteBinOp& f) {
  DegreeSequence d{degrees(f)};
  std::sort(d.values.begin(), d.values.end());
  return d;
}

bool graphical_quasitriviality_test(const FiniteBinOp& f) {
  if (!is_idempotent(f)) return false;
  for (Element x = 1; x <= f.size(); ++x) {
    for (Element y = 1; y <= f.size(); ++y) {
      if (x == y) continue;
      const Element v = f(x, y);
      if (v != f(x, x) && v != f(y, y)) return false;
    }
  }
  return true;
}

bool rectangle_associativity_test(const FiniteBinOp& f) {
  if (!is_quasitrivial(f)) {
    throw PreconditionViolation(
        "rectangle associativity test requires a quasitrivial operation");
  }
  const int n = f.size();
  for (Element a = 1; a <= n; ++a) {
    for (Element b = 1; b <= n; ++b) {
      if (b == a) continue;
      for (Element c = 1; c <= n; ++c) {
        if (c == a || c == b) continue;
        // Vertices (a,a), (a,c), (b,a), (b,c).
        const Element p = f(a, c);
        const Element q = f(b, a);
        const Element r = f(b, c);
        if (p != q && p != r && q != r) return false;
      }
    }
  }
  return true;
}

}  // namespace qtsg
