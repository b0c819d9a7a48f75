#include "qtsg/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qtsg/enumeration.hpp"
#include "qtsg/error.hpp"
#include "qtsg/structure.hpp"

namespace qtsg {

namespace {

constexpr int kCells = 25;
using Table = std::array<std::uint8_t, kCells>;  // 0-based values, row-major

void check_range(int n, int max, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + " needs n >= 1");
  if (n > max) {
    throw CapacityError(std::string(what) + " is limited to n <= " +
                        std::to_string(max) + " (got n = " + std::to_string(n) +
                        ")");
  }
}

bool associative(const Table& t, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = t[static_cast<size_t>(x * n + y)];
      for (int z = 0; z < n; ++z) {
        const int yz = t[static_cast<size_t>(y * n + z)];
        if (t[static_cast<size_t>(xy * n + z)] != t[static_cast<size_t>(x * n + yz)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// x <= x' and y <= y' imply t(x,y) <= t(x',y'), checked over all quadruples.
bool preserves_natural(const Table& t, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int x2 = x; x2 < n; ++x2) {
        for (int y2 = y; y2 < n; ++y2) {
          if (t[static_cast<size_t>(x * n + y)] > t[static_cast<size_t>(x2 * n + y2)]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool has_neutral(const Table& t, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = t[static_cast<size_t>(x * n + e)] == x && t[static_cast<size_t>(e * n + x)] == x;
    }
    if (ok) return true;
  }
  return false;
}

bool quasitrivial(const Table& t, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int v = t[static_cast<size_t>(x * n + y)];
      if (v != x && v != y) return false;
    }
  }
  return true;
}

FiniteBinOp to_op(const Table& t, int n) {
  std::vector<Element> entries(static_cast<size_t>(n * n));
  for (size_t i = 0; i < entries.size(); ++i) entries[i] = t[i] + 1;
  return FiniteBinOp(n, std::move(entries));
}

}  // namespace

OracleCount brute_count_qt_associative(int n, int shard_index, int shard_count) {
  check_range(n, kOracleMaxQt, "brute_count_qt_associative");
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count) {
    throw InvalidArgument("shard index must lie in 0..shard_count-1");
  }
  const int bits = n * (n - 1);
  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::uint64_t lo = total / static_cast<std::uint64_t>(shard_count) *
                               static_cast<std::uint64_t>(shard_index) +
                           std::min<std::uint64_t>(static_cast<std::uint64_t>(shard_index),
                                                   total % static_cast<std::uint64_t>(shard_count));
  const std::uint64_t len = total / static_cast<std::uint64_t>(shard_count) +
                            (static_cast<std::uint64_t>(shard_index) <
                                     total % static_cast<std::uint64_t>(shard_count)
                                 ? 1
                                 : 0);

  Table t{};
  for (int x = 0; x < n; ++x) t[static_cast<size_t>(x * n + x)] = static_cast<std::uint8_t>(x);

  OracleCount out;
  std::uint64_t found = 0;
  for (std::uint64_t mask = lo; mask < lo + len; ++mask) {
    int bit = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        t[static_cast<size_t>(x * n + y)] =
            static_cast<std::uint8_t>(((mask >> bit) & 1U) ? y : x);
        ++bit;
      }
    }
    ++out.visited;
    if (associative(t, n)) ++found;
  }
  if (shard_count == 1 && out.visited != total) {
    throw InternalConsistencyError("oracle visited " + std::to_string(out.visited) +
                                   " tables, expected " + std::to_string(total));
  }
  out.count = found;
  return out;
}

LemmaCheck brute_verify_lemma_cd(int n) {
  check_range(n, kOracleMaxLemmaCd, "brute_verify_lemma_cd");
  const int cells = n * (n - 1);
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= static_cast<std::uint64_t>(n);

  Table t{};
  for (int x = 0; x < n; ++x) t[static_cast<size_t>(x * n + x)] = static_cast<std::uint8_t>(x);

  LemmaCheck out;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        t[static_cast<size_t>(x * n + y)] = static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(n));
        rest /= static_cast<std::uint64_t>(n);
      }
    }
    ++out.examined;
    if (!associative(t, n) || !preserves_natural(t, n) || !has_neutral(t, n)) continue;
    if (!quasitrivial(t, n)) {
      out.holds = false;
      out.counterexample = to_op(t, n);
      return out;
    }
  }
  return out;
}

LemmaCheck brute_verify_lemma_qia(int n) {
  check_range(n, kOracleMaxLemmaQia, "brute_verify_lemma_qia");
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;

  Table t{};
  for (int x = 0; x < n; ++x) t[static_cast<size_t>(x * n + x)] = static_cast<std::uint8_t>(x);

  LemmaCheck out;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    int bit = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        const auto v = static_cast<std::uint8_t>(((mask >> bit) & 1U) ? y : x);
        t[static_cast<size_t>(x * n + y)] = v;
        t[static_cast<size_t>(y * n + x)] = v;
        ++bit;
      }
    }
    ++out.examined;
    if (!preserves_natural(t, n)) continue;
    if (!associative(t, n)) {
      out.holds = false;
      out.counterexample = to_op(t, n);
      return out;
    }
  }
  return out;
}

ExactInt brute_count_monotonizable(int n) {
  check_range(n, kOracleMaxMonotonizable, "brute_count_monotonizable");
  FamilyStream stream(FamilySpec{Family::qt_semigroups, n, {}, std::nullopt});
  unsigned long long found = 0;
  while (auto obj = stream.next()) {
    if (exists_monotonizing_order(std::get<FiniteBinOp>(*obj))) ++found;
  }
  return ExactInt(found);
}

}  // namespace qtsg
