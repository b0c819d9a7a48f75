#pragma once

// Brute-force reference searches over raw table space. This code shares
// nothing with the structural enumeration: tables are flat byte arrays, the
// associativity test is the plain triple loop, and candidates come from an
// integer counter.

#include <cstdint>
#include <optional>

#include "qtsg/exact.hpp"
#include "qtsg/magma.hpp"

namespace qtsg {

constexpr int kOracleMaxQt = 5;
constexpr int kOracleMaxLemmaCd = 3;
constexpr int kOracleMaxLemmaQia = 5;
constexpr int kOracleMaxMonotonizable = 4;

struct OracleCount {
  ExactInt count;
  // Candidate tables inspected; the full search visits 2^(n(n-1)).
  std::uint64_t visited = 0;
};

// Counts associative quasitrivial tables on X_n. Off-diagonal cells (x,y),
// x != y, taken row by row, are the bits of a counter: 0 picks x, 1 picks y.
// Shard i of k covers the i-th contiguous slice of the counter range, i.e.
// fixes the high-order bits. Throws CapacityError for n > 5.
OracleCount brute_count_qt_associative(int n, int shard_index = 0,
                                       int shard_count = 1);

struct LemmaCheck {
  bool holds = true;
  std::uint64_t examined = 0;
  std::optional<FiniteBinOp> counterexample;
};

// Every idempotent, associative, <=_n-preserving table with a neutral element
// is quasitrivial. Searches all n^(n(n-1)) idempotent tables; n <= 3.
LemmaCheck brute_verify_lemma_cd(int n);

// Every commutative quasitrivial <=_n-preserving table is associative.
// Searches all 2^(n(n-1)/2) such tables; n <= 5.
LemmaCheck brute_verify_lemma_qia(int n);

// Associative quasitrivial operations that preserve some total order; runs
// the monotonizing search over the structural enumeration. n <= 4.
ExactInt brute_count_monotonizable(int n);

}  // namespace qtsg
