#pragma once

// Plain-text encodings used by the CLI and the test fixtures.
//
//   weakorder <n> : r1 r2 ... rn      ranks of elements 1..n, onto 1..k
//   totalorder <n> : p1 p2 ... pn     elements from smallest to largest
//   cayley <n>                        followed by n rows; row i holds
//   F(i,1) ... F(i,n)                 F(i,1) .. F(i,n)
//   cayley <n> : v11 v12 ... vnn      single-line, row-major
//
// Parsers report failures as ParseError carrying a 1-based line and column.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qtsg/magma.hpp"
#include "qtsg/order.hpp"
#include "qtsg/structure.hpp"

namespace qtsg {

std::string emit_weak_order(const WeakOrder& w);
std::string emit_total_order(const TotalOrder& t);
// Multi-line form, trailing newline included.
std::string emit_cayley(const FiniteBinOp& f);
// Single-line form without newline.
std::string emit_cayley_line(const FiniteBinOp& f);
// "{1,3}:right {5,6}:left" or "none".
std::string emit_choices(const KimuraDecomposition& d);

// Human-readable "2 < 1 ~ 3 < 4".
std::string describe(const WeakOrder& w);
std::string describe(const TotalOrder& t);

WeakOrder parse_weak_order(std::string_view text);
TotalOrder parse_total_order(std::string_view text);
// Accepts both Cayley forms.
FiniteBinOp parse_cayley(std::string_view text);

using TextObject = std::variant<WeakOrder, TotalOrder, FiniteBinOp>;

// Reads one object of any kind, dispatching on the leading keyword.
TextObject parse_object(std::string_view text);

// Every object in a document: blank lines and `#` comments are skipped,
// multi-line Cayley tables are consumed whole.
std::vector<TextObject> parse_document(std::string_view text);

}  // namespace qtsg
