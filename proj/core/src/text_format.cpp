#include "qtsg/text_format.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "qtsg/error.hpp"

namespace qtsg {

// ---------------------------------------------------------------------------
// Emitters

std::string emit_weak_order(const WeakOrder& w) {
  std::ostringstream os;
  os << "weakorder " << w.size() << " :";
  for (int r : w.ranks()) os << ' ' << r;
  return os.str();
}

std::string emit_total_order(const TotalOrder& t) {
  std::ostringstream os;
  os << "totalorder " << t.size() << " :";
  for (Element x : t.sequence()) os << ' ' << x;
  return os.str();
}

std::string emit_cayley(const FiniteBinOp& f) {
  std::ostringstream os;
  os << "cayley " << f.size() << '\n';
  for (Element x = 1; x <= f.size(); ++x) {
    for (Element y = 1; y <= f.size(); ++y) {
      os << (y > 1 ? " " : "") << f(x, y);
    }
    os << '\n';
  }
  return os.str();
}

std::string emit_cayley_line(const FiniteBinOp& f) {
  std::ostringstream os;
  os << "cayley " << f.size() << " :";
  for (Element v : f.entries()) os << ' ' << v;
  return os.str();
}

std::string emit_choices(const KimuraDecomposition& d) {
  if (d.choices().empty()) return "none";
  const auto classes = equivalence_classes(d.order());
  std::ostringstream os;
  bool first = true;
  for (const auto& [rank, side] : d.choices()) {
    os << (first ? "" : " ") << '{';
    const auto& cls = classes[static_cast<size_t>(rank - 1)];
    for (size_t i = 0; i < cls.size(); ++i) os << (i ? "," : "") << cls[i];
    os << "}:" << to_string(side);
    first = false;
  }
  return os.str();
}

std::string describe(const WeakOrder& w) {
  std::ostringstream os;
  const auto classes = equivalence_classes(w);
  for (size_t i = 0; i < classes.size(); ++i) {
    if (i) os << " < ";
    for (size_t j = 0; j < classes[i].size(); ++j) {
      os << (j ? " ~ " : "") << classes[i][j];
    }
  }
  return os.str();
}

std::string describe(const TotalOrder& t) {
  std::ostringstream os;
  const auto seq = t.sequence();
  for (size_t i = 0; i < seq.size(); ++i) os << (i ? " < " : "") << seq[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsers

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

struct Line {
  std::string_view text;
  int number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 1;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({line, number});
    ++number;
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::vector<Token> tokenize(const Line& line) {
  std::vector<Token> out;
  const std::string_view s = line.text;
  size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    if (s[i] == '#') break;
    if (s[i] == ':') {
      out.push_back({s.substr(i, 1), line.number, static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && !is_space(s[j]) && s[j] != ':' && s[j] != '#') ++j;
    out.push_back({s.substr(i, j - i), line.number, static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool is_blank(const Line& line) { return tokenize(line).empty(); }

int end_column(const Line& line) { return static_cast<int>(line.text.size()) + 1; }

int to_int(const Token& t) {
  int v = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer, found '" + std::string(t.text) + "'",
                     t.line, t.column);
  }
  return v;
}

int parse_cardinality(const Token& t) {
  const int n = to_int(t);
  if (n < 0) throw ParseError("cardinality must be nonnegative", t.line, t.column);
  if (n > 64) throw ParseError("cardinality above 64 is not supported", t.line, t.column);
  return n;
}

// Parses "<keyword> <n> : v1 ... vm" from a single line and returns the
// values (each validated against [1, bound]).
std::vector<int> parse_header_line(const Line& line, std::string_view keyword,
                                   int& n_out, size_t (*expected)(int),
                                   int (*bound)(int)) {
  const auto tokens = tokenize(line);
  if (tokens.empty() || tokens[0].text != keyword) {
    throw ParseError("expected '" + std::string(keyword) + "'", line.number,
                     tokens.empty() ? 1 : tokens[0].column);
  }
  if (tokens.size() < 2) {
    throw ParseError("missing cardinality", line.number, end_column(line));
  }
  const int n = parse_cardinality(tokens[1]);
  if (tokens.size() < 3 || tokens[2].text != ":") {
    throw ParseError("expected ':' after cardinality", line.number,
                     tokens.size() < 3 ? end_column(line) : tokens[2].column);
  }
  const size_t want = expected(n);
  const size_t have = tokens.size() - 3;
  if (have < want) {
    throw ParseError("expected " + std::to_string(want) + " values, found " +
                         std::to_string(have),
                     line.number, end_column(line));
  }
  if (have > want) {
    const Token& extra = tokens[3 + want];
    throw ParseError("unexpected trailing value '" + std::string(extra.text) + "'",
                     extra.line, extra.column);
  }
  std::vector<int> values;
  values.reserve(want);
  for (size_t i = 3; i < tokens.size(); ++i) {
    const int v = to_int(tokens[i]);
    if (v < 1 || v > bound(n)) {
      throw ParseError("value " + std::to_string(v) + " outside 1.." +
                           std::to_string(bound(n)),
                       tokens[i].line, tokens[i].column);
    }
    values.push_back(v);
  }
  n_out = n;
  return values;
}

size_t linear(int n) { return static_cast<size_t>(n); }
size_t square(int n) { return static_cast<size_t>(n) * static_cast<size_t>(n); }
int identity(int n) { return n; }

WeakOrder weak_order_from_line(const Line& line) {
  int n = 0;
  auto values = parse_header_line(line, "weakorder", n, linear, identity);
  try {
    return WeakOrder::from_ranks(std::move(values));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line.number, 1);
  }
}

TotalOrder total_order_from_line(const Line& line) {
  int n = 0;
  auto values = parse_header_line(line, "totalorder", n, linear, identity);
  try {
    return TotalOrder::from_sequence(values);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line.number, 1);
  }
}

bool has_colon(const Line& line) {
  for (const auto& t : tokenize(line)) {
    if (t.text == ":") return true;
  }
  return false;
}

// Parses a Cayley table starting at lines[pos]; advances pos past it.
FiniteBinOp cayley_from_lines(const std::vector<Line>& lines, size_t& pos) {
  const Line& head = lines[pos];
  if (has_colon(head)) {
    int n = 0;
    auto values = parse_header_line(head, "cayley", n, square, identity);
    if (n < 1) throw ParseError("cayley needs n >= 1", head.number, 1);
    ++pos;
    return FiniteBinOp(n, std::move(values));
  }
  const auto tokens = tokenize(head);
  if (tokens.size() < 2) {
    throw ParseError("missing cardinality", head.number, end_column(head));
  }
  if (tokens.size() > 2) {
    throw ParseError("unexpected token '" + std::string(tokens[2].text) + "'",
                     tokens[2].line, tokens[2].column);
  }
  const int n = parse_cardinality(tokens[1]);
  if (n < 1) throw ParseError("cayley needs n >= 1", tokens[1].line, tokens[1].column);
  ++pos;
  std::vector<Element> entries;
  entries.reserve(square(n));
  for (int row = 0; row < n; ++row) {
    while (pos < lines.size() && is_blank(lines[pos])) ++pos;
    if (pos >= lines.size()) {
      const int last = lines.empty() ? 1 : lines.back().number;
      throw ParseError("expected " + std::to_string(n) + " rows, found " +
                           std::to_string(row),
                       last, 1);
    }
    const Line& line = lines[pos];
    const auto row_tokens = tokenize(line);
    if (row_tokens.size() != static_cast<size_t>(n)) {
      if (row_tokens.size() > static_cast<size_t>(n)) {
        const Token& extra = row_tokens[static_cast<size_t>(n)];
        throw ParseError("row has more than " + std::to_string(n) + " entries",
                         extra.line, extra.column);
      }
      throw ParseError("row has " + std::to_string(row_tokens.size()) +
                           " entries, expected " + std::to_string(n),
                       line.number, end_column(line));
    }
    for (const auto& t : row_tokens) {
      const int v = to_int(t);
      if (v < 1 || v > n) {
        throw ParseError("entry " + std::to_string(v) + " outside 1.." +
                             std::to_string(n),
                         t.line, t.column);
      }
      entries.push_back(v);
    }
    ++pos;
  }
  return FiniteBinOp(n, std::move(entries));
}

TextObject object_at(const std::vector<Line>& lines, size_t& pos) {
  const Line& line = lines[pos];
  const auto tokens = tokenize(line);
  const std::string_view kw = tokens.front().text;
  if (kw == "weakorder") {
    ++pos;
    return weak_order_from_line(line);
  }
  if (kw == "totalorder") {
    ++pos;
    return total_order_from_line(line);
  }
  if (kw == "cayley") return cayley_from_lines(lines, pos);
  throw ParseError("unknown object keyword '" + std::string(kw) + "'",
                   line.number, tokens.front().column);
}

void skip_blank(const std::vector<Line>& lines, size_t& pos) {
  while (pos < lines.size() && is_blank(lines[pos])) ++pos;
}

template <typename T>
T parse_single(std::string_view text, const char* what) {
  const auto lines = split_lines(text);
  size_t pos = 0;
  skip_blank(lines, pos);
  if (pos >= lines.size()) throw ParseError(std::string("empty input, expected ") + what, 1, 1);
  TextObject obj = object_at(lines, pos);
  const int obj_line = lines[pos - 1].number;
  skip_blank(lines, pos);
  if (pos < lines.size()) {
    throw ParseError("unexpected content after the object", lines[pos].number, 1);
  }
  if (auto* v = std::get_if<T>(&obj)) return std::move(*v);
  throw ParseError(std::string("expected ") + what, obj_line, 1);
}

}  // namespace

WeakOrder parse_weak_order(std::string_view text) {
  return parse_single<WeakOrder>(text, "a weakorder");
}

TotalOrder parse_total_order(std::string_view text) {
  return parse_single<TotalOrder>(text, "a totalorder");
}

FiniteBinOp parse_cayley(std::string_view text) {
  return parse_single<FiniteBinOp>(text, "a cayley table");
}

TextObject parse_object(std::string_view text) {
  const auto lines = split_lines(text);
  size_t pos = 0;
  skip_blank(lines, pos);
  if (pos >= lines.size()) throw ParseError("empty input", 1, 1);
  TextObject obj = object_at(lines, pos);
  skip_blank(lines, pos);
  if (pos < lines.size()) {
    throw ParseError("unexpected content after the object", lines[pos].number, 1);
  }
  return obj;
}

std::vector<TextObject> parse_document(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<TextObject> out;
  size_t pos = 0;
  for (skip_blank(lines, pos); pos < lines.size(); skip_blank(lines, pos)) {
    out.push_back(object_at(lines, pos));
  }
  return out;
}

}  // namespace qtsg
