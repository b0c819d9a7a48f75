#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtsg/counting.hpp"
#include "qtsg/enumeration.hpp"
#include "qtsg/error.hpp"
#include "qtsg/oracle.hpp"
#include "qtsg/render.hpp"
#include "qtsg/sequences.hpp"
#include "qtsg/structure.hpp"
#include "qtsg/text_format.hpp"

namespace qtsg::cli {

namespace {

// Bad command line or unreadable input; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output;

  std::string name;
  int n_positional = -1;
  int n = -1;
  std::string method;
  bool all_methods = false;

  std::string family;
  std::vector<std::string> filters;
  std::string reference;
  std::string format;
  int shards = 1;
  int shard = 0;
  bool count_only = false;

  std::string input = "-";
  bool find_order = false;

  std::string render_kind;
  std::string oracle_check;
  std::string level = "quick";

  int size() const { return n >= 0 ? n : n_positional; }
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

template <typename T>
std::optional<T> first_of(const std::vector<TextObject>& doc) {
  for (const auto& obj : doc) {
    if (const auto* p = std::get_if<T>(&obj)) return *p;
  }
  return std::nullopt;
}

FiniteBinOp read_operation(const std::string& path) {
  const auto doc = parse_document(read_input(path));
  auto f = first_of<FiniteBinOp>(doc);
  if (!f) throw UsageError("'" + path + "' contains no cayley table");
  return *f;
}

// "4,3,5,2,1,6", "4 3 5 2 1 6", "4<3<5" or a totalorder line; smallest first.
TotalOrder parse_reference(const std::string& text) {
  if (text.rfind("totalorder", 0) == 0) return parse_total_order(text);
  std::string cleaned = text;
  std::replace_if(cleaned.begin(), cleaned.end(),
                  [](char c) { return c == ',' || c == '<'; }, ' ');
  std::istringstream in(cleaned);
  std::vector<Element> seq;
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      seq.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad element '" + tok + "' in order '" + text + "'");
    }
  }
  return TotalOrder::from_sequence(seq);
}

std::optional<TotalOrder> reference_option(const Options& o) {
  if (o.reference.empty()) return std::nullopt;
  return parse_reference(o.reference);
}

void require_size(const TotalOrder& t, int n, const char* what) {
  if (t.size() != n) {
    throw InvalidArgument(std::string(what) + " has " + std::to_string(t.size()) +
                          " elements, expected " + std::to_string(n));
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string element_list(const ElementSet& s) {
  if (s.empty()) return "none";
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

// ---------------------------------------------------------------------------

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const SequenceInfo* info = find_sequence(o.name);
  if (!info) throw UsageError("unknown sequence '" + o.name + "'");
  const int n = o.size();
  if (n < 0) throw UsageError("count needs n");

  std::vector<Method> methods;
  const bool all = o.all_methods || o.method == "all";
  if (all) {
    for (Method m : info->methods) {
      const auto limit = method_routine_limit(*info, m);
      if (limit && n > *limit) {
        err << "note: skipping method " << to_string(m) << " (routine limit n <= "
            << *limit << ")\n";
        continue;
      }
      methods.push_back(m);
    }
  } else if (o.method.empty()) {
    methods.push_back(info->methods.front());
  } else {
    const auto m = parse_method(o.method);
    if (!m) throw UsageError("unknown method '" + o.method + "'");
    methods.push_back(*m);
  }

  const SequenceTable table = evaluate(info->name, n, methods);
  for (const auto& e : table.values) {
    out << table.name << ' ' << e.n << ' ' << e.value.str() << ' '
        << to_string(e.method) << '\n';
  }
  if (!all) return kOk;
  if (table.consistent()) {
    out << table.name << ' ' << n << " MATCH (" << table.values.size()
        << " methods)\n";
    return kOk;
  }
  out << table.name << ' ' << n << " MISMATCH\n";
  err << "error: methods disagree for " << table.name << "(" << n << ")\n";
  return kCheckFailed;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream&) {
  const auto family = parse_family(o.family);
  if (!family) throw UsageError("unknown family '" + o.family + "'");
  FamilySpec spec;
  spec.family = *family;
  spec.n = o.size();
  if (spec.n < 0) throw UsageError("enumerate needs --n");
  for (const auto& name : o.filters) {
    const auto f = parse_filter(name);
    if (!f) throw UsageError("unknown filter '" + name + "'");
    spec.filters.push_back(*f);
  }
  spec.reference = reference_option(o);
  const std::string format = o.format.empty() ? "line" : o.format;
  if (format != "line" && format != "table") {
    throw UsageError("enumerate --format must be line or table");
  }

  FamilyStream stream(spec, o.shard, o.shards);
  unsigned long long total = 0;
  while (auto obj = stream.next()) {
    ++total;
    if (o.count_only) continue;
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, TotalOrder>) {
            out << emit_total_order(x) << '\n';
          } else if constexpr (std::is_same_v<T, WeakOrder>) {
            out << emit_weak_order(x) << '\n';
          } else if (format == "table") {
            out << emit_cayley(x) << '\n';
          } else {
            out << emit_cayley_line(x) << '\n';
          }
        },
        *obj);
  }
  if (o.count_only) out << total << '\n';
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream&) {
  const FiniteBinOp f = read_operation(o.input);
  const int n = f.size();
  out << "n: " << n << '\n'
      << "associative: " << yes_no(is_associative(f)) << '\n'
      << "quasitrivial: " << yes_no(is_quasitrivial(f)) << '\n'
      << "idempotent: " << yes_no(is_idempotent(f)) << '\n'
      << "commutative: " << yes_no(is_commutative(f)) << '\n'
      << "neutral: " << element_list(neutral_elements(f)) << '\n'
      << "annihilator: " << element_list(annihilator_elements(f)) << '\n';
  const auto degs = degree_sequence(f).values;
  out << "degree_sequence:";
  for (int d : degs) out << ' ' << d;
  out << '\n';

  int status = kOk;
  if (const auto ref = reference_option(o)) {
    require_size(*ref, n, "reference order");
    const bool mono = is_order_preserving(f, *ref);
    out << "order_preserving_for_reference: " << yes_no(mono) << '\n';
  }
  if (o.find_order) {
    const MonotonizingSearch s = search_monotonizing_order(f);
    if (s.order) {
      out << "order-preserving total ordering: " << emit_total_order(*s.order)
          << '\n';
    } else {
      out << "no order-preserving total ordering exists (" << s.examined << '/'
          << s.total << " rejected)\n";
      status = kCheckFailed;
    }
  }
  return status;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream&) {
  const FiniteBinOp f = read_operation(o.input);
  TotalOrder ref = TotalOrder::natural(f.size());
  if (const auto r = reference_option(o)) {
    require_size(*r, f.size(), "reference order");
    ref = *r;
  }
  out << to_text(classify(f, ref));
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const FiniteBinOp f = read_operation(o.input);
  if (!is_quasitrivial(f)) {
    err << "decompose: not quasitrivial\n";
    return kCheckFailed;
  }
  if (!is_associative(f)) {
    err << "decompose: not associative\n";
    return kCheckFailed;
  }
  const KimuraDecomposition d = decompose(f);
  out << emit_weak_order(d.order()) << '\n' << "choices: " << emit_choices(d) << '\n';
  return kOk;
}

RenderFormat render_format(const Options& o) {
  const auto f = parse_render_format(o.format.empty() ? "ascii" : o.format);
  if (!f) throw UsageError("render --format must be ascii or svg");
  return *f;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream&) {
  const auto doc = parse_document(read_input(o.input));
  const RenderFormat format = render_format(o);
  std::optional<TotalOrder> ref = reference_option(o);
  if (!ref) ref = first_of<TotalOrder>(doc);

  if (o.render_kind == "contour") {
    const auto f = first_of<FiniteBinOp>(doc);
    if (!f) throw UsageError("contour plot needs a cayley table");
    const TotalOrder axis = ref ? *ref : TotalOrder::natural(f->size());
    require_size(axis, f->size(), "axis order");
    out << render_contour(*f, axis, format);
    return kOk;
  }
  if (o.render_kind == "profile") {
    std::optional<WeakOrder> w = first_of<WeakOrder>(doc);
    if (!w) {
      const auto f = first_of<FiniteBinOp>(doc);
      if (!f) throw UsageError("profile plot needs a weakorder or a cayley table");
      w = induced_weak_order(*f);
    }
    const TotalOrder t = ref ? *ref : TotalOrder::natural(w->size());
    require_size(t, w->size(), "reference order");
    out << render_profile(t, *w, format);
    return kOk;
  }
  throw UsageError("render kind must be contour or profile");
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const int n = o.size();
  if (n < 0) throw UsageError("oracle needs --n");
  const std::string& c = o.oracle_check;
  if (c == "qt-count") {
    const OracleCount r = brute_count_qt_associative(n, o.shard, o.shards);
    out << "qt-count n=" << n;
    if (o.shards > 1) out << " shard=" << o.shard << '/' << o.shards;
    out << ' ' << r.count.str() << " visited=" << r.visited << '\n';
    return kOk;
  }
  if (c == "monotonizable") {
    out << "monotonizable n=" << n << ' ' << brute_count_monotonizable(n).str() << '\n';
    return kOk;
  }
  if (c == "lemma-cd" || c == "lemma-qia") {
    const LemmaCheck r =
        c == "lemma-cd" ? brute_verify_lemma_cd(n) : brute_verify_lemma_qia(n);
    out << c << " n=" << n << ' ' << (r.holds ? "PASS" : "FAIL") << " ("
        << r.examined << " tables)\n";
    if (r.counterexample) {
      out << emit_cayley(*r.counterexample);
      err << c << ": counterexample found\n";
    }
    return r.holds ? kOk : kCheckFailed;
  }
  throw UsageError("unknown oracle check '" + c +
                   "' (qt-count, lemma-cd, lemma-qia, monotonizable)");
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err,
               const Goldens& goldens) {
  VerifyLevel level;
  if (o.level == "quick") {
    level = VerifyLevel::quick;
  } else if (o.level == "full") {
    level = VerifyLevel::full;
  } else {
    throw UsageError("verify --level must be quick or full");
  }
  const VerifyReport r = run_verify(level, goldens, out);
  if (r.ok()) {
    out << "PASS (" << r.checks << " checks)\n";
    return kOk;
  }
  out << "FAIL (" << r.failures.size() << " of " << r.checks << " checks)\n";
  for (const auto& f : r.failures) err << "failed: " << f << '\n';
  return kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  return run(args, out, err, default_goldens());
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Goldens& goldens) {
  Options o;
  CLI::App app{"Quasitrivial semigroups: construction, classification, counting"};
  app.name("qtsg");
  app.require_subcommand(1);
  app.add_option("--output", o.output, "Write data to this file instead of stdout");

  auto* count = app.add_subcommand("count", "Exact value of a named sequence");
  count->add_option("name", o.name, "q, q_e, q_a, q_ea, u, u_e, u_a, u_ea, v, v_e, "
                                    "v_a, v_ea, p, sp, comm")
      ->required();
  count->add_option("size", o.n_positional, "n");
  count->add_option("--n", o.n, "n");
  count->add_option("--method", o.method,
                    "closed, recurrence, gf, egf, appendix, enumerate, bruteforce, all");
  count->add_flag("--all-methods", o.all_methods, "Every method, cross-checked");

  auto* enumerate = app.add_subcommand("enumerate", "List the objects of a family");
  enumerate->add_option("family", o.family,
                        "total-orders, weak-orders, single-peaked-total-orders, "
                        "weakly-single-peaked-weak-orders, qt-semigroups")
      ->required();
  enumerate->add_option("--n", o.n, "Size of the carrier")->required();
  enumerate->add_option("--filter", o.filters, "Repeatable");
  enumerate->add_option("--reference", o.reference, "Reference order, smallest first");
  enumerate->add_option("--format", o.format, "line (default) or table");
  enumerate->add_option("--shards", o.shards, "Number of shards");
  enumerate->add_option("--shard", o.shard, "Shard index in 0..shards-1");
  enumerate->add_flag("--count", o.count_only, "Print only the number of objects");

  auto* check = app.add_subcommand("check", "Property report for a Cayley table");
  check->add_option("file", o.input, "Input file, - for stdin");
  check->add_option("--reference", o.reference, "Reference order, smallest first");
  check->add_flag("--find-order", o.find_order,
                  "Search for a total order the operation preserves");

  auto* classify_cmd = app.add_subcommand("classify", "Full classification report");
  classify_cmd->add_option("file", o.input, "Input file, - for stdin");
  classify_cmd->add_option("--reference", o.reference, "Reference order");

  auto* decompose_cmd = app.add_subcommand("decompose", "Weak order and projections");
  decompose_cmd->add_option("file", o.input, "Input file, - for stdin");

  auto* render = app.add_subcommand("render", "Contour or profile plot");
  render->add_option("kind", o.render_kind, "contour or profile")->required();
  render->add_option("file", o.input, "Input file, - for stdin");
  render->add_option("--reference", o.reference, "Axis / reference order");
  render->add_option("--format", o.format, "ascii (default) or svg");

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference searches");
  oracle->add_option("check", o.oracle_check,
                     "qt-count, lemma-cd, lemma-qia, monotonizable")
      ->required();
  oracle->add_option("--n", o.n, "Size of the carrier")->required();
  oracle->add_option("--shards", o.shards, "Number of shards (qt-count)");
  oracle->add_option("--shard", o.shard, "Shard index (qt-count)");

  auto* verify = app.add_subcommand("verify", "Run the self-check suite");
  verify->add_option("--level", o.level, "quick or full");

  for (auto* sub : {count, enumerate, check, classify_cmd, decompose_cmd, render,
                    oracle, verify}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  std::ostringstream data;
  int status = kOk;
  try {
    if (count->parsed()) {
      status = cmd_count(o, data, err);
    } else if (enumerate->parsed()) {
      status = cmd_enumerate(o, data, err);
    } else if (check->parsed()) {
      status = cmd_check(o, data, err);
    } else if (classify_cmd->parsed()) {
      status = cmd_classify(o, data, err);
    } else if (decompose_cmd->parsed()) {
      status = cmd_decompose(o, data, err);
    } else if (render->parsed()) {
      status = cmd_render(o, data, err);
    } else if (oracle->parsed()) {
      status = cmd_oracle(o, data, err);
    } else if (verify->parsed()) {
      status = cmd_verify(o, data, err, goldens);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }

  if (o.output.empty()) {
    out << data.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!(file << data.str())) {
      err << "error: cannot write '" << o.output << "'\n";
      return kUsage;
    }
  }
  return status;
}

}  // namespace qtsg::cli
