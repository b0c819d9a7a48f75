#include "qtsg/render.hpp"

#include <algorithm>
#include <sstream>

#include "qtsg/error.hpp"
#include "qtsg/text_format.hpp"

namespace qtsg {

namespace {

constexpr int kStep = 40;
constexpr int kMargin = 40;

int digits(int n) {
  int d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

std::string pad(int value, int width) {
  std::string s = std::to_string(value);
  return std::string(static_cast<size_t>(std::max(0, width - static_cast<int>(s.size()))), ' ') + s;
}

std::string set_text(const ElementSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void svg_open(std::ostringstream& os, int width, int height) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
}

void polyline(std::ostringstream& os, const std::vector<std::pair<int, int>>& pts,
              const char* extra) {
  os << "<polyline fill=\"none\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    os << (i ? " " : "") << pts[i].first << ',' << pts[i].second;
  }
  os << "\"" << extra << "/>\n";
}

}  // namespace

std::optional<RenderFormat> parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  return std::nullopt;
}

ContourPlot contour_plot(const FiniteBinOp& f, const TotalOrder& axis) {
  if (axis.size() != f.size()) {
    throw InvalidArgument("axis order size does not match the operation");
  }
  ContourPlot p;
  p.n = f.size();
  p.axis_order = axis;
  for (Element y : axis.sequence()) {
    for (Element x : axis.sequence()) p.level_sets[f(x, y)].emplace_back(x, y);
  }
  return p;
}

std::string render_contour(const FiniteBinOp& f, const TotalOrder& axis,
                           RenderFormat format) {
  const ContourPlot plot = contour_plot(f, axis);
  const int n = plot.n;
  const auto seq = axis.sequence();
  std::ostringstream os;

  if (format == RenderFormat::ascii) {
    const int w = digits(n);
    os << "contour " << n << " axis:";
    for (Element a : seq) os << ' ' << a;
    os << '\n';
    for (Element x : seq) {
      for (size_t j = 0; j < seq.size(); ++j) {
        os << (j ? " " : "") << pad(f(x, seq[j]), w);
      }
      os << '\n';
    }
    return os.str();
  }

  const int size = 2 * kMargin + (n - 1) * kStep;
  auto px = [&](Element x) { return kMargin + (axis.rank(x) - 1) * kStep; };
  auto py = [&](Element y) { return size - kMargin - (axis.rank(y) - 1) * kStep; };

  svg_open(os, size, size);
  os << "<g class=\"axes\" font-family=\"monospace\" font-size=\"12\" "
        "text-anchor=\"middle\">\n";
  for (Element a : seq) {
    os << "<text x=\"" << px(a) << "\" y=\"" << size - kMargin / 3 << "\">" << a
       << "</text>\n";
    os << "<text x=\"" << kMargin / 3 << "\" y=\"" << py(a) + 4 << "\">" << a
       << "</text>\n";
  }
  os << "</g>\n";

  for (const auto& [value, points] : plot.level_sets) {
    os << "<g class=\"level\" data-value=\"" << value
       << "\" stroke=\"black\" stroke-width=\"2\">\n";
    // rows: fixed second argument, ordered by the first
    for (Element y : seq) {
      std::vector<std::pair<int, int>> run;
      for (Element x : seq) {
        if (f(x, y) == value) run.emplace_back(px(x), py(y));
      }
      if (run.size() >= 2) polyline(os, run, "");
    }
    for (Element x : seq) {
      std::vector<std::pair<int, int>> run;
      for (Element y : seq) {
        if (f(x, y) == value) run.emplace_back(px(x), py(y));
      }
      if (run.size() >= 2) polyline(os, run, "");
    }
    os << "</g>\n";
  }

  os << "<g class=\"points\" fill=\"black\">\n";
  for (Element y : seq) {
    for (Element x : seq) {
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
         << "\" r=\"4\"><title>F(" << x << "," << y << ")=" << f(x, y)
         << "</title></circle>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

ProfilePlot profile_plot(const TotalOrder& t, const WeakOrder& w) {
  if (t.size() != w.size()) {
    throw InvalidArgument("reference order and weak order differ in size");
  }
  ProfilePlot p;
  p.n = t.size();
  p.horizontal = t;
  for (Element x = 1; x <= p.n; ++x) p.vertical_level[x] = w.rank(x);
  return p;
}

std::string render_profile(const TotalOrder& t, const WeakOrder& w,
                           RenderFormat format) {
  const ProfilePlot plot = profile_plot(t, w);
  const int n = plot.n;
  const auto seq = t.sequence();
  const PatternReport report = pattern_report(t, w);
  const auto runs = plateaus(t, w);
  const bool wsp = is_weakly_single_peaked(t, w);

  // Position of each element inside its plateau run, if any.
  auto same_run = [&](Element a, Element b) {
    for (const auto& run : runs) {
      const bool has_a = std::find(run.begin(), run.end(), a) != run.end();
      const bool has_b = std::find(run.begin(), run.end(), b) != run.end();
      if (has_a && has_b) return true;
    }
    return false;
  };

  std::ostringstream notes;
  for (const auto& v : report.v_patterns) {
    notes << "V: " << v.left << ' ' << v.middle << ' ' << v.right << '\n';
  }
  for (const auto& l : report.l_patterns) {
    notes << "L: plateau " << set_text(l.plateau) << " witness " << l.witness << '\n';
  }
  for (const auto& l : report.reversed_l_patterns) {
    notes << "reversed-L: plateau " << set_text(l.plateau) << " witness "
          << l.witness << '\n';
  }
  std::ostringstream summary;
  summary << "V-free: " << yes_no(report.v_free)
          << ", L-free: " << yes_no(report.l_free)
          << ", reversed-L-free: " << yes_no(report.reversed_l_free)
          << ", weakly single-peaked: " << yes_no(wsp);

  std::ostringstream os;
  if (format == RenderFormat::ascii) {
    const int cw = digits(n);
    const int lw = digits(w.num_classes());
    os << "profile " << n << " reference: " << describe(t)
       << " weak order: " << describe(w) << '\n';
    for (int level = 1; level <= w.num_classes(); ++level) {
      std::string line = pad(level, lw) + " |";
      for (size_t i = 0; i < seq.size(); ++i) {
        const bool here = w.rank(seq[i]) == level;
        const bool joined = i > 0 && here && w.rank(seq[i - 1]) == level &&
                            same_run(seq[i - 1], seq[i]);
        line += joined ? "--" : "  ";
        line += here ? pad(seq[i], cw) : std::string(static_cast<size_t>(cw), ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    }
    os << std::string(static_cast<size_t>(lw), ' ') << " +"
       << std::string(seq.size() * static_cast<size_t>(cw + 2), '-') << '\n';
    std::string axis_line = std::string(static_cast<size_t>(lw), ' ') + "  ";
    for (Element x : seq) axis_line += "  " + pad(x, cw);
    os << axis_line << '\n';
    os << notes.str() << summary.str() << '\n';
    return os.str();
  }

  const int width = 2 * kMargin + std::max(0, n - 1) * kStep;
  const int height = 2 * kMargin + std::max(0, w.num_classes() - 1) * kStep;
  auto px = [&](Element x) { return kMargin + (t.rank(x) - 1) * kStep; };
  auto py = [&](Element x) { return kMargin + (w.rank(x) - 1) * kStep; };
  const int text_lines = static_cast<int>(report.v_patterns.size() +
                                          report.l_patterns.size() +
                                          report.reversed_l_patterns.size()) + 1;
  const int total_height = height + 20 * text_lines + 10;

  svg_open(os, width, total_height);
  os << "<g class=\"axes\" font-family=\"monospace\" font-size=\"12\" "
        "text-anchor=\"middle\">\n";
  for (Element x : seq) {
    os << "<text x=\"" << px(x) << "\" y=\"" << height - kMargin / 3 << "\">"
       << x << "</text>\n";
  }
  os << "</g>\n";

  if (n >= 2) {
    std::vector<std::pair<int, int>> graph;
    for (Element x : seq) graph.emplace_back(px(x), py(x));
    os << "<g class=\"graph\" stroke=\"gray\" stroke-width=\"1\">\n";
    polyline(os, graph, "");
    os << "</g>\n";
  }
  os << "<g class=\"plateaus\" stroke=\"black\" stroke-width=\"4\">\n";
  for (const auto& run : runs) {
    std::vector<std::pair<int, int>> pts;
    for (Element x : seq) {
      if (std::find(run.begin(), run.end(), x) != run.end()) {
        pts.emplace_back(px(x), py(x));
      }
    }
    polyline(os, pts, "");
  }
  os << "</g>\n";

  ElementSet flagged;
  for (const auto& v : report.v_patterns) {
    flagged.insert(flagged.end(), {v.left, v.middle, v.right});
  }
  for (const auto* list : {&report.l_patterns, &report.reversed_l_patterns}) {
    for (const auto& l : *list) {
      flagged.insert(flagged.end(), l.plateau.begin(), l.plateau.end());
      flagged.push_back(l.witness);
    }
  }
  std::sort(flagged.begin(), flagged.end());
  flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());

  os << "<g class=\"points\">\n";
  for (Element x : seq) {
    const bool bad = std::binary_search(flagged.begin(), flagged.end(), x);
    os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(x) << "\" r=\""
       << (bad ? 6 : 4) << "\" fill=\"" << (bad ? "red" : "black")
       << "\"><title>" << x << " level " << w.rank(x) << "</title></circle>\n";
  }
  os << "</g>\n";

  os << "<g class=\"violations\" font-family=\"monospace\" font-size=\"12\">\n";
  int y = height + 20;
  std::istringstream lines(notes.str() + summary.str());
  for (std::string line; std::getline(lines, line); y += 20) {
    os << "<text x=\"10\" y=\"" << y << "\">" << line << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace qtsg
