#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qtsg/error.hpp"
#include "qtsg/render.hpp"

using namespace qtsg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

size_t occurrences(const std::string& s, const std::string& needle) {
  size_t c = 0;
  for (size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("contour goldens") {
  CHECK(render_contour(fixtures::fig4(), fixtures::fig4_order(), RenderFormat::ascii) ==
        slurp(fixtures::golden_dir() + "/fig4_contour.txt"));
  CHECK(render_contour(fixtures::fig8(), TotalOrder::natural(4), RenderFormat::ascii) ==
        slurp(fixtures::golden_dir() + "/fig8_contour.txt"));
}

TEST_CASE("profile goldens") {
  CHECK(render_profile(TotalOrder::natural(4), fixtures::fig8_order(), RenderFormat::ascii) ==
        slurp(fixtures::golden_dir() + "/fig8_profile.txt"));
  CHECK(render_profile(TotalOrder::natural(4), fixtures::fig9_order(), RenderFormat::ascii) ==
        slurp(fixtures::golden_dir() + "/fig9_profile.txt"));
}

TEST_CASE("contour level sets") {
  const ContourPlot p = contour_plot(fixtures::fig4(), fixtures::fig4_order());
  CHECK(p.level_sets.size() == 6);
  size_t total = 0;
  for (const auto& [value, points] : p.level_sets) {
    total += points.size();
    for (const auto& [x, y] : points) CHECK(fixtures::fig4()(x, y) == value);
  }
  CHECK(total == 36);
  // the neutral element's level is just its diagonal point
  CHECK(p.level_sets.at(4) == std::vector<GridPoint>{{4, 4}});
  CHECK(p.level_sets.at(6).size() == 11);
  CHECK_THROWS_AS(contour_plot(fixtures::fig4(), TotalOrder::natural(3)), InvalidArgument);
}

TEST_CASE("svg output is deterministic and well formed") {
  const std::string a = render_contour(fixtures::fig5(), TotalOrder::natural(4), RenderFormat::svg);
  const std::string b = render_contour(fixtures::fig5(), TotalOrder::natural(4), RenderFormat::svg);
  CHECK(a == b);
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(occurrences(a, "<g class=\"level\"") == 4);
  CHECK(occurrences(a, "<circle") == 16);
  const std::string pr = render_profile(TotalOrder::natural(4), fixtures::fig9_order(), RenderFormat::svg);
  CHECK(pr == render_profile(TotalOrder::natural(4), fixtures::fig9_order(), RenderFormat::svg));
  CHECK(pr.find("class=\"violations\"") != std::string::npos);
  CHECK(parse_render_format("svg") == RenderFormat::svg);
  CHECK_FALSE(parse_render_format("png"));
}

TEST_CASE("profile annotations agree with the pattern report") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 6;
    const auto all = oracle::all_rank_vectors(n);
    const WeakOrder w = WeakOrder::from_ranks(all[rng() % all.size()]);
    const TotalOrder t = TotalOrder::from_sequence(oracle::random_permutation(rng, n));
    const PatternReport r = pattern_report(t, w);
    const std::string text = render_profile(t, w, RenderFormat::ascii);
    CHECK(occurrences(text, "\nV: ") == r.v_patterns.size());
    CHECK(occurrences(text, "\nL: ") == r.l_patterns.size());
    CHECK(occurrences(text, "\nreversed-L: ") == r.reversed_l_patterns.size());
    const bool wsp = is_weakly_single_peaked(t, w);
    CHECK(text.find(std::string("weakly single-peaked: ") + (wsp ? "yes" : "no")) != std::string::npos);
    CHECK(text.find(std::string("V-free: ") + (r.v_free ? "yes" : "no")) != std::string::npos);
    const ProfilePlot p = profile_plot(t, w);
    for (int x = 1; x <= n; ++x) CHECK(p.vertical_level.at(x) == w.rank(x));
  }
}
