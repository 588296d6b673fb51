#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spider/canonical.hpp"
#include "spider/errors.hpp"
#include "spider/reduction.hpp"

#include <cmath>
#include <fstream>
#include <set>

using namespace spider;

namespace {
LaurentPoly v(int e) { return LaurentPoly::v(e); }
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

std::vector<StateString> brute_force(const SignString &s) {
  std::vector<StateString> out;
  const std::size_t n = s.size();
  StateString j(n, -1);
  while (true) {
    WeightVec w;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      w += weight(s[k], j[k]);
      ok = w.dominant();
    }
    if (ok && w == WeightVec{0, 0})
      out.push_back(j);
    std::size_t i = n;
    while (i > 0 && j[i - 1] == 1)
      j[--i] = -1;
    if (i == 0)
      break;
    ++j[i - 1];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// The 12-point counterexample as drawn: 24 trivalent vertices in four rows,
// legs to the twelve boundary points -++--++--++- left to right. Rotations
// come from the drawing's coordinates and leg directions.
Web hand_built_web() {
  struct Pt {
    double x, y;
  };
  const std::vector<Pt> pts{
      {-.866, 1},    {-.433, 1.25}, {0, 1},        {.433, 1.25},  {.866, 1},                                 // 0-4
      {-1.299, .25}, {-.866, .5},   {-.433, .25},  {0, .5},       {.433, .25},  {.866, .5},  {1.299, .25},  // 5-11
      {-1.299, -.25}, {-.866, -.5}, {-.433, -.25}, {0, -.5},      {.433, -.25}, {.866, -.5}, {1.299, -.25}, // 12-18
      {-.866, -1},   {-.433, -1.25}, {0, -1},      {.433, -1.25}, {.866, -1}};                              // 19-23
  std::vector<std::pair<int, int>> lines{
      {0, 1},   {1, 2},   {2, 3},   {3, 4},                                  // top row
      {5, 6},   {6, 7},   {7, 8},   {8, 9},   {9, 10},  {10, 11},            // upper middle
      {12, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18},            // lower middle
      {19, 20}, {20, 21}, {21, 22}, {22, 23},                                // bottom row
      {0, 6},   {2, 8},   {4, 10},  {5, 12},  {7, 14},  {11, 18}, {9, 16},   // verticals
      {19, 13}, {21, 15}, {23, 17}};
  // boundary point -> (vertex, leg direction at the vertex in degrees)
  const std::vector<std::pair<int, double>> legs{{20, 270}, {19, 210}, {12, 210}, {5, 150}, {0, 150}, {1, 90},
                                                 {3, 90},   {4, 30},   {11, 30},  {18, 330}, {23, 330}, {22, 270}};
  const SignString signs = parse_signs("-++--++--++-");

  const int nv = static_cast<int>(pts.size());
  std::vector<std::vector<std::pair<double, int>>> around(nv); // (angle, neighbour)
  const double pi = std::acos(-1.0);
  for (auto [a, b] : lines) {
    around[a].push_back({std::atan2(pts[b].y - pts[a].y, pts[b].x - pts[a].x), b});
    around[b].push_back({std::atan2(pts[a].y - pts[b].y, pts[a].x - pts[b].x), a});
  }
  for (std::size_t k = 0; k < legs.size(); ++k)
    around[legs[k].first].push_back({legs[k].second * pi / 180 - (legs[k].second > 180 ? 2 * pi : 0),
                                     -1 - static_cast<int>(k)});
  // colour: a vertex whose leg reaches a + point is a source
  std::vector<int> source(nv, -1);
  source[legs[0].first] = signs[0] == P;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : lines)
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
        if (source[x] >= 0 && source[y] < 0) {
          source[y] = !source[x];
          changed = true;
        }
  }

  PlanarMap m;
  for (int i = 0; i < nv; ++i) {
    REQUIRE(around[i].size() == 3);
    std::sort(around[i].begin(), around[i].end());
    int u = m.add_vertex(VertexKind::Trivalent, 3);
    for (int h : m.vertices[u].rot)
      m.half_edges[h].out = source[i] == 1;
  }
  for (std::size_t k = 0; k < legs.size(); ++k) {
    int b = m.add_vertex(VertexKind::Boundary, 1);
    m.top.push_back(b);
    m.half_edges[m.vertices[b].rot[0]].out = signs[k] == M;
  }
  auto slot = [&](int a, int nb) {
    for (int i = 0; i < 3; ++i)
      if (around[a][i].second == nb)
        return m.vertices[a].rot[i];
    FAIL("missing neighbour");
    return -1;
  };
  for (auto [a, b] : lines)
    m.link(slot(a, b), slot(b, a));
  for (std::size_t k = 0; k < legs.size(); ++k) {
    const int k1 = -1 - static_cast<int>(k);
    m.link(slot(legs[k].first, k1), m.vertices[m.top[k]].rot[0]);
  }
  m.check();
  return Web(std::move(m));
}
} // namespace

TEST_CASE("dominant paths") {
  CHECK(dominant_paths({P, M}) == std::vector<StateString>{{1, -1}});
  CHECK(dominant_paths({P, P, P}) == std::vector<StateString>{{1, 0, -1}});
  CHECK(dominant_paths({P, P}).empty());
  CHECK(dominant_paths({}) == std::vector<StateString>{{}});
  for (std::size_t n = 0; n <= 7; ++n)
    for (const auto &s : all_sign_strings(n)) {
      auto d = dominant_paths(s);
      CHECK(d == brute_force(s));
      CHECK(d.size() == dominant_count(s));
      for (std::size_t i = 1; i < d.size(); ++i)
        CHECK(lex_compare(d[i - 1], d[i]) == 1);
    }
  CHECK(dominant_count(parse_signs("++--++--++--")) == 513);
  CHECK(dominant_count(parse_signs("+-+-+-+-+-+-")) == 513);
}

TEST_CASE("class representatives") {
  auto reps = representatives(6, 6);
  CHECK(reps.size() == 35);
  CHECK(std::find(reps.begin(), reps.end(), parse_signs("++--++--++--")) != reps.end());
  for (const auto &r : reps) {
    CHECK(class_representative(r) == r);
    CHECK(dominant_count(r) == 513);
  }
  CHECK(class_representative(parse_signs("-++--++--++-")) == parse_signs("++--++--++--"));
  CHECK(class_representative(parse_signs("---")) == parse_signs("+++"));
  CHECK(class_representative(parse_signs("-+")) == parse_signs("+-"));
  CHECK(representatives(3, 0).size() == 1);
  std::set<std::string> covered, direct;
  for (std::size_t plus = 0; plus <= 6; ++plus)
    for (const auto &r : representatives(plus, 6 - plus))
      covered.insert(to_string(r));
  for (const auto &s : all_sign_strings(6))
    direct.insert(to_string(class_representative(s)));
  CHECK(covered == direct);
}

TEST_CASE("web basis") {
  auto b = web_basis(parse_signs("++--++--++--"));
  CHECK(b.size() == 513);
  std::set<std::string> enc;
  for (const auto &e : b)
    enc.insert(e.web.encoding());
  CHECK(enc.size() == 513);
  auto cup = web_basis({P, M});
  REQUIRE(cup.size() == 1);
  CHECK(cup[0].web.encoding() == Web::generator({GenKind::Cup, P}).encoding());
}

TEST_CASE("negative-exponent test") {
  auto b = evaluate(grow({P, M}, {1, -1}).web);
  CHECK(is_dual_canonical(b, {1, -1}).ok);
  auto t = evaluate(grow({P, P, P}, {1, 0, -1}).web);
  CHECK(is_dual_canonical(t, {1, 0, -1}).ok);
  CHECK_THROWS_AS(is_dual_canonical(b, {0, 0}), InvalidInput);
  auto bad = b;
  bad.add({0, 0}, v(1));
  auto r = is_dual_canonical(bad, {1, -1});
  CHECK_FALSE(r.ok);
  REQUIRE(r.offending.size() == 1);
  CHECK(r.offending[0].state == StateString{0, 0});
}

TEST_CASE("small scans pass") {
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto &s : all_sign_strings(n)) {
      auto r = scan(s);
      CHECK(r.failures.empty());
      CHECK(r.dimension == dominant_count(s));
    }
}

TEST_CASE("dual canonical basis below twelve is the web basis") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto &s : all_sign_strings(n)) {
      auto basis = dual_canonical_basis(s);
      CHECK(basis.size() == dominant_count(s));
      for (const auto &[j, x] : basis)
        CHECK(x == evaluate(grow(s, j).web));
    }
  auto cup = dual_canonical_basis({P, M});
  CHECK(cup.at({1, -1}) == evaluate(grow({P, M}, {1, -1}).web));
}

TEST_CASE("cache") {
  const auto dir = std::filesystem::temp_directory_path() / "spider_cache_test";
  std::filesystem::remove_all(dir);
  std::vector<std::string> warnings;
  ScanOptions opt;
  opt.cache_dir = dir;
  opt.jobs = 2;
  opt.warn = [&](const std::string &w) { warnings.push_back(w); };
  const auto s = parse_signs("+-+-+-");
  auto first = scan(s, opt);
  const auto j = dominant_paths(s).front();
  const auto file = dir / ("S" + to_string(s)) / ("J" + to_string(j) + ".tv");
  REQUIRE(std::filesystem::exists(file));
  CHECK(basis_expansion(s, j, opt) == evaluate(grow(s, j).web));
  {
    std::ofstream out(file, std::ios::trunc);
    out << "signs +-+-+-\n+-+-+- [[0,1]\n";
  }
  CHECK(basis_expansion(s, j, opt) == evaluate(grow(s, j).web));
  CHECK(warnings.size() == 1);
  auto second = scan(s, opt);
  CHECK(second.dimension == first.dimension);
  CHECK(second.failures.size() == first.failures.size());
  std::filesystem::remove_all(dir);
}

TEST_CASE("the 12-point counterexample") {
  const auto s = counterexample_signs();
  auto report = scan(s);
  CHECK(report.dimension == 513);
  REQUIRE(report.failures.size() == 1);
  const auto &f = report.failures.front();
  CHECK(f.state == parse_states("++++0000----"));
  CHECK(f.offending_state == parse_states("++-+-+-+-+--"));
  CHECK(f.coefficient == 1 + 5 * v(-2) + 2 * v(-4));
  CHECK(nonnegative_part(f.coefficient) == LaurentPoly(1));

  auto w = grow(s, f.state).web;
  CHECK(w.map().trivalent_count() == 24);
  auto faces = internal_faces(w);
  CHECK(faces.size() == 7);
  for (const auto &face : faces)
    CHECK(face.sides == 6);
  CHECK(is_connected(w));
  CHECK_FALSE(has_boundary_y(w));
  CHECK_FALSE(has_boundary_double_h(w));

  // the drawn web is the failing basis web, up to the rotation of its boundary
  auto fig = hand_built_web();
  CHECK(fig.top() == parse_signs("-++--++--++-"));
  Web turned = w;
  for (int i = 0; i < 11; ++i)
    turned = rotate(turned).terms().begin()->second.web;
  CHECK(turned.encoding() == fig.encoding());
  auto fig_state = min_cut_states(fig);
  auto fig_scan = scan(fig.top());
  REQUIRE(fig_scan.failures.size() == 1);
  CHECK(fig_scan.failures.front().state == fig_state);
}

TEST_CASE("correction") {
  auto c = check_correction();
  CHECK(c.hexagon_fails);
  CHECK(c.cups_pass);
  CHECK(c.difference_passes);
  CHECK(c.matches_basis);
  CHECK(c.hexagon_state == parse_states("++++0000----"));
  CHECK(c.cup_state == parse_states("++-+-+-+-+--"));
  // the six-cup web is itself the basis web at its leading state
  CHECK(six_cup_web().encoding() == grow(counterexample_signs(), c.cup_state).web.encoding());
  CHECK(verify_correction());
  // re-running the correction changes nothing
  const auto s = counterexample_signs();
  auto basis = dual_canonical_basis(s);
  for (const auto &[j, x] : basis) {
    auto check = is_dual_canonical(x, j);
    CHECK(check.ok);
  }
}

TEST_CASE("structure predicates") {
  auto t = grow({P, P, P}, {1, 0, -1}).web;
  CHECK(has_boundary_y(t));
  CHECK(is_connected(t));
  CHECK_FALSE(is_connected(tensor(Web::generator({GenKind::Cup, P}), Web::generator({GenKind::Cup, M}))));
  CHECK(is_connected(gadgets::loop()));
  auto g = grow(parse_signs("+-+-+++"), parse_states("++00-0-")).web;
  CHECK(has_boundary_y(g));
  CHECK(has_boundary_double_h(g)); // three legs on consecutive hexagon vertices
  // a double H closed off below
  auto closed = compose(gadgets::double_h(P), Web::generator({GenKind::Split, M}));
  auto dh = compose(tensor(closed, Web::identity({M})), Web::generator({GenKind::Cup, P}));
  CHECK(dh.is_invariant_web());
  CHECK(has_boundary_double_h(dh));
}
