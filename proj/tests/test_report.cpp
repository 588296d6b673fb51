#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spider/errors.hpp"
#include "spider/growth.hpp"
#include "spider/report.hpp"
#include "spider/svg.hpp"

#include <json.hpp>

using namespace spider;
using Json = nlohmann::json;

namespace {
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

std::size_t count(const std::string &hay, const std::string &needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1))
    ++n;
  return n;
}

ScanReport sample() {
  ScanReport r;
  r.signs = parse_signs("++--");
  r.dimension = 2;
  r.failures.push_back({parse_states("+0-0"), parse_states("+-+-"),
                        LaurentPoly::from_terms({{-2, 5}, {0, 1}})});
  return r;
}
} // namespace

TEST_CASE("scan report text") {
  CHECK(to_text(sample()) == "signs ++--\ndimension 2\nfailures 1\nfailure +0-0 +-+- [[-2,5],[0,1]]\nend\n");
  ScanReport empty{parse_signs("+-"), 1, {}};
  CHECK(to_text(empty) == "signs +-\ndimension 1\nfailures 0\nend\n");
}

TEST_CASE("scan report json") {
  auto j = Json::parse(to_json(sample()));
  CHECK(j["signs"] == "++--");
  CHECK(j["dimension"] == 2);
  REQUIRE(j["failures"].size() == 1);
  CHECK(j["failures"][0]["state"] == "+0-0");
  CHECK(j["failures"][0]["offending_state"] == "+-+-");
  CHECK(j["failures"][0]["coefficient"] == Json::parse("[[-2,5],[0,1]]"));

  ScanReport big = sample();
  big.failures[0].coefficient = LaurentPoly::monomial(Integer(1) << 70, 3);
  auto k = Json::parse(to_json(big));
  CHECK(k["failures"][0]["coefficient"][0][1] == "1180591620717411303424");

  auto many = Json::parse(to_json(std::vector<ScanReport>{sample(), sample()}));
  CHECK(many.size() == 2);
}

TEST_CASE("tensor, combination and basis output") {
  auto cup = evaluate(grow({P, M}, {1, -1}).web);
  auto j = Json::parse(to_json(cup));
  CHECK(j["signs"] == "+-");
  CHECK(j["entries"].size() == 3);

  WebCombination c(gadgets::bigon_cup(P));
  auto r = reduce(c);
  auto k = Json::parse(to_json(r));
  CHECK(k["top"] == "+-");
  REQUIRE(k["terms"].size() == 1);
  CHECK(k["terms"][0]["coefficient"] == Json::parse("[[-1,1],[1,1]]"));
  auto web = parse_slice_word(k["terms"][0]["web"].get<std::string>());
  CHECK(Web(web).encoding() == k["terms"][0]["encoding"].get<std::string>());

  const auto s = parse_signs("+-+-");
  DualBasis b;
  for (const auto &st : dominant_paths(s))
    b.emplace(st, evaluate(grow(s, st).web));
  auto text = basis_to_text(s, b);
  CHECK(text.rfind("signs +-+-\ndimension 2\nelement ", 0) == 0);
  CHECK(count(text, "element ") == 2);
  auto bj = Json::parse(basis_to_json(s, b));
  CHECK(bj["elements"].size() == 2);
  CHECK(parse_states(bj["elements"][0]["state"].get<std::string>()) >
        parse_states(bj["elements"][1]["state"].get<std::string>()));
}

TEST_CASE("svg shape") {
  for (const auto &w : {gadgets::y(P), gadgets::double_h(M), gadgets::hexagon(P), gadgets::loop(),
                        gadgets::square(P), grow(parse_signs("+-+-+++"), parse_states("++00-0-")).web}) {
    auto svg = render_svg(w);
    CAPTURE(to_text(w.drawing()));
    CHECK(svg.rfind("<svg xmlns=", 0) == 0);
    CHECK(count(svg, "<circle") == static_cast<std::size_t>(w.map().trivalent_count()));
    // one polyline and one arrowhead per edge
    const std::size_t edges = w.map().half_edges.size() / 2 + w.map().loops;
    CHECK(count(svg, "<polyline") == edges);
    CHECK(count(svg, "<polygon") == edges);
    CHECK(svg == render_svg(w));
  }
}

TEST_CASE("svg flow lines") {
  const auto w = grow(parse_signs("+-+-+++"), parse_states("++00-0-")).web;
  auto st = find_state(w, parse_states("00000+-"));
  REQUIRE(st);
  auto svg = render_svg(w, st);
  CHECK(count(svg, "stroke=\"red\"") + count(svg, "stroke=\"blue\"") > 0);
  CHECK(svg.find(">+ 0</text>") != std::string::npos);

  auto hex = gadgets::hexagon(P);
  for (const auto &r : enumerate_states(hex))
    CHECK_NOTHROW(render_svg(hex, r));

  StateRecord bad;
  bad.cuts = {StateString{}};
  CHECK_THROWS_AS(render_svg(w, bad), MismatchError);
}
