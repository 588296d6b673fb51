#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spider/canonical.hpp"
#include "spider/errors.hpp"
#include "spider/reduction.hpp"

#include <random>

using namespace spider;

namespace {
LaurentPoly v(int e) { return LaurentPoly::v(e); }
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

SliceGenerator gen(GenKind k, Sign s) { return {k, s}; }

// Random invariant web, built upward from an empty bottom.
Web random_web(std::mt19937_64 &rng, int steps, std::size_t max_width) {
  std::vector<Layer> up; // bottom-up
  SignString cur;
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto push = [&](std::size_t at, SliceGenerator g) {
    Layer layer;
    for (std::size_t i = 0; i < at; ++i)
      layer.push_back(gen(GenKind::Identity, cur[i]));
    layer.push_back(g);
    const std::size_t after = at + g.lower_width();
    for (std::size_t i = after; i < cur.size(); ++i)
      layer.push_back(gen(GenKind::Identity, cur[i]));
    SignString next(cur.begin(), cur.begin() + at);
    auto u = g.upper();
    next.insert(next.end(), u.begin(), u.end());
    next.insert(next.end(), cur.begin() + after, cur.end());
    cur = std::move(next);
    up.push_back(std::move(layer));
  };
  for (int k = 0; k < steps; ++k) {
    const int op = static_cast<int>(pick(5));
    if (op == 0 || cur.empty()) {
      if (cur.size() + 2 <= max_width)
        push(pick(cur.size() + 1), gen(GenKind::Cup, pick(2) ? P : M));
    } else if (op == 1) {
      if (cur.size() < max_width) {
        const std::size_t at = pick(cur.size());
        push(at, gen(GenKind::Split, -cur[at]));
      }
    } else if (cur.size() >= 2) {
      const std::size_t at = pick(cur.size() - 1);
      const Sign a = cur[at], b = cur[at + 1];
      if (op == 2 && a == b)
        push(at, gen(GenKind::Join, a));
      else if (op == 3 && a != b)
        push(at, gen(GenKind::H, -a));
      else if (op == 4 && a != b)
        push(at, gen(GenKind::Cap, a));
    }
  }
  SliceWord w;
  w.top = cur;
  w.layers.assign(up.rbegin(), up.rend());
  return Web(std::move(w));
}
} // namespace

TEST_CASE("circle") {
  auto r = reduce(gadgets::loop());
  REQUIRE(r.size() == 1);
  CHECK(r.coefficient(Web().encoding()) == v(2) + 1 + v(-2));
}

TEST_CASE("bigon") {
  for (Sign s : {P, M}) {
    auto r = reduce(gadgets::bigon_cup(s));
    REQUIRE(r.size() == 1);
    CHECK(r.coefficient(Web::generator(gen(GenKind::Cup, s)).encoding()) == v(1) + v(-1));
  }
}

TEST_CASE("square") {
  for (Sign s : {P, M}) {
    auto sq = gadgets::square(s);
    auto r = reduce(sq);
    CHECK(r.size() == 2);
    Web r1(SliceWord{sq.top(), {{gen(GenKind::Cup, -s), gen(GenKind::Cup, -s)}}});
    Web r2(SliceWord{sq.top(),
                     {{gen(GenKind::Identity, -s), gen(GenKind::Cup, s), gen(GenKind::Identity, s)},
                      {gen(GenKind::Cup, -s)}}});
    CHECK(r.coefficient(r1.encoding()) == LaurentPoly(1));
    CHECK(r.coefficient(r2.encoding()) == LaurentPoly(1));
    CHECK(evaluate(r) == evaluate(sq));
  }
}

TEST_CASE("non-elliptic webs are normal forms") {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto &s : all_sign_strings(n))
      for (const auto &b : web_basis(s)) {
        auto r = reduce(b.web);
        REQUIRE(r.size() == 1);
        CHECK(r.coefficient(b.web.encoding()) == LaurentPoly(1));
      }
}

TEST_CASE("reduction preserves evaluation") {
  std::mt19937_64 rng(17);
  int nontrivial = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto w = random_web(rng, 14, 8);
    auto r = reduce(w);
    if (!is_non_elliptic(w))
      ++nontrivial;
    for (const auto &[key, t] : r.terms())
      CHECK(is_non_elliptic(t.web));
    CHECK(evaluate(r) == evaluate(w));
    // another face order reaches the same normal form
    CHECK(reduce(WebCombination(w), rng()) == r);
  }
  CHECK(nontrivial > 100);
}

TEST_CASE("combinations") {
  auto cup = Web::generator(gen(GenKind::Cup, P));
  WebCombination c(cup, v(1));
  c.add(cup, -v(1));
  CHECK(c.empty());
  CHECK_THROWS_AS(c.add(Web::generator(gen(GenKind::Cup, M)), 1), MismatchError);
  WebCombination d({P, M});
  d.add(gadgets::bigon_cup(P), 1);
  d.add(cup, 1);
  auto r = reduce(d);
  REQUIRE(r.size() == 1);
  CHECK(r.coefficient(cup.encoding()) == 1 + v(1) + v(-1));
  CHECK(to_text(r).rfind("terms 1\ncoefficient [[-1,1],[0,1],[1,1]]\ntop +-\n", 0) == 0);
}

TEST_CASE("rotation") {
  auto r = rotate(grow({P, M}, {1, -1}).web);
  REQUIRE(r.size() == 1);
  CHECK(r.coefficient(grow({M, P}, {1, -1}).web.encoding()) == LaurentPoly(1));
  CHECK_THROWS_AS(rotate(gadgets::hexagon(P)), InvalidInput);
  CHECK(rotate(Web()).coefficient(Web().encoding()) == LaurentPoly(1));

  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto &s : all_sign_strings(n))
      for (const auto &b : web_basis(s)) {
        auto rot = rotate(b.web);
        REQUIRE(rot.size() == 1);
        const auto &t = rot.terms().begin()->second;
        CHECK(t.coefficient == LaurentPoly(1));
        SignString rs(s.begin() + 1, s.end());
        rs.push_back(s.front());
        CHECK(t.web.top() == rs);
        // the result is the basis web of its own state string
        CHECK(grow(rs, min_cut_states(t.web)).web.encoding() == t.web.encoding());
      }

  const auto s = parse_signs("+-+-++-+");
  for (const auto &b : web_basis(s)) {
    Web cur = b.web;
    for (std::size_t i = 0; i < s.size(); ++i)
      cur = rotate(cur).terms().begin()->second.web;
    CHECK(cur.encoding() == b.web.encoding());
  }
}
