#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spider/errors.hpp"
#include "spider/web.hpp"

using namespace spider;

namespace {
LaurentPoly v(int e) { return LaurentPoly::v(e); }
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;
} // namespace

TEST_CASE("zig-zags are identities") {
  for (int k = 0; k < 4; ++k) {
    auto z = gadgets::zigzag(k);
    auto mat = evaluate_hom(z);
    CHECK(mat.size() == 3);
    for (const auto &[in, out] : mat)
      CHECK(out == TensorVector::basis(z.top(), in));
    CHECK(z.encoding() == Web::identity(z.top()).encoding());
  }
}

TEST_CASE("loop evaluates to [3]") {
  auto x = evaluate(gadgets::loop());
  CHECK(x.size() == 1);
  CHECK(x.coefficient({}) == v(2) + 1 + v(-2));
}

namespace {
SliceGenerator I(Sign s) { return {GenKind::Identity, s}; }
SliceGenerator U(Sign s) { return {GenKind::Cup, s}; }
SliceGenerator N(Sign s) { return {GenKind::Cap, s}; }
SliceGenerator Y(Sign s) { return {GenKind::Split, s}; }
SliceGenerator L(Sign s) { return {GenKind::Join, s}; }
SliceGenerator H(Sign s) { return {GenKind::H, s}; }

Web make(SignString top, std::vector<Layer> layers) { return Web(SliceWord{std::move(top), std::move(layers)}); }

TensorVector cup_expansion(Sign s) {
  TensorVector x({s, -s});
  x.add({1, -1}, 1);
  x.add({0, 0}, v(-1));
  x.add({-1, 1}, v(-2));
  return x;
}

int table_exponent(const SliceGenerator &g, const StateString &lower, const StateString &upper) {
  for (const auto &e : generator_table(g))
    if (e.lower == lower && e.upper == upper)
      return e.exponent;
  FAIL("no such table entry");
  return 0;
}
} // namespace

TEST_CASE("generator tables") {
  CHECK(table_exponent(N(P), {0, 0}, {}) == 1);
  CHECK(table_exponent(Y(P), {1}, {1, 0}) == 0);
  CHECK(table_exponent(Y(P), {1}, {0, 1}) == -1);
  CHECK(generator_table(Y(P)).size() == 6);
  CHECK(table_exponent(L(M), {0, 1}, {1}) == 0);
  CHECK(generator_table(U(P)).size() == 3);
  CHECK(generator_table(N(M)).size() == 3);
  // H entries, contracted over the middle edge
  CHECK(table_exponent(H(P), {0, 1}, {1, 0}) == 0);
  for (Sign s : {P, M}) {
    CHECK(generator_table(H(s)).size() == 12);
    // H against the explicit Join-over-Split drawing
    auto hd = make({s, -s}, {{I(s), L(s)}, {Y(s), I(s)}});
    CHECK(evaluate_hom(Web::generator(H(s))) == evaluate_hom(hd));
    CHECK(Web::generator(H(s)).encoding() == hd.encoding());
    for (const SliceGenerator &g : {U(s), N(s), Y(s), L(s), H(s), I(s)})
      for (const auto &e : generator_table(g)) {
        CHECK(e.lower.size() == g.lower_width());
        CHECK(e.upper.size() == g.upper_width());
        // weight is conserved
        WeightVec a, b;
        auto lo = g.lower(), up = g.upper();
        for (std::size_t k = 0; k < lo.size(); ++k)
          a += weight(lo[k], e.lower[k]);
        for (std::size_t k = 0; k < up.size(); ++k)
          b += weight(up[k], e.upper[k]);
        CHECK(a == b);
      }
  }
}

TEST_CASE("cups and tensor products") {
  for (Sign s : {P, M}) {
    auto cup = Web::generator(U(s));
    CHECK(evaluate(cup) == cup_expansion(s));
    CHECK(internal_faces(cup).empty());
    CHECK(is_non_elliptic(cup));
  }
  auto pm = Web::generator(U(P)), mp = Web::generator(U(M));
  auto both = tensor(pm, mp);
  CHECK(both.top() == SignString{P, M, M, P});
  CHECK(evaluate(both) == tensor(cup_expansion(P), cup_expansion(M)));
  CHECK(tensor(Web(), pm).encoding() == pm.encoding());
  CHECK(tensor(pm, Web()).encoding() == pm.encoding());
  CHECK(evaluate(Web()) == TensorVector::basis({}, {}));
  CHECK(pm.encoding() != Web::generator(U(M)).encoding());
  CHECK(pm.encoding() != gadgets::y(P).encoding());
}

TEST_CASE("isotopic drawings share an encoding") {
  auto a = make({P, M}, {{U(P)}});
  auto b = make({P, M}, {{I(P), I(M)}, {U(P)}});
  auto c = make({P, M}, {{I(P), I(M), N(P)}, {U(P), U(P)}});
  auto d = make({P, M}, {{I(P), N(M), I(M)}, {U(P), U(P)}});
  CHECK(a.encoding() == b.encoding());
  CHECK(a.encoding() == d.encoding());
  CHECK(c.encoding() != a.encoding()); // c has an extra loop
  CHECK(evaluate(c) == quantum_int(3) * evaluate(a));
  CHECK(evaluate(d) == evaluate(a));
}

TEST_CASE("compose") {
  auto cup = Web::generator(U(P));
  CHECK_THROWS_AS(compose(Web::identity({P}), cup), MismatchError);
  // compose(cap, cup) is a loop
  auto loop = compose(Web::generator(N(P)), Web::generator(U(P)));
  CHECK(loop.encoding() == gadgets::loop().encoding());
  // zig-zag built by composition
  auto top = tensor(Web::identity({M}), Web::generator(N(P)));
  auto bottom = tensor(Web::generator(U(M)), Web::identity({M}));
  CHECK(compose(top, bottom).encoding() == Web::identity({M}).encoding());
}

TEST_CASE("bigon") {
  for (Sign s : {P, M}) {
    auto g = gadgets::bigon_cup(s);
    auto f = internal_faces(g);
    REQUIRE(f.size() == 1);
    CHECK(f[0].sides == 2);
    CHECK_FALSE(is_non_elliptic(g));
    CHECK(evaluate(g) == (v(1) + v(-1)) * cup_expansion(s));
  }
}

TEST_CASE("square relation on all 81 states") {
  for (Sign s : {P, M}) {
    auto sq = gadgets::square(s);
    REQUIRE(sq.top() == SignString{-s, s, -s, s});
    auto f = internal_faces(sq);
    REQUIRE(f.size() == 1);
    CHECK(f[0].sides == 4);
    auto r1 = make(sq.top(), {{U(-s), U(-s)}});
    auto r2 = make(sq.top(), {{I(-s), U(s), I(s)}, {U(-s)}});
    auto lhs = evaluate(sq), rhs = evaluate(r1) + evaluate(r2);
    int checked = 0;
    for (const auto &j : [] {
           std::vector<StateString> all;
           for (int a = -1; a <= 1; ++a)
             for (int b = -1; b <= 1; ++b)
               for (int c = -1; c <= 1; ++c)
                 for (int d = -1; d <= 1; ++d)
                   all.push_back({std::int8_t(a), std::int8_t(b), std::int8_t(c), std::int8_t(d)});
           return all;
         }()) {
      CHECK(lhs.coefficient(j) == rhs.coefficient(j));
      ++checked;
    }
    CHECK(checked == 81);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("gadget counts") {
  for (Sign s : {P, M}) {
    auto ys = gadget_states(gadgets::y(s));
    CHECK(ys.size() == 6);
    int ones = 0, vinv = 0;
    for (const auto &r : ys)
      (r.exponent == 0 ? ones : vinv) += r.exponent == 0 || r.exponent == -1;
    CHECK(ones == 3);
    CHECK(vinv == 3);

    auto dh = gadget_states(gadgets::double_h(s));
    std::map<StateString, int> weight_one;
    for (const auto &r : dh) {
      CHECK(r.exponent <= 0);
      if (r.exponent == 0)
        ++weight_one[r.bottom()];
    }
    int total = 0;
    std::vector<StateString> repeats;
    for (const auto &[b, n] : weight_one) {
      total += n;
      if (n > 1)
        repeats.push_back(b);
    }
    CHECK(total == 12);
    std::sort(repeats.begin(), repeats.end());
    CHECK(repeats == std::vector<StateString>{{0, -1}, {1, -1}, {1, 0}});
  }
}

TEST_CASE("hexagon gadget") {
  for (Sign s : {P, M}) {
    auto h = gadgets::hexagon(s);
    auto f = internal_faces(h);
    REQUIRE(f.size() == 1);
    CHECK(f[0].sides == 6);
    CHECK(is_non_elliptic(h));
    // the two flow loops around the hexagon, with all legs in state 0
    std::vector<int> loops;
    for (const auto &r : gadget_states(h))
      if (r.top() == StateString{0, 0, 0} && r.bottom() == StateString{0, 0, 0})
        loops.push_back(r.exponent);
    std::sort(loops.begin(), loops.end());
    CHECK(loops == std::vector<int>{-1, 1});
  }
  auto r = find_state(gadgets::hexagon(P), {0, 0, 0}, {0, 0, 0});
  REQUIRE(r);
  CHECK(r->cuts.size() == 7);
}

TEST_CASE("evaluations are invariant with natural coefficients") {
  std::vector<Web> ws{gadgets::loop(), gadgets::bigon_cup(P), gadgets::square(M),
                      tensor(Web::generator(U(P)), gadgets::square(P)),
                      compose(tensor(Web::identity({P}), Web::generator(Y(P))), Web::generator(U(P)))};
  for (const auto &w : ws) {
    auto x = evaluate(w);
    CHECK(is_invariant(x));
    for (const auto &[j, p] : x.entries())
      CHECK(has_natural_coefficients(p));
  }
  for (const auto &w : {gadgets::hexagon(P), gadgets::double_h(M)})
    for (const auto &[b, x] : evaluate_hom(w))
      for (const auto &[j, p] : x.entries())
        CHECK(has_natural_coefficients(p));
}

TEST_CASE("synthesized drawings") {
  std::vector<Web> ws{gadgets::hexagon(P), gadgets::double_h(M), gadgets::square(P), gadgets::bigon_cup(M),
                      gadgets::loop(), tensor(gadgets::square(M), gadgets::loop()), gadgets::zigzag(2)};
  for (const auto &w : ws) {
    Web again(w.map());
    CHECK(again.encoding() == w.encoding());
    CHECK(evaluate_hom(again) == evaluate_hom(w));
  }
}

TEST_CASE("text format") {
  auto w = gadgets::hexagon(M);
  auto text = to_text(w.drawing());
  CHECK(Web(parse_slice_word(text)).encoding() == w.encoding());
  CHECK(to_text(parse_slice_word(text)) == text);
  auto cup = parse_slice_word("# a cup\ntop +-\nU+-\nbottom .\n");
  CHECK(Web(cup).encoding() == Web::generator(U(P)).encoding());
  try {
    parse_slice_word("top +-\nY++\nbottom -\n");
    FAIL("expected a mismatch");
  } catch (const ParseError &e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 0);
  }
  try {
    parse_slice_word("top ++\nY++ Q+\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(Web(SliceWord{{P}, {{U(P)}}}), MismatchError);
}
