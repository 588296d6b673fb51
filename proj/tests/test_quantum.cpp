#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spider/errors.hpp"
#include "spider/quantum.hpp"

#include <random>

using namespace spider;

namespace {
LaurentPoly v(int e) { return LaurentPoly::v(e); }
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

TensorVector e(SignString s, StateString j) { return TensorVector::basis(std::move(s), std::move(j)); }

// b^{+-} and t^{+++} transcribed from their explicit expansions.
TensorVector b_pm() {
  TensorVector x({P, M});
  x.add({1, -1}, 1);
  x.add({0, 0}, v(-1));
  x.add({-1, 1}, v(-2));
  return x;
}

TensorVector t_ppp(Sign s = P) {
  TensorVector x({s, s, s});
  x.add({1, 0, -1}, 1);
  x.add({0, 1, -1}, v(-1));
  x.add({1, -1, 0}, v(-1));
  x.add({0, -1, 1}, v(-2));
  x.add({-1, 1, 0}, v(-2));
  x.add({-1, 0, 1}, v(-3));
  return x;
}

TensorVector random_vector(std::mt19937 &rng, std::size_t n) {
  std::uniform_int_distribution<int> bit(0, 1), st(-1, 1), ex(-3, 3), co(-2, 2);
  SignString s;
  for (std::size_t i = 0; i < n; ++i)
    s.push_back(bit(rng) ? P : M);
  TensorVector x(s);
  for (int k = 0; k < 6; ++k) {
    StateString j;
    for (std::size_t i = 0; i < n; ++i)
      j.push_back(static_cast<std::int8_t>(st(rng)));
    x.add(j, LaurentPoly::monomial(co(rng), ex(rng)));
  }
  return x;
}
} // namespace

TEST_CASE("weights") {
  CHECK(weight(P, 1) == WeightVec{1, 0});
  CHECK(weight(P, 0) == WeightVec{-1, 1});
  CHECK(weight(P, -1) == WeightVec{0, -1});
  CHECK(weight(M, 1) == WeightVec{0, 1});
  CHECK(weight(M, 0) == WeightVec{1, -1});
  CHECK(weight(M, -1) == WeightVec{-1, 0});
  for (Sign s : {P, M})
    CHECK(weight(s, -1) + weight(s, 0) + weight(s, 1) == WeightVec{0, 0});
  CHECK_THROWS_AS(weight(P, 2), InvalidInput);
}

TEST_CASE("single-factor actions follow the tables with q^1/2 = -v") {
  CHECK(act(Generator::K1, e({P}, {1})) == -v(1) * e({P}, {1}));
  CHECK(act(Generator::K1, e({P}, {0})) == -v(-1) * e({P}, {0}));
  CHECK(act(Generator::K1, e({P}, {-1})) == e({P}, {-1}));
  CHECK(act(Generator::K2, e({M}, {1})) == -v(1) * e({M}, {1}));
  CHECK(act(Generator::K2, e({M}, {0})) == -v(-1) * e({M}, {0}));
  CHECK(act(Generator::E1, e({P}, {0})) == e({P}, {1}));
  CHECK(act(Generator::F1, e({P}, {1})) == e({P}, {0}));
  CHECK(act(Generator::E2, e({P}, {-1})) == e({P}, {0}));
  CHECK(act(Generator::F2, e({P}, {0})) == e({P}, {-1}));
  CHECK(act(Generator::E1, e({M}, {-1})) == e({M}, {0}));
  CHECK(act(Generator::F1, e({M}, {0})) == e({M}, {-1}));
  CHECK(act(Generator::E2, e({M}, {0})) == e({M}, {1}));
  CHECK(act(Generator::F2, e({M}, {1})) == e({M}, {0}));
  CHECK(act(Generator::E1, e({P}, {1})).is_zero());
  CHECK(act(Generator::E1, e({M}, {1})).is_zero());
  CHECK(act(Generator::F2, e({P}, {-1})).is_zero());
}

TEST_CASE("E1 kills b^{+-}") {
  CHECK(act(Generator::E1, b_pm()).is_zero());
  CHECK(act(Generator::E2, TensorVector({P, M})).is_zero());
}

TEST_CASE("invariance") {
  CHECK(is_invariant(b_pm()));
  CHECK_FALSE(is_invariant(e({P}, {1})));
  CHECK(is_invariant(t_ppp()));
  CHECK(is_invariant(t_ppp(M)));
  CHECK(is_invariant(TensorVector::basis({}, {})));
  // perturbing a coefficient breaks invariance
  auto bad = b_pm();
  bad.add({0, 0}, 1);
  CHECK_FALSE(is_invariant(bad));
}

TEST_CASE("K eigenvalues are (-v)^(weight coordinate sum)") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto x = random_vector(rng, 4);
    for (const auto &[j, p] : x.entries()) {
      WeightVec w;
      for (std::size_t k = 0; k < j.size(); ++k)
        w += weight(x.signs()[k], j[k]);
      auto single = TensorVector::basis(x.signs(), j);
      auto expect1 = LaurentPoly::monomial(w.a % 2 ? -1 : 1, w.a);
      auto expect2 = LaurentPoly::monomial(w.b % 2 ? -1 : 1, w.b);
      CHECK(act(Generator::K1, single) == expect1 * single);
      CHECK(act(Generator::K2, single) == expect2 * single);
      CHECK(act(Generator::K1inv, act(Generator::K1, single)) == single);
    }
  }
}

TEST_CASE("(q^1/2 - q^-1/2)[E_i,F_i] = K_i - K_i^-1") {
  // q^{1/2} - q^{-1/2} = -v + v^-1
  const LaurentPoly c = -v(1) + v(-1);
  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_vector(rng, n);
      for (auto [E, F, K, Ki] : {std::tuple{Generator::E1, Generator::F1, Generator::K1, Generator::K1inv},
                                 std::tuple{Generator::E2, Generator::F2, Generator::K2, Generator::K2inv}}) {
        auto lhs = c * (act(E, act(F, x)) - act(F, act(E, x)));
        auto rhs = act(K, x) - act(Ki, x);
        CHECK(lhs == rhs);
      }
      // [E_1, F_2] = 0
      CHECK(act(Generator::E1, act(Generator::F2, x)) == act(Generator::F2, act(Generator::E1, x)));
    }
}

TEST_CASE("quantum Serre relations on tensor products") {
  std::mt19937 rng(9);
  const LaurentPoly two = quantum_int(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_vector(rng, 3);
    for (auto [A, B] : {std::pair{Generator::E1, Generator::E2}, std::pair{Generator::E2, Generator::E1},
                        std::pair{Generator::F1, Generator::F2}, std::pair{Generator::F2, Generator::F1}}) {
      auto aab = act(A, act(A, act(B, x)));
      auto aba = act(A, act(B, act(A, x)));
      auto baa = act(B, act(A, act(A, x)));
      CHECK((aab - two * aba + baa).is_zero());
    }
  }
}

TEST_CASE("lex_compare") {
  CHECK(lex_compare({1, -1}, {1, -1}) == 0);
  CHECK(lex_compare({1, 0, -1}, {1, -1, 0}) == 1);
  CHECK(lex_compare({0, 1, 1}, {1, -1, -1}) == -1);
  CHECK_THROWS_AS(lex_compare({1}, {1, 0}), MismatchError);
}

TEST_CASE("string formats") {
  CHECK(to_string(SignString{P, M, M}) == "+--");
  CHECK(parse_signs("+-\xE2\x88\x92+") == SignString{P, M, M, P});
  CHECK(to_string(StateString{1, 0, -1}) == "+0-");
  CHECK(parse_states("+0-") == StateString{1, 0, -1});
  CHECK_THROWS_AS(parse_signs("+x"), ParseError);
  try {
    parse_states("+0q-");
    FAIL("expected a parse error");
  } catch (const ParseError &err) {
    CHECK(err.column() == 2);
  }
}

TEST_CASE("tensor vectors") {
  auto b = b_pm();
  CHECK(b.leading_state() == StateString{1, -1});
  auto bb = tensor(b, b);
  CHECK(bb.size() == 9);
  CHECK(bb.coefficient({0, 0, 0, 0}) == v(-2));
  CHECK(is_invariant(bb));
  CHECK(parse_tensor(to_text(bb)) == bb);
  CHECK(parse_tensor(to_text(TensorVector::basis({}, {}))) == TensorVector::basis({}, {}));
  CHECK_THROWS_AS(parse_tensor("signs +-\n+- [[0,1]]\n"), ParseError);             // truncated
  CHECK_THROWS_AS(parse_tensor("signs +-\n+- [[0,1]]\nend 2\n"), ParseError);      // wrong count
  CHECK_THROWS_AS(parse_tensor("signs +-\n+-0 [[0,1]]\nend 1\n"), ParseError);     // bad length
  CHECK_THROWS_AS(b.add({1}, 1), MismatchError);
  auto z = b - b;
  CHECK(z.is_zero());
}
