// V+ / V- representations of U_q(sl3), sparse tensor vectors and the
// generator actions through the second coproduct.

#pragma once

#include "spider/laurent.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace spider {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

using SignString = std::vector<Sign>;
// Entries in {-1, 0, 1}. std::vector's ordering is exactly the lex order on states.
using StateString = std::vector<std::int8_t>;

struct WeightVec {
  int a = 0; // mu+ coordinate
  int b = 0; // mu- coordinate

  bool dominant() const { return a >= 0 && b >= 0; }
  WeightVec &operator+=(const WeightVec &o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  WeightVec &operator-=(const WeightVec &o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend WeightVec operator+(WeightVec x, const WeightVec &y) { return x += y; }
  friend WeightVec operator-(WeightVec x, const WeightVec &y) { return x -= y; }
  friend bool operator==(const WeightVec &, const WeightVec &) = default;
};

WeightVec weight(Sign s, int j);
inline const WeightVec mu_plus{1, 0};
inline const WeightVec mu_minus{0, 1};

std::string to_string(const SignString &s);
std::string to_string(const StateString &j);
// Accept '+', '-' and U+2212. Throw ParseError.
SignString parse_signs(std::string_view text);
StateString parse_states(std::string_view text);

// -1, 0, 1. Throws MismatchError on length mismatch.
int lex_compare(const StateString &x, const StateString &y);

class TensorVector {
public:
  using Entries = std::map<StateString, LaurentPoly>;

  TensorVector() = default;
  explicit TensorVector(SignString signs) : signs_(std::move(signs)) {}

  static TensorVector basis(SignString signs, StateString state);

  const SignString &signs() const { return signs_; }
  const Entries &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  LaurentPoly coefficient(const StateString &j) const;
  void add(const StateString &j, const LaurentPoly &p);
  // this += c * x
  void add_scaled(const TensorVector &x, const LaurentPoly &c);

  TensorVector &operator+=(const TensorVector &x);
  TensorVector &operator-=(const TensorVector &x);
  friend TensorVector operator+(TensorVector a, const TensorVector &b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector &b) { return a -= b; }
  friend TensorVector operator*(const LaurentPoly &c, const TensorVector &x);
  friend bool operator==(const TensorVector &, const TensorVector &) = default;

  // Lex-greatest state with nonzero coefficient; requires !is_zero().
  const StateString &leading_state() const { return entries_.rbegin()->first; }

private:
  void check(const StateString &j) const;

  SignString signs_;
  Entries entries_;
};

TensorVector tensor(const TensorVector &x, const TensorVector &y);

// Text format: "signs <S>", one "<J> <poly>" line per entry in ascending
// state order, then "end <count>".
std::string to_text(const TensorVector &x);
TensorVector parse_tensor(std::string_view text);

enum class Generator { E1, E2, F1, F2, K1, K2, K1inv, K2inv };

TensorVector act(Generator g, const TensorVector &x);
bool is_invariant(const TensorVector &x);

} // namespace spider
