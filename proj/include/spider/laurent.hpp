// Integer Laurent polynomials in the single variable v.
//
// All coefficients produced anywhere in the library live in Z[v, v^-1].
// Throughout, v = -q^{1/2}, so q-expressions are converted at construction
// time and never appear at runtime.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spider {

using Integer = boost::multiprecision::cpp_int;

struct Term {
  int exponent;
  Integer coefficient;

  friend bool operator==(const Term &, const Term &) = default;
};

// Sparse, exponent-sorted polynomial with no stored zero coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(int constant); // NOLINT: integers promote implicitly
  LaurentPoly(Integer constant);

  static LaurentPoly monomial(Integer coefficient, int exponent);
  // v^exponent
  static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }
  // Builds from unsorted terms; merges duplicates and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(int exponent) const;
  int min_exponent() const; // requires !is_zero()
  int max_exponent() const; // requires !is_zero()

  LaurentPoly &operator+=(const LaurentPoly &rhs);
  LaurentPoly &operator-=(const LaurentPoly &rhs);
  LaurentPoly &operator*=(const LaurentPoly &rhs);
  LaurentPoly operator-() const;

  // Adds c * v^shift * rhs in place.
  void add_scaled(const LaurentPoly &rhs, const Integer &c, int shift);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

  // Lexicographic on the term list; only meaningful for deterministic ordering.
  friend bool operator<(const LaurentPoly &a, const LaurentPoly &b);

private:
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly mul(const LaurentPoly &a, const LaurentPoly &b);

// v^k -> v^-k on every term.
LaurentPoly bar(const LaurentPoly &p);

// [n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}) with q^{1/2} = -v.
LaurentPoly quantum_int(int n);

// p_0 + sum_{k>0} p_k (v^k + v^-k). Bar-invariant; p minus it is negative-exponent.
LaurentPoly sym_correction(const LaurentPoly &p);

// True iff every exponent is strictly negative (the zero polynomial qualifies).
bool is_negative_exponent(const LaurentPoly &p);

// The terms with exponent >= 0.
LaurentPoly nonnegative_part(const LaurentPoly &p);

// True iff every coefficient is non-negative.
bool has_natural_coefficients(const LaurentPoly &p);

// Serialized form: [[exponent,coefficient],...] in ascending exponent order.
std::string to_text(const LaurentPoly &p);
// Inverse of to_text. Throws ParseError.
LaurentPoly parse_laurent(std::string_view text);

// Human-readable form, e.g. "v^2 + 1 + v^-2".
std::string to_pretty(const LaurentPoly &p);

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p);

} // namespace spider
