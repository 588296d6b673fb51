#include "spider/laurent.hpp"

#include "spider/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace spider {

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0)
    terms_.push_back({0, std::move(constant)});
}

LaurentPoly LaurentPoly::monomial(Integer coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient != 0)
    p.terms_.push_back({exponent, std::move(coefficient)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &a, const Term &b) { return a.exponent < b.exponent; });
  LaurentPoly p;
  for (auto &t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent)
      p.terms_.back().coefficient += t.coefficient;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().coefficient == 0)
      p.terms_.pop_back();
  }
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term &t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent)
    return it->coefficient;
  return 0;
}

int LaurentPoly::min_exponent() const { return terms_.front().exponent; }
int LaurentPoly::max_exponent() const { return terms_.back().exponent; }

void LaurentPoly::add_scaled(const LaurentPoly &rhs, const Integer &c, int shift) {
  if (c == 0 || rhs.is_zero())
    return;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exponent < b->exponent + shift)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent + shift < a->exponent) {
      out.push_back({b->exponent + shift, b->coefficient * c});
      ++b;
    } else {
      Integer sum = a->coefficient + b->coefficient * c;
      if (sum != 0)
        out.push_back({a->exponent, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs) {
  add_scaled(rhs, 1, 0);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs) {
  add_scaled(rhs, -1, 0);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_)
    t.coefficient = -t.coefficient;
  return p;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly out;
  for (const auto &t : b.terms_)
    out.add_scaled(a, t.coefficient, t.exponent);
  return out;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &rhs) { return *this = *this * rhs; }

bool operator<(const LaurentPoly &a, const LaurentPoly &b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Term &x, const Term &y) {
        if (x.exponent != y.exponent)
          return x.exponent < y.exponent;
        return x.coefficient < y.coefficient;
      });
}

LaurentPoly add(const LaurentPoly &a, const LaurentPoly &b) { return a + b; }
LaurentPoly mul(const LaurentPoly &a, const LaurentPoly &b) { return a * b; }

LaurentPoly bar(const LaurentPoly &p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({-it->exponent, it->coefficient});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_int(int n) {
  if (n < 1)
    throw InvalidInput("quantum_int requires n >= 1");
  // sum_{k=0}^{n-1} (-v)^{n-1-2k}; all exponents share the parity of n-1.
  const int sign = (n - 1) % 2 == 0 ? 1 : -1;
  std::vector<Term> terms;
  for (int k = 0; k < n; ++k)
    terms.push_back({n - 1 - 2 * k, sign});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly sym_correction(const LaurentPoly &p) {
  std::vector<Term> terms;
  for (const auto &t : p.terms()) {
    if (t.exponent == 0) {
      terms.push_back(t);
    } else if (t.exponent > 0) {
      terms.push_back(t);
      terms.push_back({-t.exponent, t.coefficient});
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

bool is_negative_exponent(const LaurentPoly &p) {
  return p.is_zero() || p.max_exponent() < 0;
}

LaurentPoly nonnegative_part(const LaurentPoly &p) {
  std::vector<Term> terms;
  for (const auto &t : p.terms())
    if (t.exponent >= 0)
      terms.push_back(t);
  return LaurentPoly::from_terms(std::move(terms));
}

bool has_natural_coefficients(const LaurentPoly &p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const Term &t) { return t.coefficient > 0; });
}

std::string to_text(const LaurentPoly &p) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto &t : p.terms()) {
    if (!first)
      os << ',';
    first = false;
    os << '[' << t.exponent << ',' << t.coefficient << ']';
  }
  os << ']';
  return os.str();
}

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c))
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == digits)
      fail("expected integer");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("laurent polynomial: " + msg, 0, pos_);
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

LaurentPoly parse_laurent(std::string_view text) {
  Cursor c(text);
  c.expect('[');
  std::vector<Term> terms;
  std::optional<int> last;
  if (!c.peek(']')) {
    while (true) {
      c.expect('[');
      std::string e = c.integer();
      c.expect(',');
      std::string k = c.integer();
      c.expect(']');
      int exponent = 0;
      try {
        exponent = std::stoi(e);
      } catch (const std::exception &) {
        c.fail("exponent out of range");
      }
      if (last && exponent <= *last)
        c.fail("exponents must be strictly ascending");
      Integer coeff(k.front() == '+' ? k.substr(1) : k);
      if (coeff == 0)
        c.fail("zero coefficient");
      terms.push_back({exponent, coeff});
      last = exponent;
      if (c.peek(']'))
        break;
      c.expect(',');
    }
  }
  c.expect(']');
  if (!c.at_end())
    c.fail("trailing characters");
  return LaurentPoly::from_terms(std::move(terms));
}

std::string to_pretty(const LaurentPoly &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Integer c = it->coefficient;
    const bool negative = c < 0;
    if (negative)
      c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (it->exponent == 0) {
      os << c;
      continue;
    }
    if (c != 1)
      os << c;
    os << 'v';
    if (it->exponent != 1)
      os << '^' << it->exponent;
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << to_pretty(p); }

} // namespace spider
