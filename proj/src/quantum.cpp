#include "spider/quantum.hpp"

#include "spider/errors.hpp"

#include <sstream>

namespace spider {

WeightVec weight(Sign s, int j) {
  if (s == Sign::Plus) {
    switch (j) {
    case 1: return {1, 0};
    case 0: return {-1, 1};
    case -1: return {0, -1};
    }
  } else {
    switch (j) {
    case 1: return {0, 1};
    case 0: return {1, -1};
    case -1: return {-1, 0};
    }
  }
  throw InvalidInput("state out of range: " + std::to_string(j));
}

std::string to_string(const SignString &s) {
  std::string out;
  for (Sign x : s)
    out += x == Sign::Plus ? '+' : '-';
  return out;
}

std::string to_string(const StateString &j) {
  std::string out;
  for (auto x : j)
    out += x > 0 ? '+' : (x < 0 ? '-' : '0');
  return out;
}

namespace {

// Walks a string returning one symbol at a time; U+2212 counts as '-'.
template <class F> void each_symbol(std::string_view text, const char *what, F &&f) {
  std::size_t col = 0;
  for (std::size_t i = 0; i < text.size(); ++col) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      f('-', col);
      i += 3;
      continue;
    }
    char c = text[i++];
    if (c == ' ' || c == ',')
      continue;
    if (!f(c, col))
      throw ParseError(std::string("unexpected character '") + c + "' in " + what, 0, col);
  }
}

} // namespace

SignString parse_signs(std::string_view text) {
  SignString out;
  each_symbol(text, "sign string", [&](char c, std::size_t) {
    if (c == '+')
      out.push_back(Sign::Plus);
    else if (c == '-')
      out.push_back(Sign::Minus);
    else
      return false;
    return true;
  });
  return out;
}

StateString parse_states(std::string_view text) {
  StateString out;
  each_symbol(text, "state string", [&](char c, std::size_t) {
    if (c == '+' || c == '1')
      out.push_back(1);
    else if (c == '-')
      out.push_back(-1);
    else if (c == '0')
      out.push_back(0);
    else
      return false;
    return true;
  });
  return out;
}

int lex_compare(const StateString &x, const StateString &y) {
  if (x.size() != y.size())
    throw MismatchError("state strings of different length");
  return x < y ? -1 : (y < x ? 1 : 0);
}

TensorVector TensorVector::basis(SignString signs, StateString state) {
  TensorVector x(std::move(signs));
  x.add(state, 1);
  return x;
}

void TensorVector::check(const StateString &j) const {
  if (j.size() != signs_.size())
    throw MismatchError("state string length " + std::to_string(j.size()) +
                        " does not match sign string length " + std::to_string(signs_.size()));
}

LaurentPoly TensorVector::coefficient(const StateString &j) const {
  auto it = entries_.find(j);
  return it == entries_.end() ? LaurentPoly() : it->second;
}

void TensorVector::add(const StateString &j, const LaurentPoly &p) {
  if (p.is_zero())
    return;
  check(j);
  auto [it, inserted] = entries_.try_emplace(j, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero())
      entries_.erase(it);
  }
}

void TensorVector::add_scaled(const TensorVector &x, const LaurentPoly &c) {
  if (x.signs_ != signs_)
    throw MismatchError("tensor vectors over different sign strings");
  if (c.is_zero())
    return;
  for (const auto &[j, p] : x.entries_)
    add(j, c * p);
}

TensorVector &TensorVector::operator+=(const TensorVector &x) {
  add_scaled(x, 1);
  return *this;
}

TensorVector &TensorVector::operator-=(const TensorVector &x) {
  add_scaled(x, -1);
  return *this;
}

TensorVector operator*(const LaurentPoly &c, const TensorVector &x) {
  TensorVector out(x.signs_);
  out.add_scaled(x, c);
  return out;
}

TensorVector tensor(const TensorVector &x, const TensorVector &y) {
  SignString s = x.signs();
  s.insert(s.end(), y.signs().begin(), y.signs().end());
  TensorVector out(s);
  for (const auto &[jx, px] : x.entries())
    for (const auto &[jy, py] : y.entries()) {
      StateString j = jx;
      j.insert(j.end(), jy.begin(), jy.end());
      out.add(j, px * py);
    }
  return out;
}

std::string to_text(const TensorVector &x) {
  std::ostringstream os;
  os << "signs " << to_string(x.signs()) << '\n';
  for (const auto &[j, p] : x.entries())
    os << (j.empty() ? "." : to_string(j)) << ' ' << to_text(p) << '\n';
  os << "end " << x.size() << '\n';
  return os.str();
}

TensorVector parse_tensor(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string &msg) -> void { throw ParseError("tensor: " + msg, lineno, 0); };

  if (!std::getline(is, line) || line.rfind("signs", 0) != 0)
    fail("missing 'signs' header");
  std::string s = line.substr(5);
  while (!s.empty() && s.front() == ' ')
    s.erase(s.begin());
  TensorVector out(parse_signs(s));
  std::size_t count = 0;
  bool ended = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty())
      continue;
    if (ended)
      fail("data after trailer");
    if (line.rfind("end ", 0) == 0) {
      std::size_t n = 0;
      try {
        n = std::stoul(line.substr(4));
      } catch (const std::exception &) {
        fail("bad trailer");
      }
      if (n != count)
        fail("entry count mismatch");
      ended = true;
      continue;
    }
    auto sp = line.find(' ');
    if (sp == std::string::npos)
      fail("expected '<state> <poly>'");
    std::string js = line.substr(0, sp);
    StateString j = js == "." ? StateString{} : parse_states(js);
    if (j.size() != out.signs().size())
      fail("state length mismatch");
    LaurentPoly p = parse_laurent(line.substr(sp + 1));
    if (p.is_zero())
      fail("zero coefficient");
    if (!out.coefficient(j).is_zero())
      fail("duplicate state");
    out.add(j, p);
    ++count;
  }
  if (!ended)
    fail("missing trailer (truncated)");
  return out;
}

namespace {

// (-v)^m
LaurentPoly minus_v_pow(int m) { return LaurentPoly::monomial(m % 2 == 0 ? 1 : -1, m); }

int cartan_coord(int i, Sign s, int j) {
  WeightVec w = weight(s, j);
  return i == 1 ? w.a : w.b;
}

// Single-factor raising/lowering; returns the new state or 2 if the action is zero.
int single(Generator g, Sign s, int j) {
  const bool p = s == Sign::Plus;
  switch (g) {
  case Generator::E1:
    if (p && j == 0) return 1;
    if (!p && j == -1) return 0;
    break;
  case Generator::F1:
    if (p && j == 1) return 0;
    if (!p && j == 0) return -1;
    break;
  case Generator::E2:
    if (p && j == -1) return 0;
    if (!p && j == 0) return 1;
    break;
  case Generator::F2:
    if (p && j == 0) return -1;
    if (!p && j == 1) return 0;
    break;
  default:
    break;
  }
  return 2;
}

} // namespace

TensorVector act(Generator g, const TensorVector &x) {
  const auto &S = x.signs();
  const std::size_t n = S.size();
  TensorVector out(S);

  if (g == Generator::K1 || g == Generator::K2 || g == Generator::K1inv || g == Generator::K2inv) {
    const int i = (g == Generator::K1 || g == Generator::K1inv) ? 1 : 2;
    const int sgn = (g == Generator::K1 || g == Generator::K2) ? 1 : -1;
    for (const auto &[j, p] : x.entries()) {
      int m = 0;
      for (std::size_t k = 0; k < n; ++k)
        m += cartan_coord(i, S[k], j[k]);
      out.add(j, minus_v_pow(sgn * m) * p);
    }
    return out;
  }

  const bool raising = g == Generator::E1 || g == Generator::E2;
  const int i = (g == Generator::E1 || g == Generator::F1) ? 1 : 2;
  for (const auto &[j, p] : x.entries()) {
    for (std::size_t k = 0; k < n; ++k) {
      int nj = single(g, S[k], j[k]);
      if (nj == 2)
        continue;
      // E carries K^-1 on the factors to its left, F carries K on those to its right.
      int m = 0;
      if (raising) {
        for (std::size_t l = 0; l < k; ++l)
          m -= cartan_coord(i, S[l], j[l]);
      } else {
        for (std::size_t l = k + 1; l < n; ++l)
          m += cartan_coord(i, S[l], j[l]);
      }
      StateString nj_state = j;
      nj_state[k] = static_cast<std::int8_t>(nj);
      out.add(nj_state, minus_v_pow(m) * p);
    }
  }
  return out;
}

bool is_invariant(const TensorVector &x) {
  for (Generator g : {Generator::E1, Generator::E2, Generator::F1, Generator::F2})
    if (!act(g, x).is_zero())
      return false;
  for (Generator g : {Generator::K1, Generator::K2})
    if (!(act(g, x) == x))
      return false;
  return true;
}

} // namespace spider
