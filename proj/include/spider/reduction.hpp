// Rewriting with the circle, bigon and square relations, and rotation.
#pragma once

#include "spider/web.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace spider {

class WebCombination {
public:
  struct Term {
    Web web;
    LaurentPoly coefficient;
  };

  WebCombination(SignString top = {}, SignString bottom = {});
  WebCombination(const Web &w, const LaurentPoly &c = LaurentPoly(1));

  // Throws MismatchError on a different boundary.
  void add(const Web &w, const LaurentPoly &c);
  void add(const WebCombination &other, const LaurentPoly &c = LaurentPoly(1));

  const SignString &top() const { return top_; }
  const SignString &bottom() const { return bottom_; }
  // Keyed by canonical encoding.
  const std::map<std::string, Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  // Coefficient of the web with this encoding (zero if absent).
  LaurentPoly coefficient(const std::string &encoding) const;

  friend bool operator==(const WebCombination &a, const WebCombination &b);

private:
  SignString top_, bottom_;
  std::map<std::string, Term> terms_;
};

// Every term rewritten into non-elliptic webs.
WebCombination reduce(const WebCombination &c);
WebCombination reduce(const Web &w);
// Same, picking a random elliptic face at each step.
WebCombination reduce(const WebCombination &c, std::uint64_t seed);

// Moves the first top boundary point to the end, then reduces.
// Needs a web without bottom boundary.
WebCombination rotate(const Web &w);

// Sum of term expansions (invariant webs only).
TensorVector evaluate(const WebCombination &c);

// Terms in encoding order, each as "coefficient <laurent>" then the web text.
std::string to_text(const WebCombination &c);

} // namespace spider
