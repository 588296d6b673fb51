#include "spider/spider.h"

#include "spider/canonical.hpp"
#include "spider/errors.hpp"
#include "spider/growth.hpp"
#include "spider/reduction.hpp"
#include "spider/report.hpp"
#include "spider/svg.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <optional>
#include <string>

struct spider_web {
  spider::Web web;
};
struct spider_tensor {
  spider::TensorVector tensor;
};
struct spider_combination {
  spider::WebCombination combination;
};
struct spider_report {
  spider::ScanReport report;
};
struct spider_options {
  spider::ScanOptions options;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0, last_column = 0;

spider_status fail(spider_status s, const std::string &msg) {
  last_error = msg;
  last_line = last_column = 0;
  return s;
}

// Runs f, mapping exceptions to status codes.
template <class F> spider_status guard(F &&f) {
  try {
    f();
    last_error.clear();
    last_line = last_column = 0;
    return SPIDER_OK;
  } catch (const spider::ParseError &e) {
    last_error = e.what();
    last_line = e.line() + 1;
    last_column = e.column() + 1;
    return SPIDER_ERR_PARSE;
  } catch (const spider::MismatchError &e) {
    return fail(SPIDER_ERR_MISMATCH, e.what());
  } catch (const spider::InvalidInput &e) {
    return fail(SPIDER_ERR_INVALID, e.what());
  } catch (const std::filesystem::filesystem_error &e) {
    return fail(SPIDER_ERR_IO, e.what());
  } catch (const std::bad_alloc &) {
    return fail(SPIDER_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(SPIDER_ERR_INTERNAL, e.what());
  }
}

char *dup(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (!p)
    throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class... T> void need(const T *...p) {
  if (((p == nullptr) || ...))
    throw spider::InvalidInput("null argument");
}

spider::ScanOptions opts(const spider_options *o) { return o ? o->options : spider::ScanOptions{}; }

std::string lines(const std::vector<spider::SignString> &v) {
  std::string out;
  for (const auto &s : v)
    out += spider::to_string(s) + "\n";
  return out;
}

} // namespace

#define NEED(...)                                                                                                    \
  do {                                                                                                               \
    if (!spider_all_set(__VA_ARGS__))                                                                                \
      return fail(SPIDER_ERR_NULL, "null argument");                                                                 \
  } while (0)

template <class... T> static bool spider_all_set(const T *...p) { return ((p != nullptr) && ...); }

extern "C" {

const char *spider_version(void) { return SPIDER_VERSION; }
const char *spider_last_error(void) { return last_error.c_str(); }

void spider_last_error_position(size_t *line, size_t *column) {
  if (line)
    *line = last_line;
  if (column)
    *column = last_column;
}

void spider_string_free(char *s) { std::free(s); }

spider_status spider_options_new(spider_options **out) {
  NEED(out);
  return guard([&] { *out = new spider_options{}; });
}
void spider_options_free(spider_options *o) { delete o; }

spider_status spider_options_set_cache_dir(spider_options *o, const char *dir) {
  NEED(o);
  o->options.cache_dir = dir ? dir : "";
  return SPIDER_OK;
}

spider_status spider_options_set_jobs(spider_options *o, unsigned jobs) {
  NEED(o);
  if (jobs == 0)
    return fail(SPIDER_ERR_INVALID, "jobs must be positive");
  o->options.jobs = jobs;
  return SPIDER_OK;
}

spider_status spider_options_set_warn(spider_options *o, spider_warn_fn fn, void *user) {
  NEED(o);
  if (fn)
    o->options.warn = [fn, user](const std::string &m) { fn(m.c_str(), user); };
  else
    o->options.warn = nullptr;
  return SPIDER_OK;
}

spider_status spider_parse_signs(const char *text, char **out) {
  NEED(text);
  return guard([&] {
    auto s = spider::to_string(spider::parse_signs(text));
    if (out)
      *out = dup(s);
  });
}

spider_status spider_parse_states(const char *text, char **out) {
  NEED(text);
  return guard([&] {
    auto s = spider::to_string(spider::parse_states(text));
    if (out)
      *out = dup(s);
  });
}

spider_status spider_sign_strings(size_t n, char **out) {
  NEED(out);
  return guard([&] {
    if (n > 20)
      throw spider::InvalidInput("sign string length above 20");
    *out = dup(lines(spider::all_sign_strings(n)));
  });
}

spider_status spider_representatives(size_t plus, size_t minus, char **out) {
  NEED(out);
  return guard([&] {
    if (plus + minus > 24)
      throw spider::InvalidInput("sign string length above 24");
    *out = dup(lines(spider::representatives(plus, minus)));
  });
}

spider_status spider_class_representative(const char *signs, char **out) {
  NEED(signs, out);
  return guard([&] { *out = dup(spider::to_string(spider::class_representative(spider::parse_signs(signs)))); });
}

spider_status spider_dominant_count(const char *signs, uint64_t *out) {
  NEED(signs, out);
  return guard([&] { *out = spider::dominant_count(spider::parse_signs(signs)); });
}

spider_status spider_dominant_paths(const char *signs, char **out) {
  NEED(signs, out);
  return guard([&] {
    std::string text;
    for (const auto &j : spider::dominant_paths(spider::parse_signs(signs)))
      text += spider::to_string(j) + "\n";
    *out = dup(text);
  });
}

spider_status spider_web_parse(const char *text, spider_web **out) {
  NEED(text, out);
  return guard([&] { *out = new spider_web{spider::Web(spider::parse_slice_word(text))}; });
}

void spider_web_free(spider_web *w) { delete w; }

spider_status spider_web_clone(const spider_web *w, spider_web **out) {
  NEED(w, out);
  return guard([&] { *out = new spider_web{*w}; });
}

spider_status spider_web_format(const spider_web *w, spider_format f, char **out) {
  NEED(w, out);
  return guard([&] { *out = dup(f == SPIDER_FORMAT_JSON ? spider::to_json(w->web) : spider::to_text(w->web.drawing())); });
}

spider_status spider_web_encoding(const spider_web *w, char **out) {
  NEED(w, out);
  return guard([&] { *out = dup(w->web.encoding()); });
}

spider_status spider_web_equal(const spider_web *a, const spider_web *b, int *out) {
  NEED(a, b, out);
  *out = a->web.encoding() == b->web.encoding();
  return SPIDER_OK;
}

spider_status spider_web_is_invariant(const spider_web *w, int *out) {
  NEED(w, out);
  *out = w->web.is_invariant_web();
  return SPIDER_OK;
}

spider_status spider_web_is_non_elliptic(const spider_web *w, int *out) {
  NEED(w, out);
  return guard([&] { *out = spider::is_non_elliptic(w->web); });
}

spider_status spider_grow(const char *signs, const char *states, spider_web **web, char **residual_signs,
                          char **residual_states) {
  NEED(signs, states, web);
  return guard([&] {
    auto r = spider::grow(spider::parse_signs(signs), spider::parse_states(states));
    std::string rs = spider::to_string(r.residual_signs), rj = spider::to_string(r.residual_states);
    char *a = residual_signs ? dup(rs) : nullptr;
    char *b = nullptr;
    try {
      b = residual_states ? dup(rj) : nullptr;
    } catch (...) {
      std::free(a);
      throw;
    }
    *web = new spider_web{std::move(r.web)};
    if (residual_signs)
      *residual_signs = a;
    if (residual_states)
      *residual_states = b;
  });
}

spider_status spider_grow_random(const char *signs, const char *states, uint64_t seed, spider_web **web) {
  NEED(signs, states, web);
  return guard([&] {
    auto r = spider::grow_random(spider::parse_signs(signs), spider::parse_states(states), seed);
    *web = new spider_web{std::move(r.web)};
  });
}

spider_status spider_min_cut_states(const spider_web *w, char **out) {
  NEED(w, out);
  return guard([&] { *out = dup(spider::to_string(spider::min_cut_states(w->web))); });
}

spider_status spider_evaluate(const spider_web *w, spider_tensor **out) {
  NEED(w, out);
  return guard([&] { *out = new spider_tensor{spider::evaluate(w->web)}; });
}

spider_status spider_basis_expansion(const char *signs, const char *states, const spider_options *o,
                                     spider_tensor **out) {
  NEED(signs, states, out);
  return guard([&] {
    const auto s = spider::parse_signs(signs);
    const auto j = spider::parse_states(states);
    *out = new spider_tensor{spider::basis_expansion(s, j, opts(o))};
  });
}

void spider_tensor_free(spider_tensor *t) { delete t; }

spider_status spider_tensor_parse(const char *text, spider_tensor **out) {
  NEED(text, out);
  return guard([&] { *out = new spider_tensor{spider::parse_tensor(text)}; });
}

spider_status spider_tensor_format(const spider_tensor *t, spider_format f, char **out) {
  NEED(t, out);
  return guard([&] { *out = dup(f == SPIDER_FORMAT_JSON ? spider::to_json(t->tensor) : spider::to_text(t->tensor)); });
}

spider_status spider_tensor_coefficient(const spider_tensor *t, const char *states, char **out) {
  NEED(t, states, out);
  return guard([&] {
    const auto j = spider::parse_states(states);
    if (j.size() != t->tensor.signs().size())
      throw spider::MismatchError("state string length does not match the tensor");
    *out = dup(spider::to_text(t->tensor.coefficient(j)));
  });
}

spider_status spider_tensor_size(const spider_tensor *t, size_t *out) {
  NEED(t, out);
  *out = t->tensor.entries().size();
  return SPIDER_OK;
}

spider_status spider_tensor_is_invariant(const spider_tensor *t, int *out) {
  NEED(t, out);
  return guard([&] { *out = spider::is_invariant(t->tensor); });
}

spider_status spider_reduce(const spider_web *w, uint64_t seed, spider_combination **out) {
  NEED(w, out);
  return guard([&] {
    spider::WebCombination c(w->web);
    *out = new spider_combination{seed ? spider::reduce(c, seed) : spider::reduce(c)};
  });
}

spider_status spider_rotate(const spider_web *w, spider_combination **out) {
  NEED(w, out);
  return guard([&] { *out = new spider_combination{spider::rotate(w->web)}; });
}

void spider_combination_free(spider_combination *c) { delete c; }

spider_status spider_combination_format(const spider_combination *c, spider_format f, char **out) {
  NEED(c, out);
  return guard([&] {
    *out = dup(f == SPIDER_FORMAT_JSON ? spider::to_json(c->combination) : spider::to_text(c->combination));
  });
}

spider_status spider_combination_size(const spider_combination *c, size_t *out) {
  NEED(c, out);
  *out = c->combination.size();
  return SPIDER_OK;
}

spider_status spider_combination_term(const spider_combination *c, size_t k, spider_web **web, char **coefficient) {
  NEED(c, web);
  return guard([&] {
    if (k >= c->combination.size())
      throw spider::InvalidInput("term index out of range");
    auto it = c->combination.terms().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(k));
    char *coef = coefficient ? dup(spider::to_text(it->second.coefficient)) : nullptr;
    try {
      *web = new spider_web{it->second.web};
    } catch (...) {
      std::free(coef);
      throw;
    }
    if (coefficient)
      *coefficient = coef;
  });
}

spider_status spider_combination_evaluate(const spider_combination *c, spider_tensor **out) {
  NEED(c, out);
  return guard([&] { *out = new spider_tensor{spider::evaluate(c->combination)}; });
}

spider_status spider_scan(const char *signs, const spider_options *o, spider_report **out) {
  NEED(signs, out);
  return guard([&] { *out = new spider_report{spider::scan(spider::parse_signs(signs), opts(o))}; });
}

void spider_report_free(spider_report *r) { delete r; }

spider_status spider_report_format(const spider_report *r, spider_format f, char **out) {
  NEED(r, out);
  return guard([&] { *out = dup(f == SPIDER_FORMAT_JSON ? spider::to_json(r->report) : spider::to_text(r->report)); });
}

spider_status spider_reports_format(const spider_report *const *rs, size_t n, spider_format f, char **out) {
  NEED(out);
  if (n > 0 && !rs)
    return fail(SPIDER_ERR_NULL, "null argument");
  return guard([&] {
    std::vector<spider::ScanReport> v;
    for (size_t i = 0; i < n; ++i) {
      need(rs[i]);
      v.push_back(rs[i]->report);
    }
    if (f == SPIDER_FORMAT_JSON) {
      *out = dup(spider::to_json(v));
    } else {
      std::string text;
      for (const auto &r : v)
        text += spider::to_text(r);
      *out = dup(text);
    }
  });
}

spider_status spider_report_failure_count(const spider_report *r, size_t *out) {
  NEED(r, out);
  *out = r->report.failures.size();
  return SPIDER_OK;
}

spider_status spider_report_dimension(const spider_report *r, size_t *out) {
  NEED(r, out);
  *out = r->report.dimension;
  return SPIDER_OK;
}

spider_status spider_dual_canonical_basis(const char *signs, const spider_options *o, spider_format f, char **out) {
  NEED(signs, out);
  return guard([&] {
    const auto s = spider::parse_signs(signs);
    const auto b = spider::dual_canonical_basis(s, opts(o));
    *out = dup(f == SPIDER_FORMAT_JSON ? spider::basis_to_json(s, b) : spider::basis_to_text(s, b));
  });
}

spider_status spider_check_correction(const spider_options *o, int *ok, char **summary) {
  NEED(ok);
  return guard([&] {
    const auto c = spider::check_correction(opts(o));
    *ok = c.ok();
    if (summary) {
      std::string t = "hexagon_state " + spider::to_string(c.hexagon_state) + "\n";
      t += "cup_state " + spider::to_string(c.cup_state) + "\n";
      t += std::string("hexagon_fails ") + (c.hexagon_fails ? "yes" : "no") + "\n";
      t += std::string("cups_pass ") + (c.cups_pass ? "yes" : "no") + "\n";
      t += std::string("difference_passes ") + (c.difference_passes ? "yes" : "no") + "\n";
      t += std::string("matches_basis ") + (c.matches_basis ? "yes" : "no") + "\n";
      *summary = dup(t);
    }
  });
}

spider_status spider_render_svg(const spider_web *w, const char *top_state, const char *bottom_state, char **out) {
  NEED(w, out);
  return guard([&] {
    std::optional<spider::StateRecord> st;
    if (top_state) {
      const auto top = spider::parse_states(top_state);
      const auto bottom = bottom_state ? spider::parse_states(bottom_state) : spider::StateString{};
      st = spider::find_state(w->web, top, bottom);
      if (!st)
        throw spider::InvalidInput("no nonzero state has boundary " + std::string(top_state) +
                                   (bottom_state ? std::string(" / ") + bottom_state : std::string()));
    } else if (bottom_state) {
      throw spider::InvalidInput("a bottom state needs a top state");
    }
    *out = dup(spider::render_svg(w->web, st));
  });
}

} // extern "C"
