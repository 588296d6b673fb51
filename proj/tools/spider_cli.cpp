// Command-line front end. Talks to the library only through the C interface.

#include "spider/spider.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Failure {
  int code;
  std::string message;
};

void check(spider_status s) {
  if (s == SPIDER_OK)
    return;
  throw Failure{s == SPIDER_ERR_PARSE ? 2 : 1, spider_last_error()};
}

// Takes ownership of a library string.
std::string take(char *p) {
  std::string s = p ? p : "";
  spider_string_free(p);
  return s;
}

template <class T, void (*Free)(T *)> struct Deleter {
  void operator()(T *p) const { Free(p); }
};
using WebPtr = std::unique_ptr<spider_web, Deleter<spider_web, spider_web_free>>;
using TensorPtr = std::unique_ptr<spider_tensor, Deleter<spider_tensor, spider_tensor_free>>;
using CombPtr = std::unique_ptr<spider_combination, Deleter<spider_combination, spider_combination_free>>;
using ReportPtr = std::unique_ptr<spider_report, Deleter<spider_report, spider_report_free>>;
using OptsPtr = std::unique_ptr<spider_options, Deleter<spider_options, spider_options_free>>;

std::vector<std::string> split_lines(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    out.push_back(line);
  return out;
}

std::string read_input(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Failure{1, "cannot read " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

WebPtr load_web(const std::string &path) {
  const std::string text = read_input(path);
  spider_web *w = nullptr;
  if (spider_web_parse(text.c_str(), &w) != SPIDER_OK) {
    std::size_t line = 0, col = 0;
    spider_last_error_position(&line, &col);
    std::string where = path == "-" ? "<stdin>" : path;
    std::string msg = spider_last_error();
    if (line) {
      where += ":" + std::to_string(line) + ":" + std::to_string(col);
      // the position is already in front
      const std::string suffix = " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
      if (msg.size() >= suffix.size() && msg.compare(msg.size() - suffix.size(), suffix.size(), suffix) == 0)
        msg.resize(msg.size() - suffix.size());
    }
    throw Failure{2, where + ": " + msg};
  }
  return WebPtr(w);
}

// Diagnostics for bad strings on the command line point at the offending character.
std::string caret(const std::string &what, const std::string &arg) {
  std::size_t line = 0, col = 0;
  spider_last_error_position(&line, &col);
  std::string msg = spider_last_error();
  if (col) {
    msg += "\n  " + what + " " + arg + "\n  " + std::string(what.size() + col, ' ') + "^";
  }
  return msg;
}

void check_arg(spider_status s, const std::string &what, const std::string &arg) {
  if (s == SPIDER_OK)
    return;
  throw Failure{s == SPIDER_ERR_PARSE ? 2 : 1, s == SPIDER_ERR_PARSE ? caret(what, arg) : spider_last_error()};
}

void check_signs(const std::string &s) { check_arg(spider_parse_signs(s.c_str(), nullptr), "sign string", s); }
void check_states(const std::string &s) { check_arg(spider_parse_states(s.c_str(), nullptr), "state string", s); }

struct Global {
  std::string format = "text";
  std::string cache_dir;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::string output;

  spider_format fmt() const { return format == "json" ? SPIDER_FORMAT_JSON : SPIDER_FORMAT_TEXT; }
};

void warn(const char *m, void *) { std::cerr << "warning: " << m << "\n"; }

OptsPtr make_options(const Global &g) {
  spider_options *o = nullptr;
  check(spider_options_new(&o));
  OptsPtr p(o);
  if (!g.cache_dir.empty())
    check(spider_options_set_cache_dir(o, g.cache_dir.c_str()));
  check(spider_options_set_jobs(o, g.jobs));
  check(spider_options_set_warn(o, warn, nullptr));
  return p;
}

// Single writer: stdout, or the --output file written in one go.
void emit(const Global &g, const std::string &text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::string tmp = g.output + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out)
      throw Failure{1, "cannot write " + g.output};
  }
  if (std::rename(tmp.c_str(), g.output.c_str()) != 0)
    throw Failure{1, "cannot write " + g.output};
}

std::string json_text(const nlohmann::ordered_json &j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

void cmd_dims(const Global &g, const std::string &signs) {
  std::uint64_t n = 0;
  check_signs(signs);
  check(spider_dominant_count(signs.c_str(), &n));
  if (g.fmt() == SPIDER_FORMAT_JSON) {
    nlohmann::ordered_json j;
    j["signs"] = signs;
    j["dimension"] = n;
    emit(g, json_text(j));
  } else {
    emit(g, std::to_string(n) + "\n");
  }
}

void cmd_grow(const Global &g, const std::string &signs, const std::string &states, bool seeded) {
  spider_web *w = nullptr;
  char *rs = nullptr, *rj = nullptr;
  check_signs(signs);
  check_states(states);
  check(spider_grow(signs.c_str(), states.c_str(), &w, &rs, &rj));
  WebPtr web(w);
  const std::string residual_signs = take(rs), residual_states = take(rj);
  if (seeded) {
    // A random rule order gives the same web; grow it that way to show it.
    spider_web *r = nullptr;
    check(spider_grow_random(signs.c_str(), states.c_str(), g.seed, &r));
    web.reset(r);
  }
  if (g.fmt() == SPIDER_FORMAT_JSON) {
    char *t = nullptr;
    check(spider_web_format(web.get(), SPIDER_FORMAT_JSON, &t));
    auto j = nlohmann::ordered_json::parse(take(t));
    j["residual_signs"] = residual_signs;
    j["residual_states"] = residual_states;
    emit(g, json_text(j));
    return;
  }
  char *t = nullptr;
  check(spider_web_format(web.get(), SPIDER_FORMAT_TEXT, &t));
  std::string out = take(t);
  if (residual_signs.empty())
    out += "# residual none\n";
  else
    out += "# residual " + residual_signs + " " + residual_states + "\n";
  emit(g, out);
}

void cmd_expand(const Global &g, const std::vector<std::string> &args, const std::string &web_file) {
  spider_tensor *t = nullptr;
  if (!web_file.empty()) {
    if (!args.empty())
      throw Failure{1, "expand takes either --web FILE or a sign string and a state string"};
    auto w = load_web(web_file);
    check(spider_evaluate(w.get(), &t));
  } else {
    if (args.size() != 2)
      throw Failure{1, "expand needs a sign string and a state string, or --web FILE"};
    auto opts = make_options(g);
    check_signs(args[0]);
    check_states(args[1]);
    check(spider_basis_expansion(args[0].c_str(), args[1].c_str(), opts.get(), &t));
  }
  TensorPtr tensor(t);
  char *out = nullptr;
  check(spider_tensor_format(tensor.get(), g.fmt(), &out));
  emit(g, take(out));
}

void cmd_reduce(const Global &g, const std::string &file, bool seeded, bool rotate) {
  auto w = load_web(file);
  spider_combination *c = nullptr;
  if (rotate)
    check(spider_rotate(w.get(), &c));
  else
    check(spider_reduce(w.get(), seeded ? (g.seed ? g.seed : 1) : 0, &c));
  CombPtr comb(c);
  char *out = nullptr;
  check(spider_combination_format(comb.get(), g.fmt(), &out));
  emit(g, take(out));
}

std::vector<std::string> scan_targets(const Global &g, int max_n, const std::vector<std::string> &sign_strings,
                                      const std::string &reps) {
  std::vector<std::string> targets;
  const int chosen = (max_n >= 0) + !sign_strings.empty() + !reps.empty();
  if (chosen != 1)
    throw Failure{1, "scan needs exactly one of --max-n, --sign-string, --representatives"};
  (void)g;
  if (max_n >= 0) {
    if (max_n > 16)
      throw Failure{1, "--max-n above 16 is not supported"};
    for (int n = 1; n <= max_n; ++n) {
      char *s = nullptr;
      check(spider_sign_strings(static_cast<std::size_t>(n), &s));
      for (auto &line : split_lines(take(s)))
        targets.push_back(line);
    }
  } else if (!sign_strings.empty()) {
    for (const auto &s : sign_strings) {
      check_signs(s);
      targets.push_back(s);
    }
  } else {
    // "N": every class representative of length N; "P,M": P plus and M minus signs.
    std::vector<std::pair<std::size_t, std::size_t>> counts;
    auto comma = reps.find(',');
    try {
      if (comma == std::string::npos) {
        const auto n = std::stoul(reps);
        for (std::size_t p = 0; p <= n; ++p)
          counts.emplace_back(p, n - p);
      } else {
        counts.emplace_back(std::stoul(reps.substr(0, comma)), std::stoul(reps.substr(comma + 1)));
      }
    } catch (const std::exception &) {
      throw Failure{2, "--representatives expects N or P,M, got '" + reps + "'"};
    }
    std::set<std::string> seen;
    for (auto [p, m] : counts) {
      char *s = nullptr;
      check(spider_representatives(p, m, &s));
      for (auto &line : split_lines(take(s)))
        if (seen.insert(line).second)
          targets.push_back(line);
    }
  }
  // Shorter first, then lexicographic with + before -.
  std::stable_sort(targets.begin(), targets.end(), [](const std::string &a, const std::string &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return targets;
}

void cmd_scan(const Global &g, int max_n, const std::vector<std::string> &sign_strings, const std::string &reps) {
  const auto targets = scan_targets(g, max_n, sign_strings, reps);
  auto opts = make_options(g);
  std::vector<ReportPtr> reports;
  std::size_t failures = 0;
  for (const auto &s : targets) {
    spider_report *r = nullptr;
    check(spider_scan(s.c_str(), opts.get(), &r));
    reports.emplace_back(r);
    std::size_t k = 0;
    check(spider_report_failure_count(r, &k));
    failures += k;
  }
  std::vector<const spider_report *> raw;
  for (const auto &r : reports)
    raw.push_back(r.get());
  char *out = nullptr;
  check(spider_reports_format(raw.data(), raw.size(), g.fmt(), &out));
  emit(g, take(out));
  std::cerr << "scanned " << targets.size() << " sign strings, " << failures << " failures\n";
}

void cmd_correct(const Global &g, const std::string &signs) {
  auto opts = make_options(g);
  check_signs(signs);
  char *out = nullptr;
  check(spider_dual_canonical_basis(signs.c_str(), opts.get(), g.fmt(), &out));
  emit(g, take(out));
}

void cmd_render(const Global &g, const std::string &file, const std::string &state, const std::string &bottom) {
  auto w = load_web(file);
  char *out = nullptr;
  check(spider_render_svg(w.get(), state.empty() ? nullptr : state.c_str(), bottom.empty() ? nullptr : bottom.c_str(),
                          &out));
  emit(g, take(out));
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations in the A2 spider: web bases, state sums and the dual canonical basis"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  if (const char *env = std::getenv("SPIDER_CACHE_DIR"))
    g.cache_dir = env;

  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", g.cache_dir, "Cache directory for basis expansions (default: $SPIDER_CACHE_DIR)");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  auto *seed_opt = app.add_option("--seed", g.seed, "Seed for randomized rule and face orders");
  app.add_option("-o,--output", g.output, "Write to a file instead of stdout");

  std::string signs, states, file = "-", web_file, state, bottom;
  std::vector<std::string> expand_args, sign_strings;
  std::string reps;
  int max_n = -1;

  auto *dims = app.add_subcommand("dims", "Number of dominant paths of a sign string");
  dims->add_option("signs", signs, "Sign string, e.g. ++--")->required();

  auto *grow = app.add_subcommand("grow", "Grow the basis web of a sign string and state string");
  grow->add_option("signs", signs)->required();
  grow->add_option("states", states, "State string over -,0,+")->required();

  auto *expand = app.add_subcommand("expand", "Tensor expansion of a web, or of the basis web for S and J");
  expand->add_option("args", expand_args, "Sign string and state string");
  expand->add_option("--web", web_file, "Web file ('-' for stdin)");

  auto *reduce = app.add_subcommand("reduce", "Reduce a web to non-elliptic webs");
  reduce->add_option("web", file, "Web file ('-' for stdin)");

  auto *rotate = app.add_subcommand("rotate", "Rotate an invariant web by one boundary point");
  rotate->add_option("web", file, "Web file ('-' for stdin)");

  auto *scan = app.add_subcommand("scan", "Test basis webs for the dual canonical property");
  scan->add_option("--max-n", max_n, "Every sign string of length 1..N")->check(CLI::NonNegativeNumber);
  scan->add_option("--sign-string", sign_strings, "A sign string (repeatable)");
  scan->add_option("--representatives", reps, "Class representatives: N, or P,M for P plus and M minus signs");

  auto *correct = app.add_subcommand("correct", "Dual canonical basis of a sign string");
  correct->add_option("signs", signs)->required();

  auto *render = app.add_subcommand("render", "SVG drawing of a web");
  render->add_option("web", file, "Web file ('-' for stdin)");
  render->add_option("--state", state, "Highlight a nonzero state with this top boundary");
  render->add_option("--bottom-state", bottom, "Bottom boundary of the highlighted state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    const bool seeded = seed_opt->count() > 0;
    if (dims->parsed())
      cmd_dims(g, signs);
    else if (grow->parsed())
      cmd_grow(g, signs, states, seeded);
    else if (expand->parsed())
      cmd_expand(g, expand_args, web_file);
    else if (reduce->parsed())
      cmd_reduce(g, file, seeded, false);
    else if (rotate->parsed())
      cmd_reduce(g, file, false, true);
    else if (scan->parsed())
      cmd_scan(g, max_n, sign_strings, reps);
    else if (correct->parsed())
      cmd_correct(g, signs);
    else if (render->parsed())
      cmd_render(g, file, state, bottom);
  } catch (const Failure &f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return 0;
}
