#include "spider/canonical.hpp"

#include "spider/errors.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace spider {

namespace {

// a + b can drop by at most one per remaining factor.
bool can_close(const WeightVec &w, std::size_t remaining) {
  return w.a >= 0 && w.b >= 0 && static_cast<std::size_t>(w.a + w.b) <= remaining;
}

void dominant_dfs(const SignString &s, StateString &j, WeightVec w, std::vector<StateString> &out) {
  const std::size_t k = j.size();
  if (k == s.size()) {
    if (w.a == 0 && w.b == 0)
      out.push_back(j);
    return;
  }
  for (int x = 1; x >= -1; --x) {
    const WeightVec next = w + weight(s[k], x);
    if (!can_close(next, s.size() - k - 1))
      continue;
    j.push_back(static_cast<std::int8_t>(x));
    dominant_dfs(s, j, next, out);
    j.pop_back();
  }
}

template <class F> void parallel_for(std::size_t n, unsigned jobs, F &&f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
        }
      }
    });
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

std::filesystem::path cache_file(const ScanOptions &opt, const SignString &s, const StateString &j) {
  return opt.cache_dir / ("S" + to_string(s)) / ("J" + to_string(j) + ".tv");
}

void warn(const ScanOptions &opt, const std::string &msg) {
  if (opt.warn)
    opt.warn(msg);
}

std::optional<TensorVector> read_cache(const ScanOptions &opt, const std::filesystem::path &p, const SignString &s) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto x = parse_tensor(buf.str());
    if (x.signs() != s)
      throw InvalidInput("sign string differs");
    return x;
  } catch (const std::exception &e) {
    warn(opt, "ignoring corrupt cache entry " + p.string() + ": " + e.what());
    return std::nullopt;
  }
}

void write_cache(const ScanOptions &opt, const std::filesystem::path &p, const TensorVector &x) {
  std::error_code ec;
  std::filesystem::create_directories(p.parent_path(), ec);
  std::ostringstream tag;
  tag << std::this_thread::get_id();
  auto tmp = p;
  tmp += ".tmp" + tag.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << to_text(x);
    if (!out) {
      warn(opt, "cannot write cache entry " + p.string());
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, p, ec);
  if (ec) {
    warn(opt, "cannot write cache entry " + p.string() + ": " + ec.message());
    std::filesystem::remove(tmp, ec);
  }
}

std::vector<TensorVector> expansions(const SignString &s, const std::vector<StateString> &paths,
                                     const ScanOptions &opt) {
  std::vector<TensorVector> out(paths.size(), TensorVector(s));
  parallel_for(paths.size(), opt.jobs, [&](std::size_t i) { out[i] = basis_expansion(s, paths[i], opt); });
  return out;
}

SignString flip(SignString s) {
  for (auto &x : s)
    x = -x;
  return s;
}

} // namespace

std::vector<StateString> dominant_paths(const SignString &s) {
  std::vector<StateString> out;
  StateString j;
  dominant_dfs(s, j, {0, 0}, out);
  return out;
}

std::size_t dominant_count(const SignString &s) {
  std::map<std::pair<int, int>, std::size_t> cur{{{0, 0}, 1}};
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::map<std::pair<int, int>, std::size_t> next;
    for (const auto &[w, c] : cur)
      for (int x = -1; x <= 1; ++x) {
        const WeightVec n = WeightVec{w.first, w.second} + weight(s[k], x);
        if (can_close(n, s.size() - k - 1))
          next[{n.a, n.b}] += c;
      }
    cur = std::move(next);
  }
  auto it = cur.find({0, 0});
  return it == cur.end() ? 0 : it->second;
}

std::vector<BasisWeb> web_basis(const SignString &s) {
  std::vector<BasisWeb> out;
  for (auto &j : dominant_paths(s)) {
    auto g = grow(s, j);
    out.push_back({std::move(j), std::move(g.web)});
  }
  return out;
}

DualCanonicalCheck is_dual_canonical(const TensorVector &x, const StateString &j) {
  if (x.coefficient(j) != LaurentPoly(1))
    throw InvalidInput("expansion does not have coefficient 1 at " + to_string(j));
  DualCanonicalCheck r;
  for (auto it = x.entries().rbegin(); it != x.entries().rend(); ++it) {
    if (it->first == j || is_negative_exponent(it->second))
      continue;
    r.ok = false;
    r.offending.push_back({it->first, it->second});
  }
  return r;
}

SignString class_representative(const SignString &s) {
  SignString best = s;
  const std::size_t n = s.size();
  for (const SignString &base : {s, flip(s)})
    for (bool rev : {false, true}) {
      SignString t = base;
      if (rev)
        std::reverse(t.begin(), t.end());
      for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
        SignString u(n);
        for (std::size_t i = 0; i < n; ++i)
          u[i] = t[(i + r) % n];
        // '+' sorts before '-'
        if (to_string(u) < to_string(best))
          best = u;
      }
    }
  return best;
}

std::vector<SignString> all_sign_strings(std::size_t n) {
  std::vector<SignString> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
    SignString s(n);
    for (std::size_t i = 0; i < n; ++i)
      s[i] = (bits >> (n - 1 - i)) & 1 ? Sign::Minus : Sign::Plus;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SignString> representatives(std::size_t plus, std::size_t minus) {
  std::set<std::string> seen;
  std::vector<SignString> out;
  for (const auto &s : all_sign_strings(plus + minus)) {
    if (static_cast<std::size_t>(std::count(s.begin(), s.end(), Sign::Plus)) != plus)
      continue;
    auto r = class_representative(s);
    if (seen.insert(to_string(r)).second)
      out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const SignString &a, const SignString &b) { return to_string(a) < to_string(b); });
  return out;
}

TensorVector basis_expansion(const SignString &s, const StateString &j, const ScanOptions &opt) {
  if (opt.cache_dir.empty())
    return evaluate(grow(s, j).web);
  const auto p = cache_file(opt, s, j);
  if (auto hit = read_cache(opt, p, s))
    return std::move(*hit);
  auto x = evaluate(grow(s, j).web);
  write_cache(opt, p, x);
  return x;
}

ScanReport scan(const SignString &s, const ScanOptions &opt) {
  ScanReport r;
  r.signs = s;
  const auto paths = dominant_paths(s);
  r.dimension = paths.size();
  const auto xs = expansions(s, paths, opt);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (auto &o : is_dual_canonical(xs[i], paths[i]).offending)
      r.failures.push_back({paths[i], std::move(o.state), std::move(o.coefficient)});
  return r;
}

std::map<StateString, TensorVector> dual_canonical_basis(const SignString &s, const ScanOptions &opt) {
  auto paths = dominant_paths(s);
  auto xs = expansions(s, paths, opt);
  std::map<StateString, TensorVector> basis;
  // ascending lex: every correction term is already final
  for (std::size_t i = paths.size(); i-- > 0;) {
    TensorVector x = std::move(xs[i]);
    const StateString &j = paths[i];
    while (true) {
      auto check = is_dual_canonical(x, j);
      if (check.ok)
        break;
      const Offense &top = check.offending.front();
      auto b = basis.find(top.state);
      if (b == basis.end())
        throw std::logic_error("no dual canonical element at " + to_string(top.state));
      x -= sym_correction(top.coefficient) * b->second;
    }
    basis.emplace(j, std::move(x));
  }
  return basis;
}

bool is_connected(const Web &w) {
  const PlanarMap &m = w.map();
  if (m.loops > 0)
    return m.vertices.empty() && m.loops == 1;
  if (m.vertices.empty())
    return true;
  std::vector<int> parent(m.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &h : m.half_edges)
    parent[find(h.vertex)] = find(m.half_edges[h.twin].vertex);
  const int root = find(0);
  for (std::size_t v = 0; v < m.vertices.size(); ++v)
    if (find(static_cast<int>(v)) != root)
      return false;
  return true;
}

namespace {

// Trivalent neighbour of each top boundary point, -1 if it is not trivalent.
std::vector<int> top_neighbours(const PlanarMap &m) {
  std::vector<int> out;
  for (int b : m.top) {
    const int u = m.half_edges[m.half_edges[m.vertices[b].rot[0]].twin].vertex;
    out.push_back(m.vertices[u].kind == VertexKind::Trivalent ? u : -1);
  }
  return out;
}

bool adjacent(const PlanarMap &m, int a, int b) {
  for (int h : m.vertices[a].rot)
    if (m.half_edges[m.half_edges[h].twin].vertex == b)
      return true;
  return false;
}

// Cyclic when the web has no bottom boundary.
std::size_t window_count(const Web &w, std::size_t span) {
  const std::size_t n = w.top().size();
  if (n < span)
    return 0;
  return w.is_invariant_web() && n > span ? n : n - span + 1;
}

} // namespace

bool has_boundary_y(const Web &w) {
  const auto nb = top_neighbours(w.map());
  const std::size_t n = nb.size();
  for (std::size_t k = 0; k < window_count(w, 2); ++k)
    if (nb[k] >= 0 && nb[k] == nb[(k + 1) % n])
      return true;
  return false;
}

bool has_boundary_double_h(const Web &w) {
  const PlanarMap &m = w.map();
  const auto nb = top_neighbours(m);
  const std::size_t n = nb.size();
  for (std::size_t k = 0; k < window_count(w, 3); ++k) {
    const int a = nb[k], b = nb[(k + 1) % n], c = nb[(k + 2) % n];
    if (a < 0 || b < 0 || c < 0 || a == b || b == c || a == c)
      continue;
    if (adjacent(m, a, b) && adjacent(m, b, c))
      return true;
  }
  return false;
}

SignString counterexample_signs() { return parse_signs("++--++--++--"); }

Web six_cup_web() {
  const SignString s = counterexample_signs();
  SliceWord w;
  w.top = s;
  // cups on (2,3) (4,5) (6,7) (8,9) (10,11), then one around them joining 1 and 12
  Layer inner{{GenKind::Identity, s[0]}};
  for (std::size_t k = 1; k + 1 < s.size(); k += 2)
    inner.push_back({GenKind::Cup, s[k]});
  inner.push_back({GenKind::Identity, s.back()});
  w.layers.push_back(std::move(inner));
  w.layers.push_back({{GenKind::Cup, s[0]}});
  return Web(std::move(w));
}

CorrectionCheck check_correction(const ScanOptions &opt) {
  const SignString s = counterexample_signs();
  CorrectionCheck c;
  const auto report = scan(s, opt);
  if (report.failures.size() != 1)
    return c;
  c.hexagon_state = report.failures.front().state;
  c.hexagon_fails = true;

  const auto cups = evaluate(six_cup_web());
  c.cup_state = cups.leading_state();
  c.cups_pass = is_dual_canonical(cups, c.cup_state).ok && c.cup_state == report.failures.front().offending_state;

  c.difference = basis_expansion(s, c.hexagon_state, opt) - cups;
  c.difference_passes = is_dual_canonical(c.difference, c.hexagon_state).ok;
  const auto basis = dual_canonical_basis(s, opt);
  c.matches_basis = basis.at(c.hexagon_state) == c.difference;
  return c;
}

bool verify_correction(const ScanOptions &opt) { return check_correction(opt).ok(); }

} // namespace spider
