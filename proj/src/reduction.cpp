#include "spider/reduction.hpp"

#include "map_detail.hpp"
#include "spider/errors.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <random>
#include <sstream>

namespace spider {

WebCombination::WebCombination(SignString top, SignString bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {}

WebCombination::WebCombination(const Web &w, const LaurentPoly &c) : top_(w.top()), bottom_(w.bottom()) { add(w, c); }

void WebCombination::add(const Web &w, const LaurentPoly &c) {
  if (w.top() != top_ || w.bottom() != bottom_)
    throw MismatchError("web boundary differs from the combination's");
  if (c.is_zero())
    return;
  auto it = terms_.find(w.encoding());
  if (it == terms_.end()) {
    terms_.emplace(w.encoding(), Term{w, c});
    return;
  }
  it->second.coefficient += c;
  if (it->second.coefficient.is_zero())
    terms_.erase(it);
}

void WebCombination::add(const WebCombination &other, const LaurentPoly &c) {
  for (const auto &[key, t] : other.terms_)
    add(t.web, c * t.coefficient);
}

LaurentPoly WebCombination::coefficient(const std::string &encoding) const {
  auto it = terms_.find(encoding);
  return it == terms_.end() ? LaurentPoly() : it->second.coefficient;
}

bool operator==(const WebCombination &a, const WebCombination &b) {
  if (a.top_ != b.top_ || a.bottom_ != b.bottom_ || a.terms_.size() != b.terms_.size())
    return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || i->second.coefficient != j->second.coefficient)
      return false;
  return true;
}

namespace {

struct Pending {
  PlanarMap map;
  LaurentPoly coefficient;
};

// Removes `gone` and, for each pair (p, q) of their half-edges, joins what
// p and q were attached to.
PlanarMap rewire(const PlanarMap &m, const std::vector<int> &gone, const std::vector<std::pair<int, int>> &joins) {
  PlanarMap x = m;
  std::vector<std::pair<int, int>> repl; // old port -> bend half-edge
  for (auto [p, q] : joins) {
    const int b = x.add_vertex(VertexKind::Bend, 2);
    const int a = x.vertices[b].rot[0], c = x.vertices[b].rot[1];
    x.half_edges[a].out = m.half_edges[p].out;
    x.half_edges[c].out = m.half_edges[q].out;
    repl.push_back({p, a});
    repl.push_back({q, c});
  }
  auto replacement = [&](int h) {
    for (auto [p, r] : repl)
      if (p == h)
        return r;
    return h;
  };
  for (auto [p, r] : repl) {
    const int t = replacement(m.half_edges[p].twin);
    x.half_edges[r].twin = t;
    x.half_edges[t].twin = r;
  }
  // Splicing bends keeps the original vertex numbering.
  x.normalize();
  std::vector<bool> dead(x.vertices.size(), false);
  for (int v : gone)
    dead[v] = true;
  detail::compact(x, dead);
  return x;
}

// The component on its own, as a closed web.
PlanarMap extract(const PlanarMap &m, const std::vector<int> &component) {
  PlanarMap c = m;
  c.top.clear();
  c.bottom.clear();
  c.loops = 0;
  std::vector<bool> dead(m.vertices.size(), true);
  for (int v : component)
    dead[v] = false;
  detail::compact(c, dead);
  return c;
}

// Internal faces with fewer than six sides, as half-edge cycles, smallest
// first and then by smallest canonical vertex label.
std::vector<std::vector<int>> elliptic_faces(const PlanarMap &m) {
  const auto d = detail::disk_map(m);
  const auto labels = detail::canonical_labels(m);
  std::vector<std::pair<std::pair<std::size_t, int>, std::vector<int>>> found;
  for (const auto &cyc : d.faces) {
    if (cyc.empty() || cyc.size() >= 6)
      continue;
    if (std::any_of(cyc.begin(), cyc.end(), [&](int h) { return d.is_arc[h]; }))
      continue;
    std::vector<int> vs;
    int low = INT_MAX;
    for (int h : cyc) {
      vs.push_back(m.half_edges[h].vertex);
      low = std::min(low, labels[vs.back()]);
    }
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      continue; // face touches a vertex twice
    found.push_back({{cyc.size(), low}, cyc});
  }
  std::sort(found.begin(), found.end());
  std::vector<std::vector<int>> out;
  for (auto &f : found)
    out.push_back(std::move(f.second));
  return out;
}

// ports[i]: the half-edge at the face's i-th vertex that leaves the face.
std::vector<int> ports(const PlanarMap &m, const std::vector<int> &cyc) {
  const std::size_t k = cyc.size();
  std::vector<int> out;
  for (std::size_t i = 0; i < k; ++i) {
    const int in = m.half_edges[cyc[(i + k - 1) % k]].twin;
    for (int h : m.vertices[m.half_edges[cyc[i]].vertex].rot)
      if (h != cyc[i] && h != in) {
        out.push_back(h);
        break;
      }
  }
  return out;
}

std::vector<int> face_vertices(const PlanarMap &m, const std::vector<int> &cyc) {
  std::vector<int> vs;
  for (int h : cyc)
    vs.push_back(m.half_edges[h].vertex);
  return vs;
}

} // namespace

namespace {

template <class Choose> WebCombination reduce_with(const WebCombination &c, Choose &&choose) {
  WebCombination out(c.top(), c.bottom());
  std::deque<Pending> work;
  for (const auto &[key, t] : c.terms())
    work.push_back({t.web.map(), t.coefficient});

  const LaurentPoly three = quantum_int(3);
  const LaurentPoly bigon = LaurentPoly::v(1) + LaurentPoly::v(-1); // -[2]

  while (!work.empty()) {
    Pending p = std::move(work.front());
    work.pop_front();
    PlanarMap &m = p.map;

    for (; m.loops > 0; --m.loops)
      p.coefficient *= three;

    const auto closed = m.closed_components();
    if (!closed.empty()) {
      // A closed piece is a scalar wherever it sits.
      std::vector<bool> dead(m.vertices.size(), false);
      for (const auto &comp : closed) {
        p.coefficient *= evaluate(Web(extract(m, comp))).coefficient({});
        for (int v : comp)
          dead[v] = true;
      }
      detail::compact(m, dead);
    }
    if (p.coefficient.is_zero())
      continue;

    const auto candidates = elliptic_faces(m);
    if (candidates.empty()) {
      out.add(Web(std::move(m)), p.coefficient);
      continue;
    }
    const auto &cyc = candidates[choose(candidates.size())];
    const auto port = ports(m, cyc);
    const auto vs = face_vertices(m, cyc);
    if (cyc.size() == 2) {
      work.push_back({rewire(m, vs, {{port[0], port[1]}}), p.coefficient * bigon});
    } else if (cyc.size() == 4) {
      work.push_back({rewire(m, vs, {{port[0], port[1]}, {port[2], port[3]}}), p.coefficient});
      work.push_back({rewire(m, vs, {{port[1], port[2]}, {port[3], port[0]}}), p.coefficient});
    } else {
      throw std::logic_error("odd face in a web");
    }
  }
  return out;
}

} // namespace

WebCombination reduce(const WebCombination &c) {
  return reduce_with(c, [](std::size_t) { return std::size_t(0); });
}

WebCombination reduce(const WebCombination &c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return reduce_with(c, [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); });
}

WebCombination reduce(const Web &w) { return reduce(WebCombination(w)); }

WebCombination rotate(const Web &w) {
  if (!w.is_invariant_web())
    throw InvalidInput("rotate needs a web without bottom boundary");
  const SignString &s = w.top();
  if (s.empty())
    return reduce(w);
  const Sign first = s.front();
  SliceWord r;
  r.top.assign(s.begin() + 1, s.end());
  r.top.push_back(first);

  // Strand 1 runs over a cap to the left, down, under w by a cup, and up on
  // the right.
  Layer cap{{GenKind::Cap, -first}};
  for (std::size_t i = 1; i < s.size(); ++i)
    cap.push_back({GenKind::Identity, s[i]});
  cap.push_back({GenKind::Identity, first});
  r.layers.push_back(std::move(cap));
  for (const auto &layer : w.drawing().layers) {
    Layer padded{{GenKind::Identity, -first}};
    padded.insert(padded.end(), layer.begin(), layer.end());
    padded.push_back({GenKind::Identity, first});
    r.layers.push_back(std::move(padded));
  }
  r.layers.push_back({{GenKind::Cup, -first}});
  return reduce(Web(std::move(r)));
}

TensorVector evaluate(const WebCombination &c) {
  TensorVector x(c.top());
  for (const auto &[key, t] : c.terms())
    x.add_scaled(evaluate(t.web), t.coefficient);
  return x;
}

std::string to_text(const WebCombination &c) {
  std::ostringstream os;
  os << "terms " << c.size() << "\n";
  for (const auto &[key, t] : c.terms()) {
    os << "coefficient " << to_text(t.coefficient) << "\n";
    os << to_text(t.web.drawing());
  }
  return os.str();
}

} // namespace spider
