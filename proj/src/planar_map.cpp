#include "map_detail.hpp"
#include "spider/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace spider {

int PlanarMap::add_vertex(VertexKind kind, std::size_t degree) {
  const int v = static_cast<int>(vertices.size());
  Vertex vx;
  vx.kind = kind;
  for (std::size_t i = 0; i < degree; ++i) {
    vx.rot.push_back(static_cast<int>(half_edges.size()));
    half_edges.push_back({v, -1, false});
  }
  vertices.push_back(std::move(vx));
  return v;
}

void PlanarMap::link(int a, int b) {
  if (half_edges[a].out == half_edges[b].out)
    throw std::logic_error("linking half-edges with inconsistent orientation");
  half_edges[a].twin = b;
  half_edges[b].twin = a;
}

namespace {

int position(const Vertex &v, int h) {
  for (std::size_t i = 0; i < v.rot.size(); ++i)
    if (v.rot[i] == h)
      return static_cast<int>(i);
  throw std::logic_error("half-edge not in its vertex rotation");
}

} // namespace

int PlanarMap::ccw_next(int h) const {
  const auto &v = vertices[half_edges[h].vertex];
  const int d = static_cast<int>(v.rot.size());
  return v.rot[(position(v, h) + 1) % d];
}

int PlanarMap::cw_next(int h) const {
  const auto &v = vertices[half_edges[h].vertex];
  const int d = static_cast<int>(v.rot.size());
  return v.rot[(position(v, h) + d - 1) % d];
}

int PlanarMap::trivalent_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [](const Vertex &v) {
    return v.kind == VertexKind::Trivalent;
  }));
}

SignString PlanarMap::top_signs() const {
  SignString s;
  for (int b : top)
    s.push_back(half_edges[vertices[b].rot[0]].out ? Sign::Minus : Sign::Plus);
  return s;
}

SignString PlanarMap::bottom_signs() const {
  SignString s;
  for (int b : bottom)
    s.push_back(half_edges[vertices[b].rot[0]].out ? Sign::Plus : Sign::Minus);
  return s;
}

namespace detail {

void compact(PlanarMap &m, const std::vector<bool> &dead) {
  std::vector<int> vmap(m.vertices.size(), -1), hmap(m.half_edges.size(), -1);
  int nv = 0, nh = 0;
  for (std::size_t v = 0; v < m.vertices.size(); ++v) {
    if (dead[v])
      continue;
    vmap[v] = nv++;
    for (int h : m.vertices[v].rot)
      hmap[h] = nh++;
  }
  std::vector<Vertex> nvs(nv);
  std::vector<HalfEdge> nhs(nh);
  for (std::size_t v = 0; v < m.vertices.size(); ++v) {
    if (dead[v])
      continue;
    Vertex &out = nvs[vmap[v]];
    out.kind = m.vertices[v].kind;
    for (int h : m.vertices[v].rot) {
      out.rot.push_back(hmap[h]);
      nhs[hmap[h]] = {vmap[v], hmap[m.half_edges[h].twin], m.half_edges[h].out};
    }
  }
  m.vertices = std::move(nvs);
  m.half_edges = std::move(nhs);
  for (int &b : m.top)
    b = vmap[b];
  for (int &b : m.bottom)
    b = vmap[b];
}

} // namespace detail

void PlanarMap::normalize() {
  std::vector<bool> dead(vertices.size(), false);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].kind != VertexKind::Bend)
      continue;
    const int a = vertices[v].rot[0];
    const int c = vertices[v].rot[1];
    const int x = half_edges[a].twin;
    const int y = half_edges[c].twin;
    if (x == c)
      ++loops;
    else
      link(x, y);
    dead[v] = true;
  }

  detail::compact(*this, dead);
}

void PlanarMap::check() const {
  for (std::size_t h = 0; h < half_edges.size(); ++h) {
    const auto &e = half_edges[h];
    if (e.twin < 0 || e.twin >= static_cast<int>(half_edges.size()) ||
        half_edges[e.twin].twin != static_cast<int>(h) || half_edges[e.twin].out == e.out)
      throw std::logic_error("bad twin at half-edge " + std::to_string(h));
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto &vx = vertices[v];
    for (int h : vx.rot)
      if (half_edges[h].vertex != static_cast<int>(v))
        throw std::logic_error("rotation lists foreign half-edge");
    if (vx.kind == VertexKind::Trivalent) {
      if (vx.rot.size() != 3)
        throw std::logic_error("trivalent vertex of wrong degree");
      const bool o = half_edges[vx.rot[0]].out;
      if (half_edges[vx.rot[1]].out != o || half_edges[vx.rot[2]].out != o)
        throw std::logic_error("trivalent vertex neither source nor sink");
    }
  }
}

std::vector<std::vector<int>> PlanarMap::closed_components() const {
  std::vector<int> comp(vertices.size(), -1);
  std::deque<int> q;
  for (int b : top)
    comp[b] = 0, q.push_back(b);
  for (int b : bottom)
    comp[b] = 0, q.push_back(b);
  auto flood = [&](int id) {
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int h : vertices[u].rot) {
        int w = half_edges[half_edges[h].twin].vertex;
        if (comp[w] < 0)
          comp[w] = id, q.push_back(w);
      }
    }
  };
  flood(0);
  std::vector<std::vector<int>> out;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (comp[v] >= 0)
      continue;
    const int id = static_cast<int>(out.size()) + 1;
    comp[v] = id;
    q.push_back(static_cast<int>(v));
    flood(id);
    std::vector<int> members;
    for (std::size_t u = v; u < vertices.size(); ++u)
      if (comp[u] == id)
        members.push_back(static_cast<int>(u));
    out.push_back(std::move(members));
  }
  return out;
}

// ---------------------------------------------------------------------------

PlanarMap build_map(const SliceWord &w) {
  w.validate();
  PlanarMap m;
  std::vector<int> pending;
  // A pending half-edge belongs to the vertex above its strand; a + strand
  // points into that vertex.
  for (Sign s : w.top) {
    int b = m.add_vertex(VertexKind::Boundary, 1);
    int h = m.vertices[b].rot[0];
    m.half_edges[h].out = s == Sign::Minus;
    m.top.push_back(b);
    pending.push_back(h);
  }
  auto set_out = [&](int h, bool out) { m.half_edges[h].out = out; };

  for (const auto &layer : w.layers) {
    std::vector<int> next;
    std::size_t idx = 0;
    for (const auto &g : layer) {
      const bool plus = g.sign == Sign::Plus;
      switch (g.kind) {
      case GenKind::Identity:
        next.push_back(pending[idx++]);
        break;
      case GenKind::Cup:
        m.link(pending[idx], pending[idx + 1]);
        idx += 2;
        break;
      case GenKind::Cap: {
        int v = m.add_vertex(VertexKind::Bend, 2);
        int a = m.vertices[v].rot[0], b = m.vertices[v].rot[1];
        set_out(a, !plus);
        set_out(b, plus);
        next.push_back(a);
        next.push_back(b);
        break;
      }
      case GenKind::Split: {
        // rotation [down, upR, upL]
        int v = m.add_vertex(VertexKind::Trivalent, 3);
        auto r = m.vertices[v].rot;
        for (int h : r)
          set_out(h, plus);
        m.link(r[2], pending[idx]);
        m.link(r[1], pending[idx + 1]);
        idx += 2;
        next.push_back(r[0]);
        break;
      }
      case GenKind::Join: {
        // rotation [up, downL, downR]
        int v = m.add_vertex(VertexKind::Trivalent, 3);
        auto r = m.vertices[v].rot;
        for (int h : r)
          set_out(h, !plus);
        m.link(r[0], pending[idx++]);
        next.push_back(r[1]);
        next.push_back(r[2]);
        break;
      }
      case GenKind::H: {
        int j = m.add_vertex(VertexKind::Trivalent, 3);
        int s = m.add_vertex(VertexKind::Trivalent, 3);
        auto jr = m.vertices[j].rot;
        auto sr = m.vertices[s].rot;
        for (int h : jr)
          set_out(h, !plus);
        for (int h : sr)
          set_out(h, plus);
        m.link(sr[2], pending[idx]);
        m.link(jr[0], pending[idx + 1]);
        m.link(sr[1], jr[1]);
        idx += 2;
        next.push_back(sr[0]);
        next.push_back(jr[2]);
        break;
      }
      }
    }
    pending = std::move(next);
  }
  for (int p : pending) {
    int b = m.add_vertex(VertexKind::Boundary, 1);
    int h = m.vertices[b].rot[0];
    m.half_edges[h].out = !m.half_edges[p].out;
    m.link(h, p);
    m.bottom.push_back(b);
  }
  m.normalize();
  return m;
}

// ---------------------------------------------------------------------------

namespace detail {

DiskMap disk_map(const PlanarMap &m) {
  DiskMap d;
  d.map = m;
  PlanarMap &x = d.map;
  const std::size_t web_half_edges = m.half_edges.size();

  std::vector<int> cycle;
  cycle.insert(cycle.end(), m.top.begin(), m.top.end());
  cycle.insert(cycle.end(), m.bottom.rbegin(), m.bottom.rend());
  if (!cycle.empty()) {
    d.base = x.add_vertex(VertexKind::Boundary, 0);
    cycle.insert(cycle.begin(), d.base);
    const std::size_t n = cycle.size();
    std::vector<int> next_he(n), prev_he(n);
    for (std::size_t i = 0; i < n; ++i) {
      next_he[i] = static_cast<int>(x.half_edges.size());
      x.half_edges.push_back({cycle[i], -1, true});
      prev_he[(i + 1) % n] = static_cast<int>(x.half_edges.size());
      x.half_edges.push_back({cycle[(i + 1) % n], -1, false});
    }
    for (std::size_t i = 0; i < n; ++i) {
      x.half_edges[next_he[i]].twin = prev_he[(i + 1) % n];
      x.half_edges[prev_he[(i + 1) % n]].twin = next_he[i];
      x.vertices[cycle[i]].rot.push_back(next_he[i]);
      x.vertices[cycle[i]].rot.push_back(prev_he[i]);
    }
    if (m.bottom.empty()) {
      for (std::size_t k = 0; k <= m.top.size(); ++k)
        d.gap_arc.push_back(prev_he[(k + 1) % n]);
    }
  }
  d.is_arc.assign(x.half_edges.size(), false);
  for (std::size_t h = web_half_edges; h < x.half_edges.size(); ++h)
    d.is_arc[h] = true;

  d.face_of.assign(x.half_edges.size(), -2);
  for (std::size_t h0 = 0; h0 < x.half_edges.size(); ++h0) {
    if (d.face_of[h0] != -2)
      continue;
    std::vector<int> cyc;
    int h = static_cast<int>(h0);
    bool outer = false;
    do {
      cyc.push_back(h);
      d.face_of[h] = -3;
      if (d.is_arc[h] && x.half_edges[h].out)
        outer = true;
      h = x.cw_next(x.half_edges[h].twin);
    } while (h != static_cast<int>(h0));
    const int id = outer ? -1 : static_cast<int>(d.faces.size());
    for (int e : cyc)
      d.face_of[e] = id;
    if (!outer)
      d.faces.push_back(std::move(cyc));
  }
  return d;
}

std::vector<int> canonical_labels(const PlanarMap &m) {
  std::vector<int> label(m.vertices.size(), -1);
  std::deque<int> q;
  int next = 0;
  for (int b : m.top)
    label[b] = next++, q.push_back(b);
  for (int b : m.bottom)
    label[b] = next++, q.push_back(b);
  std::vector<int> entry(m.vertices.size(), -1);
  for (int b : m.top)
    entry[b] = m.vertices[b].rot[0];
  for (int b : m.bottom)
    entry[b] = m.vertices[b].rot[0];
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    const auto &rot = m.vertices[u].rot;
    const int d = static_cast<int>(rot.size());
    const int p = position(m.vertices[u], entry[u]);
    for (int k = 0; k < d; ++k) {
      int t = m.half_edges[rot[(p + k) % d]].twin;
      int w = m.half_edges[t].vertex;
      if (label[w] < 0) {
        label[w] = next++;
        entry[w] = t;
        q.push_back(w);
      }
    }
  }
  return label;
}

} // namespace detail

std::vector<Face> all_faces(const PlanarMap &m) {
  auto d = detail::disk_map(m);
  std::vector<Face> out;
  for (const auto &cyc : d.faces) {
    Face f;
    f.internal = true;
    for (int h : cyc) {
      if (d.is_arc[h])
        f.internal = false;
      else
        f.half_edges.push_back(h);
    }
    f.sides = static_cast<int>(f.half_edges.size());
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// BFS from the given roots (vertex, entry half-edge); encodes every vertex
// reached as its rotation starting at the entry half-edge.
std::string encode_from(const PlanarMap &m, const std::vector<std::pair<int, int>> &roots) {
  std::vector<int> label(m.vertices.size(), -1), entry(m.vertices.size(), -1);
  std::vector<int> order;
  std::deque<int> q;
  for (auto [v, h] : roots) {
    label[v] = static_cast<int>(order.size());
    entry[v] = h;
    order.push_back(v);
    q.push_back(v);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    const auto &rot = m.vertices[u].rot;
    const int d = static_cast<int>(rot.size());
    const int p = position(m.vertices[u], entry[u]);
    for (int k = 0; k < d; ++k) {
      int t = m.half_edges[rot[(p + k) % d]].twin;
      int w = m.half_edges[t].vertex;
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        entry[w] = t;
        order.push_back(w);
        q.push_back(w);
      }
    }
  }
  std::ostringstream os;
  for (int u : order) {
    const auto &rot = m.vertices[u].rot;
    const int d = static_cast<int>(rot.size());
    const int p = position(m.vertices[u], entry[u]);
    for (int k = 0; k < d; ++k) {
      int h = rot[(p + k) % d];
      int t = m.half_edges[h].twin;
      int w = m.half_edges[t].vertex;
      const auto &wr = m.vertices[w];
      const int dw = static_cast<int>(wr.rot.size());
      int idx = (position(wr, t) - position(wr, entry[w]) + dw) % dw;
      os << (m.half_edges[h].out ? '>' : '<') << label[w] << '.' << idx;
    }
    os << ';';
  }
  return os.str();
}

} // namespace

std::string canonical_encoding(const PlanarMap &m) {
  std::ostringstream os;
  os << 'T' << to_string(m.top_signs()) << 'B' << to_string(m.bottom_signs()) << ':';
  std::vector<std::pair<int, int>> roots;
  for (int b : m.top)
    roots.emplace_back(b, m.vertices[b].rot[0]);
  for (int b : m.bottom)
    roots.emplace_back(b, m.vertices[b].rot[0]);
  os << encode_from(m, roots);

  std::vector<std::string> comps;
  for (const auto &comp : m.closed_components()) {
    std::string best;
    bool first = true;
    for (int v : comp)
      for (int h : m.vertices[v].rot) {
        std::string e = encode_from(m, {{v, h}});
        if (first || e < best)
          best = std::move(e), first = false;
      }
    comps.push_back(std::move(best));
  }
  std::sort(comps.begin(), comps.end());
  for (const auto &c : comps)
    os << '|' << c;
  if (m.loops)
    os << "|O" << m.loops;
  return os.str();
}

// ---------------------------------------------------------------------------

SliceWord synthesize_drawing(const PlanarMap &m) {
  SliceWord w;
  w.top = m.top_signs();

  std::vector<bool> placed(m.vertices.size(), false);
  std::vector<bool> terminal_vertex(m.vertices.size(), false);
  for (int b : m.top)
    placed[b] = true;
  for (int b : m.bottom)
    terminal_vertex[b] = true;

  // Frontier: the half-edge at the lower end of each strand. A strand is + iff
  // its edge leaves the lower vertex.
  std::vector<int> f;
  for (int b : m.top)
    f.push_back(m.half_edges[m.vertices[b].rot[0]].twin);

  auto sign_of = [&](int h) { return m.half_edges[h].out ? Sign::Plus : Sign::Minus; };
  auto vert = [&](int h) { return m.half_edges[h].vertex; };
  auto open = [&](int h) { return !terminal_vertex[vert(h)] && !placed[vert(h)]; };
  auto emit = [&](std::size_t at, std::size_t consumed, SliceGenerator g) {
    Layer layer;
    for (std::size_t i = 0; i < at; ++i)
      layer.push_back({GenKind::Identity, sign_of(f[i])});
    layer.push_back(g);
    for (std::size_t i = at + consumed; i < f.size(); ++i)
      layer.push_back({GenKind::Identity, sign_of(f[i])});
    w.layers.push_back(std::move(layer));
  };
  auto in_frontier = [&](int h) { return std::find(f.begin(), f.end(), h) != f.end(); };

  std::size_t remaining = 0;
  for (std::size_t v = 0; v < m.vertices.size(); ++v)
    if (m.vertices[v].kind == VertexKind::Trivalent)
      ++remaining;

  while (true) {
    bool moved = false;
    // cup: two adjacent strands are the two ends of one edge between placed vertices
    for (std::size_t i = 0; i + 1 < f.size() && !moved; ++i) {
      if (m.half_edges[f[i]].twin == f[i + 1] && placed[vert(f[i])] && placed[vert(f[i + 1])]) {
        emit(i, 2, {GenKind::Cup, sign_of(f[i])});
        f.erase(f.begin() + i, f.begin() + i + 2);
        moved = true;
      }
    }
    // merge: two adjacent strands meet at an unplaced vertex, drawn as a Y
    for (std::size_t i = 0; i + 1 < f.size() && !moved; ++i) {
      if (open(f[i]) && vert(f[i]) == vert(f[i + 1]) && m.ccw_next(f[i + 1]) == f[i]) {
        const int x = vert(f[i]);
        const int c = m.ccw_next(f[i]);
        emit(i, 2, {GenKind::Split, sign_of(f[i])});
        placed[x] = true;
        --remaining;
        f[i] = m.half_edges[c].twin;
        f.erase(f.begin() + i + 1);
        moved = true;
      }
    }
    // fork: a strand reaches a vertex whose other edges lead down, drawn as a lambda
    for (std::size_t i = 0; i < f.size() && !moved; ++i) {
      if (!open(f[i]))
        continue;
      const int a = m.ccw_next(f[i]);
      const int b = m.ccw_next(a);
      if (in_frontier(a) || in_frontier(b))
        continue;
      const int x = vert(f[i]);
      emit(i, 1, {GenKind::Join, -sign_of(f[i])});
      placed[x] = true;
      --remaining;
      f[i] = m.half_edges[a].twin;
      f.insert(f.begin() + i + 1, m.half_edges[b].twin);
      moved = true;
    }
    if (moved)
      continue;
    if (remaining == 0)
      break;
    bool any_open = std::any_of(f.begin(), f.end(), open);
    if (any_open)
      throw std::logic_error("drawing synthesis is stuck");
    // A closed component: cut one of its edges open with a cap at the far left.
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
      if (m.vertices[v].kind != VertexKind::Trivalent || placed[v])
        continue;
      const int h = m.vertices[v].rot[0];
      f.insert(f.begin(), {h, m.half_edges[h].twin});
      Layer layer{{GenKind::Cap, sign_of(h)}};
      for (std::size_t i = 2; i < f.size(); ++i)
        layer.push_back({GenKind::Identity, sign_of(f[i])});
      w.layers.push_back(std::move(layer));
      break;
    }
  }

  for (int k = 0; k < m.loops; ++k) {
    Layer cap{{GenKind::Cap, Sign::Plus}}, cup{{GenKind::Cup, Sign::Plus}};
    for (int h : f) {
      cap.push_back({GenKind::Identity, sign_of(h)});
      cup.push_back({GenKind::Identity, sign_of(h)});
    }
    w.layers.push_back(std::move(cap));
    w.layers.push_back(std::move(cup));
  }

  std::vector<int> expect;
  for (int b : m.bottom)
    expect.push_back(m.vertices[b].rot[0]);
  if (f != expect)
    throw std::logic_error("drawing synthesis ended off the bottom boundary");
  return w;
}

} // namespace spider
