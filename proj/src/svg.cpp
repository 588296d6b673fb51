#include "spider/svg.hpp"

#include "spider/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace spider {

namespace {

constexpr int kMargin = 40;
constexpr int kDx = 40;
constexpr int kDy = 60;

struct Pt {
  double x, y;
};

// A node is either a point on a layer boundary or a trivalent vertex.
struct Node {
  bool cut = true;
  int boundary = 0, index = 0; // cut points
  int id = 0;                  // vertices
  friend bool operator==(const Node &, const Node &) = default;
};

// Oriented piece of a strand, drawn along `pts` in the direction of the arrow.
struct Piece {
  Node from, to;
  std::vector<Pt> pts;
  int state = 0;
};

std::string num(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", d);
  std::string s = buf;
  while (s.back() == '0')
    s.pop_back();
  if (s.back() == '.')
    s.pop_back();
  return s == "-0" ? "0" : s;
}

std::string points(const std::vector<Pt> &pts) {
  std::string s;
  for (const auto &p : pts) {
    if (!s.empty())
      s += ' ';
    s += num(p.x) + "," + num(p.y);
  }
  return s;
}

// State of the H middle strand: the value the two halves of the table agree on.
int h_middle(Sign s, int u1, int l1) {
  const SliceGenerator join{GenKind::Join, s};
  for (int m = -1; m <= 1; ++m)
    for (const auto &e : generator_table(join))
      if (e.upper[0] == u1 && e.lower[0] == m && e.lower[1] == l1)
        return m;
  return 0;
}

class Layout {
public:
  Layout(const SliceWord &w, const std::optional<StateRecord> &st) : w_(w) {
    widths_.push_back(w.top.size());
    for (const auto &layer : w.layers) {
      std::size_t n = 0;
      for (const auto &g : layer)
        n += g.lower_width();
      widths_.push_back(n);
    }
    if (st)
      boundary_states(*st);
    for (std::size_t i = 0; i < w.layers.size(); ++i)
      place_layer(static_cast<int>(i));
  }

  std::string svg() const;

private:
  double x(int boundary, int index) const {
    (void)boundary;
    return kMargin + kDx * index;
  }
  double y(int boundary) const { return kMargin + kDy * boundary; }
  Pt at(int b, int i) const { return {x(b, i), y(b)}; }

  int state_at(int b, int i) const { return states_.empty() ? 0 : states_[b][i]; }

  void boundary_states(const StateRecord &st) {
    // Cut k of the record lies above the k-th non-identity generator, counting bottom-up.
    std::size_t steps = 0;
    std::vector<std::size_t> after(w_.layers.size() + 1, 0);
    for (std::size_t j = w_.layers.size(); j-- > 0;) {
      for (const auto &g : w_.layers[j])
        if (g.kind != GenKind::Identity)
          ++steps;
      after[j] = steps;
    }
    after[w_.layers.size()] = 0;
    if (st.cuts.size() != steps + 1)
      throw MismatchError("state does not fit the drawing");
    states_.resize(widths_.size());
    for (std::size_t b = 0; b < widths_.size(); ++b) {
      states_[b] = st.cuts[after[b]];
      if (states_[b].size() != widths_[b])
        throw MismatchError("state does not fit the drawing");
    }
  }

  // Piece between a lower and an upper node; + strands point up.
  void add(Node lower, Pt lp, Node upper, Pt up, Sign s, int state, std::vector<Pt> mid = {}) {
    Piece p;
    p.state = state;
    std::vector<Pt> pts{lp};
    pts.insert(pts.end(), mid.begin(), mid.end());
    pts.push_back(up);
    if (s == Sign::Plus) {
      p.from = lower;
      p.to = upper;
    } else {
      p.from = upper;
      p.to = lower;
      std::reverse(pts.begin(), pts.end());
    }
    p.pts = std::move(pts);
    pieces_.push_back(std::move(p));
  }

  Node vertex(Pt p) {
    dots_.push_back(p);
    Node n;
    n.cut = false;
    n.id = static_cast<int>(dots_.size()) - 1;
    return n;
  }

  static Node cut(int b, int i) { return Node{true, b, i, 0}; }

  void place_layer(int i) {
    int u = 0, l = 0;
    const double top = y(i), h = kDy;
    for (const auto &g : w_.layers[i]) {
      const auto us = g.upper(), ls = g.lower();
      switch (g.kind) {
      case GenKind::Identity:
        add(cut(i + 1, l), at(i + 1, l), cut(i, u), at(i, u), us[0], state_at(i, u));
        break;
      case GenKind::Cup: {
        const double xm = (x(i, u) + x(i, u + 1)) / 2;
        Node b = vertex_free({xm, top + 0.6 * h});
        add(b, {xm, top + 0.6 * h}, cut(i, u), at(i, u), us[0], state_at(i, u), {{x(i, u), top + 0.35 * h}});
        add(b, {xm, top + 0.6 * h}, cut(i, u + 1), at(i, u + 1), us[1], state_at(i, u + 1),
            {{x(i, u + 1), top + 0.35 * h}});
        break;
      }
      case GenKind::Cap: {
        const double xm = (x(i + 1, l) + x(i + 1, l + 1)) / 2;
        Node t = vertex_free({xm, top + 0.4 * h});
        add(cut(i + 1, l), at(i + 1, l), t, {xm, top + 0.4 * h}, ls[0], state_at(i + 1, l),
            {{x(i + 1, l), top + 0.65 * h}});
        add(cut(i + 1, l + 1), at(i + 1, l + 1), t, {xm, top + 0.4 * h}, ls[1], state_at(i + 1, l + 1),
            {{x(i + 1, l + 1), top + 0.65 * h}});
        break;
      }
      case GenKind::Split: {
        const Pt c{x(i + 1, l), top + 0.5 * h};
        Node v = vertex(c);
        add(v, c, cut(i, u), at(i, u), us[0], state_at(i, u));
        add(v, c, cut(i, u + 1), at(i, u + 1), us[1], state_at(i, u + 1));
        add(cut(i + 1, l), at(i + 1, l), v, c, ls[0], state_at(i + 1, l));
        break;
      }
      case GenKind::Join: {
        const Pt c{x(i, u), top + 0.5 * h};
        Node v = vertex(c);
        add(v, c, cut(i, u), at(i, u), us[0], state_at(i, u));
        add(cut(i + 1, l), at(i + 1, l), v, c, ls[0], state_at(i + 1, l));
        add(cut(i + 1, l + 1), at(i + 1, l + 1), v, c, ls[1], state_at(i + 1, l + 1));
        break;
      }
      case GenKind::H: {
        // Join on the right sits above Split on the left; the middle strand has sign s.
        const Pt r{x(i, u + 1), top + h / 3}, lft{x(i + 1, l), top + 2 * h / 3};
        Node vr = vertex(r), vl = vertex(lft);
        const int u1 = state_at(i, u + 1), l1 = state_at(i + 1, l + 1);
        add(vl, lft, cut(i, u), at(i, u), us[0], state_at(i, u));
        add(vr, r, cut(i, u + 1), at(i, u + 1), us[1], u1);
        add(cut(i + 1, l), at(i + 1, l), vl, lft, ls[0], state_at(i + 1, l));
        add(cut(i + 1, l + 1), at(i + 1, l + 1), vr, r, ls[1], l1);
        add(vl, lft, vr, r, g.sign, states_.empty() ? 0 : h_middle(g.sign, u1, l1));
        break;
      }
      }
      u += static_cast<int>(g.upper_width());
      l += static_cast<int>(g.lower_width());
    }
  }

  // Turning point of a cup or cap: joins its two pieces but is not drawn.
  Node vertex_free(Pt) {
    Node n;
    n.cut = false;
    n.id = -1 - static_cast<int>(turns_++);
    return n;
  }

  const SliceWord &w_;
  std::vector<std::size_t> widths_;
  std::vector<StateString> states_;
  std::vector<Piece> pieces_;
  std::vector<Pt> dots_;
  std::size_t turns_ = 0;
};

bool joins(const Node &n) { return n.cut || n.id < 0; }

Pt midpoint(const std::vector<Pt> &pts, double &dx, double &dy) {
  double total = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    total += std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
  double want = total / 2;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double len = std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
    if (len > 0 && (want <= len || i + 1 == pts.size())) {
      dx = (pts[i].x - pts[i - 1].x) / len;
      dy = (pts[i].y - pts[i - 1].y) / len;
      const double t = std::min(want, len);
      return {pts[i - 1].x + dx * t, pts[i - 1].y + dy * t};
    }
    want -= len;
  }
  dx = 0;
  dy = -1;
  return pts.front();
}

std::string Layout::svg() const {
  // Chain pieces into strands running between vertices and the outer boundary.
  const std::size_t np = pieces_.size();
  std::vector<int> next(np, -1), prev(np, -1);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b)
      if (a != b && joins(pieces_[a].to) && pieces_[a].to == pieces_[b].from) {
        next[a] = static_cast<int>(b);
        prev[b] = static_cast<int>(a);
      }
  std::vector<std::vector<Pt>> strands;
  std::vector<bool> seen(np, false);
  auto walk = [&](std::size_t start) {
    std::vector<Pt> pts;
    int p = static_cast<int>(start);
    for (; p >= 0 && !seen[p]; p = next[p]) {
      seen[p] = true;
      const auto &q = pieces_[p].pts;
      pts.insert(pts.end(), pts.empty() ? q.begin() : q.begin() + 1, q.end());
    }
    if (p == static_cast<int>(start))
      pts.push_back(pts.front());
    strands.push_back(std::move(pts));
  };
  for (std::size_t p = 0; p < np; ++p)
    if (prev[p] < 0)
      walk(p);
  for (std::size_t p = 0; p < np; ++p)
    if (!seen[p])
      walk(p);

  std::size_t maxw = 1;
  for (auto wd : widths_)
    maxw = std::max(maxw, wd);
  const int width = 2 * kMargin + kDx * static_cast<int>(maxw - 1);
  const int height = 2 * kMargin + kDy * static_cast<int>(widths_.size() - 1);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"#999\" stroke-dasharray=\"4 4\">\n";
  os << "<line x1=\"0\" y1=\"" << kMargin << "\" x2=\"" << width << "\" y2=\"" << kMargin << "\"/>\n";
  if (!w_.bottom().empty())
    os << "<line x1=\"0\" y1=\"" << height - kMargin << "\" x2=\"" << width << "\" y2=\"" << height - kMargin
       << "\"/>\n";
  os << "</g>\n";

  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto &s : strands)
    os << "<polyline points=\"" << points(s) << "\"/>\n";
  os << "</g>\n";

  if (!states_.empty()) {
    os << "<g fill=\"none\" stroke-width=\"4\" stroke-opacity=\"0.7\">\n";
    for (const auto &p : pieces_)
      if (p.state != 0)
        os << "<polyline stroke=\"" << (p.state > 0 ? "red" : "blue") << "\" points=\"" << points(p.pts)
           << "\"/>\n";
    os << "</g>\n";
  }

  os << "<g fill=\"black\">\n";
  for (const auto &s : strands) {
    double dx, dy;
    const Pt m = midpoint(s, dx, dy);
    const double nx = -dy, ny = dx;
    const Pt tip{m.x + 5 * dx, m.y + 5 * dy};
    const Pt a{m.x - 5 * dx + 4 * nx, m.y - 5 * dy + 4 * ny};
    const Pt b{m.x - 5 * dx - 4 * nx, m.y - 5 * dy - 4 * ny};
    os << "<polygon points=\"" << points({tip, a, b}) << "\"/>\n";
  }
  for (const auto &d : dots_)
    os << "<circle cx=\"" << num(d.x) << "\" cy=\"" << num(d.y) << "\" r=\"4\"/>\n";
  os << "</g>\n";

  os << "<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n";
  auto labels = [&](int b, const SignString &signs, double dy) {
    for (std::size_t k = 0; k < signs.size(); ++k) {
      std::string t = signs[k] == Sign::Plus ? "+" : "-";
      if (!states_.empty())
        t += " " + std::to_string(states_[b][k]);
      os << "<text x=\"" << num(x(b, static_cast<int>(k))) << "\" y=\"" << num(y(b) + dy) << "\">" << t
         << "</text>\n";
    }
  };
  labels(0, w_.top, -10);
  labels(static_cast<int>(widths_.size()) - 1, w_.bottom(), 20);
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

} // namespace

std::string render_svg(const Web &w, const std::optional<StateRecord> &state) {
  return Layout(w.drawing(), state).svg();
}

} // namespace spider
