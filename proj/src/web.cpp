#include "spider/web.hpp"

#include "spider/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace spider {

SignString SliceGenerator::upper() const {
  switch (kind) {
  case GenKind::Identity: return {sign};
  case GenKind::Cup: return {sign, -sign};
  case GenKind::Cap: return {};
  case GenKind::Split: return {sign, sign};
  case GenKind::Join: return {-sign};
  case GenKind::H: return {sign, -sign};
  }
  return {};
}

SignString SliceGenerator::lower() const {
  switch (kind) {
  case GenKind::Identity: return {sign};
  case GenKind::Cup: return {};
  case GenKind::Cap: return {sign, -sign};
  case GenKind::Split: return {-sign};
  case GenKind::Join: return {sign, sign};
  case GenKind::H: return {-sign, sign};
  }
  return {};
}

std::size_t SliceGenerator::upper_width() const {
  static constexpr std::array<std::size_t, 6> w{1, 2, 0, 2, 1, 2};
  return w[static_cast<int>(kind)];
}

std::size_t SliceGenerator::lower_width() const {
  static constexpr std::array<std::size_t, 6> w{1, 0, 2, 1, 2, 2};
  return w[static_cast<int>(kind)];
}

std::string token(const SliceGenerator &g) {
  static constexpr std::array<char, 6> letter{'I', 'U', 'N', 'Y', 'L', 'H'};
  // Caps and joins are named by their lower strands, everything else by the upper ones.
  const bool by_lower = g.kind == GenKind::Cap || g.kind == GenKind::Join;
  std::string out(1, letter[static_cast<int>(g.kind)]);
  out += to_string(by_lower ? g.lower() : g.upper());
  return out;
}

namespace {

std::vector<TableEntry> build_table(const SliceGenerator &g) {
  std::vector<TableEntry> t;
  auto st = [](std::initializer_list<int> xs) {
    StateString s;
    for (int x : xs)
      s.push_back(static_cast<std::int8_t>(x));
    return s;
  };
  switch (g.kind) {
  case GenKind::Identity:
    for (int j = -1; j <= 1; ++j)
      t.push_back({st({j}), st({j}), 0});
    break;
  case GenKind::Cup:
    for (int j = 1; j >= -1; --j)
      t.push_back({{}, st({j, -j}), j - 1});
    break;
  case GenKind::Cap:
    for (int j = 1; j >= -1; --j)
      t.push_back({st({j, -j}), {}, j + 1});
    break;
  case GenKind::Split:
    for (int j = 1; j >= -1; --j)
      for (int a = 1; a >= -1; --a) {
        int b = j - a;
        if (b < -1 || b > 1 || a == b)
          continue;
        t.push_back({st({j}), st({a, b}), a > b ? 0 : -1});
      }
    break;
  case GenKind::Join:
    for (int a = 1; a >= -1; --a)
      for (int b = 1; b >= -1; --b) {
        int j = a + b;
        if (a == b || j < -1 || j > 1)
          continue;
        t.push_back({st({a, b}), st({j}), a > b ? 1 : 0});
      }
    break;
  case GenKind::H: {
    // Contract Split(s) on the lower-left strand with Join(s) over the middle and right.
    std::map<std::pair<StateString, StateString>, LaurentPoly> acc;
    for (const auto &sp : build_table({GenKind::Split, g.sign}))
      for (const auto &jn : build_table({GenKind::Join, g.sign}))
        for (int y = -1; y <= 1; ++y) {
          if (jn.lower != st({sp.upper[1], y}))
            continue;
          StateString lower = st({sp.lower[0], y});
          StateString upper = st({sp.upper[0], jn.upper[0]});
          acc[{lower, upper}] += LaurentPoly::v(sp.exponent + jn.exponent);
        }
    for (const auto &[k, p] : acc) {
      // A single state of the middle edge survives for each boundary pair.
      if (p.size() != 1 || p.terms()[0].coefficient != 1)
        throw std::logic_error("H table entry is not a monomial");
      t.push_back({k.first, k.second, p.terms()[0].exponent});
    }
    break;
  }
  }
  return t;
}

} // namespace

const std::vector<TableEntry> &generator_table(const SliceGenerator &g) {
  static const auto tables = [] {
    std::array<std::array<std::vector<TableEntry>, 2>, 6> out;
    for (int k = 0; k < 6; ++k)
      for (int s = 0; s < 2; ++s)
        out[k][s] = build_table({static_cast<GenKind>(k), s == 0 ? Sign::Plus : Sign::Minus});
    return out;
  }();
  return tables[static_cast<int>(g.kind)][g.sign == Sign::Plus ? 0 : 1];
}

// ---------------------------------------------------------------------------

void SliceWord::validate() const {
  SignString cur = top;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    SignString upper, lower;
    for (const auto &g : layers[l]) {
      auto u = g.upper();
      auto d = g.lower();
      upper.insert(upper.end(), u.begin(), u.end());
      lower.insert(lower.end(), d.begin(), d.end());
    }
    if (upper != cur)
      throw MismatchError("layer " + std::to_string(l + 1) + " expects strands " +
                          to_string(upper) + " but receives " + to_string(cur));
    cur = std::move(lower);
  }
}

SignString SliceWord::bottom() const {
  if (layers.empty())
    return top;
  SignString lower;
  for (const auto &g : layers.back()) {
    auto d = g.lower();
    lower.insert(lower.end(), d.begin(), d.end());
  }
  return lower;
}

std::size_t SliceWord::max_width() const {
  std::size_t w = top.size();
  for (const auto &layer : layers) {
    std::size_t x = 0;
    for (const auto &g : layer)
      x += g.lower_width();
    w = std::max(w, x);
  }
  return w;
}

namespace {

std::string signs_or_dot(const SignString &s) { return s.empty() ? "." : to_string(s); }

} // namespace

std::string to_text(const SliceWord &w) {
  std::ostringstream os;
  os << "top " << signs_or_dot(w.top) << '\n';
  for (const auto &layer : w.layers) {
    for (std::size_t i = 0; i < layer.size(); ++i)
      os << (i ? " " : "") << token(layer[i]);
    os << '\n';
  }
  os << "bottom " << signs_or_dot(w.bottom()) << '\n';
  return os.str();
}

namespace {

struct Tok {
  std::string text;
  std::size_t col;
};

std::vector<Tok> split_tokens(const std::string &line) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    if (i >= line.size() || line[i] == '#')
      break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start});
  }
  return out;
}

SignString parse_sign_field(const Tok &t, std::size_t lineno) {
  if (t.text == ".")
    return {};
  try {
    return parse_signs(t.text);
  } catch (const ParseError &e) {
    throw ParseError("bad sign string '" + t.text + "'", lineno, t.col + e.column());
  }
}

SliceGenerator parse_generator(const Tok &t, std::size_t lineno) {
  auto fail = [&](const std::string &msg) -> SliceGenerator {
    throw ParseError(msg + " '" + t.text + "'", lineno, t.col);
  };
  if (t.text.empty())
    return fail("empty token");
  SignString s;
  try {
    s = parse_signs(std::string_view(t.text).substr(1));
  } catch (const ParseError &) {
    return fail("bad generator signs in");
  }
  const char c = t.text[0];
  auto want = [&](std::size_t n) {
    if (s.size() != n)
      fail("wrong number of signs in");
  };
  switch (c) {
  case 'I':
    want(1);
    return {GenKind::Identity, s[0]};
  case 'U':
  case 'N':
  case 'H':
    want(2);
    if (s[0] == s[1])
      fail("signs must differ in");
    return {c == 'U' ? GenKind::Cup : (c == 'N' ? GenKind::Cap : GenKind::H), s[0]};
  case 'Y':
  case 'L':
    want(2);
    if (s[0] != s[1])
      fail("signs must agree in");
    return {c == 'Y' ? GenKind::Split : GenKind::Join, s[0]};
  default:
    return fail("unknown generator");
  }
}

} // namespace

SliceWord parse_slice_word(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  SliceWord w;
  bool have_top = false, have_bottom = false;
  std::optional<SignString> declared_bottom;
  std::size_t bottom_line = 0;
  std::vector<std::pair<std::size_t, std::vector<Tok>>> sources;
  for (; std::getline(is, line); ++lineno) {
    auto toks = split_tokens(line);
    if (toks.empty())
      continue;
    if (have_bottom)
      throw ParseError("content after 'bottom'", lineno, toks[0].col);
    if (!have_top) {
      if (toks[0].text != "top")
        throw ParseError("expected 'top'", lineno, toks[0].col);
      if (toks.size() > 2)
        throw ParseError("unexpected token", lineno, toks[2].col);
      if (toks.size() == 2)
        w.top = parse_sign_field(toks[1], lineno);
      have_top = true;
      continue;
    }
    if (toks[0].text == "bottom") {
      if (toks.size() > 2)
        throw ParseError("unexpected token", lineno, toks[2].col);
      if (toks.size() == 2)
        declared_bottom = parse_sign_field(toks[1], lineno);
      have_bottom = true;
      bottom_line = lineno;
      continue;
    }
    Layer layer;
    for (const auto &t : toks)
      layer.push_back(parse_generator(t, lineno));
    w.layers.push_back(std::move(layer));
    sources.emplace_back(lineno, std::move(toks));
  }
  if (!have_top)
    throw ParseError("missing 'top' line", lineno, 0);

  // Strand mismatches are reported at the offending generator.
  SignString cur = w.top;
  for (std::size_t l = 0; l < w.layers.size(); ++l) {
    const auto &[ln, toks] = sources[l];
    SignString lower;
    std::size_t pos = 0;
    for (std::size_t g = 0; g < w.layers[l].size(); ++g) {
      for (Sign u : w.layers[l][g].upper()) {
        if (pos >= cur.size() || cur[pos] != u)
          throw ParseError("generator " + toks[g].text + " does not match incoming strands " +
                               signs_or_dot(cur),
                           ln, toks[g].col);
        ++pos;
      }
      auto d = w.layers[l][g].lower();
      lower.insert(lower.end(), d.begin(), d.end());
    }
    if (pos != cur.size())
      throw ParseError("layer leaves strands unconsumed (incoming " + signs_or_dot(cur) + ")", ln,
                       toks.back().col + toks.back().text.size());
    cur = std::move(lower);
  }
  if (declared_bottom && *declared_bottom != cur)
    throw ParseError("bottom " + signs_or_dot(*declared_bottom) + " does not match strands " +
                         signs_or_dot(cur),
                     bottom_line, 0);
  return w;
}

// ---------------------------------------------------------------------------

Web::Web() : encoding_(canonical_encoding(map_)) {}

Web::Web(SliceWord drawing) : drawing_(std::move(drawing)) {
  drawing_.validate();
  map_ = build_map(drawing_);
  encoding_ = canonical_encoding(map_);
}

Web::Web(PlanarMap map) {
  map.normalize();
  drawing_ = synthesize_drawing(map);
  map_ = build_map(drawing_);
  encoding_ = canonical_encoding(map_);
}

Web Web::identity(const SignString &s) {
  SliceWord w;
  w.top = s;
  return Web(std::move(w));
}

Web Web::generator(const SliceGenerator &g) {
  SliceWord w;
  w.top = g.upper();
  w.layers.push_back({g});
  return Web(std::move(w));
}

Web compose(const Web &top, const Web &bottom) {
  if (top.bottom() != bottom.top())
    throw MismatchError("cannot compose: " + signs_or_dot(top.bottom()) + " over " +
                        signs_or_dot(bottom.top()));
  SliceWord w = top.drawing();
  const auto &b = bottom.drawing().layers;
  w.layers.insert(w.layers.end(), b.begin(), b.end());
  return Web(std::move(w));
}

Web tensor(const Web &left, const Web &right) {
  SliceWord w;
  w.top = left.top();
  w.top.insert(w.top.end(), right.top().begin(), right.top().end());
  for (auto layer : left.drawing().layers) {
    for (Sign s : right.top())
      layer.push_back({GenKind::Identity, s});
    w.layers.push_back(std::move(layer));
  }
  const SignString lb = left.bottom();
  for (const auto &rl : right.drawing().layers) {
    Layer layer;
    for (Sign s : lb)
      layer.push_back({GenKind::Identity, s});
    layer.insert(layer.end(), rl.begin(), rl.end());
    w.layers.push_back(std::move(layer));
  }
  return Web(std::move(w));
}

std::vector<Face> faces(const Web &w) { return all_faces(w.map()); }

std::vector<Face> internal_faces(const Web &w) {
  std::vector<Face> out;
  for (auto &f : all_faces(w.map()))
    if (f.internal)
      out.push_back(std::move(f));
  return out;
}

bool is_non_elliptic(const Web &w) {
  const auto &m = w.map();
  if (m.loops > 0 || !m.closed_components().empty())
    return false;
  for (const auto &f : all_faces(m))
    if (f.internal && f.sides < 6)
      return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace gadgets {

namespace {

SliceGenerator I(Sign s) { return {GenKind::Identity, s}; }
SliceGenerator U(Sign s) { return {GenKind::Cup, s}; }
SliceGenerator N(Sign s) { return {GenKind::Cap, s}; }
SliceGenerator Y(Sign s) { return {GenKind::Split, s}; }
SliceGenerator L(Sign s) { return {GenKind::Join, s}; }
SliceGenerator H(Sign s) { return {GenKind::H, s}; }

Web make(SignString top, std::vector<Layer> layers) {
  SliceWord w;
  w.top = std::move(top);
  w.layers = std::move(layers);
  return Web(std::move(w));
}

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

} // namespace

Web y(Sign s) { return make({s, s}, {{Y(s)}}); }

Web double_h(Sign t) { return make({t, -t, t}, {{I(t), L(t), I(t)}, {Y(t), Y(t)}}); }

Web hexagon(Sign t) {
  return make({t, -t, t}, {{I(t), L(t), I(t)}, {Y(t), Y(t)}, {L(t), L(t)}, {I(t), Y(t), I(t)}});
}

Web loop() { return make({}, {{N(P)}, {U(P)}}); }

Web bigon_cup(Sign s) { return make({s, -s}, {{L(-s), I(-s)}, {Y(-s), I(-s)}, {U(s)}}); }

Web square(Sign s) { return make({-s, s, -s, s}, {{I(-s), H(s), I(s)}, {Y(-s), Y(s)}, {U(s)}}); }

Web zigzag(int which) {
  switch (which) {
  case 0: return make({M}, {{I(M), N(P)}, {U(M), I(M)}});
  case 1: return make({M}, {{N(M), I(M)}, {I(M), U(P)}});
  case 2: return make({P}, {{I(P), N(M)}, {U(P), I(P)}});
  case 3: return make({P}, {{N(P), I(P)}, {I(P), U(M)}});
  }
  throw InvalidInput("zig-zag index must be 0..3");
}

} // namespace gadgets

std::vector<StateRecord> gadget_states(const Web &g) {
  auto states = enumerate_states(g);
  std::sort(states.begin(), states.end(), [](const StateRecord &a, const StateRecord &b) {
    if (a.bottom() != b.bottom())
      return a.bottom() < b.bottom();
    if (a.top() != b.top())
      return a.top() < b.top();
    return a.exponent < b.exponent;
  });
  return states;
}

} // namespace spider
