// Layer-by-layer state sum. A cut is packed into a uint64 with two bits per
// strand (state + 1), strand 0 in the lowest bits.

#include "spider/errors.hpp"
#include "spider/web.hpp"

#include <algorithm>
#include <unordered_set>

namespace spider {

namespace {

constexpr std::size_t kMaxWidth = 32;

struct Move {
  std::uint64_t upper;
  int exponent;
};

struct Step {
  SliceGenerator gen;
  int offset; // lower offset in the cut below
  int lw, uw;
  std::vector<std::vector<Move>> moves; // indexed by packed lower code
};

std::uint64_t pack(const StateString &s) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    x |= static_cast<std::uint64_t>(s[i] + 1) << (2 * i);
  return x;
}

StateString unpack(std::uint64_t x, std::size_t width) {
  StateString s(width);
  for (std::size_t i = 0; i < width; ++i)
    s[i] = static_cast<std::int8_t>(static_cast<int>((x >> (2 * i)) & 3) - 1);
  return s;
}

std::uint64_t low_mask(int strands) {
  return strands >= 32 ? ~0ULL : ((1ULL << (2 * strands)) - 1);
}

// Generator applications from the bottom of the drawing up, right to left in a layer.
std::vector<Step> build_steps(const SliceWord &w) {
  if (w.max_width() > kMaxWidth)
    throw InvalidInput("drawing wider than " + std::to_string(kMaxWidth) + " strands");
  std::vector<Step> steps;
  for (auto layer = w.layers.rbegin(); layer != w.layers.rend(); ++layer) {
    std::vector<int> offsets;
    int off = 0;
    for (const auto &g : *layer) {
      offsets.push_back(off);
      off += static_cast<int>(g.lower_width());
    }
    for (std::size_t i = layer->size(); i-- > 0;) {
      const auto &g = (*layer)[i];
      if (g.kind == GenKind::Identity)
        continue;
      Step st{g, offsets[i], static_cast<int>(g.lower_width()), static_cast<int>(g.upper_width()), {}};
      st.moves.resize(std::size_t(1) << (2 * st.lw));
      for (const auto &e : generator_table(g))
        st.moves[pack(e.lower)].push_back({pack(e.upper), e.exponent});
      steps.push_back(std::move(st));
    }
  }
  return steps;
}

std::uint64_t apply(const Step &st, std::uint64_t s, std::uint64_t upper) {
  const int lo = 2 * st.offset;
  const std::uint64_t keep = s & low_mask(st.offset);
  const std::uint64_t high = (st.offset + st.lw >= 32) ? 0 : (s >> (lo + 2 * st.lw));
  return keep | (upper << lo) | (high ? high << (lo + 2 * st.uw) : 0);
}

std::uint64_t lower_code(const Step &st, std::uint64_t s) {
  return (s >> (2 * st.offset)) & low_mask(st.lw);
}

struct Overflow {};

inline void accumulate(std::int64_t &a, std::int64_t b) {
  if (__builtin_add_overflow(a, b, &a))
    throw Overflow{};
}
inline void accumulate(Integer &a, const Integer &b) { a += b; }

// Open addressing on (cut, exponent).
template <class T> class StateTable {
public:
  struct Slot {
    std::uint64_t state;
    int exponent;
    T count;
  };

  explicit StateTable(std::size_t cap = 16) { reset(cap); }

  void add(std::uint64_t state, int exponent, const T &c) {
    if (2 * (size_ + 1) > slots_.size())
      grow();
    std::size_t i = index(state, exponent);
    while (used_[i]) {
      auto &s = slots_[i];
      if (s.state == state && s.exponent == exponent) {
        accumulate(s.count, c);
        return;
      }
      i = (i + 1) & (slots_.size() - 1);
    }
    used_[i] = 1;
    slots_[i] = {state, exponent, c};
    ++size_;
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (used_[i])
        f(slots_[i]);
  }

  std::size_t size() const { return size_; }

private:
  void reset(std::size_t cap) {
    std::size_t c = 16;
    while (c < cap)
      c <<= 1;
    slots_.assign(c, Slot{0, 0, T{}});
    used_.assign(c, 0);
    size_ = 0;
  }

  std::size_t index(std::uint64_t state, int exponent) const {
    std::uint64_t h = state * 0x9E3779B97F4A7C15ULL ^ (static_cast<std::uint64_t>(exponent) + 0x632BE59BD9B4E019ULL);
    h ^= h >> 29;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 32;
    return h & (slots_.size() - 1);
  }

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    std::vector<char> old_used = std::move(used_);
    reset(old.size() * 2);
    for (std::size_t i = 0; i < old.size(); ++i)
      if (old_used[i])
        add(old[i].state, old[i].exponent, old[i].count);
  }

  std::vector<Slot> slots_;
  std::vector<char> used_;
  std::size_t size_ = 0;
};

template <class T>
TensorVector run_dp(const std::vector<Step> &steps, const SignString &top, std::uint64_t bottom) {
  StateTable<T> cur;
  cur.add(bottom, 0, T(1));
  for (const auto &st : steps) {
    StateTable<T> next(cur.size() * 2);
    cur.for_each([&](const auto &slot) {
      for (const auto &mv : st.moves[lower_code(st, slot.state)])
        next.add(apply(st, slot.state, mv.upper), slot.exponent + mv.exponent, slot.count);
    });
    cur = std::move(next);
  }
  std::map<std::uint64_t, std::vector<Term>> by_state;
  cur.for_each([&](const auto &slot) {
    if (slot.count != 0)
      by_state[slot.state].push_back({slot.exponent, Integer(slot.count)});
  });
  TensorVector out(top);
  for (auto &[s, terms] : by_state)
    out.add(unpack(s, top.size()), LaurentPoly::from_terms(std::move(terms)));
  return out;
}

TensorVector evaluate_from(const std::vector<Step> &steps, const SignString &top, std::uint64_t bottom) {
  try {
    return run_dp<std::int64_t>(steps, top, bottom);
  } catch (const Overflow &) {
    return run_dp<Integer>(steps, top, bottom);
  }
}

std::vector<StateString> all_states(std::size_t n) {
  std::vector<StateString> out;
  StateString s(n, -1);
  while (true) {
    out.push_back(s);
    std::size_t i = n;
    while (i > 0 && s[i - 1] == 1)
      s[--i] = -1;
    if (i == 0)
      break;
    ++s[i - 1];
  }
  return out;
}

// Width of each cut, bottom-up.
std::vector<std::size_t> cut_widths(const SliceWord &w, const std::vector<Step> &steps) {
  std::vector<std::size_t> widths{w.bottom().size()};
  for (const auto &st : steps)
    widths.push_back(widths.back() - st.lw + st.uw);
  return widths;
}

} // namespace

TensorVector evaluate(const Web &w) {
  if (!w.bottom().empty())
    throw InvalidInput("evaluate needs an invariant web; use evaluate_hom for webs with a bottom boundary");
  return evaluate_from(build_steps(w.drawing()), w.top(), 0);
}

std::map<StateString, TensorVector> evaluate_hom(const Web &w) {
  const auto steps = build_steps(w.drawing());
  std::map<StateString, TensorVector> out;
  for (const auto &b : all_states(w.bottom().size()))
    out.emplace(b, evaluate_from(steps, w.top(), pack(b)));
  return out;
}

std::vector<StateRecord> enumerate_states(const Web &w) {
  const auto steps = build_steps(w.drawing());
  const auto widths = cut_widths(w.drawing(), steps);
  std::vector<StateRecord> out;
  std::vector<std::uint64_t> path;
  std::vector<int> exps;

  auto dfs = [&](auto &&self, std::size_t k, std::uint64_t s, int e) -> void {
    path.push_back(s);
    if (k == steps.size()) {
      StateRecord r;
      for (std::size_t i = 0; i < path.size(); ++i)
        r.cuts.push_back(unpack(path[i], widths[i]));
      r.exponent = e;
      out.push_back(std::move(r));
    } else {
      const auto &st = steps[k];
      for (const auto &mv : st.moves[lower_code(st, s)])
        self(self, k + 1, apply(st, s, mv.upper), e + mv.exponent);
    }
    path.pop_back();
  };
  for (const auto &b : all_states(w.bottom().size()))
    dfs(dfs, 0, pack(b), 0);
  return out;
}

std::optional<StateRecord> find_state(const Web &w, const StateString &top, const StateString &bottom) {
  if (top.size() != w.top().size() || bottom.size() != w.bottom().size())
    throw MismatchError("boundary state does not match the web");
  const auto steps = build_steps(w.drawing());
  const auto widths = cut_widths(w.drawing(), steps);

  std::vector<std::unordered_set<std::uint64_t>> reach(steps.size() + 1);
  reach[0].insert(pack(bottom));
  for (std::size_t k = 0; k < steps.size(); ++k)
    for (auto s : reach[k])
      for (const auto &mv : steps[k].moves[lower_code(steps[k], s)])
        reach[k + 1].insert(apply(steps[k], s, mv.upper));

  std::uint64_t cur = pack(top);
  if (!reach[steps.size()].count(cur))
    return std::nullopt;

  StateRecord r;
  r.cuts.resize(steps.size() + 1);
  r.cuts[steps.size()] = unpack(cur, widths.back());
  for (std::size_t k = steps.size(); k-- > 0;) {
    // Deterministic choice: the smallest predecessor cut.
    std::vector<std::uint64_t> preds(reach[k].begin(), reach[k].end());
    std::sort(preds.begin(), preds.end());
    bool found = false;
    for (auto s : preds) {
      for (const auto &mv : steps[k].moves[lower_code(steps[k], s)])
        if (apply(steps[k], s, mv.upper) == cur) {
          r.exponent += mv.exponent;
          cur = s;
          found = true;
          break;
        }
      if (found)
        break;
    }
    r.cuts[k] = unpack(cur, widths[k]);
  }
  return r;
}

} // namespace spider
