#include "spider/growth.hpp"

#include "map_detail.hpp"
#include "spider/errors.hpp"

#include <deque>
#include <random>

namespace spider {

SliceGenerator GrowthRule::generator() const {
  switch (family) {
  case RuleFamily::H: return {GenKind::H, left};
  case RuleFamily::Cup: return {GenKind::Cup, left};
  case RuleFamily::Y: return {GenKind::Split, left};
  }
  return {GenKind::Identity, left};
}

const std::vector<GrowthRule> &growth_rules() {
  static const std::vector<GrowthRule> rules = [] {
    std::vector<GrowthRule> r;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      // H keeps the sign pair but swaps it, since the strands below an H
      // have the opposite orientation to the ones above.
      r.push_back({RuleFamily::H, s, -s, 1, 0, {-s, s}, {0, 1}});
      r.push_back({RuleFamily::H, s, -s, 0, 0, {-s, s}, {-1, 1}});
      r.push_back({RuleFamily::H, s, -s, 0, -1, {-s, s}, {-1, 0}});
      r.push_back({RuleFamily::Cup, s, -s, 1, -1, {}, {}});
      r.push_back({RuleFamily::Y, s, s, 1, 0, {-s}, {1}});
      r.push_back({RuleFamily::Y, s, s, 0, -1, {-s}, {-1}});
      r.push_back({RuleFamily::Y, s, s, 1, -1, {-s}, {0}});
    }
    return r;
  }();
  return rules;
}

const GrowthRule *rule_at(const SignString &s, const StateString &j, std::size_t k) {
  if (k + 1 >= s.size())
    return nullptr;
  for (const auto &r : growth_rules())
    if (r.left == s[k] && r.right == s[k + 1] && r.in_left == j[k] && r.in_right == j[k + 1])
      return &r;
  return nullptr;
}

namespace {

// Draws the rule's generator below the current bottom and updates the strings.
void apply(SliceWord &w, SignString &s, StateString &j, std::size_t k, const GrowthRule &r) {
  Layer layer;
  for (std::size_t i = 0; i < k; ++i)
    layer.push_back({GenKind::Identity, s[i]});
  layer.push_back(r.generator());
  for (std::size_t i = k + 2; i < s.size(); ++i)
    layer.push_back({GenKind::Identity, s[i]});
  w.layers.push_back(std::move(layer));
  s.erase(s.begin() + k, s.begin() + k + 2);
  s.insert(s.begin() + k, r.out_signs.begin(), r.out_signs.end());
  j.erase(j.begin() + k, j.begin() + k + 2);
  j.insert(j.begin() + k, r.out_states.begin(), r.out_states.end());
}

template <class Pick> GrowthResult run(const SignString &s0, const StateString &j0, Pick &&pick) {
  if (s0.size() != j0.size())
    throw MismatchError("sign and state strings differ in length");
  for (auto x : j0)
    if (x < -1 || x > 1)
      throw InvalidInput("state out of range");
  SliceWord w;
  w.top = s0;
  SignString s = s0;
  StateString j = j0;
  std::vector<std::size_t> spots;
  while (true) {
    spots.clear();
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
      if (rule_at(s, j, k))
        spots.push_back(k);
    if (spots.empty())
      break;
    const std::size_t k = pick(spots);
    apply(w, s, j, k, *rule_at(s, j, k));
  }
  return {Web(std::move(w)), std::move(s), std::move(j)};
}

} // namespace

GrowthResult grow(const SignString &s, const StateString &j) {
  return run(s, j, [](const std::vector<std::size_t> &spots) { return spots.front(); });
}

GrowthResult grow_random(const SignString &s, const StateString &j, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return run(s, j, [&](const std::vector<std::size_t> &spots) {
    return spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
  });
}

StateString min_cut_states(const Web &w) {
  if (!w.is_invariant_web())
    throw InvalidInput("min_cut_states needs a web without bottom boundary");
  const auto top = w.top();
  if (top.empty())
    return {};
  const auto d = detail::disk_map(w.map());
  const PlanarMap &m = d.map;
  const std::size_t nf = d.faces.size();

  // Dual edges: crossing web half-edge h from its left face to its right.
  struct Cross {
    int to;
    WeightVec w;
  };
  std::vector<std::vector<Cross>> adj(nf);
  for (std::size_t h = 0; h < w.map().half_edges.size(); ++h) {
    const auto &e = m.half_edges[h];
    const int from = d.face_of[h], to = d.face_of[e.twin];
    if (from < 0 || to < 0)
      continue;
    // Left to right across an edge contributes mu+, right to left mu-.
    adj[from].push_back({to, e.out ? mu_plus : mu_minus});
  }

  const int src = d.face_of[d.gap_arc[0]];
  std::vector<int> dist(nf, -1);
  std::vector<std::optional<WeightVec>> pi(nf);
  std::deque<int> q{src};
  dist[src] = 0;
  pi[src] = WeightVec{0, 0};
  while (!q.empty()) {
    const int f = q.front();
    q.pop_front();
    for (const auto &c : adj[f]) {
      const WeightVec cand = *pi[f] + c.w;
      if (dist[c.to] < 0) {
        dist[c.to] = dist[f] + 1;
        pi[c.to] = cand;
        q.push_back(c.to);
      } else if (dist[c.to] == dist[f] + 1 && !(*pi[c.to] == cand)) {
        throw InvalidInput("minimal cut paths to one face have different weights");
      }
    }
  }

  StateString j;
  WeightVec prev{0, 0};
  for (std::size_t k = 1; k <= top.size(); ++k) {
    const int f = d.face_of[d.gap_arc[k]];
    if (dist[f] < 0)
      throw InvalidInput("boundary gap unreachable in the dual graph");
    const WeightVec diff = *pi[f] - prev;
    prev = *pi[f];
    bool found = false;
    for (int x = -1; x <= 1 && !found; ++x)
      if (weight(top[k - 1], x) == diff) {
        j.push_back(static_cast<std::int8_t>(x));
        found = true;
      }
    if (!found)
      throw InvalidInput("cut weight difference is not the weight of a basis vector");
  }
  return j;
}

} // namespace spider
