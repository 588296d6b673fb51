// The growth algorithm (sign string, state string) -> web, and its inverse
// via minimal cut paths.
#pragma once

#include "spider/web.hpp"

#include <cstdint>
#include <optional>

namespace spider {

enum class RuleFamily : std::uint8_t { H, Cup, Y };

// One of the 14 rules rewriting an adjacent pair (left, right) of the
// boundary. The generator is drawn below the pair; out_signs/out_states
// replace the pair in the residual strings.
struct GrowthRule {
  RuleFamily family;
  Sign left, right;
  std::int8_t in_left, in_right;
  SignString out_signs;
  StateString out_states;

  SliceGenerator generator() const;
};

const std::vector<GrowthRule> &growth_rules();

// The rule applying at positions (k, k+1), if any.
const GrowthRule *rule_at(const SignString &s, const StateString &j, std::size_t k);

struct GrowthResult {
  Web web; // top = S, bottom = residual signs
  SignString residual_signs;
  StateString residual_states;
};

// Leftmost applicable rule first. Throws MismatchError if |S| != |J|.
GrowthResult grow(const SignString &s, const StateString &j);
// Applies a uniformly random applicable rule at each step.
GrowthResult grow_random(const SignString &s, const StateString &j, std::uint64_t seed);

// State string read off the minimal cut paths of a non-elliptic invariant web.
// Throws InvalidInput when the weights do not come from a basis vector.
StateString min_cut_states(const Web &w);

} // namespace spider
