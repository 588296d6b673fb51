// Text and JSON forms of scan results, expansions and combinations.
#pragma once

#include "spider/canonical.hpp"
#include "spider/reduction.hpp"

#include <map>
#include <string>
#include <vector>

namespace spider {

// signs S / dimension N / failures K / one "failure J J' poly" per line / end
std::string to_text(const ScanReport &r);
std::string to_json(const ScanReport &r);
// A JSON array of reports, in the given order.
std::string to_json(const std::vector<ScanReport> &rs);

std::string to_json(const Web &w);
std::string to_json(const TensorVector &x);
std::string to_json(const WebCombination &c);

using DualBasis = std::map<StateString, TensorVector>;
std::string basis_to_text(const SignString &s, const DualBasis &b);
std::string basis_to_json(const SignString &s, const DualBasis &b);

} // namespace spider
