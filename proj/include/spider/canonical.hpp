// Web basis, the negative-exponent test, scans and the correction algorithm.
#pragma once

#include "spider/growth.hpp"
#include "spider/web.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace spider {

// Dominant state strings for S in descending lex order.
std::vector<StateString> dominant_paths(const SignString &s);
// Their number, without listing them.
std::size_t dominant_count(const SignString &s);

struct BasisWeb {
  StateString state;
  Web web;
};
std::vector<BasisWeb> web_basis(const SignString &s);

struct Offense {
  StateString state;
  LaurentPoly coefficient;
};

struct DualCanonicalCheck {
  bool ok = true;
  std::vector<Offense> offending; // descending lex order
};

// Throws InvalidInput unless x has coefficient 1 at j.
DualCanonicalCheck is_dual_canonical(const TensorVector &x, const StateString &j);

// Sign flip, reversal and cyclic rotation.
SignString class_representative(const SignString &s);
// Every class representative with the given numbers of + and - signs.
std::vector<SignString> representatives(std::size_t plus, std::size_t minus);
// Every sign string of length n.
std::vector<SignString> all_sign_strings(std::size_t n);

struct ScanFailure {
  StateString state;
  StateString offending_state;
  LaurentPoly coefficient;
};

struct ScanReport {
  SignString signs;
  std::size_t dimension = 0;
  std::vector<ScanFailure> failures;
};

struct ScanOptions {
  std::filesystem::path cache_dir; // empty: no cache
  unsigned jobs = 1;
  std::function<void(const std::string &)> warn; // cache problems
};

// Expansion of the basis web w^S_J, through the cache when one is set.
TensorVector basis_expansion(const SignString &s, const StateString &j, const ScanOptions &opt = {});

ScanReport scan(const SignString &s, const ScanOptions &opt = {});

// Dual canonical basis, by correcting web expansions in ascending lex order.
std::map<StateString, TensorVector> dual_canonical_basis(const SignString &s, const ScanOptions &opt = {});

// Structure of webs that fail.
bool is_connected(const Web &w);
bool has_boundary_y(const Web &w);
bool has_boundary_double_h(const Web &w);

// The 12-point counterexample on (++--)^3 and its six-cup partner.
SignString counterexample_signs();
Web six_cup_web();

struct CorrectionCheck {
  StateString hexagon_state;
  StateString cup_state;
  TensorVector difference;
  bool hexagon_fails = false;
  bool cups_pass = false;
  bool difference_passes = false;
  bool matches_basis = false;

  bool ok() const { return hexagon_fails && cups_pass && difference_passes && matches_basis; }
};
CorrectionCheck check_correction(const ScanOptions &opt = {});
bool verify_correction(const ScanOptions &opt = {});

} // namespace spider
