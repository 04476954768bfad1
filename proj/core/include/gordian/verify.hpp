#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gordian/invariants.hpp"

namespace gordian {

struct VerifyResult {
  std::string claim;
  std::string parameters;
  bool pass = true;
  std::vector<std::string> details;
  // First failing instance; empty on PASS.
  std::string counterexample;
  // Instances skipped because they exceed the brute-force limit.
  std::vector<std::string> skipped;
};

struct VerifyOptions {
  std::optional<int> lo, hi;  // parameter range; claim default when unset
  std::uint64_t seed = 20240601;
  BracketOptions bracket;
};

// Claim identifiers in acceptance order.
const std::vector<std::string>& claim_names();
bool known_claim(const std::string& claim);
VerifyResult run_claim(const std::string& claim, const VerifyOptions& opt = {});

}  // namespace gordian
