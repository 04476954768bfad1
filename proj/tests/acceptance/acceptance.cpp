// Acceptance runner: one PASS/FAIL line per criterion, in order.
// Usage: acceptance [claim]

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "gordian/verify.hpp"

namespace {

struct Criterion {
  const char* claim;
  double budget_s;
};

const std::vector<Criterion> kCriteria = {
    {"affine-vkn", 1},  {"writhe-vkn", 1},  {"oracle-bracket", 120}, {"maxdeg4n", 10},
    {"b-matrix", 5},    {"tangle-vectors", 5}, {"prop4", 30},         {"c0-km", 1},
    {"rcc-km", 120},    {"arcshift-vkn", 120}, {"properties", 300},
};

}  // namespace

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  bool all_pass = true, ran = false;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    const Criterion& c = kCriteria[i];
    if (!only.empty() && only != c.claim) continue;
    ran = true;
    auto t0 = std::chrono::steady_clock::now();
    gordian::VerifyResult r;
    std::string error;
    try {
      r = gordian::run_claim(c.claim);
    } catch (const std::exception& e) {
      r.pass = false;
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= c.budget_s;
    bool pass = r.pass && in_time;
    all_pass = all_pass && pass;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.budget_s);
    std::cout << (pass ? "PASS " : "FAIL ") << i + 1 << " " << c.claim << " [" << r.parameters << "] " << timing
              << "\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    for (const auto& s : r.skipped) std::cout << "    skipped " << s << "\n";
    if (!r.counterexample.empty()) std::cout << "    counterexample: " << r.counterexample << "\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    if (!in_time) std::cout << "    over the time budget\n";
  }
  if (!ran) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 1;
  }
  return all_pass ? 0 : 3;
}
