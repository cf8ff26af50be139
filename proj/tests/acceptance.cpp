// Acceptance runner: one PASS/FAIL line per criterion, plus a comparison of
// the d = 2 chain instance against the checked-in golden file.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "reflexpm/errors.hpp"
#include "reflexpm/io.hpp"
#include "reflexpm/verify.hpp"

#ifndef REFLEXPM_GOLDEN_FILE
#error "REFLEXPM_GOLDEN_FILE must name the golden chain JSON file"
#endif

namespace {

void print(const reflexpm::CriterionResult& r) {
  std::printf("%s [%d] %s (%.3fs, limit %.0fs)\n", r.passed() ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
              r.limit_seconds);
  for (const auto& c : r.checks) {
    if (!c.passed) std::printf("    failed check: %s (%s)\n", c.name.c_str(), c.detail.c_str());
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  using namespace reflexpm;
  bool all = true;
  try {
    for (const auto& r : run_suite(SuiteOptions{}, print)) all = all && r.passed();

    const auto start = std::chrono::steady_clock::now();
    const auto golden = io::read_json_file(REFLEXPM_GOLDEN_FILE);
    const auto computed = golden_chain_instance();
    bool same = true;
    for (const auto& [key, value] : golden.items()) {
      if (!computed.contains(key) || computed.at(key) != value) {
        same = false;
        std::printf("    mismatch in %s: got %s\n", key.c_str(),
                    computed.contains(key) ? io::dump(computed.at(key)).c_str() : "nothing");
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = same && secs < 1.0;
    std::printf("%s [7g] golden file matches computed d=2 chain instance (%.3fs, limit 1s)\n", ok ? "PASS" : "FAIL",
                secs);
    all = all && ok;
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
