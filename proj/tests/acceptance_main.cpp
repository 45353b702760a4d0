// Acceptance gate runner: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "facelab/acceptance.hpp"

int main() {
  const auto results = facelab::acceptance::run_all();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("[%s] %2d %s (%.2fs, limit %gs) — %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
  }
  std::printf("%s: %zu criteria\n", all ? "ALL PASS" : "FAILURES PRESENT", results.size());
  return all ? 0 : 1;
}
