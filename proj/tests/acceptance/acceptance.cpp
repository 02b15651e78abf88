// One PASS/FAIL line per acceptance criterion.
// Usage: cube_acceptance <path to cube binary> <test data directory>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "criteria.hpp"

using namespace cube::testing;

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <cube binary> <data dir>\n", argv[0]);
    return 2;
  }
  const std::string binary = argv[1], data = argv[2];

  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"worked examples", [] { return worked_examples(); }},
      {"cube matrix", [&] { return cube_matrix(binary, data); }},
      {"confluence", [] { return confluence(1000, 1); }},
      {"strong normalization", [] { return strong_normalization(150, 2); }},
      {"subject reduction", [] { return subject_reduction(150, 3); }},
      {"substitution oracle", [] { return substitution_oracle(10000, 4); }},
      {"church arithmetic", [] { return church_arithmetic(10); }},
      {"curry-howard", [] { return curry_howard(); }},
      {"ccc laws", [] { return ccc_laws(200, 5, 3); }},
      {"type in type", [] { return type_in_type(); }},
      {"surface round trip", [] { return surface_round_trip(10000, 6); }},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str(), secs);
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
