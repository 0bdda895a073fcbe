#include <cstdlib>
#include <iostream>
#include <string>

#include "majorana/acceptance.hpp"

// Usage: acceptance [seed]
int main(int argc, char** argv) {
  majorana::SuiteOptions options;
  if (argc > 1) options.seed = std::stoull(argv[1]);
  const auto results = majorana::run_acceptance(options);
  std::cout << majorana::format_report(results);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (failed == 0 ? "all 12 criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
