// Runs every acceptance criterion and prints one PASS/FAIL line for each.
#include <cstdio>
#include <cstring>

#include "compchains/verify.hpp"

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failed = 0;
  const auto criteria = compchains::acceptance_criteria();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    const auto r = compchains::run_check(criteria[i]);
    std::printf("criterion %s %s (%.2f s)\n", r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds);
    for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, only ? std::size_t{1} : criteria.size());
  return failed ? 1 : 0;
}
