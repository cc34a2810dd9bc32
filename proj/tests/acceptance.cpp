// Acceptance gate: runs the numbered criteria and prints one line per
// criterion.  Optional arguments select criterion ids; --quick shrinks the
// instance counts.  Exit status is the number of failing criteria.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

#include "dyb/acceptance.hpp"

int main(int argc, char** argv) {
  dyb::AcceptanceConfig cfg;
  cfg.jobs = int(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      cfg.scale = 0.1;
      cfg.max_depth = 12;
    } else {
      const int id = std::atoi(argv[i]);
      if (id < 1 || id > 10) {
        std::fprintf(stderr, "usage: %s [--quick] [criterion-id ...]\n", argv[0]);
        return 2;
      }
      only.push_back(id);
    }
  }

  const auto results = dyb::run_acceptance(cfg, only);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("criterion %d (%s): %s — %s [%.1fs]\n", r.id, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.c_str(), r.seconds);
    if (!r.pass) ++failures;
  }
  return failures;
}
