#include "qinv/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  double seconds;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "bracket calculus", {"bracket-calculus"}, 5},
      {2, "polarisation", {"polarisation"}, 30},
      {3, "Gordan-Capelli", {"gordan-capelli"}, 60},
      {4, "forms", {"forms"}, 20},
      {5, "Newton relations", {"newton"}, 10},
      {6, "symbolic method", {"symbolic-linear", "symbolic-quadratic", "symbolic-cubic"}, 120},
      {7, "quartic", {"symbolic-quartic"}, 180},
      {8, "configuration", {"configuration-6.4"}, 180},
      {9, "property suites", {"properties"}, 60},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> chosen;
  for (int a = 1; a < argc; ++a) chosen.insert(std::stoi(argv[a]));

  qinv::SuiteOptions opts;
  opts.workers = std::max(1u, std::thread::hardware_concurrency());
  qinv::apply_environment(opts);

  int failed = 0;
  for (const Criterion& c : criteria()) {
    if (!chosen.empty() && !chosen.count(c.number)) continue;
    std::size_t total = 0, failures = 0;
    double seconds = 0;
    std::vector<std::string> failing;
    for (const auto& name : c.suites) {
      qinv::SuiteResult r = qinv::run_suite(name, opts);
      total += r.identities.size();
      failures += r.failures();
      seconds += r.seconds;
      for (const auto& id : r.identities)
        if (!id.pass) failing.push_back(id.id);
    }
    bool in_time = seconds < c.seconds;
    bool pass = failures == 0 && in_time && total > 0;
    if (!pass) ++failed;
    std::printf("criterion %d (%s): %s  %zu/%zu identities, %.2fs of %.0fs\n", c.number, c.title.c_str(),
                pass ? "PASS" : "FAIL", total - failures, total, seconds, c.seconds);
    for (const auto& id : failing) std::printf("    failing: %s\n", id.c_str());
    if (!in_time) std::printf("    over the time bound\n");
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
