#include <iostream>

#include "CLI11.hpp"
#include "suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int criterion = 0;
  std::uint64_t seed = 42;
  bool timing = false;
  app.add_option("--criterion", criterion, "criterion to run (0 = all)");
  app.add_option("--seed", seed);
  app.add_flag("--timing", timing);
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  int first = criterion == 0 ? 1 : criterion;
  int last = criterion == 0 ? quatinv::selftest::kCriterionCount : criterion;
  try {
    for (int id = first; id <= last; ++id) {
      auto r = quatinv::selftest::run_criterion(id, seed);
      std::cout << quatinv::selftest::format_line(r, timing) << "\n";
      ok = ok && r.pass;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return ok ? 0 : 1;
}
