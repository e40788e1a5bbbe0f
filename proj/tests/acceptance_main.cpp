#include <cstdlib>
#include <iostream>
#include <string>

#include "cuspcount/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string suite = argc > 1 ? argv[1] : "all";
  bool ok = true;
  for (int id : cuspcount::criteria_for_suite(suite)) {
    const auto r = cuspcount::run_criterion(id);
    std::cout << cuspcount::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
