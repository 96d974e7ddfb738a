#include <iostream>

#include "spechtsym/acceptance.hpp"

int main() {
  namespace acc = spechtsym::acceptance;
  const auto results = acc::run(acc::criteria(), acc::thread_budget());
  int failed = 0;
  for (const auto& r : results) {
    std::cout << acc::format_line(r) << "\n";
    failed += !r.pass;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
