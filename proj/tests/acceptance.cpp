// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <iostream>

#include "braidq/acceptance.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= braidq::kCriteria; ++id) {
    auto r = braidq::run_criterion(id);
    std::cout << braidq::format(r) << std::endl;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (braidq::kCriteria - failed) << "/" << braidq::kCriteria << " criteria pass\n";
  return failed ? 1 : 0;
}
