#include <iostream>

#include "criteria.hpp"

int main() {
  bool ok = true;
  chd::acceptance::run_all([&](const chd::acceptance::CriterionResult& r) {
    std::cout << chd::acceptance::format(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}
