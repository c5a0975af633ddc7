#include "criteria.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  bool ok = true;
  for (const auto& r : foldcob::acceptance::run_all()) {
    std::cout << foldcob::acceptance::format(r, verbose) << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
