#include <cstdlib>
#include <iostream>

#include "hilbloc/acceptance.hpp"

int main(int argc, char** argv) {
  hilbloc::AcceptanceOptions opts;
  if (const char* w = std::getenv("HILBLOC_WORKERS")) opts.workers = std::max(1, std::atoi(w));
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) ids.emplace_back(argv[i]);
  if (ids.empty()) ids = hilbloc::acceptance_ids();
  int failed = 0;
  for (const auto& id : ids) {
    auto r = hilbloc::run_criterion(id, opts);
    std::cout << hilbloc::format_result(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
