// Acceptance runner: one line per criterion, nonzero exit on any failure.
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <thread>

#include "woq/accept.hpp"

int main(int argc, char** argv) {
  const std::string suite = argc > 1 ? argv[1] : "all";
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 4;
  if (const char* env = std::getenv("WOQ_THREADS")) threads = std::atoi(env);
  const uint64_t seed = 5489;

  const auto results = woq::run_acceptance(suite, threads, seed);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] "
              << r.name << "  (" << std::fixed << std::setprecision(1) << r.seconds
              << "s)";
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << std::endl;
  return all ? 0 : 1;
}
