// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit status is nonzero if any criterion fails.
//
//   acceptance [--verbose] [--workers N] [criterion numbers...]

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "minorkit/suites.hpp"

using namespace minorkit;

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  std::uint64_t seed;
};

constexpr Criterion criteria[] = {
    {1, "bipartite, A-degrees >= 6: K6 minor", "main-theorem", 20261},
    {2, "fig1(3): A-degrees 4, no K5 minor", "fig1", 0},
    {3, "fig1(4) no K5 minor; apex lemma; fig1_apex(4) no K6 minor", "fig1-apex", 20263},
    {4, "4n-9 edges: K6 minor", "mader-density", 20264},
    {5, "apex over planar: 4V-10 edges, min degree 6, no K6 minor", "apex-planar", 0},
    {6, "constructive K_t minor, t <= 4", "small-minor", 20266},
    {7, "K_{3,n-3} no K5, K_{4,n-4} no K6, n <= 12", "complete-bipartite", 0},
    {8, "path game on K6, k <= 4", "game-lemma", 0},
    {9, "K(4,7,4): all 365 partitions feasible", "k474-feasibility", 0},
    {10, "search agrees with brute force", "oracle-equivalence", 20270},
    {11, "6-cluster around a degree-six vertex", "six-cluster", 20271},
    {12, "generator invariants and JSON round trip", "generators", 20272},
};

}  // namespace

int main(int argc, char** argv) {
  bool verbose = false;
  std::size_t workers = 1;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--verbose") {
      verbose = true;
    } else if (arg == "--workers" && i + 1 < argc) {
      workers = static_cast<std::size_t>(std::atoi(argv[++i]));
    } else {
      only.insert(std::atoi(arg.c_str()));
    }
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    SuiteParams p;
    p.seed = c.seed;
    p.workers = workers;
    SuiteReport rep;
    try {
      rep = run_suite(c.suite, p);
    } catch (const std::exception& e) {
      rep.name = c.suite;
      rep.fail(std::string("exception: ") + e.what());
    }
    const char* tag = !rep.passed ? "FAIL" : rep.assisted ? "PASS (assisted)" : "PASS";
    std::cout << tag << "  [" << c.id << "] " << c.title << "  (" << rep.summary << ")" << std::endl;
    for (const auto& line : rep.log)
      if (verbose || line.rfind("FAIL", 0) == 0) std::cout << "      " << line << "\n";
    if (!rep.passed) ++failed;
  }
  std::cout << (failed ? "FAILED: " : "all criteria passed") << (failed ? std::to_string(failed) + " criteria" : "")
            << std::endl;
  return failed ? 1 : 0;
}
