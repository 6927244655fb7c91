// Acceptance driver: one line per criterion. Exits 0 when the set of failing criteria equals
// the set given with --known-failure (empty by default), 1 otherwise.

#include "dml/shell/audit.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <set>

int main(int argc, char** argv) {
  CLI::App app("dml acceptance criteria");
  std::uint64_t seed = dml::kDefaultSeed;
  std::vector<int> known;
  bool verbose = false;
  app.add_option("--seed", seed, "Seed for the randomized property checks");
  app.add_option("--known-failure", known, "Criterion expected to fail (repeatable)")->allow_extra_args(false);
  app.add_flag("-v,--verbose", verbose, "Print the full report of every criterion");
  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  std::set<int> failing;
  for (const auto& c : dml::run_acceptance(seed)) {
    const bool ok = c.passed();
    if (!ok) failing.insert(c.number);
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " (" << c.title << ")\n";
    if (verbose) {
      std::cout << c.report.to_text();
    } else if (!ok) {
      for (const auto& f : c.report.findings())
        if (dml::is_failure(f.verdict))
          std::cout << "    " << f.section << ": " << f.label << " computed " << f.computed
                    << (f.claimed.empty() ? "" : ", claimed " + f.claimed) << "  " << dml::to_string(f.verdict)
                    << "\n";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed: " << secs << " s\n";

  const std::set<int> expected(known.begin(), known.end());
  if (failing == expected) {
    if (!expected.empty()) std::cout << "failures match the documented known failures\n";
    return 0;
  }
  std::cout << "failing criteria differ from the documented set\n";
  return 1;
}
