#pragma once

#include "dml/degen/graph.hpp"
#include "dml/shell/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dml {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// One acceptance criterion with the findings that decide it.
struct CriterionResult {
  int number = 0;
  std::string title;
  Report report{""};
  bool passed() const { return report.passed(); }
};

struct GraphAnalysis {
  DegenerationGraph graph;
  Report report{""};
};

/// Nodes D7_01..D7_14 and C7 with every recorded 7-dimensional witness.
GraphAnalysis seven_dim_graph();

/// Nodes D8_01..D8_36 and C8: lifted 7-dimensional witnesses, the printed 8-dimensional
/// basis, the recorded isomorphism, and imported (unwitnessed) claims for nodes that only
/// the reference classification reaches.
GraphAnalysis eight_dim_graph();

CriterionResult criterion_identities();
CriterionResult criterion_cohomology();
CriterionResult criterion_extensions();
CriterionResult criterion_witnesses();
CriterionResult criterion_der_screen();
CriterionResult criterion_rigid_sources();
CriterionResult criterion_properties(std::uint64_t seed = kDefaultSeed);

/// Checks of the printed orbit reductions that no criterion depends on.
Report reduction_recipes();

std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// Everything above in one report.
Report verify_all(std::uint64_t seed = kDefaultSeed);

}  // namespace dml
