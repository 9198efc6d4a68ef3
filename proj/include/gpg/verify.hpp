#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpg/report.hpp"

namespace gpg {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int jobs = 0;          // 0: use the available hardware parallelism
  int max_vertices = 0;  // 0: the suite's standard bound
};

struct VerifyResult {
  std::string suite;
  std::vector<Report> reports;    // deterministic order, independent of jobs
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// rook, grid, cylinder, multipartite, wheel, cycle, lex, reductions,
/// tqbf, properties, all.
const std::vector<std::string>& suite_names();

/// Runs one named sweep; throws std::invalid_argument for unknown names.
VerifyResult run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace gpg
