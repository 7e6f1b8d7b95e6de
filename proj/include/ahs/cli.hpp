#pragma once

#include "ahs/report.hpp"
#include "ahs/root_system.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ahs {

inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> checks{"structure", "lemma1", "lemma2", "theorem", "jets"};
  return checks;
}

/// Fault injection for the exit-code contract: shifts c_{ij}^k by delta.
struct Corruption {
  int i = 0, j = 0, k = 0;
  std::int64_t delta = 1;
};

/// Expands "all", removes duplicates into canonical order, checks every
/// field. Throws InvalidConfig / InvalidRank.
void normalize(RunConfig& cfg);

/// Nodes selected by "all", "<k>" or "<N>dim". Throws InvalidNode or
/// NoOneGrading.
std::vector<int> resolve_nodes(const RootSystem& rs, const std::string& spec);

/// dim g_-1 for the grading by `node`, from the root system alone.
int g_minus_dim(const RootSystem& rs, int node);

/// Catalog rows; `series`/`rank` filter it. Throws on an invalid filter.
Report cmd_list(const std::optional<std::string>& series = std::nullopt,
                const std::optional<int>& rank = std::nullopt);

/// Runs the requested checks. `progress` receives slow-target progress lines.
/// Throws Error for invalid configurations.
Report cmd_verify(RunConfig cfg, std::ostream* progress = nullptr,
                  const std::optional<Corruption>& corruption = std::nullopt);

/// Full command line. Exit code 0 = all certificates passed, 1 = some
/// certificate failed, 2 = usage or internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ahs
