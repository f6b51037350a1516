#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tscx/analysis.hpp"
#include "tscx/report.hpp"
#include "tscx/series.hpp"

namespace tscx {

enum class Experiment { table1, table2, table3_logistic, santafe, arma_table4, arma_table5 };

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view name);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Reproduction {
  Experiment experiment = Experiment::table2;
  ExperimentReport report;  // extra columns: expected, status, note
  std::vector<Check> checks;
  bool skipped = false;
  std::string skip_reason;

  bool all_passed() const;
};

// The clean logistic series of the published recipe (x0 = 0.3, 5000 points
// counting x0, last 1000 kept).
Series reference_logistic(double r);

// Looks for the Santa Fe set A laser series under data_dir.
std::optional<std::filesystem::path> find_santafe_file(const std::filesystem::path& data_dir);

/// Regenerates one published table.
///
/// Deterministic cells (clean logistic series, a supplied Santa Fe file) are
/// compared with the reference values at fixed tolerances; stochastic cells
/// are means over config.replications seeded replicates (seed derived from
/// config.seed) and are checked against bands or orderings. Cell status is
/// "pass"/"fail" for compared cells and "info" otherwise. santafe reports
/// skipped when no data file is found.
///
/// The published tables were computed with a short final block averaged into
/// the coarse-grained series, so every experiment uses Remainder::average
/// whatever config.remainder says.
Reproduction reproduce(Experiment experiment, const AnalysisConfig& config,
                       const std::optional<std::filesystem::path>& data_dir = std::nullopt);

}  // namespace tscx
