#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphentropy/cli/graph_spec.hpp"
#include "graphentropy/entropy.hpp"

namespace graphentropy::cli {

enum class Command { Curve, Compare, Ensemble, Meanfield, Audit };

const char* to_string(Command c) noexcept;

struct ExperimentConfig {
  Command command = Command::Curve;
  std::vector<std::string> graphs;
  LaplacianKind dynamic = LaplacianKind::Combinatorial;
  InitSpec initial;
  GridSpec grid;
  std::size_t samples = 10;
  RngSeed seed{1};
  std::string out_csv;
  std::string out_svg;
  std::string out_meta;

  /// Throws Error(Config) on t_min >= t_max, points < 2 or samples < 1.
  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitInvariant = 4;

// --- curve -----------------------------------------------------------------

EntropyCurve run_curve(const ExperimentConfig& cfg);

// --- compare ---------------------------------------------------------------

struct CompareResult {
  std::vector<double> times;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> columns;
};

/// One column per graph plus K_n and P_n references. All graphs must share n.
CompareResult run_compare(const ExperimentConfig& cfg);

// --- ensemble --------------------------------------------------------------

struct EnsembleSummary {
  std::string label;
  std::vector<double> times;
  std::vector<double> mean;
  std::vector<double> stddev;
  std::vector<std::vector<double>> samples;
  std::vector<std::uint64_t> seeds;
  /// Samples with more than one component; their curves approach
  /// the per-component limit stored in `limits`.
  std::vector<std::size_t> disconnected;
  std::vector<double> limits;
  /// Draws discarded because they contained an isolated node.
  std::size_t redraws = 0;
};

struct EnsembleResult {
  std::vector<double> times;
  std::vector<EnsembleSummary> summaries;
};

/// Stochastic specs are sampled `samples` times with seeds derived from
/// the master seed; deterministic specs contribute one curve (std = 0).
EnsembleResult run_ensemble(const ExperimentConfig& cfg);

// --- meanfield -------------------------------------------------------------

struct MeanfieldSeries {
  std::string label;
  std::size_t n = 0;
  double p = 0.0;
  EnsembleSummary empirical;
  std::vector<double> meanfield;
  /// meanfield - empirical mean.
  std::vector<double> gap;
  double max_abs_gap = 0.0;
};

struct MeanfieldResult {
  std::vector<double> times;
  std::vector<MeanfieldSeries> series;
};

/// ER specs only.
MeanfieldResult run_meanfield(const ExperimentConfig& cfg);

// --- audit -----------------------------------------------------------------

struct AuditCheck {
  std::string name;
  bool passed = false;
  /// Worst observed value of the checked quantity (slack or error).
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct AuditResult {
  std::string graph;
  std::vector<AuditCheck> checks;
  std::vector<std::pair<std::string, double>> info;

  bool all_passed() const;
};

AuditResult run_audit(const ExperimentConfig& cfg);

/// Runs the configured command, writes outputs and returns the exit code.
/// Diagnostics go to `err`, summaries to `out`.
int execute(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace graphentropy::cli
