#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "graphentropy/diffusion.hpp"
#include "graphentropy/entropy.hpp"
#include "graphentropy/graph.hpp"
#include "graphentropy/spectral.hpp"

namespace graphentropy::cli {

/// Parsed `--graph` value.
///
///   complete:N | path:N | star:LEAVES | circulant:N:s1,s2,... |
///   er:N:P | ws:N:K:P | file:PATH | counterexample:N
struct GraphSpec {
  enum class Family { Complete, Path, Star, Circulant, ErdosRenyi, WattsStrogatz, File, Counterexample };

  Family family = Family::Complete;
  std::size_t n = 0;
  std::size_t k = 0;
  double p = 0.0;
  std::vector<std::size_t> steps;
  std::string path;
  std::string text;

  bool stochastic() const noexcept { return family == Family::ErdosRenyi || family == Family::WattsStrogatz; }

  /// Builds the graph; `seed` is used by stochastic families only.
  Graph build(RngSeed seed = {}) const;
};

GraphSpec parse_graph_spec(const std::string& text);

/// `heat` or `rw`.
LaplacianKind parse_dynamic(const std::string& text);

/// `uniform`, `delta:<i>` or `file:<path>` (whitespace-separated weights).
struct InitSpec {
  InitialCondition::Kind kind = InitialCondition::Kind::Uniform;
  Node node = 0;
  std::string path;

  Distribution build(std::size_t n) const;
  InitialCondition descriptor() const { return {kind, node}; }
};

InitSpec parse_init(const std::string& text);

/// `tmin:tmax:points[:log|lin]`; any of the first three may be left empty
/// to take the default.
struct GridSpec {
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::size_t points = 60;
  bool logarithmic = true;

  /// Fills unset fields: t_min = 1e-3, t_max = `default_t_max`.
  TimeGrid build(double default_t_max) const;
};

GridSpec parse_grid(const std::string& text);

/// 50 / (smallest positive eigenvalue) for heat, scaled by the maximum
/// degree for random walks; 1e3 when nothing is computable.
double default_t_max(const Graph& g, LaplacianKind dynamic);

}  // namespace graphentropy::cli
