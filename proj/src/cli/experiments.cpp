#include "graphentropy/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "graphentropy/cli/output.hpp"
#include "graphentropy/closed_forms.hpp"
#include "graphentropy/error.hpp"

namespace graphentropy::cli {

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::Curve: return "curve";
    case Command::Compare: return "compare";
    case Command::Ensemble: return "ensemble";
    case Command::Meanfield: return "meanfield";
    case Command::Audit: return "audit";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (graphs.empty()) throw Error(ErrorCode::Config, "at least one --graph is required");
  if (grid.t_min && grid.t_max && !(*grid.t_min < *grid.t_max)) throw Error(ErrorCode::Config, "grid needs t_min < t_max");
  if (grid.points < 2) throw Error(ErrorCode::Config, "grid needs at least 2 points");
  if (samples < 1) throw Error(ErrorCode::Config, "samples must be >= 1");
}

namespace {

/// A graph ready for curve evaluation. Structured families take their exact
/// route for heat diffusion; everything else goes through a dense kernel.
struct Prepared {
  Graph graph;
  const GraphSpec* spec = nullptr;
  LaplacianKind dynamic = LaplacianKind::Combinatorial;
  std::unique_ptr<HeatKernel> kernel;
  double t_max = 1e3;

  bool closed_form_complete() const { return spec && spec->family == GraphSpec::Family::Complete && graph.size() >= 2; }
  bool closed_form_circulant() const {
    return spec && spec->family == GraphSpec::Family::Circulant && dynamic == LaplacianKind::Combinatorial;
  }
};

double slowest_rate(const Eigen::VectorXd& ascending) {
  for (Eigen::Index i = 0; i < ascending.size(); ++i)
    if (ascending(i) > 1e-10) return ascending(i);
  return 0.0;
}

Prepared prepare(Graph g, const GraphSpec* spec, LaplacianKind dynamic) {
  Prepared prep{std::move(g), spec, dynamic, nullptr, 1e3};
  require_dense_diffusion_ready(prep.graph);
  const std::size_t n = prep.graph.size();
  if (prep.closed_form_complete()) {
    prep.t_max = 50.0 / static_cast<double>(n);
    if (dynamic == LaplacianKind::RandomWalk) prep.t_max *= static_cast<double>(n - 1);
    return prep;
  }
  if (prep.closed_form_circulant()) {
    const double rate = slowest_rate(spectrum_circulant(n, StepSet(spec->steps, n)).sorted);
    if (rate > 0.0) prep.t_max = 50.0 / rate;
    return prep;
  }
  SpectralDecomposition dec = spec && spec->family == GraphSpec::Family::Path ? spectrum_path(n) : heat_spectrum(prep.graph);
  const double rate = slowest_rate(dec.eigenvalues);
  if (rate > 0.0) {
    prep.t_max = 50.0 / rate;
    if (dynamic == LaplacianKind::RandomWalk) {
      const auto d = prep.graph.degrees();
      prep.t_max *= static_cast<double>(*std::max_element(d.begin(), d.end()));
    }
  }
  prep.kernel = std::make_unique<HeatKernel>(dynamic == LaplacianKind::Combinatorial
                                                 ? HeatKernel::from_spectrum(std::move(dec))
                                                 : HeatKernel::random_walk(prep.graph));
  return prep;
}

std::vector<double> evaluate(const Prepared& prep, const Distribution& p0, const TimeGrid& grid) {
  std::vector<double> values;
  values.reserve(grid.size());
  const std::size_t n = prep.graph.size();
  if (prep.closed_form_complete()) {
    for (const double t : grid.times()) {
      values.push_back(prep.dynamic == LaplacianKind::Combinatorial ? complete_heat_entropy(n, t)
                                                                     : complete_rw_entropy(n, t));
    }
    return values;
  }
  if (prep.closed_form_circulant()) {
    const StepSet steps(prep.spec->steps, n);
    for (const double t : grid.times()) values.push_back(circulant_entropy(n, steps, t));
    return values;
  }
  return entropy_curve(*prep.kernel, p0, grid).values;
}

Distribution initial_for(const ExperimentConfig& cfg, std::size_t n) { return cfg.initial.build(n); }

/// Welford accumulation: identical inputs give exactly zero deviation.
void summarize(EnsembleSummary& s) {
  const std::size_t points = s.times.size();
  s.mean.assign(points, 0.0);
  s.stddev.assign(points, 0.0);
  for (std::size_t i = 0; i < points; ++i) {
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t count = 0;
    for (const auto& curve : s.samples) {
      ++count;
      const double delta = curve[i] - mean;
      mean += delta / static_cast<double>(count);
      m2 += delta * (curve[i] - mean);
    }
    s.mean[i] = mean;
    s.stddev[i] = count > 1 ? std::sqrt(std::max(0.0, m2 / static_cast<double>(count - 1))) : 0.0;
  }
}

struct SampledSpec {
  GraphSpec spec;
  std::vector<Prepared> members;
  std::vector<std::uint64_t> seeds;
  std::size_t redraws = 0;
};

SampledSpec sample_spec(const GraphSpec& spec, std::size_t spec_index, const ExperimentConfig& cfg) {
  SampledSpec out{spec, {}, {}, 0};
  if (!spec.stochastic()) {
    out.members.push_back(prepare(spec.build(), nullptr, cfg.dynamic));
    return out;
  }
  const RngSeed spec_seed = derive_seed(cfg.seed, spec_index);
  const std::size_t max_attempts = 100 * cfg.samples;
  for (std::size_t attempt = 0; out.members.size() < cfg.samples; ++attempt) {
    if (attempt >= max_attempts) {
      throw Error(ErrorCode::Config, spec.text + ": too many draws with isolated nodes");
    }
    const RngSeed seed = derive_seed(spec_seed, attempt);
    Graph g = spec.build(seed);
    if (g.has_isolated_node()) {
      ++out.redraws;
      continue;
    }
    out.members.push_back(prepare(std::move(g), nullptr, cfg.dynamic));
    out.seeds.push_back(seed.value);
  }
  return out;
}

void require_same_size(const std::vector<std::size_t>& sizes) {
  if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end()) {
    throw Error(ErrorCode::Config, "all graphs in one run must have the same number of nodes");
  }
}

}  // namespace

EntropyCurve run_curve(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.graphs.size() != 1) throw Error(ErrorCode::Config, "curve takes exactly one --graph");
  const GraphSpec spec = parse_graph_spec(cfg.graphs.front());
  const Prepared prep = prepare(spec.build(cfg.seed), &spec, cfg.dynamic);
  const Distribution p0 = initial_for(cfg, prep.graph.size());
  const TimeGrid grid = cfg.grid.build(prep.t_max);
  EntropyCurve curve;
  curve.times = grid.times();
  curve.values = evaluate(prep, p0, grid);
  curve.dynamic = cfg.dynamic;
  curve.initial = cfg.initial.descriptor();
  curve.graph = GraphMeta::of(prep.graph);
  return curve;
}

CompareResult run_compare(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<GraphSpec> specs;
  for (const auto& text : cfg.graphs) specs.push_back(parse_graph_spec(text));
  std::vector<Prepared> prepared;
  std::vector<std::size_t> sizes;
  for (const auto& spec : specs) {
    prepared.push_back(prepare(spec.build(cfg.seed), &spec, cfg.dynamic));
    sizes.push_back(prepared.back().graph.size());
  }
  require_same_size(sizes);
  const std::size_t n = sizes.front();
  GraphSpec complete_ref;
  complete_ref.family = GraphSpec::Family::Complete;
  complete_ref.n = n;
  GraphSpec path_ref;
  path_ref.family = GraphSpec::Family::Path;
  path_ref.n = n;
  prepared.push_back(prepare(make_complete(n), &complete_ref, cfg.dynamic));
  prepared.push_back(prepare(make_path(n), &path_ref, cfg.dynamic));

  double t_max = 0.0;
  for (const auto& p : prepared) t_max = std::max(t_max, p.t_max);
  const TimeGrid grid = cfg.grid.build(t_max);
  const Distribution p0 = initial_for(cfg, n);

  CompareResult result;
  result.times = grid.times();
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    const bool reference = i >= specs.size();
    result.labels.push_back(reference ? "ref_" + prepared[i].graph.label() : prepared[i].graph.label());
    result.columns.push_back(evaluate(prepared[i], p0, grid));
  }
  return result;
}

namespace {

EnsembleSummary summarize_sampled(SampledSpec& sampled, const TimeGrid& grid, const ExperimentConfig& cfg) {
  EnsembleSummary s;
  s.label = sampled.members.front().graph.label();
  s.times = grid.times();
  s.seeds = sampled.seeds;
  s.redraws = sampled.redraws;
  for (std::size_t i = 0; i < sampled.members.size(); ++i) {
    const Prepared& member = sampled.members[i];
    const Distribution p0 = initial_for(cfg, member.graph.size());
    s.samples.push_back(evaluate(member, p0, grid));
    if (!is_connected(member.graph)) {
      s.disconnected.push_back(i);
      s.limits.push_back(cfg.dynamic == LaplacianKind::Combinatorial ? asymptotic_value_heat(member.graph, p0)
                                                                      : std::numeric_limits<double>::quiet_NaN());
    }
  }
  summarize(s);
  return s;
}

}  // namespace

EnsembleResult run_ensemble(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<SampledSpec> sampled;
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < cfg.graphs.size(); ++i) {
    const GraphSpec spec = parse_graph_spec(cfg.graphs[i]);
    sampled.push_back(sample_spec(spec, i, cfg));
    sizes.push_back(sampled.back().members.front().graph.size());
  }
  require_same_size(sizes);
  double t_max = 0.0;
  for (const auto& s : sampled)
    for (const auto& m : s.members) t_max = std::max(t_max, m.t_max);
  const TimeGrid grid = cfg.grid.build(t_max);

  EnsembleResult result;
  result.times = grid.times();
  for (auto& s : sampled) result.summaries.push_back(summarize_sampled(s, grid, cfg));
  return result;
}

MeanfieldResult run_meanfield(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.dynamic != LaplacianKind::Combinatorial) throw Error(ErrorCode::Config, "meanfield is defined for heat diffusion");
  std::vector<SampledSpec> sampled;
  for (std::size_t i = 0; i < cfg.graphs.size(); ++i) {
    const GraphSpec spec = parse_graph_spec(cfg.graphs[i]);
    if (spec.family != GraphSpec::Family::ErdosRenyi) throw Error(ErrorCode::Config, "meanfield takes er:N:P graphs only");
    (void)MeanFieldER(spec.n, spec.p);
    sampled.push_back(sample_spec(spec, i, cfg));
  }
  double t_max = 0.0;
  for (const auto& s : sampled)
    for (const auto& m : s.members) t_max = std::max(t_max, m.t_max);
  const TimeGrid grid = cfg.grid.build(t_max);

  MeanfieldResult result;
  result.times = grid.times();
  for (auto& s : sampled) {
    MeanfieldSeries series;
    series.n = s.spec.n;
    series.p = s.spec.p;
    series.empirical = summarize_sampled(s, grid, cfg);
    series.label = series.empirical.label;
    const MeanFieldER mf(series.n, series.p);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double value = mf.entropy(grid.times()[i]);
      series.meanfield.push_back(value);
      series.gap.push_back(value - series.empirical.mean[i]);
      series.max_abs_gap = std::max(series.max_abs_gap, std::abs(series.gap.back()));
    }
    result.series.push_back(std::move(series));
  }
  return result;
}

bool AuditResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

namespace {

AuditCheck at_least(std::string name, double worst, double floor, std::string detail = {}) {
  return {std::move(name), worst >= floor, worst, floor, std::move(detail)};
}

AuditCheck at_most(std::string name, double worst, double ceiling, std::string detail = {}) {
  return {std::move(name), worst <= ceiling, worst, ceiling, std::move(detail)};
}

Distribution random_distribution(CounterRng& rng, std::size_t n) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(n));
  // Exponential weights give a uniform draw from the simplex.
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = -std::log1p(-rng.uniform01());
  return Distribution::from_weights(w);
}

AuditResult audit_counterexample(std::size_t n) {
  AuditResult result;
  result.graph = "counterexample chain, n=" + std::to_string(n);
  const TimeGrid grid = TimeGrid::logarithmic(1e-3, 50.0, 60);
  double agreement = 0.0;
  double expm_error = 0.0;
  double row_sum_error = 0.0;
  std::vector<double> values;
  const Eigen::MatrixXd Q = counterexample_generator(n);
  for (const double t : grid.times()) {
    const double closed = counterexample_entropy(t, n);
    agreement = std::max(agreement, std::abs(closed - counterexample_entropy_from_matrix(t, n)));
    const Eigen::MatrixXd T = counterexample_transition(n, t);
    expm_error = std::max(expm_error, (expm_oracle(t * Q) - T).cwiseAbs().maxCoeff());
    row_sum_error = std::max(row_sum_error, (T.rowwise().sum().array() - 1.0).abs().maxCoeff());
    values.push_back(closed);
  }
  double largest_drop = 0.0;
  double running_max = -std::numeric_limits<double>::infinity();
  for (const double v : values) {
    running_max = std::max(running_max, v);
    largest_drop = std::max(largest_drop, running_max - v);
  }
  result.checks.push_back(at_most("closed_form_vs_matrix", agreement, 1e-10));
  result.checks.push_back(at_most("matrix_vs_expm_generator", expm_error, 1e-10));
  result.checks.push_back(at_most("row_stochasticity", row_sum_error, 1e-10));
  result.checks.push_back(at_least("expected_monotonicity_violation", largest_drop, 1e-6,
                                   "entropy must decrease somewhere for this non-heat chain"));
  return result;
}

}  // namespace

AuditResult run_audit(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.graphs.size() != 1) throw Error(ErrorCode::Config, "audit takes exactly one --graph");
  const GraphSpec spec = parse_graph_spec(cfg.graphs.front());
  if (spec.family == GraphSpec::Family::Counterexample) return audit_counterexample(spec.n);

  const Graph g = spec.build(cfg.seed);
  require_dense_diffusion_ready(g);
  const std::size_t n = g.size();
  const bool heat = cfg.dynamic == LaplacianKind::Combinatorial;
  const HeatKernel kernel = heat ? HeatKernel::heat(g) : HeatKernel::random_walk(g);
  const double t_max = cfg.grid.t_max.value_or(default_t_max(g, cfg.dynamic));
  const TimeGrid grid = cfg.grid.build(t_max);

  AuditResult result;
  result.graph = g.label();
  CounterRng rng(cfg.seed);
  std::vector<Distribution> inits{Distribution::uniform(n), Distribution::delta(n, 0), random_distribution(rng, n)};

  std::vector<Eigen::MatrixXd> kernels;
  for (const double t : grid.times()) kernels.push_back(kernel_at(kernel, t));

  double conservation = 0.0;
  double row_sums = 0.0;
  double min_entry = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kernels.size(); ++i) {
    const auto& T = kernels[i];
    row_sums = std::max(row_sums, (T.rowwise().sum().array() - 1.0).abs().maxCoeff());
    min_entry = std::min(min_entry, T.minCoeff());
    for (const auto& p0 : inits) {
      const Eigen::VectorXd pt = T.transpose() * p0.probs();
      conservation = std::max(conservation, std::abs(pt.sum() - 1.0));
    }
  }
  result.checks.push_back(at_most("conservation", conservation, 1e-12));
  result.checks.push_back(at_most("row_stochasticity", row_sums, 1e-10));
  result.checks.push_back(at_least("non_negative_entries", min_entry, 0.0));

  std::vector<Eigen::VectorXd> rows;
  for (const auto& T : kernels) rows.push_back(row_entropies(T));
  double upper = -std::numeric_limits<double>::infinity();
  for (const auto& h : rows) upper = std::max(upper, h.maxCoeff() - std::log(static_cast<double>(n)));
  result.checks.push_back(at_most("bounded_by_log_n", upper, 1e-9));

  if (heat) {
    double worst_curve = std::numeric_limits<double>::infinity();
    for (const auto& p0 : inits) {
      for (std::size_t i = 1; i < rows.size(); ++i) {
        worst_curve = std::min(worst_curve, p0.probs().dot(rows[i]) - p0.probs().dot(rows[i - 1]));
      }
    }
    double worst_row = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < rows.size(); ++i) worst_row = std::min(worst_row, (rows[i] - rows[i - 1]).minCoeff());
    result.checks.push_back(at_least("second_law_curve", worst_curve, -1e-9));
    result.checks.push_back(at_least("second_law_rows", worst_row, -1e-9));

    double kl_identity = 0.0;
    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n));
    for (std::size_t k = 0; k < kernels.size(); ++k) {
      for (Eigen::Index i = 0; i < kernels[k].rows(); ++i) {
        const double via_kl = std::log(static_cast<double>(n)) - kl_divergence(kernels[k].row(i).transpose(), uniform);
        kl_identity = std::max(kl_identity, std::abs(via_kl - rows[k](i)));
      }
    }
    result.checks.push_back(at_most("entropy_kl_identity", kl_identity, 1e-10));

    double pinsker = std::numeric_limits<double>::infinity();
    for (const double t : grid.times())
      for (const auto& p0 : inits) pinsker = std::min(pinsker, pinsker_report(kernel, p0, t).slack);
    result.checks.push_back(at_least("pinsker_slack", pinsker, -1e-10));

    double symmetry = 0.0;
    for (const auto& T : kernels) symmetry = std::max(symmetry, (T - T.transpose()).cwiseAbs().maxCoeff());
    result.checks.push_back(at_most("kernel_symmetry", symmetry, 1e-10));

    double semigroup = 0.0;
    for (std::size_t i = 0; i + 1 < kernels.size(); i += 7) {
      const double t1 = grid.times()[i];
      const double t2 = grid.times()[i + 1];
      semigroup = std::max(semigroup, (kernels[i] * kernels[i + 1] - kernel_at(kernel, t1 + t2)).cwiseAbs().maxCoeff());
    }
    result.checks.push_back(at_most("semigroup", semigroup, 1e-9));

    if (n <= 300) {
      const Eigen::MatrixXd L = laplacian(g, LaplacianKind::Combinatorial);
      double oracle = 0.0;
      for (std::size_t i = 0; i < kernels.size(); i += 6) {
        oracle = std::max(oracle, (expm_oracle(-grid.times()[i] * L) - kernels[i]).cwiseAbs().maxCoeff());
      }
      result.checks.push_back(at_most("expm_oracle_agreement", oracle, 1e-9));
    }

    const auto dec = kernel.spectrum();
    const double gap = spectral_gap(*dec);
    result.info.emplace_back("lambda_2", gap);
    const bool connected = is_connected(g);
    if (connected && n > 1) {
      const auto est = mixing_estimate(kernel, Distribution::delta(n, 0), 1e-6);
      result.info.emplace_back("t_eps(delta_0, 1e-6)", est.t_eps);
    }
    if (n > 1) {
      // Limit check at 50 / (slowest positive rate).
      const double t_far = default_t_max(g, LaplacianKind::Combinatorial);
      double limit_error = 0.0;
      const Eigen::MatrixXd T = kernel_at(kernel, t_far);
      for (const auto& p0 : inits) {
        limit_error = std::max(limit_error, std::abs(conditional_entropy(T, p0) - asymptotic_value_heat(g, p0)));
      }
      result.checks.push_back(at_most("asymptotic_value", limit_error, 1e-6));
    }

    if (g.edge_count() < n * (n - 1) / 2) {
      std::vector<Edge> missing;
      for (Node u = 0; u < n; ++u)
        for (Node v = u + 1; v < n; ++v)
          if (!g.has_edge(u, v)) missing.emplace_back(u, v);
      const Edge extra = missing[rng.uniform_below(missing.size())];
      const WeylReport weyl = check_weyl_monotonicity(g, extra);
      std::ostringstream detail;
      detail << "added edge (" << extra.first << "," << extra.second << ")";
      result.checks.push_back(at_least("weyl_monotonicity", weyl.worst_increment, -1e-9, detail.str()));
      const double top = weyl.after.maxCoeff() - static_cast<double>(n);
      result.checks.push_back(at_most("spectrum_bounded_by_n", top, 1e-9));
    }
  } else if (is_connected(g) && n > 1) {
    const Eigen::MatrixXd T = kernel_at(kernel, t_max);
    double limit_error = 0.0;
    for (const auto& p0 : inits) limit_error = std::max(limit_error, std::abs(conditional_entropy(T, p0) - asymptotic_value_rw(g)));
    result.checks.push_back(at_most("rw_asymptotic_value", limit_error, 1e-6));
    result.info.emplace_back("rw_limit", asymptotic_value_rw(g));
  }
  return result;
}

namespace {

void emit_curve_outputs(const ExperimentConfig& cfg, const std::vector<double>& times,
                        const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns,
                        const std::vector<Series>& plotted, const std::string& title, const nlohmann::json& meta) {
  if (!cfg.out_csv.empty()) {
    std::ostringstream os;
    write_csv(os, header, times, columns);
    write_file(cfg.out_csv, os.str());
  }
  if (!cfg.out_svg.empty()) {
    std::ostringstream os;
    write_svg(os, title, times, plotted, cfg.grid.logarithmic);
    write_file(cfg.out_svg, os.str());
  }
  if (!cfg.out_meta.empty()) write_file(cfg.out_meta, meta.dump(2) + "\n");
}

nlohmann::json base_meta(const ExperimentConfig& cfg) {
  nlohmann::json meta;
  meta["command"] = to_string(cfg.command);
  meta["graphs"] = cfg.graphs;
  meta["dynamic"] = to_string(cfg.dynamic);
  meta["initial"] = cfg.initial.kind == InitialCondition::Kind::Custom ? "file:" + cfg.initial.path
                                                                      : cfg.initial.descriptor().to_string();
  meta["seed"] = cfg.seed.value;
  meta["samples"] = cfg.samples;
  return meta;
}

nlohmann::json summary_meta(const EnsembleSummary& s) {
  nlohmann::json j;
  j["label"] = s.label;
  j["samples"] = s.samples.size();
  j["seeds"] = s.seeds;
  j["redraws_isolated_node"] = s.redraws;
  j["disconnected_samples"] = s.disconnected;
  j["disconnected_limits"] = s.limits;
  return j;
}

int run_command(const ExperimentConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::Curve: {
      const EntropyCurve curve = run_curve(cfg);
      auto meta = base_meta(cfg);
      meta["graph"] = {{"n", curve.graph.n}, {"edges", curve.graph.edges}, {"family", curve.graph.family}};
      emit_curve_outputs(cfg, curve.times, {"entropy"}, {curve.values}, {{curve.graph.family, curve.values}},
                         curve.graph.family, meta);
      out << curve.graph.family << ": " << curve.times.size() << " points, H(t_max) = " << format_double(curve.values.back())
          << ", ln n = " << format_double(std::log(static_cast<double>(curve.graph.n))) << '\n';
      return kExitOk;
    }
    case Command::Compare: {
      const CompareResult r = run_compare(cfg);
      std::vector<Series> plotted;
      for (std::size_t i = 0; i < r.labels.size(); ++i) plotted.push_back({r.labels[i], r.columns[i]});
      emit_curve_outputs(cfg, r.times, r.labels, r.columns, plotted, "conditional entropy", base_meta(cfg));
      for (std::size_t i = 0; i < r.labels.size(); ++i) {
        out << r.labels[i] << ": H(t_max) = " << format_double(r.columns[i].back()) << '\n';
      }
      return kExitOk;
    }
    case Command::Ensemble: {
      const EnsembleResult r = run_ensemble(cfg);
      std::vector<std::string> header;
      std::vector<std::vector<double>> columns;
      std::vector<Series> plotted;
      auto meta = base_meta(cfg);
      for (const auto& s : r.summaries) {
        header.push_back(s.label + "_mean");
        header.push_back(s.label + "_std");
        columns.push_back(s.mean);
        columns.push_back(s.stddev);
        plotted.push_back({s.label, s.mean});
        meta["ensembles"].push_back(summary_meta(s));
        out << s.label << ": " << s.samples.size() << " samples, " << s.disconnected.size() << " disconnected, "
            << s.redraws << " redraws\n";
      }
      emit_curve_outputs(cfg, r.times, header, columns, plotted, "ensemble mean", meta);
      return kExitOk;
    }
    case Command::Meanfield: {
      const MeanfieldResult r = run_meanfield(cfg);
      std::vector<std::string> header;
      std::vector<std::vector<double>> columns;
      std::vector<Series> plotted;
      auto meta = base_meta(cfg);
      for (const auto& s : r.series) {
        header.push_back(s.label + "_empirical");
        header.push_back(s.label + "_meanfield");
        header.push_back(s.label + "_gap");
        columns.push_back(s.empirical.mean);
        columns.push_back(s.meanfield);
        columns.push_back(s.gap);
        plotted.push_back({s.label + " empirical", s.empirical.mean});
        plotted.push_back({s.label + " mean-field", s.meanfield});
        auto j = summary_meta(s.empirical);
        j["max_abs_gap"] = s.max_abs_gap;
        meta["series"].push_back(j);
        out << s.label << ": max |mean-field - empirical| = " << format_double(s.max_abs_gap) << '\n';
      }
      emit_curve_outputs(cfg, r.times, header, columns, plotted, "mean-field vs empirical", meta);
      return kExitOk;
    }
    case Command::Audit: {
      const AuditResult r = run_audit(cfg);
      Table table;
      table.header = {"check", "status", "worst", "tolerance", "detail"};
      out << "audit: " << r.graph << '\n';
      for (const auto& c : r.checks) {
        table.rows.push_back({c.name, c.passed ? "pass" : "FAIL", format_double(c.worst), format_double(c.tolerance), c.detail});
        out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << "  worst=" << format_double(c.worst)
            << "  tol=" << format_double(c.tolerance) << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
      }
      for (const auto& [key, value] : r.info) {
        table.rows.push_back({key, "info", format_double(value), "", ""});
        out << "  " << key << " = " << format_double(value) << '\n';
      }
      if (!cfg.out_csv.empty()) {
        std::ostringstream os;
        write_table_csv(os, table);
        write_file(cfg.out_csv, os.str());
      }
      return r.all_passed() ? kExitOk : kExitInvariant;
    }
  }
  return kExitConfig;
}

}  // namespace

int execute(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return run_command(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_numeric() ? kExitNumeric : kExitConfig;
  }
}

}  // namespace graphentropy::cli
