#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "graphentropy/cli/experiments.hpp"
#include "graphentropy/error.hpp"

namespace ge = graphentropy;
namespace gc = graphentropy::cli;

namespace {

struct RawOptions {
  std::vector<std::string> graphs;
  std::string dynamic = "heat";
  std::string init = "uniform";
  std::string grid;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  std::string out_csv;
  std::string out_svg;
  std::string out_meta;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& description, RawOptions& raw) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("--graph", raw.graphs,
                  "complete:N | path:N | star:L | circulant:N:s1,s2,.. | er:N:P | ws:N:K:P | file:PATH"
                  " | counterexample:N (audit)")
      ->required();
  sub->add_option("--dynamic", raw.dynamic, "heat or rw")->check(CLI::IsMember({"heat", "rw"}));
  sub->add_option("--init", raw.init, "uniform | delta:<i> | file:<path>");
  sub->add_option("--grid", raw.grid, "tmin:tmax:points[:log|lin]; empty fields take defaults");
  sub->add_option("--samples", raw.samples, "draws per stochastic graph");
  sub->add_option("--seed", raw.seed, "master seed");
  sub->add_option("--out-csv", raw.out_csv, "CSV output path");
  sub->add_option("--out-svg", raw.out_svg, "SVG output path");
  sub->add_option("--out-meta", raw.out_meta, "JSON metadata output path");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional entropy of diffusion on graphs"};
  app.require_subcommand(1);
  RawOptions raw;
  const std::vector<std::pair<gc::Command, CLI::App*>> commands{
      {gc::Command::Curve, add_command(app, "curve", "entropy curve of one graph", raw)},
      {gc::Command::Compare, add_command(app, "compare", "curves of several graphs with K_n and P_n references", raw)},
      {gc::Command::Ensemble, add_command(app, "ensemble", "mean and std over random graph samples", raw)},
      {gc::Command::Meanfield, add_command(app, "meanfield", "ER samples against the mean-field curve", raw)},
      {gc::Command::Audit, add_command(app, "audit", "check diffusion invariants on one graph", raw)},
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gc::kExitConfig;
  }

  gc::ExperimentConfig cfg;
  try {
    for (const auto& [command, sub] : commands)
      if (sub->parsed()) cfg.command = command;
    cfg.graphs = raw.graphs;
    cfg.dynamic = gc::parse_dynamic(raw.dynamic);
    cfg.initial = gc::parse_init(raw.init);
    if (!raw.grid.empty()) cfg.grid = gc::parse_grid(raw.grid);
    cfg.samples = raw.samples;
    cfg.seed = ge::RngSeed{raw.seed};
    cfg.out_csv = raw.out_csv;
    cfg.out_svg = raw.out_svg;
    cfg.out_meta = raw.out_meta;
    cfg.validate();
  } catch (const ge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gc::kExitConfig;
  }
  return gc::execute(cfg, std::cout, std::cerr);
}
