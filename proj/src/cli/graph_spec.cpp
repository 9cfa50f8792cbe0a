#include "graphentropy/cli/graph_spec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "graphentropy/error.hpp"

namespace graphentropy::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream is(text);
  while (std::getline(is, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::Config, "bad " + what + " '" + s + "'");
  }
  return value;
}

double parse_real(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Config, "bad " + what + " '" + s + "'");
  }
}

void expect_fields(const std::vector<std::string>& parts, std::size_t count, const std::string& text) {
  if (parts.size() != count) throw Error(ErrorCode::Config, "graph spec '" + text + "' has the wrong number of fields");
}

}  // namespace

GraphSpec parse_graph_spec(const std::string& text) {
  GraphSpec spec;
  spec.text = text;
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  if (family == "file") {
    if (colon == std::string::npos || colon + 1 == text.size()) throw Error(ErrorCode::Config, "file spec needs a path");
    spec.family = GraphSpec::Family::File;
    spec.path = text.substr(colon + 1);
    return spec;
  }
  const auto parts = split(text, ':');
  if (family == "complete" || family == "path" || family == "star" || family == "counterexample") {
    expect_fields(parts, 2, text);
    spec.n = parse_count(parts[1], "size");
    spec.family = family == "complete" ? GraphSpec::Family::Complete
                  : family == "path"   ? GraphSpec::Family::Path
                  : family == "star"   ? GraphSpec::Family::Star
                                       : GraphSpec::Family::Counterexample;
  } else if (family == "circulant") {
    expect_fields(parts, 3, text);
    spec.family = GraphSpec::Family::Circulant;
    spec.n = parse_count(parts[1], "size");
    for (const auto& s : split(parts[2], ',')) spec.steps.push_back(parse_count(s, "step"));
  } else if (family == "er") {
    expect_fields(parts, 3, text);
    spec.family = GraphSpec::Family::ErdosRenyi;
    spec.n = parse_count(parts[1], "size");
    spec.p = parse_real(parts[2], "probability");
  } else if (family == "ws") {
    expect_fields(parts, 4, text);
    spec.family = GraphSpec::Family::WattsStrogatz;
    spec.n = parse_count(parts[1], "size");
    spec.k = parse_count(parts[2], "half-neighborhood");
    spec.p = parse_real(parts[3], "rewire probability");
  } else {
    throw Error(ErrorCode::Config, "unknown graph family '" + family + "'");
  }
  return spec;
}

Graph GraphSpec::build(RngSeed seed) const {
  switch (family) {
    case Family::Complete: return make_complete(n);
    case Family::Path: return make_path(n);
    case Family::Star: return make_star(n);
    case Family::Circulant: return make_circulant(n, StepSet(steps, n));
    case Family::ErdosRenyi: return make_erdos_renyi(n, p, seed);
    case Family::WattsStrogatz: return make_watts_strogatz(n, k, p, seed);
    case Family::File: return read_edge_list_file(path);
    case Family::Counterexample:
      throw Error(ErrorCode::Config, "counterexample chain is not a graph; use it with the audit command");
  }
  throw Error(ErrorCode::Config, "unknown family");
}

LaplacianKind parse_dynamic(const std::string& text) {
  if (text == "heat") return LaplacianKind::Combinatorial;
  if (text == "rw") return LaplacianKind::RandomWalk;
  throw Error(ErrorCode::Config, "dynamic must be heat or rw, got '" + text + "'");
}

InitSpec parse_init(const std::string& text) {
  InitSpec spec;
  if (text == "uniform") return spec;
  if (text.rfind("delta:", 0) == 0) {
    spec.kind = InitialCondition::Kind::Delta;
    spec.node = parse_count(text.substr(6), "delta node");
    return spec;
  }
  if (text.rfind("file:", 0) == 0 && text.size() > 5) {
    spec.kind = InitialCondition::Kind::Custom;
    spec.path = text.substr(5);
    return spec;
  }
  throw Error(ErrorCode::Config, "init must be uniform, delta:<i> or file:<path>, got '" + text + "'");
}

Distribution InitSpec::build(std::size_t n) const {
  switch (kind) {
    case InitialCondition::Kind::Uniform: return Distribution::uniform(n);
    case InitialCondition::Kind::Delta: return Distribution::delta(n, node);
    case InitialCondition::Kind::Custom: {
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::Config, "cannot open " + path);
      std::vector<double> values;
      double x = 0.0;
      while (in >> x) values.push_back(x);
      if (!in.eof()) throw Error(ErrorCode::Config, "non-numeric entry in " + path);
      if (values.size() != n) {
        throw Error(ErrorCode::Config, path + " has " + std::to_string(values.size()) + " weights for n=" + std::to_string(n));
      }
      return Distribution::from_weights(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(n)));
    }
  }
  throw Error(ErrorCode::Config, "unknown init");
}

GridSpec parse_grid(const std::string& text) {
  GridSpec spec;
  const auto parts = split(text, ':');
  if (parts.size() < 3 || parts.size() > 4) throw Error(ErrorCode::Config, "grid must be tmin:tmax:points[:log|lin]");
  if (!parts[0].empty()) spec.t_min = parse_real(parts[0], "t_min");
  if (!parts[1].empty()) spec.t_max = parse_real(parts[1], "t_max");
  if (!parts[2].empty()) spec.points = parse_count(parts[2], "points");
  if (parts.size() == 4) {
    if (parts[3] == "log") spec.logarithmic = true;
    else if (parts[3] == "lin") spec.logarithmic = false;
    else throw Error(ErrorCode::Config, "grid spacing must be log or lin");
  }
  return spec;
}

TimeGrid GridSpec::build(double default_t_max) const {
  const double lo = t_min.value_or(1e-3);
  const double hi = t_max.value_or(std::max(default_t_max, 10.0 * lo));
  if (!(lo < hi)) throw Error(ErrorCode::Config, "grid needs t_min < t_max");
  if (points < 2) throw Error(ErrorCode::Config, "grid needs at least 2 points");
  if (logarithmic && !(lo > 0.0)) throw Error(ErrorCode::Config, "log grid needs t_min > 0");
  return logarithmic ? TimeGrid::logarithmic(lo, hi, points) : TimeGrid::linear(lo, hi, points);
}

double default_t_max(const Graph& g, LaplacianKind dynamic) {
  if (g.size() < 2 || g.has_isolated_node()) return 1e3;
  const SpectralDecomposition dec = heat_spectrum(g);
  double slowest = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < dec.size(); ++i) {
    if (dec.eigenvalues(i) > 1e-10) {
      slowest = dec.eigenvalues(i);
      break;
    }
  }
  if (!std::isfinite(slowest)) return 1e3;
  double t = 50.0 / slowest;
  if (dynamic == LaplacianKind::RandomWalk) {
    const auto degrees = g.degrees();
    t *= static_cast<double>(*std::max_element(degrees.begin(), degrees.end()));
  }
  return t;
}

}  // namespace graphentropy::cli
