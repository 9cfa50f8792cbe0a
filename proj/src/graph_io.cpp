#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "graphentropy/error.hpp"
#include "graphentropy/graph.hpp"

namespace graphentropy {

namespace {

std::string strip(const std::string& line) {
  const auto hash = line.find('#');
  std::string body = hash == std::string::npos ? line : line.substr(0, hash);
  const auto first = body.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = body.find_last_not_of(" \t\r");
  return body.substr(first, last - first + 1);
}

}  // namespace

Graph read_edge_list(std::istream& in, std::string label) {
  std::vector<Edge> edges;
  std::size_t declared_n = 0;
  bool has_header = false;
  std::size_t max_index = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip(line);
    if (body.empty()) continue;
    if (body.rfind("n=", 0) == 0) {
      if (has_header || !edges.empty()) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": header must come first");
      }
      std::istringstream hs(body.substr(2));
      long long value = 0;
      if (!(hs >> value) || value <= 0 || !(hs >> std::ws).eof()) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad header '" + body + "'");
      }
      declared_n = static_cast<std::size_t>(value);
      has_header = true;
      continue;
    }
    std::istringstream ls(body);
    long long u = -1;
    long long v = -1;
    if (!(ls >> u >> v) || u < 0 || v < 0 || !(ls >> std::ws).eof()) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 'u v', got '" + body + "'");
    }
    edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
    max_index = std::max<std::size_t>(max_index, static_cast<std::size_t>(std::max(u, v)));
  }
  std::size_t n = has_header ? declared_n : (edges.empty() ? 0 : max_index + 1);
  if (n == 0) throw Error(ErrorCode::Parse, "edge list has no edges and no n=<int> header");
  return Graph(n, std::move(edges), std::move(label));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n=" << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace graphentropy
