#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "graphentropy/rng.hpp"

namespace graphentropy {

using Node = std::size_t;
using Edge = std::pair<Node, Node>;

/// Undirected simple graph on nodes 0..n-1. Immutable once built.
///
/// Edges are stored canonically (u < v) in sorted order; adjacency lists are
/// sorted. Construction rejects self-loops, duplicate edges and out-of-range
/// endpoints, so every instance satisfies the simple-graph invariants.
class Graph {
 public:
  /// Builds a graph from an edge list. Each unordered pair may appear once,
  /// in either orientation.
  Graph(std::size_t n, std::vector<Edge> edges, std::string label = {});

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Node>& neighbors(Node u) const { return adjacency_.at(u); }
  std::size_t degree(Node u) const { return adjacency_.at(u).size(); }
  std::vector<std::size_t> degrees() const;
  bool has_edge(Node u, Node v) const;
  bool has_isolated_node() const;

  /// Edge density 2M / (n(n-1)); zero for n < 2.
  double density() const noexcept;

  /// Family label used in reports, e.g. "C_20({1,2,3})".
  const std::string& label() const noexcept { return label_; }

  /// Copy with one extra edge; throws EdgeAlreadyPresent or SelfLoop.
  Graph with_edge(Node u, Node v) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adjacency_;
  std::string label_;
};

/// Sorted, distinct, positive circulant offsets, each <= floor(n/2).
class StepSet {
 public:
  StepSet(std::vector<std::size_t> steps, std::size_t n);

  const std::vector<std::size_t>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  std::size_t n() const noexcept { return n_; }

  /// Common degree of C_n(S): 2|S|, minus one when n is even and n/2 is a step.
  std::size_t degree() const noexcept;

  std::string to_string() const;

 private:
  std::vector<std::size_t> steps_;
  std::size_t n_;
};

/// Steps {1, ..., k}.
StepSet consecutive_steps(std::size_t k, std::size_t n);

Graph make_complete(std::size_t n);
Graph make_path(std::size_t n);
Graph make_star(std::size_t leaves);
Graph make_circulant(std::size_t n, const StepSet& steps);
Graph make_erdos_renyi(std::size_t n, double p, RngSeed seed);

/// Watts-Strogatz rewiring of C_n({1..k}).
///
/// Skeleton edges are visited in sorted order. Each is rewired with
/// probability p: the lower endpoint stays and the other endpoint is drawn
/// uniformly from nodes that are neither the lower endpoint nor already
/// adjacent to it. An edge with no valid replacement is left as is.
Graph make_watts_strogatz(std::size_t n, std::size_t k, double p, RngSeed seed);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<Node>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Hop distances from `source`; kUnreachable marks other components.
std::vector<std::size_t> bfs_distances(const Graph& g, Node source);

/// Largest eccentricity; throws DisconnectedGraph.
std::size_t diameter(const Graph& g);

/// Plain-text edge list: one "u v" pair per line, '#' comments, optional
/// "n=<int>" header. Without a header the node count is max index + 1.
Graph read_edge_list(std::istream& in, std::string label = "file");
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace graphentropy
