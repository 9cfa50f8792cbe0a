#include "graphentropy/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "graphentropy/error.hpp"

namespace graphentropy {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::string label)
    : n_(n), edges_(std::move(edges)), adjacency_(n), label_(std::move(label)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidSize, "graph needs at least one node");
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw Error(ErrorCode::NodeOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n_));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "(" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  }
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Node u = 0; u < n_; ++u) d[u] = adjacency_[u].size();
  return d;
}

bool Graph::has_edge(Node u, Node v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::has_isolated_node() const {
  if (n_ < 2) return false;
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& l) { return l.empty(); });
}

double Graph::density() const noexcept {
  if (n_ < 2) return 0.0;
  return 2.0 * static_cast<double>(edges_.size()) / (static_cast<double>(n_) * static_cast<double>(n_ - 1));
}

Graph Graph::with_edge(Node u, Node v) const {
  if (u >= n_ || v >= n_) throw Error(ErrorCode::NodeOutOfRange, "added edge endpoint");
  if (u == v) throw Error(ErrorCode::SelfLoop, "added edge (" + std::to_string(u) + ")");
  if (has_edge(u, v)) {
    throw Error(ErrorCode::EdgeAlreadyPresent, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  auto edges = edges_;
  edges.emplace_back(u, v);
  return Graph(n_, std::move(edges), label_ + "+e");
}

StepSet::StepSet(std::vector<std::size_t> steps, std::size_t n) : steps_(std::move(steps)), n_(n) {
  if (n_ < 2) throw Error(ErrorCode::InvalidSize, "circulant needs n >= 2");
  if (steps_.empty()) throw Error(ErrorCode::InvalidStep, "empty step set");
  std::sort(steps_.begin(), steps_.end());
  if (std::adjacent_find(steps_.begin(), steps_.end()) != steps_.end()) {
    throw Error(ErrorCode::InvalidStep, "repeated step");
  }
  if (steps_.front() == 0) throw Error(ErrorCode::InvalidStep, "step 0");
  if (steps_.back() > n_ / 2) {
    throw Error(ErrorCode::InvalidStep,
                "step " + std::to_string(steps_.back()) + " exceeds floor(n/2) = " + std::to_string(n_ / 2));
  }
}

std::size_t StepSet::degree() const noexcept {
  const bool has_half = n_ % 2 == 0 && steps_.back() == n_ / 2;
  return 2 * steps_.size() - (has_half ? 1 : 0);
}

std::string StepSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < steps_.size(); ++i) os << (i ? "," : "") << steps_[i];
  os << '}';
  return os.str();
}

StepSet consecutive_steps(std::size_t k, std::size_t n) {
  std::vector<std::size_t> steps(k);
  for (std::size_t i = 0; i < k; ++i) steps[i] = i + 1;
  return StepSet(std::move(steps), n);
}

Graph make_complete(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSize, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges), "K_" + std::to_string(n));
}

Graph make_path(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSize, "path graph needs n >= 1");
  std::vector<Edge> edges;
  for (Node u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, std::move(edges), "P_" + std::to_string(n));
}

Graph make_star(std::size_t leaves) {
  if (leaves == 0) throw Error(ErrorCode::InvalidSize, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (Node v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges), "S_" + std::to_string(leaves));
}

Graph make_circulant(std::size_t n, const StepSet& steps) {
  if (steps.n() != n) throw Error(ErrorCode::InvalidStep, "step set built for a different n");
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i) {
    for (const auto s : steps.steps()) {
      const Node j = (i + s) % n;
      // n/2 would otherwise be generated from both endpoints.
      if (2 * s == n && j < i) continue;
      edges.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  return Graph(n, std::move(edges), "C_" + std::to_string(n) + "(" + steps.to_string() + ")");
}

Graph make_erdos_renyi(std::size_t n, double p, RngSeed seed) {
  if (n == 0) throw Error(ErrorCode::InvalidSize, "ER graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidProbability, "p=" + std::to_string(p));
  CounterRng rng(seed);
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  std::ostringstream label;
  label << "ER_" << n << "(" << p << ")";
  return Graph(n, std::move(edges), label.str());
}

Graph make_watts_strogatz(std::size_t n, std::size_t k, double p, RngSeed seed) {
  if (n < 3 || k < 1 || k > (n - 1) / 2) {
    throw Error(ErrorCode::InvalidParameter,
                "need 1 <= k <= floor((n-1)/2), got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidProbability, "p=" + std::to_string(p));

  const Graph skeleton = make_circulant(n, consecutive_steps(k, n));
  std::vector<std::set<Node>> adj(n);
  for (const auto& [u, v] : skeleton.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }

  CounterRng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(skeleton.edge_count());
  std::vector<Node> candidates;
  for (const auto& [u, v] : skeleton.edges()) {
    if (!rng.bernoulli(p)) {
      edges.emplace_back(u, v);
      continue;
    }
    candidates.clear();
    for (Node w = 0; w < n; ++w)
      if (w != u && !adj[u].contains(w)) candidates.push_back(w);
    if (candidates.empty()) {
      edges.emplace_back(u, v);
      continue;
    }
    const Node w = candidates[rng.uniform_below(candidates.size())];
    adj[u].erase(v);
    adj[v].erase(u);
    adj[u].insert(w);
    adj[w].insert(u);
    edges.emplace_back(u, w);
  }
  std::ostringstream label;
  label << "WS_" << n << "(" << k << "," << p << ")";
  return Graph(n, std::move(edges), label.str());
}

std::vector<std::vector<Node>> connected_components(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Node>> parts;
  std::deque<Node> queue;
  for (Node s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Node> part;
    seen[s] = true;
    queue.push_back(s);
    while (!queue.empty()) {
      const Node u = queue.front();
      queue.pop_front();
      part.push_back(u);
      for (const Node v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::vector<std::size_t> bfs_distances(const Graph& g, Node source) {
  if (source >= g.size()) {
    throw Error(ErrorCode::NodeOutOfRange, "source " + std::to_string(source) + " with n=" + std::to_string(g.size()));
  }
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::deque<Node> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    for (const Node v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Node s = 0; s < g.size(); ++s) {
    for (const auto d : bfs_distances(g, s)) {
      if (d == kUnreachable) throw Error(ErrorCode::DisconnectedGraph, "diameter of " + g.label());
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace graphentropy
