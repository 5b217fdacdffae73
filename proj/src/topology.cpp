#include "cachenet/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cachenet/rng.hpp"

namespace cachenet {

namespace {

void add_edge(std::vector<std::vector<NodeId>>& adj, NodeId u, NodeId v) {
  adj[static_cast<std::size_t>(u)].push_back(v);
  adj[static_cast<std::size_t>(v)].push_back(u);
}

void sort_adjacency(std::vector<std::vector<NodeId>>& adj) {
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
}

// BFS over the full node set (CP included if present).
std::vector<int> bfs_distances(const Topology& g, NodeId source) {
  std::vector<int> dist(static_cast<std::size_t>(g.total_nodes()), -1);
  std::deque<NodeId> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.adj[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::pair<NodeId, NodeId>> Topology::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId u = 0; u < total_nodes(); ++u)
    for (NodeId v : adj[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

void Topology::validate() const {
  if (node_count < 1) throw ConfigError("topology has no routers");
  if (adj.size() != static_cast<std::size_t>(total_nodes()))
    throw ConfigError("adjacency size does not match node count");
  for (NodeId u = 0; u < total_nodes(); ++u) {
    for (NodeId v : adj[static_cast<std::size_t>(u)]) {
      if (v < 0 || v >= total_nodes()) throw ConfigError("edge endpoint out of range");
      if (v == u) throw ConfigError("self-loop in adjacency");
    }
  }
  const std::vector<int> dist = bfs_distances(*this, 0);
  if (std::count(dist.begin(), dist.end(), -1) > 0)
    throw ConfigError("graph is not connected");
  if (has_roles()) {
    if (cp_node != node_count) throw ConfigError("cp node must be the extra node M");
    if (degree(cp_node) != 1) throw ConfigError("cp must attach to exactly one router");
    if (adj[static_cast<std::size_t>(cp_node)][0] != cp_attach)
      throw ConfigError("cp_attach does not match adjacency");
    if (edge_routers.empty()) throw ConfigError("no edge routers assigned");
    for (NodeId j : edge_routers)
      if (j < 0 || j >= node_count) throw ConfigError("edge router id out of range");
    if (!std::includes(edge_routers.begin(), edge_routers.end(), client_nodes.begin(),
                       client_nodes.end()))
      throw ConfigError("client nodes must be a subset of edge routers");
  }
}

Topology generate_scale_free(int n, int m_attach, std::uint64_t seed) {
  if (n < 2) throw ConfigError("scale-free generator needs n >= 2");
  if (m_attach < 1 || m_attach >= n)
    throw ConfigError("scale-free generator needs 1 <= m_attach < n");

  Topology g;
  g.node_count = n;
  g.adj.assign(static_cast<std::size_t>(n), {});

  const int seed_nodes = m_attach + 1;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  long total_degree = 0;
  for (NodeId u = 0; u < seed_nodes; ++u)
    for (NodeId v = u + 1; v < seed_nodes; ++v) {
      add_edge(g.adj, u, v);
      ++degree[static_cast<std::size_t>(u)];
      ++degree[static_cast<std::size_t>(v)];
      total_degree += 2;
    }

  Rng rng(seed);
  std::vector<NodeId> targets;
  for (NodeId v = seed_nodes; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m_attach) {
      // Degree-proportional draw over existing nodes, duplicates redrawn.
      const double ticket = uniform01(rng) * static_cast<double>(total_degree);
      double acc = 0.0;
      NodeId pick = v - 1;
      for (NodeId u = 0; u < v; ++u) {
        acc += static_cast<double>(degree[static_cast<std::size_t>(u)]);
        if (ticket < acc) {
          pick = u;
          break;
        }
      }
      if (std::find(targets.begin(), targets.end(), pick) == targets.end())
        targets.push_back(pick);
    }
    for (NodeId u : targets) {
      add_edge(g.adj, v, u);
      ++degree[static_cast<std::size_t>(u)];
      ++degree[static_cast<std::size_t>(v)];
      total_degree += 2;
    }
  }
  sort_adjacency(g.adj);
  g.validate();
  return g;
}

Topology load_edge_list(std::string_view text) {
  std::set<std::pair<NodeId, NodeId>> edge_set;
  std::set<long> ids;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long u = 0, v = 0;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v)) throw ParseError("expected two integers", line_no);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens after edge", line_no);
    if (u < 0 || v < 0) throw ParseError("negative node id", line_no);
    if (u == v) throw ParseError("self-loop rejected", line_no);
    ids.insert(u);
    ids.insert(v);
    edge_set.insert({static_cast<NodeId>(std::min(u, v)), static_cast<NodeId>(std::max(u, v))});
  }
  if (edge_set.empty()) throw ParseError("no edges found", line_no);

  // Dense remap in ascending original-id order.
  std::vector<long> ordered(ids.begin(), ids.end());
  auto id_of = [&](long orig) {
    return static_cast<NodeId>(
        std::lower_bound(ordered.begin(), ordered.end(), orig) - ordered.begin());
  };

  Topology g;
  g.node_count = static_cast<int>(ordered.size());
  g.adj.assign(ordered.size(), {});
  for (const auto& [u, v] : edge_set) add_edge(g.adj, id_of(u), id_of(v));
  sort_adjacency(g.adj);
  g.validate();  // throws ConfigError when disconnected
  return g;
}

PathTable shortest_paths(const Topology& g) {
  const int n = g.total_nodes();
  PathTable table;
  table.dist.setZero(n, n);
  table.next_hop.setConstant(n, n, -1);

  for (NodeId s = 0; s < n; ++s) {
    const std::vector<int> dist = bfs_distances(g, s);
    for (NodeId v = 0; v < n; ++v) table.dist(v, s) = dist[static_cast<std::size_t>(v)];
  }
  // Smallest neighbour one hop closer to the target; walking it yields the
  // lexicographically smallest shortest path (greedy per position).
  for (NodeId t = 0; t < n; ++t)
    for (NodeId u = 0; u < n; ++u) {
      if (u == t) continue;
      for (NodeId v : g.adj[static_cast<std::size_t>(u)]) {
        if (table.dist(v, t) == table.dist(u, t) - 1) {
          table.next_hop(u, t) = v;
          break;  // adjacency is sorted
        }
      }
    }
  return table;
}

CentralityMap betweenness_centrality(const Topology& g) {
  const int m = g.node_count;
  CentralityMap map;
  map.c_b = VectorXd::Zero(m);
  if (m < 3) return map;

  // Brandes accumulation over router pairs; the CP (if present) is a leaf on
  // a separate id and never lies on a router-router shortest path, so
  // restricting traversal to ids < m is exact.
  std::vector<double> delta(static_cast<std::size_t>(m));
  std::vector<double> sigma(static_cast<std::size_t>(m));
  std::vector<int> dist(static_cast<std::size_t>(m));
  std::vector<std::vector<NodeId>> preds(static_cast<std::size_t>(m));
  std::vector<NodeId> order;
  order.reserve(static_cast<std::size_t>(m));

  for (NodeId s = 0; s < m; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    sigma[static_cast<std::size_t>(s)] = 1.0;
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (NodeId v : g.adj[static_cast<std::size_t>(u)]) {
        if (v >= m) continue;  // skip the CP
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
        if (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(u)] + 1) {
          sigma[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(u)];
          preds[static_cast<std::size_t>(v)].push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : preds[static_cast<std::size_t>(w)])
        delta[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(v)] /
                                              sigma[static_cast<std::size_t>(w)] *
                                              (1.0 + delta[static_cast<std::size_t>(w)]);
      if (w != s) map.c_b(w) += delta[static_cast<std::size_t>(w)];
    }
  }
  // Each unordered pair was accumulated twice; normalize to [0, 1].
  const double pairs = static_cast<double>(m - 1) * static_cast<double>(m - 2) / 2.0;
  map.c_b /= 2.0 * pairs;
  return map;
}

Topology assign_roles(const Topology& g, double client_fraction, int server_candidate_count,
                      std::uint64_t seed) {
  if (g.has_roles()) throw ConfigError("roles already assigned");
  if (client_fraction <= 0.0 || client_fraction > 1.0)
    throw ConfigError("client_fraction must be in (0, 1]");
  if (server_candidate_count < 1) throw ConfigError("server_candidate_count must be >= 1");
  g.validate();

  const int m = g.node_count;
  const CentralityMap cb = betweenness_centrality(g);

  std::vector<NodeId> by_centrality(static_cast<std::size_t>(m));
  std::iota(by_centrality.begin(), by_centrality.end(), 0);
  std::sort(by_centrality.begin(), by_centrality.end(), [&](NodeId a, NodeId b) {
    if (cb.c_b(a) != cb.c_b(b)) return cb.c_b(a) < cb.c_b(b);
    return a < b;
  });

  // Lowest-centrality tertile acts as the network edge.
  const int edge_count = std::max(1, (m + 2) / 3);
  Topology out = g;
  out.edge_routers.assign(by_centrality.begin(), by_centrality.begin() + edge_count);
  std::sort(out.edge_routers.begin(), out.edge_routers.end());
  if (out.edge_routers.empty()) throw ConfigError("no edge routers after classification");

  Rng rng(seed);
  const int client_count = std::min<int>(
      edge_count, static_cast<int>(std::ceil(client_fraction * static_cast<double>(edge_count))));
  out.client_nodes = sample_without_replacement(rng, out.edge_routers,
                                                static_cast<std::size_t>(client_count));
  std::sort(out.client_nodes.begin(), out.client_nodes.end());

  const int candidates = std::min(server_candidate_count, m);
  std::vector<NodeId> core(by_centrality.rbegin(), by_centrality.rbegin() + candidates);
  std::sort(core.begin(), core.end(), [&](NodeId a, NodeId b) {
    if (cb.c_b(a) != cb.c_b(b)) return cb.c_b(a) > cb.c_b(b);
    return a < b;
  });
  const NodeId target = core[uniform_below(rng, core.size())];

  out.cp_node = m;
  out.cp_attach = target;
  out.adj.push_back({target});
  out.adj[static_cast<std::size_t>(target)].push_back(out.cp_node);
  sort_adjacency(out.adj);
  out.validate();
  return out;
}

std::vector<NodeId> searchable_set(const Topology& g, NodeId j, int r) {
  if (j < 0 || j >= g.node_count) throw ConfigError("searchable_set: j is not a router");
  if (r < 0) throw ConfigError("searchable_set: radius must be >= 0");
  std::vector<int> dist(static_cast<std::size_t>(g.total_nodes()), -1);
  std::deque<NodeId> queue{j};
  dist[static_cast<std::size_t>(j)] = 0;
  std::vector<NodeId> out{j};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    if (dist[static_cast<std::size_t>(u)] == r) continue;
    for (NodeId v : g.adj[static_cast<std::size_t>(u)]) {
      if (v >= g.node_count) continue;  // CP excluded
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> canonical_path(const PathTable& paths, NodeId from, NodeId to) {
  std::vector<NodeId> path{from};
  NodeId u = from;
  while (u != to) {
    u = paths.next_hop(u, to);
    path.push_back(u);
  }
  return path;
}

std::vector<NodeId> route_to_cp(const Topology& g, const PathTable& paths, NodeId j) {
  if (!g.has_roles()) throw ConfigError("route_to_cp: topology has no CP");
  return canonical_path(paths, j, g.cp_attach);
}

std::vector<NodeId> reachable_set(const Topology& g, const PathTable& paths, NodeId j, int r) {
  std::vector<NodeId> out;
  for (NodeId k : route_to_cp(g, paths, j)) {
    const std::vector<NodeId> ball = searchable_set(g, k, r);
    out.insert(out.end(), ball.begin(), ball.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json topology_to_json(const Topology& g, const CentralityMap* centrality) {
  nlohmann::json doc;
  doc["nodes"] = g.node_count;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = edges;
  doc["edge_routers"] = g.edge_routers;
  doc["client_nodes"] = g.client_nodes;
  doc["cp_attach"] = g.cp_attach;
  if (centrality != nullptr) {
    std::vector<double> cb(centrality->c_b.data(), centrality->c_b.data() + centrality->c_b.size());
    doc["c_b"] = cb;
  }
  return doc;
}

Topology topology_from_json(const nlohmann::json& doc) {
  Topology g;
  g.node_count = doc.at("nodes").get<int>();
  g.cp_attach = doc.at("cp_attach").get<NodeId>();
  g.cp_node = g.cp_attach >= 0 ? g.node_count : -1;
  g.adj.assign(static_cast<std::size_t>(g.total_nodes()), {});
  for (const auto& e : doc.at("edges")) {
    const NodeId u = e.at(0).get<NodeId>();
    const NodeId v = e.at(1).get<NodeId>();
    add_edge(g.adj, u, v);
  }
  sort_adjacency(g.adj);
  g.edge_routers = doc.at("edge_routers").get<std::vector<NodeId>>();
  g.client_nodes = doc.at("client_nodes").get<std::vector<NodeId>>();
  g.validate();
  return g;
}

}  // namespace cachenet
