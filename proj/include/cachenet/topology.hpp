#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cachenet/types.hpp"

namespace cachenet {

/// Router network with an optional content-provider (CP) node appended.
///
/// Routers carry ids 0..node_count-1. Once roles are assigned, the CP is the
/// extra node `node_count`, attached by a single edge to `cp_attach`. Edge
/// routers are the request entry points; client_nodes is the subset that
/// actually has clients attached.
struct Topology {
  int node_count = 0;                   // M routers, excluding the CP
  NodeId cp_node = -1;                  // == node_count once roles are assigned
  NodeId cp_attach = -1;                // router the CP hangs off
  std::vector<std::vector<NodeId>> adj; // sorted neighbour lists, CP included if present
  std::vector<NodeId> edge_routers;     // sorted
  std::vector<NodeId> client_nodes;     // sorted, subset of edge_routers

  bool has_roles() const { return cp_node >= 0; }
  int total_nodes() const { return has_roles() ? node_count + 1 : node_count; }
  int degree(NodeId v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

  /// Undirected edge list with u < v, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  /// Throws ConfigError if any structural invariant is broken.
  void validate() const;
};

/// Hop distances plus a canonical next-hop table.
///
/// next_hop(u, t) is the first node after u on the canonical shortest path
/// from u to t (the lexicographically smallest node sequence among all
/// shortest paths); -1 on the diagonal.
struct PathTable {
  MatrixXi dist;
  MatrixXi next_hop;
};

/// Normalized betweenness centrality per router (CP excluded), in [0, 1].
struct CentralityMap {
  VectorXd c_b;
};

/// Preferential-attachment graph on n routers, m_attach edges per arrival,
/// grown from a complete graph on m_attach + 1 nodes. Roles unassigned.
Topology generate_scale_free(int n, int m_attach, std::uint64_t seed);

/// Parses "u v" pairs, one per line; '#' starts a comment. Duplicate edges
/// collapse, self-loops are rejected, ids are remapped densely if sparse.
Topology load_edge_list(std::string_view text);

/// Classifies edge routers, samples client attachments, and appends the CP.
///
/// Edge routers are the lowest betweenness tertile (ties to lower id);
/// ceil(client_fraction * L) of them become client nodes; the CP links to one
/// of the server_candidate_count highest-centrality routers, chosen uniformly.
Topology assign_roles(const Topology& g, double client_fraction, int server_candidate_count,
                      std::uint64_t seed);

/// All-pairs hop distances and canonical next hops (BFS per node).
PathTable shortest_paths(const Topology& g);

/// Shortest-path betweenness over router pairs, normalized by (M-1)(M-2)/2.
/// Graphs with fewer than 3 routers get an all-zero map.
CentralityMap betweenness_centrality(const Topology& g);

/// Routers within r hops of j (CP excluded, j included), sorted.
std::vector<NodeId> searchable_set(const Topology& g, NodeId j, int r);

/// Canonical shortest path from `from` to `to`, inclusive of both.
std::vector<NodeId> canonical_path(const PathTable& paths, NodeId from, NodeId to);

/// Canonical path from j toward the CP: starts at j, ends at cp_attach,
/// excludes the CP itself. Its length equals the hop count j -> CP.
std::vector<NodeId> route_to_cp(const Topology& g, const PathTable& paths, NodeId j);

/// Union of searchable sets over every router on j's route to the CP.
std::vector<NodeId> reachable_set(const Topology& g, const PathTable& paths, NodeId j, int r);

nlohmann::json topology_to_json(const Topology& g, const CentralityMap* centrality = nullptr);
Topology topology_from_json(const nlohmann::json& doc);

}  // namespace cachenet
