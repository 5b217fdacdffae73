#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cachenet/policy.hpp"
#include "cachenet/topology.hpp"
#include "cachenet/types.hpp"
#include "cachenet/workload.hpp"

namespace cachenet {

/// Binary content-distribution matrix X, N items by M+1 nodes. The last
/// column is the content provider and is pinned to 1. Secondary indexes
/// (holder lists, per-router contents, loads) are maintained on mutation.
class Placement {
 public:
  static Placement empty(int n_items, int n_routers);

  bool at(ItemId i, NodeId j) const { return x_(i, j) != 0; }
  void set(ItemId i, NodeId j, bool value, const Catalog& catalog);

  int n_items() const { return static_cast<int>(x_.rows()); }
  int n_routers() const { return static_cast<int>(x_.cols()) - 1; }

  const BinaryMatrix& matrix() const { return x_; }
  /// Router holders of item i (CP excluded), sorted.
  const std::vector<NodeId>& holders(ItemId i) const {
    return holders_[static_cast<std::size_t>(i)];
  }
  /// Items cached at router j, sorted.
  const std::vector<ItemId>& cache_items(NodeId j) const {
    return contents_[static_cast<std::size_t>(j)];
  }
  /// Bytes stored at router j.
  double load(NodeId j) const { return load_(j); }
  /// Total replicas of item i over the M routers.
  int replica_count(ItemId i) const {
    return static_cast<int>(holders_[static_cast<std::size_t>(i)].size());
  }

  bool operator==(const Placement& other) const { return x_ == other.x_; }

 private:
  BinaryMatrix x_;
  std::vector<std::vector<NodeId>> holders_;
  std::vector<std::vector<ItemId>> contents_;
  VectorXd load_;
};

/// Per-byte retrieval costs c(j, k) for each edge router j (row) and node k
/// (column, CP last). Infinite where k is outside j's reachable set.
struct CostMatrix {
  MatrixXd c;
  std::vector<NodeId> rows;  // edge router per row, ascending
  std::vector<int> row_of;   // node id -> row index, -1 if not an edge router

  double cost(NodeId edge_router, NodeId from) const {
    return c(row_of[static_cast<std::size_t>(edge_router)], from);
  }
};

/// Hop-distance costs restricted to reachable sets at the given radius.
CostMatrix cost_matrix(const Topology& g, const PathTable& paths, int r);

/// Outcome of serving one request at edge router j.
struct ServeOutcome {
  bool hit = false;           // some router in the reachable set holds the item
  NodeId serving_node = -1;   // router id, or the CP node id
  int hops = 0;               // h: distance to the serving node (== h_max on CP serves)
  int h_max = 0;              // H_j: hop count from j to the CP
  NodeId path_hit_node = -1;  // end of the decision path: serving router, or cp_attach
};

/// Looks up the nearest holder of `item` within j's reachable set; falls back
/// to the CP. Ties break toward the lower node id. The CP also wins when it
/// is strictly closer than any holder, which keeps hops <= h_max.
ServeOutcome serve_request(const Placement& placement, const Topology& g, const PathTable& paths,
                           const CooperationPolicy& policy, NodeId j, ItemId item);

struct SolverBudget {
  std::int64_t max_nodes = 100000;  // branch-and-bound expansions per request
  std::int64_t max_millis = 0;      // optional wall-clock cap; 0 disables (non-deterministic)
};

enum class SolverStatus { exact, heuristic, timeout };

const char* to_string(SolverStatus s);

struct PlacementChange {
  ItemId item;
  NodeId router;

  auto operator<=>(const PlacementChange&) const = default;
};

struct PlacementDecision {
  std::vector<PlacementChange> admissions;  // sorted by (item, router)
  std::vector<PlacementChange> evictions;   // sorted by (item, router)
  double objective_value = 0.0;
  SolverStatus status = SolverStatus::exact;
  std::int64_t nodes_explored = 0;
};

/// Self-contained reduced problem: everything needed to reproduce one
/// per-request optimization outside the simulation loop.
struct SolveInstance {
  Topology topology;
  VectorXd capacities;        // per router
  CooperationPolicy policy;
  std::vector<ItemId> items;  // decidable items (path cache contents + request)
  BinaryMatrix rows;          // |items| x (M+1) placement rows, CP column last
  VectorXd popularity;        // per decidable item
  VectorXd sizes;             // per decidable item
  NodeId client = -1;
  ItemId item = -1;           // requested item (global id)
};

/// Captures the reduced problem seen by solve_placement for (client, item).
SolveInstance make_instance(const Placement& placement, const Topology& g, const PathTable& paths,
                            const CooperationPolicy& policy, const VectorXd& capacities,
                            const Catalog& catalog, const PopularityVector& pop, NodeId client,
                            ItemId item);

nlohmann::json instance_to_json(const SolveInstance& inst);
SolveInstance instance_from_json(const nlohmann::json& doc);

/// Per-request placement optimization.
///
/// The decision scope is the canonical path from the requesting router to the
/// serving router (to the CP attachment on a miss). Rows outside the path
/// caches plus the requested item are fixed; within scope the solver picks
/// the placement minimizing total serving cost over all edge routers, subject
/// to capacity and the k_max replica bound. Branch and bound over per-item
/// holder patterns; `exact` when the search completes within budget,
/// otherwise the best placement found so far.
PlacementDecision solve_placement(const Placement& placement, const ServeOutcome& outcome,
                                  NodeId client, ItemId item, const CooperationPolicy& policy,
                                  const CostMatrix& costs, const VectorXd& capacities,
                                  const Catalog& catalog, const PopularityVector& pop,
                                  const Topology& g, const PathTable& paths,
                                  const SolverBudget& budget);

/// Same solver running on a captured instance.
PlacementDecision solve_instance(const SolveInstance& inst, const SolverBudget& budget);

struct Violation {
  std::string constraint;  // "capacity", "max_replicas", "cp_availability"
  ItemId item = -1;
  NodeId router = -1;
  std::string detail;
};

/// Empty iff capacity, replica, and CP-availability invariants all hold.
std::vector<Violation> validate_placement(const Placement& placement,
                                          const CooperationPolicy& policy, const Catalog& catalog,
                                          const VectorXd& capacities);

struct OracleResult {
  double objective = 0.0;
  /// All optimal assignments (holder pattern per decidable item over the
  /// decision path), capped; at least one is always present.
  std::vector<std::vector<std::uint32_t>> optimal_patterns;
  std::vector<NodeId> decision_path;
  std::int64_t states_visited = 0;
};

/// Exhaustive enumeration of every feasible in-scope placement. Refuses via
/// RefusalError when more than max_states assignments would be visited.
OracleResult brute_force_oracle(const SolveInstance& inst, std::int64_t max_states = 1000000);

}  // namespace cachenet
