#pragma once

#include <cstdint>

#include <nlohmann/json_fwd.hpp>

#include "cachenet/topology.hpp"
#include "cachenet/types.hpp"

namespace cachenet {

/// Cooperation policy: at most k_max replicas of any item network-wide,
/// cooperative search within `radius` hops.
struct CooperationPolicy {
  int k_max = 1;
  int radius = 0;

  void validate() const {
    if (k_max < 1) throw ConfigError("policy needs k_max >= 1");
    if (radius < 0) throw ConfigError("policy needs radius >= 0");
  }
};

enum class PolicyType { TypeI, TypeII, TypeIII, TypeIV };

const char* to_string(PolicyType t);

/// Small/large taxonomy: small r means r <= r_threshold, small K means
/// K <= k_threshold. (small, small) -> I, (small, large) -> II (en-route
/// caching), (large, small) -> III (one network-wide cache), (large, large)
/// -> IV.
PolicyType classify(const CooperationPolicy& policy, int r_threshold = 1, int k_threshold = 2);

/// Exact message/announcement counts for cooperation upkeep.
struct OverheadReport {
  std::int64_t init_messages = 0;           // sum_j (|searchable(j)| - 1)
  std::int64_t init_item_announcements = 0; // sum_j C_j * (|searchable(j)| - 1)
  std::int64_t per_change_messages = 0;     // accumulated over a run
  std::int64_t computation_per_request = 0; // max_j |searchable(j)| over clients
};

/// Initialization cost of exchanging cache digests within searchable sets.
OverheadReport init_overhead(const Topology& g, const CooperationPolicy& policy,
                             const VectorXd& capacities);

/// Messages announcing one cache change at router j: |searchable(j)| - 1.
std::int64_t per_change_overhead(const Topology& g, const CooperationPolicy& policy, NodeId j);

/// Lookup work for one request arriving at router j: |searchable(j)|.
std::int64_t computation_per_request(const Topology& g, const CooperationPolicy& policy, NodeId j);

nlohmann::json overheads_to_json(const OverheadReport& report);
OverheadReport overheads_from_json(const nlohmann::json& doc);

}  // namespace cachenet
