#include "cachenet/policy.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace cachenet {

const char* to_string(PolicyType t) {
  switch (t) {
    case PolicyType::TypeI: return "TypeI";
    case PolicyType::TypeII: return "TypeII";
    case PolicyType::TypeIII: return "TypeIII";
    case PolicyType::TypeIV: return "TypeIV";
  }
  return "TypeI";
}

PolicyType classify(const CooperationPolicy& policy, int r_threshold, int k_threshold) {
  policy.validate();
  if (r_threshold < 0 || k_threshold < 0) throw ConfigError("classification thresholds must be >= 0");
  const bool small_r = policy.radius <= r_threshold;
  const bool small_k = policy.k_max <= k_threshold;
  if (small_r && small_k) return PolicyType::TypeI;
  if (small_r) return PolicyType::TypeII;
  if (small_k) return PolicyType::TypeIII;
  return PolicyType::TypeIV;
}

OverheadReport init_overhead(const Topology& g, const CooperationPolicy& policy,
                             const VectorXd& capacities) {
  policy.validate();
  if (capacities.size() != g.node_count)
    throw ConfigError("init_overhead: one capacity per router required");
  if ((capacities.array() < 0.0).any()) throw ConfigError("capacities must be >= 0");

  OverheadReport report;
  double announcements = 0.0;
  for (NodeId j = 0; j < g.node_count; ++j) {
    const auto neighbourhood = static_cast<std::int64_t>(searchable_set(g, j, policy.radius).size());
    report.init_messages += neighbourhood - 1;
    announcements += capacities(j) * static_cast<double>(neighbourhood - 1);
  }
  report.init_item_announcements = std::llround(announcements);
  return report;
}

std::int64_t per_change_overhead(const Topology& g, const CooperationPolicy& policy, NodeId j) {
  policy.validate();
  return static_cast<std::int64_t>(searchable_set(g, j, policy.radius).size()) - 1;
}

std::int64_t computation_per_request(const Topology& g, const CooperationPolicy& policy, NodeId j) {
  policy.validate();
  return static_cast<std::int64_t>(searchable_set(g, j, policy.radius).size());
}

nlohmann::json overheads_to_json(const OverheadReport& report) {
  return nlohmann::json{{"init_messages", report.init_messages},
                        {"init_item_announcements", report.init_item_announcements},
                        {"per_change_messages", report.per_change_messages},
                        {"computation_per_request", report.computation_per_request}};
}

OverheadReport overheads_from_json(const nlohmann::json& doc) {
  OverheadReport report;
  report.init_messages = doc.at("init_messages").get<std::int64_t>();
  report.init_item_announcements = doc.at("init_item_announcements").get<std::int64_t>();
  report.per_change_messages = doc.at("per_change_messages").get<std::int64_t>();
  report.computation_per_request = doc.at("computation_per_request").get<std::int64_t>();
  return report;
}

}  // namespace cachenet
