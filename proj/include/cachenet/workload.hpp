#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cachenet/types.hpp"

namespace cachenet {

/// Content catalog: N items with positive byte sizes.
struct Catalog {
  VectorXd sizes;

  int n_items() const { return static_cast<int>(sizes.size()); }

  static Catalog uniform(int n_items, double bytes);
  static Catalog from_sizes(VectorXd sizes);
};

/// Rank-ordered request probabilities; sums to 1, non-increasing.
struct PopularityVector {
  VectorXd p;

  int n_items() const { return static_cast<int>(p.size()); }
};

/// Zipf-Mandelbrot popularity: p_i proportional to 1 / (i + q)^alpha.
PopularityVector zipf_popularity(int n, double alpha, double q = 0.0);

struct Request {
  NodeId client;
  ItemId item;
};

struct RequestStream {
  std::vector<Request> requests;
  std::uint64_t seed = 0;

  int size() const { return static_cast<int>(requests.size()); }
};

/// count i.i.d. draws: client uniform over `clients`, item by popularity.
RequestStream sample_requests(const PopularityVector& pop, const std::vector<NodeId>& clients,
                              int count, std::uint64_t seed);

/// CSV with header "step,client,item".
std::string stream_to_csv(const RequestStream& stream);
RequestStream stream_from_csv(std::string_view text);

}  // namespace cachenet
