#include "cachenet/workload.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cachenet/rng.hpp"

namespace cachenet {

Catalog Catalog::uniform(int n_items, double bytes) {
  if (n_items < 1) throw ConfigError("catalog needs at least one item");
  if (bytes <= 0.0) throw ConfigError("item size must be positive");
  Catalog cat;
  cat.sizes = VectorXd::Constant(n_items, bytes);
  return cat;
}

Catalog Catalog::from_sizes(VectorXd sizes) {
  if (sizes.size() < 1) throw ConfigError("catalog needs at least one item");
  if ((sizes.array() <= 0.0).any()) throw ConfigError("item sizes must be positive");
  Catalog cat;
  cat.sizes = std::move(sizes);
  return cat;
}

PopularityVector zipf_popularity(int n, double alpha, double q) {
  if (n < 1) throw ConfigError("popularity needs at least one item");
  if (alpha <= 0.0) throw ConfigError("zipf exponent must be positive");
  if (q < 0.0) throw ConfigError("zipf shift must be >= 0");
  PopularityVector pop;
  pop.p.resize(n);
  for (int i = 0; i < n; ++i)
    pop.p(i) = std::pow(static_cast<double>(i + 1) + q, -alpha);
  pop.p /= pop.p.sum();
  return pop;
}

RequestStream sample_requests(const PopularityVector& pop, const std::vector<NodeId>& clients,
                              int count, std::uint64_t seed) {
  if (clients.empty()) throw ConfigError("sample_requests: empty client set");
  if (count < 0) throw ConfigError("sample_requests: count must be >= 0");

  // Inverse-CDF sampling keeps the stream independent of any library
  // distribution implementation.
  std::vector<double> cdf(static_cast<std::size_t>(pop.n_items()));
  double acc = 0.0;
  for (int i = 0; i < pop.n_items(); ++i) {
    acc += pop.p(i);
    cdf[static_cast<std::size_t>(i)] = acc;
  }
  cdf.back() = 1.0;

  RequestStream stream;
  stream.seed = seed;
  stream.requests.reserve(static_cast<std::size_t>(count));
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    const NodeId client = clients[uniform_below(rng, clients.size())];
    const double u = uniform01(rng);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const ItemId item = static_cast<ItemId>(std::min<std::ptrdiff_t>(
        it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    stream.requests.push_back({client, item});
  }
  return stream;
}

std::string stream_to_csv(const RequestStream& stream) {
  std::string out = "step,client,item\n";
  for (int t = 0; t < stream.size(); ++t) {
    const Request& req = stream.requests[static_cast<std::size_t>(t)];
    out += std::to_string(t);
    out += ',';
    out += std::to_string(req.client);
    out += ',';
    out += std::to_string(req.item);
    out += '\n';
  }
  return out;
}

RequestStream stream_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "step,client,item")
    throw ParseError("missing stream header", 1);
  RequestStream stream;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    long step = 0, client = 0, item = 0;
    if (std::sscanf(line.c_str(), "%ld,%ld,%ld", &step, &client, &item) != 3)
      throw ParseError("expected step,client,item", line_no);
    stream.requests.push_back({static_cast<NodeId>(client), static_cast<ItemId>(item)});
  }
  return stream;
}

}  // namespace cachenet
