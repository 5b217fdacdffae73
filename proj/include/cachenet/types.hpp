#pragma once

#include <Eigen/Dense>

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cachenet {

using NodeId = std::int32_t;
using ItemId = std::int32_t;

using Eigen::MatrixXd;
using Eigen::MatrixXi;
using Eigen::VectorXd;
using Eigen::VectorXi;

/// Dense 0/1 matrix; rows index items, columns index routers.
using BinaryMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Text input could not be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Invalid run configuration (bad parameters, roles, or input shapes).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A metric was requested on degenerate input (empty window, too few routers).
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive procedure declined because the instance is too large.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest representation that round-trips the exact double value.
inline std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace cachenet
