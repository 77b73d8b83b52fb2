#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqcp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Subset = std::vector<int>;  // item indices, sorted ascending

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Subset mask_to_subset(std::uint32_t mask) {
  Subset s;
  for (int k = 0; mask; ++k, mask >>= 1)
    if (mask & 1u) s.push_back(k);
  return s;
}

inline std::uint32_t subset_to_mask(const Subset& s) {
  std::uint32_t m = 0;
  for (int k : s) m |= (1u << k);
  return m;
}

inline Vector subset_to_indicator(const Subset& s, int n) {
  Vector x = Vector::Zero(n);
  for (int k : s) x[k] = 1.0;
  return x;
}

// An item subset together with its objective value and per-quadratic-constraint
// slack (capacity^2 - load for packing, load - capacity^2 for covering).
struct BinarySolution {
  Subset subset;
  double value = 0.0;
  std::vector<double> slacks;
  bool feasible = false;
};

}  // namespace bqcp
