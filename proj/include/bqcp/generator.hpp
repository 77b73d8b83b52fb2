#pragma once

#include <cstdint>

#include "bqcp/instance.hpp"

namespace bqcp {

struct GenSpec {
  int n = 6;
  int m = 1;
  int rank = 2;  // inner dimension of every planted factor
  Sense sense = Sense::Pack;
  ObjectiveSpec::Kind objective = ObjectiveSpec::Kind::Linear;
  double coeff_lo = 1.0;
  double coeff_hi = 20.0;
  bool integer_coeffs = true;
  int num_vectors = 2;            // p for product / sum_ratio / quadratic rank
  int linear_rows = 0;            // optional Ax <= b rows
  bool constraint_linear_terms = false;  // additive q_i'x inside constraints
};

// Constraints are planted as Q = UU' with U drawn entrywise uniform on [0,1],
// so the exact factor is stored and cp-rank(Q) <= rank by construction. Equal
// seeds produce bit-identical instances.
ProblemInstance generate_instance(const GenSpec& spec, std::uint64_t seed);

}  // namespace bqcp
