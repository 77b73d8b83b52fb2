#pragma once

#include <optional>
#include <vector>

#include "bqcp/types.hpp"

namespace bqcp {

enum class Sense { Pack, Cover };

struct ObjectiveSpec {
  enum class Kind { Linear, Coverage, Quadratic, Product, SumRatio };
  Kind kind = Kind::Linear;

  // linear
  Vector u;
  // coverage: universe weights plus, per item, the covered universe elements
  Vector weights;
  std::vector<std::vector<int>> covers;
  // quadratic x'Qx + q'x, with an optional nonnegative factor of Q
  Matrix Q;
  Vector q;
  std::optional<Matrix> factor;
  // product of linear forms
  std::vector<Vector> vectors;
  // sum of ratios
  std::vector<Vector> numerators;
  std::vector<Vector> denominators;
};

struct QuadraticConstraint {
  Matrix Q;                      // n x n, symmetric, entrywise >= 0
  double capacity = 0.0;         // C; the constraint compares against C^2
  std::optional<Matrix> factor;  // U with UU' ~= Q, entrywise >= 0
  Vector linear;                 // optional additive q'x term (zero when absent)
  double residual_tol = 1e-8;    // declared bound on ||UU' - Q||_inf

  double rhs() const { return capacity * capacity; }
};

struct LinearSystem {
  Matrix A;  // d x n, entrywise >= 0
  Vector b;  // d, entrywise >= 0
};

struct ProblemInstance {
  int n = 0;
  Sense sense = Sense::Pack;
  ObjectiveSpec objective;
  std::vector<QuadraticConstraint> constraints;
  std::optional<LinearSystem> linear;
};

// Throws ValidationError when any structural invariant is violated.
void validate(const ProblemInstance& inst);

// Exact evaluation of the objective on a subset. Throws DomainError when a
// sum-of-ratios denominator vanishes.
double evaluate_objective(const ObjectiveSpec& obj, const Subset& s, int n);

// Quadratic load x'Qx + q'x of a subset under one constraint.
double constraint_load(const QuadraticConstraint& c, const Subset& s);

// Value, slacks and the feasibility flag for a subset. Linear side
// constraints participate in the flag but not in the slack vector.
BinarySolution evaluate_solution(const ProblemInstance& inst, const Subset& s);

// True when the subset satisfies every constraint of the instance within the
// stated tolerance (1e-9 relative on each right-hand side).
bool subset_feasible(const ProblemInstance& inst, const Subset& s);

}  // namespace bqcp
