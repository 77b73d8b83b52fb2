#include "bqcp/instance.hpp"

#include <algorithm>
#include <cmath>

namespace bqcp {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

void check_nonneg(const Matrix& m, const std::string& what) {
  require((m.array() >= 0.0).all(), what + " must be entrywise nonnegative");
}

void check_nonneg(const Vector& v, const std::string& what) {
  require((v.array() >= 0.0).all(), what + " must be entrywise nonnegative");
}

}  // namespace

void validate(const ProblemInstance& inst) {
  const int n = inst.n;
  require(n >= 0, "n must be nonnegative");

  switch (inst.objective.kind) {
    case ObjectiveSpec::Kind::Linear:
      require(inst.objective.u.size() == n, "linear objective size mismatch");
      check_nonneg(inst.objective.u, "objective u");
      break;
    case ObjectiveSpec::Kind::Coverage: {
      check_nonneg(inst.objective.weights, "coverage weights");
      require(int(inst.objective.covers.size()) == n, "coverage sets size mismatch");
      const int universe = int(inst.objective.weights.size());
      for (const auto& set : inst.objective.covers)
        for (int e : set)
          require(e >= 0 && e < universe, "coverage element out of range");
      break;
    }
    case ObjectiveSpec::Kind::Quadratic: {
      const Matrix& Q = inst.objective.Q;
      require(Q.rows() == n && Q.cols() == n, "objective Q dimension mismatch");
      require(Q == Q.transpose(), "objective Q must be symmetric");
      check_nonneg(Q, "objective Q");
      require(inst.objective.q.size() == n, "objective q size mismatch");
      check_nonneg(inst.objective.q, "objective q");
      if (inst.objective.factor) {
        const Matrix& U = *inst.objective.factor;
        require(U.rows() == n, "objective factor row count mismatch");
        check_nonneg(U, "objective factor");
      }
      break;
    }
    case ObjectiveSpec::Kind::Product:
      require(!inst.objective.vectors.empty(), "product objective needs vectors");
      for (const auto& a : inst.objective.vectors) {
        require(a.size() == n, "product vector size mismatch");
        check_nonneg(a, "product vector");
      }
      break;
    case ObjectiveSpec::Kind::SumRatio: {
      const auto& num = inst.objective.numerators;
      const auto& den = inst.objective.denominators;
      require(!num.empty() && num.size() == den.size(),
              "sum_ratio needs matching numerators and denominators");
      for (const auto& a : num) {
        require(a.size() == n, "sum_ratio numerator size mismatch");
        check_nonneg(a, "sum_ratio numerator");
      }
      for (const auto& b : den) {
        require(b.size() == n, "sum_ratio denominator size mismatch");
        check_nonneg(b, "sum_ratio denominator");
        require((b.array() > 0.0).any(),
                "sum_ratio denominator needs a strictly positive entry");
      }
      break;
    }
  }

  if (inst.sense == Sense::Cover) {
    require(inst.constraints.size() == 1, "cover instances take exactly one constraint");
    require(inst.objective.kind == ObjectiveSpec::Kind::Linear,
            "cover instances take a linear objective");
  }

  for (size_t i = 0; i < inst.constraints.size(); ++i) {
    const auto& c = inst.constraints[i];
    const std::string tag = "constraint " + std::to_string(i);
    require(c.Q.rows() == n && c.Q.cols() == n, tag + ": Q dimension mismatch");
    require(c.Q == c.Q.transpose(), tag + ": Q must be symmetric");
    check_nonneg(c.Q, tag + ": Q");
    require(c.capacity >= 0.0, tag + ": capacity must be nonnegative");
    for (int k = 0; k < n; ++k) {
      if (c.Q(k, k) == 0.0) {
        require(c.Q.row(k).isZero(0.0),
                tag + ": zero diagonal entry requires a zero row");
      }
    }
    if (c.linear.size() > 0) {
      require(c.linear.size() == n, tag + ": linear term size mismatch");
      check_nonneg(c.linear, tag + ": linear term");
    }
    if (c.factor) {
      const Matrix& U = *c.factor;
      require(U.rows() == n, tag + ": factor row count mismatch");
      check_nonneg(U, tag + ": factor");
      const double resid = (U * U.transpose() - c.Q).cwiseAbs().maxCoeff();
      require(resid <= c.residual_tol,
              tag + ": factor residual exceeds declared tolerance");
    }
  }

  if (inst.linear) {
    require(inst.linear->A.cols() == n, "linear system column count mismatch");
    require(inst.linear->A.rows() == inst.linear->b.size(),
            "linear system row count mismatch");
    check_nonneg(inst.linear->A, "A");
    check_nonneg(inst.linear->b, "b");
  }
}

double evaluate_objective(const ObjectiveSpec& obj, const Subset& s, int n) {
  (void)n;
  switch (obj.kind) {
    case ObjectiveSpec::Kind::Linear: {
      double v = 0.0;
      for (int k : s) v += obj.u[k];
      return v;
    }
    case ObjectiveSpec::Kind::Coverage: {
      std::vector<char> covered(obj.weights.size(), 0);
      for (int k : s)
        for (int e : obj.covers[k]) covered[e] = 1;
      double v = 0.0;
      for (size_t e = 0; e < covered.size(); ++e)
        if (covered[e]) v += obj.weights[int(e)];
      return v;
    }
    case ObjectiveSpec::Kind::Quadratic: {
      double v = 0.0;
      for (int i : s) {
        v += obj.q[i];
        for (int j : s) v += obj.Q(i, j);
      }
      return v;
    }
    case ObjectiveSpec::Kind::Product: {
      double v = 1.0;
      for (const auto& a : obj.vectors) {
        double t = 0.0;
        for (int k : s) t += a[k];
        v *= t;
      }
      return v;
    }
    case ObjectiveSpec::Kind::SumRatio: {
      double v = 0.0;
      for (size_t j = 0; j < obj.numerators.size(); ++j) {
        double num = 0.0, den = 0.0;
        for (int k : s) {
          num += obj.numerators[j][k];
          den += obj.denominators[j][k];
        }
        if (den <= 0.0) throw DomainError("sum_ratio denominator vanished");
        v += num / den;
      }
      return v;
    }
  }
  return 0.0;
}

double constraint_load(const QuadraticConstraint& c, const Subset& s) {
  double v = 0.0;
  for (int i : s) {
    for (int j : s) v += c.Q(i, j);
    if (c.linear.size() > 0) v += c.linear[i];
  }
  return v;
}

BinarySolution evaluate_solution(const ProblemInstance& inst, const Subset& s) {
  BinarySolution sol;
  sol.subset = s;
  sol.value = evaluate_objective(inst.objective, s, inst.n);
  sol.feasible = true;
  for (const auto& c : inst.constraints) {
    const double load = constraint_load(c, s);
    const double slack =
        inst.sense == Sense::Pack ? c.rhs() - load : load - c.rhs();
    sol.slacks.push_back(slack);
    if (slack < -1e-9 * std::max(1.0, c.rhs())) sol.feasible = false;
  }
  if (inst.linear) {
    const Vector x = subset_to_indicator(s, inst.n);
    const Vector r = inst.linear->b - inst.linear->A * x;
    for (int i = 0; i < r.size(); ++i)
      if (r[i] < -1e-9 * std::max(1.0, inst.linear->b[i])) sol.feasible = false;
  }
  return sol;
}

bool subset_feasible(const ProblemInstance& inst, const Subset& s) {
  return evaluate_solution(inst, s).feasible;
}

}  // namespace bqcp
