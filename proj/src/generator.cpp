#include "bqcp/generator.hpp"

#include <cmath>

#include "bqcp/rng.hpp"

namespace bqcp {

namespace {

Vector draw_vector(SplitMix& rng, int n, double lo, double hi, bool integers) {
  Vector v(n);
  for (int k = 0; k < n; ++k)
    v[k] = integers ? double(rng.uniform_int(int(lo), int(hi))) : rng.uniform(lo, hi);
  return v;
}

Matrix symmetrized_gram(const Matrix& U) {
  Matrix Q = U * U.transpose();
  for (int i = 0; i < Q.rows(); ++i)
    for (int j = 0; j < i; ++j) Q(i, j) = Q(j, i);
  return Q;
}

}  // namespace

ProblemInstance generate_instance(const GenSpec& spec, std::uint64_t seed) {
  if (spec.n < 1 || spec.m < 1 || spec.rank < 1)
    throw ValidationError("generator needs n >= 1, m >= 1, rank >= 1");

  SplitMix root(SplitMix::mix(seed ^ 0xbc9f1d34u));
  ProblemInstance inst;
  inst.n = spec.n;
  inst.sense = spec.sense;

  const int m = spec.sense == Sense::Cover ? 1 : spec.m;
  for (int i = 0; i < m; ++i) {
    SplitMix rng = root.split(100 + std::uint64_t(i));
    QuadraticConstraint c;
    Matrix U(spec.n, spec.rank);
    for (int k = 0; k < spec.n; ++k)
      for (int j = 0; j < spec.rank; ++j) U(k, j) = rng.next_double();
    c.Q = symmetrized_gram(U);
    c.factor = U;
    if (spec.constraint_linear_terms)
      c.linear = draw_vector(rng, spec.n, 0.0, 2.0, false);
    double full = c.Q.sum();
    if (c.linear.size() > 0) full += c.linear.sum();
    const double rho = spec.sense == Sense::Pack ? rng.uniform(0.2, 0.7)
                                                 : rng.uniform(0.1, 0.6);
    c.capacity = std::sqrt(rho * full);
    inst.constraints.push_back(std::move(c));
  }

  SplitMix orng = root.split(7);
  ObjectiveSpec obj;
  obj.kind = spec.objective;
  switch (spec.objective) {
    case ObjectiveSpec::Kind::Linear:
      obj.u = draw_vector(orng, spec.n, spec.coeff_lo, spec.coeff_hi,
                          spec.integer_coeffs);
      break;
    case ObjectiveSpec::Kind::Coverage: {
      const int universe = spec.n + spec.n / 2 + 1;
      obj.weights = draw_vector(orng, universe, std::max(1.0, spec.coeff_lo),
                                spec.coeff_hi, spec.integer_coeffs);
      for (int k = 0; k < spec.n; ++k) {
        const int count = orng.uniform_int(1, 3);
        std::vector<int> set;
        for (int t = 0; t < count; ++t) {
          int e = orng.uniform_int(0, universe - 1);
          bool dup = false;
          for (int prev : set) dup = dup || prev == e;
          if (!dup) set.push_back(e);
        }
        obj.covers.push_back(std::move(set));
      }
      break;
    }
    case ObjectiveSpec::Kind::Quadratic: {
      Matrix U(spec.n, spec.num_vectors);
      for (int k = 0; k < spec.n; ++k)
        for (int j = 0; j < spec.num_vectors; ++j) U(k, j) = orng.next_double();
      obj.Q = symmetrized_gram(U);
      obj.factor = U;
      obj.q = draw_vector(orng, spec.n, 0.0, spec.coeff_hi, spec.integer_coeffs);
      break;
    }
    case ObjectiveSpec::Kind::Product:
      for (int j = 0; j < spec.num_vectors; ++j)
        obj.vectors.push_back(draw_vector(orng, spec.n, 0.0, spec.coeff_hi,
                                          spec.integer_coeffs));
      break;
    case ObjectiveSpec::Kind::SumRatio:
      for (int j = 0; j < spec.num_vectors; ++j) {
        obj.numerators.push_back(draw_vector(orng, spec.n, 0.0, spec.coeff_hi,
                                             spec.integer_coeffs));
        obj.denominators.push_back(draw_vector(
            orng, spec.n, std::max(1.0, spec.coeff_lo), spec.coeff_hi,
            spec.integer_coeffs));
      }
      break;
  }
  inst.objective = std::move(obj);

  if (spec.linear_rows > 0) {
    SplitMix lrng = root.split(9);
    LinearSystem sys;
    sys.A.resize(spec.linear_rows, spec.n);
    sys.b.resize(spec.linear_rows);
    for (int i = 0; i < spec.linear_rows; ++i) {
      for (int k = 0; k < spec.n; ++k) sys.A(i, k) = lrng.next_double();
      sys.b[i] = lrng.uniform(0.3, 0.9) * sys.A.row(i).sum();
    }
    inst.linear = std::move(sys);
  }

  validate(inst);
  return inst;
}

}  // namespace bqcp
