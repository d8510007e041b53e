#pragma once

#include <cstdint>

#include "cymo/tuple.hpp"

namespace cymo {

// Finitely supported positive measure sum_j w_j delta_{a_j} on C^n.
struct AtomicMeasure {
  std::vector<std::vector<cplx>> atoms;
  std::vector<double> weights;
};

// Diagonal realization: T_i = diag(a_{j,i}), gram = diag(w_j), h = all-ones.
// Moments are exactly the measure moments sum_j w_j a_j^alpha conj(a_j)^beta.
// Duplicate atoms and nonpositive weights are rejected.
CyclicTuple atomic_tuple(const AtomicMeasure& mu);

// Closed-form measure moment, the oracle the tuple must reproduce.
cplx atomic_moment(const AtomicMeasure& mu, const MultiIndex& alpha, const MultiIndex& beta);

// Single Jordan cell lambda I + N on C^m (one variable, T e_k = e_{k+1} + lambda e_k),
// h = e_1.
CyclicTuple jordan_block_tuple(int m, cplx lambda = 0.0);

// The unit for convolution: all T_i = 0 on C^1, ||h|| = 1 (the point mass at 0).
CyclicTuple zero_tuple(int nvars = 1);

// The Varopoulos-Kaijser triple: three commuting 5x5 contractions with
// ||p(T)|| = 3 sqrt(3) > 5 = sup of |p| on the tridisc, witnessed at h = e_1.
struct VkData {
  CyclicTuple tuple;
  Polynomial p;  // z1^2+z2^2+z3^2 - 2 z1z2 - 2 z1z3 - 2 z2z3
  Polynomial q;  // z1^2+z2^2+z3^2 - z1z2 - z2z3 - z1z3
};
VkData varopoulos_kaijser();

// sup of |p| over the unit torus (boundary of the polydisc; max modulus makes
// this the polydisc sup).  Deterministic angle grid (grid^n points) plus
// seeded local refinement around the best grid point.
double polydisc_sup(const Polynomial& p, int grid = 64, int refine_rounds = 400,
                    std::uint64_t seed = 42);

// Diagonal moment models m(alpha,beta) = delta_{alpha,beta} * weight(alpha)
// for the classical radial function spaces.
struct RadialWeightModel {
  enum class Kind { DruryArveson, HardyBall, HtScale, HardyDisk };
  Kind kind = Kind::DruryArveson;
  int nvars = 1;
  double t = 1.0;      // HtScale exponent
  double radius = 1.0;  // HardyDisk radius

  static RadialWeightModel drury_arveson(int n);       // alpha!/|alpha|!
  static RadialWeightModel hardy_ball(int n);          // alpha!(n-1)!/(|alpha|+n-1)!
  static RadialWeightModel ht_scale(int n, double t);  // alpha! Gamma(t)/Gamma(|alpha|+t)
  static RadialWeightModel hardy_disk(double r);       // r^(2k), one variable

  double weight(const MultiIndex& alpha) const;
};

MomentTable radial_moment_table(const RadialWeightModel& model, int degree);

// Drury-Arveson moments through the sphere-measure pipeline: the radial factor
// product (|alpha|+1)...(|alpha|+n-1)/(n-1)! applied to the Hardy-ball moment
// delta_{alpha,beta} alpha!(n-1)!/(|alpha|+n-1)!.  Telescopes to
// delta_{alpha,beta} alpha!/|alpha|!.
double da_distribution_moment(int nvars, const MultiIndex& alpha, const MultiIndex& beta);

// Diagonal kernel sum_{|alpha|<=degree} base(alpha)/middle(alpha)^2 z^alpha conj(w)^alpha
// (the kernel of the middle space rewritten through the base space pairing).
struct WeightedKernelValue {
  cplx value = 0.0;
  bool converged = true;   // largest term of the top degree still shrinking
  double tail_ratio = 0.0;  // max term at degree d over max term at degree d-1
};
WeightedKernelValue weighted_model_kernel(const RadialWeightModel& base,
                                          const RadialWeightModel& middle,
                                          const std::vector<cplx>& z, const std::vector<cplx>& w,
                                          int degree);

}  // namespace cymo
