#pragma once

#include <optional>

#include "cymo/tuple.hpp"

namespace cymo {

// Criterion (direct): lambda is a joint eigenvalue of the adjoint tuple iff the
// stacked rows (T_i^adj - lambda_i I) have a common kernel vector.  exists is
// sigma_min <= tol * sigma_max of the stack; the eigenvector is the
// corresponding right singular vector.
struct DirectEigenResult {
  bool exists = false;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  Vector eigenvector;
};
DirectEigenResult direct_joint_eigen(const CyclicTuple& t, const std::vector<cplx>& lambda,
                                     double tol = 1e-8);

// Criterion (moment PSD): the graded-lex matrix
//   M[alpha, beta] = c^2 m(alpha, beta) - conj(lambda)^alpha lambda^beta
// is PSD iff |p(lambda)| <= c ||p(T) h|| for all polynomials of degree <= d.
// PSD means min eigenvalue >= -tol * scale, scale = c^2 tr m + sum |lambda^alpha|^2.
struct PsdCriterionResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double scale = 0.0;
};
PsdCriterionResult psd_criterion(const MomentTable& mt, const std::vector<cplx>& lambda, double c,
                                 double tol = 1e-10);

// Criterion (distance): dist(h, span of the ranges of (T_i - conj(lambda_i) I))
// in the gram inner product.  Positive distance is equivalent to lambda being a
// joint eigenvalue of the adjoint tuple, and the best constant is c = 1/dist.
// c is empty when the distance is zero (the constant is unbounded).
struct DistanceResult {
  double distance = 0.0;
  std::optional<double> c;
};
DistanceResult distance_constant(const CyclicTuple& t, const std::vector<cplx>& lambda,
                                 double rank_tol = 1e-10);

// All three criteria side by side, with a cross-check that they agree.
struct JointEigenReport {
  std::vector<cplx> lambda;
  int degree = 0;
  bool direct_exists = false;
  double sigma_min = 0.0;
  double distance = 0.0;
  std::optional<double> c;
  bool psd_ok = false;   // at the distance constant (or c = 1 when unbounded)
  double psd_c = 0.0;    // the constant the PSD test used
  bool consistent = false;
};
JointEigenReport joint_eigen_report(const CyclicTuple& t, const std::vector<cplx>& lambda,
                                    int degree, double tol = 1e-8);

}  // namespace cymo
