#include "cymo/jointeigen.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "cymo/error.hpp"

namespace cymo {

DirectEigenResult direct_joint_eigen(const CyclicTuple& t, const std::vector<cplx>& lambda,
                                     double tol) {
  require(static_cast<int>(lambda.size()) == t.n, ErrorCode::DimensionMismatch,
          "lambda has wrong number of variables");
  Matrix stack(static_cast<Eigen::Index>(t.n) * t.m, t.m);
  for (int i = 0; i < t.n; ++i)
    stack.middleRows(static_cast<Eigen::Index>(i) * t.m, t.m) =
        t.adjoint(t.T[i]) - lambda[i] * Matrix::Identity(t.m, t.m);
  Eigen::JacobiSVD<Matrix> svd(stack, Eigen::ComputeFullV);
  DirectEigenResult r;
  r.sigma_max = svd.singularValues()(0);
  r.sigma_min = svd.singularValues()(svd.singularValues().size() - 1);
  r.exists = r.sigma_min <= tol * std::max(r.sigma_max, 1e-300);
  r.eigenvector = svd.matrixV().col(t.m - 1);
  return r;
}

PsdCriterionResult psd_criterion(const MomentTable& mt, const std::vector<cplx>& lambda, double c,
                                 double tol) {
  require(static_cast<int>(lambda.size()) == mt.nvars(), ErrorCode::DimensionMismatch,
          "lambda has wrong number of variables");
  require(c >= 0.0, ErrorCode::InvalidArgument, "constant c must be >= 0");
  const GradedBasis& basis = mt.basis();
  int D = basis.size();
  Vector pw(D);
  for (int i = 0; i < D; ++i) {
    cplx p = 1.0;
    const MultiIndex& a = basis.at(i);
    for (int k = 0; k < basis.nvars(); ++k)
      for (int j = 0; j < a[k]; ++j) p *= lambda[k];
    pw(i) = p;
  }
  // M[row beta, col alpha] = c^2 m(alpha,beta) - conj(lambda)^alpha lambda^beta,
  // i.e. the rank-one part at (beta, alpha) is pw(beta) conj(pw(alpha)); v^* M v
  // = c^2 ||p(T)h||^2 - |p(conj lambda)|^2 for p with coefficient vector v.
  Matrix M = c * c * mt.table() - pw * pw.adjoint();
  M = ((M + M.adjoint()) * 0.5).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(M);
  PsdCriterionResult r;
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.scale = std::abs(c * c * mt.table().trace().real()) + pw.squaredNorm();
  r.psd = r.min_eigenvalue >= -tol * std::max(r.scale, 1e-300);
  return r;
}

DistanceResult distance_constant(const CyclicTuple& t, const std::vector<cplx>& lambda,
                                 double rank_tol) {
  require(static_cast<int>(lambda.size()) == t.n, ErrorCode::DimensionMismatch,
          "lambda has wrong number of variables");
  // Work in the 2-norm picture via G^(1/2).
  Eigen::SelfAdjointEigenSolver<Matrix> es(t.gram);
  require(es.info() == Eigen::Success && es.eigenvalues().minCoeff() > 0.0,
          ErrorCode::InvalidArgument, "gram must be positive definite");
  Matrix half = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
                es.eigenvectors().adjoint();

  Matrix cols(t.m, static_cast<Eigen::Index>(t.n) * t.m);
  for (int i = 0; i < t.n; ++i)
    cols.middleCols(static_cast<Eigen::Index>(i) * t.m, t.m) =
        half * (t.T[i] - std::conj(lambda[i]) * Matrix::Identity(t.m, t.m));
  Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeFullU);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int rank = 0;
  for (int j = 0; j < svd.singularValues().size(); ++j)
    if (svd.singularValues()(j) > rank_tol * std::max(smax, 1e-300)) ++rank;

  Vector hh = half * t.h;
  Vector res = hh;
  if (rank > 0) {
    Matrix U = svd.matrixU().leftCols(rank);
    res -= U * (U.adjoint() * hh);
  }
  DistanceResult r;
  r.distance = res.norm();
  double hn = hh.norm();
  if (r.distance > 1e-12 * std::max(hn, 1e-300)) r.c = 1.0 / r.distance;
  return r;
}

JointEigenReport joint_eigen_report(const CyclicTuple& t, const std::vector<cplx>& lambda,
                                    int degree, double tol) {
  JointEigenReport rep;
  rep.lambda = lambda;
  rep.degree = degree;

  DirectEigenResult dr = direct_joint_eigen(t, lambda, tol);
  rep.direct_exists = dr.exists;
  rep.sigma_min = dr.sigma_min;

  DistanceResult dist = distance_constant(t, lambda);
  rep.distance = dist.distance;
  rep.c = dist.c;

  MomentTable mt = moments(t, degree);
  rep.psd_c = dist.c.value_or(1.0);
  PsdCriterionResult psd = psd_criterion(mt, lambda, rep.psd_c, 1e-10);
  rep.psd_ok = psd.psd;

  // The three criteria assert the same thing: a joint eigenvalue of the adjoint
  // tuple exists iff h keeps a positive distance from the stacked ranges, iff
  // the moment form dominates point evaluation at some constant.
  rep.consistent = (rep.direct_exists == dist.c.has_value()) &&
                   (!rep.direct_exists || rep.psd_ok);
  return rep;
}

}  // namespace cymo
