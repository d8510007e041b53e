#include "cymo/fock.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "cymo/error.hpp"

namespace cymo {

FockOperator build_L(const MomentTable& mt) {
  FockOperator op;
  op.basis = mt.basis();
  int D = op.basis.size();
  Eigen::VectorXd s(D);
  for (int i = 0; i < D; ++i) s(i) = 1.0 / std::sqrt(mi_factorial(op.basis.at(i)));
  op.L = s.asDiagonal() * mt.table() * s.asDiagonal();
  // Symmetrize away the Hermitian roundoff so the eigensolver sees an exact
  // self-adjoint matrix.
  op.L = ((op.L + op.L.adjoint()) * 0.5).eval();
  return op;
}

EigenPolyDecomposition spectral_decompose(const FockOperator& op, double rank_tol) {
  EigenPolyDecomposition dec;
  int D = op.basis.size();
  Eigen::SelfAdjointEigenSolver<Matrix> es(op.L);
  require(es.info() == Eigen::Success, ErrorCode::NumericFailure, "eigendecomposition failed");
  dec.lambda_max = es.eigenvalues().size() ? std::max(0.0, es.eigenvalues().maxCoeff()) : 0.0;
  double cut = rank_tol * dec.lambda_max;
  for (int j = D - 1; j >= 0; --j) {  // Eigen sorts ascending; emit descending
    double lam = es.eigenvalues()(j);
    if (lam <= cut || lam <= 0.0) continue;
    Vector v = es.eigenvectors().col(j);
    // Phase: largest-magnitude coordinate made real positive.
    int imax = 0;
    for (int i = 1; i < D; ++i)
      if (std::abs(v(i)) > std::abs(v(imax))) imax = i;
    if (std::abs(v(imax)) > 0.0) v *= std::conj(v(imax)) / std::abs(v(imax));
    // f = sqrt(lambda) * sum_alpha v_alpha z^alpha / sqrt(alpha!)
    Polynomial f(op.basis.nvars());
    double sq = std::sqrt(lam);
    for (int i = 0; i < D; ++i) {
      if (v(i) == 0.0) continue;
      f.add_term(op.basis.at(i), sq * v(i) / std::sqrt(mi_factorial(op.basis.at(i))));
    }
    dec.lambda.push_back(lam);
    dec.f.push_back(std::move(f));
  }
  return dec;
}

ModelCheckReport model_basis_check(const CyclicTuple& t, const EigenPolyDecomposition& dec) {
  ModelCheckReport rep;
  rep.rank = dec.rank();
  int r = dec.rank();
  if (r == 0) return rep;

  std::vector<Vector> v(r);
  for (int j = 0; j < r; ++j) v[j] = t.apply_poly(dec.f[j]) / dec.lambda[j];

  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      cplx g = t.inner(v[j], v[k]);
      double defect = std::abs(g - (j == k ? cplx(1.0) : cplx(0.0)));
      rep.gram_residual = std::max(rep.gram_residual, defect);
    }

  for (int i = 0; i < t.n; ++i) {
    std::vector<Vector> Tv(r);
    for (int k = 0; k < r; ++k) Tv[k] = t.T[i] * v[k];
    for (int j = 0; j < r; ++j) {
      Polynomial dfj = dec.f[j].derivative(i);
      for (int k = 0; k < r; ++k) {
        // <T_i^adj v_j, v_k> = <v_j, T_i v_k>, no explicit adjoint needed.
        cplx lhs = t.inner(v[j], Tv[k]);
        cplx rhs = fock_inner(dfj, dec.f[k]) / dec.lambda[k];
        rep.intertwine_residual = std::max(rep.intertwine_residual, std::abs(lhs - rhs));
      }
    }
  }
  return rep;
}

cplx kernel_from_decomposition(const EigenPolyDecomposition& dec, const std::vector<cplx>& z,
                               const std::vector<cplx>& w) {
  cplx s = 0.0;
  for (const auto& f : dec.f) s += f.eval(z) * std::conj(f.eval(w));
  return s;
}

double shift_compression_min_eig(const FockOperator& op) {
  const GradedBasis& b = op.basis;
  int n = b.nvars();
  int d = b.degree();
  require(d >= 1, ErrorCode::DegreeTooSmall, "need degree >= 1 for the shift compression");
  int D = b.size();
  int Dm = basis_size(n, d - 1);  // graded order: the first Dm indices have degree <= d-1

  double min_eig = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    Matrix M = Matrix::Zero(D, Dm);
    for (int a = 0; a < Dm; ++a) {
      MultiIndex up = b.at(a);
      up[i] += 1;
      M(b.find(up), a) = std::sqrt(static_cast<double>(up[i]));
    }
    Matrix C = op.L.topLeftCorner(Dm, Dm) - M.adjoint() * op.L * M;
    C = ((C + C.adjoint()) * 0.5).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(C);
    require(es.info() == Eigen::Success, ErrorCode::NumericFailure, "eigendecomposition failed");
    min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
  }
  return min_eig;
}

}  // namespace cymo
