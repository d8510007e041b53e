#include "cymo/tuple.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "cymo/error.hpp"

namespace cymo {

CyclicTuple CyclicTuple::make(std::vector<Matrix> T, Vector h) {
  require(!T.empty(), ErrorCode::InvalidArgument, "tuple needs at least one matrix");
  int m = static_cast<int>(T[0].rows());
  return make_weighted(std::move(T), std::move(h), Matrix::Identity(m, m));
}

CyclicTuple CyclicTuple::make_weighted(std::vector<Matrix> T, Vector h, Matrix gram) {
  CyclicTuple t;
  t.n = static_cast<int>(T.size());
  require(t.n >= 1, ErrorCode::InvalidArgument, "tuple needs at least one matrix");
  t.m = static_cast<int>(T[0].rows());
  for (const auto& Ti : T)
    require(Ti.rows() == t.m && Ti.cols() == t.m, ErrorCode::DimensionMismatch,
            "tuple matrices must be square with a common dimension");
  require(h.size() == t.m, ErrorCode::DimensionMismatch, "h has wrong dimension");
  require(gram.rows() == t.m && gram.cols() == t.m, ErrorCode::DimensionMismatch,
          "gram has wrong dimension");
  t.T = std::move(T);
  t.h = std::move(h);
  t.gram = std::move(gram);
  return t;
}

cplx CyclicTuple::inner(const Vector& u, const Vector& v) const {
  return (v.adjoint() * gram * u)(0, 0);
}

double CyclicTuple::norm(const Vector& u) const {
  return std::sqrt(std::max(0.0, inner(u, u).real()));
}

double CyclicTuple::op_norm(int i) const {
  require(i >= 0 && i < n, ErrorCode::InvalidArgument, "tuple index out of range");
  return op_norm_of(T[i]);
}

double CyclicTuple::op_norm_of(const Matrix& A) const {
  require(A.rows() == m && A.cols() == m, ErrorCode::DimensionMismatch,
          "matrix has wrong dimension");
  if (gram.isIdentity(1e-14)) return A.operatorNorm();
  // ||A||_G = ||G^(1/2) A G^(-1/2)||_2
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  require(es.info() == Eigen::Success, ErrorCode::NumericFailure, "gram eigendecomposition failed");
  Eigen::VectorXd ev = es.eigenvalues();
  require(ev.minCoeff() > 0.0, ErrorCode::InvalidArgument, "gram must be positive definite");
  Matrix half = es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
  Matrix halfinv =
      es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
  return (half * A * halfinv).operatorNorm();
}

double CyclicTuple::op_norm_sum_sq() const {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = op_norm(i);
    s += x * x;
  }
  return s;
}

Matrix CyclicTuple::adjoint(const Matrix& A) const {
  if (gram.isIdentity(1e-14)) return A.adjoint();
  return gram.ldlt().solve(A.adjoint() * gram);
}

Vector CyclicTuple::power_apply(const MultiIndex& alpha) const {
  require(static_cast<int>(alpha.size()) == n, ErrorCode::DimensionMismatch,
          "multi-index has wrong number of variables");
  Vector v = h;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < alpha[i]; ++k) v = T[i] * v;
  return v;
}

Vector CyclicTuple::apply_poly(const Polynomial& p) const {
  require(p.nvars() == n, ErrorCode::DimensionMismatch, "polynomial variable count mismatch");
  Vector v = Vector::Zero(m);
  for (const auto& [a, c] : p.terms()) {
    if (c == 0.0) continue;
    v += c * power_apply(a);
  }
  return v;
}

Matrix CyclicTuple::poly_matrix(const Polynomial& p) const {
  require(p.nvars() == n, ErrorCode::DimensionMismatch, "polynomial variable count mismatch");
  Matrix A = Matrix::Zero(m, m);
  for (const auto& [a, c] : p.terms()) {
    if (c == 0.0) continue;
    Matrix P = Matrix::Identity(m, m);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < a[i]; ++k) P = (T[i] * P).eval();
    A += c * P;
  }
  return A;
}

ValidationReport validate(const CyclicTuple& t, double tol_comm, bool check_cyclic) {
  ValidationReport r;
  double scale = 0.0;
  for (int i = 0; i < t.n; ++i) scale = std::max(scale, t.T[i].operatorNorm());
  if (tol_comm <= 0.0) tol_comm = 1e-10 * std::max(1e-30, scale * scale);
  r.tol_comm = tol_comm;

  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j) {
      double c = (t.T[i] * t.T[j] - t.T[j] * t.T[i]).operatorNorm();
      r.max_commutator = std::max(r.max_commutator, c);
    }
  r.is_commuting = r.max_commutator <= tol_comm;

  Eigen::SelfAdjointEigenSolver<Matrix> es(t.gram);
  double herm = (t.gram - t.gram.adjoint()).cwiseAbs().maxCoeff();
  r.gram_min_eig = es.eigenvalues().minCoeff();
  r.gram_ok = es.info() == Eigen::Success && r.gram_min_eig > 0.0 &&
              herm <= 1e-12 * std::max(1.0, t.gram.cwiseAbs().maxCoeff());

  if (check_cyclic) {
    // Krylov span of h under words in T up to length m-1 suffices: degrees are
    // capped by Cayley-Hamilton in the commuting algebra.
    auto idx = enumerate_upto(t.n, std::max(0, t.m - 1));
    Matrix K(t.m, idx.size());
    for (size_t j = 0; j < idx.size(); ++j) K.col(j) = t.power_apply(idx[j]);
    Eigen::JacobiSVD<Matrix> svd(K);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    double tol = 1e-10 * std::max(smax, 1e-300);
    r.krylov_rank = 0;
    for (int j = 0; j < svd.singularValues().size(); ++j)
      if (svd.singularValues()(j) > tol) ++r.krylov_rank;
    r.is_cyclic = r.krylov_rank == t.m;
  }
  return r;
}

MomentTable::MomentTable(int nvars, int degree) : basis_(nvars, degree) {
  mat_ = Matrix::Zero(basis_.size(), basis_.size());
}

cplx MomentTable::value(const MultiIndex& alpha, const MultiIndex& beta) const {
  int a = basis_.find(alpha), b = basis_.find(beta);
  require(a >= 0 && b >= 0, ErrorCode::InvalidArgument, "moment index out of table range");
  return mat_(b, a);
}

void MomentTable::set(const MultiIndex& alpha, const MultiIndex& beta, cplx v) {
  int a = basis_.find(alpha), b = basis_.find(beta);
  require(a >= 0 && b >= 0, ErrorCode::InvalidArgument, "moment index out of table range");
  mat_(b, a) = v;
}

double MomentTable::herm_defect() const { return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff(); }

double MomentTable::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(((mat_ + mat_.adjoint()) * 0.5).eval());
  return es.eigenvalues().minCoeff();
}

MomentTable moments(const CyclicTuple& t, int degree) {
  require(degree >= 0, ErrorCode::InvalidArgument, "degree must be >= 0");
  ValidationReport v = validate(t, 0.0, false);
  require(v.is_commuting, ErrorCode::NonCommuting,
          "tuple is not commuting within tolerance (max commutator " +
              std::to_string(v.max_commutator) + ")");
  require(v.gram_ok, ErrorCode::InvalidArgument, "gram weight is not Hermitian positive definite");

  MomentTable mt(t.n, degree);
  const GradedBasis& basis = mt.basis();
  int D = basis.size();

  // Krylov cache: T^alpha h built once per alpha by peeling the
  // lexicographically smallest nonzero coordinate.
  std::vector<Vector> K(D);
  K[0] = t.h;
  for (int j = 1; j < D; ++j) {
    const MultiIndex& a = basis.at(j);
    int i = 0;
    while (a[i] == 0) ++i;
    MultiIndex prev = a;
    prev[i] -= 1;
    K[j] = t.T[i] * K[basis.find(prev)];
  }

  Matrix KM(t.m, D);
  for (int j = 0; j < D; ++j) KM.col(j) = K[j];
  // Entry (row beta, col alpha) = <T^alpha h, T^beta h> = (T^beta h)^* G (T^alpha h).
  mt.table() = KM.adjoint() * t.gram * KM;
  return mt;
}

MomentTable translate_moments(const MomentTable& mt, const std::vector<cplx>& lambda) {
  int n = mt.nvars();
  require(static_cast<int>(lambda.size()) == n, ErrorCode::DimensionMismatch,
          "translation vector has wrong number of variables");
  MomentTable out(n, mt.degree());
  const GradedBasis& basis = mt.basis();

  // Precompute lambda^(a-g) for all pairs via powers per coordinate.
  auto powvec = [&](const MultiIndex& e, const std::vector<cplx>& base) {
    cplx p = 1.0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) p *= base[i];
    return p;
  };
  std::vector<cplx> lconj(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) lconj[i] = std::conj(lambda[i]);

  for (int ia = 0; ia < basis.size(); ++ia) {
    const MultiIndex& a = basis.at(ia);
    for (int ib = 0; ib < basis.size(); ++ib) {
      const MultiIndex& b = basis.at(ib);
      cplx s = 0.0;
      for (int ig = 0; ig < basis.size(); ++ig) {
        const MultiIndex& g = basis.at(ig);
        if (!mi_leq(g, a)) continue;
        double ca = mi_binomial(a, g);
        cplx la = powvec(mi_sub(a, g), lambda);
        for (int id = 0; id < basis.size(); ++id) {
          const MultiIndex& d = basis.at(id);
          if (!mi_leq(d, b)) continue;
          s += ca * mi_binomial(b, d) * la * powvec(mi_sub(b, d), lconj) * mt.table()(id, ig);
        }
      }
      out.table()(ib, ia) = s;
    }
  }
  return out;
}

MomentTable twist_by_polynomial(const MomentTable& mt, const Polynomial& p) {
  require(p.nvars() == mt.nvars(), ErrorCode::DimensionMismatch,
          "polynomial variable count mismatch");
  int dout = mt.degree() - p.degree();
  require(dout >= 0, ErrorCode::DegreeTooSmall,
          "twist degree overflow: table degree is smaller than deg p");
  MomentTable out(mt.nvars(), dout);
  const GradedBasis& ob = out.basis();
  for (int ia = 0; ia < ob.size(); ++ia) {
    for (int ib = 0; ib < ob.size(); ++ib) {
      cplx s = 0.0;
      for (const auto& [g, cg] : p.terms())
        for (const auto& [d, cd] : p.terms())
          s += cg * std::conj(cd) * mt.value(mi_add(ob.at(ia), g), mi_add(ob.at(ib), d));
      out.table()(ib, ia) = s;
    }
  }
  return out;
}

}  // namespace cymo
