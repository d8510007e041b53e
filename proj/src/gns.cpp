#include "cymo/gns.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "cymo/error.hpp"

namespace cymo {

GnsResult gns_reconstruct(const MomentTable& mt, double null_tol) {
  int d = mt.degree();
  require(d >= 1, ErrorCode::DegreeTooSmall, "GNS needs a table of degree >= 1");
  int n = mt.nvars();
  GradedBasis inner(n, d - 1);  // the quotient models degrees <= d-1
  int D = inner.size();

  // Gram of the classes [z^alpha]; entry (row beta, col alpha) = m(alpha, beta).
  Matrix G = mt.table().topLeftCorner(D, D);
  G = ((G + G.adjoint()) * 0.5).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(G);
  require(es.info() == Eigen::Success, ErrorCode::NumericFailure,
          "Gram eigendecomposition failed");

  double trace = std::max(0.0, es.eigenvalues().sum());
  double cut = null_tol * std::max(trace, 1e-300);
  std::vector<int> keep;
  for (int j = 0; j < D; ++j)
    if (es.eigenvalues()(j) > cut) keep.push_back(j);
  require(!keep.empty(), ErrorCode::EmptyQuotient,
          "every direction of the moment Gram is null at this tolerance");

  int r = static_cast<int>(keep.size());
  Matrix V(D, r);
  Eigen::VectorXd g(r);
  for (int j = 0; j < r; ++j) {
    V.col(j) = es.eigenvectors().col(keep[j]);
    g(j) = es.eigenvalues()(keep[j]);
  }
  Eigen::VectorXd gs = g.cwiseSqrt();

  // Compressed multiplication: (M_i)[j,k] = <z_i q_k, q_j> over the
  // orthonormalized quotient basis q_j = sum_alpha V[alpha,j]/sqrt(g_j) z^alpha,
  // which only needs moments up to degree d.
  std::vector<Matrix> Ti(n);
  const GradedBasis& big = mt.basis();
  for (int i = 0; i < n; ++i) {
    // S_i[beta, alpha] = m(alpha + e_i, beta) over the inner basis.
    Matrix S(D, D);
    for (int a = 0; a < D; ++a) {
      MultiIndex shifted = inner.at(a);
      shifted[i] += 1;
      int col = big.find(shifted);
      require(col >= 0, ErrorCode::Internal, "shifted index missing from the table");
      S.col(a) = mt.table().col(col).head(D);
    }
    Ti[i] = gs.cwiseInverse().asDiagonal() * (V.adjoint() * S * V) *
            gs.cwiseInverse().asDiagonal();
  }

  // Class of 1: <1, q_j> = g_j conj(V[0,j]) / sqrt(g_j).
  Vector h(r);
  for (int j = 0; j < r; ++j) h(j) = gs(j) * std::conj(V(0, j));

  GnsResult out;
  out.tuple = CyclicTuple::make(std::move(Ti), std::move(h));
  out.nullity = D - r;

  // Round-trip residual computed directly: when the degree-(d-1) span is not
  // invariant the compression does not commute, which moments() would refuse;
  // here the defect is the diagnostic, not an input error.
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      out.commutation_defect =
          std::max(out.commutation_defect,
                   (out.tuple.T[i] * out.tuple.T[k] - out.tuple.T[k] * out.tuple.T[i])
                       .operatorNorm());
  std::vector<Vector> K(D);
  K[0] = out.tuple.h;
  for (int j = 1; j < D; ++j) {
    const MultiIndex& a = inner.at(j);
    int i = 0;
    while (a[i] == 0) ++i;
    MultiIndex prev = a;
    prev[i] -= 1;
    K[j] = out.tuple.T[i] * K[inner.find(prev)];
  }
  Matrix KM(r, D);
  for (int j = 0; j < D; ++j) KM.col(j) = K[j];
  out.moment_residual =
      (KM.adjoint() * KM - mt.table().topLeftCorner(D, D)).cwiseAbs().maxCoeff();
  return out;
}

MomentTable convolve_moments(const MomentTable& a, const MomentTable& b) {
  require(a.nvars() == b.nvars(), ErrorCode::DimensionMismatch,
          "convolution needs tables in the same number of variables");
  int d = std::min(a.degree(), b.degree());
  int n = a.nvars();
  MomentTable out(n, d);
  const GradedBasis& basis = out.basis();
  for (int ia = 0; ia < basis.size(); ++ia) {
    const MultiIndex& al = basis.at(ia);
    for (int ib = 0; ib < basis.size(); ++ib) {
      const MultiIndex& be = basis.at(ib);
      cplx s = 0.0;
      for (int ig = 0; ig <= ia; ++ig) {
        const MultiIndex& ga = basis.at(ig);
        if (!mi_leq(ga, al)) continue;
        double ca = mi_binomial(al, ga);
        MultiIndex ra = mi_sub(al, ga);
        for (int id = 0; id <= ib; ++id) {
          const MultiIndex& de = basis.at(id);
          if (!mi_leq(de, be)) continue;
          s += ca * mi_binomial(be, de) * a.value(ga, de) * b.value(ra, mi_sub(be, de));
        }
      }
      out.table()(ib, ia) = s;
    }
  }
  return out;
}

ConvolveResult convolve(const CyclicTuple& t, const CyclicTuple& s, int degree,
                        double null_tol) {
  require(t.n == s.n, ErrorCode::DimensionMismatch,
          "convolution needs tuples in the same number of variables");
  require(degree >= 1, ErrorCode::DegreeTooSmall, "convolution needs degree >= 1");
  MomentTable mr = convolve_moments(moments(t, degree), moments(s, degree));
  GnsResult gns = gns_reconstruct(mr, null_tol);

  ConvolveResult out;
  out.tuple = std::move(gns.tuple);
  out.nullity = gns.nullity;
  out.moment_residual = gns.moment_residual;
  out.commutation_defect = gns.commutation_defect;
  out.norm_bound_ok = true;
  for (int i = 0; i < t.n; ++i) {
    out.op_norms.push_back(out.tuple.op_norm(i));
    out.norm_bounds.push_back(t.op_norm(i) + s.op_norm(i));
    if (out.op_norms.back() > out.norm_bounds.back() + 1e-8) out.norm_bound_ok = false;
  }
  return out;
}

}  // namespace cymo
