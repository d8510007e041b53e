#pragma once

#include "cymo/tuple.hpp"

namespace cymo {

// Truncated kernel operator on the space of polynomials of degree <= d with
// ||z^alpha||^2 = alpha!.  In the orthonormal basis e_alpha = z^alpha/sqrt(alpha!)
// the matrix entry is  L[beta, alpha] = m(alpha, beta)/sqrt(alpha! beta!).
struct FockOperator {
  GradedBasis basis;
  Matrix L;

  double hs_norm() const { return L.norm(); }
  // a priori bound ||L||_HS^2 <= e^(2 sum ||T_i||^2) ||h||^4 for the source tuple
};

FockOperator build_L(const MomentTable& mt);

// Nonzero eigenpairs of L, eigenvectors rescaled to functions f_j with
// ||f_j||^2_Fock = lambda_j, so that L = sum_j f_j (x) f_j.
struct EigenPolyDecomposition {
  std::vector<double> lambda;  // descending, > rank_tol * lambda_max
  std::vector<Polynomial> f;
  double lambda_max = 0.0;  // largest eigenvalue before cutoff (0 for the zero operator)
  int rank() const { return static_cast<int>(lambda.size()); }
};

// rank_tol is relative: eigenvalues <= rank_tol * lambda_max are dropped.
// Phase fixed per eigenvector: largest-magnitude coordinate real positive.
EigenPolyDecomposition spectral_decompose(const FockOperator& L, double rank_tol = 1e-10);

// Diagnostics for the analytic model v_j = f_j(T)h / lambda_j:
//   gram:        <f_j(T)h, f_k(T)h> = delta_jk lambda_j^2
//   intertwine:  <T_i^adj v_j, v_k> = <d_i f_j, f_k>_Fock / lambda_k
struct ModelCheckReport {
  double gram_residual = 0.0;        // max |<v_j, v_k> - delta_jk|
  double intertwine_residual = 0.0;  // max over i,j,k of the defect
  int rank = 0;
};

ModelCheckReport model_basis_check(const CyclicTuple& t, const EigenPolyDecomposition& dec);

// Truncated two-variable kernel sum_j f_j(z) conj(f_j(w)).
cplx kernel_from_decomposition(const EigenPolyDecomposition& dec, const std::vector<cplx>& z,
                               const std::vector<cplx>& w);

// Contractivity witness: smallest eigenvalue over i of the degree-(d-1)
// compression of L - M_{z_i}^* L M_{z_i} (M_{z_i} = multiplication by z_i,
// entry sqrt(alpha_i + 1) from alpha to alpha + e_i in the normalized basis).
// Nonnegative when every T_i is a contraction and L has full-rank content at
// degree <= d.  A check, not an optimizer.
double shift_compression_min_eig(const FockOperator& op);

}  // namespace cymo
