#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cymo/multiindex.hpp"
#include "cymo/polynomial.hpp"

namespace cymo {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// A commuting tuple (T_1..T_n) on C^m with a distinguished vector h and a
// Hermitian positive definite gram weight.  The inner product is
//   <u, v> = v^adj * gram * u   (linear in the first slot).
struct CyclicTuple {
  int n = 0;  // number of variables
  int m = 0;  // space dimension
  std::vector<Matrix> T;
  Vector h;
  Matrix gram;  // identity unless a weighted model asks otherwise

  static CyclicTuple make(std::vector<Matrix> T, Vector h);
  static CyclicTuple make_weighted(std::vector<Matrix> T, Vector h, Matrix gram);

  cplx inner(const Vector& u, const Vector& v) const;  // <u,v>, linear in u
  double norm(const Vector& u) const;

  // Operator norm of T_i in the weighted inner product.
  double op_norm(int i) const;
  double op_norm_sum_sq() const;  // sum_i ||T_i||^2

  // Weighted operator norm of an arbitrary matrix on the same space.
  double op_norm_of(const Matrix& A) const;

  // G-adjoint of a matrix: A^dag = G^-1 A^* G.
  Matrix adjoint(const Matrix& A) const;

  // p(T) h for a polynomial in the tuple.
  Vector apply_poly(const Polynomial& p) const;

  // The matrix p(T) = sum_alpha c_alpha T^alpha.
  Matrix poly_matrix(const Polynomial& p) const;

  // T^alpha h.
  Vector power_apply(const MultiIndex& alpha) const;
};

struct ValidationReport {
  bool is_commuting = false;
  double max_commutator = 0.0;  // max_ij ||[T_i,T_j]||
  double tol_comm = 0.0;        // tolerance actually used
  bool gram_ok = false;
  double gram_min_eig = 0.0;
  int krylov_rank = -1;    // -1 when cyclicity was not checked
  bool is_cyclic = false;  // krylov_rank == m
};

// Commutator / gram / cyclicity diagnostics.  tol_comm <= 0 selects the default
// 1e-10 * max_i ||T_i||^2 (commutators of products scale quadratically).
ValidationReport validate(const CyclicTuple& t, double tol_comm = 0.0, bool check_cyclic = true);

// Hermitian table of mixed moments m(alpha,beta) = <T^alpha h, T^beta h> for
// |alpha|,|beta| <= d.  Stored over the graded lex basis with the row index
// running over beta, so the stored matrix is the (positive semidefinite) Gram
// matrix of the vectors T^alpha h.
class MomentTable {
 public:
  MomentTable() = default;
  MomentTable(int nvars, int degree);

  int nvars() const { return basis_.nvars(); }
  int degree() const { return basis_.degree(); }
  const GradedBasis& basis() const { return basis_; }

  cplx value(const MultiIndex& alpha, const MultiIndex& beta) const;
  void set(const MultiIndex& alpha, const MultiIndex& beta, cplx v);

  // Matrix with entry (row beta, col alpha) = m(alpha, beta).
  const Matrix& table() const { return mat_; }
  Matrix& table() { return mat_; }

  double herm_defect() const;     // max |m(alpha,beta) - conj(m(beta,alpha))|
  double min_eigenvalue() const;  // smallest eigenvalue of the symmetrized table

 private:
  GradedBasis basis_;
  Matrix mat_;
};

// Moment table of a tuple, Krylov vectors cached along the recursion
// T^(alpha+e_i) h = T_i (T^alpha h) on the lexicographically smallest nonzero
// coordinate.  Requires a commuting tuple (validated here, without the
// cyclicity check).
MomentTable moments(const CyclicTuple& t, int degree);

// Moment table of the translated tuple (T_1+lambda_1, ..., T_n+lambda_n) from
// the table alone:
//   m'(a,b) = sum_{g<=a, d<=b} C(a,g) C(b,d) lambda^(a-g) conj(lambda)^(b-d) m(g,d).
MomentTable translate_moments(const MomentTable& mt, const std::vector<cplx>& lambda);

// Moment table of the functional p-twist: m'(a,b) = m(a+gp, b+dp) summed over
// the coefficients of p, i.e. the moments of <p(T) T^a h, p(T) T^b h>.  Output
// degree is d - deg p.
MomentTable twist_by_polynomial(const MomentTable& mt, const Polynomial& p);

}  // namespace cymo
