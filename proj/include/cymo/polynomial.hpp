#pragma once

#include <complex>
#include <map>
#include <vector>

#include "cymo/multiindex.hpp"

namespace cymo {

using cplx = std::complex<double>;

// Sparse polynomial in n complex variables, monomial coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, cplx c);
  static Polynomial monomial(const MultiIndex& alpha, cplx c = 1.0);
  static Polynomial variable(int nvars, int i);  // z_i

  int nvars() const { return nvars_; }
  int degree() const;  // max |alpha| over nonzero terms; 0 for the zero polynomial
  bool is_zero(double eps = 0.0) const;
  const std::map<MultiIndex, cplx>& terms() const { return terms_; }

  cplx coeff(const MultiIndex& alpha) const;
  void set_coeff(const MultiIndex& alpha, cplx c);
  void add_term(const MultiIndex& alpha, cplx c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx s) const;

  // Coefficient-wise conjugate: sum conj(c_alpha) z^alpha.
  Polynomial coeff_conjugate() const;

  Polynomial derivative(int i) const;  // d/dz_i

  cplx eval(const std::vector<cplx>& z) const;

  // (q(d/dz) p) for q = *this.
  Polynomial apply_as_diff_op(const Polynomial& p) const;

  // Drop terms with |coeff| <= eps.
  Polynomial pruned(double eps = 0.0) const;

  std::string to_string(const char* var = "z") const;

 private:
  int nvars_ = 0;
  std::map<MultiIndex, cplx> terms_;
};

// Fock pairing <p, q> = sum_alpha alpha! p_alpha conj(q_alpha)
// (the inner product in which ||z^alpha||^2 = alpha!).
cplx fock_inner(const Polynomial& p, const Polynomial& q);

}  // namespace cymo
