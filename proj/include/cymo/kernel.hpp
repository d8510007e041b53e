#pragma once

#include <cstdint>
#include <string>

#include "cymo/tuple.hpp"

namespace cymo {

// Compact support candidate K in C^n: either a closed ball or a finite point set.
struct SupportSet {
  enum class Kind { Ball, Points };
  Kind kind = Kind::Ball;
  std::vector<cplx> center;  // Ball
  double radius = 0.0;       // Ball
  std::vector<std::vector<cplx>> points;

  static SupportSet ball(std::vector<cplx> center, double radius);
  static SupportSet point_set(std::vector<std::vector<cplx>> points);
  int nvars() const;
};

// H_K(z) = sup_{l in K} Re <l, z> with <l, z> = sum_i l_i conj(z_i).
// Ball: Re<c,z> + radius*|z|;  point set: max over the points.
double supporting_function(const SupportSet& K, const std::vector<cplx>& z);

// F(z, w) = <exp(<T,w>) h, exp(<T,z>) h>, where <T,w> = sum_i conj(w_i) T_i.
// Accurate for moderate arguments; throws NumericFailure if |F| overflows a double.
cplx eval_F(const CyclicTuple& t, const std::vector<cplx>& z, const std::vector<cplx>& w);

// log|F| and arg F with separate exponent bookkeeping (scaled squaring of the
// matrix exponential), usable far past the range of eval_F.  finite == false
// flags a catastrophic cancellation (inner product underflowed to exactly 0).
struct KernelLogValue {
  double log_abs = 0.0;
  double arg = 0.0;
  bool finite = true;
};
KernelLogValue eval_F_log(const CyclicTuple& t, const std::vector<cplx>& z,
                          const std::vector<cplx>& w);

// exp(A) h = e^(log_scale) * unit with ||unit||_2 = 1; never overflows.
struct ScaledVector {
  Vector unit;
  double log_scale = 0.0;
};
ScaledVector expm_apply_log(const Matrix& A, const Vector& h);

struct GrowthSampling {
  std::vector<double> radii = {10, 30, 100, 300, 1000};
  int directions = 32;  // per radius; even slots sample the diagonal w = z
  std::uint64_t seed = 42;
};

// Least-squares certificate for |F(z,w)| <= C (1+|z|+|w|)^N exp(H_K(z+w)).
// N_hat and logC_hat are fitted over samples with radius >= 10 (small radii
// pollute the polynomial factor); residual_max is over all samples, so
// residual_max <= 0 certifies the bound on every sample.
struct GrowthCertificate {
  double N_hat = 0.0;
  double logC_hat = 0.0;
  double residual_max = 0.0;
  int sample_count = 0;
  std::vector<double> radii;
  int directions = 0;
  std::uint64_t seed = 0;
  std::vector<double> per_radius_max_excess;  // max of log|F| - H_K at each radius
  std::vector<std::string> warnings;
};

GrowthCertificate certify_growth(const CyclicTuple& t, const SupportSet& K,
                                 const GrowthSampling& sampling = {});

// Rapid-decay probe: for each order N, logC_N = max over samples of
// log|F| + N log(1+|z|+|w|) - H_K(z+w), with a per-radius breakdown.  All rows
// finite and stable across radii is the smooth-density signature; matrix
// tuples (finitely many point masses with derivatives) always grow for N >= 1.
struct DecayRow {
  int N = 0;
  double logC = 0.0;
  std::vector<double> per_radius_logC;
  bool stable = false;  // top-half radii within 0.1 of each other
};
struct DecayReport {
  std::vector<DecayRow> rows;
  std::vector<double> radii;
  int directions = 0;
  std::uint64_t seed = 0;
};
DecayReport rapid_decay_check(const CyclicTuple& t, const SupportSet& K,
                              const std::vector<int>& orders, const GrowthSampling& sampling = {});

// Taylor coefficient table c with F = sum c(alpha,beta) z^alpha conj(w)^beta,
// c(alpha,beta) = m(beta,alpha)/(alpha! beta!).  Returned in the same
// row-beta/col-alpha container as the moment table.
MomentTable taylor_coefficients(const MomentTable& mt);

struct CoefficientPsdReport {
  double herm_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool psd = false;
};

// A coefficient table defines a positive kernel iff the graded-lex matrix
// [alpha! beta! c(alpha,beta)] is PSD; equivalently (diagonal congruence) the
// moment-normalized matrix.  Checks Hermitian symmetry and eigenvalue floor
// -tol * trace on that rescaled matrix.
CoefficientPsdReport coefficient_psd_check(const MomentTable& c, double tol = 1e-10);

}  // namespace cymo
