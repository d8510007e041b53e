#pragma once

#include "cymo/tuple.hpp"

namespace cymo {

struct GnsResult {
  CyclicTuple tuple;     // reconstructed on the quotient, identity gram
  int nullity = 0;       // directions of the degree-(d-1) Gram discarded as null
  double moment_residual = 0.0;  // max |moments(tuple, d-1) - input| entrywise
  double commutation_defect = 0.0;  // max ||[R_i, R_j]|| of the compression
};

// Finite GNS quotient of a degree-d moment table: orthonormalizes the classes
// [z^alpha], |alpha| <= d-1, against the Gram m(alpha,beta), discarding
// directions with eigenvalue <= null_tol * trace, and compresses multiplication
// by z_i onto the quotient (the degree-d band of the table supplies
// <z_i z^alpha, z^beta>).  h is the class of 1.  Moments reproduce the input
// exactly up to degree d-1; the compression is lossy beyond.
//
// The result is P M_{z_i} P, not M_{z_i} on an invariant subspace: when the
// degree-(d-1) classes do not exhaust the underlying space, the compressed
// operators need not commute.  commutation_defect reports how far off they
// are instead of refusing the reconstruction.
// Throws EmptyQuotient when every direction is null.
GnsResult gns_reconstruct(const MomentTable& mt, double null_tol = 1e-10);

// Moment table of the convolution product:
//   m_R(a,b) = sum_{g<=a, d<=b} C(a,g) C(b,d) m_T(g,d) m_S(a-g, b-d).
// Commutative, with unit delta_0 (the zero tuple with ||h|| = 1); on the kernel
// side this is F_R = F_T * F_S.
MomentTable convolve_moments(const MomentTable& a, const MomentTable& b);

struct ConvolveResult {
  CyclicTuple tuple;
  int nullity = 0;
  double moment_residual = 0.0;
  double commutation_defect = 0.0;
  std::vector<double> op_norms;        // ||R_i|| of the reconstruction
  std::vector<double> norm_bounds;     // ||T_i|| + ||S_i||
  bool norm_bound_ok = false;          // op_norms <= norm_bounds + 1e-8
};

// moments -> convolve -> GNS, with the norm bound ||R_i|| <= ||T_i|| + ||S_i||
// checked on the result (the reconstruction is a compression, so the bound
// holds at every degree).
ConvolveResult convolve(const CyclicTuple& t, const CyclicTuple& s, int degree,
                        double null_tol = 1e-10);

}  // namespace cymo
