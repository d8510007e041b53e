#pragma once

#include <cstdint>

#include "cymo/fock.hpp"
#include "cymo/tuple.hpp"

namespace cymo {

// One generalized joint eigenspace of a commuting tuple.
struct SpectralBlock {
  std::vector<cplx> lambda;  // joint eigenvalue (one entry per variable)
  int dim = 0;
  Matrix P;      // spectral projection onto the block, along the others
  Matrix basis;  // orthonormal (2-norm) column basis of range(P)
};

struct SpectralDecomposition {
  std::vector<SpectralBlock> blocks;
  bool jordan = false;          // every projection G-self-adjoint within tolerance
  double selfadj_defect = 0.0;  // max_k ||P_k - P_k^dag|| / ||P_k||
  double offdiag_defect = 0.0;  // max_{k!=l} ||P_k P_l||
  double sum_defect = 0.0;      // ||sum_k P_k - I||
  double invariance_defect = 0.0;  // max_{k,i} ||[P_k, T_i]|| / max(1, ||T_i||)
  int retries = 0;                 // fresh random combinations consumed
};

struct JordanOptions {
  // Joint eigenvalue grouping radius; <= 0 selects 1e-2 * max_i ||T_i||.
  // Defective blocks scatter computed eigenvalues by roughly eps^(1/p) for
  // chain length p, so this cannot be made much tighter for blocks up to
  // dimension ~6 without splitting true blocks.
  double group_tol = -1.0;
  double selfadj_tol = 1e-8;  // threshold on ||P - P^dag|| / ||P||
  std::uint64_t seed = 42;
  int max_retries = 5;
};

// Splits C^m into the joint generalized eigenspaces of a commuting tuple.
// A seeded random combination A = sum c_i T_i provides a common Schur flag;
// the joint diagonal vectors (diag Q* T_i Q)_i are grouped with group_tol,
// and each block's subspace is refined as the common null space of the stacked
// powers (T_i - lambda_i)^dim, iterating the trace formula
// lambda_i = tr(P T_i P)/dim to convergence.  Grouping with an inter-cluster
// gap below 10 * group_tol retries with a fresh combination, then throws
// AmbiguousSpectrum.  The tuple is a Jordan tuple (unitary direct sum of
// lambda I + commuting nilpotents) iff every projection is self-adjoint in the
// gram inner product.
SpectralDecomposition joint_spectral_decompose(const CyclicTuple& t, const JordanOptions& opt = {});

// Lambda as a finite sum of point masses with holomorphic/antiholomorphic
// derivatives:  Lambda = sum_terms sum_k q_k(d) conj-q_k(dbar) delta_lambda,
// evaluated by applying the derivatives to z^alpha conj(z)^beta and then
// evaluating at lambda.
struct DistributionTerm {
  std::vector<cplx> lambda;
  std::vector<Polynomial> q;
};

struct DistributionRep {
  int nvars = 0;
  std::vector<DistributionTerm> terms;
};

// Requires a Jordan-classified decomposition (throws NotJordanInput otherwise).
// degree < 0 takes the degree each block actually needs (sum of nilpotency
// orders); an explicit degree below that throws DegreeTooSmall.  The q_k of a
// block are the coefficient-conjugates of the Fock eigenfunctions of the
// shifted (nilpotent) block, so eval_distribution reproduces the moments of
// the tuple exactly.
DistributionRep distribution_rep(const CyclicTuple& t, const SpectralDecomposition& dec,
                                 int degree = -1);

// Lambda(z^alpha conj(z)^beta).
cplx eval_distribution(const DistributionRep& rep, const MultiIndex& alpha,
                       const MultiIndex& beta);

// Human-readable form like "(1 + d1 db1 + 0.25 d1^2 db1^2) delta_(0)".
std::string render_distribution(const DistributionRep& rep);

}  // namespace cymo
