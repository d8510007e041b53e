#include "cymo/jordan.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "cymo/error.hpp"

namespace cymo {

namespace {

double joint_dist(const std::vector<Vector>& diags, int k, int l) {
  double s = 0.0;
  for (const Vector& d : diags) s += std::norm(d(k) - d(l));
  return std::sqrt(s);
}

struct Clustering {
  std::vector<std::vector<int>> groups;
  double min_intergroup = std::numeric_limits<double>::infinity();
};

Clustering cluster_positions(const std::vector<Vector>& diags, int m, double tol) {
  // Union-find merge at joint distance <= tol.
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l)
      if (joint_dist(diags, k, l) <= tol) parent[find(k)] = find(l);

  std::map<int, std::vector<int>> by_root;
  for (int k = 0; k < m; ++k) by_root[find(k)].push_back(k);
  Clustering c;
  for (auto& [root, members] : by_root) c.groups.push_back(std::move(members));
  for (size_t a = 0; a < c.groups.size(); ++a)
    for (size_t b = a + 1; b < c.groups.size(); ++b)
      for (int k : c.groups[a])
        for (int l : c.groups[b])
          c.min_intergroup = std::min(c.min_intergroup, joint_dist(diags, k, l));
  return c;
}

Matrix matrix_power(const Matrix& A, int p) {
  Matrix R = Matrix::Identity(A.rows(), A.cols());
  for (int k = 0; k < p; ++k) R = (R * A).eval();
  return R;
}

}  // namespace

SpectralDecomposition joint_spectral_decompose(const CyclicTuple& t, const JordanOptions& opt) {
  ValidationReport vr = validate(t, 0.0, false);
  require(vr.is_commuting, ErrorCode::NonCommuting,
          "tuple is not commuting within tolerance (max commutator " +
              std::to_string(vr.max_commutator) + ")");
  require(vr.gram_ok, ErrorCode::InvalidArgument, "gram weight is not Hermitian positive definite");

  int m = t.m, n = t.n;
  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, t.T[i].operatorNorm());
  double group_tol = opt.group_tol > 0.0 ? opt.group_tol : 1e-2 * std::max(scale, 1e-14);

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> g(0.0, 1.0);

  SpectralDecomposition dec;
  Clustering clusters;
  bool ok = false;
  for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
    dec.retries = attempt;
    // Random combination; its Schur flag orders the joint diagonal.
    Vector c(n);
    double cn = 0.0;
    for (int i = 0; i < n; ++i) {
      c(i) = cplx(g(rng), g(rng));
      cn += std::norm(c(i));
    }
    c /= std::sqrt(cn);
    Matrix A = Matrix::Zero(m, m);
    for (int i = 0; i < n; ++i) A += c(i) * t.T[i];

    Eigen::ComplexSchur<Matrix> schur(A, true);
    if (schur.info() != Eigen::Success) continue;
    const Matrix& Q = schur.matrixU();

    std::vector<Vector> diags(n);
    for (int i = 0; i < n; ++i) diags[i] = (Q.adjoint() * t.T[i] * Q).diagonal();

    clusters = cluster_positions(diags, m, group_tol);
    if (clusters.min_intergroup < 10.0 * group_tol) continue;  // ambiguous; fresh c

    // Initial joint eigenvalue estimates: cluster means of the joint diagonal.
    dec.blocks.clear();
    for (const auto& members : clusters.groups) {
      SpectralBlock blk;
      blk.dim = static_cast<int>(members.size());
      blk.lambda.assign(n, 0.0);
      for (int i = 0; i < n; ++i) {
        cplx s = 0.0;
        for (int k : members) s += diags[i](k);
        blk.lambda[i] = s / static_cast<double>(blk.dim);
      }
      dec.blocks.push_back(std::move(blk));
    }
    ok = true;
    break;
  }
  require(ok, ErrorCode::AmbiguousSpectrum,
          "joint eigenvalue grouping stayed ambiguous after " +
              std::to_string(opt.max_retries + 1) + " random combinations");

  // Refine each block: null space of the stacked powers (T_i - lambda_i)^dim,
  // then the trace of the restriction re-estimates lambda.  Two to three
  // passes reach machine precision (the subspace error feeds back
  // quadratically through the trace formula).
  for (auto& blk : dec.blocks) {
    for (int pass = 0; pass < 4; ++pass) {
      Matrix stack(static_cast<Eigen::Index>(n) * m, m);
      for (int i = 0; i < n; ++i) {
        Matrix shifted = t.T[i] - blk.lambda[i] * Matrix::Identity(m, m);
        stack.middleRows(static_cast<Eigen::Index>(i) * m, m) = matrix_power(shifted, blk.dim);
      }
      Eigen::JacobiSVD<Matrix> svd(stack, Eigen::ComputeFullV);
      blk.basis = svd.matrixV().rightCols(blk.dim);

      double shift = 0.0;
      for (int i = 0; i < n; ++i) {
        cplx lam = (blk.basis.adjoint() * t.T[i] * blk.basis).trace() / double(blk.dim);
        shift = std::max(shift, std::abs(lam - blk.lambda[i]));
        blk.lambda[i] = lam;
      }
      if (shift < 1e-13 * std::max(scale, 1.0)) break;
    }
  }

  // Projections P_k = S E_k S^-1 for S = [basis_1 ... basis_K].
  int K = static_cast<int>(dec.blocks.size());
  Matrix S(m, m);
  int col = 0;
  for (const auto& blk : dec.blocks) {
    S.middleCols(col, blk.dim) = blk.basis;
    col += blk.dim;
  }
  Eigen::FullPivLU<Matrix> lu(S);
  require(lu.isInvertible(), ErrorCode::NumericFailure,
          "joint eigenspace bases are numerically dependent");
  Matrix Sinv = lu.inverse();
  col = 0;
  for (auto& blk : dec.blocks) {
    blk.P = S.middleCols(col, blk.dim) * Sinv.middleRows(col, blk.dim);
    col += blk.dim;
  }

  // Diagnostics.
  Matrix sum = Matrix::Zero(m, m);
  for (const auto& blk : dec.blocks) sum += blk.P;
  dec.sum_defect = (sum - Matrix::Identity(m, m)).operatorNorm();
  for (int k = 0; k < K; ++k) {
    const Matrix& P = dec.blocks[k].P;
    double pn = std::max(P.operatorNorm(), 1e-300);
    dec.selfadj_defect = std::max(dec.selfadj_defect, (P - t.adjoint(P)).operatorNorm() / pn);
    for (int l = 0; l < K; ++l)
      if (l != k)
        dec.offdiag_defect = std::max(dec.offdiag_defect, (P * dec.blocks[l].P).operatorNorm());
    for (int i = 0; i < n; ++i)
      dec.invariance_defect =
          std::max(dec.invariance_defect, (P * t.T[i] - t.T[i] * P).operatorNorm() /
                                              std::max(1.0, t.T[i].operatorNorm()));
  }
  dec.jordan = dec.selfadj_defect <= opt.selfadj_tol;
  return dec;
}

DistributionRep distribution_rep(const CyclicTuple& t, const SpectralDecomposition& dec,
                                 int degree) {
  require(dec.jordan, ErrorCode::NotJordanInput,
          "distribution form needs a Jordan tuple (projections are not self-adjoint; defect " +
              std::to_string(dec.selfadj_defect) + ")");
  DistributionRep rep;
  rep.nvars = t.n;

  for (const auto& blk : dec.blocks) {
    // G-orthonormal basis of the block: basis * chol(basis^* G basis)^-1.
    Matrix gram_b = blk.basis.adjoint() * t.gram * blk.basis;
    Eigen::LLT<Matrix> llt(((gram_b + gram_b.adjoint()) * 0.5).eval());
    require(llt.info() == Eigen::Success, ErrorCode::NumericFailure,
            "block gram is not positive definite");
    Matrix W = llt.matrixU().solve<Eigen::OnTheRight>(blk.basis);

    // Restriction in the W coordinates; shift off the joint eigenvalue.
    std::vector<Matrix> N(t.n);
    for (int i = 0; i < t.n; ++i)
      N[i] = W.adjoint() * t.gram * t.T[i] * W -
             blk.lambda[i] * Matrix::Identity(blk.dim, blk.dim);

    // Nilpotency order per coordinate, and the degree the block needs.
    int needed = 0;
    for (int i = 0; i < t.n; ++i) {
      int p = -1;
      Matrix pw = Matrix::Identity(blk.dim, blk.dim);
      double nn = std::max(1.0, N[i].norm());
      for (int k = 0; k <= blk.dim; ++k) {
        if (pw.norm() <= 1e-10 * std::pow(nn, k)) {
          p = k;
          break;
        }
        pw = (pw * N[i]).eval();
      }
      require(p >= 0, ErrorCode::NotJordanInput,
              "block restriction is not nilpotent within 1e-10 after the eigenvalue shift");
      needed += std::max(0, p - 1);
    }
    if (degree >= 0)
      require(degree >= needed, ErrorCode::DegreeTooSmall,
              "degree " + std::to_string(degree) + " is below the block nilpotency sum " +
                  std::to_string(needed));

    Vector hk = W.adjoint() * t.gram * t.h;
    if (hk.norm() == 0.0) continue;  // block invisible to h
    CyclicTuple blkt = CyclicTuple::make(N, hk);
    MomentTable mt = moments(blkt, needed);
    EigenPolyDecomposition fd = spectral_decompose(build_L(mt), 1e-12);

    DistributionTerm term;
    term.lambda = blk.lambda;
    for (const auto& f : fd.f) term.q.push_back(f.coeff_conjugate());
    if (!term.q.empty()) rep.terms.push_back(std::move(term));
  }
  return rep;
}

cplx eval_distribution(const DistributionRep& rep, const MultiIndex& alpha,
                       const MultiIndex& beta) {
  require(static_cast<int>(alpha.size()) == rep.nvars &&
              static_cast<int>(beta.size()) == rep.nvars,
          ErrorCode::DimensionMismatch, "multi-index has wrong number of variables");
  cplx total = 0.0;
  for (const auto& term : rep.terms) {
    for (const auto& q : term.q) {
      cplx za = q.apply_as_diff_op(Polynomial::monomial(alpha)).eval(term.lambda);
      cplx zb = q.apply_as_diff_op(Polynomial::monomial(beta)).eval(term.lambda);
      total += za * std::conj(zb);
    }
  }
  return total;
}

std::string render_distribution(const DistributionRep& rep) {
  std::ostringstream os;
  bool first_term = true;
  for (const auto& term : rep.terms) {
    if (!first_term) os << " + ";
    first_term = false;
    // Expand sum_k q_k(d) conj-q_k(dbar) into coefficients on d^a dbar^b.
    std::map<std::pair<MultiIndex, MultiIndex>, cplx> expansion;
    for (const auto& q : term.q)
      for (const auto& [a, ca] : q.terms())
        for (const auto& [b, cb] : q.terms()) expansion[{a, b}] += ca * std::conj(cb);

    os << "(";
    bool first = true;
    for (const auto& [ab, c] : expansion) {
      if (std::abs(c) <= 1e-14) continue;
      if (!first) os << " + ";
      first = false;
      const auto& [a, b] = ab;
      bool unit = std::abs(c - cplx(1.0)) <= 1e-12 && (total_degree(a) + total_degree(b)) > 0;
      if (!unit) {
        if (std::abs(c.imag()) <= 1e-14)
          os << c.real();
        else
          os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
      }
      bool any = !unit;
      auto emit = [&](const MultiIndex& e, const char* sym) {
        for (size_t i = 0; i < e.size(); ++i) {
          if (e[i] == 0) continue;
          if (any) os << " ";
          any = true;
          os << sym;
          if (e.size() > 1) os << (i + 1);
          if (e[i] > 1) os << "^" << e[i];
        }
      };
      emit(a, "d");
      emit(b, "db");
      if (!any) os << "1";
    }
    if (first) os << "0";
    os << ") delta_(";
    for (size_t i = 0; i < term.lambda.size(); ++i) {
      if (i) os << ", ";
      cplx l = term.lambda[i];
      double re = std::abs(l.real()) < 5e-13 ? 0.0 : l.real();
      double im = std::abs(l.imag()) < 5e-13 ? 0.0 : l.imag();
      os << re;
      if (im != 0.0) os << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    }
    os << ")";
  }
  if (first_term) os << "0";
  return os.str();
}

}  // namespace cymo
