#include "cymo/kernel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "cymo/error.hpp"

namespace cymo {

SupportSet SupportSet::ball(std::vector<cplx> center, double radius) {
  require(radius >= 0.0, ErrorCode::InvalidArgument, "support ball radius must be >= 0");
  require(!center.empty(), ErrorCode::InvalidArgument, "support ball center must be nonempty");
  SupportSet K;
  K.kind = Kind::Ball;
  K.center = std::move(center);
  K.radius = radius;
  return K;
}

SupportSet SupportSet::point_set(std::vector<std::vector<cplx>> points) {
  require(!points.empty(), ErrorCode::InvalidArgument, "support point set must be nonempty");
  for (const auto& p : points)
    require(p.size() == points[0].size(), ErrorCode::DimensionMismatch,
            "support points must share a dimension");
  SupportSet K;
  K.kind = Kind::Points;
  K.points = std::move(points);
  return K;
}

int SupportSet::nvars() const {
  return kind == Kind::Ball ? static_cast<int>(center.size())
                            : static_cast<int>(points[0].size());
}

static double re_pairing(const std::vector<cplx>& l, const std::vector<cplx>& z) {
  double s = 0.0;
  for (size_t i = 0; i < l.size(); ++i) s += (l[i] * std::conj(z[i])).real();
  return s;
}

double supporting_function(const SupportSet& K, const std::vector<cplx>& z) {
  require(static_cast<int>(z.size()) == K.nvars(), ErrorCode::DimensionMismatch,
          "supporting function argument has wrong dimension");
  if (K.kind == SupportSet::Kind::Ball) {
    double n2 = 0.0;
    for (const cplx& zi : z) n2 += std::norm(zi);
    return re_pairing(K.center, z) + K.radius * std::sqrt(n2);
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : K.points) best = std::max(best, re_pairing(p, z));
  return best;
}

ScaledVector expm_apply_log(const Matrix& A, const Vector& h) {
  // exp(A) = (exp(A/2^s))^(2^s), squared with Frobenius renormalization so the
  // magnitude lives in a separate exponent and nothing overflows.
  double nrm = A.cwiseAbs().rowwise().sum().maxCoeff();  // infinity norm
  int s = 0;
  if (nrm > 0.5) s = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  Matrix B = ((A / std::pow(2.0, s)).exp()).eval();
  double logc = 0.0;
  for (int k = 0; k < s; ++k) {
    // Invariant: exp(A / 2^(s-k)) = e^logc * B.  Normalize, then square.
    double b = B.norm();
    require(b > 0.0, ErrorCode::NumericFailure, "matrix exponential underflowed");
    B /= b;
    logc = 2.0 * (logc + std::log(b));
    B = (B * B).eval();
  }
  ScaledVector out;
  Vector u = B * h;
  double nu = u.norm();
  require(nu > 0.0, ErrorCode::NumericFailure, "exp(A) h vanished numerically");
  out.unit = u / nu;
  out.log_scale = logc + std::log(nu);
  return out;
}

static Matrix pairing_matrix(const CyclicTuple& t, const std::vector<cplx>& w) {
  require(static_cast<int>(w.size()) == t.n, ErrorCode::DimensionMismatch,
          "kernel argument has wrong number of variables");
  Matrix A = Matrix::Zero(t.m, t.m);
  for (int i = 0; i < t.n; ++i) A += std::conj(w[i]) * t.T[i];
  return A;
}

KernelLogValue eval_F_log(const CyclicTuple& t, const std::vector<cplx>& z,
                          const std::vector<cplx>& w) {
  ScaledVector u = expm_apply_log(pairing_matrix(t, w), t.h);
  ScaledVector v = expm_apply_log(pairing_matrix(t, z), t.h);
  cplx ip = (v.unit.adjoint() * t.gram * u.unit)(0, 0);
  KernelLogValue out;
  if (ip == 0.0) {
    out.finite = false;
    out.log_abs = -std::numeric_limits<double>::infinity();
    return out;
  }
  out.log_abs = u.log_scale + v.log_scale + std::log(std::abs(ip));
  out.arg = std::arg(ip);
  return out;
}

cplx eval_F(const CyclicTuple& t, const std::vector<cplx>& z, const std::vector<cplx>& w) {
  Matrix Aw = pairing_matrix(t, w), Az = pairing_matrix(t, z);
  double scale = Aw.cwiseAbs().rowwise().sum().maxCoeff() + Az.cwiseAbs().rowwise().sum().maxCoeff();
  if (scale <= 300.0) {
    Vector u = Aw.exp() * t.h;
    Vector v = Az.exp() * t.h;
    return (v.adjoint() * t.gram * u)(0, 0);
  }
  KernelLogValue lv = eval_F_log(t, z, w);
  if (!lv.finite) return 0.0;
  require(lv.log_abs < 709.0, ErrorCode::NumericFailure,
          "|F| overflows double; use the log-scale evaluation");
  return std::exp(lv.log_abs) * cplx(std::cos(lv.arg), std::sin(lv.arg));
}

namespace {

struct Sample {
  std::vector<cplx> z, w;
  double r = 0.0;
  double excess = 0.0;  // log|F| - H_K(z+w)
  double x = 0.0;       // log(1 + |z| + |w|)
};

std::vector<cplx> random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> v(n);
  double s = 0.0;
  do {
    for (int i = 0; i < n; ++i) {
      v[i] = cplx(g(rng), g(rng));
      s += std::norm(v[i]);
    }
  } while (s == 0.0);
  double inv = 1.0 / std::sqrt(s);
  for (auto& c : v) c *= inv;
  return v;
}

double vec_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& c : v) s += std::norm(c);
  return std::sqrt(s);
}

std::vector<Sample> draw_samples(const CyclicTuple& t, const SupportSet& K,
                                 const GrowthSampling& sampling,
                                 std::vector<std::string>* warnings) {
  require(K.nvars() == t.n, ErrorCode::DimensionMismatch,
          "support set dimension does not match the tuple");
  require(sampling.directions >= 1, ErrorCode::InvalidArgument, "need at least one direction");
  require(!sampling.radii.empty(), ErrorCode::InvalidArgument, "need at least one radius");
  for (double r : sampling.radii)
    require(r > 0.0, ErrorCode::InvalidArgument, "radii must be positive");

  double tnorm_sum = 0.0;
  for (int i = 0; i < t.n; ++i) tnorm_sum += t.op_norm(i);

  std::mt19937_64 rng(sampling.seed);
  std::vector<Sample> samples;
  int dropped = 0;
  bool overflow_warned = false;
  for (double r : sampling.radii) {
    if (warnings && !overflow_warned && tnorm_sum * r > 700.0) {
      warnings->push_back("radius " + std::to_string(r) +
                          ": plain exponentials would overflow (sum ||T_i|| * r > 700); "
                          "samples computed in log scale");
      overflow_warned = true;
    }
    for (int d = 0; d < sampling.directions; ++d) {
      Sample s;
      s.r = r;
      auto zeta = random_unit(t.n, rng);
      s.z.resize(t.n);
      for (int i = 0; i < t.n; ++i) s.z[i] = r * zeta[i];
      if (d % 2 == 0) {
        s.w = s.z;  // kernel diagonal
      } else {
        auto omega = random_unit(t.n, rng);
        s.w.resize(t.n);
        for (int i = 0; i < t.n; ++i) s.w[i] = r * omega[i];
      }
      KernelLogValue lv = eval_F_log(t, s.z, s.w);
      if (!lv.finite) {
        ++dropped;
        continue;
      }
      std::vector<cplx> zw(t.n);
      for (int i = 0; i < t.n; ++i) zw[i] = s.z[i] + s.w[i];
      s.excess = lv.log_abs - supporting_function(K, zw);
      s.x = std::log1p(vec_norm(s.z) + vec_norm(s.w));
      samples.push_back(std::move(s));
    }
  }
  if (warnings && dropped > 0)
    warnings->push_back(std::to_string(dropped) +
                        " sample(s) dropped: inner product cancelled to exactly zero");
  return samples;
}

}  // namespace

GrowthCertificate certify_growth(const CyclicTuple& t, const SupportSet& K,
                                 const GrowthSampling& sampling) {
  GrowthCertificate cert;
  cert.radii = sampling.radii;
  cert.directions = sampling.directions;
  cert.seed = sampling.seed;

  auto samples = draw_samples(t, K, sampling, &cert.warnings);
  cert.sample_count = static_cast<int>(samples.size());
  require(!samples.empty(), ErrorCode::NumericFailure, "no usable growth samples");

  // Least squares for excess ~ logC + N * x over the fit window (radius >= 10).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long cnt = 0;
  for (const Sample& s : samples) {
    if (s.r < 10.0 * (1.0 - 1e-12)) continue;
    sx += s.x;
    sy += s.excess;
    sxx += s.x * s.x;
    sxy += s.x * s.excess;
    ++cnt;
  }
  require(cnt >= 2, ErrorCode::InvalidArgument, "growth fit needs samples at radius >= 10");
  double det = cnt * sxx - sx * sx;
  if (std::abs(det) < 1e-12 * std::max(1.0, cnt * sxx)) {
    // Single radius in the window: pin N to 0 and fit the constant only.
    cert.N_hat = 0.0;
    cert.logC_hat = sy / cnt;
  } else {
    cert.N_hat = (cnt * sxy - sx * sy) / det;
    cert.logC_hat = (sy - cert.N_hat * sx) / cnt;
  }

  cert.residual_max = -std::numeric_limits<double>::infinity();
  std::map<double, double> per_radius;
  for (const Sample& s : samples) {
    double res = s.excess - (cert.logC_hat + cert.N_hat * s.x);
    cert.residual_max = std::max(cert.residual_max, res);
    auto it = per_radius.find(s.r);
    if (it == per_radius.end())
      per_radius[s.r] = s.excess;
    else
      it->second = std::max(it->second, s.excess);
  }
  for (double r : cert.radii) {
    auto it = per_radius.find(r);
    cert.per_radius_max_excess.push_back(it == per_radius.end()
                                             ? -std::numeric_limits<double>::infinity()
                                             : it->second);
  }
  return cert;
}

DecayReport rapid_decay_check(const CyclicTuple& t, const SupportSet& K,
                              const std::vector<int>& orders, const GrowthSampling& sampling) {
  DecayReport rep;
  rep.radii = sampling.radii;
  rep.directions = sampling.directions;
  rep.seed = sampling.seed;
  std::vector<std::string> warnings;
  auto samples = draw_samples(t, K, sampling, &warnings);
  require(!samples.empty(), ErrorCode::NumericFailure, "no usable decay samples");

  for (int N : orders) {
    DecayRow row;
    row.N = N;
    row.logC = -std::numeric_limits<double>::infinity();
    std::map<double, double> per_radius;
    for (const Sample& s : samples) {
      double v = s.excess + N * s.x;
      row.logC = std::max(row.logC, v);
      auto it = per_radius.find(s.r);
      if (it == per_radius.end())
        per_radius[s.r] = v;
      else
        it->second = std::max(it->second, v);
    }
    for (double r : rep.radii)
      row.per_radius_logC.push_back(per_radius.count(r) ? per_radius[r]
                                                        : -std::numeric_limits<double>::infinity());
    // Stability heuristic: the top half of the radii agree to 0.1.
    size_t half = row.per_radius_logC.size() / 2;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (size_t i = half; i < row.per_radius_logC.size(); ++i) {
      lo = std::min(lo, row.per_radius_logC[i]);
      hi = std::max(hi, row.per_radius_logC[i]);
    }
    row.stable = std::isfinite(lo) && std::isfinite(hi) && (hi - lo) <= 0.1;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

MomentTable taylor_coefficients(const MomentTable& mt) {
  MomentTable c(mt.nvars(), mt.degree());
  const GradedBasis& basis = mt.basis();
  for (int ia = 0; ia < basis.size(); ++ia) {
    double fa = mi_factorial(basis.at(ia));
    for (int ib = 0; ib < basis.size(); ++ib) {
      double fb = mi_factorial(basis.at(ib));
      // c(alpha, beta) = m(beta, alpha)/(alpha! beta!); stored at (row beta, col alpha).
      c.table()(ib, ia) = mt.table()(ia, ib) / (fa * fb);
    }
  }
  return c;
}

CoefficientPsdReport coefficient_psd_check(const MomentTable& c, double tol) {
  CoefficientPsdReport rep;
  const GradedBasis& basis = c.basis();
  int D = basis.size();
  // Rescale back to moment normalization m(alpha,beta) = alpha! beta! c(alpha,beta):
  // positivity of the kernel is PSD of this graded-lex matrix.
  Matrix M(D, D);
  for (int ia = 0; ia < D; ++ia) {
    double fa = mi_factorial(basis.at(ia));
    for (int ib = 0; ib < D; ++ib) M(ib, ia) = fa * mi_factorial(basis.at(ib)) * c.table()(ib, ia);
  }
  rep.herm_defect = (M - M.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Matrix> es(((M + M.adjoint()) * 0.5).eval());
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  double scale = std::max(1e-300, std::abs(es.eigenvalues().sum()));
  rep.psd = rep.min_eigenvalue >= -tol * scale &&
            rep.herm_defect <= tol * std::max(1.0, M.cwiseAbs().maxCoeff());
  return rep;
}

}  // namespace cymo
