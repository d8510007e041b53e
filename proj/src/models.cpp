#include "cymo/models.hpp"

#include <cmath>
#include <random>

#include "cymo/error.hpp"

namespace cymo {

CyclicTuple atomic_tuple(const AtomicMeasure& mu) {
  const int k = static_cast<int>(mu.atoms.size());
  require(k > 0, ErrorCode::InvalidArgument, "atomic measure needs at least one atom");
  require(mu.weights.size() == mu.atoms.size(), ErrorCode::DimensionMismatch,
          "atom/weight count mismatch");
  const int n = static_cast<int>(mu.atoms[0].size());
  require(n > 0, ErrorCode::InvalidArgument, "atoms must live in C^n, n >= 1");
  for (const auto& a : mu.atoms)
    require(static_cast<int>(a.size()) == n, ErrorCode::DimensionMismatch,
            "atoms of mixed dimension");
  for (double w : mu.weights)
    require(w > 0.0, ErrorCode::InvalidArgument, "atom weights must be positive");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      require(mu.atoms[i] != mu.atoms[j], ErrorCode::InvalidArgument, "duplicate atom");

  std::vector<Matrix> T(n, Matrix::Zero(k, k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) T[i](j, j) = mu.atoms[j][i];
  Matrix gram = Matrix::Zero(k, k);
  for (int j = 0; j < k; ++j) gram(j, j) = mu.weights[j];
  return CyclicTuple::make_weighted(std::move(T), Vector::Ones(k), std::move(gram));
}

cplx atomic_moment(const AtomicMeasure& mu, const MultiIndex& alpha, const MultiIndex& beta) {
  cplx s = 0.0;
  for (std::size_t j = 0; j < mu.atoms.size(); ++j) {
    cplx term = mu.weights[j];
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      term *= std::pow(mu.atoms[j][i], alpha[i]);
      term *= std::pow(std::conj(mu.atoms[j][i]), beta[i]);
    }
    s += term;
  }
  return s;
}

CyclicTuple jordan_block_tuple(int m, cplx lambda) {
  require(m >= 1, ErrorCode::InvalidArgument, "jordan block size must be >= 1");
  Matrix J = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) J(i, i) = lambda;
  for (int i = 0; i + 1 < m; ++i) J(i + 1, i) = 1.0;
  Vector h = Vector::Zero(m);
  h(0) = 1.0;
  return CyclicTuple::make({J}, h);
}

CyclicTuple zero_tuple(int nvars) {
  require(nvars >= 1, ErrorCode::InvalidArgument, "need at least one variable");
  std::vector<Matrix> T(nvars, Matrix::Zero(1, 1));
  Vector h = Vector::Ones(1);
  return CyclicTuple::make(std::move(T), h);
}

VkData varopoulos_kaijser() {
  const double s = 1.0 / std::sqrt(3.0);
  std::vector<Matrix> T(3, Matrix::Zero(5, 5));
  for (int i = 0; i < 3; ++i) {
    T[i](i + 1, 0) = 1.0;
    for (int j = 1; j <= 3; ++j) T[i](4, j) = (j == i + 1) ? s : -s;
  }
  Vector h = Vector::Zero(5);
  h(0) = 1.0;

  VkData vk;
  vk.tuple = CyclicTuple::make(std::move(T), h);
  vk.p = Polynomial(3);
  vk.q = Polynomial(3);
  for (int i = 0; i < 3; ++i) {
    MultiIndex sq(3, 0);
    sq[i] = 2;
    vk.p.add_term(sq, 1.0);
    vk.q.add_term(sq, 1.0);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      MultiIndex mixed(3, 0);
      mixed[i] = 1;
      mixed[j] = 1;
      vk.p.add_term(mixed, -2.0);
      vk.q.add_term(mixed, -1.0);
    }
  return vk;
}

double polydisc_sup(const Polynomial& p, int grid, int refine_rounds, std::uint64_t seed) {
  const int n = p.nvars();
  require(n >= 1 && grid >= 2, ErrorCode::InvalidArgument, "polydisc_sup needs n>=1, grid>=2");
  const double two_pi = 2.0 * M_PI;

  std::vector<double> theta(n, 0.0), best_theta(n, 0.0);
  std::vector<cplx> z(n);
  const auto eval_abs = [&](const std::vector<double>& th) {
    for (int i = 0; i < n; ++i) z[i] = std::polar(1.0, th[i]);
    return std::abs(p.eval(z));
  };

  double best = 0.0;
  std::vector<int> idx(n, 0);
  for (;;) {
    for (int i = 0; i < n; ++i) theta[i] = two_pi * idx[i] / grid;
    const double v = eval_abs(theta);
    if (v > best) {
      best = v;
      best_theta = theta;
    }
    int i = 0;
    while (i < n && ++idx[i] == grid) idx[i++] = 0;
    if (i == n) break;
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sigma = two_pi / grid;
  for (int r = 0; r < refine_rounds; ++r) {
    theta = best_theta;
    for (int i = 0; i < n; ++i) theta[i] += sigma * gauss(rng);
    const double v = eval_abs(theta);
    if (v > best) {
      best = v;
      best_theta = theta;
    } else {
      sigma *= 0.97;  // cool steadily toward a local refinement
    }
    if (sigma < 1e-12) break;
  }
  return best;
}

RadialWeightModel RadialWeightModel::drury_arveson(int n) {
  require(n >= 1, ErrorCode::InvalidArgument, "need n >= 1");
  return {Kind::DruryArveson, n, 1.0, 1.0};
}

RadialWeightModel RadialWeightModel::hardy_ball(int n) {
  require(n >= 1, ErrorCode::InvalidArgument, "need n >= 1");
  return {Kind::HardyBall, n, static_cast<double>(n), 1.0};
}

RadialWeightModel RadialWeightModel::ht_scale(int n, double t) {
  require(n >= 1 && t > 0.0, ErrorCode::InvalidArgument, "need n >= 1 and t > 0");
  return {Kind::HtScale, n, t, 1.0};
}

RadialWeightModel RadialWeightModel::hardy_disk(double r) {
  require(r > 0.0, ErrorCode::InvalidArgument, "need radius > 0");
  return {Kind::HardyDisk, 1, 1.0, r};
}

double RadialWeightModel::weight(const MultiIndex& alpha) const {
  require(static_cast<int>(alpha.size()) == nvars, ErrorCode::DimensionMismatch,
          "index dimension mismatch");
  const int k = total_degree(alpha);
  switch (kind) {
    case Kind::HardyDisk:
      return std::pow(radius, 2 * k);
    case Kind::DruryArveson:
      return mi_factorial(alpha) / std::tgamma(k + 1.0);
    case Kind::HardyBall:
    case Kind::HtScale: {
      const double tt = (kind == Kind::HardyBall) ? static_cast<double>(nvars) : t;
      // alpha! * Gamma(t) / Gamma(|alpha| + t), stable through log-gammas
      return mi_factorial(alpha) * std::exp(std::lgamma(tt) - std::lgamma(k + tt));
    }
  }
  fail(ErrorCode::Internal, "unreachable weight kind");
}

MomentTable radial_moment_table(const RadialWeightModel& model, int degree) {
  MomentTable mt(model.nvars, degree);
  for (const auto& alpha : mt.basis().list()) mt.set(alpha, alpha, model.weight(alpha));
  return mt;
}

double da_distribution_moment(int nvars, const MultiIndex& alpha, const MultiIndex& beta) {
  require(static_cast<int>(alpha.size()) == nvars && static_cast<int>(beta.size()) == nvars,
          ErrorCode::DimensionMismatch, "index dimension mismatch");
  if (alpha != beta) return 0.0;
  const int k = total_degree(alpha);
  // Radial factor product (k+1)...(k+n-1)/(n-1)! applied to the sphere moment.
  double radial = 1.0;
  for (int j = 1; j <= nvars - 1; ++j) radial *= static_cast<double>(k + j) / j;
  const double sphere = RadialWeightModel::hardy_ball(nvars).weight(alpha);
  return radial * sphere;
}

WeightedKernelValue weighted_model_kernel(const RadialWeightModel& base,
                                          const RadialWeightModel& middle,
                                          const std::vector<cplx>& z, const std::vector<cplx>& w,
                                          int degree) {
  const int n = base.nvars;
  require(middle.nvars == n, ErrorCode::DimensionMismatch, "model dimension mismatch");
  require(static_cast<int>(z.size()) == n && static_cast<int>(w.size()) == n,
          ErrorCode::DimensionMismatch, "point dimension mismatch");
  require(degree >= 1, ErrorCode::InvalidArgument, "need degree >= 1");

  WeightedKernelValue out;
  double prev_max = 0.0, cur_max = 0.0;
  for (int d = 0; d <= degree; ++d) {
    cur_max = 0.0;
    MultiIndex alpha(n, 0);
    alpha[0] = d;
    for (;;) {
      cplx mono = 1.0;
      for (int i = 0; i < n; ++i)
        mono *= std::pow(z[i], alpha[i]) * std::pow(std::conj(w[i]), alpha[i]);
      const double mw = middle.weight(alpha);
      const cplx term = base.weight(alpha) / (mw * mw) * mono;
      out.value += term;
      cur_max = std::max(cur_max, std::abs(term));
      // next composition of d into n parts
      int i = n - 2;
      while (i >= 0 && alpha[i] == 0) --i;
      if (i < 0) break;
      const int carry = alpha[n - 1];
      alpha[n - 1] = 0;
      --alpha[i];
      alpha[i + 1] = carry + 1;
    }
    if (d >= 1 && prev_max > 0.0) out.tail_ratio = cur_max / prev_max;
    prev_max = cur_max;
  }
  out.converged = (out.tail_ratio < 1.0) || (cur_max < 1e-14 * std::abs(out.value));
  return out;
}

}  // namespace cymo
