#include "cymo/examples.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "cymo/error.hpp"
#include "cymo/fock.hpp"
#include "cymo/gns.hpp"
#include "cymo/jordan.hpp"
#include "cymo/kernel.hpp"
#include "cymo/models.hpp"

namespace cymo {

bool ExampleResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void check_le(ExampleResult& r, const std::string& name, double value, double bound,
              std::string detail = {}) {
  r.checks.push_back({name, value <= bound, value, bound, detail.empty() ? "<=" : detail});
}

void check_ge(ExampleResult& r, const std::string& name, double value, double bound,
              std::string detail = {}) {
  r.checks.push_back({name, value >= bound, value, bound, detail.empty() ? ">=" : detail});
}

void check_range(ExampleResult& r, const std::string& name, double value, double lo, double hi) {
  std::ostringstream os;
  os << "in [" << lo << ", " << hi << "]";
  r.checks.push_back({name, value >= lo && value <= hi, value, hi, os.str()});
}

std::vector<cplx> random_point(std::mt19937_64& rng, int n, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) z[i] = cplx(u(rng), u(rng));
  return z;
}

ExampleResult example_atomic(std::uint64_t seed) {
  ExampleResult r;
  r.name = "atomic";

  // Two symmetric real atoms: the first moments everyone can do by hand.
  AtomicMeasure sym{{{cplx(1.0)}, {cplx(-1.0)}}, {0.5, 0.5}};
  CyclicTuple ts = atomic_tuple(sym);
  MomentTable ms = moments(ts, 2);
  check_le(r, "two-atom m(1,1) = 1", std::abs(ms.value({1}, {1}) - 1.0), 1e-14);
  check_le(r, "two-atom m(1,0) = 0", std::abs(ms.value({1}, {0})), 1e-14);

  // A complex 2-variable measure exercises every code path below.
  AtomicMeasure mu{{{cplx(1.0, 1.0), cplx(-0.5, 0.0)},
                    {cplx(0.3, -0.2), cplx(0.0, 1.2)},
                    {cplx(-1.1, 0.0), cplx(0.4, 0.4)}},
                   {0.5, 0.3, 0.2}};
  CyclicTuple t = atomic_tuple(mu);

  double norm_defect = 0.0;
  for (int i = 0; i < t.n; ++i) {
    double expect = 0.0;
    for (const auto& a : mu.atoms) expect = std::max(expect, std::abs(a[i]));
    norm_defect = std::max(norm_defect, std::abs(t.op_norm(i) - expect));
  }
  check_le(r, "multiplier norm = max |a_i|", norm_defect, 1e-12);

  MomentTable mt = moments(t, 4);
  double moment_defect = 0.0;
  for (const auto& a : mt.basis().list())
    for (const auto& b : mt.basis().list())
      moment_defect = std::max(moment_defect, std::abs(mt.value(a, b) - atomic_moment(mu, a, b)));
  check_le(r, "moments match the measure", moment_defect, 1e-12);

  // F(z,w) = sum_j w_j exp(<a_j, w> + <z, a_j>): the transform of the measure.
  std::mt19937_64 rng(seed);
  double kernel_rel = 0.0;
  for (int s = 0; s < 50; ++s) {
    auto z = random_point(rng, 2, 2.0), w = random_point(rng, 2, 2.0);
    cplx expect = 0.0;
    for (std::size_t j = 0; j < mu.atoms.size(); ++j) {
      cplx e = 0.0;
      for (int i = 0; i < 2; ++i)
        e += std::conj(mu.atoms[j][i]) * z[i] + mu.atoms[j][i] * std::conj(w[i]);
      expect += mu.weights[j] * std::exp(e);
    }
    kernel_rel = std::max(kernel_rel, std::abs(eval_F(t, z, w) - expect) / std::abs(expect));
  }
  check_le(r, "kernel equals the exponential sum", kernel_rel, 1e-10);

  // Diagonal with distinct atoms: classifies Jordan, Lambda = sum_j w_j delta_(a_j).
  SpectralDecomposition dec = joint_spectral_decompose(t);
  r.checks.push_back({"classifies Jordan", dec.jordan, dec.selfadj_defect, 1e-8,
                      "projection self-adjointness defect"});
  if (dec.jordan) {
    DistributionRep rep = distribution_rep(t, dec, 3);
    double rt = 0.0;
    GradedBasis b3(2, 3);
    for (const auto& a : b3.list())
      for (const auto& bb : b3.list())
        rt = std::max(rt, std::abs(eval_distribution(rep, a, bb) - atomic_moment(mu, a, bb)));
    check_le(r, "point-mass distribution round-trip", rt, 1e-9);
  }
  return r;
}

ExampleResult example_jordan_block(std::uint64_t seed) {
  ExampleResult r;
  r.name = "jordan-block";

  // m = 3: F(z,w) = 1 + z conj(w) + (1/4) z^2 conj(w)^2.
  CyclicTuple t3 = jordan_block_tuple(3);
  std::mt19937_64 rng(seed);
  double fdef = 0.0;
  for (int s = 0; s < 20; ++s) {
    auto z = random_point(rng, 1, 3.0), w = random_point(rng, 1, 3.0);
    cplx zw = z[0] * std::conj(w[0]);
    cplx expect = 1.0 + zw + 0.25 * zw * zw;
    fdef = std::max(fdef, std::abs(eval_F(t3, z, w) - expect) / std::abs(expect));
  }
  check_le(r, "m=3 kernel closed form", fdef, 1e-12);

  MomentTable mt = moments(t3, 2);
  double mdef = 0.0;
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l)
      mdef = std::max(mdef, std::abs(mt.value({k}, {l}) - (k == l ? 1.0 : 0.0)));
  check_le(r, "moments are delta_kl", mdef, 1e-12);

  // Translation identity: moments of the block at 1 = translated moments at 0.
  MomentTable at0 = moments(jordan_block_tuple(2, 0.0), 3);
  MomentTable at1 = moments(jordan_block_tuple(2, 1.0), 3);
  MomentTable shifted = translate_moments(at0, {1.0});
  check_le(r, "translation identity m=2",
           (at1.table() - shifted.table()).cwiseAbs().maxCoeff(), 1e-12);

  SpectralDecomposition dec = joint_spectral_decompose(t3);
  r.checks.push_back({"classifies Jordan", dec.jordan, dec.selfadj_defect, 1e-8,
                      "projection self-adjointness defect"});
  if (dec.jordan) {
    DistributionRep rep = distribution_rep(t3, dec);
    double rt = 0.0;
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l)
        rt = std::max(rt,
                      std::abs(eval_distribution(rep, {k}, {l}) - (k == l ? 1.0 : 0.0)));
    check_le(r, "derivative distribution round-trip", rt, 1e-9);
  }

  GrowthCertificate cert = certify_growth(t3, SupportSet::ball({cplx(0.0)}, 0.0));
  check_range(r, "growth order fits 2(m-1)", cert.N_hat, 4.0 - 0.15, 4.0 + 0.15);
  check_le(r, "fit scatter is small", cert.residual_max, 0.5,
           "max of log|F| above the fitted line");
  return r;
}

ExampleResult example_drury_arveson(std::uint64_t) {
  ExampleResult r;
  r.name = "drury-arveson";

  double closed = 0.0, table_def = 0.0;
  for (int n = 1; n <= 3; ++n) {
    RadialWeightModel da = RadialWeightModel::drury_arveson(n);
    MomentTable mt = radial_moment_table(da, 6);
    for (const auto& a : mt.basis().list()) {
      double expect = mi_factorial(a) / std::tgamma(total_degree(a) + 1.0);
      closed = std::max(closed, std::abs(da_distribution_moment(n, a, a) - expect));
      for (const auto& b : mt.basis().list())
        table_def = std::max(table_def, std::abs(da_distribution_moment(n, a, b) -
                                                 mt.value(a, b).real()));
    }
  }
  check_le(r, "sphere pipeline equals alpha!/|alpha|!", closed, 1e-12);
  check_le(r, "pipeline matches the radial table", table_def, 1e-12);
  check_le(r, "n=2 weight at (1,1) is 1/2",
           std::abs(da_distribution_moment(2, {1, 1}, {1, 1}) - 0.5), 1e-15);
  check_le(r, "off-diagonal moments vanish", std::abs(da_distribution_moment(2, {1, 0}, {0, 1})),
           0.0, "== 0");
  return r;
}

ExampleResult example_varopoulos_kaijser(std::uint64_t seed) {
  ExampleResult r;
  r.name = "varopoulos-kaijser";

  VkData vk = varopoulos_kaijser();
  double norm_pT = vk.tuple.op_norm_of(vk.tuple.poly_matrix(vk.p));
  double target = 3.0 * std::sqrt(3.0);
  check_le(r, "||p(T)|| = 3 sqrt(3)", std::abs(norm_pT - target), 1e-10);

  double sup = polydisc_sup(vk.p, 64, 400, seed);
  check_range(r, "polydisc sup of p", sup, 4.99, 5.0 + 1e-9);
  check_le(r, "witness p(1,1,-1) = 5",
           std::abs(vk.p.eval({cplx(1.0), cplx(1.0), cplx(-1.0)}) - 5.0), 1e-14);
  check_ge(r, "von Neumann violation ratio", norm_pT / sup, 1.039);

  FockOperator L = build_L(moments(vk.tuple, 2));
  check_le(r, "||h||^2 = <L 1, 1> = 1", std::abs(L.L(0, 0).real() - 1.0), 1e-12);

  Eigen::SelfAdjointEigenSolver<Matrix> es(L.L);
  std::vector<double> nonzero;
  for (int i = es.eigenvalues().size() - 1; i >= 0; --i)
    if (es.eigenvalues()(i) > 1e-10) nonzero.push_back(es.eigenvalues()(i));
  std::vector<double> expect = {1.5, 1.0, 1.0, 1.0, 1.0};
  double edef = (nonzero.size() == expect.size()) ? 0.0 : 1.0;
  for (std::size_t i = 0; i < nonzero.size() && i < expect.size(); ++i)
    edef = std::max(edef, std::abs(nonzero[i] - expect[i]));
  check_le(r, "L eigenvalues are {3/2, 1, 1, 1, 1}", edef, 1e-10);

  // The contractivity condition M_z^* L M_z <= L holds: the T_i are contractions.
  check_ge(r, "shift compression of L stays PSD", shift_compression_min_eig(L), -1e-10);
  return r;
}

ExampleResult example_hardy_scale(std::uint64_t seed) {
  ExampleResult r;
  r.name = "hardy-scale";

  RadialWeightModel base = RadialWeightModel::hardy_disk(1.0);
  RadialWeightModel middle = RadialWeightModel::hardy_disk(2.0);
  std::mt19937_64 rng(seed);
  double kdef = 0.0;
  bool conv = true;
  for (int s = 0; s < 25; ++s) {
    auto z = random_point(rng, 1, 1.5), w = random_point(rng, 1, 1.5);
    WeightedKernelValue v = weighted_model_kernel(base, middle, z, w, 40);
    cplx expect = 1.0 / (1.0 - z[0] * std::conj(w[0]) / 16.0);
    kdef = std::max(kdef, std::abs(v.value - expect));
    conv = conv && v.converged;
  }
  check_le(r, "pairing kernel is 1/(1 - z conj(w)/16)", kdef, 1e-12);
  r.checks.push_back({"series converged at every point", conv, conv ? 1.0 : 0.0, 1.0, "ratio test"});

  WeightedKernelValue at0 =
      weighted_model_kernel(base, middle, {cplx(0.0)}, {cplx(0.7)}, 40);
  check_le(r, "value at z = 0 is 1", std::abs(at0.value - 1.0), 1e-15);

  // The disc moments feed GNS: a 7-dimensional truncated shift reproduces them.
  GnsResult g = gns_reconstruct(radial_moment_table(base, 6));
  check_le(r, "GNS of the disc moments round-trips", g.moment_residual, 1e-10);
  return r;
}

ExampleResult example_ht_scale(std::uint64_t) {
  ExampleResult r;
  r.name = "ht-scale";

  // t = n collapses to the Hardy weight; t = 1, n = 1 to the flat disc weight.
  double hardy_def = 0.0;
  for (int n = 2; n <= 3; ++n) {
    RadialWeightModel ht = RadialWeightModel::ht_scale(n, static_cast<double>(n));
    RadialWeightModel hb = RadialWeightModel::hardy_ball(n);
    GradedBasis basis(n, 8);
    for (const auto& a : basis.list())
      hardy_def = std::max(hardy_def,
                           std::abs(ht.weight(a) - hb.weight(a)) / hb.weight(a));
  }
  check_le(r, "t = n recovers the Hardy ball weight", hardy_def, 1e-13);

  RadialWeightModel flat = RadialWeightModel::ht_scale(1, 1.0);
  double flat_def = 0.0;
  for (int k = 0; k <= 12; ++k) flat_def = std::max(flat_def, std::abs(flat.weight({k}) - 1.0));
  check_le(r, "t = 1, n = 1 weight is flat", flat_def, 1e-13);

  const double t = 1.5, s = 0.7;
  RadialWeightModel ht = RadialWeightModel::ht_scale(2, t);
  RadialWeightModel hts = RadialWeightModel::ht_scale(2, t + s);
  double c1 = ht.weight({1, 0}) / (hts.weight({1, 0}) * hts.weight({1, 0}));
  check_le(r, "degree-1 kernel coefficient is (t+s)^2/t",
           std::abs(c1 - (t + s) * (t + s) / t), 1e-12);

  // Norm-equivalence band: the pairing-space weight over the H_(t+2s) weight
  // depends only on |alpha|; report its observed range on |alpha| <= 40.
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int k = 0; k <= 40; ++k) {
    double lr = 2.0 * std::lgamma(t + s) + std::lgamma(k + t) + std::lgamma(k + t + 2 * s) -
                2.0 * std::lgamma(k + t + s) - std::lgamma(t) - std::lgamma(t + 2 * s);
    double ratio = std::exp(lr);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  std::ostringstream band;
  band << "observed ratio band [" << lo << ", " << hi << "]";
  r.checks.push_back({"pairing norm is equivalent to H_(t+2s)", lo > 0.0 && hi / lo < 10.0,
                      hi / lo, 10.0, band.str()});
  return r;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"atomic",     "jordan-block", "drury-arveson",
          "varopoulos-kaijser", "hardy-scale",  "ht-scale"};
}

ExampleResult run_example(const std::string& name, std::uint64_t seed) {
  if (name == "atomic") return example_atomic(seed);
  if (name == "jordan-block") return example_jordan_block(seed);
  if (name == "drury-arveson") return example_drury_arveson(seed);
  if (name == "varopoulos-kaijser") return example_varopoulos_kaijser(seed);
  if (name == "hardy-scale") return example_hardy_scale(seed);
  if (name == "ht-scale") return example_ht_scale(seed);
  fail(ErrorCode::InvalidArgument, "unknown example '" + name + "'");
}

}  // namespace cymo
