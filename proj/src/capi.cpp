#include "cymo/cymo.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "cymo/error.hpp"
#include "cymo/serialize.hpp"

using namespace cymo;

struct cymo_tuple {
  CyclicTuple v;
};
struct cymo_moments {
  MomentTable v;
};

namespace {

thread_local std::string g_last_error;

cymo_status status_of(ErrorCode c) { return static_cast<cymo_status>(static_cast<int>(c)); }

template <class F>
cymo_status guarded(F&& f) {
  try {
    f();
    return CYMO_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CYMO_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return CYMO_ERR_INTERNAL;
  }
}

char* alloc_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  require(out != nullptr, ErrorCode::Internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const json& j) {
  require(out != nullptr, ErrorCode::InvalidArgument, "output pointer is null");
  *out = alloc_string(j.dump());
}

const CyclicTuple& deref(const cymo_tuple* t) {
  require(t != nullptr, ErrorCode::InvalidArgument, "tuple handle is null");
  return t->v;
}

const MomentTable& deref(const cymo_moments* m) {
  require(m != nullptr, ErrorCode::InvalidArgument, "moments handle is null");
  return m->v;
}

std::vector<cplx> complex_array(const double* data, int n, const char* what) {
  require(data != nullptr, ErrorCode::InvalidArgument, std::string(what) + " pointer is null");
  require(n >= 1, ErrorCode::InvalidArgument, std::string(what) + " length must be >= 1");
  std::vector<cplx> v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx(data[2 * i], data[2 * i + 1]);
  return v;
}

GrowthSampling make_sampling(const double* radii, int nradii, int directions, uint64_t seed) {
  GrowthSampling s;
  if (radii != nullptr && nradii > 0) s.radii.assign(radii, radii + nradii);
  if (directions > 0) s.directions = directions;
  s.seed = seed;
  return s;
}

}  // namespace

extern "C" {

const char* cymo_version(void) { return "0.1.0"; }

const char* cymo_last_error(void) { return g_last_error.c_str(); }

void cymo_string_free(char* s) { std::free(s); }

cymo_status cymo_tuple_parse_json(const char* text, cymo_tuple** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_tuple{tuple_from_json(json_parse(text))};
  });
}

cymo_status cymo_tuple_jordan(int m, double lambda_re, double lambda_im, cymo_tuple** out) {
  return guarded([&] {
    require(out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_tuple{jordan_block_tuple(m, cplx(lambda_re, lambda_im))};
  });
}

cymo_status cymo_tuple_zero(int nvars, cymo_tuple** out) {
  return guarded([&] {
    require(out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_tuple{zero_tuple(nvars)};
  });
}

cymo_status cymo_tuple_varopoulos_kaijser(cymo_tuple** out) {
  return guarded([&] {
    require(out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_tuple{varopoulos_kaijser().tuple};
  });
}

cymo_status cymo_tuple_atomic_json(const char* measure_json, cymo_tuple** out) {
  return guarded([&] {
    require(measure_json != nullptr && out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_tuple{atomic_tuple(measure_from_json(json_parse(measure_json)))};
  });
}

void cymo_tuple_free(cymo_tuple* t) { delete t; }

cymo_status cymo_tuple_dims(const cymo_tuple* t, int* nvars, int* dim) {
  return guarded([&] {
    const CyclicTuple& v = deref(t);
    if (nvars) *nvars = v.n;
    if (dim) *dim = v.m;
  });
}

cymo_status cymo_tuple_to_json(const cymo_tuple* t, char** out) {
  return guarded([&] { emit(out, tuple_to_json(deref(t))); });
}

cymo_status cymo_tuple_validate(const cymo_tuple* t, char** report_json) {
  return guarded([&] { emit(report_json, validation_to_json(validate(deref(t)))); });
}

cymo_status cymo_tuple_op_norm(const cymo_tuple* t, int i, double* out) {
  return guarded([&] {
    require(out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = deref(t).op_norm(i);
  });
}

cymo_status cymo_moments_compute(const cymo_tuple* t, int degree, cymo_moments** out) {
  return guarded([&] {
    require(out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_moments{moments(deref(t), degree)};
  });
}

cymo_status cymo_moments_parse_json(const char* text, cymo_moments** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_moments{moments_from_json(json_parse(text))};
  });
}

void cymo_moments_free(cymo_moments* m) { delete m; }

cymo_status cymo_moments_to_json(const cymo_moments* m, char** out) {
  return guarded([&] { emit(out, moments_to_json(deref(m))); });
}

cymo_status cymo_moments_entry(const cymo_moments* m, const int* alpha, const int* beta, int len,
                               double* re, double* im) {
  return guarded([&] {
    const MomentTable& mt = deref(m);
    require(alpha != nullptr && beta != nullptr, ErrorCode::InvalidArgument, "null index");
    require(len == mt.nvars(), ErrorCode::DimensionMismatch, "index length mismatch");
    cplx v = mt.value(MultiIndex(alpha, alpha + len), MultiIndex(beta, beta + len));
    if (re) *re = v.real();
    if (im) *im = v.imag();
  });
}

cymo_status cymo_moments_translate(const cymo_moments* m, const double* lambda, int n,
                                   cymo_moments** out) {
  return guarded([&] {
    require(out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_moments{translate_moments(deref(m), complex_array(lambda, n, "lambda"))};
  });
}

cymo_status cymo_moments_twist(const cymo_moments* m, const char* poly_json, cymo_moments** out) {
  return guarded([&] {
    require(poly_json != nullptr && out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_moments{
        twist_by_polynomial(deref(m), polynomial_from_json(json_parse(poly_json)))};
  });
}

cymo_status cymo_moments_convolve(const cymo_moments* a, const cymo_moments* b,
                                  cymo_moments** out) {
  return guarded([&] {
    require(out != nullptr, ErrorCode::InvalidArgument, "null argument");
    *out = new cymo_moments{convolve_moments(deref(a), deref(b))};
  });
}

cymo_status cymo_moments_gns(const cymo_moments* m, double null_tol, char** result_json) {
  return guarded([&] {
    GnsResult g = gns_reconstruct(deref(m), null_tol > 0 ? null_tol : 1e-10);
    emit(result_json, gns_to_json(g));
  });
}

cymo_status cymo_fock_report(const cymo_tuple* t, int degree, int check_convergence, char** out) {
  return guarded([&] {
    const CyclicTuple& v = deref(t);
    MomentTable mt = moments(v, degree);
    FockOperator op = build_L(mt);
    EigenPolyDecomposition dec = spectral_decompose(op);
    ModelCheckReport mc = model_basis_check(v, dec);

    double hs_sq = op.hs_norm() * op.hs_norm();
    double hn = v.norm(v.h);
    double hs_bound = std::exp(2.0 * v.op_norm_sum_sq()) * hn * hn * hn * hn;

    json j;
    j["degree"] = degree;
    j["rank"] = dec.rank();
    j["eigenvalues"] = dec.lambda;
    j["hs_norm_sq"] = hs_sq;
    j["hs_bound"] = hs_bound;
    j["hs_ok"] = hs_sq <= hs_bound * (1.0 + 1e-12);
    j["model_check"] = model_check_to_json(mc);
    if (check_convergence) {
      EigenPolyDecomposition dec2 = spectral_decompose(build_L(moments(v, degree + 2)));
      double shift = 0.0;
      std::size_t k = std::min(dec.lambda.size(), dec2.lambda.size());
      for (std::size_t i = 0; i < k; ++i)
        shift = std::max(shift, std::abs(dec.lambda[i] - dec2.lambda[i]));
      json c;
      c["degree"] = degree + 2;
      c["rank"] = dec2.rank();
      c["max_eigenvalue_shift"] = shift;
      j["convergence"] = std::move(c);
    }
    emit(out, j);
  });
}

cymo_status cymo_kernel_eval(const cymo_tuple* t, const double* z, const double* w, int n,
                             char** out) {
  return guarded([&] {
    const CyclicTuple& v = deref(t);
    auto zv = complex_array(z, n, "z"), wv = complex_array(w, n, "w");
    KernelLogValue lv = eval_F_log(v, zv, wv);
    json j;
    j["finite"] = lv.finite;
    j["log_abs"] = lv.log_abs;
    j["arg"] = lv.arg;
    if (!lv.finite) {
      j["value"] = cplx_to_json(0.0);
    } else if (lv.log_abs < 709.0) {
      j["value"] = cplx_to_json(std::exp(lv.log_abs) * cplx(std::cos(lv.arg), std::sin(lv.arg)));
    }
    emit(out, j);
  });
}

cymo_status cymo_growth_certificate(const cymo_tuple* t, const char* support_json,
                                    const double* radii, int nradii, int directions, uint64_t seed,
                                    char** out) {
  return guarded([&] {
    require(support_json != nullptr, ErrorCode::InvalidArgument, "null support");
    SupportSet K = support_from_json(json_parse(support_json));
    GrowthCertificate cert =
        certify_growth(deref(t), K, make_sampling(radii, nradii, directions, seed));
    emit(out, growth_to_json(cert));
  });
}

cymo_status cymo_rapid_decay(const cymo_tuple* t, const char* support_json, const int* orders,
                             int norders, const double* radii, int nradii, int directions,
                             uint64_t seed, char** out) {
  return guarded([&] {
    require(support_json != nullptr, ErrorCode::InvalidArgument, "null support");
    require(orders != nullptr && norders >= 1, ErrorCode::InvalidArgument, "need decay orders");
    SupportSet K = support_from_json(json_parse(support_json));
    DecayReport rep = rapid_decay_check(deref(t), K, std::vector<int>(orders, orders + norders),
                                        make_sampling(radii, nradii, directions, seed));
    emit(out, decay_to_json(rep));
  });
}

cymo_status cymo_classify(const cymo_tuple* t, uint64_t seed, char** out) {
  return guarded([&] {
    JordanOptions opt;
    opt.seed = seed;
    SpectralDecomposition dec = joint_spectral_decompose(deref(t), opt);
    emit(out, decomposition_to_json(dec));
  });
}

cymo_status cymo_distribution(const cymo_tuple* t, int degree, uint64_t seed, char** out) {
  return guarded([&] {
    const CyclicTuple& v = deref(t);
    JordanOptions opt;
    opt.seed = seed;
    SpectralDecomposition dec = joint_spectral_decompose(v, opt);
    DistributionRep rep = distribution_rep(v, dec, degree);

    // Round-trip check against the tuple's own moments; degree m always
    // exercises every block's derivative structure.
    int d_v = std::max(2, v.m);
    MomentTable mt = moments(v, d_v);
    double defect = 0.0;
    for (const auto& a : mt.basis().list())
      for (const auto& b : mt.basis().list())
        defect = std::max(defect, std::abs(eval_distribution(rep, a, b) - mt.value(a, b)));

    json j;
    j["decomposition"] = decomposition_to_json(dec);
    j["distribution"] = distribution_to_json(rep);
    j["verify_degree"] = d_v;
    j["roundtrip_max_defect"] = defect;
    emit(out, j);
  });
}

cymo_status cymo_convolve_tuples(const cymo_tuple* a, const cymo_tuple* b, int degree, char** out) {
  return guarded([&] {
    ConvolveResult r = convolve(deref(a), deref(b), degree);
    emit(out, convolve_to_json(r));
  });
}

cymo_status cymo_eigen_report(const cymo_tuple* t, const double* lambda, int n, int degree,
                              char** out) {
  return guarded([&] {
    const CyclicTuple& v = deref(t);
    auto lv = complex_array(lambda, n, "lambda");
    int d = degree > 0 ? degree : v.m;  // degree m suffices to witness by Cayley-Hamilton
    emit(out, eigen_report_to_json(joint_eigen_report(v, lv, d)));
  });
}

cymo_status cymo_example_run(const char* name, uint64_t seed, char** out) {
  return guarded([&] {
    require(name != nullptr, ErrorCode::InvalidArgument, "null example name");
    emit(out, example_to_json(run_example(name, seed)));
  });
}

cymo_status cymo_example_names(char** out) {
  return guarded([&] { emit(out, json(example_names())); });
}

cymo_status cymo_model_moments(const char* kind, int nvars, double t_param, double radius,
                               int degree, char** out) {
  return guarded([&] {
    require(kind != nullptr, ErrorCode::InvalidArgument, "null model kind");
    std::string k = kind;
    RadialWeightModel model;
    if (k == "drury-arveson")
      model = RadialWeightModel::drury_arveson(nvars);
    else if (k == "hardy-ball")
      model = RadialWeightModel::hardy_ball(nvars);
    else if (k == "ht")
      model = RadialWeightModel::ht_scale(nvars, t_param);
    else if (k == "hardy-disk")
      model = RadialWeightModel::hardy_disk(radius);
    else
      fail(ErrorCode::InvalidArgument, "unknown model kind '" + k + "'");
    emit(out, moments_to_json(radial_moment_table(model, degree)));
  });
}

}  // extern "C"
