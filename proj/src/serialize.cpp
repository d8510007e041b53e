#include "cymo/serialize.hpp"

#include "cymo/error.hpp"

namespace cymo {

json json_parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), ErrorCode::ParseError, "malformed JSON input");
  return j;
}

json cplx_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  if (j.is_object() && j.contains("re") && j.contains("im"))
    return cplx(j["re"].get<double>(), j["im"].get<double>());
  fail(ErrorCode::ParseError, "complex number must be x, [re, im], or {\"re\", \"im\"}");
}

namespace {

json cvec_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(cplx_to_json(v(i)));
  return out;
}

json cmat_to_json(const Matrix& A) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < A.cols(); ++j) row.push_back(cplx_to_json(A(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix cmat_from_json(const json& j, const char* what) {
  require(j.is_array() && !j.empty(), ErrorCode::ParseError,
          std::string(what) + ": expected a non-empty array of rows");
  const auto rows = j.size();
  require(j[0].is_array() && !j[0].empty(), ErrorCode::ParseError,
          std::string(what) + ": rows must be non-empty arrays");
  const auto cols = j[0].size();
  Matrix A(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(j[i].is_array() && j[i].size() == cols, ErrorCode::ParseError,
            std::string(what) + ": ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) A(i, k) = cplx_from_json(j[i][k]);
  }
  return A;
}

std::vector<cplx> cpoint_from_json(const json& j, const char* what) {
  require(j.is_array() && !j.empty(), ErrorCode::ParseError,
          std::string(what) + ": expected a non-empty array");
  std::vector<cplx> p(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) p[i] = cplx_from_json(j[i]);
  return p;
}

MultiIndex mi_from_json(const json& j, const char* what) {
  require(j.is_array(), ErrorCode::ParseError, std::string(what) + ": expected an index array");
  MultiIndex a(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_number_integer() && j[i].get<int>() >= 0, ErrorCode::ParseError,
            std::string(what) + ": exponents must be integers >= 0");
    a[i] = j[i].get<int>();
  }
  return a;
}

const json& field(const json& j, const char* name) {
  require(j.is_object() && j.contains(name), ErrorCode::ParseError,
          std::string("missing field '") + name + "'");
  return j[name];
}

}  // namespace

json tuple_to_json(const CyclicTuple& t) {
  json j;
  j["n"] = t.n;
  j["m"] = t.m;
  json mats = json::array();
  for (const auto& Ti : t.T) mats.push_back(cmat_to_json(Ti));
  j["matrices"] = std::move(mats);
  j["h"] = cvec_to_json(t.h);
  if (!t.gram.isIdentity(0.0)) j["gram"] = cmat_to_json(t.gram);
  return j;
}

CyclicTuple tuple_from_json(const json& j) {
  const json& mats = field(j, "matrices");
  require(mats.is_array() && !mats.empty(), ErrorCode::ParseError,
          "'matrices' must be a non-empty array");
  std::vector<Matrix> T;
  for (std::size_t i = 0; i < mats.size(); ++i) T.push_back(cmat_from_json(mats[i], "matrices"));
  for (const auto& Ti : T)
    require(Ti.rows() == Ti.cols() && Ti.rows() == T[0].rows(), ErrorCode::ParseError,
            "'matrices' entries must be square with a common dimension");
  if (j.contains("n"))
    require(field(j, "n").get<int>() == static_cast<int>(T.size()), ErrorCode::ParseError,
            "'n' disagrees with the number of matrices");
  if (j.contains("m"))
    require(field(j, "m").get<int>() == static_cast<int>(T[0].rows()), ErrorCode::ParseError,
            "'m' disagrees with the matrix dimension");

  auto hv = cpoint_from_json(field(j, "h"), "h");
  Vector h(hv.size());
  for (std::size_t i = 0; i < hv.size(); ++i) h(i) = hv[i];

  if (j.contains("gram")) {
    Matrix gram = cmat_from_json(j["gram"], "gram");
    return CyclicTuple::make_weighted(std::move(T), std::move(h), std::move(gram));
  }
  return CyclicTuple::make(std::move(T), std::move(h));
}

json moments_to_json(const MomentTable& mt) {
  json j;
  j["n"] = mt.nvars();
  j["degree"] = mt.degree();
  json entries = json::array();
  const GradedBasis& basis = mt.basis();
  for (int ia = 0; ia < basis.size(); ++ia)
    for (int ib = 0; ib < basis.size(); ++ib) {
      cplx v = mt.table()(ib, ia);
      if (v == 0.0) continue;
      json e;
      e["alpha"] = basis.at(ia);
      e["beta"] = basis.at(ib);
      e["value"] = cplx_to_json(v);
      entries.push_back(std::move(e));
    }
  j["entries"] = std::move(entries);
  return j;
}

MomentTable moments_from_json(const json& j) {
  int n = field(j, "n").get<int>();
  int d = field(j, "degree").get<int>();
  require(n >= 1 && d >= 0, ErrorCode::ParseError, "need n >= 1 and degree >= 0");
  MomentTable mt(n, d);
  for (const json& e : field(j, "entries")) {
    MultiIndex a = mi_from_json(field(e, "alpha"), "alpha");
    MultiIndex b = mi_from_json(field(e, "beta"), "beta");
    require(static_cast<int>(a.size()) == n && static_cast<int>(b.size()) == n,
            ErrorCode::ParseError, "moment entry index of wrong dimension");
    require(total_degree(a) <= d && total_degree(b) <= d, ErrorCode::ParseError,
            "moment entry beyond the table degree");
    mt.set(a, b, cplx_from_json(field(e, "value")));
  }
  return mt;
}

json polynomial_to_json(const Polynomial& p) {
  json j;
  j["n"] = p.nvars();
  json terms = json::array();
  for (const auto& [a, c] : p.terms()) {
    if (c == 0.0) continue;
    json t;
    t["alpha"] = a;
    t["coeff"] = cplx_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const json& j) {
  int n = field(j, "n").get<int>();
  require(n >= 1, ErrorCode::ParseError, "need n >= 1");
  Polynomial p(n);
  for (const json& t : field(j, "terms")) {
    MultiIndex a = mi_from_json(field(t, "alpha"), "alpha");
    require(static_cast<int>(a.size()) == n, ErrorCode::ParseError,
            "polynomial term index of wrong dimension");
    p.add_term(a, cplx_from_json(field(t, "coeff")));
  }
  return p;
}

json support_to_json(const SupportSet& K) {
  json j;
  if (K.kind == SupportSet::Kind::Ball) {
    j["type"] = "ball";
    json c = json::array();
    for (cplx v : K.center) c.push_back(cplx_to_json(v));
    j["center"] = std::move(c);
    j["radius"] = K.radius;
  } else {
    j["type"] = "points";
    json pts = json::array();
    for (const auto& p : K.points) {
      json q = json::array();
      for (cplx v : p) q.push_back(cplx_to_json(v));
      pts.push_back(std::move(q));
    }
    j["points"] = std::move(pts);
  }
  return j;
}

SupportSet support_from_json(const json& j) {
  std::string type = field(j, "type").get<std::string>();
  if (type == "ball")
    return SupportSet::ball(cpoint_from_json(field(j, "center"), "center"),
                            field(j, "radius").get<double>());
  if (type == "points") {
    const json& pts = field(j, "points");
    require(pts.is_array() && !pts.empty(), ErrorCode::ParseError,
            "'points' must be a non-empty array");
    std::vector<std::vector<cplx>> points;
    for (const json& p : pts) points.push_back(cpoint_from_json(p, "points"));
    return SupportSet::point_set(std::move(points));
  }
  fail(ErrorCode::ParseError, "support 'type' must be 'ball' or 'points'");
}

json measure_to_json(const AtomicMeasure& mu) {
  json j;
  json atoms = json::array();
  for (const auto& a : mu.atoms) {
    json q = json::array();
    for (cplx v : a) q.push_back(cplx_to_json(v));
    atoms.push_back(std::move(q));
  }
  j["atoms"] = std::move(atoms);
  j["weights"] = mu.weights;
  return j;
}

AtomicMeasure measure_from_json(const json& j) {
  AtomicMeasure mu;
  const json& atoms = field(j, "atoms");
  require(atoms.is_array() && !atoms.empty(), ErrorCode::ParseError,
          "'atoms' must be a non-empty array");
  for (const json& a : atoms) mu.atoms.push_back(cpoint_from_json(a, "atoms"));
  const json& w = field(j, "weights");
  require(w.is_array() && w.size() == atoms.size(), ErrorCode::ParseError,
          "'weights' must match 'atoms' in length");
  for (const json& x : w) {
    require(x.is_number(), ErrorCode::ParseError, "'weights' must be numbers");
    mu.weights.push_back(x.get<double>());
  }
  return mu;
}

json validation_to_json(const ValidationReport& r) {
  json j;
  j["is_commuting"] = r.is_commuting;
  j["max_commutator"] = r.max_commutator;
  j["tol_comm"] = r.tol_comm;
  j["gram_ok"] = r.gram_ok;
  j["gram_min_eig"] = r.gram_min_eig;
  j["krylov_rank"] = r.krylov_rank;
  j["is_cyclic"] = r.is_cyclic;
  return j;
}

json growth_to_json(const GrowthCertificate& c) {
  json j;
  j["N_hat"] = c.N_hat;
  j["logC_hat"] = c.logC_hat;
  j["residual_max"] = c.residual_max;
  j["sample_count"] = c.sample_count;
  j["radii"] = c.radii;
  j["directions"] = c.directions;
  j["seed"] = c.seed;
  j["per_radius_max_excess"] = c.per_radius_max_excess;
  j["warnings"] = c.warnings;
  return j;
}

json decay_to_json(const DecayReport& r) {
  json j;
  j["radii"] = r.radii;
  j["directions"] = r.directions;
  j["seed"] = r.seed;
  json rows = json::array();
  for (const auto& row : r.rows) {
    json x;
    x["N"] = row.N;
    x["logC"] = row.logC;
    x["per_radius_logC"] = row.per_radius_logC;
    x["stable"] = row.stable;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  return j;
}

json decomposition_to_json(const SpectralDecomposition& d) {
  json j;
  j["jordan"] = d.jordan;
  j["selfadj_defect"] = d.selfadj_defect;
  j["offdiag_defect"] = d.offdiag_defect;
  j["sum_defect"] = d.sum_defect;
  j["invariance_defect"] = d.invariance_defect;
  j["retries"] = d.retries;
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    json x;
    json lam = json::array();
    for (cplx v : b.lambda) lam.push_back(cplx_to_json(v));
    x["lambda"] = std::move(lam);
    x["dim"] = b.dim;
    blocks.push_back(std::move(x));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

json distribution_to_json(const DistributionRep& rep) {
  json j;
  j["n"] = rep.nvars;
  json terms = json::array();
  for (const auto& t : rep.terms) {
    json x;
    json lam = json::array();
    for (cplx v : t.lambda) lam.push_back(cplx_to_json(v));
    x["lambda"] = std::move(lam);
    json qs = json::array();
    for (const auto& q : t.q) qs.push_back(polynomial_to_json(q));
    x["q"] = std::move(qs);
    terms.push_back(std::move(x));
  }
  j["terms"] = std::move(terms);
  j["rendered"] = render_distribution(rep);
  return j;
}

json model_check_to_json(const ModelCheckReport& r) {
  json j;
  j["gram_residual"] = r.gram_residual;
  j["intertwine_residual"] = r.intertwine_residual;
  j["rank"] = r.rank;
  return j;
}

json gns_to_json(const GnsResult& g) {
  json j;
  j["tuple"] = tuple_to_json(g.tuple);
  j["nullity"] = g.nullity;
  j["moment_residual"] = g.moment_residual;
  j["commutation_defect"] = g.commutation_defect;
  return j;
}

json convolve_to_json(const ConvolveResult& c) {
  json j;
  j["tuple"] = tuple_to_json(c.tuple);
  j["nullity"] = c.nullity;
  j["moment_residual"] = c.moment_residual;
  j["commutation_defect"] = c.commutation_defect;
  j["op_norms"] = c.op_norms;
  j["norm_bounds"] = c.norm_bounds;
  j["norm_bound_ok"] = c.norm_bound_ok;
  return j;
}

json eigen_report_to_json(const JointEigenReport& r) {
  json j;
  json lam = json::array();
  for (cplx v : r.lambda) lam.push_back(cplx_to_json(v));
  j["lambda"] = std::move(lam);
  j["degree"] = r.degree;
  j["direct_exists"] = r.direct_exists;
  j["sigma_min"] = r.sigma_min;
  j["distance"] = r.distance;
  if (r.c) j["c"] = *r.c;
  j["psd_ok"] = r.psd_ok;
  j["psd_c"] = r.psd_c;
  j["consistent"] = r.consistent;
  return j;
}

json example_to_json(const ExampleResult& r) {
  json j;
  j["name"] = r.name;
  j["pass"] = r.pass();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json x;
    x["name"] = c.name;
    x["pass"] = c.pass;
    x["value"] = c.value;
    x["bound"] = c.bound;
    x["detail"] = c.detail;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace cymo
