// Command-line front end.  Talks to the library exclusively through the C API;
// report payloads arrive as JSON and are printed either as human-readable
// summaries or as line-oriented machine output ("#cymo 1 <subcommand>" header,
// then key<TAB>value rows with 17 significant digits).
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cymo/cymo.h"

using nlohmann::json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct CliFailure {
  int code;
  std::string msg;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliFailure{code, msg}; }

// ---- C API RAII helpers -------------------------------------------------

void check(cymo_status st) {
  if (st != CYMO_OK) die(kExitInputError, cymo_last_error());
}

struct TupleDeleter {
  void operator()(cymo_tuple* t) const { cymo_tuple_free(t); }
};
struct MomentsDeleter {
  void operator()(cymo_moments* m) const { cymo_moments_free(m); }
};
using TuplePtr = std::unique_ptr<cymo_tuple, TupleDeleter>;
using MomentsPtr = std::unique_ptr<cymo_moments, MomentsDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  cymo_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take_string(s)); }

// ---- parsing helpers ----------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitInputError, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "1", "-0.5", "2i", "-i", "1+2i", "3.5e-2-0.25i"
bool parse_complex(const std::string& text, double& re, double& im) {
  std::string s = text;
  if (s.empty()) return false;
  bool has_i = s.back() == 'i' || s.back() == 'I';
  if (has_i) s.pop_back();
  if (!has_i) {
    char extra;
    return std::sscanf(text.c_str(), "%lf %c", &re, &extra) == 1 ? (im = 0.0, true) : false;
  }
  // Split at the last +/- that is not the leading sign and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  char extra;
  if (!re_part.empty()) {
    if (std::sscanf(re_part.c_str(), "%lf %c", &re, &extra) != 1) return false;
  } else {
    re = 0.0;
  }
  return std::sscanf(im_part.c_str(), "%lf %c", &im, &extra) == 1;
}

std::vector<double> parse_complex_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double re = 0, im = 0;
    if (!parse_complex(item, re, im))
      die(kExitInputError, std::string(what) + ": cannot parse complex number '" + item + "'");
    out.push_back(re);
    out.push_back(im);
  }
  if (out.empty()) die(kExitInputError, std::string(what) + " is empty");
  return out;
}

// ---- output -------------------------------------------------------------

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string escape_machine(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\')
      out += "\\\\";
    else if (c == '\t')
      out += "\\t";
    else if (c == '\n')
      out += "\\n";
    else
      out += c;
  }
  return out;
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
    if (j.empty()) rows.emplace_back(prefix, "[]");
  } else if (j.is_number_float()) {
    rows.emplace_back(prefix, fmt_double(j.get<double>()));
  } else if (j.is_number_unsigned()) {
    rows.emplace_back(prefix, std::to_string(j.get<unsigned long long>()));
  } else if (j.is_number_integer()) {
    rows.emplace_back(prefix, std::to_string(j.get<long long>()));
  } else if (j.is_boolean()) {
    rows.emplace_back(prefix, j.get<bool>() ? "true" : "false");
  } else if (j.is_string()) {
    rows.emplace_back(prefix, escape_machine(j.get<std::string>()));
  } else {
    rows.emplace_back(prefix, "null");
  }
}

void print_machine(const std::string& subcommand, const json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::string out = "#cymo 1 " + subcommand + "\n";
  for (const auto& [k, v] : rows) out += k + "\t" + v + "\n";
  std::fwrite(out.data(), 1, out.size(), stdout);
}

std::string fmt_cplx(const json& v) {
  double re = v[0].get<double>(), im = v[1].get<double>();
  std::ostringstream os;
  os << re;
  if (im != 0.0) os << (im > 0 ? "+" : "-") << std::abs(im) << "i";
  return os.str();
}

std::string fmt_index(const json& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i].get<int>());
  }
  return s + ")";
}

// ---- tuple loading ------------------------------------------------------

struct TupleOpts {
  std::string input, model, lambda = "0", measure;
  int m = 2, n = 1;
};

void add_tuple_opts(CLI::App* cmd, TupleOpts& o, const std::string& suffix) {
  auto name = [&suffix](const char* base) { return std::string(base) + suffix; };
  cmd->add_option(name("--input"), o.input, "tuple JSON file" + (suffix.empty() ? "" : " (" + suffix + ")"));
  cmd->add_option(name("--model"), o.model,
                  "builtin tuple: jordan | zero | vk | varopoulos-kaijser | atomic");
  cmd->add_option(name("--m"), o.m, "jordan block size");
  cmd->add_option(name("--lambda"), o.lambda, "jordan eigenvalue, e.g. 0.5-0.25i");
  cmd->add_option(name("--n"), o.n, "zero-model variable count");
  cmd->add_option(name("--measure"), o.measure, "atomic measure JSON file");
}

TuplePtr load_tuple(const TupleOpts& o) {
  cymo_tuple* t = nullptr;
  if (!o.input.empty() && !o.model.empty())
    die(kExitInputError, "give either --input or --model, not both");
  if (!o.input.empty()) {
    check(cymo_tuple_parse_json(read_file(o.input).c_str(), &t));
  } else if (o.model == "jordan") {
    double re = 0, im = 0;
    if (!parse_complex(o.lambda, re, im))
      die(kExitInputError, "--lambda: cannot parse complex number '" + o.lambda + "'");
    check(cymo_tuple_jordan(o.m, re, im, &t));
  } else if (o.model == "zero") {
    check(cymo_tuple_zero(o.n, &t));
  } else if (o.model == "vk" || o.model == "varopoulos-kaijser") {
    check(cymo_tuple_varopoulos_kaijser(&t));
  } else if (o.model == "atomic") {
    if (o.measure.empty()) die(kExitInputError, "--model atomic needs --measure FILE");
    check(cymo_tuple_atomic_json(read_file(o.measure).c_str(), &t));
  } else if (o.model.empty()) {
    die(kExitInputError, "no tuple given: use --input FILE or --model NAME");
  } else {
    die(kExitInputError, "unknown model '" + o.model + "'");
  }
  return TuplePtr(t);
}

// ---- shared option bundle ----------------------------------------------

struct CommonOpts {
  std::string format = "human";
  std::uint64_t seed = 42;
  int degree = -1;
  double tol = -1.0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_degree = true) {
  cmd->add_option("--format", o.format, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));
  cmd->add_option("--seed", o.seed, "random seed (default 42)");
  if (with_degree) cmd->add_option("--degree", o.degree, "truncation degree");
  cmd->add_option("--tol", o.tol, "tolerance override where applicable");
}

bool machine(const CommonOpts& o) { return o.format == "machine"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic commuting tuples: moments, kernels, growth, classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cymo_version()));

  // ---- moments ----
  auto* c_moments = app.add_subcommand("moments", "moment table m(alpha,beta) = <T^a h, T^b h>");
  TupleOpts mo_tuple;
  CommonOpts mo;
  add_tuple_opts(c_moments, mo_tuple, "");
  add_common(c_moments, mo);

  // ---- fock ----
  auto* c_fock = app.add_subcommand("fock", "truncated kernel operator: spectrum and model check");
  TupleOpts fo_tuple;
  CommonOpts fo;
  bool fo_conv = false;
  add_tuple_opts(c_fock, fo_tuple, "");
  add_common(c_fock, fo);
  c_fock->add_flag("--check-convergence", fo_conv, "recompute at degree + 2 and compare spectra");

  // ---- kernel-eval ----
  auto* c_kernel = app.add_subcommand("kernel-eval", "evaluate F(z, w)");
  TupleOpts ke_tuple;
  CommonOpts ke;
  std::string ke_z, ke_w;
  add_tuple_opts(c_kernel, ke_tuple, "");
  add_common(c_kernel, ke, false);
  c_kernel->add_option("--z", ke_z, "comma-separated complex coordinates")->required();
  c_kernel->add_option("--w", ke_w, "comma-separated complex coordinates (default: w = z)");

  // ---- certify ----
  auto* c_certify = app.add_subcommand("certify", "growth certificate against a support set");
  TupleOpts ce_tuple;
  CommonOpts ce;
  std::string ce_center = "0", ce_points_file, ce_radii, ce_orders;
  double ce_radius = 0.0;
  int ce_directions = 32;
  add_tuple_opts(c_certify, ce_tuple, "");
  add_common(c_certify, ce, false);
  c_certify->add_option("--center", ce_center, "support ball center (complex list)");
  c_certify->add_option("--radius", ce_radius, "support ball radius");
  c_certify->add_option("--points", ce_points_file, "support point-set JSON file instead of a ball");
  c_certify->add_option("--radii", ce_radii, "sampling radii, comma-separated");
  c_certify->add_option("--directions", ce_directions, "directions per radius");
  c_certify->add_option("--decay-orders", ce_orders,
                        "also probe rapid decay at these orders, comma-separated");

  // ---- classify ----
  auto* c_classify = app.add_subcommand("classify", "joint spectral decomposition, Jordan verdict");
  TupleOpts cl_tuple;
  CommonOpts cl;
  add_tuple_opts(c_classify, cl_tuple, "");
  add_common(c_classify, cl, false);

  // ---- distribution ----
  auto* c_dist = app.add_subcommand("distribution", "derivative-of-delta representation of Lambda");
  TupleOpts di_tuple;
  CommonOpts di;
  add_tuple_opts(c_dist, di_tuple, "");
  add_common(c_dist, di);

  // ---- convolve ----
  auto* c_conv = app.add_subcommand("convolve", "convolution of two tuples via moments and GNS");
  TupleOpts cv_a, cv_b;
  CommonOpts cv;
  cv.degree = 6;
  add_tuple_opts(c_conv, cv_a, "");
  add_tuple_opts(c_conv, cv_b, "2");
  add_common(c_conv, cv);

  // ---- eigen ----
  auto* c_eigen = app.add_subcommand("eigen", "joint eigenvalue criteria at lambda (or a grid)");
  TupleOpts ei_tuple;
  CommonOpts ei;
  std::string ei_lambda, ei_grid_center = "0";
  double ei_grid_radius = 0.0;
  int ei_grid_steps = 5;
  add_tuple_opts(c_eigen, ei_tuple, "");
  add_common(c_eigen, ei);
  c_eigen->add_option("--at", ei_lambda, "candidate joint eigenvalue (complex list)");
  c_eigen->add_option("--grid-center", ei_grid_center, "grid mode: center (one variable only)");
  c_eigen->add_option("--grid-radius", ei_grid_radius, "grid mode: half-width; > 0 enables grid");
  c_eigen->add_option("--grid-steps", ei_grid_steps, "grid mode: points per side");

  // ---- model ----
  auto* c_model = app.add_subcommand("model", "emit a builtin tuple or radial moment table as JSON");
  std::string md_kind;
  CommonOpts md;
  md.degree = 6;
  TupleOpts md_tuple;
  double md_t = 1.0, md_radius = 1.0;
  c_model->add_option("kind", md_kind,
                      "jordan | zero | vk | atomic | drury-arveson | hardy-ball | ht | hardy-disk")
      ->required();
  add_common(c_model, md);
  c_model->add_option("--m", md_tuple.m, "jordan block size");
  c_model->add_option("--lambda", md_tuple.lambda, "jordan eigenvalue");
  c_model->add_option("--n", md_tuple.n, "variable count");
  c_model->add_option("--measure", md_tuple.measure, "atomic measure JSON file");
  c_model->add_option("--t", md_t, "H_t exponent");
  c_model->add_option("--radius", md_radius, "Hardy disc radius");

  // ---- example ----
  auto* c_example = app.add_subcommand("example", "run a built-in end-to-end reproduction");
  std::string ex_name;
  CommonOpts ex;
  bool ex_list = false;
  c_example->add_option("name", ex_name, "example name (see --list)");
  c_example->add_flag("--list", ex_list, "list available examples");
  add_common(c_example, ex, false);

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int rc = app.exit(e);
      return rc == 0 ? 0 : kExitInputError;
    }

    // ================= moments =================
    if (*c_moments) {
      TuplePtr t = load_tuple(mo_tuple);
      int degree = mo.degree > 0 ? mo.degree : 4;
      cymo_moments* m = nullptr;
      check(cymo_moments_compute(t.get(), degree, &m));
      MomentsPtr mp(m);
      char* s = nullptr;
      check(cymo_moments_to_json(mp.get(), &s));
      json j = take_json(s);
      if (machine(mo)) {
        print_machine("moments", j);
      } else {
        std::printf("moment table: n=%d degree=%d\n", j["n"].get<int>(), j["degree"].get<int>());
        for (const auto& e : j["entries"])
          std::printf("  m%s%s = %s\n", fmt_index(e["alpha"]).c_str(),
                      fmt_index(e["beta"]).c_str(), fmt_cplx(e["value"]).c_str());
        std::printf("  (%zu nonzero entries)\n", j["entries"].size());
      }
      return 0;
    }

    // ================= fock =================
    if (*c_fock) {
      TuplePtr t = load_tuple(fo_tuple);
      int dim = 0;
      check(cymo_tuple_dims(t.get(), nullptr, &dim));
      int degree = fo.degree > 0 ? fo.degree : 2 * dim;
      char* s = nullptr;
      check(cymo_fock_report(t.get(), degree, fo_conv ? 1 : 0, &s));
      json j = take_json(s);
      if (machine(fo)) {
        print_machine("fock", j);
      } else {
        std::printf("kernel operator at degree %d: rank %d\n", degree, j["rank"].get<int>());
        std::printf("  eigenvalues:");
        for (const auto& v : j["eigenvalues"]) std::printf(" %.12g", v.get<double>());
        std::printf("\n  ||L||_HS^2 = %.12g  (bound %.12g)  %s\n", j["hs_norm_sq"].get<double>(),
                    j["hs_bound"].get<double>(), j["hs_ok"].get<bool>() ? "ok" : "VIOLATED");
        std::printf("  model check: gram residual %.3e, intertwine residual %.3e\n",
                    j["model_check"]["gram_residual"].get<double>(),
                    j["model_check"]["intertwine_residual"].get<double>());
        if (j.contains("convergence"))
          std::printf("  degree %d -> %d: max eigenvalue shift %.3e\n", degree,
                      j["convergence"]["degree"].get<int>(),
                      j["convergence"]["max_eigenvalue_shift"].get<double>());
      }
      return j["hs_ok"].get<bool>() ? 0 : kExitCheckFailed;
    }

    // ================= kernel-eval =================
    if (*c_kernel) {
      TuplePtr t = load_tuple(ke_tuple);
      auto z = parse_complex_list(ke_z, "--z");
      auto w = ke_w.empty() ? z : parse_complex_list(ke_w, "--w");
      if (z.size() != w.size()) die(kExitInputError, "--z and --w have different lengths");
      char* s = nullptr;
      check(cymo_kernel_eval(t.get(), z.data(), w.data(), static_cast<int>(z.size() / 2), &s));
      json j = take_json(s);
      if (machine(ke)) {
        print_machine("kernel-eval", j);
      } else {
        if (j.contains("value"))
          std::printf("F(z, w) = %s\n", fmt_cplx(j["value"]).c_str());
        std::printf("log|F| = %.17g, arg F = %.17g%s\n", j["log_abs"].get<double>(),
                    j["arg"].get<double>(),
                    j["finite"].get<bool>() ? "" : "  (inner product cancelled to zero)");
      }
      return 0;
    }

    // ================= certify =================
    if (*c_certify) {
      TuplePtr t = load_tuple(ce_tuple);
      int nvars = 0;
      check(cymo_tuple_dims(t.get(), &nvars, nullptr));
      json K;
      if (!ce_points_file.empty()) {
        K = json::parse(read_file(ce_points_file), nullptr, false);
        if (K.is_discarded()) die(kExitInputError, "--points: malformed JSON");
      } else {
        auto center = parse_complex_list(ce_center, "--center");
        if (center.size() == 2 && nvars > 1) center.assign(2 * nvars, 0.0);  // scalar 0 shorthand
        json c = json::array();
        for (std::size_t i = 0; i + 1 < center.size(); i += 2)
          c.push_back(json::array({center[i], center[i + 1]}));
        K = {{"type", "ball"}, {"center", c}, {"radius", ce_radius}};
      }
      std::vector<double> radii;
      if (!ce_radii.empty()) {
        std::stringstream ss(ce_radii);
        std::string item;
        while (std::getline(ss, item, ',')) radii.push_back(std::stod(item));
      }
      char* s = nullptr;
      check(cymo_growth_certificate(t.get(), K.dump().c_str(), radii.empty() ? nullptr : radii.data(),
                                    static_cast<int>(radii.size()), ce_directions, ce.seed, &s));
      json j = take_json(s);
      json out = j;
      if (!ce_orders.empty()) {
        std::vector<int> orders;
        std::stringstream ss(ce_orders);
        std::string item;
        while (std::getline(ss, item, ',')) orders.push_back(std::stoi(item));
        char* ds = nullptr;
        check(cymo_rapid_decay(t.get(), K.dump().c_str(), orders.data(),
                               static_cast<int>(orders.size()),
                               radii.empty() ? nullptr : radii.data(),
                               static_cast<int>(radii.size()), ce_directions, ce.seed, &ds));
        out = json{{"growth", j}, {"decay", take_json(ds)}};
      }
      if (machine(ce)) {
        print_machine("certify", out);
      } else {
        std::printf("growth certificate: |F| <= C (1+|z|+|w|)^N exp(H_K(z+w))\n");
        std::printf("  N_hat = %.6g, log C_hat = %.6g\n", j["N_hat"].get<double>(),
                    j["logC_hat"].get<double>());
        std::printf("  residual_max = %.6g over %d samples\n", j["residual_max"].get<double>(),
                    j["sample_count"].get<int>());
        std::printf("  per-radius max excess:");
        for (const auto& v : j["per_radius_max_excess"]) std::printf(" %.6g", v.get<double>());
        std::printf("\n");
        for (const auto& wmsg : j["warnings"])
          std::printf("  warning: %s\n", wmsg.get<std::string>().c_str());
        if (out.contains("decay"))
          for (const auto& row : out["decay"]["rows"])
            std::printf("  decay N=%d: logC = %.6g (%s)\n", row["N"].get<int>(),
                        row["logC"].get<double>(),
                        row["stable"].get<bool>() ? "stable" : "growing");
      }
      return 0;
    }

    // ================= classify =================
    if (*c_classify) {
      TuplePtr t = load_tuple(cl_tuple);
      char* s = nullptr;
      check(cymo_classify(t.get(), cl.seed, &s));
      json j = take_json(s);
      bool jordan = j["jordan"].get<bool>();
      std::string rendered;
      if (jordan) {
        char* ds = nullptr;
        if (cymo_distribution(t.get(), -1, cl.seed, &ds) == CYMO_OK) {
          json dj = take_json(ds);
          rendered = dj["distribution"]["rendered"].get<std::string>();
          j["distribution"] = rendered;
        }
      }
      if (machine(cl)) {
        print_machine("classify", j);
      } else {
        std::printf("classification: %s\n", jordan ? "Jordan" : "NotJordan");
        for (const auto& b : j["blocks"]) {
          std::printf("  block dim %d at lambda = (", b["dim"].get<int>());
          for (std::size_t i = 0; i < b["lambda"].size(); ++i)
            std::printf("%s%s", i ? ", " : "", fmt_cplx(b["lambda"][i]).c_str());
          std::printf(")\n");
        }
        std::printf("  self-adjointness defect %.3e, invariance defect %.3e, retries %d\n",
                    j["selfadj_defect"].get<double>(), j["invariance_defect"].get<double>(),
                    j["retries"].get<int>());
        if (!rendered.empty()) std::printf("  Lambda = %s\n", rendered.c_str());
      }
      return 0;
    }

    // ================= distribution =================
    if (*c_dist) {
      TuplePtr t = load_tuple(di_tuple);
      char* s = nullptr;
      check(cymo_distribution(t.get(), di.degree, di.seed, &s));
      json j = take_json(s);
      if (machine(di)) {
        print_machine("distribution", j);
      } else {
        std::printf("Lambda = %s\n", j["distribution"]["rendered"].get<std::string>().c_str());
        std::printf("  support points: %zu\n", j["distribution"]["terms"].size());
        std::printf("  round-trip max defect %.3e at degree %d\n",
                    j["roundtrip_max_defect"].get<double>(), j["verify_degree"].get<int>());
      }
      return j["roundtrip_max_defect"].get<double>() <= 1e-6 ? 0 : kExitCheckFailed;
    }

    // ================= convolve =================
    if (*c_conv) {
      TuplePtr a = load_tuple(cv_a), b = load_tuple(cv_b);
      char* s = nullptr;
      check(cymo_convolve_tuples(a.get(), b.get(), cv.degree > 0 ? cv.degree : 6, &s));
      json j = take_json(s);
      if (machine(cv)) {
        print_machine("convolve", j);
      } else {
        std::printf("convolution through degree-%d moments\n", cv.degree > 0 ? cv.degree : 6);
        std::printf("  reconstructed dimension %d (nullity %d), moment residual %.3e\n",
                    j["tuple"]["m"].get<int>(), j["nullity"].get<int>(),
                    j["moment_residual"].get<double>());
        for (std::size_t i = 0; i < j["op_norms"].size(); ++i)
          std::printf("  ||R_%zu|| = %.12g  <=  %.12g  %s\n", i + 1,
                      j["op_norms"][i].get<double>(), j["norm_bounds"][i].get<double>(),
                      j["norm_bound_ok"].get<bool>() ? "ok" : "VIOLATED");
      }
      return j["norm_bound_ok"].get<bool>() ? 0 : kExitCheckFailed;
    }

    // ================= eigen =================
    if (*c_eigen) {
      TuplePtr t = load_tuple(ei_tuple);
      int nvars = 0;
      check(cymo_tuple_dims(t.get(), &nvars, nullptr));
      if (ei_grid_radius > 0.0) {
        if (nvars != 1) die(kExitInputError, "grid mode needs a one-variable tuple");
        double cre = 0, cim = 0;
        if (!parse_complex(ei_grid_center, cre, cim))
          die(kExitInputError, "--grid-center: cannot parse '" + ei_grid_center + "'");
        int steps = ei_grid_steps < 2 ? 2 : ei_grid_steps;
        json cells = json::array();
        for (int a = 0; a < steps; ++a)
          for (int bcell = 0; bcell < steps; ++bcell) {
            double lam[2] = {cre - ei_grid_radius + 2.0 * ei_grid_radius * a / (steps - 1),
                             cim - ei_grid_radius + 2.0 * ei_grid_radius * bcell / (steps - 1)};
            char* s = nullptr;
            check(cymo_eigen_report(t.get(), lam, 1, ei.degree, &s));
            cells.push_back(take_json(s));
          }
        json out = {{"grid_steps", steps}, {"cells", cells}};
        bool all_consistent = true;
        for (const auto& c : cells) all_consistent = all_consistent && c["consistent"].get<bool>();
        out["all_consistent"] = all_consistent;
        if (machine(ei)) {
          print_machine("eigen", out);
        } else {
          std::printf("eigen criteria on a %dx%d grid: %s\n", steps, steps,
                      all_consistent ? "all consistent" : "INCONSISTENT CELLS");
          for (int a = 0; a < steps; ++a) {
            std::printf("  ");
            for (int bcell = 0; bcell < steps; ++bcell)
              std::printf("%c", cells[a * steps + bcell]["direct_exists"].get<bool>() ? '+' : '.');
            std::printf("\n");
          }
        }
        return all_consistent ? 0 : kExitCheckFailed;
      }
      if (ei_lambda.empty()) die(kExitInputError, "--at LAMBDA (or --grid-radius) is required");
      auto lam = parse_complex_list(ei_lambda, "--at");
      if (static_cast<int>(lam.size() / 2) != nvars)
        die(kExitInputError, "--lambda must have one entry per variable");
      char* s = nullptr;
      check(cymo_eigen_report(t.get(), lam.data(), nvars, ei.degree, &s));
      json j = take_json(s);
      if (machine(ei)) {
        print_machine("eigen", j);
      } else {
        std::printf("joint eigenvalue of the adjoint tuple: %s\n",
                    j["direct_exists"].get<bool>() ? "yes" : "no");
        std::printf("  sigma_min = %.6g, distance = %.6g\n", j["sigma_min"].get<double>(),
                    j["distance"].get<double>());
        if (j.contains("c"))
          std::printf("  best constant c = %.12g\n", j["c"].get<double>());
        std::printf("  PSD criterion at c = %.6g: %s\n", j["psd_c"].get<double>(),
                    j["psd_ok"].get<bool>() ? "passes" : "fails");
        std::printf("  criteria consistent: %s\n", j["consistent"].get<bool>() ? "yes" : "NO");
      }
      return j["consistent"].get<bool>() ? 0 : kExitCheckFailed;
    }

    // ================= model =================
    if (*c_model) {
      json j;
      if (md_kind == "jordan" || md_kind == "zero" || md_kind == "vk" ||
          md_kind == "varopoulos-kaijser" || md_kind == "atomic") {
        md_tuple.model = md_kind == "varopoulos-kaijser" ? "vk" : md_kind;
        TuplePtr t = load_tuple(md_tuple);
        char* s = nullptr;
        check(cymo_tuple_to_json(t.get(), &s));
        j = take_json(s);
      } else {
        char* s = nullptr;
        check(cymo_model_moments(md_kind.c_str(), md_tuple.n, md_t, md_radius,
                                 md.degree > 0 ? md.degree : 6, &s));
        j = take_json(s);
      }
      if (machine(md))
        print_machine("model", j);
      else
        std::printf("%s\n", j.dump(2).c_str());
      return 0;
    }

    // ================= example =================
    if (*c_example) {
      if (ex_list || ex_name.empty()) {
        char* s = nullptr;
        check(cymo_example_names(&s));
        json names = take_json(s);
        if (machine(ex)) {
          print_machine("example", json{{"names", names}});
        } else {
          for (const auto& n : names) std::printf("%s\n", n.get<std::string>().c_str());
        }
        return 0;
      }
      char* s = nullptr;
      check(cymo_example_run(ex_name.c_str(), ex.seed, &s));
      json j = take_json(s);
      if (machine(ex)) {
        print_machine("example", j);
      } else {
        std::printf("%s: %s\n", j["name"].get<std::string>().c_str(),
                    j["pass"].get<bool>() ? "PASS" : "FAIL");
        for (const auto& c : j["checks"])
          std::printf("  [%s] %-42s value=%.12g bound=%.12g %s\n",
                      c["pass"].get<bool>() ? "PASS" : "FAIL",
                      c["name"].get<std::string>().c_str(), c["value"].get<double>(),
                      c["bound"].get<double>(), c["detail"].get<std::string>().c_str());
      }
      return j["pass"].get<bool>() ? 0 : kExitCheckFailed;
    }

    return 0;
  } catch (const CliFailure& f) {
    std::fprintf(stderr, "error: %s\n", f.msg.c_str());
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
}
