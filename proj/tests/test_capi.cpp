#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "cymo/cymo.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  cymo_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

struct Tuple {
  cymo_tuple* p = nullptr;
  ~Tuple() { cymo_tuple_free(p); }
};

struct Moments {
  cymo_moments* p = nullptr;
  ~Moments() { cymo_moments_free(p); }
};

}  // namespace

TEST_CASE("version string") {
  const char* v = cymo_version();
  REQUIRE(v != nullptr);
  CHECK(std::strchr(v, '.') != nullptr);
}

TEST_CASE("builtin constructors and dims") {
  Tuple t;
  REQUIRE(cymo_tuple_jordan(2, 0.0, 0.0, &t.p) == CYMO_OK);
  int n = 0, m = 0;
  REQUIRE(cymo_tuple_dims(t.p, &n, &m) == CYMO_OK);
  CHECK(n == 1);
  CHECK(m == 2);

  json rep = take_json([&] {
    char* s = nullptr;
    REQUIRE(cymo_tuple_validate(t.p, &s) == CYMO_OK);
    return s;
  }());
  CHECK(rep["is_commuting"] == true);
  CHECK(rep["is_cyclic"] == true);

  double nrm = 0.0;
  REQUIRE(cymo_tuple_op_norm(t.p, 0, &nrm) == CYMO_OK);
  CHECK(std::abs(nrm - 1.0) < 1e-12);

  Tuple vk;
  REQUIRE(cymo_tuple_varopoulos_kaijser(&vk.p) == CYMO_OK);
  REQUIRE(cymo_tuple_dims(vk.p, &n, &m) == CYMO_OK);
  CHECK(n == 3);
  CHECK(m == 5);
}

TEST_CASE("tuple json round trip") {
  Tuple t;
  REQUIRE(cymo_tuple_jordan(3, 0.5, -0.5, &t.p) == CYMO_OK);
  char* s = nullptr;
  REQUIRE(cymo_tuple_to_json(t.p, &s) == CYMO_OK);
  std::string text = take(s);

  Tuple back;
  REQUIRE(cymo_tuple_parse_json(text.c_str(), &back.p) == CYMO_OK);
  char* s2 = nullptr;
  REQUIRE(cymo_tuple_to_json(back.p, &s2) == CYMO_OK);
  CHECK(take(s2) == text);
}

TEST_CASE("error reporting") {
  cymo_tuple* out = nullptr;
  CHECK(cymo_tuple_parse_json("{ not json", &out) == CYMO_ERR_PARSE);
  CHECK(out == nullptr);
  CHECK(std::strlen(cymo_last_error()) > 0);

  CHECK(cymo_tuple_jordan(0, 0.0, 0.0, &out) == CYMO_ERR_INVALID_ARGUMENT);

  // non-commuting pair is refused by the moment builder with its own status
  json bad = json::parse(
      R"({"matrices": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]], "h": [1, 1]})");
  Tuple nc;
  REQUIRE(cymo_tuple_parse_json(bad.dump().c_str(), &nc.p) == CYMO_OK);
  cymo_moments* mm = nullptr;
  CHECK(cymo_moments_compute(nc.p, 2, &mm) == CYMO_ERR_NONCOMMUTING);
}

TEST_CASE("moments through the c api") {
  Tuple t;
  REQUIRE(cymo_tuple_jordan(2, 0.0, 0.0, &t.p) == CYMO_OK);
  Moments m;
  REQUIRE(cymo_moments_compute(t.p, 3, &m.p) == CYMO_OK);

  int alpha = 1, beta = 1;
  double re = 0.0, im = 0.0;
  REQUIRE(cymo_moments_entry(m.p, &alpha, &beta, 1, &re, &im) == CYMO_OK);
  CHECK(re == 1.0);
  CHECK(im == 0.0);

  char* s = nullptr;
  REQUIRE(cymo_moments_to_json(m.p, &s) == CYMO_OK);
  std::string text = take(s);
  Moments back;
  REQUIRE(cymo_moments_parse_json(text.c_str(), &back.p) == CYMO_OK);

  // translate by 1: m(1,1) becomes 2
  double lambda[2] = {1.0, 0.0};
  Moments sh;
  REQUIRE(cymo_moments_translate(m.p, lambda, 1, &sh.p) == CYMO_OK);
  REQUIRE(cymo_moments_entry(sh.p, &alpha, &beta, 1, &re, &im) == CYMO_OK);
  CHECK(std::abs(re - 2.0) < 1e-12);

  // gns round trip
  char* gs = nullptr;
  REQUIRE(cymo_moments_gns(m.p, 1e-10, &gs) == CYMO_OK);
  json gj = take_json(gs);
  CHECK(gj["tuple"]["m"] == 2);
}

TEST_CASE("reports are well-formed json") {
  Tuple t;
  REQUIRE(cymo_tuple_jordan(2, 0.0, 0.0, &t.p) == CYMO_OK);

  char* s = nullptr;
  REQUIRE(cymo_fock_report(t.p, 4, 1, &s) == CYMO_OK);
  json fock = take_json(s);
  CHECK(fock["hs_ok"] == true);
  CHECK(fock["rank"] == 2);
  CHECK(fock.contains("convergence"));

  double z[2] = {0.5, 0.0}, w[2] = {0.5, 0.0};
  REQUIRE(cymo_kernel_eval(t.p, z, w, 1, &s) == CYMO_OK);
  json kv = take_json(s);
  CHECK(kv["finite"] == true);
  CHECK(std::abs(kv["value"][0].get<double>() - 1.25) < 1e-12);

  REQUIRE(cymo_classify(t.p, 42, &s) == CYMO_OK);
  json cls = take_json(s);
  CHECK(cls["jordan"] == true);

  REQUIRE(cymo_distribution(t.p, -1, 42, &s) == CYMO_OK);
  json dist = take_json(s);
  CHECK(dist["roundtrip_max_defect"].get<double>() < 1e-9);
  CHECK(dist["distribution"]["rendered"] == "(1 + d db) delta_(0)");

  json K = {{"type", "points"}, {"points", {{{0.0, 0.0}}}}};
  REQUIRE(cymo_growth_certificate(t.p, K.dump().c_str(), nullptr, 0, 32, 42, &s) == CYMO_OK);
  json gc = take_json(s);
  CHECK(std::abs(gc["N_hat"].get<double>() - 2.0) < 0.15);

  double lambda[2] = {0.0, 0.0};
  REQUIRE(cymo_eigen_report(t.p, lambda, 1, -1, &s) == CYMO_OK);
  json er = take_json(s);
  CHECK(er["consistent"] == true);
  CHECK(std::abs(er["c"].get<double>() - 1.0) < 1e-10);
}

TEST_CASE("convolution and examples through the c api") {
  Tuple a, b;
  json ja = json::parse(R"({"matrices": [[[1.0]]], "h": [1.0]})");
  json jb = json::parse(R"({"matrices": [[[2.0]]], "h": [1.0]})");
  REQUIRE(cymo_tuple_parse_json(ja.dump().c_str(), &a.p) == CYMO_OK);
  REQUIRE(cymo_tuple_parse_json(jb.dump().c_str(), &b.p) == CYMO_OK);
  char* s = nullptr;
  REQUIRE(cymo_convolve_tuples(a.p, b.p, 6, &s) == CYMO_OK);
  json cv = take_json(s);
  CHECK(cv["norm_bound_ok"] == true);
  CHECK(std::abs(cv["op_norms"][0].get<double>() - 3.0) < 1e-12);

  REQUIRE(cymo_example_names(&s) == CYMO_OK);
  json names = take_json(s);
  CHECK(names.size() == 6);

  REQUIRE(cymo_example_run("atomic", 42, &s) == CYMO_OK);
  json ex = take_json(s);
  CHECK(ex["pass"] == true);

  CHECK(cymo_example_run("nope", 42, &s) == CYMO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("model moments through the c api") {
  char* s = nullptr;
  REQUIRE(cymo_model_moments("drury-arveson", 2, 0.0, 0.0, 3, &s) == CYMO_OK);
  json j = take_json(s);
  CHECK(j["n"] == 2);
  bool found = false;
  for (const auto& e : j["entries"])
    if (e["alpha"] == json::array({1, 1}) && e["beta"] == json::array({1, 1})) {
      CHECK(std::abs(e["value"][0].get<double>() - 0.5) < 1e-14);
      found = true;
    }
  CHECK(found);

  CHECK(cymo_model_moments("bogus", 1, 0.0, 0.0, 2, &s) == CYMO_ERR_INVALID_ARGUMENT);
}
