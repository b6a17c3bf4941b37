#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "lgtwalk.h"

namespace {
lgw_params default_params() { return {1.0, 0.5, 0.0, 1.0, 8}; }

const char* kGaugeJson =
    "{\"q\": 1.3,"
    " \"A0\": [[0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8],"
    "          [0.2,0.1,0.0,-0.1,0.3,0.2,0.1,0.0]],"
    " \"A1\": [[0.0,0.1,0.2,0.3,0.4,0.5,0.6,0.7],"
    "          [0.1,0.0,0.1,0.0,0.1,0.0,0.1,0.0],"
    "          [0.3,0.2,0.1,0.0,0.1,0.2,0.3,0.4]]}";

struct Op {
  lgw_operator* h = nullptr;
  ~Op() { lgw_operator_free(h); }
};
}  // namespace

TEST_CASE("build, query, and apply every scheme") {
  const lgw_params p = default_params();
  const std::vector<std::string> ungauged = {
      "h-leftright", "h-naive",    "h-wilson",  "h-staggered", "u-mass",
      "u-on",        "u-int",      "u-transport", "dtqw-compact",
      "naive-dtqw",  "wilson-dtqw", "even-odd", "strauch"};
  for (const auto& scheme : ungauged) {
    Op op;
    REQUIRE(lgw_build_operator(&p, scheme.c_str(), nullptr, 0, &op.h) ==
            LGW_OK);
    int dim = 0;
    REQUIRE(lgw_operator_dim(op.h, &dim) == LGW_OK);
    CHECK(dim == 16);
    std::vector<double> data(2 * dim * dim);
    CHECK(lgw_operator_data(op.h, data.data(), data.size()) == LGW_OK);
    std::vector<double> in(2 * dim, 0.0), out(2 * dim, 0.0);
    in[0] = 1.0;
    CHECK(lgw_operator_apply(op.h, in.data(), out.data()) == LGW_OK);
    // apply on a basis vector returns the first column
    for (int r = 0; r < dim; ++r) {
      CHECK(out[2 * r] == doctest::Approx(data[2 * (r * dim)]));
      CHECK(out[2 * r + 1] == doctest::Approx(data[2 * (r * dim) + 1]));
    }
    const bool is_walk = scheme[0] != 'h';
    if (is_walk) {
      double err = 1.0;
      CHECK(lgw_operator_unitarity_error(op.h, &err) == LGW_OK);
      CHECK(err <= 1e-12);
    }
  }
  for (const char* scheme : {"gauged-leftright", "gauged-naive",
                             "h-gauged-leftright", "h-gauged-naive"}) {
    Op op;
    REQUIRE(lgw_build_operator(&p, scheme, kGaugeJson, 0, &op.h) == LGW_OK);
  }
}

TEST_CASE("spectrum output is sorted and unimodular for walks") {
  const lgw_params p = default_params();
  Op op;
  REQUIRE(lgw_build_operator(&p, "dtqw-compact", nullptr, 0, &op.h) == LGW_OK);
  std::vector<double> ev(32);
  REQUIRE(lgw_operator_spectrum(op.h, 1, ev.data(), ev.size()) == LGW_OK);
  double prev = -10.0;
  for (int i = 0; i < 16; ++i) {
    const double mag = std::hypot(ev[2 * i], ev[2 * i + 1]);
    CHECK(std::abs(mag - 1.0) <= 1e-12);
    const double phase = std::atan2(ev[2 * i + 1], ev[2 * i]);
    CHECK(phase >= prev - 1e-12);
    prev = phase;
  }
}

TEST_CASE("invalid inputs produce LGW_ERR_INVALID and a message") {
  lgw_params p = default_params();
  Op op;
  CHECK(lgw_build_operator(&p, "no-such-scheme", nullptr, 0, &op.h) ==
        LGW_ERR_INVALID);
  CHECK(std::strlen(lgw_last_error()) > 0);
  p.n_sites = 7;
  CHECK(lgw_build_operator(&p, "h-naive", nullptr, 0, &op.h) ==
        LGW_ERR_INVALID);
  p = default_params();
  CHECK(lgw_build_operator(&p, "gauged-leftright", nullptr, 0, &op.h) ==
        LGW_ERR_INVALID);
  CHECK(lgw_build_operator(&p, "gauged-leftright", "{bad json", 0, &op.h) ==
        LGW_ERR_INVALID);
  CHECK(lgw_build_operator(nullptr, "h-naive", nullptr, 0, &op.h) ==
        LGW_ERR_INVALID);
}

TEST_CASE("verification suites pass on default parameters") {
  const lgw_params p = default_params();
  for (const char* suite : {"unitarity", "ultralocality", "equivalence",
                            "gauge", "convergence", "symmetry"}) {
    char* report = nullptr;
    int passed = 0;
    REQUIRE(lgw_run_verify_suite(&p, suite, nullptr, 7, &report, &passed) ==
            LGW_OK);
    CHECK(passed == 1);
    REQUIRE(report != nullptr);
    CHECK(std::string(report).find("\"passed\": true") != std::string::npos);
    lgw_string_free(report);
  }
  char* report = nullptr;
  int passed = 0;
  CHECK(lgw_run_verify_suite(&p, "bogus", nullptr, 0, &report, &passed) ==
        LGW_ERR_INVALID);
  // gauge suite with an explicit field
  REQUIRE(lgw_run_verify_suite(&p, "gauge", kGaugeJson, 7, &report, &passed) ==
          LGW_OK);
  CHECK(passed == 1);
  lgw_string_free(report);
}

TEST_CASE("per-step trotter error is small and shrinks with dt") {
  lgw_params p = default_params();
  double coarse = 0.0, fine = 0.0;
  REQUIRE(lgw_per_step_error(&p, "dtqw-compact", &coarse) == LGW_OK);
  p.dt = 0.25;
  REQUIRE(lgw_per_step_error(&p, "dtqw-compact", &fine) == LGW_OK);
  CHECK(fine < coarse);
  CHECK(coarse < 0.5);
  CHECK(fine < 0.1);
  double err = 0.0;
  CHECK(lgw_per_step_error(&p, "h-naive", &err) == LGW_ERR_INVALID);
}

TEST_CASE("mapping coefficients report") {
  const lgw_params p = {1.0, 0.8, 0.0, 1.0, 8};
  char* report = nullptr;
  REQUIRE(lgw_map_coefficients(&p, 8, 128, &report) == LGW_OK);
  const std::string s(report);
  CHECK(s.find("\"coefficients\"") != std::string::npos);
  CHECK(s.find("\"offset\": -8") != std::string::npos);
  lgw_string_free(report);
  CHECK(lgw_map_coefficients(&p, 8, 16, &report) == LGW_ERR_INVALID);
}

TEST_CASE("gauge check report") {
  const lgw_params p = default_params();
  char* report = nullptr;
  int passed = 0;
  REQUIRE(lgw_gauge_check(&p, kGaugeJson, 3, &report, &passed) == LGW_OK);
  CHECK(passed == 1);
  CHECK(std::string(report).find("\"F01\"") != std::string::npos);
  lgw_string_free(report);
  REQUIRE(lgw_gauge_check(&p, nullptr, 3, &report, &passed) == LGW_OK);
  CHECK(passed == 1);
  lgw_string_free(report);
}
