#include "oack/checks.hpp"

#include <doctest.h>

#include <algorithm>

using namespace oack;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 12);
  CHECK(names.front() == "isomorphism");
  for (const char* required : {"isomorphism", "parity", "mu0", "duality", "extremes",
                               "sharpness", "isometries", "induced", "smoothness",
                               "orthosymmetry"}) {
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
  CHECK_THROWS_AS(run_suite("nope", CheckOptions{}), std::invalid_argument);
  CHECK(run_suites("core", CheckOptions{}).size() == 1);
}

TEST_CASE("suites pass and rerun identically at reduced scale") {
  CheckOptions opts;
  opts.seed = 3;
  opts.trials = 30;
  opts.k_max = 3;
  opts.n_max = 4;
  for (const char* name : {"isomorphism", "parity", "mu0", "duality", "sharpness",
                           "smoothness", "orthosymmetry", "core", "norms"}) {
    CAPTURE(name);
    CheckReport first = run_suite(name, opts);
    CheckReport second = run_suite(name, opts);
    CHECK(first.ok());
    CHECK(first.cases > 0);
    CHECK(first.cases == second.cases);
    CHECK(first.failures.size() == second.failures.size());
  }
}

TEST_CASE("extreme point suite scales with the dimension knob") {
  CheckOptions opts;
  opts.k_max = 2;
  CheckReport r = run_suite("extremes", opts);
  CHECK(r.ok());
  CHECK(r.cases == 8); // two dimensions, four balls
}

TEST_CASE("seeds change the corpus but not the verdict") {
  CheckOptions a;
  a.trials = 40;
  a.seed = 1;
  CheckOptions b = a;
  b.seed = 2;
  CHECK(run_suite("mu0", a).ok());
  CHECK(run_suite("mu0", b).ok());
}
