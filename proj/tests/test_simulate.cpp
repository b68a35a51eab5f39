#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hde/errors.hpp"
#include "hde/parallel.hpp"
#include "hde/simulate.hpp"
#include "support/oracles.hpp"

using namespace hde;

TEST_CASE("scheme_from_rate pins h to n^-gamma inside the CLT regime") {
  const SamplingScheme s = scheme_from_rate(50000, 0.6, 10, 0.25, 1);
  CHECK(s.h_n == doctest::Approx(1.517e-3).epsilon(1e-3));
  CHECK(s.h_n == std::pow(50000.0, -0.6));
  CHECK(s.horizon() == doctest::Approx(75.786).epsilon(1e-3));

  const SamplingScheme s2 = scheme_from_rate(20000, 0.7, 10, 0.25, 1);
  const double nh2 = 20000.0 * s2.h_n * s2.h_n;
  CHECK(nh2 == doctest::Approx(0.019037).epsilon(1e-3));
  CHECK(nh2 < 0.02);

  CHECK_THROWS_AS(scheme_from_rate(10000, 0.5, 10, 0.25, 1), RegimeError);
  CHECK_THROWS_AS(scheme_from_rate(10000, 1.0, 10, 0.25, 1), RegimeError);
}

TEST_CASE("one deterministic Euler step when sigma vanishes") {
  const DiffusionModel m = oracle::zero_diffusion_ou();
  SamplingScheme scheme{1, 0.1, 1, 0.25, 7};
  const Trajectory traj = euler_maruyama_path(m, ParamPoint{1.0, 1.0}, scheme, 1.0);
  REQUIRE(traj.values.size() == 2);
  CHECK(traj.values[0] == 1.0);
  CHECK(traj.values[1] == 0.9);  // 1 - 1*0.1*1
}

TEST_CASE("stationary draws for ou hit the N(0, 1/2) moments") {
  const DiffusionModel ou = builtin_model("ou");
  const ParamPoint theta0{1.0, 1.0};
  Rng rng(99);
  const int draws = 100000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double x = stationary_initial_draw(ou, theta0, rng);
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / draws;
  const double var = sum2 / draws - mean * mean;
  CHECK(std::fabs(mean) < 0.02);
  CHECK(std::fabs(var - 0.5) < 0.02);
}

TEST_CASE("stationary draw is a deterministic function of the seed") {
  const DiffusionModel ou = builtin_model("ou");
  Rng a(1234), b(1234);
  CHECK(stationary_initial_draw(ou, ParamPoint{1.0, 1.0}, a) ==
        stationary_initial_draw(ou, ParamPoint{1.0, 1.0}, b));
}

TEST_CASE("hyperbolic burn-in endpoints stay in the bulk") {
  const DiffusionModel m = builtin_model("hyperbolic");
  const ParamPoint theta0{1.0, 1.0};
  const int trials = 10000;
  std::vector<double> endpoints(trials);
  parallel_for(trials, 2, [&](std::size_t i) {
    Rng rng(5000 + i);
    endpoints[i] = stationary_initial_draw(m, theta0, rng, 0.01);
  });
  for (double x : endpoints) {
    CHECK(std::isfinite(x));
    CHECK(std::fabs(x) < 50.0);
  }
}

TEST_CASE("ou path matches the closed-form lag-one autocovariance") {
  const DiffusionModel ou = builtin_model("ou");
  SamplingScheme scheme{100000, 0.01, 10, 0.25, 2020};
  const Trajectory traj = euler_maruyama_path(ou, ParamPoint{1.0, 1.0}, scheme);
  const auto& x = traj.values;
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double acov = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    acov += (x[i] - mean) * (x[i + 1] - mean);
  }
  acov /= static_cast<double>(x.size() - 1);
  CHECK(std::fabs(acov - 0.49502491687458405) < 0.01);  // (theta1^2/2theta2) e^{-theta2 h}
}

TEST_CASE("increment variance tracks h sigma^2") {
  const DiffusionModel ou = builtin_model("ou");
  SamplingScheme scheme{100000, 0.01, 10, 0.25, 31};
  const Trajectory traj = euler_maruyama_path(ou, ParamPoint{1.0, 1.0}, scheme);
  double sum = 0.0, sum2 = 0.0;
  const std::size_t m = traj.values.size() - 1;
  for (std::size_t i = 1; i <= m; ++i) {
    const double d = traj.values[i] - traj.values[i - 1];
    sum += d;
    sum2 += d * d;
  }
  const double var = sum2 / m - (sum / m) * (sum / m);
  CHECK(var == doctest::Approx(0.01).epsilon(0.05));
}

TEST_CASE("identical inputs give bit-identical trajectories") {
  const DiffusionModel ou = builtin_model("ou");
  SamplingScheme scheme{5000, 0.01, 10, 0.25, 77};
  const Trajectory a = euler_maruyama_path(ou, ParamPoint{1.0, 1.0}, scheme);
  const Trajectory b = euler_maruyama_path(ou, ParamPoint{1.0, 1.0}, scheme);
  CHECK(a == b);
}

TEST_CASE("halving the fine step shrinks the weak error of the second moment") {
  // At h = 0.8 the Euler chain's stationary variance is 0.5/(1 - theta2 h'/2),
  // so the bias is large enough to dominate the Monte Carlo noise of 1000
  // endpoint replications.
  const DiffusionModel ou = builtin_model("ou");
  const ParamPoint theta0{1.0, 1.0};
  const int reps = 1000;
  const auto second_moment = [&](std::size_t refine) {
    std::vector<double> endpoints(reps);
    parallel_for(reps, 2, [&](std::size_t r) {
      SamplingScheme scheme{1000, 0.8, refine, 0.25, 4000 + r};
      endpoints[r] = euler_maruyama_path(ou, theta0, scheme).values.back();
    });
    double s = 0.0;
    for (double x : endpoints) s += x * x;
    return s / reps;
  };
  const double err1 = std::fabs(second_moment(1) - 0.5);
  const double err2 = std::fabs(second_moment(2) - 0.5);
  const double err4 = std::fabs(second_moment(4) - 0.5);
  CHECK(err2 < err1);
  CHECK(err4 < err2);
}

TEST_CASE("paths from every builtin model keep bounded moments") {
  for (const char* name : {"ou", "hyperbolic", "tanh_drift"}) {
    const DiffusionModel m = builtin_model(name);
    for (std::uint64_t seed : {11u, 12u, 13u}) {
      SamplingScheme scheme{2000, 0.01, 5, 0.25, seed};
      const Trajectory traj = euler_maruyama_path(m, ParamPoint{1.0, 1.0}, scheme);
      double max_abs = 0.0, m4 = 0.0;
      for (double x : traj.values) {
        max_abs = std::max(max_abs, std::fabs(x));
        m4 += x * x * x * x;
      }
      m4 /= static_cast<double>(traj.values.size());
      CHECK(std::isfinite(max_abs));
      CHECK(max_abs < 100.0);
      CHECK(m4 < 100.0);
    }
  }
}

TEST_CASE("explosive test model raises a blow-up error naming the step") {
  const DiffusionModel m = oracle::explosive_model();
  SamplingScheme scheme{1000, 0.5, 1, 0.25, 3};
  try {
    euler_maruyama_path(m, ParamPoint{1.0, 1.0}, scheme, 10.0);
    FAIL("expected SimulationBlowupError");
  } catch (const SimulationBlowupError& e) {
    CHECK(std::string(e.what()).find("fine step") != std::string::npos);
  }
}
