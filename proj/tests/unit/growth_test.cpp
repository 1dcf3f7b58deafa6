#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "confkit/conformance.hpp"
#include "generators.hpp"

namespace confkit {
namespace {

volatile bool sink = false;

// Repeats the check until at least 20 ms have elapsed.
double seconds_per_run(const TransitionSystem& spec, const TransitionSystem& iut) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  int runs = 0;
  double elapsed = 0.0;
  do {
    const auto v = verify_ioco(spec, iut, VerifyOptions{std::size_t{4}});
    sink = v.conforms;
    ++runs;
    elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  } while (elapsed < 0.02);
  return elapsed / runs;
}

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

TEST(Growth, VerifyIocoIsAtMostCubic) {
  testing::Rng rng(41);
  std::vector<double> log_n, log_t;
  for (std::size_t n : {8u, 16u, 32u, 64u, 128u}) {
    testing::ModelShape shape;
    shape.states = n;
    shape.inputs = 2;
    shape.outputs = 2;
    const auto spec = testing::random_iolts(rng, shape);
    const auto iut = testing::random_iolts(rng, shape);
    log_n.push_back(std::log(static_cast<double>(2 * n)));
    log_t.push_back(std::log(seconds_per_run(spec, iut)));
  }
  const auto s = slope(log_n, log_t);
  RecordProperty("slope", std::to_string(s));
  EXPECT_LE(s, 3.0);
}

}  // namespace
}  // namespace confkit
