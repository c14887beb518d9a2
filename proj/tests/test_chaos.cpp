#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ewa/chaos.hpp"
#include "ewa/error.hpp"
#include "ewa/fixedpoint.hpp"

using namespace ewa;

namespace {

LearningConfig config(double alpha, double beta) {
  LearningConfig c;
  c.alpha = alpha;
  c.beta = beta;
  return c;
}

const PayoffMatrix kChaotic{-11.8, 0, 0, -1.8, 11.8, 0, 0, 1.8};
const LogOdds kStart = to_transformed({0.3, 0.4});

double spread(const std::vector<BifurcationPoint>& rows, double param) {
  double lo = 1, hi = 0;
  for (const auto& r : rows)
    if (r.param == param) {
      lo = std::min(lo, r.x);
      hi = std::max(hi, r.x);
    }
  return hi - lo;
}

}  // namespace

TEST_CASE("zero game contracts at ln(1 - alpha)") {
  const LyapunovResult r = lyapunov_spectrum(kStart, {}, config(0.5, 1), {10000, 1000, 10});
  CHECK(std::abs(r.lambda1 - std::log(0.5)) < 1e-6);
  CHECK(std::abs(r.lambda2 - std::log(0.5)) < 1e-6);
  CHECK(r.n_steps == 10000);
  CHECK(r.transient == 1000);
  CHECK(r.renorm_interval == 10);
  REQUIRE(r.kaplan_yorke);
  CHECK(*r.kaplan_yorke == 0.0);
}

TEST_CASE("chaotic reference parameters") {
  const GameParams gp = params(kChaotic);
  const LyapunovResult chaos = lyapunov_spectrum(kStart, gp, config(0.7, 1));
  CHECK(chaos.lambda1 > 0.01);
  CHECK(chaos.lambda1 >= chaos.lambda2);
  CHECK(chaos.lambda1 + chaos.lambda2 < 0);
  REQUIRE(chaos.kaplan_yorke);
  CHECK(*chaos.kaplan_yorke > 1.0);
  CHECK(*chaos.kaplan_yorke < 2.0);

  const LyapunovResult calm = lyapunov_spectrum(kStart, gp, config(0.7, 0.3));
  CHECK(calm.lambda1 < -0.01);
}

TEST_CASE("kaplan_yorke") {
  CHECK(kaplan_yorke(-0.1, -0.5) == 0.0);
  CHECK(kaplan_yorke(0.2, -0.8) == doctest::Approx(1.25));
  CHECK(kaplan_yorke(0.2, -0.1) == 2.0);
}

TEST_CASE("option validation") {
  CHECK_THROWS_AS(lyapunov_spectrum(kStart, {}, config(0.5, 1), {1000, 0, 0}), Error);
  CHECK_THROWS_AS(lyapunov_spectrum(kStart, {}, config(0.5, 1), {1000, 0, 51}), Error);
  CHECK_THROWS_AS(lyapunov_spectrum(kStart, {}, config(0.5, 1), {0, 0, 10}), Error);
}

TEST_CASE("converged orbits reproduce the fixed-point spectral radius") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> par(-2, 2), unit(0.1, 1.0);
  int converged = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const GameParams gp{par(gen), par(gen), par(gen), par(gen)};
    const double alpha = unit(gen), beta = unit(gen);
    const LearningConfig c = config(alpha, beta);
    const auto orbit = trajectory(kStart, 20000, gp, c);
    bool settled = true;
    for (std::size_t t = orbit.size() - 100; t < orbit.size(); ++t)
      settled = settled && std::abs(orbit[t].x - orbit[t - 1].x) < 1e-12 &&
                std::abs(orbit[t].y - orbit[t - 1].y) < 1e-12;
    if (!settled) continue;
    ++converged;
    const double rho = stability(orbit.back(), gp, c).spectral_radius;
    const LyapunovResult r = lyapunov_spectrum(kStart, gp, c, {20000, 5000, 10});
    CHECK(std::abs(r.lambda1 - std::log(rho)) < 1e-3);
  }
  CHECK(converged > 20);
}

TEST_CASE("renormalisation interval does not change the exponent") {
  const GameParams gp = params(kChaotic);
  const double ref = lyapunov_spectrum(kStart, gp, config(0.7, 1), {100000, 10000, 1}).lambda1;
  for (std::size_t k : {5, 20}) {
    const double l = lyapunov_spectrum(kStart, gp, config(0.7, 1), {100000, 10000, k}).lambda1;
    CHECK(std::abs(l - ref) < 1e-3);
  }
}

TEST_CASE("exponent is insensitive to the start on the attractor") {
  const GameParams gp = params(kChaotic);
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> start(0.05, 0.95);
  std::vector<double> values;
  for (int i = 0; i < 5; ++i) {
    const LogOdds s = to_transformed({start(gen), start(gen)});
    values.push_back(lyapunov_spectrum(s, gp, config(0.7, 1)).lambda1);
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  CHECK(*hi - *lo < 5e-3);
}

TEST_CASE("four-fold symmetry of the exponent grid") {
  const LearningConfig c = config(0.7, 1);
  const LyapunovOptions opts{20000, 2000, 10};
  for (double a : {0.5, 2.0, 4.0})
    for (double b : {0.5, 1.5, 3.0}) {
      auto lle = [&](double A, double B) {
        return lyapunov_spectrum(kStart, apply_symmetry(GridSymmetry::Antisymmetric, A, B), c, opts)
            .lambda1;
      };
      const double base = lle(a, b);
      CHECK(std::abs(lle(-a, b) - base) < 1e-3);
      CHECK(std::abs(lle(a, -b) - base) < 1e-3);
    }
}

TEST_CASE("linspace and with_axis") {
  const auto v = linspace(0.01, 1.0, 100);
  REQUIRE(v.size() == 100);
  CHECK(v.front() == 0.01);
  CHECK(v.back() == 1.0);
  CHECK(linspace(2.0, 3.0, 1) == std::vector<double>{2.0});
  CHECK(with_axis(config(0.7, 1), ScanAxis::Beta, 0.3).beta == 0.3);
  CHECK(with_axis(config(0.7, 1), ScanAxis::Alpha, 0.3).alpha == 0.3);
}

TEST_CASE("bifurcation scan along alpha") {
  BifurcationOptions opts;
  opts.lo = 0.01;
  opts.hi = 1.0;
  opts.n_points = 100;
  opts.n_record = 200;
  const auto rows = bifurcation_scan(params(kChaotic), config(0.7, 1), ScanAxis::Alpha, opts, 4);
  REQUIRE(rows.size() == 100 * 200);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].param <= rows[i].param);
  const auto values = linspace(0.01, 1.0, 100);
  double widest = 0;
  for (double a : values)
    if (a > 0.3 && a < 0.9) widest = std::max(widest, spread(rows, a));
  CHECK(widest > 0.5);
  // Near alpha = 1 the recorded set is a short cycle.
  std::vector<double> distinct;
  for (const auto& r : rows)
    if (r.param == 1.0 &&
        std::none_of(distinct.begin(), distinct.end(),
                     [&](double d) { return std::abs(d - r.x) < 1e-6; }))
      distinct.push_back(r.x);
  CHECK(distinct.size() <= 8);

  const auto serial = bifurcation_scan(params(kChaotic), config(0.7, 1), ScanAxis::Alpha, opts, 1);
  REQUIRE(serial.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) REQUIRE(serial[i].x == rows[i].x);
}

TEST_CASE("bifurcation scan collapses for weak intensity") {
  BifurcationOptions opts;
  opts.lo = 0.01;
  opts.hi = 0.49;
  opts.n_points = 25;
  opts.n_transient = 5000;
  const auto rows = bifurcation_scan(params(kChaotic), config(0.7, 1), ScanAxis::Beta, opts);
  for (double b : linspace(0.01, 0.49, 25)) CHECK(spread(rows, b) < 1e-6);

  const auto dom = bifurcation_scan(params(PayoffMatrix{5, -1, 0, -2, 3, -1, 2, -3}),
                                    config(0.5, 1), ScanAxis::Alpha, opts);
  for (double a : linspace(0.01, 0.49, 25)) CHECK(spread(dom, a) < 1e-6);
}

TEST_CASE("lle_scan") {
  const auto values = linspace(0.5, 1.0, 3);
  const auto rows = lle_scan(params(kChaotic), config(0.7, 1), ScanAxis::Beta, values,
                             {0.3, 0.4}, {20000, 2000, 10}, 2);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rows[i].param == values[i]);
    CHECK(rows[i].lambda1 >= rows[i].lambda2);
  }
}

TEST_CASE("lle_grid") {
  const std::vector<double> a{0.0, 2.0}, b{0.0, 3.0};
  const auto rows = lle_grid(a, b, config(0.7, 1), {0.3, 0.4}, {10000, 1000, 10}, 2);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].A == 0.0);
  CHECK(rows[0].B == 0.0);
  CHECK(rows[0].lle == doctest::Approx(std::log(0.3)).epsilon(1e-6));
  CHECK(rows[1].B == 3.0);
  CHECK(rows[1].lle < 0);
  CHECK(rows[3].A == 2.0);
  CHECK(rows[3].B == 3.0);
  CHECK(rows[3].lle < 0);
}
