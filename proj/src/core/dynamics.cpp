#include "ewa/dynamics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ewa/error.hpp"

namespace ewa {

namespace {

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

void require_interior(Profile s) {
  if (!(s.x > 0.0 && s.x < 1.0 && s.y > 0.0 && s.y < 1.0))
    fail(ErrorCode::DomainError, "state must lie strictly inside the unit square");
}

constexpr double kUpper = 1.0 - std::numeric_limits<double>::epsilon() / 2;
constexpr double kLower = std::numeric_limits<double>::min();

}  // namespace

void LearningConfig::validate() const {
  if (!std::isfinite(alpha) || !in_unit(alpha))
    fail(ErrorCode::InvalidArgument, "alpha must lie in [0, 1]");
  if (!std::isfinite(beta) || beta < 0.0)
    fail(ErrorCode::InvalidArgument, "beta must be a finite non-negative number");
  if (!std::isfinite(kappa) || !in_unit(kappa))
    fail(ErrorCode::InvalidArgument, "kappa must lie in [0, 1]");
  if (!std::isfinite(delta) || !in_unit(delta))
    fail(ErrorCode::InvalidArgument, "delta must lie in [0, 1]");
  if (batch && *batch == 0) fail(ErrorCode::InvalidArgument, "batch size must be >= 1");
}

double effective_beta(const LearningConfig& cfg) noexcept {
  return cfg.beta * (1.0 - (1.0 - cfg.alpha) * (1.0 - cfg.kappa));
}

double experience_fixed_point(const LearningConfig& cfg) {
  const double decay = (1.0 - cfg.alpha) * (1.0 - cfg.kappa);
  if (decay >= 1.0)
    fail(ErrorCode::NoFixedPoint, "experience has no fixed point for alpha = kappa = 0");
  return 1.0 / (1.0 - decay);
}

double logistic(double u) noexcept {
  double x;
  if (u >= 0.0) {
    x = 1.0 / (1.0 + std::exp(-2.0 * u));
  } else {
    const double z = std::exp(2.0 * u);
    x = z / (1.0 + z);
  }
  if (x > kUpper) return kUpper;
  if (x < kLower) return kLower;
  return x;
}

double half_logit(double x) {
  if (!(x > 0.0 && x < 1.0)) fail(ErrorCode::DomainError, "probability must lie in (0, 1)");
  return 0.5 * (std::log(x) - std::log1p(-x));
}

LogOdds to_transformed(Profile s) {
  require_interior(s);
  return {half_logit(s.x), half_logit(s.y)};
}

Profile from_transformed(LogOdds s) noexcept { return {logistic(s.x), logistic(s.y)}; }

LogOdds step_transformed(LogOdds s, const GameParams& gp, const LearningConfig& cfg) noexcept {
  const double keep = 1.0 - cfg.alpha;
  const double b = effective_beta(cfg);
  return {keep * s.x + b * (gp.A * std::tanh(s.y) + gp.B),
          keep * s.y + b * (gp.C * std::tanh(s.x) + gp.D)};
}

Profile step_original(Profile s, const PayoffMatrix& p, const LearningConfig& cfg) {
  require_interior(s);
  const double keep = 1.0 - cfg.alpha;
  const double b = effective_beta(cfg);

  // Expected payoffs against the opponent's current mix.
  const double row1 = p.a * s.y + p.b * (1.0 - s.y);
  const double row2 = p.c * s.y + p.d * (1.0 - s.y);
  const double col1 = p.e * s.x + p.f * (1.0 - s.x);
  const double col2 = p.g * s.x + p.h * (1.0 - s.x);

  // x' = x^{1-a} e^{b P1} / (x^{1-a} e^{b P1} + (1-x)^{1-a} e^{b P2}),
  // evaluated in the log domain.
  auto normalise = [&](double prob, double pay1, double pay2) {
    const double l1 = keep * std::log(prob) + b * pay1;
    const double l2 = keep * std::log1p(-prob) + b * pay2;
    const double diff = l2 - l1;
    double out;
    if (diff <= 0.0) {
      out = 1.0 / (1.0 + std::exp(diff));
    } else {
      const double z = std::exp(-diff);
      out = z / (1.0 + z);
    }
    if (out > kUpper) return kUpper;
    if (out < kLower) return kLower;
    return out;
  };
  return {normalise(s.x, row1, row2), normalise(s.y, col1, col2)};
}

std::vector<LogOdds> trajectory(LogOdds start, std::size_t n, const GameParams& gp,
                                const LearningConfig& cfg, std::size_t discard) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "trajectory length must be >= 1");
  std::vector<LogOdds> out;
  out.reserve(n > discard ? n - discard : 0);
  LogOdds s = start;
  for (std::size_t t = 0; t < n; ++t) {
    s = step_transformed(s, gp, cfg);
    if (!std::isfinite(s.x) || !std::isfinite(s.y))
      fail(ErrorCode::NumericalFailure, "non-finite state at step " + std::to_string(t + 1));
    if (t >= discard) out.push_back(s);
  }
  return out;
}

std::vector<Profile> trajectory(Profile start, std::size_t n, const PayoffMatrix& p,
                                const LearningConfig& cfg, std::size_t discard) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "trajectory length must be >= 1");
  std::vector<Profile> out;
  out.reserve(n > discard ? n - discard : 0);
  Profile s = start;
  for (std::size_t t = 0; t < n; ++t) {
    s = step_original(s, p, cfg);
    if (t >= discard) out.push_back(s);
  }
  return out;
}

}  // namespace ewa
