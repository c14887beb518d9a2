#include "ewa/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ewa/error.hpp"
#include "ewa/fixedpoint.hpp"
#include "ewa/parallel.hpp"

namespace ewa {

namespace {

// Tangent frame stored by columns.
struct Frame {
  double c0x = 1.0, c0y = 0.0;
  double c1x = 0.0, c1y = 1.0;

  void apply(const Matrix2& j) noexcept {
    const double ax = j[0][0] * c0x + j[0][1] * c0y;
    const double ay = j[1][0] * c0x + j[1][1] * c0y;
    const double bx = j[0][0] * c1x + j[0][1] * c1y;
    const double by = j[1][0] * c1x + j[1][1] * c1y;
    c0x = ax;
    c0y = ay;
    c1x = bx;
    c1y = by;
  }
};

struct Accumulator {
  long double log1 = 0.0L;
  long double log2 = 0.0L;
  bool dead1 = false;
  bool dead2 = false;

  // Modified Gram-Schmidt with a positive diagonal.
  void orthonormalise(Frame& f) noexcept {
    const double n1 = std::hypot(f.c0x, f.c0y);
    if (n1 == 0.0 || !std::isfinite(n1)) {
      dead1 = dead2 = true;
      f = Frame{};
      return;
    }
    f.c0x /= n1;
    f.c0y /= n1;
    log1 += std::log(static_cast<long double>(n1));

    const double proj = f.c0x * f.c1x + f.c0y * f.c1y;
    f.c1x -= proj * f.c0x;
    f.c1y -= proj * f.c0y;
    const double n2 = std::hypot(f.c1x, f.c1y);
    if (n2 == 0.0 || !std::isfinite(n2)) {
      dead2 = true;
      f.c1x = -f.c0y;
      f.c1y = f.c0x;
      return;
    }
    f.c1x /= n2;
    f.c1y /= n2;
    log2 += std::log(static_cast<long double>(n2));
  }

  LyapunovResult finish(std::size_t n, std::size_t transient, std::size_t renorm) const {
    const double inf = std::numeric_limits<double>::infinity();
    double l1 = dead1 ? -inf : static_cast<double>(log1 / static_cast<long double>(n));
    double l2 = dead2 ? -inf : static_cast<double>(log2 / static_cast<long double>(n));
    if (l2 > l1) std::swap(l1, l2);
    LyapunovResult r;
    r.lambda1 = l1;
    r.lambda2 = l2;
    r.n_steps = n;
    r.transient = transient;
    r.renorm_interval = renorm;
    r.kaplan_yorke = kaplan_yorke(l1, l2);
    return r;
  }
};

void require_finite(LogOdds s, std::size_t t) {
  if (!std::isfinite(s.x) || !std::isfinite(s.y))
    fail(ErrorCode::NumericalFailure, "non-finite state at step " + std::to_string(t));
}

}  // namespace

void LyapunovOptions::validate() const {
  if (renorm_interval < 1 || renorm_interval > 50)
    fail(ErrorCode::InvalidArgument, "renorm interval must lie in [1, 50]");
  if (n < 1) fail(ErrorCode::InvalidArgument, "number of steps must be >= 1");
}

double kaplan_yorke(double lambda1, double lambda2) noexcept {
  if (lambda1 <= 0.0) return 0.0;
  if (lambda1 + lambda2 < 0.0) return 1.0 + lambda1 / std::abs(lambda2);
  return 2.0;
}

LyapunovResult lyapunov_spectrum(LogOdds start, const GameParams& gp, const LearningConfig& cfg,
                                 const LyapunovOptions& opts) {
  cfg.validate();
  opts.validate();
  LogOdds s = start;
  require_finite(s, 0);
  for (std::size_t t = 0; t < opts.transient; ++t) {
    s = step_transformed(s, gp, cfg);
    require_finite(s, t + 1);
  }
  Frame frame;
  Accumulator acc;
  for (std::size_t t = 0; t < opts.n; ++t) {
    frame.apply(jacobian_transformed(s, gp, cfg));
    s = step_transformed(s, gp, cfg);
    require_finite(s, opts.transient + t + 1);
    if ((t + 1) % opts.renorm_interval == 0 || t + 1 == opts.n) acc.orthonormalise(frame);
  }
  return acc.finish(opts.n, opts.transient, opts.renorm_interval);
}

LyapunovResult lyapunov_along(std::span<const LogOdds> orbit, const GameParams& gp,
                              const LearningConfig& cfg, std::size_t renorm_interval) {
  if (orbit.size() < 2) fail(ErrorCode::InvalidArgument, "orbit must contain at least two states");
  LyapunovOptions check;
  check.renorm_interval = renorm_interval;
  check.validate();
  const std::size_t n = orbit.size() - 1;
  Frame frame;
  Accumulator acc;
  for (std::size_t t = 0; t < n; ++t) {
    require_finite(orbit[t], t);
    frame.apply(jacobian_transformed(orbit[t], gp, cfg));
    if ((t + 1) % renorm_interval == 0 || t + 1 == n) acc.orthonormalise(frame);
  }
  return acc.finish(n, 0, renorm_interval);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "linspace needs at least one point");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double span = hi - lo;
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + span * (static_cast<double>(i) / last);
  out[n - 1] = hi;
  return out;
}

LearningConfig with_axis(LearningConfig cfg, ScanAxis axis, double value) noexcept {
  if (axis == ScanAxis::Alpha)
    cfg.alpha = value;
  else
    cfg.beta = value;
  return cfg;
}

std::vector<BifurcationPoint> bifurcation_scan(const GameParams& gp, const LearningConfig& base,
                                               ScanAxis axis, const BifurcationOptions& opts,
                                               unsigned threads) {
  if (opts.n_record < 1) fail(ErrorCode::InvalidArgument, "n_record must be >= 1");
  const std::vector<double> values = linspace(opts.lo, opts.hi, opts.n_points);
  for (double v : values) with_axis(base, axis, v).validate();
  const LogOdds start = to_transformed(opts.start);

  std::vector<BifurcationPoint> rows(values.size() * opts.n_record);
  parallel_for(values.size(), threads, [&](std::size_t k) {
    const LearningConfig cfg = with_axis(base, axis, values[k]);
    LogOdds s = start;
    for (std::size_t t = 0; t < opts.n_transient; ++t) {
      s = step_transformed(s, gp, cfg);
      require_finite(s, t + 1);
    }
    for (std::size_t t = 0; t < opts.n_record; ++t) {
      s = step_transformed(s, gp, cfg);
      require_finite(s, opts.n_transient + t + 1);
      rows[k * opts.n_record + t] = {values[k], logistic(s.x)};
    }
  });
  return rows;
}

std::vector<LleScanPoint> lle_scan(const GameParams& gp, const LearningConfig& base, ScanAxis axis,
                                   std::span<const double> values, Profile start,
                                   const LyapunovOptions& opts, unsigned threads) {
  for (double v : values) with_axis(base, axis, v).validate();
  const LogOdds s0 = to_transformed(start);
  std::vector<LleScanPoint> rows(values.size());
  parallel_for(values.size(), threads, [&](std::size_t k) {
    const LyapunovResult r = lyapunov_spectrum(s0, gp, with_axis(base, axis, values[k]), opts);
    rows[k] = {values[k], r.lambda1, r.lambda2};
  });
  return rows;
}

std::vector<LleGridPoint> lle_grid(std::span<const double> a_values,
                                   std::span<const double> b_values, const LearningConfig& cfg,
                                   Profile start, const LyapunovOptions& opts, unsigned threads) {
  cfg.validate();
  const LogOdds s0 = to_transformed(start);
  const std::size_t nb = b_values.size();
  std::vector<LleGridPoint> rows(a_values.size() * nb);
  parallel_for(rows.size(), threads, [&](std::size_t k) {
    const double A = a_values[k / nb];
    const double B = b_values[k % nb];
    const GameParams gp = apply_symmetry(GridSymmetry::Antisymmetric, A, B);
    rows[k] = {A, B, lyapunov_spectrum(s0, gp, cfg, opts).lambda1};
  });
  return rows;
}

}  // namespace ewa
