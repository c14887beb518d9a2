#include "ewa/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ewa/error.hpp"
#include "ewa/parallel.hpp"

namespace ewa {

namespace {

double sech2(double u) noexcept {
  const double s = 1.0 / std::cosh(u);
  return s * s;
}

double fixed_point_ratio(const LearningConfig& cfg) {
  if (cfg.alpha == 0.0) fail(ErrorCode::AlphaZero, "fixed-point analysis requires alpha > 0");
  return effective_beta(cfg) / cfg.alpha;
}

// G(u) = u - composed_map(u); roots are the Row coordinates of fixed points.
struct Residual {
  const GameParams& gp;
  double ratio;
  double operator()(double u) const noexcept { return u - composed_map(u, gp, ratio); }
};

double bisect(const Residual& g, double lo, double hi, double g_lo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0) == (g_lo < 0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Minimises sign * g on [lo, hi] by golden-section search.
double golden_min(const Residual& g, double lo, double hi, double sign) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = sign * g(x1);
  double f2 = sign * g(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = sign * g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = sign * g(x2);
    }
  }
  return 0.5 * (lo + hi);
}

struct Root {
  double u;
  bool tangent;
};

std::vector<Root> scan_roots(const Residual& g, double radius) {
  const std::size_t n = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::ceil(2.0 * radius / 0.005)) | 1u, 20001, 400001);
  const double half = static_cast<double>(n - 1);
  std::vector<double> u(n), gv(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = radius * (2.0 * static_cast<double>(i) - half) / half;
    gv[i] = g(u[i]);
  }

  const double tangent_tol = 1e-10 * std::max(1.0, radius);
  std::vector<Root> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (gv[i] == 0.0) {
      roots.push_back({u[i], false});
      continue;
    }
    if (i + 1 < n && gv[i + 1] != 0.0 && (gv[i] < 0) != (gv[i + 1] < 0))
      roots.push_back({bisect(g, u[i], u[i + 1], gv[i]), false});

    // A same-sign local minimum of |G| hides either a double root or two
    // roots inside one grid cell.
    if (i == 0 || i + 1 >= n) continue;
    const bool same_sign = (gv[i - 1] < 0) == (gv[i] < 0) && (gv[i + 1] < 0) == (gv[i] < 0) &&
                           gv[i - 1] != 0.0 && gv[i + 1] != 0.0;
    if (!same_sign) continue;
    if (std::abs(gv[i]) > std::abs(gv[i - 1]) || std::abs(gv[i]) > std::abs(gv[i + 1])) continue;
    const double sign = gv[i] < 0 ? -1.0 : 1.0;
    const double um = golden_min(g, u[i - 1], u[i + 1], sign);
    const double gm = g(um);
    if ((gm < 0) != (gv[i] < 0) && gm != 0.0) {
      roots.push_back({bisect(g, u[i - 1], um, gv[i - 1]), false});
      roots.push_back({bisect(g, um, u[i + 1], gm), false});
    } else if (std::abs(gm) <= tangent_tol) {
      roots.push_back({um, true});
    }
  }

  std::sort(roots.begin(), roots.end(), [](const Root& l, const Root& r) { return l.u < r.u; });
  std::vector<Root> unique;
  for (const Root& r : roots) {
    if (!unique.empty() && std::abs(r.u - unique.back().u) <= 1e-9 * std::max(1.0, std::abs(r.u))) {
      unique.back().tangent = unique.back().tangent && r.tangent;
      continue;
    }
    unique.push_back(r);
  }
  return unique;
}

}  // namespace

std::string_view to_string(RootLabel l) noexcept {
  switch (l) {
    case RootLabel::Unique: return "unique";
    case RootLabel::Central: return "central";
    case RootLabel::Lateral: return "lateral";
    case RootLabel::Tangent: return "tangent";
  }
  return "unknown";
}

std::string_view to_string(Stability s) noexcept {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Boundary: return "boundary";
  }
  return "unknown";
}

bool FixedPointReport::mixed() const noexcept {
  return original.x > 0.3 && original.x < 0.7 && original.y > 0.3 && original.y < 0.7;
}

double psi(double u, double A, double B, double ratio) {
  if (!std::isfinite(ratio) || ratio < 0.0)
    fail(ErrorCode::DomainError, "psi requires a finite non-negative beta/alpha ratio");
  return ratio * (A * std::tanh(ratio * (A * std::tanh(u) + B)) + B);
}

double composed_map(double u, const GameParams& gp, double ratio) noexcept {
  return ratio * (gp.A * std::tanh(ratio * (gp.C * std::tanh(u) + gp.D)) + gp.B);
}

std::vector<FixedPointReport> find_fixed_points(const GameParams& gp, const LearningConfig& cfg) {
  cfg.validate();
  const double ratio = fixed_point_ratio(cfg);
  const double radius = ratio * (std::abs(gp.A) + std::abs(gp.B)) + 1.0;
  if (!std::isfinite(radius)) fail(ErrorCode::NumericalFailure, "fixed-point scan radius overflow");
  const Residual g{gp, ratio};
  const std::vector<Root> roots = scan_roots(g, radius);

  std::vector<FixedPointReport> out;
  out.reserve(roots.size());
  const std::size_t simple =
      static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [](const Root& r) { return !r.tangent; }));
  std::size_t simple_index = 0;
  for (const Root& r : roots) {
    FixedPointReport rep;
    rep.transformed = {r.u, ratio * (gp.C * std::tanh(r.u) + gp.D)};
    rep.original = from_transformed(rep.transformed);
    rep.residual = std::max(std::abs(g(r.u)),
                            std::abs(rep.transformed.x -
                                     ratio * (gp.A * std::tanh(rep.transformed.y) + gp.B)));
    rep.stability = stability(rep.transformed, gp, cfg);
    if (r.tangent) {
      rep.label = RootLabel::Tangent;
    } else if (simple == 1) {
      rep.label = roots.size() == 1 ? RootLabel::Unique : RootLabel::Lateral;
    } else {
      const bool outer = simple_index == 0 || simple_index + 1 == simple;
      rep.label = outer ? RootLabel::Lateral : RootLabel::Central;
    }
    if (!r.tangent) ++simple_index;
    out.push_back(rep);
  }
  return out;
}

Matrix2 jacobian_transformed(LogOdds fp, const GameParams& gp, const LearningConfig& cfg) noexcept {
  const double keep = 1.0 - cfg.alpha;
  const double b = effective_beta(cfg);
  return {{{keep, gp.A * b * sech2(fp.y)}, {gp.C * b * sech2(fp.x), keep}}};
}

StabilityResult stability(LogOdds fp, const GameParams& gp, const LearningConfig& cfg) noexcept {
  const double keep = 1.0 - cfg.alpha;
  const double b = effective_beta(cfg);
  const double disc = b * b * gp.A * gp.C * sech2(fp.x) * sech2(fp.y);
  StabilityResult res;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    res.eigenvalues = {std::complex<double>(keep + s, 0.0), std::complex<double>(keep - s, 0.0)};
  } else {
    const double s = std::sqrt(-disc);
    res.eigenvalues = {std::complex<double>(keep, s), std::complex<double>(keep, -s)};
  }
  res.spectral_radius = std::max(std::abs(res.eigenvalues[0]), std::abs(res.eigenvalues[1]));
  if (std::abs(res.spectral_radius - 1.0) <= kStabilityTolerance)
    res.verdict = Stability::Boundary;
  else
    res.verdict = res.spectral_radius < 1.0 ? Stability::Stable : Stability::Unstable;
  return res;
}

bool lateral_existence_threshold(double A, const LearningConfig& cfg) {
  return fixed_point_ratio(cfg) * std::abs(A) > 1.0;
}

double pitchfork_amplitude_squared(double A, const LearningConfig& cfg) {
  const double r = fixed_point_ratio(cfg) * A;
  if (std::abs(r) < 1.0)
    fail(ErrorCode::NotApplicable, "pitchfork expansion requires (beta/alpha)|A| >= 1");
  const double r2 = r * r;
  return 3.0 * (r2 - 1.0) / (r2 * (1.0 + r2));
}

double pitchfork_amplitude(double A, const LearningConfig& cfg) {
  return std::sqrt(pitchfork_amplitude_squared(A, cfg));
}

double antisym_instability_threshold(const LearningConfig& cfg) {
  const double b = effective_beta(cfg);
  if (b == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(2.0 * cfg.alpha - cfg.alpha * cfg.alpha) / b;
}

Matrix2 jacobian_original(Profile s, const PayoffMatrix& p, const LearningConfig& cfg) {
  if (!(s.x > 0.0 && s.x < 1.0 && s.y > 0.0 && s.y < 1.0))
    fail(ErrorCode::DomainError, "original-coordinate Jacobian requires an interior point");
  const double al = cfg.alpha;
  const double b = effective_beta(cfg);
  const double x = s.x, y = s.y;
  const double coord_row = p.a - p.b - p.c + p.d;
  const double coord_col = p.e - p.f - p.g + p.h;

  const double ex = std::exp(b * (y * coord_row + p.b - p.d));
  const double den_x = x * std::pow(1.0 - x, al) * ex - (x - 1.0) * std::pow(x, al);
  const double ey = std::exp(b * (x * coord_col + p.f - p.h));
  const double den_y = y * std::pow(1.0 - y, al) * ey - (y - 1.0) * std::pow(y, al);

  const double vx = x - x * x;
  const double vy = y - y * y;
  Matrix2 j{};
  j[0][0] = (1.0 - al) * std::pow(vx, al) * ex / (den_x * den_x);
  j[0][1] = b * std::pow(vx, al + 1.0) * coord_row * ex / (den_x * den_x);
  j[1][0] = b * std::pow(vy, al + 1.0) * coord_col * ey / (den_y * den_y);
  j[1][1] = (1.0 - al) * std::pow(vy, al) * ey / (den_y * den_y);
  return j;
}

GameParams apply_symmetry(GridSymmetry symmetry, double A, double B) noexcept {
  if (symmetry == GridSymmetry::Symmetric) return {A, B, A, B};
  return {A, B, -A, -B};
}

std::vector<FixedPointGridRow> scan_fixed_point_grid(GridSymmetry symmetry,
                                                     std::span<const double> a_values,
                                                     std::span<const double> b_values,
                                                     const LearningConfig& cfg, unsigned threads) {
  cfg.validate();
  const std::size_t nb = b_values.size();
  std::vector<std::vector<FixedPointReport>> per_node(a_values.size() * nb);
  parallel_for(per_node.size(), threads, [&](std::size_t k) {
    const GameParams gp = apply_symmetry(symmetry, a_values[k / nb], b_values[k % nb]);
    per_node[k] = find_fixed_points(gp, cfg);
  });
  std::vector<FixedPointGridRow> rows;
  for (std::size_t k = 0; k < per_node.size(); ++k) {
    for (const FixedPointReport& rep : per_node[k]) {
      rows.push_back({a_values[k / nb], b_values[k % nb], cfg.alpha, cfg.beta, per_node[k].size(), rep});
    }
  }
  return rows;
}

}  // namespace ewa
