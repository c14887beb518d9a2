#pragma once

// Fixed points of the transformed EWA map, their linear stability, and the
// closed-form onset-of-instability thresholds.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ewa/dynamics.hpp"
#include "ewa/game.hpp"

namespace ewa {

using Matrix2 = std::array<std::array<double, 2>, 2>;

enum class RootLabel { Unique, Central, Lateral, Tangent };
enum class Stability { Stable, Unstable, Boundary };

std::string_view to_string(RootLabel l) noexcept;
std::string_view to_string(Stability s) noexcept;

struct StabilityResult {
  std::array<std::complex<double>, 2> eigenvalues{};  // lambda+, lambda-
  double spectral_radius = 0.0;
  Stability verdict = Stability::Stable;
};

struct FixedPointReport {
  LogOdds transformed;
  Profile original;
  RootLabel label = RootLabel::Unique;
  StabilityResult stability;
  double residual = 0.0;  // max over both fixed-point equations

  bool stable() const noexcept { return stability.verdict == Stability::Stable; }
  // "Mixed strategy fixed point": both probabilities inside (0.3, 0.7).
  bool mixed() const noexcept;
};

// |rho - 1| at or below this is reported as Boundary.
inline constexpr double kStabilityTolerance = 1e-9;

// Psi(u) = ratio [A tanh(ratio (A tanh u + B)) + B]; ratio = beta_eff/alpha.
double psi(double u, double A, double B, double ratio);

// Composed map whose fixed points give the Row coordinate:
//   u -> ratio [A tanh(ratio (C tanh u + D)) + B].
double composed_map(double u, const GameParams& gp, double ratio) noexcept;

// All fixed points, sorted by the Row coordinate. Throws AlphaZero for
// alpha == 0.
std::vector<FixedPointReport> find_fixed_points(const GameParams& gp, const LearningConfig& cfg);

Matrix2 jacobian_transformed(LogOdds fp, const GameParams& gp, const LearningConfig& cfg) noexcept;
StabilityResult stability(LogOdds fp, const GameParams& gp, const LearningConfig& cfg) noexcept;

// Symmetric game with B = 0: lateral roots exist iff (beta_eff/alpha)|A| > 1.
bool lateral_existence_threshold(double A, const LearningConfig& cfg);

// Third-order estimate of the squared lateral amplitude near the pitchfork,
// 3 (r^2-1) / (r^2 (1+r^2)) with r = (beta_eff/alpha) A. Throws NotApplicable
// for |r| <= 1.
double pitchfork_amplitude_squared(double A, const LearningConfig& cfg);
double pitchfork_amplitude(double A, const LearningConfig& cfg);

// A* = sqrt(2 alpha - alpha^2) / beta_eff for B = D = 0, C = -A; +inf when
// beta_eff == 0.
double antisym_instability_threshold(const LearningConfig& cfg);

// Jacobian of the original-coordinate map (closed form). Throws DomainError
// unless 0 < x, y < 1.
Matrix2 jacobian_original(Profile s, const PayoffMatrix& p, const LearningConfig& cfg);

// Sign pattern tying Column's parameters to Row's in grid scans.
enum class GridSymmetry { Symmetric, Antisymmetric };  // C=A,D=B / C=-A,D=-B

struct FixedPointGridRow {
  double A = 0, B = 0, alpha = 0, beta = 0;
  std::size_t n_fixed_points = 0;
  FixedPointReport point;
};

// One row per fixed point, ordered by (A, B, root).
std::vector<FixedPointGridRow> scan_fixed_point_grid(GridSymmetry symmetry,
                                                     std::span<const double> a_values,
                                                     std::span<const double> b_values,
                                                     const LearningConfig& cfg,
                                                     unsigned threads = 1);

GameParams apply_symmetry(GridSymmetry symmetry, double A, double B) noexcept;

}  // namespace ewa
