#pragma once

// Lyapunov spectra (Benettin tangent-frame method), Kaplan-Yorke dimension,
// bifurcation scans and LLE parameter grids for the transformed map.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ewa/dynamics.hpp"
#include "ewa/game.hpp"

namespace ewa {

struct LyapunovOptions {
  std::size_t n = 100000;        // post-transient steps
  std::size_t transient = 10000;
  std::size_t renorm_interval = 10;

  // Throws InvalidArgument unless renorm_interval is in [1, 50] and n >= 1.
  void validate() const;
};

struct LyapunovResult {
  double lambda1 = 0.0;  // natural log per step, lambda1 >= lambda2
  double lambda2 = 0.0;
  std::size_t n_steps = 0;
  std::size_t transient = 0;
  std::size_t renorm_interval = 0;
  std::optional<double> kaplan_yorke;
};

// 2-D Kaplan-Yorke dimension: 0, 1 + l1/|l2| or 2.
double kaplan_yorke(double lambda1, double lambda2) noexcept;

// Deterministic spectrum from `start` (transformed coordinates).
LyapunovResult lyapunov_spectrum(LogOdds start, const GameParams& gp, const LearningConfig& cfg,
                                 const LyapunovOptions& opts = {});

// Spectrum along a given orbit: the Jacobian of the deterministic map at
// orbit[t] propagates the frame from step t to t+1. Used for stochastic
// orbits; `transient` in the result is left at 0.
LyapunovResult lyapunov_along(std::span<const LogOdds> orbit, const GameParams& gp,
                              const LearningConfig& cfg, std::size_t renorm_interval);

enum class ScanAxis { Alpha, Beta };

// n evenly spaced values over [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, std::size_t n);

LearningConfig with_axis(LearningConfig cfg, ScanAxis axis, double value) noexcept;

struct BifurcationOptions {
  double lo = 0.0, hi = 1.0;
  std::size_t n_points = 100;
  std::size_t n_transient = 1000;
  std::size_t n_record = 100;
  Profile start{0.3, 0.4};
};

struct BifurcationPoint {
  double param;
  double x;  // original coordinates
};

// Rows ordered by parameter value, then time.
std::vector<BifurcationPoint> bifurcation_scan(const GameParams& gp, const LearningConfig& base,
                                               ScanAxis axis, const BifurcationOptions& opts,
                                               unsigned threads = 1);

struct LleScanPoint {
  double param;
  double lambda1;
  double lambda2;
};

std::vector<LleScanPoint> lle_scan(const GameParams& gp, const LearningConfig& base, ScanAxis axis,
                                   std::span<const double> values, Profile start,
                                   const LyapunovOptions& opts, unsigned threads = 1);

struct LleGridPoint {
  double A, B, lle;
};

// LLE on the (A, B) grid with C = -A, D = -B; rows ordered by A then B.
std::vector<LleGridPoint> lle_grid(std::span<const double> a_values,
                                   std::span<const double> b_values, const LearningConfig& cfg,
                                   Profile start, const LyapunovOptions& opts,
                                   unsigned threads = 1);

}  // namespace ewa
