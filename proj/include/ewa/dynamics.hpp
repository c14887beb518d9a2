#pragma once

// Deterministic EWA learning map with steady-state experience.
//
// Original coordinates (x, y) are the probabilities that Row and Column play
// strategy 1. Transformed coordinates are the half log-odds
//   u = -1/2 ln(1/x - 1),
// in which the map becomes
//   u' = (1-alpha) u + beta_eff (A tanh v + B)
//   v' = (1-alpha) v + beta_eff (C tanh u + D)
// with beta_eff = beta (1 - (1-alpha)(1-kappa)).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ewa/game.hpp"

namespace ewa {

struct LearningConfig {
  double alpha = 0.5;  // memory loss
  double beta = 1.0;   // intensity of choice
  double kappa = 1.0;  // 1: cumulative, 0: average reinforcement
  double delta = 1.0;  // forgone-payoff weight; stochastic play with T=1 only
  // Batch size of sampled play; nullopt is the deterministic (T -> inf) map.
  std::optional<std::uint64_t> batch;

  // Throws InvalidArgument when a field is out of range.
  void validate() const;
  // alpha == 0 and kappa == 0: fictitious play, no steady-state experience.
  bool limit_mode() const noexcept { return alpha == 0.0 && kappa == 0.0; }
};

// Mixed-strategy profile in original coordinates.
struct Profile {
  double x = 0.5;
  double y = 0.5;
};

// Mixed-strategy profile in transformed (half log-odds) coordinates.
struct LogOdds {
  double x = 0.0;
  double y = 0.0;
};

double effective_beta(const LearningConfig& cfg) noexcept;

// N* = 1 / (1 - (1-alpha)(1-kappa)). Throws NoFixedPoint in limit mode.
double experience_fixed_point(const LearningConfig& cfg);

// Throws DomainError unless 0 < x, y < 1.
LogOdds to_transformed(Profile s);

// Stable logistic; the result is kept strictly inside (0, 1) by saturating
// at the nearest representable values.
Profile from_transformed(LogOdds s) noexcept;

double logistic(double u) noexcept;  // 1 / (1 + e^{-2u}), saturating
double half_logit(double x);         // inverse of logistic

LogOdds step_transformed(LogOdds s, const GameParams& gp, const LearningConfig& cfg) noexcept;

// Logit-normalised update evaluated directly on the payoff matrix.
// Throws DomainError at the simplex boundary.
Profile step_original(Profile s, const PayoffMatrix& p, const LearningConfig& cfg);

// n-step orbit, excluding the start state; the first `discard` states are
// dropped from the result.
std::vector<LogOdds> trajectory(LogOdds start, std::size_t n, const GameParams& gp,
                                const LearningConfig& cfg, std::size_t discard = 0);
std::vector<Profile> trajectory(Profile start, std::size_t n, const PayoffMatrix& p,
                                const LearningConfig& cfg, std::size_t discard = 0);

}  // namespace ewa
