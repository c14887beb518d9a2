#pragma once

// Finite-sample EWA play: players sample T moves per round from their logit
// mixes and update attractions against what they observed.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ewa/chaos.hpp"
#include "ewa/dynamics.hpp"
#include "ewa/game.hpp"
#include "ewa/rng.hpp"

namespace ewa {

struct AttractionState {
  std::array<double, 2> row{0.0, 0.0};
  std::array<double, 2> col{0.0, 0.0};
};

// Logit (softmax) mix; only attraction differences matter.
Profile logit_mix(const AttractionState& q, double beta) noexcept;

// Attractions reproducing `s` under logit_mix, in the gauge Q2 = 0.
// Throws InvalidArgument for beta == 0 unless s is the centre.
AttractionState attractions_from_profile(Profile s, double beta);

// Transformed coordinates of the mix, beta (Q1 - Q2) / 2 per player.
LogOdds attraction_log_odds(const AttractionState& q, double beta) noexcept;

struct StochasticStep {
  AttractionState next;
  std::uint8_t move_row = 1;  // realised move (first draw of the batch when T > 1)
  std::uint8_t move_col = 1;
  double freq_row = 0.0;  // fraction of strategy 1 in the batch
  double freq_col = 0.0;
};

// One round at batch size cfg.batch (required). For T > 1 delta is taken
// as 1.
StochasticStep step_stochastic(const AttractionState& q, const PayoffMatrix& p,
                               const LearningConfig& cfg, Rng& rng);

struct MoveSequence {
  std::vector<std::uint8_t> row;  // entries in {1, 2}
  std::vector<std::uint8_t> col;
};

struct StochasticRun {
  std::vector<Profile> states;  // mixes after each round, start excluded
  std::vector<LogOdds> orbit;   // transformed mixes, start included (n + 1)
  MoveSequence moves;
};

StochasticRun simulate_stochastic(const AttractionState& q0, const PayoffMatrix& p,
                                  const LearningConfig& cfg, std::size_t n, std::uint64_t seed,
                                  std::uint64_t stream = 0);

// Sample autocorrelation of the +1/-1 encoded moves at lags 1..max_lag
// (mean removed, normalised by the lag-0 autocovariance). Throws
// ZeroVariance for a constant sequence and InvalidArgument unless
// 1 <= max_lag < n/10.
std::vector<double> autocorrelation(std::span<const std::uint8_t> moves, std::size_t max_lag);

struct AutocorrelationResult {
  std::vector<double> row;
  std::vector<double> col;
};

AutocorrelationResult autocorrelation(const MoveSequence& s, std::size_t max_lag);

// Frozen-noise spectrum: a stochastic orbit of opts.transient + opts.n
// rounds is generated, then the deterministic Jacobian is evaluated along
// its post-transient part.
LyapunovResult lyapunov_stochastic(const AttractionState& q0, const PayoffMatrix& p,
                                   const LearningConfig& cfg, const LyapunovOptions& opts,
                                   std::uint64_t seed, std::uint64_t stream = 0);

// Parameter value k runs on stream k of `seed`.
std::vector<BifurcationPoint> stochastic_bifurcation_scan(const PayoffMatrix& p,
                                                          const LearningConfig& base,
                                                          ScanAxis axis,
                                                          const BifurcationOptions& opts,
                                                          std::uint64_t seed,
                                                          unsigned threads = 1);

std::vector<LleScanPoint> stochastic_lle_scan(const PayoffMatrix& p, const LearningConfig& base,
                                              ScanAxis axis, std::span<const double> values,
                                              Profile start, const LyapunovOptions& opts,
                                              std::uint64_t seed, unsigned threads = 1);

}  // namespace ewa
