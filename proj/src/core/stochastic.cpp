#include "ewa/stochastic.hpp"

#include <cmath>
#include <string>

#include "ewa/error.hpp"
#include "ewa/parallel.hpp"

namespace ewa {

namespace {

std::uint64_t batch_size(const LearningConfig& cfg) {
  if (!cfg.batch) fail(ErrorCode::InvalidArgument, "stochastic play requires a batch size T");
  return *cfg.batch;
}

// Number of strategy-1 draws in a batch; `first` receives the first move.
std::uint64_t sample_batch(double prob, std::uint64_t t, Rng& rng, std::uint8_t& first) {
  std::uint64_t ones = 0;
  for (std::uint64_t i = 0; i < t; ++i) {
    const bool one = rng.bernoulli(prob);
    if (i == 0) first = one ? 1 : 2;
    ones += one ? 1 : 0;
  }
  return ones;
}

}  // namespace

Profile logit_mix(const AttractionState& q, double beta) noexcept {
  return {logistic(0.5 * beta * (q.row[0] - q.row[1])), logistic(0.5 * beta * (q.col[0] - q.col[1]))};
}

LogOdds attraction_log_odds(const AttractionState& q, double beta) noexcept {
  return {0.5 * beta * (q.row[0] - q.row[1]), 0.5 * beta * (q.col[0] - q.col[1])};
}

AttractionState attractions_from_profile(Profile s, double beta) {
  const LogOdds u = to_transformed(s);
  AttractionState q;
  if (beta == 0.0) {
    if (u.x != 0.0 || u.y != 0.0)
      fail(ErrorCode::InvalidArgument, "with beta = 0 only the uniform mix is reachable");
    return q;
  }
  q.row[0] = 2.0 * u.x / beta;
  q.col[0] = 2.0 * u.y / beta;
  return q;
}

StochasticStep step_stochastic(const AttractionState& q, const PayoffMatrix& p,
                               const LearningConfig& cfg, Rng& rng) {
  const std::uint64_t t = batch_size(cfg);
  const Profile mix = logit_mix(q, cfg.beta);

  StochasticStep out;
  const double tt = static_cast<double>(t);
  out.freq_row = static_cast<double>(sample_batch(mix.x, t, rng, out.move_row)) / tt;
  out.freq_col = static_cast<double>(sample_batch(mix.y, t, rng, out.move_col)) / tt;

  // Payoffs of each own strategy against the opponent's observed play.
  const double fy = out.freq_col, fx = out.freq_row;
  const std::array<double, 2> pay_row{p.a * fy + p.b * (1.0 - fy), p.c * fy + p.d * (1.0 - fy)};
  const std::array<double, 2> pay_col{p.e * fx + p.f * (1.0 - fx), p.g * fx + p.h * (1.0 - fx)};

  const double keep = 1.0 - cfg.alpha;
  const double weight = 1.0 - (1.0 - cfg.alpha) * (1.0 - cfg.kappa);
  const double delta = t > 1 ? 1.0 : cfg.delta;
  for (int i = 0; i < 2; ++i) {
    const double own_row = (out.move_row == i + 1) ? 1.0 : 0.0;
    const double own_col = (out.move_col == i + 1) ? 1.0 : 0.0;
    out.next.row[i] = keep * q.row[i] + weight * (delta + (1.0 - delta) * own_row) * pay_row[i];
    out.next.col[i] = keep * q.col[i] + weight * (delta + (1.0 - delta) * own_col) * pay_col[i];
  }
  return out;
}

StochasticRun simulate_stochastic(const AttractionState& q0, const PayoffMatrix& p,
                                  const LearningConfig& cfg, std::size_t n, std::uint64_t seed,
                                  std::uint64_t stream) {
  cfg.validate();
  batch_size(cfg);
  if (n == 0) fail(ErrorCode::InvalidArgument, "number of rounds must be >= 1");
  Rng rng(seed, stream);
  StochasticRun run;
  run.states.reserve(n);
  run.orbit.reserve(n + 1);
  run.moves.row.reserve(n);
  run.moves.col.reserve(n);
  run.orbit.push_back(attraction_log_odds(q0, cfg.beta));

  AttractionState q = q0;
  for (std::size_t t = 0; t < n; ++t) {
    const StochasticStep st = step_stochastic(q, p, cfg, rng);
    q = st.next;
    const LogOdds u = attraction_log_odds(q, cfg.beta);
    if (!std::isfinite(u.x) || !std::isfinite(u.y))
      fail(ErrorCode::NumericalFailure, "non-finite attractions at round " + std::to_string(t + 1));
    run.orbit.push_back(u);
    run.states.push_back(logit_mix(q, cfg.beta));
    run.moves.row.push_back(st.move_row);
    run.moves.col.push_back(st.move_col);
  }
  return run;
}

std::vector<double> autocorrelation(std::span<const std::uint8_t> moves, std::size_t max_lag) {
  const std::size_t n = moves.size();
  if (max_lag < 1 || max_lag * 10 >= n)
    fail(ErrorCode::InvalidArgument, "max lag must satisfy 1 <= max_lag < n/10");
  std::vector<double> z(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (moves[i] != 1 && moves[i] != 2) fail(ErrorCode::InvalidArgument, "moves must be 1 or 2");
    z[i] = moves[i] == 1 ? 1.0 : -1.0;
    mean += z[i];
  }
  mean /= static_cast<double>(n);
  double c0 = 0.0;
  for (double& v : z) {
    v -= mean;
    c0 += v * v;
  }
  if (c0 == 0.0) fail(ErrorCode::ZeroVariance, "move sequence is constant");
  std::vector<double> r(max_lag);
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double ck = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) ck += z[i] * z[i + k];
    r[k - 1] = ck / c0;
  }
  return r;
}

AutocorrelationResult autocorrelation(const MoveSequence& s, std::size_t max_lag) {
  if (s.row.size() != s.col.size())
    fail(ErrorCode::InvalidArgument, "move sequences differ in length");
  return {autocorrelation(s.row, max_lag), autocorrelation(s.col, max_lag)};
}

LyapunovResult lyapunov_stochastic(const AttractionState& q0, const PayoffMatrix& p,
                                   const LearningConfig& cfg, const LyapunovOptions& opts,
                                   std::uint64_t seed, std::uint64_t stream) {
  opts.validate();
  const StochasticRun run = simulate_stochastic(q0, p, cfg, opts.transient + opts.n, seed, stream);
  const std::span<const LogOdds> tail(run.orbit.data() + opts.transient, opts.n + 1);
  LyapunovResult r = lyapunov_along(tail, params(p), cfg, opts.renorm_interval);
  r.transient = opts.transient;
  return r;
}

std::vector<BifurcationPoint> stochastic_bifurcation_scan(const PayoffMatrix& p,
                                                          const LearningConfig& base,
                                                          ScanAxis axis,
                                                          const BifurcationOptions& opts,
                                                          std::uint64_t seed, unsigned threads) {
  if (opts.n_record < 1) fail(ErrorCode::InvalidArgument, "n_record must be >= 1");
  const std::vector<double> values = linspace(opts.lo, opts.hi, opts.n_points);
  for (double v : values) with_axis(base, axis, v).validate();
  std::vector<BifurcationPoint> rows(values.size() * opts.n_record);
  parallel_for(values.size(), threads, [&](std::size_t k) {
    const LearningConfig cfg = with_axis(base, axis, values[k]);
    const AttractionState q0 = attractions_from_profile(opts.start, cfg.beta);
    const StochasticRun run =
        simulate_stochastic(q0, p, cfg, opts.n_transient + opts.n_record, seed, k);
    for (std::size_t t = 0; t < opts.n_record; ++t)
      rows[k * opts.n_record + t] = {values[k], run.states[opts.n_transient + t].x};
  });
  return rows;
}

std::vector<LleScanPoint> stochastic_lle_scan(const PayoffMatrix& p, const LearningConfig& base,
                                              ScanAxis axis, std::span<const double> values,
                                              Profile start, const LyapunovOptions& opts,
                                              std::uint64_t seed, unsigned threads) {
  for (double v : values) with_axis(base, axis, v).validate();
  std::vector<LleScanPoint> rows(values.size());
  parallel_for(values.size(), threads, [&](std::size_t k) {
    const LearningConfig cfg = with_axis(base, axis, values[k]);
    const AttractionState q0 = attractions_from_profile(start, cfg.beta);
    const LyapunovResult r = lyapunov_stochastic(q0, p, cfg, opts, seed, k);
    rows[k] = {values[k], r.lambda1, r.lambda2};
  });
  return rows;
}

}  // namespace ewa
