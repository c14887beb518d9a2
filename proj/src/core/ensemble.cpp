#include "ewa/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ewa/error.hpp"
#include "ewa/parallel.hpp"

namespace ewa {

namespace {

constexpr std::size_t kChunk = 4096;

struct Counts {
  std::size_t dominance = 0, coordination = 0, anticoordination = 0, discoordination = 0;
};

double sign(Rng& rng) { return rng.uniform() < 0.5 ? -1.0 : 1.0; }

double log_uniform_magnitude(Rng& rng) { return std::pow(10.0, -2.0 + 4.0 * rng.uniform()); }

}  // namespace

void EnsembleSpec::validate() const {
  if (!(gamma >= -1.0 && gamma <= 1.0))
    fail(ErrorCode::InvalidArgument, "gamma must lie in [-1, 1]");
  if (n_samples < 1) fail(ErrorCode::InvalidArgument, "n_samples must be >= 1");
}

double ClassFractions::frac(std::size_t count) const noexcept {
  return n == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(n);
}

double ClassFractions::se(std::size_t count) const noexcept {
  if (n == 0) return 0.0;
  const double f = frac(count);
  return std::sqrt(f * (1.0 - f) / static_cast<double>(n));
}

PayoffMatrix sample_game(double gamma, Rng& rng) {
  const double rest = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
  double cell[4][2];
  for (auto& c : cell) {
    const double u = rng.normal();
    const double v = rng.normal();
    c[0] = u;
    c[1] = gamma * u + rest * v;
  }
  // Cells (1,1), (1,2), (2,1), (2,2); Column's payoffs are e, g, f, h there.
  return {cell[0][0], cell[1][0], cell[2][0], cell[3][0],
          cell[0][1], cell[2][1], cell[1][1], cell[3][1]};
}

ClassFractions class_fractions(const EnsembleSpec& spec, unsigned threads,
                               std::uint64_t stream_base) {
  spec.validate();
  const std::size_t chunks = (spec.n_samples + kChunk - 1) / kChunk;
  std::vector<Counts> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t k) {
    Rng rng(spec.seed, stream_base + k);
    const std::size_t todo = std::min(kChunk, spec.n_samples - k * kChunk);
    Counts& c = partial[k];
    for (std::size_t i = 0; i < todo; ++i) {
      PayoffMatrix p = sample_game(spec.gamma, rng);
      while (p.degenerate()) p = sample_game(spec.gamma, rng);
      switch (classify(p).game_class) {
        case GameClass::DominanceSolvable: ++c.dominance; break;
        case GameClass::Coordination: ++c.coordination; break;
        case GameClass::Anticoordination: ++c.anticoordination; break;
        case GameClass::Discoordination: ++c.discoordination; break;
      }
    }
  });
  ClassFractions out;
  out.gamma = spec.gamma;
  out.n = spec.n_samples;
  for (const Counts& c : partial) {
    out.dominance += c.dominance;
    out.coordination += c.coordination;
    out.anticoordination += c.anticoordination;
    out.discoordination += c.discoordination;
  }
  return out;
}

std::vector<ClassFractions> gamma_sweep(std::span<const double> gammas, std::size_t n_samples,
                                        std::uint64_t seed, unsigned threads) {
  std::vector<ClassFractions> out;
  out.reserve(gammas.size());
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const EnsembleSpec spec{gammas[i], n_samples, seed};
    out.push_back(class_fractions(spec, threads, static_cast<std::uint64_t>(i) << 32));
  }
  return out;
}

GameParams sample_params(double ac, double bd_abs, Rng& rng) {
  if (!std::isfinite(ac) || !std::isfinite(bd_abs) || bd_abs < 0.0)
    fail(ErrorCode::InvalidArgument, "coordination must be finite and dominance non-negative");
  GameParams gp;
  gp.A = sign(rng) * log_uniform_magnitude(rng);
  gp.C = ac / gp.A;
  gp.B = sign(rng) * log_uniform_magnitude(rng);
  gp.D = sign(rng) * bd_abs / gp.B;
  return gp;
}

std::vector<DominanceCell> dominance_fraction_grid(std::span<const double> ac_values,
                                                   std::span<const double> bd_values,
                                                   std::size_t n_per_cell, std::uint64_t seed,
                                                   unsigned threads) {
  if (n_per_cell < 1) fail(ErrorCode::InvalidArgument, "n_per_cell must be >= 1");
  const std::size_t nb = bd_values.size();
  std::vector<DominanceCell> rows(ac_values.size() * nb);
  parallel_for(rows.size(), threads, [&](std::size_t k) {
    DominanceCell& cell = rows[k];
    cell.ac = ac_values[k / nb];
    cell.bd_abs = bd_values[k % nb];
    Rng rng(seed, k);
    std::size_t dominance = 0;
    for (std::size_t i = 0; i < n_per_cell; ++i) {
      const PayoffMatrix p = diagonal_game(sample_params(cell.ac, cell.bd_abs, rng));
      if (p.degenerate()) continue;
      ++cell.n_valid;
      if (classify(p).game_class == GameClass::DominanceSolvable) ++dominance;
    }
    if (cell.n_valid == 0) {
      cell.frac_dominance = std::numeric_limits<double>::quiet_NaN();
      cell.se = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    const double n = static_cast<double>(cell.n_valid);
    cell.frac_dominance = static_cast<double>(dominance) / n;
    cell.se = std::sqrt(cell.frac_dominance * (1.0 - cell.frac_dominance) / n);
  });
  return rows;
}

}  // namespace ewa
