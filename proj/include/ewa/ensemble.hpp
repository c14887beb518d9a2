#pragma once

// Random 2x2 games: the correlated-Gaussian ensemble and conditional draws
// at fixed coordination and dominance.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ewa/game.hpp"
#include "ewa/rng.hpp"

namespace ewa {

struct EnsembleSpec {
  double gamma = 0.0;
  std::size_t n_samples = 10000;
  std::uint64_t seed = 1;

  void validate() const;
};

// Each cell independently: (Row, Column) = (u, gamma u + sqrt(1 - gamma^2) v).
PayoffMatrix sample_game(double gamma, Rng& rng);

struct ClassFractions {
  double gamma = 0.0;
  std::size_t n = 0;
  std::size_t dominance = 0, coordination = 0, anticoordination = 0, discoordination = 0;

  double frac(std::size_t count) const noexcept;
  // Binomial standard error sqrt(f (1 - f) / n).
  double se(std::size_t count) const noexcept;
};

// Draws are split into fixed chunks with their own substreams, so the result
// does not depend on the thread count.
ClassFractions class_fractions(const EnsembleSpec& spec, unsigned threads = 1,
                               std::uint64_t stream_base = 0);

// One entry per gamma; gamma i uses stream block i of the seed.
std::vector<ClassFractions> gamma_sweep(std::span<const double> gammas, std::size_t n_samples,
                                        std::uint64_t seed, unsigned threads = 1);

// Parameters with coordination AC = ac and dominance |BD| = bd_abs:
// |A|, |B| log-uniform on [1e-2, 1e2], random signs.
GameParams sample_params(double ac, double bd_abs, Rng& rng);

struct DominanceCell {
  double ac = 0.0;
  double bd_abs = 0.0;
  std::size_t n_valid = 0;  // draws giving a non-degenerate game
  double frac_dominance = 0.0;
  double se = 0.0;
};

// Rows ordered by ac, then bd_abs; node k uses stream k.
std::vector<DominanceCell> dominance_fraction_grid(std::span<const double> ac_values,
                                                   std::span<const double> bd_values,
                                                   std::size_t n_per_cell, std::uint64_t seed,
                                                   unsigned threads = 1);

}  // namespace ewa
