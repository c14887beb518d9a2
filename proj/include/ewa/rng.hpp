#pragma once

#include <cstdint>
#include <random>

namespace ewa {

// mt19937_64 keyed by (seed, stream). Uniform and normal variates are derived
// by hand so streams are identical across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  double uniform();  // [0, 1), 53 random bits
  double normal();   // Box-Muller
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ewa
