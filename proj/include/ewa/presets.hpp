#pragma once

// Named parameter sets for the reproduction experiments.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "ewa/chaos.hpp"
#include "ewa/dynamics.hpp"
#include "ewa/fixedpoint.hpp"
#include "ewa/game.hpp"

namespace ewa {

struct AxisRange {
  ScanAxis axis = ScanAxis::Alpha;
  double lo = 0.0, hi = 1.0;
  std::size_t points = 100;
  LearningConfig cfg;  // the fixed parameter comes from here
};

struct GridRange {
  double a_lo = 0.0, a_hi = 1.0;
  std::size_t a_points = 0;
  double b_lo = 0.0, b_hi = 1.0;
  std::size_t b_points = 0;
};

struct Preset {
  std::string_view name;
  std::string_view command;  // CLI subcommand it is meant for
  std::string_view summary;
  PayoffMatrix payoffs;
  LearningConfig cfg;
  Profile start{0.3, 0.4};
  std::optional<AxisRange> scan;
  std::optional<AxisRange> alt_scan;
  std::optional<GridRange> grid;
  GridSymmetry symmetry = GridSymmetry::Symmetric;
  std::size_t steps = 10000;
  std::size_t transient = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
};

std::span<const Preset> presets() noexcept;

// Throws UnknownPreset.
const Preset& find_preset(std::string_view name);

}  // namespace ewa
