#include "ewa/presets.hpp"

#include <string>
#include <utility>
#include <vector>

#include "ewa/error.hpp"

namespace ewa {

namespace {

//                                 a      b    c    d     e     f    g    h
constexpr PayoffMatrix kCoordination{5, -1, 0, 3, 2, -3, 1, 4};
constexpr PayoffMatrix kAnticoordination{1, 5, 2, 4, 0, 3, 4, 1};
constexpr PayoffMatrix kDiscoordination{4, -1, -3, 3, -3, 2, -2, -5};
constexpr PayoffMatrix kDominance{5, -1, 0, -2, 3, -1, 2, -3};
constexpr PayoffMatrix kCycle{4, 0, 0, 4, -4, 0, 0, -4};
constexpr PayoffMatrix kChaotic{-11.8, 0, 0, -1.8, 11.8, 0, 0, 1.8};
constexpr PayoffMatrix kDominanceSmall{2, 0, 0, -1, 2, 0, 0, -1};
constexpr PayoffMatrix kParetoCoordination{6, 0, 0, 1, 6, 0, 0, 1};

LearningConfig det(double alpha, double beta) {
  LearningConfig c;
  c.alpha = alpha;
  c.beta = beta;
  return c;
}

LearningConfig stoch(double alpha, double beta, std::uint64_t t, double delta = 1.0) {
  LearningConfig c = det(alpha, beta);
  c.batch = t;
  c.delta = delta;
  return c;
}

Preset classify_preset(std::string_view name, std::string_view summary, PayoffMatrix p) {
  Preset s;
  s.name = name;
  s.command = "classify";
  s.summary = summary;
  s.payoffs = p;
  return s;
}

Preset simulate_preset(std::string_view name, std::string_view summary, PayoffMatrix p,
                       LearningConfig cfg, std::size_t steps) {
  Preset s;
  s.name = name;
  s.command = "simulate";
  s.summary = summary;
  s.payoffs = p;
  s.cfg = cfg;
  s.steps = steps;
  return s;
}

Preset alpha_scan_preset(std::string_view name, std::string_view command,
                         std::string_view summary, LearningConfig cfg) {
  Preset s;
  s.name = name;
  s.command = command;
  s.summary = summary;
  s.payoffs = kChaotic;
  s.cfg = cfg;
  s.scan = AxisRange{ScanAxis::Alpha, 0.01, 1.0, 100, cfg};
  s.steps = 200;
  s.transient = 1000;
  return s;
}

std::vector<Preset> build() {
  std::vector<Preset> v;
  v.push_back(classify_preset("table1-coordination", "coordination example", kCoordination));
  v.push_back(classify_preset("table1-anticoordination", "anticoordination example", kAnticoordination));
  v.push_back(classify_preset("table1-discoordination", "discoordination example", kDiscoordination));
  v.push_back(classify_preset("table1-dominance", "dominance-solvable example", kDominance));

  {
    Preset s;
    s.name = "fig2";
    s.command = "fixed-points";
    s.summary = "fixed points for A=C, B=D at alpha/beta=1";
    s.cfg = det(1.0, 1.0);
    s.grid = GridRange{-3, 3, 25, -3, 3, 25};
    s.symmetry = GridSymmetry::Symmetric;
    v.push_back(s);
  }
  {
    Preset s;
    s.name = "fig3";
    s.command = "fixed-points";
    s.summary = "fixed points for A=-C, B=-D at alpha=beta=0.8";
    s.cfg = det(0.8, 0.8);
    s.grid = GridRange{-3, 3, 25, -3, 3, 25};
    s.symmetry = GridSymmetry::Antisymmetric;
    v.push_back(s);
  }

  v.push_back(simulate_preset("fig4a", "limit cycle, fast switching", kCycle, det(0.7, 1.0), 10000));
  v.push_back(simulate_preset("fig4b", "limit cycle, smooth", kCycle, det(0.01, 0.1), 10000));
  v.push_back(simulate_preset("fig4c", "limit cycle, long memory", kCycle, det(0.01, 0.5), 10000));
  v.push_back(simulate_preset("fig4d", "chaotic discoordination", kChaotic, det(0.7, 1.0), 10000));

  {
    Preset s = alpha_scan_preset("fig5", "bifurcation", "alpha and beta scans of the chaotic game",
                                 det(0.7, 1.0));
    s.alt_scan = AxisRange{ScanAxis::Beta, 0.01, 1.5, 100, det(0.7, 1.0)};
    v.push_back(s);
  }
  for (const auto& [name, alpha] : {std::pair<std::string_view, double>{"fig6a", 0.7}, {"fig6b", 0.1}}) {
    Preset s;
    s.name = name;
    s.command = "lyapunov";
    s.summary = "LLE over A, B with C=-A, D=-B";
    s.cfg = det(alpha, 1.0);
    s.grid = GridRange{0, 5, 32, 0, 5, 32};
    s.symmetry = GridSymmetry::Antisymmetric;
    s.steps = 100000;
    s.transient = 10000;
    v.push_back(s);
  }
  {
    Preset s;
    s.name = "fig7";
    s.command = "ensemble";
    s.summary = "class fractions against payoff correlation";
    s.scan = AxisRange{ScanAxis::Alpha, -1.0, 1.0, 21, {}};  // gamma range
    s.samples = 10000;
    v.push_back(s);
  }
  v.push_back(simulate_preset("fig8a", "stochastic play, chaotic regime", kChaotic, stoch(0.2, 1.0, 1), 10000));
  v.push_back(simulate_preset("fig8b", "stochastic play, stable regime", kChaotic, stoch(0.2, 0.1, 1), 10000));
  {
    Preset s = simulate_preset("fig9", "move autocorrelation, chaotic regime", kChaotic,
                               stoch(0.2, 1.0, 1), 10000);
    s.command = "autocorr";
    v.push_back(s);
  }
  v.push_back(alpha_scan_preset("fig10", "bifurcation", "stochastic alpha scan at T=1", stoch(0.7, 1.0, 1)));
  {
    Preset s;
    s.name = "figA1";
    s.command = "ensemble";
    s.summary = "dominance-solvable fraction at fixed AC and |BD|";
    s.grid = GridRange{-5, 5, 21, 0, 5, 11};
    s.samples = 1000;
    v.push_back(s);
  }
  v.push_back(simulate_preset("figA2", "stochastic play, dominance-solvable", kDominanceSmall,
                              stoch(0.3, 0.5, 1), 1000));
  {
    Preset s = simulate_preset("figA3", "stochastic play, Pareto-ranked coordination",
                               kParetoCoordination, stoch(0.1, 1.0, 1), 1000);
    s.start = {0.1, 0.05};
    v.push_back(s);
  }
  v.push_back(alpha_scan_preset("figA4", "bifurcation", "stochastic alpha scan at T=10", stoch(0.7, 1.0, 10)));
  return v;
}

}  // namespace

std::span<const Preset> presets() noexcept {
  static const std::vector<Preset> table = build();
  return table;
}

const Preset& find_preset(std::string_view name) {
  for (const Preset& p : presets())
    if (p.name == name) return p;
  fail(ErrorCode::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

}  // namespace ewa
