#include "ewalab/ewalab.h"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "ewa/chaos.hpp"
#include "ewa/dynamics.hpp"
#include "ewa/ensemble.hpp"
#include "ewa/error.hpp"
#include "ewa/fixedpoint.hpp"
#include "ewa/game.hpp"
#include "ewa/presets.hpp"
#include "ewa/stochastic.hpp"

#ifndef EWALAB_VERSION
#define EWALAB_VERSION "0.0.0"
#endif

struct ewa_table {
  struct Column {
    std::string name;
    bool text = false;
    std::vector<double> num;
    std::vector<std::string> str;
  };
  std::vector<Column> cols;
  std::size_t rows = 0;

  std::size_t add(std::string name, bool text = false) {
    cols.push_back({std::move(name), text, {}, {}});
    return cols.size() - 1;
  }
  void reserve(std::size_t n) {
    for (Column& c : cols) c.text ? c.str.reserve(n) : c.num.reserve(n);
  }
  // Appends one row; `values` fills numeric columns in order, `labels`
  // the text columns.
  void push(std::initializer_list<double> values, std::initializer_list<std::string> labels = {}) {
    auto v = values.begin();
    auto l = labels.begin();
    for (Column& c : cols) {
      if (c.text)
        c.str.push_back(*l++);
      else
        c.num.push_back(*v++);
    }
    ++rows;
  }
};

namespace {

thread_local std::string g_last_error;

ewa_status map_code(ewa::ErrorCode code) {
  using ewa::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return EWA_ERR_INVALID_ARGUMENT;
    case ErrorCode::DegenerateGame: return EWA_ERR_DEGENERATE_GAME;
    case ErrorCode::DomainError: return EWA_ERR_DOMAIN;
    case ErrorCode::NoFixedPoint: return EWA_ERR_NO_FIXED_POINT;
    case ErrorCode::AlphaZero: return EWA_ERR_ALPHA_ZERO;
    case ErrorCode::BoundaryCase: return EWA_ERR_BOUNDARY_CASE;
    case ErrorCode::NotApplicable: return EWA_ERR_NOT_APPLICABLE;
    case ErrorCode::ZeroVariance: return EWA_ERR_ZERO_VARIANCE;
    case ErrorCode::NumericalFailure: return EWA_ERR_NUMERICAL;
    case ErrorCode::UnknownPreset: return EWA_ERR_UNKNOWN_PRESET;
  }
  return EWA_ERR_INTERNAL;
}

template <class F>
ewa_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return EWA_OK;
  } catch (const ewa::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return EWA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EWA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return EWA_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* ptr, const char* what) {
  if (ptr == nullptr) ewa::fail(ewa::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

ewa::PayoffMatrix to_core(const ewa_payoffs& p) {
  return {p.a, p.b, p.c, p.d, p.e, p.f, p.g, p.h};
}

ewa_payoffs to_c(const ewa::PayoffMatrix& p) { return {p.a, p.b, p.c, p.d, p.e, p.f, p.g, p.h}; }

ewa::LearningConfig to_core(const ewa_config& c) {
  ewa::LearningConfig cfg;
  cfg.alpha = c.alpha;
  cfg.beta = c.beta;
  cfg.kappa = c.kappa;
  cfg.delta = c.delta;
  if (c.batch_T > 0) cfg.batch = c.batch_T;
  cfg.validate();
  return cfg;
}

ewa_config to_c(const ewa::LearningConfig& c) {
  return {c.alpha, c.beta, c.kappa, c.delta, c.batch ? *c.batch : 0};
}

ewa::GameParams to_core(const ewa_game_params& g) { return {g.A, g.B, g.C, g.D}; }
ewa_game_params to_c(const ewa::GameParams& g) { return {g.A, g.B, g.C, g.D}; }

ewa::ScanAxis to_core(ewa_axis a) {
  if (a == EWA_AXIS_ALPHA) return ewa::ScanAxis::Alpha;
  if (a == EWA_AXIS_BETA) return ewa::ScanAxis::Beta;
  ewa::fail(ewa::ErrorCode::InvalidArgument, "unknown scan axis");
}

ewa::GridSymmetry to_core(ewa_symmetry s) {
  if (s == EWA_SYMMETRIC) return ewa::GridSymmetry::Symmetric;
  if (s == EWA_ANTISYMMETRIC) return ewa::GridSymmetry::Antisymmetric;
  ewa::fail(ewa::ErrorCode::InvalidArgument, "unknown grid symmetry");
}

ewa::LyapunovOptions to_core(const ewa_lyapunov_opts& o) {
  ewa::LyapunovOptions opts;
  opts.n = o.n;
  opts.transient = o.transient;
  opts.renorm_interval = o.renorm_interval;
  opts.validate();
  return opts;
}

ewa_game_class to_c(ewa::GameClass c) {
  switch (c) {
    case ewa::GameClass::Coordination: return EWA_CLASS_COORDINATION;
    case ewa::GameClass::Anticoordination: return EWA_CLASS_ANTICOORDINATION;
    case ewa::GameClass::Discoordination: return EWA_CLASS_DISCOORDINATION;
    case ewa::GameClass::DominanceSolvable: return EWA_CLASS_DOMINANCE_SOLVABLE;
  }
  return EWA_CLASS_DOMINANCE_SOLVABLE;
}

std::vector<double> axis_values(double lo, double hi, std::size_t n) {
  if (n == 0) ewa::fail(ewa::ErrorCode::InvalidArgument, "grid needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi))
    ewa::fail(ewa::ErrorCode::InvalidArgument, "grid bounds must be finite");
  return ewa::linspace(lo, hi, n);
}

void publish(ewa_table* built, ewa_table** out) { *out = built; }

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void fill_preset(const ewa::Preset& p, ewa_preset* out) {
  *out = ewa_preset{};
  out->name = p.name.data();
  out->command = p.command.data();
  out->summary = p.summary.data();
  out->payoffs = to_c(p.payoffs);
  out->config = to_c(p.cfg);
  out->start = {p.start.x, p.start.y};
  if (p.scan) {
    out->has_scan = 1;
    out->scan = {p.scan->axis == ewa::ScanAxis::Alpha ? EWA_AXIS_ALPHA : EWA_AXIS_BETA,
                 p.scan->lo, p.scan->hi, p.scan->points};
    out->scan_config = to_c(p.scan->cfg);
  }
  if (p.alt_scan) {
    out->has_alt_scan = 1;
    out->alt_scan = {p.alt_scan->axis == ewa::ScanAxis::Alpha ? EWA_AXIS_ALPHA : EWA_AXIS_BETA,
                     p.alt_scan->lo, p.alt_scan->hi, p.alt_scan->points};
    out->alt_scan_config = to_c(p.alt_scan->cfg);
  }
  if (p.grid) {
    out->has_grid = 1;
    out->grid = {p.grid->a_lo, p.grid->a_hi, p.grid->a_points,
                 p.grid->b_lo, p.grid->b_hi, p.grid->b_points};
  }
  out->symmetry = p.symmetry == ewa::GridSymmetry::Symmetric ? EWA_SYMMETRIC : EWA_ANTISYMMETRIC;
  out->steps = p.steps;
  out->transient = p.transient;
  out->seed = p.seed;
  out->samples = p.samples;
}

}  // namespace

extern "C" {

const char* ewa_version(void) { return EWALAB_VERSION; }

const char* ewa_last_error(void) { return g_last_error.c_str(); }

const char* ewa_status_name(ewa_status status) {
  switch (status) {
    case EWA_OK: return "ok";
    case EWA_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case EWA_ERR_DEGENERATE_GAME: return "degenerate_game";
    case EWA_ERR_DOMAIN: return "domain_error";
    case EWA_ERR_NO_FIXED_POINT: return "no_fixed_point";
    case EWA_ERR_ALPHA_ZERO: return "alpha_zero";
    case EWA_ERR_BOUNDARY_CASE: return "boundary_case";
    case EWA_ERR_NOT_APPLICABLE: return "not_applicable";
    case EWA_ERR_ZERO_VARIANCE: return "zero_variance";
    case EWA_ERR_NUMERICAL: return "numerical_failure";
    case EWA_ERR_UNKNOWN_PRESET: return "unknown_preset";
    case EWA_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

ewa_config ewa_default_config(void) { return to_c(ewa::LearningConfig{}); }

void ewa_table_free(ewa_table* table) { delete table; }

size_t ewa_table_rows(const ewa_table* table) { return table ? table->rows : 0; }

size_t ewa_table_cols(const ewa_table* table) { return table ? table->cols.size() : 0; }

const char* ewa_table_column_name(const ewa_table* table, size_t col) {
  if (!table || col >= table->cols.size()) return nullptr;
  return table->cols[col].name.c_str();
}

int ewa_table_is_text(const ewa_table* table, size_t col) {
  if (!table || col >= table->cols.size()) return 0;
  return table->cols[col].text ? 1 : 0;
}

double ewa_table_value(const ewa_table* table, size_t row, size_t col) {
  if (!table || col >= table->cols.size() || row >= table->rows || table->cols[col].text)
    return std::numeric_limits<double>::quiet_NaN();
  return table->cols[col].num[row];
}

const char* ewa_table_text(const ewa_table* table, size_t row, size_t col) {
  if (!table || col >= table->cols.size() || row >= table->rows || !table->cols[col].text)
    return nullptr;
  return table->cols[col].str[row].c_str();
}

ewa_status ewa_table_write_csv(const ewa_table* table, const char* path) {
  return guard([&] {
    require(table, "table");
    require(path, "path");
    std::FILE* f = std::fopen(path, "wb");
    if (!f) ewa::fail(ewa::ErrorCode::InvalidArgument, std::string("cannot open ") + path);
    std::string line;
    for (std::size_t j = 0; j < table->cols.size(); ++j) {
      if (j) line += ',';
      line += table->cols[j].name;
    }
    line += '\n';
    bool ok = std::fputs(line.c_str(), f) >= 0;
    for (std::size_t i = 0; i < table->rows && ok; ++i) {
      line.clear();
      for (std::size_t j = 0; j < table->cols.size(); ++j) {
        if (j) line += ',';
        const auto& c = table->cols[j];
        line += c.text ? c.str[i] : format_number(c.num[i]);
      }
      line += '\n';
      ok = std::fputs(line.c_str(), f) >= 0;
    }
    if (std::fclose(f) != 0) ok = false;
    if (!ok) ewa::fail(ewa::ErrorCode::InvalidArgument, std::string("failed writing ") + path);
  });
}

ewa_status ewa_parse_payoffs(const char* text, ewa_payoffs* out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = to_c(ewa::parse_payoffs(text));
  });
}

ewa_status ewa_game_params_of(const ewa_payoffs* p, ewa_game_params* out) {
  return guard([&] {
    require(p, "payoffs");
    require(out, "out");
    *out = to_c(ewa::params(to_core(*p)));
  });
}

ewa_status ewa_classify(const ewa_payoffs* p, ewa_classification* out) {
  return guard([&] {
    require(p, "payoffs");
    require(out, "out");
    const ewa::PayoffMatrix m = to_core(*p);
    if (!m.finite()) ewa::fail(ewa::ErrorCode::InvalidArgument, "payoffs must be finite");
    const ewa::Classification c = ewa::classify(m);
    const ewa::GameParams gp = ewa::params(m);
    ewa_classification r{};
    r.game_class = to_c(c.game_class);
    if (c.dominant_ne) {
      r.dominant_row = c.dominant_ne->row;
      r.dominant_col = c.dominant_ne->col;
    }
    r.params = to_c(gp);
    r.coordination = gp.coordination();
    r.dominance = gp.dominance();
    r.coordination_x16 = gp.coordination_x16();
    r.dominance_x16 = gp.dominance_x16();
    const std::vector<ewa::Cell> ne = ewa::pure_ne(m);
    r.n_pure_ne = static_cast<int>(ne.size());
    for (std::size_t i = 0; i < ne.size() && i < 2; ++i) {
      r.pure_ne_row[i] = ne[i].row;
      r.pure_ne_col[i] = ne[i].col;
    }
    if (const auto mixed = ewa::mixed_ne(m)) {
      r.has_mixed_ne = 1;
      r.mixed_row = mixed->row;
      r.mixed_col = mixed->col;
    }
    *out = r;
  });
}

const char* ewa_game_class_name(ewa_game_class c) {
  switch (c) {
    case EWA_CLASS_COORDINATION: return "coordination";
    case EWA_CLASS_ANTICOORDINATION: return "anticoordination";
    case EWA_CLASS_DISCOORDINATION: return "discoordination";
    case EWA_CLASS_DOMINANCE_SOLVABLE: return "dominance-solvable";
  }
  return "unknown";
}

ewa_status ewa_trajectory(const ewa_payoffs* p, const ewa_config* cfg, ewa_point start,
                          size_t steps, ewa_table** out) {
  return guard([&] {
    require(p, "payoffs");
    require(cfg, "config");
    require(out, "out");
    const ewa::LearningConfig c = to_core(*cfg);
    const ewa::LogOdds s0 = ewa::to_transformed({start.x, start.y});
    const auto orbit = ewa::trajectory(s0, steps, ewa::params(to_core(*p)), c);
    auto t = std::make_unique<ewa_table>();
    t->add("t");
    t->add("x");
    t->add("y");
    t->reserve(orbit.size() + 1);
    t->push({0.0, start.x, start.y});
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const ewa::Profile s = ewa::from_transformed(orbit[i]);
      t->push({static_cast<double>(i + 1), s.x, s.y});
    }
    publish(t.release(), out);
  });
}

ewa_status ewa_simulate_stochastic(const ewa_payoffs* p, const ewa_config* cfg, ewa_point start,
                                   size_t steps, uint64_t seed, ewa_table** out) {
  return guard([&] {
    require(p, "payoffs");
    require(cfg, "config");
    require(out, "out");
    const ewa::LearningConfig c = to_core(*cfg);
    const ewa::AttractionState q0 = ewa::attractions_from_profile({start.x, start.y}, c.beta);
    const ewa::StochasticRun run = ewa::simulate_stochastic(q0, to_core(*p), c, steps, seed);
    auto t = std::make_unique<ewa_table>();
    for (const char* name : {"t", "x", "y", "move_row", "move_col"}) t->add(name);
    t->reserve(run.states.size());
    for (std::size_t i = 0; i < run.states.size(); ++i) {
      t->push({static_cast<double>(i + 1), run.states[i].x, run.states[i].y,
               static_cast<double>(run.moves.row[i]), static_cast<double>(run.moves.col[i])});
    }
    publish(t.release(), out);
  });
}

ewa_status ewa_fixed_points(const ewa_game_params* gp, const ewa_config* cfg, ewa_table** out) {
  return guard([&] {
    require(gp, "params");
    require(cfg, "config");
    require(out, "out");
    const auto reports = ewa::find_fixed_points(to_core(*gp), to_core(*cfg));
    auto t = std::make_unique<ewa_table>();
    t->add("x_tilde");
    t->add("y_tilde");
    t->add("x_star");
    t->add("y_star");
    t->add("label", true);
    t->add("stable");
    for (const char* name : {"spectral_radius", "eig1_re", "eig1_im", "eig2_re", "eig2_im", "residual"})
      t->add(name);
    for (const auto& r : reports) {
      const auto& ev = r.stability.eigenvalues;
      t->push({r.transformed.x, r.transformed.y, r.original.x, r.original.y, r.stable() ? 1.0 : 0.0,
               r.stability.spectral_radius, ev[0].real(), ev[0].imag(), ev[1].real(), ev[1].imag(),
               r.residual},
              {std::string(ewa::to_string(r.label))});
    }
    publish(t.release(), out);
  });
}

ewa_status ewa_fixed_point_grid(ewa_symmetry symmetry, const ewa_grid_spec* grid,
                                const ewa_config* cfg, unsigned threads, ewa_table** out) {
  return guard([&] {
    require(grid, "grid");
    require(cfg, "config");
    require(out, "out");
    const auto a = axis_values(grid->a_lo, grid->a_hi, grid->a_points);
    const auto b = axis_values(grid->b_lo, grid->b_hi, grid->b_points);
    const auto rows = ewa::scan_fixed_point_grid(to_core(symmetry), a, b, to_core(*cfg), threads);
    auto t = std::make_unique<ewa_table>();
    for (const char* name : {"A", "B", "alpha", "beta", "n_fixed_points", "x_star", "y_star", "stable"})
      t->add(name);
    t->add("label", true);
    t->reserve(rows.size());
    for (const auto& r : rows) {
      t->push({r.A, r.B, r.alpha, r.beta, static_cast<double>(r.n_fixed_points), r.point.original.x,
               r.point.original.y, r.point.stable() ? 1.0 : 0.0},
              {std::string(ewa::to_string(r.point.label))});
    }
    publish(t.release(), out);
  });
}

ewa_status ewa_antisym_threshold(const ewa_config* cfg, double* out) {
  return guard([&] {
    require(cfg, "config");
    require(out, "out");
    *out = ewa::antisym_instability_threshold(to_core(*cfg));
  });
}

ewa_status ewa_pitchfork_amplitude(double A, const ewa_config* cfg, double* out) {
  return guard([&] {
    require(cfg, "config");
    require(out, "out");
    *out = ewa::pitchfork_amplitude(A, to_core(*cfg));
  });
}

ewa_status ewa_lyapunov(const ewa_payoffs* p, const ewa_config* cfg, ewa_point start,
                        const ewa_lyapunov_opts* opts, uint64_t seed, ewa_lyapunov_result* out) {
  return guard([&] {
    require(p, "payoffs");
    require(cfg, "config");
    require(opts, "options");
    require(out, "out");
    const ewa::LearningConfig c = to_core(*cfg);
    const ewa::PayoffMatrix m = to_core(*p);
    ewa::LyapunovResult r;
    if (c.batch) {
      r = ewa::lyapunov_stochastic(ewa::attractions_from_profile({start.x, start.y}, c.beta), m, c,
                                   to_core(*opts), seed);
    } else {
      r = ewa::lyapunov_spectrum(ewa::to_transformed({start.x, start.y}), ewa::params(m), c,
                                 to_core(*opts));
    }
    *out = {r.lambda1, r.lambda2, r.kaplan_yorke.value_or(0.0)};
  });
}

ewa_status ewa_lle_scan(const ewa_payoffs* p, const ewa_config* cfg, const ewa_scan_spec* scan,
                        ewa_point start, const ewa_lyapunov_opts* opts, uint64_t seed,
                        unsigned threads, ewa_table** out) {
  return guard([&] {
    require(p, "payoffs");
    require(cfg, "config");
    require(scan, "scan");
    require(opts, "options");
    require(out, "out");
    const ewa::LearningConfig c = to_core(*cfg);
    const auto values = axis_values(scan->lo, scan->hi, scan->points);
    const ewa::Profile s{start.x, start.y};
    const auto rows =
        c.batch ? ewa::stochastic_lle_scan(to_core(*p), c, to_core(scan->axis), values, s,
                                           to_core(*opts), seed, threads)
                : ewa::lle_scan(ewa::params(to_core(*p)), c, to_core(scan->axis), values, s,
                                to_core(*opts), threads);
    auto t = std::make_unique<ewa_table>();
    t->add("param");
    t->add("lambda1");
    t->add("lambda2");
    for (const auto& r : rows) t->push({r.param, r.lambda1, r.lambda2});
    publish(t.release(), out);
  });
}

ewa_status ewa_lle_grid(const ewa_grid_spec* grid, const ewa_config* cfg, ewa_point start,
                        const ewa_lyapunov_opts* opts, unsigned threads, ewa_table** out) {
  return guard([&] {
    require(grid, "grid");
    require(cfg, "config");
    require(opts, "options");
    require(out, "out");
    const ewa::LearningConfig c = to_core(*cfg);
    if (c.batch) ewa::fail(ewa::ErrorCode::InvalidArgument, "LLE grids are deterministic only");
    const auto a = axis_values(grid->a_lo, grid->a_hi, grid->a_points);
    const auto b = axis_values(grid->b_lo, grid->b_hi, grid->b_points);
    const auto rows = ewa::lle_grid(a, b, c, {start.x, start.y}, to_core(*opts), threads);
    auto t = std::make_unique<ewa_table>();
    t->add("A");
    t->add("B");
    t->add("lle");
    t->reserve(rows.size());
    for (const auto& r : rows) t->push({r.A, r.B, r.lle});
    publish(t.release(), out);
  });
}

ewa_status ewa_bifurcation(const ewa_payoffs* p, const ewa_config* cfg, const ewa_scan_spec* scan,
                           size_t transient, size_t record, ewa_point start, uint64_t seed,
                           unsigned threads, ewa_table** out) {
  return guard([&] {
    require(p, "payoffs");
    require(cfg, "config");
    require(scan, "scan");
    require(out, "out");
    const ewa::LearningConfig c = to_core(*cfg);
    ewa::BifurcationOptions opts;
    opts.lo = scan->lo;
    opts.hi = scan->hi;
    opts.n_points = scan->points;
    opts.n_transient = transient;
    opts.n_record = record;
    opts.start = {start.x, start.y};
    axis_values(scan->lo, scan->hi, scan->points);
    const auto rows =
        c.batch ? ewa::stochastic_bifurcation_scan(to_core(*p), c, to_core(scan->axis), opts, seed,
                                                   threads)
                : ewa::bifurcation_scan(ewa::params(to_core(*p)), c, to_core(scan->axis), opts,
                                        threads);
    auto t = std::make_unique<ewa_table>();
    t->add("param");
    t->add("x");
    t->reserve(rows.size());
    for (const auto& r : rows) t->push({r.param, r.x});
    publish(t.release(), out);
  });
}

ewa_status ewa_autocorrelation(const uint8_t* moves_row, const uint8_t* moves_col, size_t n,
                               size_t max_lag, ewa_table** out) {
  return guard([&] {
    require(moves_row, "moves_row");
    require(moves_col, "moves_col");
    require(out, "out");
    ewa::MoveSequence s;
    s.row.assign(moves_row, moves_row + n);
    s.col.assign(moves_col, moves_col + n);
    const ewa::AutocorrelationResult r = ewa::autocorrelation(s, max_lag);
    auto t = std::make_unique<ewa_table>();
    t->add("lag");
    t->add("r_row");
    t->add("r_col");
    for (std::size_t k = 0; k < max_lag; ++k)
      t->push({static_cast<double>(k + 1), r.row[k], r.col[k]});
    publish(t.release(), out);
  });
}

ewa_status ewa_ensemble(double gamma_lo, double gamma_hi, size_t points, size_t samples,
                        uint64_t seed, unsigned threads, ewa_table** out) {
  return guard([&] {
    require(out, "out");
    const auto gammas = axis_values(gamma_lo, gamma_hi, points);
    const auto rows = ewa::gamma_sweep(gammas, samples, seed, threads);
    auto t = std::make_unique<ewa_table>();
    for (const char* name :
         {"gamma", "frac_dominance", "frac_coordination", "frac_anticoordination",
          "frac_discoordination", "se_dominance", "se_coordination", "se_anticoordination",
          "se_discoordination"})
      t->add(name);
    for (const auto& r : rows) {
      t->push({r.gamma, r.frac(r.dominance), r.frac(r.coordination), r.frac(r.anticoordination),
               r.frac(r.discoordination), r.se(r.dominance), r.se(r.coordination),
               r.se(r.anticoordination), r.se(r.discoordination)});
    }
    publish(t.release(), out);
  });
}

ewa_status ewa_dominance_grid(const ewa_grid_spec* grid, size_t samples, uint64_t seed,
                              unsigned threads, ewa_table** out) {
  return guard([&] {
    require(grid, "grid");
    require(out, "out");
    const auto ac = axis_values(grid->a_lo, grid->a_hi, grid->a_points);
    const auto bd = axis_values(grid->b_lo, grid->b_hi, grid->b_points);
    for (double v : bd)
      if (v < 0.0) ewa::fail(ewa::ErrorCode::InvalidArgument, "|BD| values must be non-negative");
    const auto rows = ewa::dominance_fraction_grid(ac, bd, samples, seed, threads);
    auto t = std::make_unique<ewa_table>();
    t->add("ac");
    t->add("bd_abs");
    t->add("frac_dominance");
    t->add("se_dominance");
    t->reserve(rows.size());
    for (const auto& r : rows) t->push({r.ac, r.bd_abs, r.frac_dominance, r.se});
    publish(t.release(), out);
  });
}

size_t ewa_preset_count(void) { return ewa::presets().size(); }

ewa_status ewa_preset_at(size_t index, ewa_preset* out) {
  return guard([&] {
    require(out, "out");
    const auto all = ewa::presets();
    if (index >= all.size()) ewa::fail(ewa::ErrorCode::InvalidArgument, "preset index out of range");
    fill_preset(all[index], out);
  });
}

ewa_status ewa_preset_find(const char* name, ewa_preset* out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    fill_preset(ewa::find_preset(name), out);
  });
}

}  // extern "C"
