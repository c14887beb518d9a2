/* ewalab: C interface to the EWA learning library.
 *
 * Every function returns an ewa_status. On failure ewa_last_error() gives a
 * message for the calling thread. Tables returned through ewa_table** are
 * owned by the caller and released with ewa_table_free().
 */
#ifndef EWALAB_H
#define EWALAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(EWALAB_BUILD)
#define EWALAB_API __declspec(dllexport)
#else
#define EWALAB_API __declspec(dllimport)
#endif
#else
#define EWALAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ewa_status {
  EWA_OK = 0,
  EWA_ERR_INVALID_ARGUMENT = 1,
  EWA_ERR_DEGENERATE_GAME = 2,
  EWA_ERR_DOMAIN = 3,
  EWA_ERR_NO_FIXED_POINT = 4,
  EWA_ERR_ALPHA_ZERO = 5,
  EWA_ERR_BOUNDARY_CASE = 6,
  EWA_ERR_NOT_APPLICABLE = 7,
  EWA_ERR_ZERO_VARIANCE = 8,
  EWA_ERR_NUMERICAL = 9,
  EWA_ERR_UNKNOWN_PRESET = 10,
  EWA_ERR_INTERNAL = 11
} ewa_status;

typedef enum ewa_game_class {
  EWA_CLASS_COORDINATION = 0,
  EWA_CLASS_ANTICOORDINATION = 1,
  EWA_CLASS_DISCOORDINATION = 2,
  EWA_CLASS_DOMINANCE_SOLVABLE = 3
} ewa_game_class;

typedef enum ewa_axis { EWA_AXIS_ALPHA = 0, EWA_AXIS_BETA = 1 } ewa_axis;

/* Symmetric: C = A, D = B. Antisymmetric: C = -A, D = -B. */
typedef enum ewa_symmetry { EWA_SYMMETRIC = 0, EWA_ANTISYMMETRIC = 1 } ewa_symmetry;

/* Row payoffs a..d, Column payoffs e..h; cells (1,1)=(a,e), (1,2)=(b,g),
 * (2,1)=(c,f), (2,2)=(d,h). */
typedef struct ewa_payoffs {
  double a, b, c, d, e, f, g, h;
} ewa_payoffs;

/* batch_T = 0 selects the deterministic map. */
typedef struct ewa_config {
  double alpha, beta, kappa, delta;
  uint64_t batch_T;
} ewa_config;

typedef struct ewa_game_params {
  double A, B, C, D;
} ewa_game_params;

typedef struct ewa_point {
  double x, y;
} ewa_point;

typedef struct ewa_scan_spec {
  ewa_axis axis;
  double lo, hi;
  size_t points;
} ewa_scan_spec;

typedef struct ewa_grid_spec {
  double a_lo, a_hi;
  size_t a_points;
  double b_lo, b_hi;
  size_t b_points;
} ewa_grid_spec;

typedef struct ewa_lyapunov_opts {
  size_t n, transient, renorm_interval;
} ewa_lyapunov_opts;

typedef struct ewa_lyapunov_result {
  double lambda1, lambda2, kaplan_yorke;
} ewa_lyapunov_result;

typedef struct ewa_classification {
  ewa_game_class game_class;
  int dominant_row, dominant_col; /* 0 unless dominance-solvable */
  ewa_game_params params;
  double coordination, dominance;         /* A*C and |B*D| */
  double coordination_x16, dominance_x16; /* table scale */
  int n_pure_ne;
  int pure_ne_row[2], pure_ne_col[2];
  int has_mixed_ne;
  double mixed_row, mixed_col; /* probability of strategy 1 */
} ewa_classification;

typedef struct ewa_preset {
  const char* name;
  const char* command;
  const char* summary;
  ewa_payoffs payoffs;
  ewa_config config;
  ewa_point start;
  int has_scan;
  ewa_scan_spec scan;
  ewa_config scan_config;
  int has_alt_scan;
  ewa_scan_spec alt_scan;
  ewa_config alt_scan_config;
  int has_grid;
  ewa_grid_spec grid;
  ewa_symmetry symmetry;
  uint64_t steps, transient, seed, samples;
} ewa_preset;

/* Column-typed result table; text columns hold labels. */
typedef struct ewa_table ewa_table;

EWALAB_API const char* ewa_version(void);
EWALAB_API const char* ewa_last_error(void);
EWALAB_API const char* ewa_status_name(ewa_status status);
EWALAB_API ewa_config ewa_default_config(void);

EWALAB_API void ewa_table_free(ewa_table* table);
EWALAB_API size_t ewa_table_rows(const ewa_table* table);
EWALAB_API size_t ewa_table_cols(const ewa_table* table);
EWALAB_API const char* ewa_table_column_name(const ewa_table* table, size_t col);
EWALAB_API int ewa_table_is_text(const ewa_table* table, size_t col);
/* NaN for text columns or out-of-range indices. */
EWALAB_API double ewa_table_value(const ewa_table* table, size_t row, size_t col);
/* NULL for numeric columns or out-of-range indices. */
EWALAB_API const char* ewa_table_text(const ewa_table* table, size_t row, size_t col);
/* Header plus rows, numbers with 12 significant digits, LF endings. */
EWALAB_API ewa_status ewa_table_write_csv(const ewa_table* table, const char* path);

/* Accepts a CSV row a,...,h or a JSON object. */
EWALAB_API ewa_status ewa_parse_payoffs(const char* text, ewa_payoffs* out);
EWALAB_API ewa_status ewa_game_params_of(const ewa_payoffs* p, ewa_game_params* out);
EWALAB_API ewa_status ewa_classify(const ewa_payoffs* p, ewa_classification* out);
EWALAB_API const char* ewa_game_class_name(ewa_game_class c);

/* Columns t,x,y (original coordinates); row t = 0 is the start. */
EWALAB_API ewa_status ewa_trajectory(const ewa_payoffs* p, const ewa_config* cfg, ewa_point start,
                                     size_t steps, ewa_table** out);

/* Columns t,x,y,move_row,move_col. Requires cfg->batch_T >= 1. */
EWALAB_API ewa_status ewa_simulate_stochastic(const ewa_payoffs* p, const ewa_config* cfg,
                                              ewa_point start, size_t steps, uint64_t seed,
                                              ewa_table** out);

/* Columns x_tilde,y_tilde,x_star,y_star,label,stable,spectral_radius,
 * eig1_re,eig1_im,eig2_re,eig2_im,residual. */
EWALAB_API ewa_status ewa_fixed_points(const ewa_game_params* gp, const ewa_config* cfg,
                                       ewa_table** out);

/* Columns A,B,alpha,beta,n_fixed_points,x_star,y_star,stable,label. */
EWALAB_API ewa_status ewa_fixed_point_grid(ewa_symmetry symmetry, const ewa_grid_spec* grid,
                                           const ewa_config* cfg, unsigned threads,
                                           ewa_table** out);

EWALAB_API ewa_status ewa_antisym_threshold(const ewa_config* cfg, double* out);
EWALAB_API ewa_status ewa_pitchfork_amplitude(double A, const ewa_config* cfg, double* out);

/* Deterministic when cfg->batch_T == 0, frozen-noise stochastic otherwise. */
EWALAB_API ewa_status ewa_lyapunov(const ewa_payoffs* p, const ewa_config* cfg, ewa_point start,
                                   const ewa_lyapunov_opts* opts, uint64_t seed,
                                   ewa_lyapunov_result* out);

/* Columns param,lambda1,lambda2. */
EWALAB_API ewa_status ewa_lle_scan(const ewa_payoffs* p, const ewa_config* cfg,
                                   const ewa_scan_spec* scan, ewa_point start,
                                   const ewa_lyapunov_opts* opts, uint64_t seed, unsigned threads,
                                   ewa_table** out);

/* Columns A,B,lle with C = -A, D = -B. Deterministic only. */
EWALAB_API ewa_status ewa_lle_grid(const ewa_grid_spec* grid, const ewa_config* cfg,
                                   ewa_point start, const ewa_lyapunov_opts* opts,
                                   unsigned threads, ewa_table** out);

/* Columns param,x. */
EWALAB_API ewa_status ewa_bifurcation(const ewa_payoffs* p, const ewa_config* cfg,
                                      const ewa_scan_spec* scan, size_t transient, size_t record,
                                      ewa_point start, uint64_t seed, unsigned threads,
                                      ewa_table** out);

/* Columns lag,r_row,r_col. */
EWALAB_API ewa_status ewa_autocorrelation(const uint8_t* moves_row, const uint8_t* moves_col,
                                          size_t n, size_t max_lag, ewa_table** out);

/* Columns gamma,frac_dominance,frac_coordination,frac_anticoordination,
 * frac_discoordination and se_ for each. */
EWALAB_API ewa_status ewa_ensemble(double gamma_lo, double gamma_hi, size_t points,
                                   size_t samples, uint64_t seed, unsigned threads,
                                   ewa_table** out);

/* Columns ac,bd_abs,frac_dominance,se_dominance. */
EWALAB_API ewa_status ewa_dominance_grid(const ewa_grid_spec* grid, size_t samples,
                                         uint64_t seed, unsigned threads, ewa_table** out);

EWALAB_API size_t ewa_preset_count(void);
EWALAB_API ewa_status ewa_preset_at(size_t index, ewa_preset* out);
EWALAB_API ewa_status ewa_preset_find(const char* name, ewa_preset* out);

#ifdef __cplusplus
}
#endif

#endif /* EWALAB_H */
