/* tqrabi.h: C interface to the two-qubit Rabi spectrum solver.
 *
 * All objects are opaque handles created by tqr_*_create / compute functions
 * and released with the matching tqr_*_free. Functions return a tqr_status;
 * on failure tqr_last_error() describes the problem (per thread). Strings
 * returned through char** are heap-allocated; release them with
 * tqr_string_free. Energies are in the units of the model parameters.
 */
#ifndef TQRABI_H
#define TQRABI_H

#include <stddef.h>

#if defined(TQR_BUILDING_LIBRARY)
#define TQR_API __attribute__((visibility("default")))
#else
#define TQR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tqr_status {
  TQR_OK = 0,
  TQR_E_INVALID_ARGUMENT = 1,
  TQR_E_POLE_AT_BASELINE = 2,
  TQR_E_OUTSIDE_DISK = 3,
  TQR_E_NO_CONVERGENCE = 4,
  TQR_E_SCHEME_MISMATCH = 5,
  TQR_E_REQUIRES_EQUAL_COUPLINGS = 6,
  TQR_E_REQUIRES_VALID_COUPLINGS = 7,
  TQR_E_DEGENERATE_DENOMINATOR = 8,
  TQR_E_CONDITION_NOT_MET = 9,
  TQR_E_SUPPORT_OVERFLOW = 10,
  TQR_E_NOT_CONVERGED = 11,
  TQR_E_CONFIG = 12,
  TQR_E_IO = 13,
  TQR_E_OUT_OF_MEMORY = 98,
  TQR_E_INTERNAL = 99
} tqr_status;

typedef enum tqr_parity { TQR_PARITY_MINUS = -1, TQR_PARITY_PLUS = 1 } tqr_parity;

typedef enum tqr_method { TQR_METHOD_GFUNCTION = 0, TQR_METHOD_EXCEPTIONAL = 1, TQR_METHOD_ORACLE = 2 } tqr_method;

typedef enum tqr_solver { TQR_SOLVER_GFUNCTION = 0, TQR_SOLVER_ORACLE = 1, TQR_SOLVER_BOTH = 2 } tqr_solver;

typedef enum tqr_verification {
  TQR_UNVERIFIED = 0,
  TQR_VERIFIED = 1,
  TQR_SPURIOUS = 2
} tqr_verification;

typedef enum tqr_qubit_pair { TQR_EE = 0, TQR_EG = 1, TQR_GE = 2, TQR_GG = 3 } tqr_qubit_pair;

typedef enum tqr_axis {
  TQR_AXIS_DELTA1 = 0,
  TQR_AXIS_DELTA2 = 1,
  TQR_AXIS_JX = 2,
  TQR_AXIS_JY = 3,
  TQR_AXIS_JZ = 4
} tqr_axis;

typedef enum tqr_variable {
  TQR_VARY_G = 0,
  TQR_VARY_DELTA1 = 1,
  TQR_VARY_DELTA2 = 2,
  TQR_VARY_JX = 3,
  TQR_VARY_JY = 4,
  TQR_VARY_JZ = 5
} tqr_variable;

typedef enum tqr_closed_form {
  TQR_FORM_DARK = 0,     /* singlet at photon number N */
  TQR_FORM_PSI_E = 1,    /* even, N = 1, delta1 + delta2 = omega */
  TQR_FORM_PSI_G1 = 2,   /* odd, N = 1, delta1 - delta2 = omega */
  TQR_FORM_PSI_G2 = 3,   /* odd, N = 1, delta2 - delta1 = omega */
  TQR_FORM_PSI_E1 = 4,   /* XYZ, even, N = 1 */
  TQR_FORM_PSI_E1_ODD = 5,
  TQR_FORM_PSI_E3 = 6    /* XYZ, even, N = 3 */
} tqr_closed_form;

typedef struct tqr_params {
  double omega;
  double delta1;
  double delta2;
  double g1;
  double g2;
  double jx;
  double jy;
  double jz;
} tqr_params;

/* Numerical settings. Fill with tqr_options_default, then override. */
typedef struct tqr_options {
  double root_step;         /* G scan step, units of omega (0.01) */
  double root_tolerance;    /* bisection width, units of omega (1e-10) */
  double pole_margin;       /* exclusion around baselines, units of omega (1e-6) */
  int series_n_max;         /* initial series order (160) */
  int series_n_cap;         /* hard cap on the series order (512) */
  double tail_tolerance;    /* relative size of the last series terms (1e-14) */
  int truncation;           /* photon cutoff of the oracle (300) */
  int truncation_cap;       /* oracle drift-test cap (1200) */
  double drift_tolerance;   /* oracle level drift per +50 photons (1e-8) */
  double verify_tolerance;  /* analytic vs oracle match (1e-6) */
} tqr_options;

typedef struct tqr_record {
  double energy;
  tqr_parity parity;
  tqr_method method;
  double residual;
  int label; /* level index within the parity sector, -1 if none */
  tqr_verification status;
} tqr_record;

typedef struct tqr_state_info {
  int n_index;
  double energy;
  tqr_parity parity;
  double condition_value;
  double norm_constant;
  size_t size; /* number of nonzero amplitudes */
} tqr_state_info;

typedef struct tqr_amplitude {
  int n;
  tqr_qubit_pair pair;
  double value;
} tqr_amplitude;

typedef struct tqr_candidate {
  int n_index;
  tqr_parity parity;
  double energy;
  double condition_value;
  int g_independent;
  double axis_value; /* scan root; NaN for window catalogs */
} tqr_candidate;

typedef struct tqr_scan_spec {
  tqr_axis axis;
  double start;
  double stop;
  int points;
  int n_max;
  double g_first;  /* 0: coupling of the model */
  double g_second; /* 0: 1.7 g + 0.3 */
} tqr_scan_spec;

typedef struct tqr_sweep_spec {
  tqr_variable variable;
  double start;
  double stop;
  double step;
  int levels; /* per parity */
  tqr_solver solver;
  double e_max;
} tqr_sweep_spec;

typedef struct tqr_sweep_row {
  double x;
  int has_energy;
  double energy;
  tqr_parity parity;
  tqr_method method;
  const char* status; /* owned by the sweep handle */
} tqr_sweep_row;

typedef struct tqr_model tqr_model;
typedef struct tqr_spectrum tqr_spectrum;
typedef struct tqr_trace tqr_trace;
typedef struct tqr_state tqr_state;
typedef struct tqr_catalog tqr_catalog;
typedef struct tqr_sweep tqr_sweep;

/* ---- general ---- */
TQR_API const char* tqr_version(void);
TQR_API const char* tqr_last_error(void);
TQR_API const char* tqr_status_name(tqr_status status);
TQR_API void tqr_string_free(char* s);
TQR_API void tqr_options_default(tqr_options* out);

/* ---- model ---- */
TQR_API tqr_status tqr_model_create(const tqr_params* params, tqr_model** out);
TQR_API tqr_status tqr_model_parse(const char* text, tqr_model** out);
TQR_API tqr_status tqr_model_load(const char* path, tqr_model** out);
TQR_API void tqr_model_free(tqr_model* model);
TQR_API tqr_status tqr_model_params(const tqr_model* model, tqr_params* out);
TQR_API tqr_status tqr_model_describe(const tqr_model* model, char** out);
/* Lower bound on the ground energy. */
TQR_API tqr_status tqr_model_energy_floor(const tqr_model* model, double* out);
/* Baselines in [e_min, e_max] as "kind,n,E" CSV. */
TQR_API tqr_status tqr_model_baselines_csv(const tqr_model* model, double e_min, double e_max, char** out);

/* ---- G-function ---- */
TQR_API tqr_status tqr_gvalue(const tqr_model* model, tqr_parity parity, double energy, const tqr_options* options,
                              double* out);
/* G with explicit matching points (z0prime is ignored unless the full 8x8
 * system applies), in units of sqrt(omega). */
TQR_API tqr_status tqr_gvalue_scheme(const tqr_model* model, tqr_parity parity, double energy, double z0,
                                     double z0prime, const tqr_options* options, double* out);

/* ---- spectra ---- */
/* gfunction: G roots of both parities plus exceptional levels (g1 = g2).
 * oracle: every ED level in the window. both: the two, analytic records
 * verified against the oracle. */
TQR_API tqr_status tqr_spectrum_compute(const tqr_model* model, tqr_solver solver, double e_min, double e_max,
                                        const tqr_options* options, tqr_spectrum** out);
/* Lowest k ED levels. */
TQR_API tqr_status tqr_oracle_levels(const tqr_model* model, int k_levels, const tqr_options* options,
                                     tqr_spectrum** out);
TQR_API size_t tqr_spectrum_size(const tqr_spectrum* spectrum);
TQR_API tqr_status tqr_spectrum_get(const tqr_spectrum* spectrum, size_t index, tqr_record* out);
/* Oracle levels with no analytic record within the verify tolerance (0 unless solver = both). */
TQR_API size_t tqr_spectrum_unmatched(const tqr_spectrum* spectrum);
TQR_API tqr_status tqr_spectrum_csv(const tqr_spectrum* spectrum, const char* const* comments, size_t n_comments,
                                    int with_status, char** out);
TQR_API void tqr_spectrum_free(tqr_spectrum* spectrum);

/* ---- G traces ---- */
/* which: TQR_PARITY_PLUS, TQR_PARITY_MINUS, or 0 for both. */
TQR_API tqr_status tqr_trace_compute(const tqr_model* model, int which, double e_min, double e_max, double step,
                                     const tqr_options* options, tqr_trace** out);
TQR_API size_t tqr_trace_size(const tqr_trace* trace, tqr_parity parity);
TQR_API tqr_status tqr_trace_get(const tqr_trace* trace, tqr_parity parity, size_t index, double* energy,
                                 double* value);
TQR_API tqr_status tqr_trace_csv(const tqr_trace* trace, const char* const* comments, size_t n_comments, char** out);
TQR_API void tqr_trace_free(tqr_trace* trace);

/* ---- exceptional states ---- */
TQR_API tqr_status tqr_exceptional_condition(const tqr_model* model, tqr_parity parity, int n_index, double* out);
TQR_API tqr_status tqr_exceptional_state(const tqr_model* model, tqr_parity parity, int n_index, tqr_state** out);
TQR_API tqr_status tqr_closed_form_state(const tqr_model* model, tqr_closed_form form, int n_index, tqr_state** out);
TQR_API tqr_status tqr_state_info_get(const tqr_state* state, tqr_state_info* out);
TQR_API tqr_status tqr_state_amplitude(const tqr_state* state, size_t index, tqr_amplitude* out);
/* ||H psi - E psi|| on photon numbers 0..truncation. */
TQR_API tqr_status tqr_state_residual(const tqr_model* model, const tqr_state* state, int truncation, double* out);
/* Largest row of (H - E) psi on photon numbers 0..N+1. */
TQR_API tqr_status tqr_state_subspace_check(const tqr_model* model, const tqr_state* state, double* out);
TQR_API tqr_status tqr_states_csv(const tqr_state* const* states, size_t n_states, const char* const* comments,
                                  size_t n_comments, char** out);
TQR_API void tqr_state_free(tqr_state* state);

/* ---- catalogs ---- */
TQR_API tqr_status tqr_exceptional_window(const tqr_model* model, double e_min, double e_max, tqr_catalog** out);
TQR_API tqr_status tqr_scan_flat_lines(const tqr_model* model, const tqr_scan_spec* spec, tqr_catalog** out);
TQR_API size_t tqr_catalog_size(const tqr_catalog* catalog);
TQR_API tqr_status tqr_catalog_get(const tqr_catalog* catalog, size_t index, tqr_candidate* out);
/* Label of entry `index`, owned by the catalog; NULL when out of range. */
TQR_API const char* tqr_catalog_label(const tqr_catalog* catalog, size_t index);
/* Model at entry `index` (the scan root applied to the template). */
TQR_API tqr_status tqr_catalog_model(const tqr_catalog* catalog, size_t index, tqr_model** out);
TQR_API tqr_status tqr_catalog_csv(const tqr_catalog* catalog, const char* const* comments, size_t n_comments,
                                   char** out);
TQR_API void tqr_catalog_free(tqr_catalog* catalog);

/* ---- sweeps ---- */
/* workers <= 0: TQR_WORKERS or the hardware concurrency. */
TQR_API tqr_status tqr_sweep_run(const tqr_model* templ, const tqr_sweep_spec* spec, const tqr_options* options,
                                 int workers, tqr_sweep** out);
TQR_API size_t tqr_sweep_size(const tqr_sweep* sweep);
TQR_API tqr_status tqr_sweep_get(const tqr_sweep* sweep, size_t index, tqr_sweep_row* out);
/* Rows whose status starts with "error:". */
TQR_API size_t tqr_sweep_failures(const tqr_sweep* sweep);
TQR_API tqr_status tqr_sweep_csv(const tqr_sweep* sweep, const char* const* comments, size_t n_comments, char** out);
TQR_API void tqr_sweep_free(tqr_sweep* sweep);

#ifdef __cplusplus
}
#endif

#endif /* TQRABI_H */
