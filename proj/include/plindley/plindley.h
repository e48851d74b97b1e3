/*
 * plindley C API.
 *
 * Every fallible call returns a pl_status; on failure the message is
 * available from pl_last_error() on the calling thread until the next
 * failing call. Handles are opaque and owned by the caller, who releases
 * them with the matching *_destroy function (NULL is accepted).
 */
#ifndef PLINDLEY_PLINDLEY_H
#define PLINDLEY_PLINDLEY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PLINDLEY_BUILDING)
#    define PL_API __declspec(dllexport)
#  else
#    define PL_API __declspec(dllimport)
#  endif
#else
#  define PL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pl_status {
  PL_OK = 0,
  PL_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown enum value */
  PL_ERR_DOMAIN = 2,           /* argument outside the mathematical domain */
  PL_ERR_PARSE = 3,            /* malformed table text */
  PL_ERR_VALIDATION = 4,       /* table violates an invariant */
  PL_ERR_IO = 5,
  PL_ERR_BRACKET = 6,
  PL_ERR_ACCURACY = 7,         /* quadrature did not converge */
  PL_ERR_OPTIMIZATION = 8,
  PL_ERR_NORMALIZATION = 9,
  PL_ERR_OVERFLOW = 10,        /* use the log-form variant */
  PL_ERR_INTERNAL = 99
} pl_status;

PL_API const char* pl_status_name(pl_status status);
PL_API const char* pl_last_error(void);
PL_API const char* pl_version(void);

/* ---- power Lindley PL(alpha, beta) and the Weibull baseline ---------- */

PL_API pl_status pl_pdf(double alpha, double beta, double x, double* out);
PL_API pl_status pl_log_pdf(double alpha, double beta, double x, double* out);
PL_API pl_status pl_survival(double alpha, double beta, double x, double* out);
PL_API pl_status pl_cdf(double alpha, double beta, double x, double* out);
PL_API pl_status pl_hazard(double alpha, double beta, double x, double* out);
PL_API pl_status pl_quantile(double alpha, double beta, double u, double* out);
PL_API pl_status pl_moment(double alpha, double beta, int k, double* out);
PL_API pl_status pl_log_moment(double alpha, double beta, int k, double* out);
PL_API pl_status pl_mean(double alpha, double beta, double* out);
PL_API pl_status pl_variance(double alpha, double beta, double* out);

PL_API pl_status pl_weibull_pdf(double shape, double scale, double x, double* out);
PL_API pl_status pl_weibull_cdf(double shape, double scale, double x, double* out);
PL_API pl_status pl_weibull_mean(double shape, double scale, double* out);
PL_API pl_status pl_weibull_median(double shape, double scale, double* out);

typedef struct pl_rng pl_rng;

PL_API pl_status pl_rng_create(uint64_t seed, pl_rng** out);
PL_API void pl_rng_destroy(pl_rng* rng);
/* Writes n >= 1 draws of PL(alpha, beta) to out. */
PL_API pl_status pl_sample(double alpha, double beta, pl_rng* rng, size_t n, double* out);

/* ---- moment (in)determinacy ------------------------------------------ */

typedef enum pl_cf_class {
  PL_CF_ENTIRE = 0,
  PL_CF_ANALYTIC_ON_INTERVAL = 1,
  PL_CF_NOT_ANALYTIC_AT_ZERO = 2
} pl_cf_class;

typedef struct pl_analyticity_report {
  pl_cf_class cf_class;
  int has_order; /* order and type are set only for entire functions */
  double order;
  double type;
  int mgf_empty;
  double mgf_lo;
  double mgf_hi;
  int determinate;
  int heavy_tailed;
} pl_analyticity_report;

PL_API pl_status pl_analyze(double alpha, double beta, pl_analyticity_report* out);
PL_API pl_status pl_lindley_cf(double beta, double t, double* re, double* im);
PL_API pl_status pl_lin_function(double alpha, double beta, double x, double* out);
PL_API pl_status pl_lin_derivative(double alpha, double beta, double x, double* out);
PL_API pl_status pl_moment_growth_exponent(double alpha, double beta, int max_order, double* out);

/* ---- Stieltjes classes (alpha < 1/2) ---------------------------------- */

typedef enum pl_family { PL_H1 = 1, PL_H2 = 2, PL_H3 = 3 } pl_family;

typedef struct pl_perturbation pl_perturbation;

typedef struct pl_perturbation_info {
  pl_family which;
  double alpha;
  double beta;
  double b;        /* H2 only */
  double gamma;    /* H2 only */
  double constant; /* normalization M */
} pl_perturbation_info;

typedef struct pl_moment_residual {
  int k;
  double residual;    /* |int x^k f H dx| / m_k */
  double error_bound; /* quadrature error estimate / m_k */
  int converged;
} pl_moment_residual;

/* Builds and normalizes H1/H2/H3. For H2, b <= 0 selects 1 and gamma <= 0
 * selects (alpha + 1/2)/2. Fails with PL_ERR_DOMAIN when alpha >= 1/2. */
PL_API pl_status pl_perturbation_create(pl_family which, double alpha, double beta, double b,
                                        double gamma, pl_perturbation** out);
PL_API void pl_perturbation_destroy(pl_perturbation* h);
PL_API pl_status pl_perturbation_info_get(const pl_perturbation* h, pl_perturbation_info* out);
PL_API pl_status pl_perturbation_value(const pl_perturbation* h, double x, double* out);
/* f(x) (1 + epsilon H(x)), |epsilon| <= 1. */
PL_API pl_status pl_stieltjes_density(const pl_perturbation* h, double epsilon, double x,
                                      double* out);
/* Fills out[0..k_max]. rel_tol <= 0 keeps the default quadrature tolerance. */
PL_API pl_status pl_verify_vanishing_moments(const pl_perturbation* h, int k_max, double rel_tol,
                                             pl_moment_residual* out);
PL_API pl_status pl_gr_sine_integral(double p, double q, double t, double* out);
PL_API pl_status pl_gr_cosine_integral(double p, double q, double t, double* out);

/* ---- frequency tables -------------------------------------------------- */

typedef struct pl_table pl_table;

typedef enum pl_units {
  PL_UNITS_PERCENT = 0,
  PL_UNITS_PROPORTION = 1,
  PL_UNITS_COUNTS = 2
} pl_units;

PL_API size_t pl_embedded_table_count(void);
PL_API const char* pl_embedded_table_name(size_t index);

/* Embedded name ("dit-system", "noc-system") or CSV path. */
PL_API pl_status pl_table_load(const char* path_or_name, pl_table** out);
PL_API pl_status pl_table_parse(const char* csv_text, const char* name, pl_table** out);
PL_API pl_status pl_table_from_rows(const char* name, const double* values,
                                    const double* frequencies, size_t n, pl_table** out);
PL_API void pl_table_destroy(pl_table* t);
PL_API size_t pl_table_size(const pl_table* t);
PL_API const char* pl_table_name(const pl_table* t);
PL_API pl_status pl_table_row(const pl_table* t, size_t index, double* value, double* frequency);
/* Weights f_i / sum f (out has pl_table_size entries). */
PL_API pl_status pl_table_weights(const pl_table* t, double* out);
/* Frequencies scaled by the table's units. */
PL_API pl_status pl_table_proportions(const pl_table* t, double* out);
PL_API pl_units pl_table_units(const pl_table* t);
PL_API pl_status pl_table_set_units(pl_table* t, pl_units units);
PL_API pl_status pl_table_sample_mean(const pl_table* t, double* out);

/* ---- least-squares fitting --------------------------------------------- */

typedef enum pl_model { PL_MODEL_POWER_LINDLEY = 0, PL_MODEL_WEIBULL = 1 } pl_model;

typedef enum pl_objective_kind {
  PL_OBJ_BINNED = 0,
  PL_OBJ_PDF = 1,
  PL_OBJ_PDF_SHIFTED = 2
} pl_objective_kind;

typedef enum pl_zero_handling {
  PL_ZERO_INCLUDE = 0,
  PL_ZERO_EXCLUDE = 1,
  PL_ZERO_SUBSTITUTE = 2
} pl_zero_handling;

typedef struct pl_objective {
  pl_objective_kind kind;
  double shift;                   /* PL_OBJ_PDF_SHIFTED */
  pl_zero_handling zero_handling; /* PL_OBJ_PDF */
  double zero_point;              /* PL_ZERO_SUBSTITUTE */
} pl_objective;

/* shape/second are (alpha, beta) for power Lindley, (shape, scale) for Weibull. */
typedef struct pl_fit_report {
  pl_model model;
  double shape;
  double second;
  double error;
  double mean;
  double median;
  double sample_mean;
  double mean_gap;
  int converged;
} pl_fit_report;

PL_API void pl_objective_default(pl_objective* out);
PL_API pl_status pl_objective_error(const pl_table* t, pl_model model, double shape,
                                    double second, const pl_objective* objective, double* out);
/* start may be NULL (multi-start) or point to two positive doubles. */
PL_API pl_status pl_fit(const pl_table* t, pl_model model, const pl_objective* objective,
                        const double* start, pl_fit_report* out);
/* Report for fixed parameters, e.g. a published reference fit. */
PL_API pl_status pl_fit_report_at(const pl_table* t, pl_model model, double shape, double second,
                                  const pl_objective* objective, pl_fit_report* out);

#ifdef __cplusplus
}
#endif

#endif /* PLINDLEY_PLINDLEY_H */
