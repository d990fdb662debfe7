/*
 * Copyright 2026 The cavsq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the cavsq library.
 *
 * Frequencies are angular (rad/s). Every call returns a cavsq_status; on
 * failure cavsq_last_error() holds a message for the calling thread.
 * Results come back as tables that the caller frees.
 */
#ifndef CAVSQ_CAVSQ_H
#define CAVSQ_CAVSQ_H

#include <stddef.h>

#if defined(_WIN32)
#define CAVSQ_API __declspec(dllexport)
#else
#define CAVSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cavsq_status {
    CAVSQ_OK = 0,
    CAVSQ_ERR_INVALID_ARGUMENT = 1,
    CAVSQ_ERR_CONFIG = 2,
    CAVSQ_ERR_NO_SOLUTION = 3,
    CAVSQ_ERR_VALIDATION = 4,
    CAVSQ_ERR_INTERNAL = 5
} cavsq_status;

typedef struct cavsq_model cavsq_model;
typedef struct cavsq_table cavsq_table;

typedef struct cavsq_cavity {
    double T1, T2, L1, L2;
    double finesse;
    double kappa;      /* FWHM, rad/s */
    double fsr;        /* rad/s, 0 = unknown */
    double waist;      /* m, 0 = unknown */
    double wavelength; /* m, 0 = unknown */
} cavsq_cavity;

typedef struct cavsq_atoms {
    double gamma; /* FWHM, rad/s */
    double eta;
    double eta_down_ratio; /* 0 selects the three-level model */
    double b;              /* 2 delta_z / gamma */
    double branching;      /* Raman branching ratio */
} cavsq_atoms;

typedef enum cavsq_budget {
    CAVSQ_BUDGET_N_IN = 0,
    CAVSQ_BUDGET_N_T = 1,
    CAVSQ_BUDGET_N_SC = 2,
    CAVSQ_BUDGET_N_C = 3
} cavsq_budget;

typedef enum cavsq_tot_mode {
    CAVSQ_TOT_TRANSMISSION = 0,
    CAVSQ_TOT_BOTH = 1
} cavsq_tot_mode;

typedef struct cavsq_probe {
    double n_atoms;
    double cavity_offset; /* omega_c - omega_a, rad/s */
    cavsq_budget budget_kind;
    double budget;
    double tau; /* s */
    int curvature;
    double q_eff;
    cavsq_tot_mode t_tot;
    double omega_m; /* chirp sideband offset, rad/s; 0 = optimize */
} cavsq_probe;

typedef enum cavsq_scan_variable {
    CAVSQ_SCAN_X_A = 0,
    CAVSQ_SCAN_N_SC = 1,
    CAVSQ_SCAN_N_ATOMS = 2
} cavsq_scan_variable;

typedef enum cavsq_phase_convention {
    CAVSQ_PHASE_ECHO = 0,
    CAVSQ_PHASE_DIRECT = 1
} cavsq_phase_convention;

typedef struct cavsq_two_color_opts {
    double omega_l1;
    int has_window;
    double window_lo, window_hi; /* red pulse search window */
    cavsq_phase_convention convention;
    int optimize;
    int has_window_l1;
    double window_l1_lo, window_l1_hi;
} cavsq_two_color_opts;

CAVSQ_API const char *cavsq_version(void);
CAVSQ_API const char *cavsq_last_error(void);
CAVSQ_API void cavsq_set_threads(int n);

CAVSQ_API cavsq_status cavsq_model_create(const cavsq_cavity *cavity,
                                          const cavsq_atoms *atoms,
                                          const cavsq_probe *probe,
                                          cavsq_model **out);
CAVSQ_API void cavsq_model_destroy(cavsq_model *model);
CAVSQ_API size_t cavsq_model_warning_count(const cavsq_model *model);
CAVSQ_API const char *cavsq_model_warning(const cavsq_model *model,
                                          size_t i);

CAVSQ_API cavsq_status cavsq_spectrum(const cavsq_model *model,
                                      const double *x_a, size_t n,
                                      cavsq_table **out);
CAVSQ_API cavsq_status cavsq_squeeze(const cavsq_model *model, double x_a,
                                     cavsq_table **out);
CAVSQ_API cavsq_status cavsq_wineland_scan(const cavsq_model *model,
                                           cavsq_scan_variable variable,
                                           const double *grid, size_t n,
                                           double x_a, cavsq_table **out);
CAVSQ_API cavsq_status cavsq_optimize(const cavsq_model *model,
                                      cavsq_table **out);
CAVSQ_API cavsq_status cavsq_scaling(const cavsq_model *model,
                                     const double *n_atoms, size_t n,
                                     cavsq_table **out);
CAVSQ_API cavsq_status cavsq_detection_scan(const cavsq_model *model,
                                            const double *n_d, size_t n,
                                            cavsq_table **out);
CAVSQ_API cavsq_status cavsq_chirp_shift(const cavsq_model *model,
                                         double shift, cavsq_table **out);
CAVSQ_API cavsq_status cavsq_two_color(const cavsq_model *model,
                                       const cavsq_two_color_opts *opts,
                                       cavsq_table **out);
CAVSQ_API cavsq_status cavsq_map_lossless(const cavsq_cavity *cavity,
                                          cavsq_table **out);
CAVSQ_API cavsq_status cavsq_compensation(const cavsq_model *model,
                                          cavsq_table **out);
CAVSQ_API cavsq_status cavsq_dressed(const cavsq_model *model,
                                     cavsq_table **out);

/* Runs the reference-check suite; CAVSQ_ERR_VALIDATION if any check fails
 * (the table is still returned). */
CAVSQ_API cavsq_status cavsq_validate(cavsq_table **out);

CAVSQ_API void cavsq_table_destroy(cavsq_table *table);
CAVSQ_API size_t cavsq_table_columns(const cavsq_table *table);
CAVSQ_API size_t cavsq_table_rows(const cavsq_table *table);
CAVSQ_API const char *cavsq_table_column_name(const cavsq_table *table,
                                              size_t col);
CAVSQ_API double cavsq_table_value(const cavsq_table *table, size_t row,
                                   size_t col);
CAVSQ_API size_t cavsq_table_summary_count(const cavsq_table *table);
CAVSQ_API const char *cavsq_table_summary_key(const cavsq_table *table,
                                              size_t i);
CAVSQ_API double cavsq_table_summary_value(const cavsq_table *table,
                                           size_t i);
CAVSQ_API size_t cavsq_table_note_count(const cavsq_table *table);
CAVSQ_API const char *cavsq_table_note(const cavsq_table *table, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* CAVSQ_CAVSQ_H */
