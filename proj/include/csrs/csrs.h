// Copyright 2026 csrskit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSRS_CSRS_H
#define CSRS_CSRS_H

/* C interface to the CSRS frequency-conversion toolkit.
 *
 * Every function returns a csrs_status. On failure a message describing the
 * error is available from csrs_last_error() on the calling thread. Objects are
 * opaque handles released with their matching *_free function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CSRS_BUILDING_LIBRARY)
#    define CSRS_API __declspec(dllexport)
#  else
#    define CSRS_API __declspec(dllimport)
#  endif
#else
#  define CSRS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csrs_status {
  CSRS_OK = 0,
  CSRS_ERR_INVALID_ARGUMENT = 1,
  CSRS_ERR_RANGE = 2,
  CSRS_ERR_DOMAIN = 3,
  CSRS_ERR_RESONANCE_PROXIMITY = 4,
  CSRS_ERR_INFEASIBLE_SCHEME = 5,
  CSRS_ERR_NO_ROOT = 6,
  CSRS_ERR_NO_RESONANCE = 7,
  CSRS_ERR_UNBOUNDED = 8,
  CSRS_ERR_PARSE = 9,
  CSRS_ERR_IO = 10,
  CSRS_ERR_NOT_CONVERGED = 11,
  CSRS_ERR_CONFIG = 12,
  CSRS_ERR_INTERNAL = 99
} csrs_status;

typedef struct csrs_config csrs_config;
typedef struct csrs_report csrs_report;

CSRS_API const char* csrs_version(void);
/* Message of the most recent failure on this thread; empty after success. */
CSRS_API const char* csrs_last_error(void);
/* Process exit code for a status: 0 ok, 3 non-convergence, 1 internal, 2 otherwise. */
CSRS_API int csrs_exit_code(csrs_status status);

/* Scalar physics. Wavelengths in nm unless stated. */
CSRS_API csrs_status csrs_bessel_zero(int l, int m, double* out);
CSRS_API csrs_status csrs_marcatili_index(double lambda_nm, double core_radius_um, int l, int m,
                                          double* out);
CSRS_API csrs_status csrs_signal_wavelength(double probe_nm, double pump1_nm, double pump2_nm,
                                            double* out_nm);
CSRS_API csrs_status csrs_raman_beat_thz(double pump1_nm, double pump2_nm, double* out_thz);
CSRS_API csrs_status csrs_phase_matching_factor(double delta_beta_rad_per_m, double length_m,
                                                double* out);
CSRS_API csrs_status csrs_alpha_linear(double alpha_db_per_m, double* out_per_m);
CSRS_API csrs_status csrs_critical_bend_radius(double core_radius_um, double capillary_radius_um,
                                               double wall_thickness_um, int num_capillaries,
                                               double lambda_nm, int core_l, int core_m,
                                               int clad_l, int clad_m, double* out_m);

/* Configuration. */
CSRS_API csrs_status csrs_config_load(const char* path, csrs_config** out);
CSRS_API csrs_status csrs_config_parse(const char* yaml_text, const char* base_dir,
                                       csrs_config** out);
CSRS_API void csrs_config_free(csrs_config* cfg);
/* name: lossless | lumped-exponential | amplitude-integral */
CSRS_API csrs_status csrs_config_set_loss_variant(csrs_config* cfg, const char* name);
CSRS_API csrs_status csrs_config_set_seed(csrs_config* cfg, uint64_t seed);
/* Writes the 16 hex digit digest plus a terminator into buf (size >= 17). */
CSRS_API csrs_status csrs_config_digest(const csrs_config* cfg, char* buf, size_t size);
CSRS_API csrs_status csrs_config_optimal_pressure(const csrs_config* cfg, double* out_bar);

/* Commands. range may be NULL to use the configured sweep ("start:stop:count"). */
CSRS_API csrs_status csrs_run_phase_match(const csrs_config* cfg, const char* range,
                                          csrs_report** out);
CSRS_API csrs_status csrs_run_efficiency(const csrs_config* cfg, const char* range,
                                         csrs_report** out);
CSRS_API csrs_status csrs_run_bend(const csrs_config* cfg, const char* range, csrs_report** out);
CSRS_API csrs_status csrs_run_screen(const csrs_config* cfg, csrs_report** out);
/* kind: cutback | efficiency | bend. A fit that fails to converge still yields a
 * report holding the best iterate; its status is CSRS_ERR_NOT_CONVERGED. */
CSRS_API csrs_status csrs_run_fit(const csrs_config* cfg, const char* kind, const char* data_csv,
                                  csrs_report** out);
CSRS_API void csrs_report_free(csrs_report* report);

CSRS_API size_t csrs_report_table_count(const csrs_report* report);
CSRS_API const char* csrs_report_table_name(const csrs_report* report, size_t table);
CSRS_API size_t csrs_report_row_count(const csrs_report* report, size_t table);
CSRS_API size_t csrs_report_column_count(const csrs_report* report, size_t table);
CSRS_API const char* csrs_report_column_name(const csrs_report* report, size_t table, size_t col);
CSRS_API const char* csrs_report_cell(const csrs_report* report, size_t table, size_t row, size_t col);
/* Full CSV text of a table including its metadata header; owned by the report. */
CSRS_API const char* csrs_report_csv(const csrs_report* report, size_t table);
CSRS_API size_t csrs_report_warning_count(const csrs_report* report);
CSRS_API const char* csrs_report_warning(const csrs_report* report, size_t index);
/* Non-empty when the command finished with a non-fatal problem. */
CSRS_API const char* csrs_report_message(const csrs_report* report);
CSRS_API csrs_status csrs_report_write(const csrs_report* report, const char* dir);

#ifdef __cplusplus
}
#endif

#endif /* CSRS_CSRS_H */
