/* Copyright 2026 qchan developers
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

/* C interface of the qubit-channel decomposition library.
 *
 * Channels are opaque handles; structured inputs and outputs travel as JSON
 * or CSV strings. Every function returns a status code; on failure a
 * thread-local message is available via qchan_last_error(). Strings returned
 * through `char**` are heap-allocated and must be released with
 * qchan_string_free(); handles with qchan_channel_free().
 */

#ifndef QCHAN_C_H
#define QCHAN_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qchan_channel qchan_channel; /* opaque */

typedef enum qchan_status {
  QCHAN_OK = 0,
  QCHAN_ERR_INVALID_ARGUMENT = 1,
  QCHAN_ERR_PARSE = 2,
  QCHAN_ERR_DOMAIN = 3, /* numerical/physical precondition violated */
  QCHAN_ERR_INTERNAL = 4
} qchan_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* qchan_last_error(void);

void qchan_string_free(char* s);
void qchan_channel_free(qchan_channel* ch);

/* --- channel construction and serialization ------------------------------ */

qchan_status qchan_channel_from_json(const char* json, qchan_channel** out);
/* repr: "kraus", "choi" or "pauli_chi". */
qchan_status qchan_channel_to_json(const qchan_channel* ch, const char* repr,
                                   char** json_out);

/* kind: "amplitude_damping", "bit_flip", "phase_flip", "depolarizing". */
qchan_status qchan_noise_channel(const char* kind, double lambda, qchan_channel** out);
qchan_status qchan_random_channel(uint64_t seed, qchan_channel** out);

qchan_status qchan_validate(const qchan_channel* ch, char** report_json);

/* --- decomposition ------------------------------------------------------- */

qchan_status qchan_decompose(const qchan_channel* target, double tolerance,
                             int max_restarts, int max_iterations, uint64_t seed,
                             const char* init_json /* nullable */, char** result_json);
qchan_status qchan_objective(const char* decomposition_json, const qchan_channel* target,
                             double* value_out);
qchan_status qchan_build_mixture(const char* decomposition_json, qchan_channel** out);
qchan_status qchan_preset_decomposition(const char* kind, double lambda,
                                        char** decomposition_json);
/* Verbatim published parameter rows with consistency flags, as JSON. */
qchan_status qchan_preset_annotations(const char* kind, char** json_out);

/* --- analysis ------------------------------------------------------------ */

qchan_status qchan_compare(const qchan_channel* a, const qchan_channel* b,
                           char** report_json);
/* shots <= 0 selects exact expectation values. */
qchan_status qchan_qpt(const qchan_channel* ch, long long shots, uint64_t seed,
                       char** chi_json);
/* state: "H", "V", "D" or "L"; CSV columns lambda, fidelity and success
 * probability for the none / non-optimal / optimal strategies. */
qchan_status qchan_weakmeas_sweep(const char* state, double p1, const double* lambdas,
                                  size_t n_lambdas, char** csv_out);
qchan_status qchan_bloch_cloud(const qchan_channel* ch, int n_samples, char** csv_out);

/* --- wave-plate compilation ---------------------------------------------- */

qchan_status qchan_compile_rotation(double axis_x, double axis_y, double axis_z,
                                    double two_theta, char** stack_json);
/* Plate stacks for every rotation and K-pair circuit angle in a
 * 17-parameter decomposition. */
qchan_status qchan_compile_decomposition(const char* decomposition_json,
                                         char** json_out);

/* --- published reference data -------------------------------------------- */

/* name: "c1".."c5" (choi), "arbitrary" (pauli_chi) -> channel JSON;
 * "table1" -> list of {decomposition, error}; "table2" -> decomposition. */
qchan_status qchan_fixture(const char* name, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QCHAN_C_H */
