/*
 * catnoise — entanglement and distillability structure of N-qubit cat
 * states under independent single-qubit Pauli noise.
 *
 * C API of the shared library. All functions return a catnoise_status;
 * results come back through out-parameters. Strings returned through
 * char** are heap-allocated and must be released with
 * catnoise_string_free(). Handles are opaque and must be released with
 * their destroy function. Every function is thread-safe as long as each
 * handle is used by one thread at a time.
 */
#ifndef CATNOISE_H
#define CATNOISE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum catnoise_status {
    CATNOISE_OK = 0,
    CATNOISE_ERR_NEGATIVE_PROBABILITY = 1,
    CATNOISE_ERR_NOT_NORMALIZED = 2,
    CATNOISE_ERR_UNKNOWN_PRESET = 3,
    CATNOISE_ERR_OUT_OF_RANGE = 4,
    CATNOISE_ERR_SIZE_TOO_LARGE = 5,
    CATNOISE_ERR_INVALID_CONFIG = 6,
    CATNOISE_ERR_IO = 7,
    CATNOISE_ERR_NOT_HERMITIAN = 8,
    CATNOISE_ERR_NO_CONVERGENCE = 9,
    CATNOISE_ERR_INVALID_ARGUMENT = 10,
    CATNOISE_ERR_INTERNAL = 11
} catnoise_status;

typedef enum catnoise_verdict {
    CATNOISE_VERDICT_NO = 0,
    CATNOISE_VERDICT_YES = 1,
    CATNOISE_VERDICT_BOUNDARY = 2
} catnoise_verdict;

typedef enum catnoise_regime {
    CATNOISE_REGIME_ENTANGLED_ABOVE_F = 0,
    CATNOISE_REGIME_NEVER_ENTANGLED = 1,
    CATNOISE_REGIME_DEGENERATE = 2
} catnoise_regime;

/* Opaque single-qubit Pauli channel. */
typedef struct catnoise_channel catnoise_channel;

/* Human-readable name of a status code. */
const char* catnoise_status_message(catnoise_status status);

/* Detail message of the most recent failure on this thread ("" if none). */
const char* catnoise_last_error(void);

void catnoise_string_free(char* s);

/* ---- channel ---------------------------------------------------------- */

/* pi = {pi0, pi1, pi2, pi3}; must be nonnegative and sum to 1 (1e-12). */
catnoise_status catnoise_channel_create(const double pi[4], catnoise_channel** out);

/* name: "depolarizing" or "dephasing"; strength = pi0 in [0, 1]. */
catnoise_status catnoise_channel_preset(const char* name, double strength,
                                        catnoise_channel** out);

void catnoise_channel_destroy(catnoise_channel* ch);

catnoise_status catnoise_channel_probabilities(const catnoise_channel* ch, double pi_out[4]);

/* Derived parameters a = pi0+pi3, b = pi1+pi2, c = pi0-pi3, d = pi1-pi2. */
catnoise_status catnoise_channel_params(const catnoise_channel* ch, double* a, double* b,
                                        double* c, double* d);

/* ---- analytic quantities ---------------------------------------------- */

/* Delta = |c^N + d^N|. The _log variant reports sign (0 for exact zero)
 * and log-magnitude, which stays finite for N up to 10^6. */
catnoise_status catnoise_delta(const catnoise_channel* ch, int64_t n, double* out);
catnoise_status catnoise_delta_log(const catnoise_channel* ch, int64_t n, int* sign,
                                   double* log_magnitude);

/* 2*lambda_{k,N-k} = a^k b^(N-k) + b^k a^(N-k), 1 <= k <= N/2. */
catnoise_status catnoise_two_lambda(const catnoise_channel* ch, int64_t n, int64_t k,
                                    double* out);
catnoise_status catnoise_two_lambda_log(const catnoise_channel* ch, int64_t n, int64_t k,
                                        int* sign, double* log_magnitude);

/* Entanglement verdict for the k:(N-k) cut. log_margin = log Delta -
 * log 2lambda (may be +/-inf). */
catnoise_status catnoise_cut_verdict(const catnoise_channel* ch, int64_t n, int64_t k,
                                     catnoise_verdict* verdict, double* log_margin);

/* Smallest entangled k, or 0 if no cut is entangled. */
catnoise_status catnoise_min_entangled_k(const catnoise_channel* ch, int64_t n, int64_t* k_out);

/* Largest M with an M-qubit cat state distillable; 0 if none.
 * min_k_out receives the minimal entangled k (0 if none); either
 * out-pointer may be NULL. */
catnoise_status catnoise_max_distillable(const catnoise_channel* ch, int64_t n,
                                         int64_t* max_m_out, int64_t* min_k_out);

/* Asymptotic threshold f(a,|c|) on the cut fraction alpha = k/N, the
 * alpha = 1/2 pair condition c^2 > a*b, and the regime classification.
 * Out-pointers may be NULL. */
catnoise_status catnoise_asymptotic(const catnoise_channel* ch, double* f_threshold,
                                    int* robust_pair_ok, catnoise_regime* regime);

/* ---- JSON-driven operations ------------------------------------------- */

/* Per-cut table, partition report and asymptotic report as a JSON document. */
catnoise_status catnoise_analyze(const catnoise_channel* ch, int64_t n, char** json_out);

/* Grid sweep. config_json follows the documented sweep-config schema; the
 * row file is written to the configured output; a JSON run summary is
 * returned. */
catnoise_status catnoise_run_sweep(const char* config_json, char** summary_json_out);

/* Oracle-vs-analytic agreement campaign (requires N within the oracle
 * limit). forbidden_out (may be NULL) receives the number of points where
 * the analytic verdict says entangled but the oracle disagrees. */
catnoise_status catnoise_run_verify(const char* config_json, char** report_json_out,
                                    int64_t* forbidden_out);

/* Threshold table for a channel family. */
catnoise_status catnoise_run_threshold(const char* config_json, char** table_json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CATNOISE_H */
