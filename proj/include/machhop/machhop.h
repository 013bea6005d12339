/*
 * machhop C API.
 *
 * Every fallible call returns an mh_status; on failure a human-readable
 * message is available from mh_last_error() on the calling thread until the
 * next API call on that thread. Objects are opaque handles released with the
 * matching *_free function. Strings returned through char** are owned by the
 * caller and released with mh_string_free.
 */
#ifndef MACHHOP_H
#define MACHHOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MACHHOP_BUILDING)
#define MACHHOP_API __declspec(dllexport)
#else
#define MACHHOP_API __declspec(dllimport)
#endif
#else
#define MACHHOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mh_status {
  MH_OK = 0,
  MH_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown enum value */
  MH_ERR_PRECONDITION = 2,     /* input violates an operation contract */
  MH_ERR_CAPABILITY = 3,       /* valid input beyond this build's limits */
  MH_ERR_MALFORMED = 4,        /* out-of-range or duplicate values */
  MH_ERR_PARSE = 5,            /* bad sequence file text */
  MH_ERR_IO = 6,
  MH_ERR_BUFFER_TOO_SMALL = 7,
  MH_ERR_INTERNAL = 99
} mh_status;

typedef enum mh_algorithm {
  MH_ALG_IDEAL_CH = 0,
  MH_ALG_ORTHO_CH = 1,
  MH_ALG_GENERAL_MACH = 2
} mh_algorithm;

typedef struct mh_sequence mh_sequence;
typedef struct mh_matrix mh_matrix;
typedef struct mh_sweep mh_sweep;

MACHHOP_API const char* mh_version(void);
MACHHOP_API const char* mh_last_error(void);
MACHHOP_API const char* mh_status_name(mh_status status);
MACHHOP_API void mh_string_free(char* text);

/* ---- number theory ---------------------------------------------------- */

MACHHOP_API int mh_is_prime(uint64_t n);
MACHHOP_API mh_status mh_smallest_prime_geq(uint64_t n, uint64_t* out);
MACHHOP_API mh_status mh_general_prime_for(uint64_t n_channels, uint64_t* out);
/* Writes up to `cap` values; *count receives the full list length. */
MACHHOP_API mh_status mh_valid_ideal_L_list(uint64_t limit, uint64_t* out, size_t cap,
                                            size_t* count);

/* ---- sequences -------------------------------------------------------- */

MACHHOP_API mh_status mh_ideal_ch(uint64_t L, mh_sequence** out);
MACHHOP_API mh_status mh_general_mach_sequence(uint64_t n_channels, mh_sequence** out);
/* forced_id < 0 selects the ID channel from the seed. */
MACHHOP_API mh_status mh_ortho_ch(uint32_t n_channels, const uint32_t* avail, size_t avail_len,
                                  uint64_t seed, int64_t forced_id, mh_sequence** out);
/* Replaces every value outside `avail` by a seed-determined uniform pick
 * from `avail` (independently per slot). */
MACHHOP_API mh_status mh_sequence_replace_unavailable(const mh_sequence* seq,
                                                      const uint32_t* avail, size_t avail_len,
                                                      uint64_t seed, mh_sequence** out);
/* ORTHO-CH ID channel for `seed`; *out is -1 when avail is {0}. */
MACHHOP_API mh_status mh_pick_id_channel(uint32_t n_channels, const uint32_t* avail,
                                         size_t avail_len, uint64_t seed, int64_t* out);
MACHHOP_API mh_status mh_sequence_from_values(const uint32_t* values, size_t len,
                                              uint32_t n_channels, const char* provenance,
                                              mh_sequence** out);
MACHHOP_API mh_status mh_sequence_parse(const char* text, mh_sequence** out);
MACHHOP_API mh_status mh_sequence_read(const char* path, mh_sequence** out);
MACHHOP_API void mh_sequence_free(mh_sequence* seq);

MACHHOP_API size_t mh_sequence_period(const mh_sequence* seq);
MACHHOP_API uint32_t mh_sequence_channel_universe(const mh_sequence* seq);
/* Valid for the lifetime of `seq`. */
MACHHOP_API const char* mh_sequence_provenance(const mh_sequence* seq);
MACHHOP_API mh_status mh_sequence_values(const mh_sequence* seq, uint32_t* out, size_t cap);
MACHHOP_API mh_status mh_sequence_format(const mh_sequence* seq, char** out_text);
MACHHOP_API mh_status mh_sequence_write(const mh_sequence* seq, const char* path);

/* ---- matrices --------------------------------------------------------- */

MACHHOP_API mh_status mh_semi_mach_matrix(uint64_t p, mh_matrix** out);
MACHHOP_API mh_status mh_mach_matrix(uint64_t L, mh_matrix** out);
MACHHOP_API mh_status mh_general_mach_matrix(uint64_t n_channels, mh_matrix** out);
MACHHOP_API mh_status mh_ortho_member_matrix(uint64_t p, uint64_t r, mh_matrix** out);
MACHHOP_API mh_status mh_ortho_extended_matrix(uint64_t p, uint64_t r, mh_matrix** out);
MACHHOP_API void mh_matrix_free(mh_matrix* m);

MACHHOP_API size_t mh_matrix_rows(const mh_matrix* m);
MACHHOP_API size_t mh_matrix_cols(const mh_matrix* m);
MACHHOP_API uint32_t mh_matrix_channel_universe(const mh_matrix* m);
MACHHOP_API mh_status mh_matrix_cells(const mh_matrix* m, uint32_t* out, size_t cap);
MACHHOP_API mh_status mh_matrix_format(const mh_matrix* m, char** out_text);
/* Reads out a square MACH matrix as its period-2p^2 sequence. */
MACHHOP_API mh_status mh_matrix_to_sequence(const mh_matrix* m, mh_sequence** out);

/* Dense 0/1 rendering of the p x p triangular ideal matrix. */
MACHHOP_API mh_status mh_ideal_matrix_render(uint64_t p, char** out_text);

/* ---- certification ---------------------------------------------------- */

typedef struct mh_certificate {
  int passed;
  uint64_t checked; /* shifts examined */
  int has_witness;  /* first missing coincidence, when failed */
  uint64_t shift;   /* d for 1D checks, delta for 2D checks */
  uint64_t tau;     /* 2D checks only */
  uint32_t channel;
} mh_certificate;

MACHHOP_API mh_status mh_verify_1d_mrd(const mh_sequence* seq, uint32_t n_channels,
                                       mh_certificate* out);
MACHHOP_API mh_status mh_verify_2d_mrd(const mh_matrix* m, uint32_t n_channels,
                                       int skip_tau_zero, mh_certificate* out);

typedef struct mh_ortho_report {
  int passed;
  uint64_t pairs_checked;
  int has_failing_pair;
  uint64_t r1, r2;
  int has_failing_cover;
  uint64_t cover_id;
} mh_ortho_report;

/* All ordered member pairs of the family for prime p, plus cover. */
MACHHOP_API mh_status mh_verify_ortho_family(uint64_t p, uint32_t n_channels,
                                             mh_ortho_report* out);

typedef struct mh_ratio {
  uint64_t p;
  uint64_t rds_size;
  uint64_t usable_channels;
  uint64_t numerator;
  uint64_t denominator;
  double value;
} mh_ratio;

MACHHOP_API mh_status mh_approximation_ratio(uint64_t n_channels, mh_ratio* out);
MACHHOP_API mh_status mh_mttr_bound(uint64_t n_channels, uint64_t* out);

/* ---- simulation ------------------------------------------------------- */

typedef struct mh_channel_time {
  uint32_t channel;
  int met;
  uint64_t time; /* T_i, valid when met */
} mh_channel_time;

typedef struct mh_rendezvous {
  uint64_t drift;
  int met;
  uint64_t ttr;
  int all_met;
  uint64_t t_sharp;
  size_t common; /* G */
} mh_rendezvous;

/* horizon 0 selects twice the longer period. `per_channel` may be NULL;
 * otherwise up to `per_channel_cap` entries are written. */
MACHHOP_API mh_status mh_simulate(const mh_sequence* s1, const mh_sequence* s2, uint64_t drift,
                                  uint64_t horizon, const uint32_t* avail1, size_t avail1_len,
                                  const uint32_t* avail2, size_t avail2_len,
                                  mh_rendezvous* out, mh_channel_time* per_channel,
                                  size_t per_channel_cap);

typedef struct mh_sweep_config {
  mh_algorithm algorithm;
  uint64_t L; /* ideal-ch */
  uint64_t N; /* ortho-ch, general-mach */
  const uint32_t* avail1; /* NULL or empty: full universe */
  size_t avail1_len;
  const uint32_t* avail2;
  size_t avail2_len;
  uint64_t seed;       /* first seed */
  uint32_t seed_count; /* seeds seed, seed+1, ... */
} mh_sweep_config;

typedef struct mh_sweep_summary {
  uint64_t period;
  uint64_t horizon;
  uint64_t runs;
  uint64_t bound;
  int bound_is_mcttr; /* 0: bound applies to MTTR */
  int mttr_met;
  uint64_t mttr, mttr_drift, mttr_seed;
  int mcttr_met;
  uint64_t mcttr, mcttr_drift, mcttr_seed;
  int passed;
} mh_sweep_summary;

/* Builds one user's sequence as the sweep would for `seed`. */
MACHHOP_API mh_status mh_experiment_sequence(const mh_sweep_config* config, int user,
                                             uint64_t seed, mh_sequence** out);
MACHHOP_API mh_status mh_sweep_run(const mh_sweep_config* config, mh_sweep** out);
MACHHOP_API void mh_sweep_free(mh_sweep* sweep);
MACHHOP_API mh_status mh_sweep_get_summary(const mh_sweep* sweep, mh_sweep_summary* out);
/* Header drift,seed,n1,n2,G,T,Tsharp; NA marks an unmet rendezvous. */
MACHHOP_API mh_status mh_sweep_csv(const mh_sweep* sweep, char** out_text);
MACHHOP_API mh_status mh_sweep_json(const mh_sweep* sweep, char** out_text);

typedef struct mh_ettr {
  double mean;
  double std_error;
  uint64_t trials;
  uint64_t unmet;
} mh_ettr;

MACHHOP_API mh_status mh_ettr_estimate(const mh_sweep_config* config, uint64_t trials,
                                       uint64_t rng_seed, mh_ettr* out);
MACHHOP_API mh_status mh_ettr_random_reference(uint32_t n_channels, const uint32_t* avail1,
                                               size_t avail1_len, const uint32_t* avail2,
                                               size_t avail2_len, uint64_t trials,
                                               uint64_t rng_seed, mh_ettr* out);

#ifdef __cplusplus
}
#endif

#endif /* MACHHOP_H */
