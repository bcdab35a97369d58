/* Split Cycle election toolkit: C interface.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through `char**` are heap allocated and
 * released with sc_string_free. On failure every function returns a non-zero
 * status and leaves its output arguments untouched; sc_last_error() then
 * describes the failure for the calling thread.
 */
#ifndef SPLITCYCLE_H
#define SPLITCYCLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPLITCYCLE_BUILDING_LIBRARY)
#    define SC_API __declspec(dllexport)
#  else
#    define SC_API __declspec(dllimport)
#  endif
#else
#  define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
    SC_OK = 0,
    SC_ERR_INVALID_INPUT = 1,
    SC_ERR_PARSE = 2,
    SC_ERR_NOT_REALIZABLE = 3,
    SC_ERR_ORACLE_BOUND = 4,
    SC_ERR_NO_CUT = 5,
    SC_ERR_CYCLIC = 6,
    SC_ERR_INVARIANT = 7,
    SC_ERR_INTERNAL = 8
} sc_status;

typedef enum sc_format { SC_FORMAT_TEXT = 0, SC_FORMAT_JSON = 1, SC_FORMAT_DOT = 2 } sc_format;

typedef struct sc_profile sc_profile;
typedef struct sc_tournament sc_tournament;

/* Message of the last failure on this thread; "" after a success. */
SC_API const char* sc_last_error(void);
/* 1-based position of the last parse failure, 0 when not a parse failure. */
SC_API size_t sc_last_error_line(void);
SC_API size_t sc_last_error_column(void);

SC_API void sc_string_free(char* s);

SC_API sc_status sc_profile_parse(const char* text, sc_profile** out);
SC_API sc_status sc_profile_from_fixture(const char* fixture_id, sc_profile** out);
SC_API sc_status sc_profile_to_text(const sc_profile* p, char** out);
SC_API size_t sc_profile_num_voters(const sc_profile* p);
SC_API size_t sc_profile_num_candidates(const sc_profile* p);
SC_API void sc_profile_free(sc_profile* p);

SC_API sc_status sc_tournament_parse(const char* text, sc_tournament** out);
SC_API sc_status sc_tournament_from_profile(const sc_profile* p, sc_tournament** out);
SC_API sc_status sc_tournament_to_text(const sc_tournament* t, char** out);
SC_API sc_status sc_tournament_to_dot(const sc_tournament* t, char** out);
SC_API void sc_tournament_free(sc_tournament* t);

/* A linear profile whose margin graph equals the tournament. */
SC_API sc_status sc_realize(const sc_tournament* t, sc_profile** out);

/* `methods` is a comma-separated list of method tokens, or "all". */
SC_API sc_status sc_tabulate(const sc_profile* p, const char* methods, sc_format format, char** out);

/* Fixture text in the profile or tournament format. */
SC_API sc_status sc_fixture_text(const char* fixture_id, char** out);
/* Newline-separated fixture ids. */
SC_API sc_status sc_fixture_ids(char** out);

typedef struct sc_search_options {
    const char* method;       /* required */
    const char* level;        /* "vccr" or "vscc"; NULL picks vccr when defined, else vscc */
    const char* axiom;        /* required unless `refines` is set */
    const char* refines;      /* method g: search for a defeat of g missing from `method` */
    size_t candidates;
    size_t voters;
    int weak;                 /* non-zero: weak-order ballots */
    int exhaustive;           /* non-zero: exhaustive space, else random trials */
    uint64_t trials;
    uint64_t seed;
    uint64_t ceiling;
    const char* seed_profile; /* profile text tried before the search, or NULL */
    const char* seed_other;   /* comparison profile text for the seed, or NULL */
    const char* seed_ballot;  /* ballot text added to the seed, or NULL */
} sc_search_options;

/* Fills the documented defaults: 3 candidates, 3 voters, linear, exhaustive,
 * 10000 trials, seed 1, ceiling 1000000. */
SC_API void sc_search_options_init(sc_search_options* opts);

/* *found is 1 when a counterexample was found; *report is the report text. */
SC_API sc_status sc_check(const sc_search_options* opts, int* found, char** report);

#ifdef __cplusplus
}
#endif

#endif
