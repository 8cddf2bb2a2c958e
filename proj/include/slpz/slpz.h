/*
 * C interface of libslpz: grammar-based compression into straight-line
 * programs. All handles are opaque; every fallible call returns an
 * slpz_status and leaves a message retrievable with slpz_last_error() on
 * the calling thread. Buffers returned through out-parameters are owned by
 * the caller and released with slpz_free().
 */
#ifndef SLPZ_SLPZ_H
#define SLPZ_SLPZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SLPZ_BUILDING_LIBRARY)
#    define SLPZ_API __declspec(dllexport)
#  else
#    define SLPZ_API __declspec(dllimport)
#  endif
#else
#  define SLPZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slpz_status {
  SLPZ_OK = 0,
  SLPZ_ERROR_INVALID_ARGUMENT = 1,
  SLPZ_ERROR_EMPTY_INPUT = 2,
  SLPZ_ERROR_MALFORMED = 3,     /* SLPZ text or grammar is malformed */
  SLPZ_ERROR_INVARIANT = 4,     /* a verified invariant failed */
  SLPZ_ERROR_OUT_OF_MEMORY = 5,
  SLPZ_ERROR_INTERNAL = 6
} slpz_status;

typedef struct slpz_grammar slpz_grammar;

typedef struct slpz_options {
  int dedup;   /* reuse one fresh letter per distinct free pair per phase */
  int verify;  /* check every per-phase invariant (linear overhead) */
} slpz_options;

typedef struct slpz_phase_stats {
  uint64_t phase;
  uint64_t len_before;
  uint64_t len_after;
  uint64_t factors_before;
  uint64_t factors_after;
  uint64_t free_before;
  uint64_t free_after;
  uint64_t free_created_by_pairing;
  uint64_t fresh_letters;
} slpz_phase_stats;

SLPZ_API const char* slpz_version(void);
SLPZ_API const char* slpz_status_string(slpz_status status);
SLPZ_API const char* slpz_last_error(void);

/* dedup off, verify on */
SLPZ_API void slpz_options_init(slpz_options* options);

SLPZ_API slpz_status slpz_compress(const uint8_t* data, size_t size,
                                   const slpz_options* options,
                                   slpz_grammar** out);
SLPZ_API slpz_status slpz_parse(const char* text, size_t size,
                                slpz_grammar** out);
SLPZ_API void slpz_grammar_free(slpz_grammar* grammar);

SLPZ_API uint64_t slpz_grammar_length(const slpz_grammar* grammar);
SLPZ_API size_t slpz_grammar_rule_count(const slpz_grammar* grammar);
SLPZ_API uint32_t slpz_grammar_start(const slpz_grammar* grammar);
SLPZ_API slpz_status slpz_grammar_rule(const slpz_grammar* grammar, size_t index,
                                       uint32_t* lhs, uint32_t* left,
                                       uint32_t* right);
/* Phase statistics exist only for grammars produced by slpz_compress. */
SLPZ_API size_t slpz_grammar_phase_count(const slpz_grammar* grammar);
SLPZ_API slpz_status slpz_grammar_phase(const slpz_grammar* grammar, size_t index,
                                        slpz_phase_stats* out);

/* SLPZ v1 text, NUL-terminated; *size excludes the terminator. */
SLPZ_API slpz_status slpz_serialize(const slpz_grammar* grammar, char** out,
                                    size_t* size);
SLPZ_API slpz_status slpz_expand(const slpz_grammar* grammar, uint8_t** out,
                                 size_t* size);
/* One JSON object per phase and line. */
SLPZ_API slpz_status slpz_trace_jsonl(const slpz_grammar* grammar, char** out,
                                      size_t* size);
/* Single JSON object; requires a grammar from slpz_compress. */
SLPZ_API slpz_status slpz_report_json(const slpz_grammar* grammar, char** out,
                                      size_t* size);

/* Runs the built-in oracle suite. Returns SLPZ_OK if everything passed and
 * SLPZ_ERROR_INVARIANT otherwise; the summary table is returned either way. */
SLPZ_API slpz_status slpz_selftest(size_t limit, uint64_t seed, int inject_fault,
                                   char** summary, size_t* size);

SLPZ_API void slpz_free(void* buffer);

#ifdef __cplusplus
}
#endif

#endif /* SLPZ_SLPZ_H */
