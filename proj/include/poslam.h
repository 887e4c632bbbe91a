#ifndef POSLAM_H
#define POSLAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define POSLAM_API __attribute__((visibility("default")))
#else
#define POSLAM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct poslam_term poslam_term;

typedef enum poslam_status {
  POSLAM_OK = 0,
  POSLAM_ERR_PARSE = 1,         /* malformed concrete syntax */
  POSLAM_ERR_ARGUMENT = 2,      /* unknown name or null pointer */
  POSLAM_ERR_PRECONDITION = 3,  /* term outside the required grammar */
  POSLAM_ERR_STALE = 4,         /* redex does not match its term */
  POSLAM_ERR_HARNESS = 5,       /* a constructive transform failed */
  POSLAM_ERR_INTERNAL = 6
} poslam_status;

/* Message for the last failing call on this thread; never null. */
POSLAM_API const char* poslam_last_error(void);

/* Strings returned through char** are owned by the caller. */
POSLAM_API void poslam_string_free(char* s);

POSLAM_API poslam_status poslam_parse(const char* text, poslam_term** out);
POSLAM_API void poslam_term_free(poslam_term* t);
POSLAM_API poslam_status poslam_print(const poslam_term* t, char** out);
/* 1 when alpha-equivalent, 0 otherwise (also on null input). */
POSLAM_API int poslam_alpha_eq(const poslam_term* a, const poslam_term* b);

typedef struct poslam_reduce_options {
  const char* calculus;   /* "vsc", "vsc-core", "opos" or "oxpos"; null means "vsc" */
  int vars_are_values;    /* 0 removes e_var and gc_var */
  const char* strategy;   /* "lo", "random:SEED" or "priority:L1,L2,..."; null means "lo" */
  size_t fuel;
  int json;               /* 1: JSON lines, 0: text */
} poslam_reduce_options;

/* Reduces t; writes the rendered trace to *trace and, when end is not null,
   the last term to *end. */
POSLAM_API poslam_status poslam_reduce(const poslam_term* t, const poslam_reduce_options* opts,
                            char** trace, poslam_term** end);

POSLAM_API poslam_status poslam_translate(const poslam_term* t, poslam_term** out);

/* JSON lines, one per redex, with usefulness verdicts. */
POSLAM_API poslam_status poslam_classify(const poslam_term* t, const char* calculus, int vars_are_values,
                              char** out);

/* Principal typing of an explicit positive term. *typable is set to 0 and
   *out holds the failing constraint when there is none. */
POSLAM_API poslam_status poslam_typeof(const poslam_term* t, int* typable, char** out);

/* Reduction graph as DOT (dot != 0) or as a one-line JSON summary. */
POSLAM_API poslam_status poslam_graph(const poslam_term* t, const char* calculus, int vars_are_values,
                           size_t node_cap, int dot, char** out);

typedef struct poslam_check_options {
  const char* suite;
  size_t size;     /* 0: suite default */
  uint64_t seed;
  size_t count;    /* 0: suite default */
  unsigned threads;
} poslam_check_options;

/* One JSON report per line; *violations sums the violations of all reports. */
POSLAM_API poslam_status poslam_check(const poslam_check_options* opts, char** reports, size_t* violations);

/* Newline-separated suite names. */
POSLAM_API poslam_status poslam_suite_names(char** out);

typedef struct poslam_omega_counts {
  size_t m_steps;
  size_t e_steps;
  size_t gc_steps;
  size_t total_steps;
} poslam_omega_counts;

/* variant: "vars-as-values", "no-var-values" or "oxpos". */
POSLAM_API poslam_status poslam_bench_omega(size_t m_steps, const char* variant, poslam_omega_counts* out);

#ifdef __cplusplus
}
#endif

#endif
