/* C interface to the partial groupoid toolkit. */
#ifndef PGROUPOID_H
#define PGROUPOID_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PGROUPOID_BUILDING)
#    define PG_API __declspec(dllexport)
#  else
#    define PG_API __declspec(dllimport)
#  endif
#else
#  define PG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pg_groupoid pg_groupoid;

typedef enum pg_status {
  PG_OK = 0,
  PG_ERR_NULL_ARG = 1,
  PG_ERR_PARSE = 2,
  PG_ERR_IO = 3,
  PG_ERR_FOREIGN_ELEMENT = 4,
  PG_ERR_UNKNOWN_FIXTURE = 5,
  PG_ERR_INVALID = 6,     /* bad argument or malformed table */
  PG_ERR_BUDGET = 7,      /* closure or merge budget exhausted */
  PG_ERR_HYPOTHESIS = 8,  /* a required law or precondition fails */
  PG_ERR_INTERNAL = 9
} pg_status;

typedef enum pg_format { PG_FORMAT_TEXT = 0, PG_FORMAT_MACHINE = 1 } pg_format;

typedef struct pg_options {
  pg_format format;
  int nr_bound;                 /* NR word length bound, default 3 */
  const char* instance;         /* "a,b" or a JSON array; NULL for the default */
  const char* instance_file;    /* document with an "instance" key, or NULL */
  size_t budget_elements;       /* default 10000 */
  size_t budget_rounds;         /* default 1000 */
  const char* method;           /* auto, bruteforce, full, maximal, rswoosh */
  int components;
  int clique_cover;
  const char* dot_path;         /* "-" returns the dot text as output */
} pg_options;

PG_API void pg_options_init(pg_options* opts);

PG_API const char* pg_version(void);
PG_API const char* pg_status_name(pg_status status);
/* 1 for malformed input (parse, io, unknown names, bad arguments). */
PG_API int pg_status_is_input_error(pg_status status);
/* Message of the last failure on the calling thread; never NULL. */
PG_API const char* pg_last_error(void);

/* Loads a document from a path (then path + ".json") or from memory. */
PG_API pg_status pg_load_file(const char* path, pg_groupoid** out);
PG_API pg_status pg_load_string(const char* text, pg_groupoid** out);
/* size 0 selects the fixture's default size. */
PG_API pg_status pg_builtin(const char* name, size_t size, pg_groupoid** out);
PG_API void pg_free(pg_groupoid* g);
PG_API void pg_string_free(char* s);

/* Explicit tables only; black-box sources report PG_ERR_INVALID. */
PG_API pg_status pg_size(const pg_groupoid* g, size_t* out);
/* *out is NULL when the composition is undefined. */
PG_API pg_status pg_compose(const pg_groupoid* g, const char* x, const char* y, char** out);
/* Finite view: the explicit table, or the closure of the instance. */
PG_API pg_status pg_materialize(const pg_groupoid* g, const pg_options* opts, pg_groupoid** out);

/* Rendered commands. *out is set whenever a report was produced, including
   closure runs that end with PG_ERR_BUDGET; release it with pg_string_free. */
PG_API pg_status pg_check(const pg_groupoid* g, const pg_options* opts, char** out);
PG_API pg_status pg_closure(const pg_groupoid* g, const pg_options* opts, char** out);
PG_API pg_status pg_er(const pg_groupoid* g, const pg_options* opts, char** out);
PG_API pg_status pg_graph(const pg_groupoid* g, const pg_options* opts, char** out);
PG_API pg_status pg_quotient(const pg_groupoid* g, const pg_options* opts, char** out);
PG_API pg_status pg_order(const pg_groupoid* g, const pg_options* opts, char** out);
PG_API pg_status pg_fixtures_list(pg_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PGROUPOID_H */
