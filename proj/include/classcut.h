/* classcut — concept extraction for low-cohesive classes.
 *
 * C interface to the classcut shared library. Handles are opaque; every
 * function that can fail returns a classcut_status, and a human-readable
 * message for the most recent failure on the calling thread is available
 * from classcut_last_error(). Strings returned through char** out-params
 * are owned by the caller and released with classcut_string_free().
 */
#ifndef CLASSCUT_H
#define CLASSCUT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CLASSCUT_API __declspec(dllexport)
#else
#define CLASSCUT_API __attribute__((visibility("default")))
#endif

typedef enum classcut_status {
  CLASSCUT_OK = 0,
  CLASSCUT_E_SYNTAX,
  CLASSCUT_E_DUPLICATE_MEMBER,
  CLASSCUT_E_UNKNOWN_MEMBER,
  CLASSCUT_E_KIND_MISMATCH,
  CLASSCUT_E_MALFORMED_DOCUMENT,
  CLASSCUT_E_NON_SQUARE,
  CLASSCUT_E_VALUE_OUT_OF_RANGE,
  CLASSCUT_E_ASYMMETRIC_CONFLICT,
  CLASSCUT_E_EMPTY_GRAPH,
  CLASSCUT_E_NO_METHODS_IN_TARGET,
  CLASSCUT_E_NO_FIELDS_IN_TARGET,
  CLASSCUT_E_INVALID_ARGUMENT,
  CLASSCUT_E_INTERNAL
} classcut_status;

typedef enum classcut_format {
  CLASSCUT_FORMAT_TEXT = 0,
  CLASSCUT_FORMAT_JSON = 1,
  CLASSCUT_FORMAT_DOT = 2
} classcut_format;

typedef enum classcut_linkage {
  CLASSCUT_LINKAGE_SINGLE = 0,
  CLASSCUT_LINKAGE_COMPLETE = 1,
  CLASSCUT_LINKAGE_AVERAGE = 2,
  CLASSCUT_LINKAGE_WEIGHTED = 3
} classcut_linkage;

typedef enum classcut_tcc_mode {
  CLASSCUT_TCC_DIRECT = 0,
  CLASSCUT_TCC_CALL_CLOSURE = 1
} classcut_tcc_mode;

typedef enum classcut_verdict {
  CLASSCUT_VERDICT_LOW_COHESION = 0,
  CLASSCUT_VERDICT_ACCEPTABLE = 1,
  CLASSCUT_VERDICT_INDETERMINATE = 2
} classcut_verdict;

typedef struct classcut_graph classcut_graph;
typedef struct classcut_matrix classcut_matrix;

typedef struct classcut_config {
  double threshold;      /* similarity cut-off, default 0.2 */
  classcut_linkage linkage; /* default complete */
  int min_size;          /* clusters below this size get merged, default 2 */
  long lcom_threshold;   /* default 0 */
  double tcc_threshold;  /* default 0.5 */
  classcut_tcc_mode tcc_mode; /* default direct */
  int force;             /* run clustering even for acceptable cohesion */
} classcut_config;

CLASSCUT_API void classcut_config_init(classcut_config *config);

/* --- input parsing --- */
CLASSCUT_API classcut_status classcut_graph_parse_cdl(const char *text, classcut_graph **out);
CLASSCUT_API classcut_status classcut_graph_parse_json(const char *text, classcut_graph **out);
CLASSCUT_API classcut_status classcut_graph_to_cdl(const classcut_graph *graph, char **out);
CLASSCUT_API void classcut_graph_free(classcut_graph *graph);

CLASSCUT_API classcut_status classcut_matrix_parse_csv(const char *text, classcut_matrix **out);
CLASSCUT_API classcut_status classcut_matrix_from_graph(const classcut_graph *graph,
                                                        classcut_matrix **out);
CLASSCUT_API classcut_status classcut_matrix_to_csv(const classcut_matrix *matrix, char **out);
CLASSCUT_API void classcut_matrix_free(classcut_matrix *matrix);

/* --- analyses --- */

/* Step 1 only: LCOM/TCC and the cohesion verdict. format: text or json. */
CLASSCUT_API classcut_status classcut_metrics(const classcut_graph *graph,
                                              const classcut_config *config,
                                              classcut_format format, char **out,
                                              classcut_verdict *verdict_out);

/* Full two-step pipeline. proposed_out (optional) reports whether a
 * refactoring was proposed. format: text or json. */
CLASSCUT_API classcut_status classcut_analyze(const classcut_graph *graph,
                                              const classcut_config *config,
                                              classcut_format format, char **out,
                                              int *proposed_out);

/* Similarity + clustering only. format: text, json, or dot (dendrogram). */
CLASSCUT_API classcut_status classcut_cluster_graph(const classcut_graph *graph,
                                                    const classcut_config *config,
                                                    classcut_format format, char **out);
CLASSCUT_API classcut_status classcut_cluster_matrix(const classcut_matrix *matrix,
                                                     const classcut_config *config,
                                                     classcut_format format, char **out);

/* Dendrogram rendering. format: text or dot. */
CLASSCUT_API classcut_status classcut_dendrogram_graph(const classcut_graph *graph,
                                                       const classcut_config *config,
                                                       classcut_format format, char **out);
CLASSCUT_API classcut_status classcut_dendrogram_matrix(const classcut_matrix *matrix,
                                                        const classcut_config *config,
                                                        classcut_format format, char **out);

CLASSCUT_API void classcut_string_free(char *s);

/* Message for the most recent error on this thread; never NULL. */
CLASSCUT_API const char *classcut_last_error(void);
CLASSCUT_API const char *classcut_status_name(classcut_status status);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CLASSCUT_H */
