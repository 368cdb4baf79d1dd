#ifndef TPM_TPM_H
#define TPM_TPM_H

#include <stddef.h>

#if defined(TPM_BUILDING)
#define TPM_API __attribute__((visibility("default")))
#else
#define TPM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tpm_map tpm_map;
typedef struct tpm_store tpm_store;

typedef enum tpm_status {
    TPM_OK = 0,
    TPM_ERR_PARSE = 1,     /* malformed text */
    TPM_ERR_MAP = 2,       /* text parsed but is not a valid torus map */
    TPM_ERR_STORE = 3,     /* checkpoint missing, truncated or corrupt */
    TPM_ERR_ARGUMENT = 4,  /* bad argument or precondition */
    TPM_ERR_INTERNAL = 5
} tpm_status;

/* Message for the last failed call on this thread ("" if none). */
TPM_API const char* tpm_last_error(void);
/* Frees any string returned through a char** out parameter. */
TPM_API void tpm_string_free(char* s);

/* Maps. Text is a serial form, optionally followed by " | marks=..." and the
   other record fields. */
TPM_API tpm_status tpm_map_parse(const char* text, tpm_map** out);
TPM_API tpm_status tpm_map_from_catalog(int number, tpm_map** out);
TPM_API void tpm_map_free(tpm_map* map);
TPM_API int tpm_map_vertex_count(const tpm_map* map);
TPM_API int tpm_map_face_count(const tpm_map* map);
TPM_API int tpm_map_edge_count(const tpm_map* map);
TPM_API int tpm_map_euler(const tpm_map* map);
TPM_API tpm_status tpm_map_serialize(const tpm_map* map, char** out);
/* Record line: serial form, marks and face count. */
TPM_API tpm_status tpm_map_record(const tpm_map* map, char** out);

typedef enum tpm_verdict {
    TPM_DIMINIMAL = 0,
    TPM_POLYHEDRAL_NOT_DIMINIMAL = 1,
    TPM_NOT_POLYHEDRAL = 2
} tpm_verdict;

/* `record` receives "STATUS<TAB>witness" (may be NULL). */
TPM_API tpm_status tpm_map_classify(const tpm_map* map, tpm_verdict* verdict, char** record);
TPM_API tpm_status tpm_map_dual(const tpm_map* map, tpm_map** out);

enum {
    TPM_ISO_GRAPH_ONLY = 1,
    TPM_ISO_ORIENTATION_PRESERVING = 2
};
/* *found is 1 or 0; when found, *bijection (may be NULL) receives
   "1->a 2->b ...". */
TPM_API tpm_status tpm_map_isomorphism(const tpm_map* a, const tpm_map* b, int flags, int* found,
                                       char** bijection);
TPM_API tpm_status tpm_map_key(const tpm_map* map, int include_marks, char** hex);
/* *reason is NULL when nothing prunes the map. */
TPM_API tpm_status tpm_map_prune(const tpm_map* map, int three_bands, char** reason);
/* Catalog number of a map isomorphic to this one, or 0. */
TPM_API tpm_status tpm_map_catalog_number(const tpm_map* map, int* number);

/* Seed set: a count report and one record line per seed. */
TPM_API tpm_status tpm_seed_build(char** report, char** records);

/* Generation. */
typedef struct tpm_run_options {
    int max_faces;
    int threads;
    int over_approximate;
    int three_bands;
    long checkpoint_every;
    long step_limit;
} tpm_run_options;

typedef struct tpm_stats {
    long pending;
    long processing;
    long processed;
    long emitted;
    long pruned;
} tpm_stats;

TPM_API void tpm_run_options_default(tpm_run_options* options);
TPM_API tpm_status tpm_store_new(tpm_store** out);
TPM_API tpm_status tpm_store_resume(const char* dir, tpm_store** out);
TPM_API void tpm_store_free(tpm_store* store);
TPM_API tpm_status tpm_store_insert(tpm_store* store, const tpm_map* map, const char* via, int* inserted);
/* checkpoint_dir may be NULL. *finished is 1 when the queue drained. */
TPM_API tpm_status tpm_store_run(tpm_store* store, const tpm_run_options* options, const char* checkpoint_dir,
                                 long* steps, int* finished);
TPM_API tpm_status tpm_store_checkpoint(tpm_store* store, const char* dir);
TPM_API tpm_status tpm_store_stats(const tpm_store* store, tpm_stats* out);
/* Emitted maps, one record per line, deduplicated and sorted by key. */
TPM_API tpm_status tpm_store_emitted(const tpm_store* store, char** records);
/* "key<TAB>reason" per pruned task. */
TPM_API tpm_status tpm_store_prune_log(const tpm_store* store, char** lines);

/* Catalog. */
TPM_API int tpm_catalog_size(void);
TPM_API tpm_status tpm_catalog_verify(char** report, int* all_pass);
TPM_API tpm_status tpm_catalog_show(int number, char** text);
TPM_API tpm_status tpm_catalog_export(char** lines);
/* "i j" per line for pairs with isomorphic graphs and non-isomorphic maps. */
TPM_API tpm_status tpm_catalog_graph_twins(char** lines);

#ifdef __cplusplus
}
#endif

#endif
