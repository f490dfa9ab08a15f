/* C interface to the colorful graph associahedron library.
 *
 * All functions return cga_status; results are written through out
 * parameters. Returned strings are heap-allocated UTF-8 and must be
 * released with cga_string_free. On failure, cga_last_error() describes
 * the problem for the calling thread.
 */
#ifndef CGA_H
#define CGA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cga_status {
  CGA_OK = 0,
  CGA_ERROR_INPUT = 2,    /* malformed spec, bad index, invalid argument */
  CGA_ERROR_RESOURCE = 3, /* face or size guard exceeded */
  CGA_ERROR_INTERNAL = 5  /* broken invariant; indicates a library bug */
} cga_status;

/* Parsed graph-with-palette spec. */
typedef struct cga_spec cga_spec;
/* Built collection of face posets, one per root template. */
typedef struct cga_collection cga_collection;

const char* cga_last_error(void);
void cga_string_free(char* s);

/* Spec JSON: {"nodes": [...], "edges": [["a","b"], ...], "palette": [...]}.
 * The palette may be overridden by a comma-separated list (NULL to keep). */
cga_status cga_spec_parse(const char* json_text, const char* palette_override,
                          cga_spec** out);
void cga_spec_free(cga_spec* spec);

/* Tube listing with inner/outer/component classification, as JSON. */
cga_status cga_spec_tubes_json(const cga_spec* spec, char** out_json);

/* Build every component. max_faces == 0 selects the default guard. */
cga_status cga_build(const cga_spec* spec, size_t max_faces,
                     cga_collection** out);
void cga_collection_free(cga_collection* c);
size_t cga_collection_size(const cga_collection* c);

/* Per-component reports. */
cga_status cga_component_summary_json(const cga_collection* c, size_t index,
                                      char** out_json);
cga_status cga_component_dump_json(const cga_collection* c, size_t index,
                                   char** out_json);
cga_status cga_component_verify_json(const cga_collection* c, size_t index,
                                     int* all_ok, char** out_json);
cga_status cga_component_skeleton_dot(const cga_collection* c, size_t index,
                                      char** out_dot);
cga_status cga_component_hasse_dot(const cga_collection* c, size_t index,
                                   char** out_dot);

/* Cross-checks: classic monochrome comparison, exchange-graph oracle,
 * product structure (first product_cap faces of codimension >= 2 per
 * component; 0 selects the default), and per-component regularity. */
cga_status cga_oracle_json(const cga_spec* spec, size_t max_faces,
                           size_t product_cap, int* all_ok, char** out_json);

/* 1 if the JSON text is a poset dump (as written by
 * cga_component_dump_json), 0 if it is a graph spec. */
cga_status cga_input_is_dump(const char* json_text, int* is_dump);

/* Verify a previously saved poset dump. */
cga_status cga_dump_verify_json(const char* dump_json, int* all_ok,
                                char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CGA_H */
