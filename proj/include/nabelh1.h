/* C interface to the cohomology engine.  Documents are opaque; every entry
 * point returns a status code and reports details through UTF-8 JSON strings
 * owned by the library (free with nh1_string_free).  Error text for the most
 * recent failure is kept per thread. */
#ifndef NABELH1_H
#define NABELH1_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nh1_status {
  NH1_OK = 0,
  NH1_CHECKS_FAILED = 1,     /* command ran, but a checked property failed */
  NH1_ERROR_PARSE = 2,       /* malformed JSON or schema violation */
  NH1_ERROR_REFERENCE = 3,   /* a name in the document does not resolve */
  NH1_ERROR_VALIDATION = 4,  /* an object violates its own invariants */
  NH1_ERROR_SIZE_GUARD = 5,  /* an exhaustive search exceeded the cap */
  NH1_ERROR_COMPUTE = 6,     /* precondition or internal computation failure */
  NH1_ERROR_BAD_ARGUMENT = 7 /* null pointer, unknown command, bad options */
} nh1_status;

typedef struct nh1_document nh1_document;

/* Load and fully validate a fixture.  On success *out_doc owns the document;
 * release it with nh1_document_free. */
nh1_status nh1_load_file(const char* path, nh1_document** out_doc);
nh1_status nh1_load_string(const char* text, nh1_document** out_doc);
void nh1_document_free(nh1_document* doc);

/* Run one command: validate, h0, h1, h2, inn, zeta, group-structure, inf-res,
 * seven-term, torsors, torsor-product, theorem-suite.
 *
 * options_json may be NULL or a JSON object with any of:
 *   "object": name (or "left,right" for torsor-product),
 *   "continuous_only": bool (default true),
 *   "size_cap": integer,
 *   "subgroup": [element indices]  (inf-res only).
 *
 * *out_report receives the machine-readable JSON report (stable field order,
 * byte-deterministic).  Returns NH1_OK when the report's "ok" field is true,
 * NH1_CHECKS_FAILED when the command completed but a check failed. */
nh1_status nh1_run(const nh1_document* doc, const char* command,
                   const char* options_json, char** out_report);

/* Canonical machine form of a validated document; reloading it and emitting
 * again reproduces the same bytes. */
nh1_status nh1_emit(const nh1_document* doc, char** out_text);

void nh1_string_free(char* s);

/* Message and kind tag (e.g. "SizeGuardExceeded") of this thread's most
 * recent failure; empty strings when the last call succeeded. */
const char* nh1_last_error(void);
const char* nh1_last_error_kind(void);

#ifdef __cplusplus
}
#endif

#endif /* NABELH1_H */
