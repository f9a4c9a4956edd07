/* C interface to the contact_census shared library. */
#ifndef CONTACT_CENSUS_H
#define CONTACT_CENSUS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#else
#define CC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_INVALID_ARGUMENT = 1,
  CC_DOMAIN = 2,
  CC_OVERFLOW = 3,
  CC_WINDOW_TOO_SMALL = 4,
  CC_PARSE = 5,
  CC_INTERNAL = 6
} cc_status;

typedef enum cc_orientation { CC_COUNTERCLOCKWISE = 0, CC_CLOCKWISE = 1 } cc_orientation;

/* Canonical slope p/q with q > 0, or infinity as (1, 0). */
typedef struct cc_slope {
  int64_t p;
  int64_t q;
} cc_slope;

/* Text result (JSON, SVG or DOT) owned by the caller. */
typedef struct cc_document cc_document;
/* An annulus configuration. */
typedef struct cc_config cc_config;

CC_API const char* cc_version(void);
CC_API const char* cc_status_name(cc_status status);
/* Message of the last failed call on this thread; "" if none. */
CC_API const char* cc_last_error(void);

CC_API const char* cc_document_text(const cc_document* doc);
CC_API size_t cc_document_size(const cc_document* doc);
CC_API void cc_document_free(cc_document* doc);

CC_API cc_status cc_slope_parse(const char* text, cc_slope* out);
CC_API cc_status cc_farey_adjacent(cc_slope a, cc_slope b, int* out);
CC_API cc_status cc_bypass_slope(cc_slope s, cc_slope r, cc_orientation orientation, cc_slope* out);
CC_API cc_status cc_dual_slope(int64_t p, int64_t q, int64_t* p_dual, int64_t* q_dual);

CC_API cc_status cc_count_lens(int64_t p, int64_t q, int64_t* out);
CC_API cc_status cc_count_minimal(int64_t p, int64_t q, int64_t* out);
CC_API cc_status cc_count_solid_torus(int64_t p, int64_t q, int64_t* out);
/* Tight T^2 x I with boundary slopes -p/q and -1 and n extra half turns.
   *modulo_holonomy is set when the count is taken up to holonomy. */
CC_API cc_status cc_count_t2i(int64_t p, int64_t q, int64_t n, int64_t* count, int* modulo_holonomy);
CC_API cc_status cc_count_nonrotative(int n0, int n1, int64_t* out);

/* Generic entry point. `operation` names a command such as "cf", "farey.path"
   or "divsets.dual"; `request_json` holds its arguments. The result is a JSON
   document with "schema" as its first key, except for "diagram", which
   returns SVG or DOT text. */
CC_API cc_status cc_run(const char* operation, const char* request_json, cc_document** out);

CC_API cc_status cc_config_from_json(const char* json, cc_config** out);
CC_API cc_status cc_config_to_json(const cc_config* config, cc_document** out);
CC_API void cc_config_free(cc_config* config);
CC_API cc_status cc_config_crossing_count(const cc_config* config, int* out);
/* Stacks upper on lower. *identity is set when all arcs cross and no closed
   curve appears. */
CC_API cc_status cc_config_glue(const cc_config* lower, const cc_config* upper, cc_config** out,
                                int* trivial_closed, int* essential_closed, int* identity);
CC_API cc_status cc_config_reflexive(const cc_config* config, int window, int* out);
CC_API cc_status cc_config_disk_equivalent(const cc_config* a, const cc_config* b, int* out);

#ifdef __cplusplus
}
#endif

#endif
