#ifndef SIMSUN_SIMSUN_H
#define SIMSUN_SIMSUN_H

#include <stddef.h>

#if defined(SIMSUN_BUILDING_LIBRARY)
#define SIMSUN_API __attribute__((visibility("default")))
#else
#define SIMSUN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum simsun_status {
  SIMSUN_OK = 0,
  SIMSUN_ERR_INVALID_ARGUMENT = 1,
  SIMSUN_ERR_PARSE = 2,
  SIMSUN_ERR_INVALID_WORD = 3,
  SIMSUN_ERR_EMPTY_PERMUTATION = 4,
  SIMSUN_ERR_INVALID_K = 5,
  SIMSUN_ERR_NOT_IN_TREE = 6,
  SIMSUN_ERR_NOT_AVOIDING = 7,
  SIMSUN_ERR_NOT_IN_DOMAIN = 8,
  SIMSUN_ERR_INVALID_PATH = 9,
  SIMSUN_ERR_INVALID_SEQUENCE = 10,
  SIMSUN_ERR_INVALID_INDEX = 11,
  SIMSUN_ERR_ILL_POSED = 12,
  SIMSUN_ERR_NOT_TABULATED = 13,
  SIMSUN_ERR_OUT_OF_STATED_RANGE = 14,
  SIMSUN_ERR_INTERNAL = 99
} simsun_status;

/* Opaque handles. Every handle returned through an out parameter is owned by
   the caller and released with the matching _free function. */
typedef struct simsun_perm simsun_perm;
typedef struct simsun_patterns simsun_patterns;
typedef struct simsun_strings simsun_strings;
typedef struct simsun_report simsun_report;

/* Symbolic name of a status, e.g. "NotInDomain". Never NULL. */
SIMSUN_API const char* simsun_status_name(simsun_status status);

/* Message of the last failed call on this thread; "" if none. */
SIMSUN_API const char* simsun_last_error(void);

/* Strings returned through char** are released with simsun_string_free. */
SIMSUN_API void simsun_string_free(char* s);

SIMSUN_API size_t simsun_strings_count(const simsun_strings* list);
SIMSUN_API const char* simsun_strings_at(const simsun_strings* list, size_t i);
SIMSUN_API void simsun_strings_free(simsun_strings* list);

/* Permutations: one-line notation "4 1 3 2 5", or "e" for the empty one. */
SIMSUN_API simsun_status simsun_perm_parse(const char* text, simsun_perm** out);
SIMSUN_API void simsun_perm_free(simsun_perm* p);
SIMSUN_API size_t simsun_perm_size(const simsun_perm* p);
SIMSUN_API simsun_status simsun_perm_render(const simsun_perm* p, char** out);
SIMSUN_API simsun_status simsun_perm_is_simsun(const simsun_perm* p, int* out);

/* Pattern sets: comma-separated dash notation, "" or "none" for no pattern. */
SIMSUN_API simsun_status simsun_patterns_parse(const char* text, simsun_patterns** out);
SIMSUN_API void simsun_patterns_free(simsun_patterns* pats);
SIMSUN_API simsun_status simsun_perm_avoids_all(const simsun_perm* p, const simsun_patterns* pats, int* out);

/* Gaps 0..n where n+1 can be inserted; *gaps is released with simsun_ints_free. */
SIMSUN_API simsun_status simsun_fertility_gaps(const simsun_perm* p, const simsun_patterns* pats, int** gaps,
                                               size_t* count);
SIMSUN_API void simsun_ints_free(int* values);

/* Level n of the generating tree filtered by pats, sorted. */
SIMSUN_API simsun_status simsun_tree_level(int n, const simsun_patterns* pats, simsun_strings** out);

/* Counts are decimal strings. method is "brute" or "tree"; threads 0 = auto. */
SIMSUN_API simsun_status simsun_count(int n, const simsun_patterns* pats, const char* method, int threads,
                                      char** out);
SIMSUN_API simsun_status simsun_expected_count(int n, const simsun_patterns* pats, char** out);
SIMSUN_API simsun_status simsun_contain_all_six(int n, int threads, char** observed, char** formula,
                                                simsun_strings** witnesses);

/* id: catalan, motzkin, secondary, fibonacci, euler. */
SIMSUN_API simsun_status simsun_seq(const char* id, int n, char** out);

/* Applies a named bijection to its text argument; see simsun_map_names. */
SIMSUN_API simsun_status simsun_map(const char* bijection, int inverse, const char* object, char** out);
SIMSUN_API simsun_status simsun_map_names(simsun_strings** out);

/* Path classes: Dyck, Motzkin, D1, D2, Dprime, DudFreeExceptLastPeak. */
SIMSUN_API simsun_status simsun_path_classify(const char* path, simsun_strings** out);
SIMSUN_API simsun_status simsun_enumerate_paths(int n, const char* path_class, simsun_strings** out);

/* Reports carry a pass flag plus text and JSON renderings. */
SIMSUN_API simsun_status simsun_verify(const char* suite, int n_max, simsun_report** out);
SIMSUN_API simsun_status simsun_verify_suites(simsun_strings** out);
SIMSUN_API simsun_status simsun_tables(int n_max, int six_max, int threads, simsun_report** out);
SIMSUN_API int simsun_report_ok(const simsun_report* r);
SIMSUN_API const char* simsun_report_text(const simsun_report* r);
SIMSUN_API const char* simsun_report_json(const simsun_report* r);
SIMSUN_API void simsun_report_free(simsun_report* r);

#ifdef __cplusplus
}
#endif

#endif
