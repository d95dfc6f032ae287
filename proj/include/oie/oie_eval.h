/* C interface to the Open IE evaluation toolkit.
 *
 * All objects are opaque handles created and released through this API.
 * Fallible calls return an oie_status code; on failure a human-readable
 * message is available from oie_last_error() until the next call on the
 * same thread. Strings returned through char** are heap-allocated and must
 * be released with oie_string_free().
 */
#ifndef OIE_OIE_EVAL_H
#define OIE_OIE_EVAL_H

#include <stddef.h>

#if defined(_WIN32)
#define OIE_API __declspec(dllexport)
#else
#define OIE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oie_status {
  OIE_OK = 0,
  OIE_E_IO = 1,        /* unreadable or unwritable path */
  OIE_E_PARSE = 2,     /* malformed input file */
  OIE_E_INTEGRITY = 3, /* token provenance inconsistent with its sentence */
  OIE_E_INVALID = 4,   /* bad argument or contract violation */
  OIE_E_INTERNAL = 5
} oie_status;

typedef struct oie_gold oie_gold;
typedef struct oie_predictions oie_predictions;
typedef struct oie_score_report oie_score_report;
typedef struct oie_issues oie_issues;

OIE_API const char* oie_version(void);
OIE_API const char* oie_normalization_id(void);
OIE_API const char* oie_last_error(void);
OIE_API void oie_string_free(char* s);

/* ---- gold reference ---- */

OIE_API int oie_gold_load(const char* path, oie_gold** out);
OIE_API void oie_gold_free(oie_gold* gold);
OIE_API size_t oie_gold_sentence_count(const oie_gold* gold);
OIE_API size_t oie_gold_tuple_count(const oie_gold* gold);
OIE_API int oie_gold_validate(const oie_gold* gold, oie_issues** out);
OIE_API int oie_gold_stats_json(const oie_gold* gold, char** out);
OIE_API int oie_gold_stats_table(const oie_gold* gold, char** out);
/* Gold tuples re-cast as predictions, inferred tokens materialized. */
OIE_API int oie_gold_as_predictions(const oie_gold* gold, oie_predictions** out);

/* ---- validation issues ---- */

OIE_API void oie_issues_free(oie_issues* issues);
OIE_API size_t oie_issues_count(const oie_issues* issues);
OIE_API size_t oie_issues_error_count(const oie_issues* issues);
/* 1 = error, 0 = warning. Out-of-range index yields 0 / NULL. */
OIE_API int oie_issue_is_error(const oie_issues* issues, size_t i);
OIE_API const char* oie_issue_location(const oie_issues* issues, size_t i);
OIE_API const char* oie_issue_message(const oie_issues* issues, size_t i);

/* ---- system predictions ---- */

/* format: "uniform" or "tsv". system_name may be NULL to derive one from
 * the file. */
OIE_API int oie_predictions_load(const char* path, const char* format,
                                 const char* system_name, oie_predictions** out);
OIE_API void oie_predictions_free(oie_predictions* preds);
OIE_API size_t oie_predictions_count(const oie_predictions* preds);
OIE_API const char* oie_predictions_system(const oie_predictions* preds);
OIE_API int oie_predictions_write_uniform(const oie_predictions* preds,
                                          const char* path);
OIE_API int oie_predictions_unknown_sentences(const oie_predictions* preds,
                                              const oie_gold* gold,
                                              oie_issues** out);

/* ---- baseline ---- */

/* max_per_sentence <= 0 emits every split. */
OIE_API int oie_munchkin(const oie_gold* gold, int max_per_sentence,
                         oie_predictions** out);

/* ---- scoring ---- */

OIE_API int oie_score(const oie_gold* gold, const oie_predictions* preds,
                      int include_inferred_in_exact, oie_score_report** out);
OIE_API void oie_score_report_free(oie_score_report* report);
OIE_API const char* oie_report_system(const oie_score_report* report);
OIE_API long long oie_report_extractions(const oie_score_report* report);
OIE_API long long oie_report_gold_tuples(const oie_score_report* report);
OIE_API long long oie_report_matches(const oie_score_report* report);
OIE_API long long oie_report_exact_matches(const oie_score_report* report);
OIE_API double oie_report_matches_precision(const oie_score_report* report);
OIE_API double oie_report_matches_recall(const oie_score_report* report);
OIE_API double oie_report_precision(const oie_score_report* report);
OIE_API double oie_report_recall(const oie_score_report* report);
OIE_API double oie_report_f1(const oie_score_report* report);
OIE_API int oie_report_no_extractions(const oie_score_report* report);
OIE_API int oie_report_json(const oie_score_report* report, char** out);
/* Aligned multi-system table, one row per report. */
OIE_API int oie_reports_table(const oie_score_report* const* reports,
                              size_t count, char** out);

/* ---- confidence sweep ---- */

/* thresholds must be sorted ascending. */
OIE_API int oie_sweep_json(const oie_gold* gold, const oie_predictions* preds,
                           const double* thresholds, size_t count, char** out);
OIE_API int oie_sweep_table(const oie_gold* gold, const oie_predictions* preds,
                            const double* thresholds, size_t count, char** out);

/* ---- inter-annotator agreement ---- */

/* reference may be NULL. Both annotations must cover the same sentences. */
OIE_API int oie_iaa_json(const oie_gold* a, const oie_gold* b,
                         const oie_gold* reference, char** out);
OIE_API int oie_iaa_table(const oie_gold* a, const oie_gold* b,
                          const oie_gold* reference, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OIE_OIE_EVAL_H */
