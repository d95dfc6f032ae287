#include "oie/oie_eval.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "oie/baseline.hpp"
#include "oie/iaa.hpp"
#include "oie/ingest.hpp"
#include "oie/model.hpp"
#include "oie/report.hpp"
#include "oie/scorer.hpp"
#include "oie/text.hpp"
#include "oie/version.hpp"

extern "C" {

struct oie_gold {
  oie::GoldSet rep;
};

struct oie_predictions {
  oie::PredictionSet rep;
};

struct oie_score_report {
  oie::ScoreReport rep;
};

struct oie_issues {
  std::vector<oie::ValidationIssue> rep;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

int fail(int code, const std::string& message) {
  set_error(message);
  return code;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return OIE_OK;
  } catch (const oie::IoError& e) {
    return fail(OIE_E_IO, e.what());
  } catch (const oie::ParseError& e) {
    return fail(OIE_E_PARSE, e.what());
  } catch (const oie::IntegrityError& e) {
    return fail(OIE_E_INTEGRITY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(OIE_E_INVALID, e.what());
  } catch (const std::logic_error& e) {
    return fail(OIE_E_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(OIE_E_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* oie_version(void) { return "0.1.0"; }

const char* oie_normalization_id(void) {
  static const std::string id{oie::kNormalizationId};
  return id.c_str();
}

const char* oie_last_error(void) { return g_last_error.c_str(); }

void oie_string_free(char* s) { std::free(s); }

int oie_gold_load(const char* path, oie_gold** out) {
  if (path == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_gold_load: NULL argument");
  return guarded([&] { *out = new oie_gold{oie::load_gold(path)}; });
}

void oie_gold_free(oie_gold* gold) { delete gold; }

size_t oie_gold_sentence_count(const oie_gold* gold) {
  return gold ? gold->rep.sentences.size() : 0;
}

size_t oie_gold_tuple_count(const oie_gold* gold) {
  return gold ? gold->rep.tuples.size() : 0;
}

int oie_gold_validate(const oie_gold* gold, oie_issues** out) {
  if (gold == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_gold_validate: NULL argument");
  return guarded([&] { *out = new oie_issues{oie::validate_gold(gold->rep)}; });
}

int oie_gold_stats_json(const oie_gold* gold, char** out) {
  if (gold == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_gold_stats_json: NULL argument");
  return guarded([&] {
    *out = copy_string(oie::stats_json(oie::resource_stats(gold->rep)).dump(2));
  });
}

int oie_gold_stats_table(const oie_gold* gold, char** out) {
  if (gold == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_gold_stats_table: NULL argument");
  return guarded([&] {
    *out = copy_string(oie::render_stats_table(oie::resource_stats(gold->rep)));
  });
}

int oie_gold_as_predictions(const oie_gold* gold, oie_predictions** out) {
  if (gold == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_gold_as_predictions: NULL argument");
  return guarded(
      [&] { *out = new oie_predictions{oie::gold_as_predictions(gold->rep)}; });
}

void oie_issues_free(oie_issues* issues) { delete issues; }

size_t oie_issues_count(const oie_issues* issues) {
  return issues ? issues->rep.size() : 0;
}

size_t oie_issues_error_count(const oie_issues* issues) {
  if (issues == nullptr) return 0;
  size_t errors = 0;
  for (const auto& issue : issues->rep)
    if (issue.severity == oie::Severity::error) ++errors;
  return errors;
}

int oie_issue_is_error(const oie_issues* issues, size_t i) {
  if (issues == nullptr || i >= issues->rep.size()) return 0;
  return issues->rep[i].severity == oie::Severity::error ? 1 : 0;
}

const char* oie_issue_location(const oie_issues* issues, size_t i) {
  if (issues == nullptr || i >= issues->rep.size()) return nullptr;
  return issues->rep[i].location.c_str();
}

const char* oie_issue_message(const oie_issues* issues, size_t i) {
  if (issues == nullptr || i >= issues->rep.size()) return nullptr;
  return issues->rep[i].message.c_str();
}

int oie_predictions_load(const char* path, const char* format,
                         const char* system_name, oie_predictions** out) {
  if (path == nullptr || format == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_predictions_load: NULL argument");
  const std::string fmt = format;
  if (fmt != "uniform" && fmt != "tsv")
    return fail(OIE_E_INVALID, "unknown prediction format '" + fmt + "'");
  return guarded([&] {
    *out = new oie_predictions{oie::load_predictions(
        path,
        fmt == "uniform" ? oie::PredictionFormat::uniform
                         : oie::PredictionFormat::tsv,
        system_name ? system_name : "")};
  });
}

void oie_predictions_free(oie_predictions* preds) { delete preds; }

size_t oie_predictions_count(const oie_predictions* preds) {
  return preds ? preds->rep.tuples.size() : 0;
}

const char* oie_predictions_system(const oie_predictions* preds) {
  return preds ? preds->rep.system_name.c_str() : nullptr;
}

int oie_predictions_write_uniform(const oie_predictions* preds,
                                  const char* path) {
  if (preds == nullptr || path == nullptr)
    return fail(OIE_E_INVALID, "oie_predictions_write_uniform: NULL argument");
  return guarded([&] { oie::write_predictions_uniform(preds->rep, path); });
}

int oie_predictions_unknown_sentences(const oie_predictions* preds,
                                      const oie_gold* gold, oie_issues** out) {
  if (preds == nullptr || gold == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_predictions_unknown_sentences: NULL argument");
  return guarded([&] {
    *out = new oie_issues{oie::unknown_sentence_issues(preds->rep, gold->rep)};
  });
}

int oie_munchkin(const oie_gold* gold, int max_per_sentence,
                 oie_predictions** out) {
  if (gold == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_munchkin: NULL argument");
  return guarded([&] {
    oie::MunchkinConfig config;
    if (max_per_sentence > 0) config.max_tuples_per_sentence = max_per_sentence;
    *out = new oie_predictions{oie::munchkin_predictions(gold->rep, config)};
  });
}

int oie_score(const oie_gold* gold, const oie_predictions* preds,
              int include_inferred_in_exact, oie_score_report** out) {
  if (gold == nullptr || preds == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_score: NULL argument");
  return guarded([&] {
    oie::ScoreOptions options;
    options.include_inferred_in_exact = include_inferred_in_exact != 0;
    *out = new oie_score_report{
        oie::system_scores(gold->rep, preds->rep, options)};
  });
}

void oie_score_report_free(oie_score_report* report) { delete report; }

const char* oie_report_system(const oie_score_report* r) {
  return r ? r->rep.system_name.c_str() : nullptr;
}

long long oie_report_extractions(const oie_score_report* r) {
  return r ? r->rep.extractions : 0;
}

long long oie_report_gold_tuples(const oie_score_report* r) {
  return r ? r->rep.gold_tuples : 0;
}

long long oie_report_matches(const oie_score_report* r) {
  return r ? r->rep.matches : 0;
}

long long oie_report_exact_matches(const oie_score_report* r) {
  return r ? r->rep.exact_matches : 0;
}

double oie_report_matches_precision(const oie_score_report* r) {
  return r ? r->rep.matches_precision : 0.0;
}

double oie_report_matches_recall(const oie_score_report* r) {
  return r ? r->rep.matches_recall : 0.0;
}

double oie_report_precision(const oie_score_report* r) {
  return r ? r->rep.precision : 0.0;
}

double oie_report_recall(const oie_score_report* r) {
  return r ? r->rep.recall : 0.0;
}

double oie_report_f1(const oie_score_report* r) { return r ? r->rep.f1 : 0.0; }

int oie_report_no_extractions(const oie_score_report* r) {
  return r && r->rep.no_extractions ? 1 : 0;
}

int oie_report_json(const oie_score_report* r, char** out) {
  if (r == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_report_json: NULL argument");
  return guarded(
      [&] { *out = copy_string(oie::score_report_json(r->rep).dump(2)); });
}

int oie_reports_table(const oie_score_report* const* reports, size_t count,
                      char** out) {
  if (reports == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_reports_table: NULL argument");
  return guarded([&] {
    std::vector<oie::ScoreReport> rows;
    rows.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (reports[i] == nullptr) throw std::invalid_argument("NULL report");
      rows.push_back(reports[i]->rep);
    }
    *out = copy_string(oie::render_score_table(rows));
  });
}

int oie_sweep_json(const oie_gold* gold, const oie_predictions* preds,
                   const double* thresholds, size_t count, char** out) {
  if (gold == nullptr || preds == nullptr || thresholds == nullptr ||
      out == nullptr)
    return fail(OIE_E_INVALID, "oie_sweep_json: NULL argument");
  return guarded([&] {
    const auto points = oie::confidence_sweep(gold->rep, preds->rep,
                                              {thresholds, count});
    *out = copy_string(oie::sweep_json(points).dump(2));
  });
}

int oie_sweep_table(const oie_gold* gold, const oie_predictions* preds,
                    const double* thresholds, size_t count, char** out) {
  if (gold == nullptr || preds == nullptr || thresholds == nullptr ||
      out == nullptr)
    return fail(OIE_E_INVALID, "oie_sweep_table: NULL argument");
  return guarded([&] {
    const auto points = oie::confidence_sweep(gold->rep, preds->rep,
                                              {thresholds, count});
    *out = copy_string(oie::render_sweep_table(points));
  });
}

int oie_iaa_json(const oie_gold* a, const oie_gold* b,
                 const oie_gold* reference, char** out) {
  if (a == nullptr || b == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_iaa_json: NULL argument");
  return guarded([&] {
    const auto report =
        oie::iaa_report(a->rep, b->rep, reference ? &reference->rep : nullptr);
    *out = copy_string(oie::iaa_json(report).dump(2));
  });
}

int oie_iaa_table(const oie_gold* a, const oie_gold* b,
                  const oie_gold* reference, char** out) {
  if (a == nullptr || b == nullptr || out == nullptr)
    return fail(OIE_E_INVALID, "oie_iaa_table: NULL argument");
  return guarded([&] {
    const auto report =
        oie::iaa_report(a->rep, b->rep, reference ? &reference->rep : nullptr);
    *out = copy_string(oie::render_iaa_table(report));
  });
}

}  // extern "C"
