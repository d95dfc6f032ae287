// Command-line front end. Everything goes through the shared-library C API;
// the core is never linked directly.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oie/oie_eval.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

int exit_for(int status) {
  switch (status) {
    case OIE_OK:
      return kExitOk;
    case OIE_E_IO:
      return kExitIo;
    default:
      return kExitValidation;
  }
}

int report_failure(int status) {
  std::cerr << "oie-eval: " << oie_last_error() << "\n";
  return exit_for(status);
}

struct GoldDeleter {
  void operator()(oie_gold* g) const { oie_gold_free(g); }
};
struct PredsDeleter {
  void operator()(oie_predictions* p) const { oie_predictions_free(p); }
};
struct ReportDeleter {
  void operator()(oie_score_report* r) const { oie_score_report_free(r); }
};
struct IssuesDeleter {
  void operator()(oie_issues* i) const { oie_issues_free(i); }
};

using GoldHandle = std::unique_ptr<oie_gold, GoldDeleter>;
using PredsHandle = std::unique_ptr<oie_predictions, PredsDeleter>;
using ReportHandle = std::unique_ptr<oie_score_report, ReportDeleter>;
using IssuesHandle = std::unique_ptr<oie_issues, IssuesDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  oie_string_free(s);
  return out;
}

std::string iso_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

json make_manifest(const std::string& command, const json& inputs,
                   const json& options) {
  return json{{"tool", "oie-eval"},
              {"command", command},
              {"version", oie_version()},
              {"normalization", oie_normalization_id()},
              {"timestamp", iso_timestamp()},
              {"inputs", inputs},
              {"options", options}};
}

bool write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  out.flush();
  return static_cast<bool>(out);
}

// Prints issues; returns the exit code implied by their severities.
int print_issues(const oie_issues* issues, bool strict) {
  const size_t count = oie_issues_count(issues);
  for (size_t i = 0; i < count; ++i) {
    std::cerr << (oie_issue_is_error(issues, i) ? "error" : "warning") << ": "
              << oie_issue_location(issues, i) << ": "
              << oie_issue_message(issues, i) << "\n";
  }
  const size_t errors = oie_issues_error_count(issues);
  if (errors > 0) return kExitValidation;
  if (strict && count > 0) return kExitValidation;
  return kExitOk;
}

int load_gold_checked(const std::string& path, GoldHandle& out) {
  oie_gold* raw = nullptr;
  if (int status = oie_gold_load(path.c_str(), &raw); status != OIE_OK)
    return report_failure(status);
  out.reset(raw);
  return kExitOk;
}

std::string sanitize_filename(std::string name) {
  for (char& c : name)
    if (c == '/' || c == '\\' || c == ' ') c = '_';
  return name.empty() ? "system" : name;
}

int run_score(const std::string& gold_path,
              const std::vector<std::string>& pred_paths,
              const std::string& format, const std::string& out_path,
              bool strict, bool include_inferred_in_exact, bool self_score) {
  GoldHandle gold;
  if (int code = load_gold_checked(gold_path, gold); code != kExitOk)
    return code;

  oie_issues* raw_issues = nullptr;
  if (int status = oie_gold_validate(gold.get(), &raw_issues); status != OIE_OK)
    return report_failure(status);
  IssuesHandle issues(raw_issues);
  if (int code = print_issues(issues.get(), strict); code != kExitOk) {
    std::cerr << "oie-eval: gold reference failed validation\n";
    return code;
  }

  std::vector<PredsHandle> all_preds;
  std::vector<ReportHandle> reports;
  for (const auto& path : pred_paths) {
    oie_predictions* raw_preds = nullptr;
    if (int status = oie_predictions_load(path.c_str(), format.c_str(), nullptr,
                                          &raw_preds);
        status != OIE_OK)
      return report_failure(status);
    PredsHandle preds(raw_preds);

    oie_issues* raw_unknown = nullptr;
    if (int status = oie_predictions_unknown_sentences(preds.get(), gold.get(),
                                                       &raw_unknown);
        status != OIE_OK)
      return report_failure(status);
    IssuesHandle unknown(raw_unknown);
    if (int code = print_issues(unknown.get(), strict); code != kExitOk)
      return code;

    oie_score_report* raw_report = nullptr;
    if (int status = oie_score(gold.get(), preds.get(),
                               include_inferred_in_exact ? 1 : 0, &raw_report);
        status != OIE_OK)
      return report_failure(status);
    reports.emplace_back(raw_report);
    all_preds.push_back(std::move(preds));
  }

  if (self_score) {
    oie_predictions* raw_self = nullptr;
    if (int status = oie_gold_as_predictions(gold.get(), &raw_self);
        status != OIE_OK)
      return report_failure(status);
    PredsHandle self(raw_self);
    oie_score_report* raw_report = nullptr;
    if (int status = oie_score(gold.get(), self.get(),
                               include_inferred_in_exact ? 1 : 0, &raw_report);
        status != OIE_OK)
      return report_failure(status);
    reports.emplace_back(raw_report);
    all_preds.push_back(std::move(self));
  }

  std::vector<const oie_score_report*> raw_reports;
  for (const auto& r : reports) raw_reports.push_back(r.get());
  char* table = nullptr;
  if (int status =
          oie_reports_table(raw_reports.data(), raw_reports.size(), &table);
      status != OIE_OK)
    return report_failure(status);
  std::cout << take_string(table);

  if (!out_path.empty()) {
    const json manifest = make_manifest(
        "score",
        json{{"gold", gold_path}, {"predictions", pred_paths}},
        json{{"format", format},
             {"include_inferred_in_exact", include_inferred_in_exact},
             {"strict", strict}});
    const bool single_file =
        reports.size() == 1 && out_path.ends_with(".json");
    for (const auto& report : reports) {
      char* payload = nullptr;
      if (int status = oie_report_json(report.get(), &payload);
          status != OIE_OK)
        return report_failure(status);
      const json document = {{"manifest", manifest},
                             {"report", json::parse(take_string(payload))}};
      std::string target = out_path;
      if (!single_file) {
        target = (std::filesystem::path(out_path) /
                  (sanitize_filename(oie_report_system(report.get())) + ".json"))
                     .string();
      }
      if (!write_text_file(target, document.dump(2) + "\n")) {
        std::cerr << "oie-eval: cannot write '" << target << "'\n";
        return kExitIo;
      }
    }
  }
  return kExitOk;
}

int run_munchkin(const std::string& gold_path, const std::string& out_path,
                 int max_per_sentence) {
  GoldHandle gold;
  if (int code = load_gold_checked(gold_path, gold); code != kExitOk)
    return code;

  oie_predictions* raw_preds = nullptr;
  if (int status = oie_munchkin(gold.get(), max_per_sentence, &raw_preds);
      status != OIE_OK)
    return report_failure(status);
  PredsHandle preds(raw_preds);

  if (int status = oie_predictions_write_uniform(preds.get(), out_path.c_str());
      status != OIE_OK)
    return report_failure(status);

  const size_t count = oie_predictions_count(preds.get());
  std::cout << "munchkin: " << count << " tuples over "
            << oie_gold_sentence_count(gold.get()) << " sentences -> "
            << out_path << "\n";
  if (count == 0)
    std::cerr << "warning: no sentence has 3 or more tokens; empty output\n";
  return kExitOk;
}

int run_iaa(const std::string& path_a, const std::string& path_b,
            const std::string& reference_path, const std::string& out_path) {
  GoldHandle a;
  GoldHandle b;
  GoldHandle reference;
  if (int code = load_gold_checked(path_a, a); code != kExitOk) return code;
  if (int code = load_gold_checked(path_b, b); code != kExitOk) return code;
  if (!reference_path.empty()) {
    if (int code = load_gold_checked(reference_path, reference);
        code != kExitOk)
      return code;
  }

  char* table = nullptr;
  if (int status = oie_iaa_table(a.get(), b.get(), reference.get(), &table);
      status != OIE_OK)
    return report_failure(status);
  std::cout << take_string(table);

  if (!out_path.empty()) {
    char* payload = nullptr;
    if (int status = oie_iaa_json(a.get(), b.get(), reference.get(), &payload);
        status != OIE_OK)
      return report_failure(status);
    json inputs = {{"annotation_1", path_a}, {"annotation_2", path_b}};
    if (!reference_path.empty()) inputs["reference"] = reference_path;
    const json document = {{"manifest", make_manifest("iaa", inputs, json::object())},
                           {"iaa", json::parse(take_string(payload))}};
    if (!write_text_file(out_path, document.dump(2) + "\n")) {
      std::cerr << "oie-eval: cannot write '" << out_path << "'\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

int run_stats(const std::string& gold_path, const std::string& out_path) {
  GoldHandle gold;
  if (int code = load_gold_checked(gold_path, gold); code != kExitOk)
    return code;

  char* table = nullptr;
  if (int status = oie_gold_stats_table(gold.get(), &table); status != OIE_OK)
    return report_failure(status);
  std::cout << take_string(table);

  if (!out_path.empty()) {
    char* payload = nullptr;
    if (int status = oie_gold_stats_json(gold.get(), &payload); status != OIE_OK)
      return report_failure(status);
    const json document = {
        {"manifest",
         make_manifest("stats", json{{"gold", gold_path}}, json::object())},
        {"stats", json::parse(take_string(payload))}};
    if (!write_text_file(out_path, document.dump(2) + "\n")) {
      std::cerr << "oie-eval: cannot write '" << out_path << "'\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

int run_validate(const std::string& gold_path, bool strict) {
  GoldHandle gold;
  if (int code = load_gold_checked(gold_path, gold); code != kExitOk)
    return code;

  oie_issues* raw_issues = nullptr;
  if (int status = oie_gold_validate(gold.get(), &raw_issues); status != OIE_OK)
    return report_failure(status);
  IssuesHandle issues(raw_issues);
  const int code = print_issues(issues.get(), strict);
  if (code == kExitOk)
    std::cout << "ok: " << oie_gold_tuple_count(gold.get()) << " tuples over "
              << oie_gold_sentence_count(gold.get()) << " sentences\n";
  return code;
}

int run_sweep(const std::string& gold_path, const std::string& pred_path,
              const std::string& format, std::vector<double> thresholds,
              const std::string& out_path) {
  GoldHandle gold;
  if (int code = load_gold_checked(gold_path, gold); code != kExitOk)
    return code;

  oie_predictions* raw_preds = nullptr;
  if (int status = oie_predictions_load(pred_path.c_str(), format.c_str(),
                                        nullptr, &raw_preds);
      status != OIE_OK)
    return report_failure(status);
  PredsHandle preds(raw_preds);

  if (thresholds.empty())
    for (int i = 0; i <= 10; ++i) thresholds.push_back(i / 10.0);

  char* table = nullptr;
  if (int status = oie_sweep_table(gold.get(), preds.get(), thresholds.data(),
                                   thresholds.size(), &table);
      status != OIE_OK)
    return report_failure(status);
  std::cout << take_string(table);

  if (!out_path.empty()) {
    char* payload = nullptr;
    if (int status = oie_sweep_json(gold.get(), preds.get(), thresholds.data(),
                                    thresholds.size(), &payload);
        status != OIE_OK)
      return report_failure(status);
    const json document = {
        {"manifest",
         make_manifest("sweep",
                       json{{"gold", gold_path}, {"predictions", pred_path}},
                       json{{"format", format}, {"thresholds", thresholds}})},
        {"sweep", json::parse(take_string(payload))}};
    if (!write_text_file(out_path, document.dump(2) + "\n")) {
      std::cerr << "oie-eval: cannot write '" << out_path << "'\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reference-based evaluation for Open Information Extraction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(oie_version()));

  // score
  auto* score = app.add_subcommand("score", "Score prediction files against a gold reference");
  std::string score_gold;
  std::vector<std::string> score_preds;
  std::string score_format = "uniform";
  std::string score_out;
  bool score_strict = false;
  bool score_self = false;
  bool include_inferred_in_exact = true;
  score->add_option("--gold", score_gold, "Gold reference file")->required();
  score->add_option("predictions", score_preds, "Prediction files");
  score->add_flag("--self", score_self,
                  "Also score the gold set against itself, re-serialized as "
                  "predictions with inferred words materialized");
  score->add_option("--format", score_format, "Prediction format")
      ->check(CLI::IsMember({"uniform", "tsv"}));
  score->add_option("--out", score_out,
                    "Machine-readable report: a .json path for a single "
                    "system, an existing directory otherwise");
  score->add_flag("--strict", score_strict, "Treat warnings as errors");
  score->add_flag("--include-inferred-in-exact,!--no-include-inferred-in-exact",
                  include_inferred_in_exact,
                  "Require inferred gold words for exact matches (default on)");

  // munchkin
  auto* munchkin = app.add_subcommand(
      "munchkin", "Emit the trivial full-sentence-split baseline as a prediction file");
  std::string munchkin_gold;
  std::string munchkin_out;
  int munchkin_max = 0;
  munchkin->add_option("--gold", munchkin_gold, "Gold reference file (sentences are taken from it)")
      ->required();
  munchkin->add_option("--out", munchkin_out, "Output prediction file")->required();
  munchkin->add_option("--max-per-sentence", munchkin_max,
                       "Cap tuples per sentence (0 = all splits)");

  // iaa
  auto* iaa = app.add_subcommand("iaa", "Inter-annotator agreement between two annotation files");
  std::string iaa_a;
  std::string iaa_b;
  std::string iaa_reference;
  std::string iaa_out;
  iaa->add_option("annotation_1", iaa_a, "First annotation file")->required();
  iaa->add_option("annotation_2", iaa_b, "Second annotation file")->required();
  iaa->add_option("--reference", iaa_reference, "Merged reference annotation");
  iaa->add_option("--out", iaa_out, "Machine-readable report path");

  // stats
  auto* stats = app.add_subcommand("stats", "Dataset phenomenon statistics");
  std::string stats_gold;
  std::string stats_out;
  stats->add_option("--gold", stats_gold, "Gold reference file")->required();
  stats->add_option("--out", stats_out, "Machine-readable report path");

  // validate
  auto* validate = app.add_subcommand("validate", "Check a gold reference file");
  std::string validate_gold;
  bool validate_strict = false;
  validate->add_option("--gold", validate_gold, "Gold reference file")->required();
  validate->add_flag("--strict", validate_strict, "Treat warnings as errors");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Precision/recall at decreasing confidence thresholds");
  std::string sweep_gold;
  std::string sweep_pred;
  std::string sweep_format = "uniform";
  std::vector<double> sweep_thresholds;
  std::string sweep_out;
  sweep->add_option("--gold", sweep_gold, "Gold reference file")->required();
  sweep->add_option("predictions", sweep_pred, "Prediction file")->required();
  sweep->add_option("--format", sweep_format, "Prediction format")
      ->check(CLI::IsMember({"uniform", "tsv"}));
  sweep->add_option("--thresholds", sweep_thresholds,
                    "Ascending confidence thresholds (default 0,0.1,..,1)")
      ->delimiter(',');
  sweep->add_option("--out", sweep_out, "Machine-readable report path");

  CLI11_PARSE(app, argc, argv);

  if (score->parsed()) {
    if (score_preds.empty() && !score_self) {
      std::cerr << "oie-eval: score needs prediction files or --self\n";
      return kExitValidation;
    }
    return run_score(score_gold, score_preds, score_format, score_out,
                     score_strict, include_inferred_in_exact, score_self);
  }
  if (munchkin->parsed())
    return run_munchkin(munchkin_gold, munchkin_out, munchkin_max);
  if (iaa->parsed()) return run_iaa(iaa_a, iaa_b, iaa_reference, iaa_out);
  if (stats->parsed()) return run_stats(stats_gold, stats_out);
  if (validate->parsed()) return run_validate(validate_gold, validate_strict);
  if (sweep->parsed())
    return run_sweep(sweep_gold, sweep_pred, sweep_format, sweep_thresholds,
                     sweep_out);
  return kExitOk;
}
