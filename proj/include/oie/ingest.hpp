#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "oie/model.hpp"

namespace oie {

// Filesystem-level failure (missing file, unwritable path).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file: bad JSON/TSV, unknown keys, wrong field types.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Token provenance inconsistent with its sentence (index out of range,
// text not matching the indexed sentence token).
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Severity { warning, error };

struct ValidationIssue {
  Severity severity = Severity::error;
  std::string location;
  std::string message;
};

GoldSet load_gold(const std::string& path);
GoldSet parse_gold(const nlohmann::json& root);
nlohmann::json gold_to_json(const GoldSet& gold);
void write_gold(const GoldSet& gold, const std::string& path);

enum class PredictionFormat { uniform, tsv };

// system_name: used when non-empty; otherwise the extractor field of the
// first uniform record, falling back to the file stem.
PredictionSet load_predictions(const std::string& path, PredictionFormat format,
                               const std::string& system_name = "");
PredictionSet parse_uniform(const nlohmann::json& root, const std::string& system_name);
PredictionSet parse_tsv(const std::string& content, const std::string& system_name);
nlohmann::json predictions_to_json(const PredictionSet& preds);
void write_predictions_uniform(const PredictionSet& preds, const std::string& path);

// Structural checks over a constructed set: mandatory arg1/rel, contiguous
// argument slots, arity bound, provenance integrity, resolved-span sanity.
std::vector<ValidationIssue> validate_gold(const GoldSet& gold);

// Predictions whose sentence_id resolves to no gold sentence (kept when
// scoring; they count against precision but can never match).
std::vector<ValidationIssue> unknown_sentence_issues(const PredictionSet& preds,
                                                     const GoldSet& gold);

struct StatsReport {
  int tuples = 0;
  int with_anaphora = 0;    // tuples with >= 1 coreference-resolved part
  int with_inferred = 0;    // tuples containing >= 1 inferred token
  int hallucinated = 0;     // tuples whose relation is entirely inferred
  std::array<int, 6> arity_histogram{};  // index = argument count 0..5
  long long inferred_tokens = 0;
  long long total_tokens = 0;
};

StatsReport resource_stats(const GoldSet& gold);

// The gold tuples re-cast as a prediction set, inferred tokens materialized
// as plain words. Scoring this against its own gold is the self-score check.
PredictionSet gold_as_predictions(const GoldSet& gold);

}  // namespace oie
