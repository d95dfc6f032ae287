#pragma once

#include <span>
#include <string>
#include <vector>

#include "oie/model.hpp"

namespace oie {

// Token-overlap scores of one candidate (predicted, gold) pair.
//
//   shared    = sum over slots of |pred bag  ∩  gold bag|, where the gold bag
//               drops inferred tokens and bags intersect as multisets
//   precision = shared / |t|   over every predicted token
//   recall    = shared / |g|   over non-inferred gold tokens only
struct PairScore {
  int pred_id = -1;  // position within the sentence's prediction list
  int gold_id = -1;  // position within the sentence's gold list
  int shared = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// One-to-one pairing between the predictions and gold tuples of a sentence.
// pairs are in greedy selection order (max F1 first).
struct Matching {
  std::vector<PairScore> pairs;
  std::vector<int> unmatched_preds;
  std::vector<int> unmatched_golds;
};

// Candidate test: the two tuples share at least one word in each of arg1,
// rel and arg2. A gold slot that is absent or entirely inferred is waived.
bool may_match(const TupleRecord& t, const TupleRecord& g);

// Pairwise scores; requires may_match(t, g).
PairScore pair_score(const TupleRecord& t, const TupleRecord& g);

// Slot-for-slot identical normalized token sequences; the gold side keeps
// its inferred tokens when include_inferred is set (the default).
bool exact_match(const TupleRecord& t, const TupleRecord& g,
                 bool include_inferred = true);

// Repeatedly removes the candidate pair with maximal F1 from the pool.
// Ties break on higher shared count, then lower gold index, then lower
// pred index.
Matching greedy_match(std::span<const TupleRecord* const> preds,
                      std::span<const TupleRecord* const> golds);

struct ScoreOptions {
  bool include_inferred_in_exact = true;
};

// One report row per system, mirroring the usual benchmark table columns.
struct ScoreReport {
  std::string system_name;
  long long extractions = 0;
  long long gold_tuples = 0;
  long long matches = 0;
  long long exact_matches = 0;
  // Unweighted means over matched pairs.
  double matches_precision = 0.0;
  double matches_recall = 0.0;
  // Token-weighted over matched pairs (alternative reading, reported in the
  // machine-readable output only).
  double matches_precision_weighted = 0.0;
  double matches_recall_weighted = 0.0;
  // Token-weighted over all tuples: unmatched predictions contribute their
  // full length to the precision denominator, unmatched gold tuples their
  // non-inferred length to the recall denominator.
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool no_extractions = false;
};

ScoreReport system_scores(const GoldSet& gold, const PredictionSet& preds,
                          const ScoreOptions& options = {});

struct SweepPoint {
  double threshold = 0.0;
  long long extractions = 0;
  double precision = 0.0;
  double recall = 0.0;
};

// Re-scores keeping only predictions with confidence >= threshold, for each
// threshold. Thresholds must be sorted ascending.
std::vector<SweepPoint> confidence_sweep(const GoldSet& gold,
                                         const PredictionSet& preds,
                                         std::span<const double> thresholds,
                                         const ScoreOptions& options = {});

}  // namespace oie
