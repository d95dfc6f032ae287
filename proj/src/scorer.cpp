#include "oie/scorer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string_view>

namespace oie {

namespace {

const std::vector<Token> kNoTokens;

const std::vector<Token>& tokens_of(const TupleRecord& t, Slot slot) {
  const Part* p = t.part(slot);
  return p ? p->tokens : kNoTokens;
}

std::vector<std::string> slot_bag(const TupleRecord& t, Slot slot,
                                  bool include_inferred) {
  const Part* p = t.part(slot);
  if (!p) return {};
  return scored_bag(*p, include_inferred);
}

// Selection order: max f1, then max shared, then lowest gold index, then
// lowest pred index.
bool preferred(const PairScore& a, const PairScore& b) {
  if (a.f1 != b.f1) return a.f1 > b.f1;
  if (a.shared != b.shared) return a.shared > b.shared;
  if (a.gold_id != b.gold_id) return a.gold_id < b.gold_id;
  return a.pred_id < b.pred_id;
}

}  // namespace

bool may_match(const TupleRecord& t, const TupleRecord& g) {
  for (Slot slot : {Slot::arg1, Slot::rel, Slot::arg2}) {
    const std::vector<std::string> gold_bag = slot_bag(g, slot, false);
    if (gold_bag.empty()) continue;  // absent or entirely inferred: waived
    if (bag_intersection_size(slot_bag(t, slot, true), gold_bag) == 0)
      return false;
  }
  return true;
}

PairScore pair_score(const TupleRecord& t, const TupleRecord& g) {
  if (!may_match(t, g))
    throw std::logic_error("pair_score called on a non-candidate pair");

  PairScore score;
  for (int i = 0; i < 6; ++i) {
    const Slot slot = static_cast<Slot>(i);
    score.shared += bag_intersection_size(slot_bag(t, slot, true),
                                          slot_bag(g, slot, false));
  }
  const int pred_len = tuple_length(t, true);
  const int gold_len = tuple_length(g, false);
  score.precision = pred_len > 0 ? static_cast<double>(score.shared) / pred_len : 0.0;
  score.recall = gold_len > 0 ? static_cast<double>(score.shared) / gold_len : 0.0;
  const double pr = score.precision + score.recall;
  score.f1 = pr > 0.0 ? 2.0 * score.precision * score.recall / pr : 0.0;
  return score;
}

bool exact_match(const TupleRecord& t, const TupleRecord& g,
                 bool include_inferred) {
  for (int i = 0; i < 6; ++i) {
    const Slot slot = static_cast<Slot>(i);
    const auto& pred_tokens = tokens_of(t, slot);
    const auto& gold_tokens = tokens_of(g, slot);

    size_t pi = 0;
    for (const auto& gold_token : gold_tokens) {
      if (gold_token.inferred && !include_inferred) continue;
      if (pi >= pred_tokens.size() || pred_tokens[pi].text != gold_token.text)
        return false;
      ++pi;
    }
    if (pi != pred_tokens.size()) return false;
  }
  return true;
}

Matching greedy_match(std::span<const TupleRecord* const> preds,
                      std::span<const TupleRecord* const> golds) {
  std::vector<PairScore> candidates;
  for (size_t gi = 0; gi < golds.size(); ++gi) {
    for (size_t pi = 0; pi < preds.size(); ++pi) {
      if (!may_match(*preds[pi], *golds[gi])) continue;
      PairScore score = pair_score(*preds[pi], *golds[gi]);
      score.pred_id = static_cast<int>(pi);
      score.gold_id = static_cast<int>(gi);
      candidates.push_back(score);
    }
  }

  Matching matching;
  std::vector<bool> pred_used(preds.size(), false);
  std::vector<bool> gold_used(golds.size(), false);
  for (;;) {
    const PairScore* best = nullptr;
    for (const auto& c : candidates) {
      if (pred_used[c.pred_id] || gold_used[c.gold_id]) continue;
      if (best == nullptr || preferred(c, *best)) best = &c;
    }
    if (best == nullptr) break;
    pred_used[best->pred_id] = true;
    gold_used[best->gold_id] = true;
    matching.pairs.push_back(*best);
  }

  for (size_t pi = 0; pi < preds.size(); ++pi)
    if (!pred_used[pi]) matching.unmatched_preds.push_back(static_cast<int>(pi));
  for (size_t gi = 0; gi < golds.size(); ++gi)
    if (!gold_used[gi]) matching.unmatched_golds.push_back(static_cast<int>(gi));
  return matching;
}

ScoreReport system_scores(const GoldSet& gold, const PredictionSet& preds,
                          const ScoreOptions& options) {
  ScoreReport report;
  report.system_name = preds.system_name;
  report.extractions = static_cast<long long>(preds.tuples.size());
  report.gold_tuples = static_cast<long long>(gold.tuples.size());
  report.no_extractions = preds.tuples.empty();

  long long pred_len_total = 0;
  for (const auto& t : preds.tuples) pred_len_total += tuple_length(t, true);
  long long gold_len_total = 0;
  for (const auto& g : gold.tuples) gold_len_total += tuple_length(g, false);

  // Group once, preserving file order within each sentence.
  std::map<std::string_view, std::vector<const TupleRecord*>> preds_by_sentence;
  for (const auto& t : preds.tuples)
    preds_by_sentence[t.sentence_id].push_back(&t);

  long long shared_total = 0;
  long long matched_pred_len = 0;
  long long matched_gold_len = 0;
  double pair_precision_sum = 0.0;
  double pair_recall_sum = 0.0;

  for (const auto& sentence : gold.sentences) {
    const auto golds = gold.tuples_for(sentence.sentence_id);
    auto it = preds_by_sentence.find(sentence.sentence_id);
    if (it == preds_by_sentence.end() || golds.empty()) continue;
    const auto& sentence_preds = it->second;

    const Matching matching = greedy_match(sentence_preds, golds);
    for (const auto& pair : matching.pairs) {
      shared_total += pair.shared;
      matched_pred_len += tuple_length(*sentence_preds[pair.pred_id], true);
      matched_gold_len += tuple_length(*golds[pair.gold_id], false);
      pair_precision_sum += pair.precision;
      pair_recall_sum += pair.recall;
      ++report.matches;
      if (exact_match(*sentence_preds[pair.pred_id], *golds[pair.gold_id],
                      options.include_inferred_in_exact))
        ++report.exact_matches;
    }
  }

  if (report.matches > 0) {
    report.matches_precision = pair_precision_sum / report.matches;
    report.matches_recall = pair_recall_sum / report.matches;
    report.matches_precision_weighted =
        static_cast<double>(shared_total) / matched_pred_len;
    report.matches_recall_weighted =
        static_cast<double>(shared_total) / matched_gold_len;
  }
  report.precision = pred_len_total > 0
                         ? static_cast<double>(shared_total) / pred_len_total
                         : 0.0;
  report.recall = gold_len_total > 0
                      ? static_cast<double>(shared_total) / gold_len_total
                      : 0.0;
  const double pr = report.precision + report.recall;
  report.f1 = pr > 0.0 ? 2.0 * report.precision * report.recall / pr : 0.0;
  return report;
}

std::vector<SweepPoint> confidence_sweep(const GoldSet& gold,
                                         const PredictionSet& preds,
                                         std::span<const double> thresholds,
                                         const ScoreOptions& options) {
  for (size_t i = 1; i < thresholds.size(); ++i)
    if (thresholds[i] < thresholds[i - 1])
      throw std::invalid_argument("sweep thresholds must be sorted ascending");

  std::vector<SweepPoint> points;
  points.reserve(thresholds.size());
  for (double threshold : thresholds) {
    PredictionSet kept;
    kept.system_name = preds.system_name;
    for (const auto& t : preds.tuples)
      if (t.confidence.value_or(1.0) >= threshold) kept.tuples.push_back(t);
    const ScoreReport report = system_scores(gold, kept, options);
    points.push_back({threshold, report.extractions, report.precision,
                      report.recall});
  }
  return points;
}

}  // namespace oie
