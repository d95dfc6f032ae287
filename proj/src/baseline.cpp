#include "oie/baseline.hpp"

#include <stdexcept>

namespace oie {

namespace {

Part make_part(Slot slot, const std::vector<std::string>& words, int begin,
               int end) {
  Part part;
  part.slot = slot;
  for (int i = begin; i < end; ++i)
    part.tokens.push_back(Token{words[i], std::nullopt, false});
  return part;
}

}  // namespace

std::vector<TupleRecord> munchkin_extract(const Sentence& s,
                                          const MunchkinConfig& config) {
  if (config.max_tuples_per_sentence && *config.max_tuples_per_sentence < 1)
    throw std::invalid_argument("max_tuples_per_sentence must be >= 1");

  const auto& words = s.tokens;
  const int n = static_cast<int>(words.size());
  std::vector<TupleRecord> out;
  if (n < 3) return out;

  for (int k = 2; k <= n - 1; ++k) {
    if (config.max_tuples_per_sentence &&
        static_cast<int>(out.size()) >= *config.max_tuples_per_sentence)
      break;
    TupleRecord t;
    t.sentence_id = s.sentence_id;
    t.confidence = 1.0 - static_cast<double>(k - 2) / (n - 1);
    t.parts[Slot::arg1] = make_part(Slot::arg1, words, 0, 1);
    t.parts[Slot::rel] = make_part(Slot::rel, words, 1, k);
    t.parts[Slot::arg2] = make_part(Slot::arg2, words, k, n);
    out.push_back(std::move(t));
  }
  return out;
}

PredictionSet munchkin_predictions(const GoldSet& gold,
                                   const MunchkinConfig& config) {
  PredictionSet preds;
  preds.system_name = "munchkin";
  for (const auto& sentence : gold.sentences) {
    auto tuples = munchkin_extract(sentence, config);
    for (auto& t : tuples) preds.tuples.push_back(std::move(t));
  }
  return preds;
}

}  // namespace oie
