#pragma once

#include <optional>
#include <vector>

#include "oie/model.hpp"

namespace oie {

struct MunchkinConfig {
  // Cap on emitted tuples per sentence; unset means all splits.
  std::optional<int> max_tuples_per_sentence;
};

// The trivial adversarial extractor: for a sentence w0 .. w_{N-1} it emits
// (w0 ; w1..w_{k-1} ; w_k..w_{N-1}) for every split point k in [2, N-1],
// with strictly decreasing confidence 1 - (k-2)/(N-1). Sentences shorter
// than 3 tokens yield nothing.
std::vector<TupleRecord> munchkin_extract(const Sentence& s,
                                          const MunchkinConfig& config = {});

PredictionSet munchkin_predictions(const GoldSet& gold,
                                   const MunchkinConfig& config = {});

}  // namespace oie
