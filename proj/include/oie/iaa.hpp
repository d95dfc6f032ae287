#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oie/model.hpp"

namespace oie {

// Token classes of the agreement grid: arg1 tokens mark subject, rel tokens
// relation, arg2 tokens object, arg3..arg5 tokens complement.
inline constexpr int kGridClasses = 4;
enum class GridClass { subject = 0, relation = 1, object = 2, complement = 3 };

// Per-sentence binary labelling grid: one row per sentence token, one column
// per class. A cell is set when the token plays that role in any tuple of
// the annotation (union across tuples). Inferred tokens have no row.
struct TokenGrid {
  std::string sentence_id;
  std::vector<std::array<bool, kGridClasses>> cells;

  int token_count() const { return static_cast<int>(cells.size()); }
};

TokenGrid token_grid(const GoldSet& annotation, const Sentence& s);

// Percentage of cells on which the two grids agree; grids must have the
// same dimensions.
double grid_agreement(const TokenGrid& a, const TokenGrid& b);

// Token-count-weighted mean of per-sentence agreement percentages.
double corpus_agreement(std::span<const std::pair<int, double>> per_sentence);

struct IaaRow {
  std::string sentence_id;
  int tokens = 0;
  double a_b = 0.0;
  std::optional<double> a_ref;
  std::optional<double> b_ref;
};

struct IaaReport {
  std::vector<IaaRow> rows;
  double avg_a_b = 0.0;
  std::optional<double> avg_a_ref;
  std::optional<double> avg_b_ref;
};

// Pairwise agreement of two annotations over the same sentences, plus each
// against a merged reference when one is supplied. Annotations must cover
// identical sentences with identical tokenization.
IaaReport iaa_report(const GoldSet& a, const GoldSet& b,
                     const GoldSet* reference = nullptr);

}  // namespace oie
