#include "oie/iaa.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oie {

namespace {

GridClass class_of(Slot slot) {
  switch (slot) {
    case Slot::arg1:
      return GridClass::subject;
    case Slot::rel:
      return GridClass::relation;
    case Slot::arg2:
      return GridClass::object;
    default:
      return GridClass::complement;
  }
}

std::pair<int, double> sentence_pair(const TokenGrid& a, const TokenGrid& b) {
  return {a.token_count(), grid_agreement(a, b)};
}

}  // namespace

TokenGrid token_grid(const GoldSet& annotation, const Sentence& s) {
  TokenGrid grid;
  grid.sentence_id = s.sentence_id;
  grid.cells.assign(s.tokens.size(), {});

  for (const TupleRecord* tuple : annotation.tuples_for(s.sentence_id)) {
    for (const auto& [slot, part] : tuple->parts) {
      const int column = static_cast<int>(class_of(slot));
      for (const auto& token : part.tokens) {
        if (!token.index) continue;  // inferred tokens have no row
        const int row = *token.index;
        if (row < 0 || row >= grid.token_count())
          throw std::invalid_argument("token index outside sentence '" +
                                      s.sentence_id + "'");
        grid.cells[row][column] = true;
      }
    }
  }
  return grid;
}

double grid_agreement(const TokenGrid& a, const TokenGrid& b) {
  if (a.token_count() != b.token_count())
    throw std::invalid_argument("grid dimensions differ for sentence '" +
                                a.sentence_id + "'");
  const int cells = a.token_count() * kGridClasses;
  if (cells == 0) return 100.0;

  int equal = 0;
  for (int row = 0; row < a.token_count(); ++row)
    for (int col = 0; col < kGridClasses; ++col)
      if (a.cells[row][col] == b.cells[row][col]) ++equal;
  return 100.0 * equal / cells;
}

double corpus_agreement(std::span<const std::pair<int, double>> per_sentence) {
  if (per_sentence.empty())
    throw std::invalid_argument("corpus_agreement over an empty list");
  double weighted = 0.0;
  long long tokens = 0;
  for (const auto& [count, agreement] : per_sentence) {
    weighted += static_cast<double>(count) * agreement;
    tokens += count;
  }
  if (tokens == 0) return 100.0;
  return weighted / tokens;
}

IaaReport iaa_report(const GoldSet& a, const GoldSet& b,
                     const GoldSet* reference) {
  auto ids = [](const GoldSet& set) {
    std::set<std::string> out;
    for (const auto& s : set.sentences) out.insert(s.sentence_id);
    return out;
  };
  if (ids(a) != ids(b))
    throw std::invalid_argument("annotations cover different sentences");
  if (reference && ids(*reference) != ids(a))
    throw std::invalid_argument("reference covers different sentences");

  IaaReport report;
  std::vector<std::pair<int, double>> ab;
  std::vector<std::pair<int, double>> ar;
  std::vector<std::pair<int, double>> br;

  for (const auto& sentence : a.sentences) {
    const Sentence* other = b.find_sentence(sentence.sentence_id);
    if (other->tokens != sentence.tokens)
      throw std::invalid_argument("sentence '" + sentence.sentence_id +
                                  "' tokenizes differently across annotations");

    const TokenGrid grid_a = token_grid(a, sentence);
    const TokenGrid grid_b = token_grid(b, sentence);

    IaaRow row;
    row.sentence_id = sentence.sentence_id;
    row.tokens = static_cast<int>(sentence.tokens.size());
    row.a_b = grid_agreement(grid_a, grid_b);
    ab.push_back(sentence_pair(grid_a, grid_b));

    if (reference) {
      const Sentence* ref_sentence =
          reference->find_sentence(sentence.sentence_id);
      if (ref_sentence->tokens != sentence.tokens)
        throw std::invalid_argument("sentence '" + sentence.sentence_id +
                                    "' tokenizes differently in the reference");
      const TokenGrid grid_r = token_grid(*reference, sentence);
      row.a_ref = grid_agreement(grid_a, grid_r);
      row.b_ref = grid_agreement(grid_b, grid_r);
      ar.emplace_back(row.tokens, *row.a_ref);
      br.emplace_back(row.tokens, *row.b_ref);
    }
    report.rows.push_back(std::move(row));
  }

  report.avg_a_b = corpus_agreement(ab);
  if (reference) {
    report.avg_a_ref = corpus_agreement(ar);
    report.avg_b_ref = corpus_agreement(br);
  }
  return report;
}

}  // namespace oie
