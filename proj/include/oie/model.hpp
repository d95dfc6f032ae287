#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oie {

// Part slots in scoring order: first argument, relation, then arguments 2-5.
enum class Slot { arg1 = 0, rel = 1, arg2 = 2, arg3 = 3, arg4 = 4, arg5 = 5 };

std::string_view slot_name(Slot slot);
std::optional<Slot> slot_from_name(std::string_view name);

// One word of a tuple part. Gold tokens either carry their position in the
// source sentence or are marked inferred (reworded / added by annotators).
// Prediction tokens carry neither: no index, not inferred.
struct Token {
  std::string text;  // normalized
  std::optional<int32_t> index;
  bool inferred = false;

  bool operator==(const Token&) const = default;
};

struct Part {
  Slot slot = Slot::arg1;
  std::vector<Token> tokens;
  std::optional<std::string> resolved_text;  // coreference-resolved span, gold only

  bool operator==(const Part&) const = default;
};

// One relational fact: (arg1 ; rel ; arg2 ; ... ; arg5), at most six parts.
struct TupleRecord {
  std::string sentence_id;
  std::map<Slot, Part> parts;
  bool attributed = false;
  std::optional<double> confidence;  // predictions only

  const Part* part(Slot slot) const;

  bool operator==(const TupleRecord&) const = default;
};

struct Sentence {
  std::string doc_id;
  std::string sentence_id;
  std::string text;
  std::vector<std::string> tokens;  // tokenize(text)

  bool operator==(const Sentence&) const = default;
};

struct GoldSet {
  std::vector<Sentence> sentences;
  std::vector<TupleRecord> tuples;  // file order

  const Sentence* find_sentence(std::string_view sentence_id) const;
  std::vector<const TupleRecord*> tuples_for(std::string_view sentence_id) const;

  bool operator==(const GoldSet&) const = default;
};

struct PredictionSet {
  std::string system_name;
  std::vector<TupleRecord> tuples;  // file order

  std::vector<const TupleRecord*> tuples_for(std::string_view sentence_id) const;

  bool operator==(const PredictionSet&) const = default;
};

// Number of tokens over all parts. Inferred tokens count only when
// include_inferred is set; prediction tokens are never inferred, so for
// predicted tuples every token counts under either flag.
int tuple_length(const TupleRecord& t, bool include_inferred);

// The part's words as a multiset, represented as a sorted vector.
std::vector<std::string> scored_bag(const Part& p, bool include_inferred);

// Multiset intersection size of two sorted bags.
int bag_intersection_size(const std::vector<std::string>& a,
                          const std::vector<std::string>& b);

}  // namespace oie
