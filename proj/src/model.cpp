#include "oie/model.hpp"

#include <algorithm>

namespace oie {

namespace {
constexpr std::string_view kSlotNames[] = {"arg1", "rel", "arg2",
                                           "arg3", "arg4", "arg5"};
}

std::string_view slot_name(Slot slot) {
  return kSlotNames[static_cast<int>(slot)];
}

std::optional<Slot> slot_from_name(std::string_view name) {
  for (int i = 0; i < 6; ++i)
    if (name == kSlotNames[i]) return static_cast<Slot>(i);
  return std::nullopt;
}

const Part* TupleRecord::part(Slot slot) const {
  auto it = parts.find(slot);
  return it == parts.end() ? nullptr : &it->second;
}

const Sentence* GoldSet::find_sentence(std::string_view sentence_id) const {
  for (const auto& s : sentences)
    if (s.sentence_id == sentence_id) return &s;
  return nullptr;
}

std::vector<const TupleRecord*> GoldSet::tuples_for(
    std::string_view sentence_id) const {
  std::vector<const TupleRecord*> out;
  for (const auto& t : tuples)
    if (t.sentence_id == sentence_id) out.push_back(&t);
  return out;
}

std::vector<const TupleRecord*> PredictionSet::tuples_for(
    std::string_view sentence_id) const {
  std::vector<const TupleRecord*> out;
  for (const auto& t : tuples)
    if (t.sentence_id == sentence_id) out.push_back(&t);
  return out;
}

int tuple_length(const TupleRecord& t, bool include_inferred) {
  int n = 0;
  for (const auto& [slot, part] : t.parts)
    for (const auto& token : part.tokens)
      if (include_inferred || !token.inferred) ++n;
  return n;
}

std::vector<std::string> scored_bag(const Part& p, bool include_inferred) {
  std::vector<std::string> bag;
  bag.reserve(p.tokens.size());
  for (const auto& token : p.tokens)
    if (include_inferred || !token.inferred) bag.push_back(token.text);
  std::sort(bag.begin(), bag.end());
  return bag;
}

int bag_intersection_size(const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  int shared = 0;
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  return shared;
}

}  // namespace oie
