#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "oie/model.hpp"
#include "oie/text.hpp"

namespace oie::test {

inline Token tok(std::string text) {
  return Token{std::move(text), std::nullopt, false};
}

inline Token tok_at(std::string text, int index) {
  return Token{std::move(text), index, false};
}

inline Token tok_inf(std::string text) {
  return Token{std::move(text), std::nullopt, true};
}

inline Part part(Slot slot, std::vector<Token> tokens) {
  Part p;
  p.slot = slot;
  p.tokens = std::move(tokens);
  return p;
}

// Part whose tokens are the words of `text`, all plain (prediction-style).
inline Part word_part(Slot slot, const std::string& text) {
  Part p;
  p.slot = slot;
  for (auto& word : tokenize(text)) p.tokens.push_back(tok(std::move(word)));
  return p;
}

inline TupleRecord tuple3(const std::string& sentence_id,
                          const std::string& arg1, const std::string& rel,
                          const std::string& arg2 = "") {
  TupleRecord t;
  t.sentence_id = sentence_id;
  t.parts[Slot::arg1] = word_part(Slot::arg1, arg1);
  t.parts[Slot::rel] = word_part(Slot::rel, rel);
  if (!arg2.empty()) t.parts[Slot::arg2] = word_part(Slot::arg2, arg2);
  return t;
}

inline Sentence sentence(const std::string& id, const std::string& text) {
  Sentence s;
  s.doc_id = "T";
  s.sentence_id = id;
  s.text = text;
  s.tokens = tokenize(text);
  return s;
}

inline std::string data_path(const std::string& name) {
  return std::string(OIE_TEST_DATA_DIR) + "/" + name;
}

}  // namespace oie::test
