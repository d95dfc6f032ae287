#include "oie/text.hpp"

#include <stdexcept>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace oie {

namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* instance = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || instance == nullptr)
    throw std::runtime_error("ICU NFC normalizer unavailable");
  return *instance;
}

bool is_ascii_punct(UChar32 c) {
  return (c >= 0x21 && c <= 0x2f) || (c >= 0x3a && c <= 0x40) ||
         (c >= 0x5b && c <= 0x60) || (c >= 0x7b && c <= 0x7e);
}

bool is_punct(UChar32 c) {
  return c < 0x80 ? is_ascii_punct(c) : u_ispunct(c) != 0;
}

std::string to_utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::string codepoint_utf8(UChar32 c) {
  return to_utf8(icu::UnicodeString(c));
}

}  // namespace

std::string normalize(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString raw = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString composed = nfc_instance().normalize(raw, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");
  composed.foldCase();
  return to_utf8(composed);
}

std::vector<std::string> tokenize(std::string_view text) {
  const std::string norm = normalize(text);
  const icu::UnicodeString s = icu::UnicodeString::fromUTF8(norm);

  std::vector<std::string> tokens;
  std::vector<UChar32> chunk;

  auto flush = [&]() {
    if (chunk.empty()) return;
    size_t lo = 0;
    size_t hi = chunk.size();
    while (lo < hi && is_punct(chunk[lo])) {
      tokens.push_back(codepoint_utf8(chunk[lo]));
      ++lo;
    }
    std::vector<UChar32> trailing;
    while (hi > lo && is_punct(chunk[hi - 1])) {
      trailing.push_back(chunk[hi - 1]);
      --hi;
    }
    if (hi > lo) {
      icu::UnicodeString word;
      for (size_t i = lo; i < hi; ++i) word.append(chunk[i]);
      tokens.push_back(to_utf8(word));
    }
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it)
      tokens.push_back(codepoint_utf8(*it));
    chunk.clear();
  };

  for (int32_t i = 0; i < s.length();) {
    const UChar32 c = s.char32At(i);
    if (u_isUWhiteSpace(c))
      flush();
    else
      chunk.push_back(c);
    i += U16_LENGTH(c);
  }
  flush();
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace oie
