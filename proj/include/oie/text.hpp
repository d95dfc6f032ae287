#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oie {

// Identifier of the tokenization + normalization ruleset. Reports embed it:
// scores are only comparable across identical preprocessing.
inline constexpr std::string_view kNormalizationId = "icu-nfc-foldcase-punct.v1";

// Unicode canonical composition (NFC) followed by full case folding.
std::string normalize(std::string_view text);

// Whitespace split with leading/trailing punctuation peeled off into
// standalone tokens; every token comes out normalized. Idempotent on its own
// output joined by single spaces.
std::vector<std::string> tokenize(std::string_view text);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace oie
