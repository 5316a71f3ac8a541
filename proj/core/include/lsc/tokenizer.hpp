#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lsc {

// Unigram tokenizer with negation scoping:
//   - tokens are maximal runs of [a-z0-9'] after ASCII lowercasing
//     (bytes >= 0x80 are kept, so UTF-8 words survive untouched);
//   - punctuation never becomes a token;
//   - after a negation trigger every following token gets a "NOT_" prefix
//     until the next sentence-ending punctuation (. ! ? ;);
//   - "don't"-style contractions split: the stem is emitted, the n't part
//     acts as a trigger and is dropped.
struct TokenizerOptions {
  std::vector<std::string> negation_triggers = {"not", "no", "never"};
  bool split_nt_suffix = true;
  std::string negation_prefix = "NOT_";
};

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerOptions& options = {});

}  // namespace lsc
