#include "lsc/tokenizer.hpp"

#include <algorithm>
#include <cctype>

namespace lsc {

namespace {

bool is_token_char(unsigned char c) {
  if (c >= 0x80) return true;  // keep multi-byte UTF-8 sequences intact
  return std::isalnum(c) || c == '\'';
}

bool is_sentence_end(unsigned char c) {
  return c == '.' || c == '!' || c == '?' || c == ';';
}

void strip_apostrophes(std::string& tok) {
  std::size_t begin = tok.find_first_not_of('\'');
  if (begin == std::string::npos) {
    tok.clear();
    return;
  }
  std::size_t end = tok.find_last_not_of('\'');
  tok = tok.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerOptions& options) {
  std::vector<std::string> out;
  bool negated = false;

  auto emit = [&](std::string tok, bool trigger) {
    if (!tok.empty()) {
      out.push_back(negated ? options.negation_prefix + tok : std::move(tok));
    }
    if (trigger) negated = true;
  };

  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    std::string tok = std::move(current);
    current.clear();
    strip_apostrophes(tok);
    if (tok.empty()) return;

    if (options.split_nt_suffix && tok.size() >= 3 &&
        tok.compare(tok.size() - 3, 3, "n't") == 0) {
      // "don't" -> emit "do", swallow the n't as a trigger
      emit(tok.substr(0, tok.size() - 3), /*trigger=*/true);
      return;
    }
    bool trigger =
        std::find(options.negation_triggers.begin(),
                  options.negation_triggers.end(),
                  tok) != options.negation_triggers.end();
    emit(std::move(tok), trigger);
  };

  for (unsigned char c : text) {
    if (is_token_char(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
      continue;
    }
    flush();
    if (is_sentence_end(c)) negated = false;
  }
  flush();
  return out;
}

}  // namespace lsc
