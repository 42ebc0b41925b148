// Tokenizer: whitespace words, sentence terminators, hyphenated compounds.
#pragma once

#include <string>
#include <vector>

namespace cnl {

enum class TokenKind { kWord, kNumber, kPunct };

struct Token {
  std::string text;   // original spelling, case preserved
  std::string lower;  // folded form used for lookup
  TokenKind kind = TokenKind::kWord;
  int sentence = 0;   // 0-based; rendered 1-based in messages
  int index = 0;      // 0-based position within the sentence
};

using Sentence = std::vector<Token>;

// Splits the input into sentences on '.' and '?', which become punct tokens.
// Hyphenated words stay whole. Raises EmptyInputError when no token is found.
std::vector<Sentence> tokenize(const std::string& text);

// The words of a sentence as rendered text (terminator attached, single
// spaces elsewhere).
std::string render_sentence(const Sentence& sentence);

}  // namespace cnl
