#include "cnl/tokens.hpp"

#include <cctype>

#include "cnl/errors.hpp"
#include "cnl/text_util.hpp"

namespace cnl {
namespace {

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::vector<Sentence> tokenize(const std::string& text) {
  std::vector<Sentence> sentences;
  Sentence current;
  auto push_word = [&](const std::string& w) {
    Token t;
    t.text = w;
    t.lower = to_lower(w);
    t.kind = all_digits(w) ? TokenKind::kNumber : TokenKind::kWord;
    t.sentence = static_cast<int>(sentences.size());
    t.index = static_cast<int>(current.size());
    current.push_back(std::move(t));
  };
  auto push_punct = [&](char c) {
    Token t;
    t.text = std::string(1, c);
    t.lower = t.text;
    t.kind = TokenKind::kPunct;
    t.sentence = static_cast<int>(sentences.size());
    t.index = static_cast<int>(current.size());
    current.push_back(std::move(t));
  };

  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (word_char(c)) {
      size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      push_word(text.substr(i, j - i));
      i = j;
      continue;
    }
    if (c == '.' || c == '?') {
      push_punct(c);
      sentences.push_back(std::move(current));
      current.clear();
      ++i;
      continue;
    }
    // Other punctuation becomes a token the grammar will reject in place.
    push_punct(c);
    ++i;
  }
  if (!current.empty()) sentences.push_back(std::move(current));

  bool any = false;
  for (const auto& s : sentences)
    if (!s.empty()) any = true;
  if (!any) throw EmptyInputError();
  return sentences;
}

std::string render_sentence(const Sentence& sentence) {
  std::string out;
  for (const auto& t : sentence) {
    if (!out.empty() && t.kind != TokenKind::kPunct) out += ' ';
    out += t.text;
  }
  return out;
}

}  // namespace cnl
