// Error types shared across the pipeline.
#pragma once

#include <stdexcept>
#include <string>

namespace cnl {

// Base for all errors raised by the library. The CLI renders these as
// one-line messages and keeps the session alive.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("empty input") {}
};

class UnknownWordError : public Error {
 public:
  UnknownWordError(std::string word, int sentence, int token)
      : Error("unknown word '" + word + "' at sentence " +
              std::to_string(sentence) + ", token " + std::to_string(token)),
        word(std::move(word)),
        sentence(sentence),
        token(token) {}
  std::string word;
  int sentence;  // 1-based
  int token;     // 1-based
};

class LexiconFormatError : public Error {
 public:
  LexiconFormatError(int line, const std::string& detail)
      : Error("lexicon format error at line " + std::to_string(line) + ": " +
              detail),
        line(line) {}
  int line;
};

class DuplicateEntryError : public Error {
 public:
  DuplicateEntryError(const std::string& surface, const std::string& category)
      : Error("duplicate lexicon entry for '" + surface + "' (" + category +
              ") with different features") {}
};

class DuplicateReferentError : public Error {
 public:
  explicit DuplicateReferentError(int id)
      : Error("referent X" + std::to_string(id) +
              " declared in both operands of merge") {}
};

class UnresolvedPronounError : public Error {
 public:
  UnresolvedPronounError(std::string surface, int sentence, int token)
      : Error("no accessible antecedent for pronoun '" + surface +
              "' at sentence " + std::to_string(sentence) + ", token " +
              std::to_string(token)),
        surface(std::move(surface)),
        sentence(sentence),
        token(token) {}
  std::string surface;
  int sentence;
  int token;
};

class UnsupportedDrsError : public Error {
 public:
  explicit UnsupportedDrsError(const std::string& shape)
      : Error("unsupported structure: " + shape) {}
};

class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(const std::string& name)
      : Error("unknown name '" + name + "': no such individual in the discourse"),
        name(name) {}
  std::string name;
};

class KbFormatError : public Error {
 public:
  KbFormatError(int line, const std::string& detail)
      : Error("knowledge base format error at line " + std::to_string(line) +
              ": " + detail),
        line(line) {}
  int line;
};

class InstantiationError : public Error {
 public:
  explicit InstantiationError(const std::string& goal)
      : Error("arguments insufficiently instantiated in " + goal) {}
};

class TypeError : public Error {
 public:
  explicit TypeError(const std::string& goal)
      : Error("non-numeric argument in " + goal) {}
};

class DuplicateInterfaceError : public Error {
 public:
  DuplicateInterfaceError(const std::string& pred, int arity)
      : Error("interface already registered for " + pred + "/" +
              std::to_string(arity)) {}
};

class CyclicTimelineError : public Error {
 public:
  CyclicTimelineError() : Error("timeline ordering is cyclic") {}
};

class ExecutionStuckError : public Error {
 public:
  ExecutionStuckError(const std::string& event, const std::string& goal)
      : Error("execution stuck at " + event + ": cannot establish " + goal) {}
};

}  // namespace cnl
