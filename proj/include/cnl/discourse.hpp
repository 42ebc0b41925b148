// Discourse state: the accumulated context DRS and the resolution of
// pronouns, definite noun phrases and proper names against it.
#pragma once

#include <string>
#include <vector>

#include "cnl/drs.hpp"
#include "cnl/parser.hpp"

namespace cnl {

// What happened to one placeholder during resolution.
struct ResolutionNote {
  Placeholder::Kind kind = Placeholder::Kind::kPronoun;
  RefId from = 0;
  RefId to = 0;            // antecedent, 0 when none
  std::string surface;
  int token = 0;           // head token of the resolved phrase
  bool created = false;    // proper name new to the discourse
  bool unique = false;     // definite opening a unique reference
  bool open = false;       // query-mode definite or name left unresolved
};

struct ResolvedSentence {
  Drs increment;     // resolved, equalities appended, not yet simplified
  Drs simplified;    // simplify(increment); the form handed to translation
  std::vector<ResolutionNote> notes;
};

class Discourse {
 public:
  const Drs& context() const { return context_; }
  RefId next_ref() const { return next_ref_; }

  bool empty() const { return context_.empty(); }
  void clear();

  // Empties the context and resumes numbering at `next_ref`; used when a
  // stored knowledge base is loaded without its discourse.
  void restart(RefId next_ref);

  // Resolves a reading's placeholders against the context. Assertion mode
  // raises UnresolvedPronounError when a pronoun has no antecedent; query
  // mode additionally leaves unmatched definites and names open instead of
  // creating unique references. The context itself is never changed here.
  ResolvedSentence resolve(const ParseResult& reading, bool query) const;

  // Merges an accepted sentence into the context and advances the referent
  // counter. Only assertions are accepted; queries never reach this point.
  void accept(const ResolvedSentence& resolved, RefId next_ref);

  // Top-level referent carrying the proper name, or nullptr.
  const Referent* named_referent(const std::string& name) const;

 private:
  Drs context_;
  RefId next_ref_ = 1;
};

}  // namespace cnl
