#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cnl/feature_structure.hpp"
#include "cnl/lexicon.hpp"
#include "cnl/tokens.hpp"

namespace cnl {

enum class Connective { kNone, kAnd, kOr };

struct RelClause;

// One finite or base occurrence of a verb in the token stream.
struct VerbUse {
  const LexEntry* verb = nullptr;
  bool third_sg = false;
  int token = 0;
};

struct NounPhrase {
  enum class Kind { kProper, kPronoun, kQuant, kWh, kNumber };

  Kind kind = Kind::kQuant;
  const LexEntry* head = nullptr;
  bool head_plural = false;
  const LexEntry* det = nullptr;
  std::vector<const LexEntry*> adjectives;
  std::shared_ptr<RelClause> relative;
  long number_value = 0;
  int first_token = 0;
  int last_token = 0;
  int head_token = 0;
  FeatureStructure agreement;
};

struct VerbPhrase {
  enum class Kind {
    kCopulaNominal,
    kCopulaAdjective,
    kCopulaComparative,
    kProgressive,
    kVerb,
  };

  Kind kind = Kind::kVerb;
  bool negated = false;
  VerbUse verb;
  std::shared_ptr<NounPhrase> object;
  const LexEntry* adjective = nullptr;
  const LexEntry* comparative = nullptr;
};

// Coordinated verb phrases sharing one subject. sequenced[i] marks an
// "and then" boundary before item i.
struct VpList {
  std::vector<VerbPhrase> items;
  Connective conn = Connective::kNone;
  std::vector<bool> sequenced;
};

// Restrictive relative clause. Subject gap: "that enters a card" keeps the
// verb phrases in vps. Object gap: "that the customer enters" holds the
// inner subject, the verb whose object is gapped, and any further verb
// phrases coordinated onto the inner subject.
struct RelClause {
  const LexEntry* relpron = nullptr;
  bool subject_gap = true;
  VpList vps;
  std::shared_ptr<NounPhrase> inner_subject;
  VerbUse gap_verb;
  VpList inner_extra;
};

struct ClauseAst {
  std::shared_ptr<NounPhrase> subject;
  VpList vps;
};

// Coordinated clauses. sequenced[i] marks an "and then" boundary before
// item i; only meaningful when conn is kAnd.
struct ClauseSeq {
  std::vector<ClauseAst> items;
  Connective conn = Connective::kNone;
  std::vector<bool> sequenced;
};

struct SentenceAst {
  enum class Kind { kDeclarative, kConditional, kYesNo, kWh };

  Kind kind = Kind::kDeclarative;
  ClauseSeq main;
  ClauseSeq antecedent;
  ClauseSeq consequent;
  bool wh_object = false;

  // Category-labelled s-expression of the full analysis.
  std::string render_tree() const;
  // One-line bracketed restatement used to tell readings apart.
  std::string summary() const;
};

}  // namespace cnl
