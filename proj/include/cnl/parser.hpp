// Sentence parser: recursive descent over the token stream, returning every
// grammatical reading together with its discourse representation increment.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnl/ast.hpp"
#include "cnl/drs.hpp"
#include "cnl/lexicon.hpp"
#include "cnl/tokens.hpp"

namespace cnl {

enum class Mood { kAssertion, kYesNo, kWh };

// A not-yet-resolved anaphoric element: a pronoun, a definite noun phrase,
// or a proper name. `path` locates the sub-DRS whose accessible referents
// are the candidate antecedents.
struct Placeholder {
  enum class Kind { kPronoun, kDefinite, kProper };

  Kind kind = Kind::kPronoun;
  RefId ref = 0;
  std::string surface;     // as written
  std::string noun_pred;   // head noun predicate (definites), name (propers)
  std::vector<Gender> gender;
  std::optional<NumberFeature> number;
  DrsPath path;
  int token = 0;           // 0-based head word position
  int det_token = -1;      // 0-based article position, -1 when bare
};

// Eventuality metadata for one tagged condition: events move time forward,
// progressive states overlap it. seq_group orders "and then" stages within
// the sentence.
struct EventualityRef {
  std::string pred;
  bool is_event = true;
  bool progressive = false;
  int seq_group = 0;
  int tag = 0;
};

struct ParseFailure {
  int sentence = 0;            // 0-based
  int token = 0;               // 0-based position of the furthest failure
  std::string got;             // token text there, empty at end of input
  std::vector<std::string> expected;

  // "sentence 2, token 3 ('the'): expected ..." with 1-based numbers.
  std::string render() const;
};

// One grammatical reading of a sentence.
struct ParseResult {
  SentenceAst ast;
  Drs drs;                     // unresolved increment
  Mood mood = Mood::kAssertion;
  std::vector<Placeholder> placeholders;
  // referent -> 0-based token of the introducing indefinite article
  std::map<RefId, int> indefinite_articles;
  std::vector<EventualityRef> eventualities;
  std::vector<RefId> wh_refs;
  RefId next_ref_id = 1;
};

struct ParseOutcome {
  std::vector<ParseResult> readings;        // empty on failure
  std::optional<ParseFailure> failure;      // set when readings is empty
};

// Parses one sentence. Referents are numbered from `first_ref` upwards.
// Raises UnknownWordError for words outside the lexicon; grammar failures
// are reported through ParseOutcome::failure instead.
ParseOutcome parse_sentence(const Sentence& sentence, const Lexicon& lexicon,
                            RefId first_ref, int sentence_index);

// The base event verb behind a progressive form ("checking" -> check),
// trying bare and e-dropped stems. Nullptr when no entry fits.
const LexEntry* progressive_base(const Lexicon& lexicon,
                                 const std::string& lower);

}  // namespace cnl
