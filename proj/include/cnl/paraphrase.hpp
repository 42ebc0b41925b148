// Rendering logic back into controlled English: schema-driven paraphrase of
// the knowledge base, feedback lines for accepted sentences, and answer
// sentences for wh-questions.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "cnl/ast.hpp"
#include "cnl/discourse.hpp"
#include "cnl/drs.hpp"
#include "cnl/kb.hpp"
#include "cnl/lexicon.hpp"
#include "cnl/logic.hpp"
#include "cnl/tokens.hpp"

namespace cnl {

// One argument position of a schema pattern literal.
struct SchemaArg {
  enum class Kind { kVar, kSlot, kSym, kNum };
  Kind kind = Kind::kVar;
  std::string name;  // variable or slot name
  std::string sym;
  long num = 0;
};

// A pattern literal; the predicate is either fixed or a grapheme slot such
// as <noun> whose binding must be a predicate of that lexical category.
struct SchemaLiteral {
  bool pred_is_slot = false;
  std::string pred;  // fixed predicate, or the slot name
  std::vector<SchemaArg> args;
};

// Template pieces: literal words, slot references rendered as graphemes,
// and the agreement article a/an.
struct TemplatePiece {
  enum class Kind { kWord, kSlot, kArticle };
  Kind kind = Kind::kWord;
  std::string text;  // word, or slot name
};

struct Schema {
  std::vector<SchemaLiteral> pattern;
  std::vector<TemplatePiece> pieces;
};

// Schemata are data: pattern lines, a => line, then the template line.
// Blocks are separated by blank lines; # starts a comment.
class SchemaSet {
 public:
  static SchemaSet parse_lines(const std::vector<std::string>& lines);
  static SchemaSet load(const std::string& path);

  const std::vector<Schema>& schemata() const { return schemata_; }
  bool empty() const { return schemata_.empty(); }

 private:
  std::vector<Schema> schemata_;
};

// The compiled-in schemata covering copula, naming and have sentences.
const std::vector<std::string>& default_schemata_lines();

struct ParaphraseResult {
  std::vector<std::string> sentences;  // schema renderings, schema order
  std::vector<std::string> leftovers;  // clauses no schema covered, rendered
};

// Matches each schema greedily against the stored facts. A match must use
// at least one fact not already rendered; rules and negative facts are
// never matched and appear under leftovers.
ParaphraseResult paraphrase_kb(const std::vector<Clause>& clauses,
                               const SchemaSet& schemata, const Lexicon& lex);

// The surface form of a predicate symbol: the lexicon entry's spelling when
// one exists, otherwise the symbol with underscores as spaces.
std::string grapheme(const std::string& pred, const Lexicon& lex);

// Restates an accepted sentence with resolved pronouns bracketed as their
// antecedents and skolemized indefinite articles as "[an individual]".
// Tokens outside brackets are kept exactly as written.
std::string feedback_sentence(const Sentence& sentence,
                              const std::vector<ResolutionNote>& notes,
                              const Drs& context,
                              const std::set<int>& individual_articles,
                              const Lexicon& lex);

// Renders a wh-answer: the question restated declaratively with the wh
// phrase replaced by the bracketed, comma-joined descriptions.
std::string answer_sentence(const Sentence& sentence, const SentenceAst& ast,
                            const std::vector<std::string>& descriptions);

// Describes a binding for answer output: named constants by their name,
// plain constants by their stored unary facts, skolem terms as the
// individual of their defining clause.
std::string describe_term(const Term& term, const KnowledgeBase& kb,
                          const Lexicon& lex);

}  // namespace cnl
