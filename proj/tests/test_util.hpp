// Shared helpers: the embedded vocabulary, one-call parsing, and a minimal
// assert/query pipeline used by suites that exercise translation and proof.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnl/discourse.hpp"
#include "cnl/inference.hpp"
#include "cnl/kb.hpp"
#include "cnl/lexicon.hpp"
#include "cnl/parser.hpp"
#include "cnl/session.hpp"
#include "cnl/tokens.hpp"
#include "cnl/translator.hpp"

namespace cnl::testing {

inline Lexicon atm_lexicon() {
  Lexicon lex;
  lex.load_lines(default_lexicon_lines());
  return lex;
}

// Parses a single sentence and requires exactly one reading.
inline ParseResult parse_one(const Lexicon& lex, const std::string& text,
                             RefId first_ref = 1, int sentence_index = 0) {
  auto sentences = tokenize(text);
  if (sentences.size() != 1)
    throw std::runtime_error("expected one sentence: " + text);
  auto outcome = parse_sentence(sentences[0], lex, first_ref, sentence_index);
  if (outcome.readings.empty())
    throw std::runtime_error("no parse for: " + text + " (" +
                             outcome.failure->render() + ")");
  if (outcome.readings.size() != 1)
    throw std::runtime_error("ambiguous: " + text);
  return std::move(outcome.readings[0]);
}

// Parse -> resolve -> translate -> assimilate, without any dialog I/O.
struct Pipeline {
  Lexicon lex = atm_lexicon();
  Discourse discourse;
  TranslationState state;
  KnowledgeBase kb;
  int sentence_no = 0;

  AssimilationResult assert_text(const std::string& text) {
    ParseResult reading =
        parse_one(lex, text, discourse.next_ref(), sentence_no++);
    ResolvedSentence resolved = discourse.resolve(reading, false);
    TranslationState scratch = state;
    Provenance origin{text, sentence_no};
    auto translation =
        translate_assertion(resolved.simplified, scratch, origin);
    auto report = kb.assimilate(translation.clauses,
                                translation.fresh_constants,
                                translation.fresh_skolems);
    if (report.outcome == AssimilationResult::Outcome::kInconsistent)
      return report;
    if (report.outcome == AssimilationResult::Outcome::kRedundant)
      for (const auto& [minted, stored] : report.constant_map)
        for (auto& [ref, term] : scratch.bindings)
          if (term.kind() == Term::Kind::kInt && term.value() == minted)
            term = stored;
    state = std::move(scratch);
    discourse.accept(resolved, reading.next_ref_id);
    return report;
  }

  // Translation of one sentence without assimilating it.
  AssertionTranslation translate_only(const std::string& text) {
    ParseResult reading =
        parse_one(lex, text, discourse.next_ref(), sentence_no);
    ResolvedSentence resolved = discourse.resolve(reading, false);
    TranslationState scratch = state;
    return translate_assertion(resolved.simplified, scratch,
                               Provenance{text, sentence_no + 1});
  }

  SolveResult query_text(const std::string& text, int depth = 64) {
    ParseResult reading =
        parse_one(lex, text, discourse.next_ref(), sentence_no++);
    ResolvedSentence resolved = discourse.resolve(reading, true);
    std::map<RefId, Term> bindings = state.bindings;
    for (const ResolutionNote& note : resolved.notes) {
      if (note.kind != Placeholder::Kind::kProper || !note.open) continue;
      const Referent* r = find_referent(resolved.increment, note.from);
      std::string pred =
          r && !r->proper_name.empty() ? r->proper_name : note.surface;
      auto constant = kb.constant_for_name(pred);
      if (constant) bindings[note.from] = Term::integer(*constant);
    }
    auto query =
        translate_query(resolved.simplified, bindings, reading.wh_refs);
    return Solver(kb, depth).solve(query.goals, 32);
  }

  std::vector<std::string> kb_lines() const {
    std::vector<std::string> out;
    for (const Clause& c : kb.clauses()) out.push_back(c.render());
    return out;
  }
};

// The six specification sentences of the money dispenser example.
inline std::vector<std::string> atm_sentences() {
  return {
      "SimpleMat is a simple money dispenser.",
      "It has a user interface.",
      "Every customer has a card.",
      "Every customer has a personal code.",
      "If the trap-door-algorithm calculates a number then the number equals "
      "the check code.",
      "If a customer enters a card then SimpleMat checks the card.",
  };
}

}  // namespace cnl::testing
