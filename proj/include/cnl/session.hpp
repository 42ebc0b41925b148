// One specification session: controlled sentences in, feedback, answers
// and simulation traces out. The same loop serves the interactive prompt
// and batch input.
#pragma once

#include <deque>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnl/discourse.hpp"
#include "cnl/errors.hpp"
#include "cnl/executor.hpp"
#include "cnl/kb.hpp"
#include "cnl/lexicon.hpp"
#include "cnl/paraphrase.hpp"
#include "cnl/parser.hpp"
#include "cnl/translator.hpp"

namespace cnl {

// The embedded vocabulary of the money dispenser domain.
const std::vector<std::string>& default_lexicon_lines();

struct SessionConfig {
  int depth = 64;
  bool interactive = false;  // print a prompt before reading a line
  bool trace = false;        // show clauses and timeline facts as they arise
  bool lenient = false;      // rejections are reported but exit 0
};

// A named scenario: the cast as overlay facts plus the event timeline.
struct Scenario {
  std::string name;
  Timeline timeline;
  std::vector<Clause> overlay;
};

class Session {
 public:
  Session(Lexicon lexicon, SchemaSet schemata, SessionConfig config,
          std::istream& in, std::ostream& out);

  // Reads and handles lines until :quit or end of input. Returns the exit
  // code: 1 when anything was rejected (0 under lenient), else 0.
  int run();

  // Handles one line; may read further lines (reading choices, scenario
  // replies). False after :quit.
  bool handle_line(const std::string& line);

  // Replies consumed by scenario runs before falling back to the stream.
  void push_replies(const std::vector<std::string>& replies);

  // Lines handled before any are read from the stream.
  void push_input(const std::string& line);

  KnowledgeBase& kb() { return kb_; }
  Discourse& discourse() { return discourse_; }
  Lexicon& lexicon() { return lexicon_; }
  InterfaceRegistry& interfaces() { return interfaces_; }
  SessionConfig& config() { return config_; }
  int rejections() const { return rejections_; }

 private:
  friend class SessionIo;

  struct ScenarioDraft {
    Scenario scenario;
    Discourse discourse;
    TranslationState state;
    int group_base = 0;
  };

  std::optional<std::string> next_line(bool with_prompt);
  void handle_command(const std::string& line);
  void handle_text(const std::string& text);
  // Reads one line as a lexicon entry for the unknown word. True when an
  // entry was added and the sentence should be parsed again; a line without
  // '|' is pushed back as ordinary input.
  bool offer_lexicon_entry(const UnknownWordError& err);
  // Index of the chosen reading, or nullopt after rejection.
  std::optional<size_t> pick_reading(const ParseOutcome& outcome);
  void do_assert(const Sentence& sentence, const ParseResult& reading);
  void do_query(const Sentence& sentence, const ParseResult& reading);
  void do_scenario_sentence(const Sentence& sentence,
                            const ParseResult& reading);
  void run_scenario(const std::string& name);
  void reject(const std::string& message);
  std::string feedback_for(const Sentence& sentence,
                           const ParseResult& reading,
                           const ResolvedSentence& resolved,
                           const AssertionTranslation& translation,
                           const Drs& context) const;

  Lexicon lexicon_;
  SchemaSet schemata_;
  SessionConfig config_;
  std::istream& in_;
  std::ostream& out_;
  std::deque<std::string> pushback_;
  std::deque<std::string> replies_;

  KnowledgeBase kb_;
  Discourse discourse_;
  TranslationState state_;
  InterfaceRegistry interfaces_;
  std::map<std::string, Scenario> scenarios_;
  std::optional<ScenarioDraft> building_;
  int sentence_no_ = 0;
  int accepted_ = 0;
  int queries_ = 0;
  int rejections_ = 0;
  bool done_ = false;
};

}  // namespace cnl
