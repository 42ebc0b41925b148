#include "cnl/session.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "cnl/errors.hpp"
#include "cnl/inference.hpp"
#include "cnl/text_util.hpp"
#include "cnl/tokens.hpp"

namespace cnl {

const std::vector<std::string>& default_lexicon_lines() {
  static const std::vector<std::string> lines = {
      "# money dispenser vocabulary",
      "proper-noun|SimpleMat|SimpleMat|simplemat|gender=n",
      "noun|money dispenser|money dispenser|money_dispenser|gender=n",
      "noun|customer|customer|customer|gender=m,f",
      "noun|card|card|card|gender=n",
      "noun|user interface|user interface|user_interface|gender=n",
      "noun|personal code|personal code|personal_code|gender=n",
      "noun|check code|check code|check_code|gender=n",
      "noun|number|number|number|gender=n",
      "noun|trap-door-algorithm|trap-door-algorithm|trap_door_algorithm|gender=n",
      "noun|machine|machine|machine|gender=n",
      "noun|money|money|money|gender=n",
      "adjective|simple|simple|simple",
      "adjective|personal|personal|personal",
      "adjective|valid|valid|valid",
      "verb|have|have|have|verb_kind=state",
      "verb|enter|enter|enter|verb_kind=event",
      "verb|check|check|check|verb_kind=event",
      "verb|calculate|calculate|calculate|verb_kind=event",
      "verb|equal|equal|equal|verb_kind=state",
      "verb|accept|accept|accept|verb_kind=event",
      "verb|reject|reject|reject|verb_kind=event",
      "verb|dispense|dispense|dispense|verb_kind=event",
  };
  return lines;
}

// Scenario prompts and confirmations: scripted replies first, then the
// session's own input stream.
class SessionIo : public IoChannel {
 public:
  explicit SessionIo(Session& session) : session_(session) {}

  std::optional<std::string> prompt_read(const std::string& prompt) override {
    session_.out_ << prompt << "\n";
    if (!session_.replies_.empty()) {
      std::string reply = session_.replies_.front();
      session_.replies_.pop_front();
      session_.out_ << "> " << reply << "\n";
      return reply;
    }
    return session_.next_line(false);
  }

  std::optional<bool> confirm(const std::string& question) override {
    auto reply = prompt_read(question);
    if (!reply) return std::nullopt;
    std::string folded = to_lower(trim(*reply));
    return folded == "yes" || folded == "y" || folded == "true";
  }

  void emit(const std::string& line) override { session_.out_ << line << "\n"; }

 private:
  Session& session_;
};

Session::Session(Lexicon lexicon, SchemaSet schemata, SessionConfig config,
                 std::istream& in, std::ostream& out)
    : lexicon_(std::move(lexicon)),
      schemata_(std::move(schemata)),
      config_(config),
      in_(in),
      out_(out) {}

int Session::run() {
  while (!done_) {
    auto line = next_line(true);
    if (!line) break;
    handle_line(*line);
  }
  if (!config_.interactive)
    out_ << "# summary: accepted=" << accepted_ << " rejected=" << rejections_
         << " queries=" << queries_ << "\n";
  return rejections_ > 0 && !config_.lenient ? 1 : 0;
}

bool Session::handle_line(const std::string& line) {
  std::string text = trim(line);
  if (text.empty()) return !done_;
  if (text.front() == '#') return !done_;
  if (text.front() == ':')
    handle_command(text);
  else
    handle_text(text);
  return !done_;
}

void Session::push_replies(const std::vector<std::string>& replies) {
  for (const std::string& r : replies) replies_.push_back(r);
}

void Session::push_input(const std::string& line) {
  pushback_.push_back(line);
}

std::optional<std::string> Session::next_line(bool with_prompt) {
  if (!pushback_.empty()) {
    std::string line = pushback_.front();
    pushback_.pop_front();
    return line;
  }
  if (config_.interactive && with_prompt) out_ << "cnl> " << std::flush;
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  return line;
}

void Session::reject(const std::string& message) {
  ++rejections_;
  out_ << "rejected: " << message << "\n";
}

void Session::handle_command(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string word;
  while (in >> word) words.push_back(word);
  const std::string& cmd = words.front();

  try {
    if (building_ && cmd != ":end" && cmd != ":quit") {
      reject("finish the scenario with :end first");
      return;
    }
    if (cmd == ":quit") {
      done_ = true;
    } else if (cmd == ":kb") {
      auto clauses = kb_.clauses_for(words.size() > 1 ? words[1] : "");
      if (clauses.empty()) out_ << "% no clauses\n";
      for (const Clause* c : clauses) out_ << c->render() << "\n";
    } else if (cmd == ":drs") {
      std::string box = discourse_.context().render_box();
      out_ << box;
      if (box.empty() || box.back() != '\n') out_ << "\n";
    } else if (cmd == ":paraphrase") {
      auto para = paraphrase_kb(kb_.clauses(), schemata_, lexicon_);
      for (const std::string& s : para.sentences) out_ << s << "\n";
      for (const std::string& c : para.leftovers) out_ << c << "\n";
      if (para.sentences.empty() && para.leftovers.empty())
        out_ << "% nothing to say\n";
    } else if (cmd == ":lexicon") {
      if (words.size() > 1 && words[1] == "list") {
        for (const LexEntry* e : lexicon_.open_entries())
          out_ << Lexicon::render_entry_line(*e) << "\n";
      } else if (words.size() > 1 && words[1] == "add") {
        size_t at = line.find("add");
        std::string entry = trim(line.substr(at + 3));
        if (entry.empty()) {
          reject("usage: :lexicon add <category|surface|lemma|pred|...>");
          return;
        }
        lexicon_.add_entry(Lexicon::parse_entry_line(entry, 0));
        out_ << "added.\n";
      } else {
        reject("usage: :lexicon add <entry> | :lexicon list");
      }
    } else if (cmd == ":save") {
      if (words.size() < 2) {
        reject("usage: :save <path>");
        return;
      }
      kb_.save(words[1], discourse_.next_ref());
      out_ << "saved " << words[1] << "\n";
    } else if (cmd == ":load") {
      if (words.size() < 2) {
        reject("usage: :load <path>");
        return;
      }
      RefId next = kb_.load(words[1]);
      discourse_.restart(next);
      state_ = TranslationState{};
      scenarios_.clear();
      out_ << "loaded " << words[1] << "\n";
    } else if (cmd == ":depth") {
      int depth = words.size() > 1 ? std::atoi(words[1].c_str()) : 0;
      if (depth <= 0) {
        reject("usage: :depth <positive number>");
        return;
      }
      config_.depth = depth;
      out_ << "depth set to " << depth << "\n";
    } else if (cmd == ":interface") {
      // :interface pred/arity out-arg prompt words...
      if (words.size() < 4) {
        reject("usage: :interface <pred>/<arity> <out-arg> <prompt>");
        return;
      }
      size_t slash = words[1].find('/');
      if (slash == std::string::npos) {
        reject("usage: :interface <pred>/<arity> <out-arg> <prompt>");
        return;
      }
      Interface interface;
      interface.pred = words[1].substr(0, slash);
      interface.arity = std::atoi(words[1].substr(slash + 1).c_str());
      interface.output_arg = std::atoi(words[2].c_str()) - 1;
      std::string prompt;
      for (size_t i = 3; i < words.size(); ++i) {
        if (!prompt.empty()) prompt += ' ';
        prompt += words[i];
      }
      interface.prompt = prompt;
      interfaces_.add(interface);
      out_ << "interface " << interface.pred << "/" << interface.arity
           << " registered\n";
    } else if (cmd == ":scenario") {
      if (words.size() < 2) {
        reject("usage: :scenario <name>");
        return;
      }
      ScenarioDraft draft;
      draft.scenario.name = words[1];
      draft.discourse = discourse_;
      draft.state = state_;
      building_ = std::move(draft);
      out_ << "recording scenario " << words[1] << " (finish with :end)\n";
    } else if (cmd == ":end") {
      if (!building_) {
        reject(":end without :scenario");
        return;
      }
      Scenario scenario = std::move(building_->scenario);
      building_.reset();
      out_ << "scenario " << scenario.name << ": "
           << scenario.timeline.eventualities().size() << " eventualities\n";
      scenarios_[scenario.name] = std::move(scenario);
    } else if (cmd == ":run") {
      if (words.size() < 2) {
        reject("usage: :run <scenario>");
        return;
      }
      run_scenario(words[1]);
    } else {
      reject("unknown command " + cmd);
    }
  } catch (const Error& e) {
    reject(e.what());
  }
}

void Session::handle_text(const std::string& text) {
  std::vector<Sentence> sentences;
  try {
    sentences = tokenize(text);
  } catch (const EmptyInputError&) {
    return;
  }
  for (const Sentence& sentence : sentences) {
    int index = sentence_no_++;
    try {
      Discourse& discourse = building_ ? building_->discourse : discourse_;
      ParseOutcome outcome;
      for (int attempt = 0;; ++attempt) {
        try {
          outcome = parse_sentence(sentence, lexicon_, discourse.next_ref(),
                                   index);
          break;
        } catch (const UnknownWordError& e) {
          if (attempt >= 4 || !offer_lexicon_entry(e)) throw;
        }
      }
      auto choice = pick_reading(outcome);
      if (!choice) continue;
      const ParseResult& reading = outcome.readings[*choice];
      if (building_) {
        if (reading.mood != Mood::kAssertion) {
          reject("a scenario takes only assertions");
          continue;
        }
        do_scenario_sentence(sentence, reading);
      } else if (reading.mood == Mood::kAssertion) {
        do_assert(sentence, reading);
      } else {
        do_query(sentence, reading);
      }
    } catch (const Error& e) {
      reject(e.what());
    }
  }
}

bool Session::offer_lexicon_entry(const UnknownWordError& err) {
  if (config_.interactive)
    out_ << "unknown word '" << err.word
         << "'. lexicon entry (category|surface|lemma|pred, blank to skip)? "
         << std::flush;
  auto line = next_line(false);
  if (!line) return false;
  std::string text = trim(*line);
  if (text.find('|') == std::string::npos) {
    if (!text.empty()) pushback_.push_front(*line);
    return false;
  }
  lexicon_.add_entry(Lexicon::parse_entry_line(text, 0));
  out_ << "lexicon entry added\n";
  return true;
}

std::optional<size_t> Session::pick_reading(const ParseOutcome& outcome) {
  if (outcome.readings.empty()) {
    reject(outcome.failure ? outcome.failure->render() : "no parse");
    return std::nullopt;
  }
  if (outcome.readings.size() == 1) return 0;
  out_ << "ambiguous: " << outcome.readings.size() << " readings\n";
  for (size_t i = 0; i < outcome.readings.size(); ++i)
    out_ << "  " << (i + 1) << ". " << outcome.readings[i].ast.summary()
         << "\n";
  if (config_.interactive) out_ << "reading? " << std::flush;
  auto line = next_line(false);
  if (line) {
    std::string text = trim(*line);
    char* end = nullptr;
    long n = std::strtol(text.c_str(), &end, 10);
    if (!text.empty() && end && *end == '\0' && n >= 1 &&
        n <= static_cast<long>(outcome.readings.size()))
      return static_cast<size_t>(n - 1);
    pushback_.push_front(*line);
  }
  reject("ambiguous sentence: no reading chosen");
  return std::nullopt;
}

std::string Session::feedback_for(const Sentence& sentence,
                                  const ParseResult& reading,
                                  const ResolvedSentence& resolved,
                                  const AssertionTranslation& translation,
                                  const Drs& context) const {
  std::set<int> articles;
  for (RefId ref : translation.skolemized) {
    auto it = reading.indefinite_articles.find(ref);
    if (it != reading.indefinite_articles.end()) articles.insert(it->second);
  }
  return feedback_sentence(sentence, resolved.notes, context, articles,
                           lexicon_);
}

void Session::do_assert(const Sentence& sentence, const ParseResult& reading) {
  auto resolved = discourse_.resolve(reading, false);
  TranslationState scratch = state_;
  Provenance origin{render_sentence(sentence), sentence_no_};
  auto translation = translate_assertion(resolved.simplified, scratch, origin);
  auto report = kb_.assimilate(translation.clauses, translation.fresh_constants,
                               translation.fresh_skolems);
  if (report.outcome == AssimilationResult::Outcome::kInconsistent) {
    reject("inconsistent with the knowledge base: " + report.conflict);
    return;
  }
  if (report.outcome == AssimilationResult::Outcome::kRedundant) {
    // The sentence restates stored knowledge: constants minted for its new
    // individuals stand for the stored ones from here on.
    for (const auto& [minted, stored] : report.constant_map)
      for (auto& [ref, term] : scratch.bindings)
        if (term.kind() == Term::Kind::kInt && term.value() == minted)
          term = stored;
  }
  state_ = std::move(scratch);
  discourse_.accept(resolved, reading.next_ref_id);
  ++accepted_;
  out_ << feedback_for(sentence, reading, resolved, translation,
                       discourse_.context())
       << "\n";
  if (config_.trace) {
    for (const Clause& c : translation.clauses) out_ << "% " << c.render() << "\n";
    if (report.outcome == AssimilationResult::Outcome::kRedundant)
      out_ << "% already known\n";
  }
}

void Session::do_query(const Sentence& sentence, const ParseResult& reading) {
  ++queries_;
  auto resolved = discourse_.resolve(reading, true);
  std::map<RefId, Term> bindings = state_.bindings;
  for (const ResolutionNote& note : resolved.notes) {
    if (note.kind != Placeholder::Kind::kProper || !note.open) continue;
    // The discourse does not know the name; the stored base may.
    const Referent* r = find_referent(resolved.increment, note.from);
    std::string pred =
        r && !r->proper_name.empty() ? r->proper_name : to_lower(note.surface);
    auto constant = kb_.constant_for_name(pred);
    if (!constant) throw UnknownNameError(note.surface);
    bindings[note.from] = Term::integer(*constant);
  }
  auto query = translate_query(resolved.simplified, bindings, reading.wh_refs);
  if (config_.trace) {
    out_ << "% goals:";
    for (const Literal& goal : query.goals) out_ << " " << goal.render();
    out_ << "\n";
  }
  Solver solver(kb_, config_.depth);
  auto result = solver.solve(query.goals, 32);
  if (reading.mood == Mood::kWh) {
    std::vector<std::string> described;
    if (!query.wh_vars.empty())
      for (const Bindings& solution : result.solutions) {
        auto it = solution.find(query.wh_vars.front());
        if (it == solution.end()) continue;
        std::string d = describe_term(it->second, kb_, lexicon_);
        if (std::find(described.begin(), described.end(), d) ==
            described.end())
          described.push_back(d);
      }
    if (described.empty())
      out_ << (result.answer == Answer::kDepthExceeded
                   ? "unknown (depth limit)."
                   : "none.")
           << "\n";
    else
      out_ << answer_sentence(sentence, reading.ast, described) << "\n";
    return;
  }
  switch (result.answer) {
    case Answer::kYes:
      out_ << "yes.\n";
      break;
    case Answer::kNo:
      out_ << "no.\n";
      break;
    case Answer::kDepthExceeded:
      out_ << "unknown (depth limit).\n";
      break;
  }
}

void Session::do_scenario_sentence(const Sentence& sentence,
                                   const ParseResult& reading) {
  ScenarioDraft& draft = *building_;
  auto resolved = draft.discourse.resolve(reading, false);
  Provenance origin{render_sentence(sentence), sentence_no_};
  auto translation =
      translate_assertion(resolved.simplified, draft.state, origin);
  int max_group = 0;
  for (const EventualityRef& ev : reading.eventualities) {
    auto it = translation.event_literals.find(ev.tag);
    if (it == translation.event_literals.end()) continue;
    Eventuality e;
    e.is_event = ev.is_event;
    e.progressive = ev.progressive;
    e.core = it->second;
    e.group = draft.group_base + ev.seq_group;
    e.sentence = sentence_no_;
    draft.scenario.timeline.add(e);
    max_group = std::max(max_group, ev.seq_group);
  }
  draft.group_base += max_group + 1;
  for (const Clause& c : translation.clauses) {
    bool event_fact = false;
    for (const auto& [tag, lit] : translation.event_literals)
      if (c.is_fact() && c.head == lit) event_fact = true;
    if (!event_fact) draft.scenario.overlay.push_back(c);
  }
  draft.discourse.accept(resolved, reading.next_ref_id);
  ++accepted_;
  out_ << feedback_for(sentence, reading, resolved, translation,
                       draft.discourse.context())
       << "\n";
}

void Session::run_scenario(const std::string& name) {
  auto it = scenarios_.find(name);
  if (it == scenarios_.end()) {
    reject("no scenario named " + name);
    return;
  }
  SessionIo io(*this);
  Executor executor(kb_, interfaces_, io, config_.depth);
  auto trace = executor.run(it->second.timeline, it->second.overlay);
  for (const TraceStep& step : trace.steps) {
    const char* how = step.how == TraceStep::How::kInterface   ? "interface"
                      : step.how == TraceStep::How::kProved    ? "proved"
                      : step.how == TraceStep::How::kConfirmed ? "confirmed"
                                                               : "state";
    out_ << step.event << ". " << step.fact.render() << "  [" << how << "]\n";
  }
  if (config_.trace)
    for (const Literal& f : it->second.timeline.facts())
      out_ << "% " << f.render() << "\n";
}

}  // namespace cnl
