#include "cnl/paraphrase.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "cnl/errors.hpp"
#include "cnl/text_util.hpp"

namespace cnl {

namespace {

// Slot names carry a lexical category plus an optional distinguishing
// number: <noun2> is a second, independent noun slot.
std::optional<Category> slot_category(const std::string& slot) {
  std::string base = slot;
  while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back())))
    base.pop_back();
  while (!base.empty() && base.back() == ' ') base.pop_back();
  if (base == "proper noun") return Category::kProperNoun;
  if (base == "noun") return Category::kNoun;
  if (base == "adjective") return Category::kAdjective;
  if (base == "verb") return Category::kVerb;
  return std::nullopt;
}

SchemaArg parse_schema_arg(const std::string& raw, int line_no) {
  std::string text = trim(raw);
  if (text.empty())
    throw LexiconFormatError(line_no, "empty schema argument");
  SchemaArg arg;
  if (text.front() == '<') {
    if (text.back() != '>')
      throw LexiconFormatError(line_no, "unclosed slot " + text);
    std::string slot = trim(text.substr(1, text.size() - 2));
    if (!slot_category(slot))
      throw LexiconFormatError(line_no, "unknown slot category <" + slot + ">");
    arg.kind = SchemaArg::Kind::kSlot;
    arg.name = slot;
    return arg;
  }
  if (std::isupper(static_cast<unsigned char>(text.front()))) {
    arg.kind = SchemaArg::Kind::kVar;
    arg.name = text;
    return arg;
  }
  if (std::isdigit(static_cast<unsigned char>(text.front())) ||
      text.front() == '-') {
    arg.kind = SchemaArg::Kind::kNum;
    arg.num = std::stol(text);
    return arg;
  }
  arg.kind = SchemaArg::Kind::kSym;
  arg.sym = text;
  return arg;
}

SchemaLiteral parse_schema_literal(const std::string& line, int line_no) {
  size_t open = line.find('(');
  size_t close = line.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw LexiconFormatError(line_no, "schema pattern needs pred(args)");
  SchemaLiteral lit;
  std::string head = trim(line.substr(0, open));
  if (head.empty())
    throw LexiconFormatError(line_no, "schema pattern needs a predicate");
  if (head.front() == '<') {
    if (head.back() != '>')
      throw LexiconFormatError(line_no, "unclosed slot " + head);
    std::string slot = trim(head.substr(1, head.size() - 2));
    if (!slot_category(slot))
      throw LexiconFormatError(line_no, "unknown slot category <" + slot + ">");
    lit.pred_is_slot = true;
    lit.pred = slot;
  } else {
    lit.pred = head;
  }
  std::string inner = line.substr(open + 1, close - open - 1);
  std::string current;
  for (char c : inner) {
    if (c == ',') {
      lit.args.push_back(parse_schema_arg(current, line_no));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!trim(current).empty())
    lit.args.push_back(parse_schema_arg(current, line_no));
  if (lit.args.empty())
    throw LexiconFormatError(line_no, "schema literal needs arguments");
  return lit;
}

// Template text splits into words; <...> groups may contain spaces and take
// a trailing g marking grapheme rendering. Punctuation sticks to its word.
std::vector<TemplatePiece> parse_template(const std::string& text,
                                          int line_no) {
  std::vector<TemplatePiece> pieces;
  size_t i = 0;
  auto flush_words = [&](const std::string& chunk) {
    std::istringstream in(chunk);
    std::string word;
    while (in >> word) {
      TemplatePiece piece;
      piece.kind = word == "a/an" ? TemplatePiece::Kind::kArticle
                                  : TemplatePiece::Kind::kWord;
      piece.text = word;
      pieces.push_back(piece);
    }
  };
  std::string literal;
  while (i < text.size()) {
    if (text[i] == '<') {
      size_t close = text.find('>', i);
      if (close == std::string::npos)
        throw LexiconFormatError(line_no, "unclosed slot in template");
      flush_words(literal);
      literal.clear();
      std::string slot = trim(text.substr(i + 1, close - i - 1));
      if (!slot_category(slot))
        throw LexiconFormatError(line_no,
                                 "unknown slot category <" + slot + ">");
      i = close + 1;
      if (i < text.size() && text[i] == 'g') ++i;
      TemplatePiece piece;
      piece.kind = TemplatePiece::Kind::kSlot;
      piece.text = slot;
      pieces.push_back(piece);
      // Punctuation directly after a slot stays its own piece.
      std::string tail;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '<')
        tail += text[i++];
      if (!tail.empty()) {
        TemplatePiece punct;
        punct.kind = TemplatePiece::Kind::kWord;
        punct.text = tail;
        pieces.push_back(punct);
      }
    } else {
      literal += text[i++];
    }
  }
  flush_words(literal);
  if (pieces.empty())
    throw LexiconFormatError(line_no, "empty schema template");
  return pieces;
}

bool wants_an(const std::string& next_word) {
  if (next_word.empty()) return false;
  char c = static_cast<char>(
      std::tolower(static_cast<unsigned char>(next_word.front())));
  // u-initial words ("user", "unique") take "a" in this vocabulary.
  return c == 'a' || c == 'e' || c == 'i' || c == 'o';
}

bool is_punct_piece(const std::string& text) {
  return text == "." || text == "?" || text == ",";
}

// Match state shared across one schema assignment.
struct MatchState {
  std::map<std::string, Term> vars;
  std::map<std::string, std::string> slots;
};

bool slot_admits(const std::string& slot, const std::string& pred,
                 const Lexicon& lex) {
  auto category = slot_category(slot);
  return category && lex.find_by_pred(*category, pred) != nullptr;
}

bool bind_slot(MatchState& state, const std::string& slot,
               const std::string& pred, const Lexicon& lex) {
  auto it = state.slots.find(slot);
  if (it != state.slots.end()) return it->second == pred;
  if (!slot_admits(slot, pred, lex)) return false;
  state.slots.emplace(slot, pred);
  return true;
}

bool bind_var(MatchState& state, const std::string& name, const Term& value) {
  auto it = state.vars.find(name);
  if (it != state.vars.end()) return it->second == value;
  state.vars.emplace(name, value);
  return true;
}

bool match_literal(const SchemaLiteral& lit, const Literal& fact,
                   MatchState& state, const Lexicon& lex) {
  if (!fact.positive) return false;
  if (lit.args.size() != fact.args.size()) return false;
  if (lit.pred_is_slot) {
    if (!bind_slot(state, lit.pred, fact.pred, lex)) return false;
  } else if (lit.pred != fact.pred) {
    return false;
  }
  for (size_t i = 0; i < lit.args.size(); ++i) {
    const SchemaArg& pattern = lit.args[i];
    const Term& arg = fact.args[i];
    switch (pattern.kind) {
      case SchemaArg::Kind::kVar:
        if (!bind_var(state, pattern.name, arg)) return false;
        break;
      case SchemaArg::Kind::kSlot:
        if (arg.kind() != Term::Kind::kSym) return false;
        if (!bind_slot(state, pattern.name, arg.name(), lex)) return false;
        break;
      case SchemaArg::Kind::kSym:
        if (arg.kind() != Term::Kind::kSym || arg.name() != pattern.sym)
          return false;
        break;
      case SchemaArg::Kind::kNum:
        if (arg.kind() != Term::Kind::kInt || arg.value() != pattern.num)
          return false;
        break;
    }
  }
  return true;
}

// Depth-first assignment of pattern literals to distinct facts. Succeeds on
// the first assignment touching at least one unconsumed fact.
bool find_assignment(const Schema& schema, size_t at,
                     const std::vector<const Literal*>& facts,
                     const std::vector<bool>& consumed,
                     std::vector<size_t>& chosen, MatchState& state,
                     const Lexicon& lex) {
  if (at == schema.pattern.size()) {
    for (size_t idx : chosen)
      if (!consumed[idx]) return true;
    return false;
  }
  for (size_t i = 0; i < facts.size(); ++i) {
    if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
    MatchState saved = state;
    if (match_literal(schema.pattern[at], *facts[i], state, lex)) {
      chosen.push_back(i);
      if (find_assignment(schema, at + 1, facts, consumed, chosen, state, lex))
        return true;
      chosen.pop_back();
    }
    state = saved;
  }
  return false;
}

std::string render_template(const Schema& schema, const MatchState& state,
                            const Lexicon& lex) {
  std::vector<std::string> rendered;
  for (const TemplatePiece& piece : schema.pieces) {
    if (piece.kind == TemplatePiece::Kind::kSlot) {
      auto it = state.slots.find(piece.text);
      rendered.push_back(it == state.slots.end() ? piece.text : [&] {
        auto category = slot_category(piece.text);
        const LexEntry* entry =
            category ? lex.find_by_pred(*category, it->second) : nullptr;
        if (entry) return entry->surface;
        std::string text = it->second;
        std::replace(text.begin(), text.end(), '_', ' ');
        return text;
      }());
    } else {
      rendered.push_back(piece.text);
    }
  }
  std::string out;
  for (size_t i = 0; i < rendered.size(); ++i) {
    std::string word = rendered[i];
    if (schema.pieces[i].kind == TemplatePiece::Kind::kArticle)
      word = i + 1 < rendered.size() && wants_an(rendered[i + 1]) ? "an" : "a";
    if (!out.empty() && !is_punct_piece(word)) out += ' ';
    out += word;
  }
  return out;
}

}  // namespace

SchemaSet SchemaSet::parse_lines(const std::vector<std::string>& lines) {
  SchemaSet set;
  Schema current;
  bool expecting_template = false;
  int line_no = 0;
  auto finish = [&](bool force) {
    if (expecting_template)
      throw LexiconFormatError(line_no, "schema is missing its template");
    if (!current.pattern.empty() && current.pieces.empty() && force)
      throw LexiconFormatError(line_no, "schema is missing =>");
    if (!current.pattern.empty() && !current.pieces.empty())
      set.schemata_.push_back(current);
    current = Schema{};
  };
  for (const std::string& raw : lines) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty()) {
      finish(true);
      continue;
    }
    if (line.front() == '#') continue;
    if (expecting_template) {
      current.pieces = parse_template(line, line_no);
      expecting_template = false;
      continue;
    }
    if (line.rfind("=>", 0) == 0) {
      if (current.pattern.empty())
        throw LexiconFormatError(line_no, "=> without pattern lines");
      std::string rest = trim(line.substr(2));
      if (rest.empty())
        expecting_template = true;
      else
        current.pieces = parse_template(rest, line_no);
      continue;
    }
    if (!current.pieces.empty())
      throw LexiconFormatError(line_no, "pattern line after template");
    current.pattern.push_back(parse_schema_literal(line, line_no));
  }
  finish(true);
  return set;
}

SchemaSet SchemaSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexiconFormatError(0, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return parse_lines(lines);
}

const std::vector<std::string>& default_schemata_lines() {
  static const std::vector<std::string> lines = {
      "# naming plus copula onto a described individual",
      "named(X, <proper noun>)",
      "<adjective>(Y)",
      "<noun>(Y)",
      "is(X, Y)",
      "=> <proper noun>g is a/an <adjective>g <noun>g.",
      "",
      "named(X, <proper noun>)",
      "<noun>(Y)",
      "is(X, Y)",
      "=> <proper noun>g is a/an <noun>g.",
      "",
      "# naming with the description on the named individual itself",
      "named(X, <proper noun>)",
      "<adjective>(X)",
      "<noun>(X)",
      "=> <proper noun>g is a/an <adjective>g <noun>g.",
      "",
      "named(X, <proper noun>)",
      "<noun>(X)",
      "=> <proper noun>g is a/an <noun>g.",
      "",
      "# possession by a named individual",
      "named(X, <proper noun>)",
      "have(X, Y)",
      "<adjective>(Y)",
      "<noun>(Y)",
      "=> <proper noun>g has a/an <adjective>g <noun>g.",
      "",
      "named(X, <proper noun>)",
      "have(X, Y)",
      "<noun>(Y)",
      "=> <proper noun>g has a/an <noun>g.",
      "",
      "# unnamed individuals",
      "<adjective>(X)",
      "<noun>(X)",
      "=> There is a/an <adjective>g <noun>g.",
      "",
      "<noun>(X)",
      "=> There is a/an <noun>g.",
  };
  return lines;
}

ParaphraseResult paraphrase_kb(const std::vector<Clause>& clauses,
                               const SchemaSet& schemata, const Lexicon& lex) {
  ParaphraseResult result;
  std::vector<const Literal*> facts;
  std::vector<const Clause*> fact_sources;
  for (const Clause& c : clauses)
    if (c.is_fact() && c.head.positive) {
      facts.push_back(&c.head);
      fact_sources.push_back(&c);
    }
  std::vector<bool> consumed(facts.size(), false);
  std::set<std::string> emitted;
  for (const Schema& schema : schemata.schemata()) {
    for (;;) {
      std::vector<size_t> chosen;
      MatchState state;
      if (!find_assignment(schema, 0, facts, consumed, chosen, state, lex))
        break;
      for (size_t idx : chosen) consumed[idx] = true;
      std::string sentence = render_template(schema, state, lex);
      if (emitted.insert(sentence).second)
        result.sentences.push_back(sentence);
    }
  }
  std::set<const Clause*> covered;
  for (size_t i = 0; i < facts.size(); ++i)
    if (consumed[i]) covered.insert(fact_sources[i]);
  for (const Clause& c : clauses)
    if (!covered.count(&c)) result.leftovers.push_back(c.render());
  return result;
}

std::string grapheme(const std::string& pred, const Lexicon& lex) {
  for (Category category :
       {Category::kProperNoun, Category::kNoun, Category::kAdjective,
        Category::kVerb}) {
    if (const LexEntry* entry = lex.find_by_pred(category, pred))
      return entry->surface;
  }
  std::string text = pred;
  std::replace(text.begin(), text.end(), '_', ' ');
  return text;
}

namespace {

// How a resolved antecedent reads inside feedback brackets: its proper name
// when it has one, otherwise its introducing phrase made definite.
std::string antecedent_phrase(RefId id, const Drs& context,
                              const Lexicon& lex) {
  const Referent* r = find_referent(context, id);
  if (!r) return "X" + std::to_string(id);
  if (!r->proper_name.empty()) return grapheme(r->proper_name, lex);
  std::string phrase = r->description;
  if (phrase.rfind("a ", 0) == 0) return "the " + phrase.substr(2);
  if (phrase.rfind("an ", 0) == 0) return "the " + phrase.substr(3);
  return phrase;
}

std::string join_tokens(const std::vector<std::string>& words,
                        const Sentence& sentence) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) continue;
    bool punct = sentence[i].kind == TokenKind::kPunct;
    if (!out.empty() && !punct) out += ' ';
    out += words[i];
  }
  return out;
}

}  // namespace

std::string feedback_sentence(const Sentence& sentence,
                              const std::vector<ResolutionNote>& notes,
                              const Drs& context,
                              const std::set<int>& individual_articles,
                              const Lexicon& lex) {
  std::vector<std::string> words;
  words.reserve(sentence.size());
  for (const Token& token : sentence) words.push_back(token.text);
  for (const ResolutionNote& note : notes) {
    if (note.kind != Placeholder::Kind::kPronoun || note.to == 0) continue;
    if (note.token < 0 || static_cast<size_t>(note.token) >= words.size())
      continue;
    words[note.token] = "[" + antecedent_phrase(note.to, context, lex) + "]";
  }
  for (int idx : individual_articles)
    if (idx >= 0 && static_cast<size_t>(idx) < words.size())
      words[idx] = "[an individual]";
  return join_tokens(words, sentence);
}

std::string answer_sentence(const Sentence& sentence, const SentenceAst& ast,
                            const std::vector<std::string>& descriptions) {
  std::string bracket = "[";
  for (size_t i = 0; i < descriptions.size(); ++i) {
    if (i) bracket += ", ";
    bracket += descriptions[i];
  }
  bracket += "]";
  const ClauseAst& main = ast.main.items.front();
  if (!ast.wh_object) {
    std::vector<std::string> words;
    words.reserve(sentence.size());
    for (const Token& token : sentence) words.push_back(token.text);
    int at = main.subject ? main.subject->head_token : 0;
    if (at >= 0 && static_cast<size_t>(at) < words.size())
      words[at] = bracket;
    if (!words.empty() && words.back() == "?") words.back() = ".";
    return join_tokens(words, sentence);
  }
  // Object question: restate as subject, verb, bracketed answer.
  std::string out;
  if (main.subject)
    for (int i = main.subject->first_token; i <= main.subject->last_token; ++i)
      if (i >= 0 && static_cast<size_t>(i) < sentence.size()) {
        if (!out.empty()) out += ' ';
        out += sentence[i].text;
      }
  const VerbPhrase& vp = main.vps.items.front();
  std::string verb;
  if (vp.kind == VerbPhrase::Kind::kVerb ||
      vp.kind == VerbPhrase::Kind::kProgressive) {
    verb = vp.verb.verb ? vp.verb.verb->lemma : "does";
    if (vp.kind == VerbPhrase::Kind::kVerb) verb += "s";
  } else {
    verb = "is";
  }
  if (!out.empty()) out += ' ';
  out += verb + " " + bracket + ".";
  return out;
}

std::string describe_term(const Term& term, const KnowledgeBase& kb,
                          const Lexicon& lex) {
  switch (term.kind()) {
    case Term::Kind::kSym:
      return grapheme(term.name(), lex);
    case Term::Kind::kVar:
      return "anything";
    case Term::Kind::kInt: {
      std::vector<std::string> adjectives;
      std::string noun;
      for (const Clause& c : kb.clauses()) {
        if (!c.is_fact() || !c.head.positive) continue;
        const Literal& f = c.head;
        if (f.pred == "named" && f.args.size() == 2 &&
            f.args[0].kind() == Term::Kind::kInt &&
            f.args[0].value() == term.value() &&
            f.args[1].kind() == Term::Kind::kSym)
          return grapheme(f.args[1].name(), lex);
        if (f.args.size() == 1 && f.args[0].kind() == Term::Kind::kInt &&
            f.args[0].value() == term.value()) {
          if (lex.find_by_pred(Category::kAdjective, f.pred))
            adjectives.push_back(grapheme(f.pred, lex));
          else if (noun.empty())
            noun = grapheme(f.pred, lex);
        }
      }
      if (!noun.empty()) {
        std::string out = "the ";
        for (const std::string& adj : adjectives) out += adj + " ";
        return out + noun;
      }
      return "individual " + std::to_string(term.value());
    }
    case Term::Kind::kSkolem: {
      for (const Clause& c : kb.clauses()) {
        if (!c.head.positive || c.head.args.empty()) continue;
        const Term& first = c.head.args.front();
        if (first.kind() == Term::Kind::kSkolem &&
            first.skolem_index() == term.skolem_index())
          return "an individual " + grapheme(c.head.pred, lex);
      }
      return "an individual";
    }
  }
  return term.render();
}

}  // namespace cnl
