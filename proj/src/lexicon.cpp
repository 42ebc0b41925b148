#include "cnl/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "cnl/errors.hpp"
#include "cnl/text_util.hpp"

namespace cnl {
namespace {

bool is_open_class(Category c) {
  switch (c) {
    case Category::kNoun:
    case Category::kProperNoun:
    case Category::kVerb:
    case Category::kAdjective:
      return true;
    default:
      return false;
  }
}

std::vector<Gender> parse_gender_set(const std::string& text, int line_no) {
  std::vector<Gender> out;
  for (const auto& part : split(text, ',')) {
    auto p = trim(part);
    if (p == "m")
      out.push_back(Gender::kMasc);
    else if (p == "f")
      out.push_back(Gender::kFem);
    else if (p == "n")
      out.push_back(Gender::kNeut);
    else
      throw LexiconFormatError(line_no, "bad gender '" + p + "'");
  }
  // Canonical order m, f, n.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw LexiconFormatError(line_no, "empty gender set");
  return out;
}

}  // namespace

std::string category_name(Category c) {
  switch (c) {
    case Category::kNoun: return "noun";
    case Category::kProperNoun: return "proper-noun";
    case Category::kVerb: return "verb";
    case Category::kAdjective: return "adjective";
    case Category::kDeterminer: return "determiner";
    case Category::kPreposition: return "preposition";
    case Category::kPronoun: return "pronoun";
    case Category::kConjunction: return "conjunction";
    case Category::kComparative: return "comparative";
    case Category::kQueryWord: return "query-word";
  }
  return "?";
}

std::optional<Category> category_from_name(const std::string& name) {
  static const std::map<std::string, Category> table = {
      {"noun", Category::kNoun},
      {"proper-noun", Category::kProperNoun},
      {"verb", Category::kVerb},
      {"adjective", Category::kAdjective},
      {"determiner", Category::kDeterminer},
      {"preposition", Category::kPreposition},
      {"pronoun", Category::kPronoun},
      {"conjunction", Category::kConjunction},
      {"comparative", Category::kComparative},
      {"query-word", Category::kQueryWord},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string gender_name(Gender g) {
  switch (g) {
    case Gender::kMasc: return "m";
    case Gender::kFem: return "f";
    case Gender::kNeut: return "n";
  }
  return "?";
}

std::string number_name(NumberFeature n) {
  return n == NumberFeature::kSg ? "sg" : "pl";
}

std::string verb_kind_name(VerbKind k) {
  switch (k) {
    case VerbKind::kEvent: return "event";
    case VerbKind::kState: return "state";
    case VerbKind::kCopula: return "copula";
    case VerbKind::kAux: return "aux";
  }
  return "?";
}

bool LexEntry::same_features(const LexEntry& other) const {
  return lemma == other.lemma && pred == other.pred &&
         gender == other.gender && number == other.number &&
         verb_kind == other.verb_kind;
}

FeatureStructure LexEntry::agreement() const {
  FeatureStructure fs;
  if (!gender.empty()) {
    std::vector<std::string> names;
    for (Gender g : gender) names.push_back(gender_name(g));
    fs = *fs.put({"gender"}, FeatureValue::atom_set(names));
  }
  if (number)
    fs = *fs.put({"number"}, FeatureValue::atom(number_name(*number)));
  fs = *fs.put({"person"}, FeatureValue::atom("third"));
  return fs;
}

Lexicon::Lexicon() {
  add_closed_class();
}

void Lexicon::add_closed_class() {
  auto add = [&](std::string surface, Category cat, std::string lemma,
                 std::string pred, std::vector<Gender> gender,
                 std::optional<NumberFeature> number,
                 std::optional<VerbKind> kind) {
    LexEntry e;
    e.surface = std::move(surface);
    e.category = cat;
    e.lemma = std::move(lemma);
    e.pred = std::move(pred);
    e.gender = std::move(gender);
    e.number = number;
    e.verb_kind = kind;
    entries_.push_back(std::move(e));
    index_entry(entries_.size() - 1);
  };
  const auto sg = NumberFeature::kSg;
  const auto pl = NumberFeature::kPl;

  add("a", Category::kDeterminer, "a", "", {}, sg, std::nullopt);
  add("an", Category::kDeterminer, "a", "", {}, sg, std::nullopt);
  add("the", Category::kDeterminer, "the", "", {}, std::nullopt, std::nullopt);
  add("every", Category::kDeterminer, "every", "", {}, sg, std::nullopt);

  add("it", Category::kPronoun, "it", "", {Gender::kNeut}, sg, std::nullopt);
  add("he", Category::kPronoun, "he", "", {Gender::kMasc}, sg, std::nullopt);
  add("she", Category::kPronoun, "she", "", {Gender::kFem}, sg, std::nullopt);
  // Relative pronouns. `who` doubles as a query word below.
  add("who", Category::kPronoun, "who", "", {Gender::kMasc, Gender::kFem}, std::nullopt,
      std::nullopt);
  add("that", Category::kPronoun, "that", "",
      {Gender::kMasc, Gender::kFem, Gender::kNeut}, std::nullopt, std::nullopt);
  add("which", Category::kPronoun, "which", "", {Gender::kNeut}, std::nullopt,
      std::nullopt);

  add("who", Category::kQueryWord, "who", "", {Gender::kMasc, Gender::kFem}, sg,
      std::nullopt);
  add("what", Category::kQueryWord, "what", "", {Gender::kNeut}, sg,
      std::nullopt);

  add("if", Category::kConjunction, "if", "", {}, std::nullopt, std::nullopt);
  add("then", Category::kConjunction, "then", "", {}, std::nullopt, std::nullopt);
  add("and", Category::kConjunction, "and", "", {}, std::nullopt, std::nullopt);
  add("or", Category::kConjunction, "or", "", {}, std::nullopt, std::nullopt);
  add("not", Category::kConjunction, "not", "", {}, std::nullopt, std::nullopt);

  add("is", Category::kVerb, "be", "", {}, sg, VerbKind::kCopula);
  add("are", Category::kVerb, "be", "", {}, pl, VerbKind::kCopula);
  add("has", Category::kVerb, "have", "have", {}, sg, VerbKind::kState);
  add("have", Category::kVerb, "have", "have", {}, std::nullopt, VerbKind::kState);
  add("does", Category::kVerb, "do", "", {}, sg, VerbKind::kAux);
  add("do", Category::kVerb, "do", "", {}, std::nullopt, VerbKind::kAux);

  add("bigger than", Category::kComparative, "bigger than", "bigger_than", {},
      std::nullopt, std::nullopt);
  add("smaller than", Category::kComparative, "smaller than", "smaller_than", {},
      std::nullopt, std::nullopt);
  add("equal to", Category::kComparative, "equal to", "equal", {},
      std::nullopt, std::nullopt);

  closed_count_ = entries_.size();
}

void Lexicon::index_entry(size_t idx) {
  const auto& e = entries_[idx];
  by_surface_.emplace(to_lower(e.surface), idx);
  size_t words = split(e.surface, ' ').size();
  max_surface_words_ = std::max(max_surface_words_, words);
}

std::vector<const LexEntry*> Lexicon::lookup(const std::string& word) const {
  std::vector<const LexEntry*> out;
  auto [lo, hi] = by_surface_.equal_range(to_lower(word));
  for (auto it = lo; it != hi; ++it) out.push_back(&entries_[it->second]);
  return out;
}

std::vector<LexMatch> Lexicon::lookup_at(const std::vector<std::string>& words,
                                         size_t pos) const {
  std::vector<LexMatch> out;
  if (pos >= words.size()) return out;
  size_t max_len = std::min(max_surface_words_, words.size() - pos);
  // Longest surface first; stop as soon as some length matches so that a
  // shorter prefix never competes with a known multiword lexeme.
  for (size_t len = max_len; len >= 1 && out.empty(); --len) {
    std::vector<std::string> piece(words.begin() + pos,
                                   words.begin() + pos + len);
    std::string surface = to_lower(join(piece, " "));
    for (const LexEntry* e : lookup(surface))
      out.push_back({e, static_cast<int>(len), false});
    if (len == 1 && out.empty() && surface.size() > 1 &&
        surface.back() == 's') {
      // Fixed inflection table: plural -s on nouns, 3rd-sg -s on verbs.
      std::string base = surface.substr(0, surface.size() - 1);
      for (const LexEntry* e : lookup(base)) {
        if (e->category == Category::kNoun || e->category == Category::kVerb)
          out.push_back({e, 1, true});
      }
    }
  }
  return out;
}

void Lexicon::add_entry(const LexEntry& entry) {
  if (is_open_class(entry.category) && entry.pred.empty())
    throw LexiconFormatError(0, "open-class entry '" + entry.surface +
                                    "' needs a predicate symbol");
  for (const LexEntry* e : lookup(entry.surface)) {
    if (e->category != entry.category) continue;
    if (e->same_features(entry)) return;  // identical re-add
    throw DuplicateEntryError(entry.surface, category_name(entry.category));
  }
  entries_.push_back(entry);
  index_entry(entries_.size() - 1);
}

const LexEntry* Lexicon::find_by_pred(Category category,
                                      const std::string& pred) const {
  for (const auto& e : entries_)
    if (e.category == category && e.pred == pred) return &e;
  return nullptr;
}

std::vector<const LexEntry*> Lexicon::open_entries() const {
  std::vector<const LexEntry*> out;
  for (size_t i = closed_count_; i < entries_.size(); ++i)
    out.push_back(&entries_[i]);
  return out;
}

LexEntry Lexicon::parse_entry_line(const std::string& line, int line_no) {
  auto fields = split(line, '|');
  if (fields.size() < 4)
    throw LexiconFormatError(line_no, "expected at least 4 '|' fields");
  LexEntry e;
  auto cat = category_from_name(trim(fields[0]));
  if (!cat)
    throw LexiconFormatError(line_no, "bad category '" + trim(fields[0]) + "'");
  e.category = *cat;
  e.surface = trim(fields[1]);
  e.lemma = trim(fields[2]);
  e.pred = trim(fields[3]);
  if (e.surface.empty()) throw LexiconFormatError(line_no, "empty surface");
  if (e.lemma.empty()) e.lemma = to_lower(e.surface);
  if (is_open_class(e.category) && e.pred.empty())
    throw LexiconFormatError(line_no, "empty pred for open-class entry");
  // Nouns default to singular neuter; verbs stay unmarked so the bare form
  // fills the non-third paradigm slot.
  if (e.category == Category::kNoun || e.category == Category::kProperNoun) {
    e.number = NumberFeature::kSg;
    e.gender = {Gender::kNeut};
  }
  for (size_t i = 4; i < fields.size(); ++i) {
    auto field = trim(fields[i]);
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string::npos)
      throw LexiconFormatError(line_no, "expected key=value, got '" + field + "'");
    auto key = trim(field.substr(0, eq));
    auto value = trim(field.substr(eq + 1));
    if (key == "gender") {
      e.gender = parse_gender_set(value, line_no);
    } else if (key == "number") {
      if (value == "sg")
        e.number = NumberFeature::kSg;
      else if (value == "pl")
        e.number = NumberFeature::kPl;
      else
        throw LexiconFormatError(line_no, "bad number '" + value + "'");
    } else if (key == "verb_kind") {
      if (value == "event")
        e.verb_kind = VerbKind::kEvent;
      else if (value == "state")
        e.verb_kind = VerbKind::kState;
      else
        throw LexiconFormatError(line_no, "bad verb_kind '" + value + "'");
    } else {
      throw LexiconFormatError(line_no, "unknown key '" + key + "'");
    }
  }
  if (e.category == Category::kVerb && !e.verb_kind)
    e.verb_kind = VerbKind::kEvent;
  return e;
}

std::string Lexicon::render_entry_line(const LexEntry& entry) {
  std::string out = category_name(entry.category) + "|" + entry.surface + "|" +
                    entry.lemma + "|" + entry.pred;
  if (!entry.gender.empty()) {
    std::vector<std::string> names;
    for (Gender g : entry.gender) names.push_back(gender_name(g));
    out += "|gender=" + join(names, ",");
  }
  if (entry.number) out += "|number=" + number_name(*entry.number);
  if (entry.verb_kind && (*entry.verb_kind == VerbKind::kEvent ||
                          *entry.verb_kind == VerbKind::kState))
    out += "|verb_kind=" + verb_kind_name(*entry.verb_kind);
  return out;
}

void Lexicon::load_lines(const std::vector<std::string>& lines) {
  entries_.resize(closed_count_);
  by_surface_.clear();
  max_surface_words_ = 1;
  for (size_t i = 0; i < closed_count_; ++i) index_entry(i);
  int line_no = 0;
  for (const auto& raw : lines) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    add_entry(parse_entry_line(line, line_no));
  }
}

void Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexiconFormatError(0, "cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  load_lines(lines);
}

void Lexicon::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw LexiconFormatError(0, "cannot write '" + path + "'");
  out << "# category|surface|lemma|pred|gender=..|number=..|verb_kind=..\n";
  for (const LexEntry* e : open_entries())
    out << render_entry_line(*e) << "\n";
}

}  // namespace cnl
