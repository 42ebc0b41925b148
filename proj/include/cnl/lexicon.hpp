// Application vocabulary: open-class entries loaded from a file plus a
// compiled-in closed class (determiners, pronouns, auxiliaries, connectives).
#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnl/feature_structure.hpp"

namespace cnl {

enum class Category {
  kNoun,
  kProperNoun,
  kVerb,
  kAdjective,
  kDeterminer,
  kPreposition,
  kPronoun,
  kConjunction,
  kComparative,
  kQueryWord,
};

enum class Gender { kMasc, kFem, kNeut };

enum class NumberFeature { kSg, kPl };

enum class VerbKind { kEvent, kState, kCopula, kAux };

std::string category_name(Category c);
std::optional<Category> category_from_name(const std::string& name);
std::string gender_name(Gender g);
std::string number_name(NumberFeature n);
std::string verb_kind_name(VerbKind k);

struct LexEntry {
  std::string surface;        // as written, case preserved for proper nouns
  Category category = Category::kNoun;
  std::string lemma;
  std::string pred;           // predicate symbol; empty only for closed class
  std::vector<Gender> gender; // nonempty for nouns, proper nouns, pronouns
  std::optional<NumberFeature> number;  // nullopt: compatible with either
  std::optional<VerbKind> verb_kind;

  bool same_features(const LexEntry& other) const;
  // Agreement features as a unifiable structure (gender set, number, person).
  FeatureStructure agreement() const;
};

// One lookup hit. `consumed` counts tokens of a multiword surface;
// `inflected_s` marks a trailing -s form (plural noun or 3rd-sg verb).
struct LexMatch {
  const LexEntry* entry = nullptr;
  int consumed = 1;
  bool inflected_s = false;
};

class Lexicon {
 public:
  // Starts with the closed class only.
  Lexicon();

  // Entries whose surface matches the word (case-insensitive; multiword
  // surfaces match when the word contains the same spaces).
  std::vector<const LexEntry*> lookup(const std::string& word) const;

  // Matches starting at `pos` in a token word list. Longest multiword match
  // wins: shorter surfaces are not reported when a longer one matches.
  // Inflected -s forms are matched against their base entries.
  std::vector<LexMatch> lookup_at(const std::vector<std::string>& words,
                                  size_t pos) const;

  // Adds an open-class entry. Re-adding an identical entry is a no-op;
  // a clash on (surface, category) with different features raises.
  void add_entry(const LexEntry& entry);

  const LexEntry* find_by_pred(Category category, const std::string& pred) const;

  // Open-class entries in insertion order.
  std::vector<const LexEntry*> open_entries() const;

  // Replaces the open class with the file's entries. Lines:
  //   category|surface|lemma|pred|gender=m,f|number=sg|verb_kind=event
  // Blank lines and lines starting with # are ignored.
  void load(const std::string& path);
  void save(const std::string& path) const;

  // Same format as load, entry per line; used for embedded vocabularies.
  void load_lines(const std::vector<std::string>& lines);

  static LexEntry parse_entry_line(const std::string& line, int line_no);
  static std::string render_entry_line(const LexEntry& entry);

 private:
  void add_closed_class();
  void index_entry(size_t idx);

  // Deque: entry pointers stay valid across add_entry.
  std::deque<LexEntry> entries_;
  // key: lowercase surface; values: indexes into entries_
  std::multimap<std::string, size_t> by_surface_;
  size_t max_surface_words_ = 1;
  size_t closed_count_ = 0;  // entries_[0..closed_count_) are compiled in
};

}  // namespace cnl
