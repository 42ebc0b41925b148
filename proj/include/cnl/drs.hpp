// Discourse representation structures: referents, conditions, sub-structures,
// accessibility and simplification.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cnl/lexicon.hpp"

namespace cnl {

using RefId = int;

// A discourse referent. Agreement data lives here rather than only in
// gender/number conditions so that resolution still works after those
// conditions have been simplified away.
struct Referent {
  RefId id = 0;
  int sentence = 0;             // 1-based sentence that introduced it
  std::string description;      // the introducing phrase, as written
  std::vector<Gender> gender;
  std::optional<NumberFeature> number;
  bool unique_definite = false; // definite NP that opened a new reference
  std::string proper_name;      // naming constant when introduced by a name

  std::string display() const { return "X" + std::to_string(id); }
};

struct DrsArg {
  enum class Kind { kRef, kSym, kNum };
  Kind kind = Kind::kRef;
  RefId ref = 0;
  std::string sym;
  long num = 0;

  static DrsArg of_ref(RefId id);
  static DrsArg of_sym(std::string s);
  static DrsArg of_num(long n);
  bool operator==(const DrsArg& other) const;
  std::string render() const;
};

struct Drs;

struct Condition {
  enum class Kind {
    kAtomic,       // pred(args...)
    kEquality,     // left = right (left is the later referent)
    kNegation,     // sub1
    kIfThen,       // sub1 => sub2
    kDisjunction,  // sub1 v sub2
    kGender,       // gender(ref, set)
    kNumber,       // number(ref, sg/pl)
  };

  Kind kind = Kind::kAtomic;
  int sentence = 0;
  // Nonzero on an atomic condition that reports an event or a progressive
  // state; joins the condition to per-sentence eventuality metadata.
  int event_tag = 0;
  std::string pred;
  std::vector<DrsArg> args;          // atomic; equality uses args[0], args[1]
  std::vector<Gender> gender;        // kGender
  std::optional<NumberFeature> number;  // kNumber
  std::unique_ptr<Drs> sub1, sub2;

  Condition() = default;
  Condition(const Condition& other);
  Condition& operator=(const Condition& other);
  Condition(Condition&&) = default;
  Condition& operator=(Condition&&) = default;

  static Condition atomic(std::string pred, std::vector<DrsArg> args,
                          int sentence);
  static Condition equality(RefId left, RefId right, int sentence);
  static Condition negation(Drs sub, int sentence);
  static Condition ifthen(Drs antecedent, Drs consequent, int sentence);
  static Condition disjunction(Drs left, Drs right, int sentence);
  static Condition gender_of(RefId ref, std::vector<Gender> set, int sentence);
  static Condition number_of(RefId ref, NumberFeature n, int sentence);

  bool same_content(const Condition& other) const;  // ignores sentence tag
  std::string render() const;
};

// A DRS is a set of referents with conditions over them; sub-DRSs appear
// inside negation, implication and disjunction conditions.
struct Drs {
  std::vector<Referent> referents;
  std::vector<Condition> conditions;

  bool empty() const { return referents.empty() && conditions.empty(); }
  // `drs([X1,X2],[cond,...])`. The universe shown for a consequent includes
  // the antecedent's referents after its own, reflecting that the consequent
  // extends the antecedent.
  std::string render_term() const;
  // Indented box notation.
  std::string render_box() const;
};

// One step down into a sub-DRS: condition index plus branch (0 = negation
// body / antecedent / left disjunct, 1 = consequent / right disjunct).
struct PathStep {
  int cond_index = 0;
  int branch = 0;
};
using DrsPath = std::vector<PathStep>;

// Union of referents and conditions. Raises DuplicateReferentError when a
// referent id is declared on both sides.
Drs merge(const Drs& a, const Drs& b);

// Referents visible from a position: the current sub-DRS first, then each
// superordinate level, most recently introduced first within a level. From a
// consequent, the antecedent's referents are visible before the levels above.
std::vector<const Referent*> accessible_referents(const Drs& drs,
                                                  const DrsPath& path);

const Drs* drs_at(const Drs& root, const DrsPath& path);
Drs* drs_at(Drs& root, const DrsPath& path);
const Referent* find_referent(const Drs& drs, RefId id);

// All atomic conditions anywhere in the structure that mention the referent.
std::vector<const Condition*> conditions_about(const Drs& drs, RefId id);

// Resolution-complete cleanup: is/2 between referents becomes an equality;
// equalities are applied keeping the earlier referent; gender and number
// conditions are dropped; conditions duplicating an accessible earlier
// condition are removed. Idempotent.
Drs simplify(const Drs& drs);

}  // namespace cnl
