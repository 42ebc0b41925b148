// Translation of simplified DRSs into Horn clauses and query goal lists.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cnl/drs.hpp"
#include "cnl/logic.hpp"

namespace cnl {

// Constant and skolem-index values are the referent's own discourse id, so
// translation is deterministic and replayable from the referent counter.
// The bindings map carries each individual's constant across sentences.
struct TranslationState {
  std::map<RefId, Term> bindings;
};

struct AssertionTranslation {
  std::vector<Clause> clauses;           // emission order: facts, then rules
  std::map<int, Literal> event_literals; // event tag -> translated fact
  std::set<RefId> skolemized;            // referents rendered as skolem terms
  std::set<long> fresh_constants;        // constants minted by this sentence
  std::set<int> fresh_skolems;           // skolem indices minted
};

// Translates an assertion DRS. Top-level referents become integer constants
// recorded in `state.bindings`; ifthen conditions become rules with
// universally quantified antecedent variables and skolemized consequent
// referents; a top-level negation becomes a negative fact or clause.
// Raises UnsupportedDrsError on shapes outside the clause fragment.
AssertionTranslation translate_assertion(const Drs& drs,
                                         TranslationState& state,
                                         const Provenance& origin);

struct QueryTranslation {
  std::vector<Literal> goals;
  std::vector<std::string> wh_vars;  // variable per wh referent, in order
};

// Translates a query DRS into a goal conjunction. Referents with a binding
// become their constants; the rest become variables (wh referents first).
QueryTranslation translate_query(const Drs& drs,
                                 const std::map<RefId, Term>& bindings,
                                 const std::vector<RefId>& wh_refs);

}  // namespace cnl
