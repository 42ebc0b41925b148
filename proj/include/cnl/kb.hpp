// Ordered clause store with redundancy and consistency checks, provenance,
// and file persistence.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cnl/logic.hpp"

namespace cnl {

struct AssimilationResult {
  enum class Outcome { kAccepted, kRedundant, kInconsistent };
  Outcome outcome = Outcome::kAccepted;
  int added = 0;
  int dropped = 0;  // clauses skipped as individually redundant
  // Filled when the whole batch is redundant: what each constant minted by
  // the sentence stands for among the stored individuals.
  std::map<long, Term> constant_map;
  std::string conflict;  // rendered clash when inconsistent
};

class KnowledgeBase {
 public:
  const std::vector<Clause>& clauses() const { return clauses_; }
  bool empty() const { return clauses_.empty(); }
  void clear() { clauses_.clear(); }

  // Appends without checks; used by load and by session-scoped overlays.
  void add_clause(Clause c) { clauses_.push_back(std::move(c)); }

  // Adds a sentence's clauses unless the batch clashes with a stored
  // negative fact (rejected whole) or restates stored knowledge. A batch
  // whose clauses all map onto stored clauses under one substitution of its
  // fresh constants (bijective on its fresh skolem indices) is redundant;
  // otherwise individually redundant clauses are dropped and the rest added.
  AssimilationResult assimilate(const std::vector<Clause>& batch,
                                const std::set<long>& fresh_constants,
                                const std::set<int>& fresh_skolems);

  // The individual a `named` fact binds to a name, if any.
  std::optional<long> constant_for_name(const std::string& name) const;

  bool has_clauses_for(const std::string& pred, size_t arity) const;

  std::vector<const Clause*> clauses_for(const std::string& pred) const;

  // One clause per line with `% source:` provenance comments and the
  // referent counter in the header. load returns the stored counter,
  // raised past any constant or skolem index found in the clauses.
  void save(const std::string& path, int next_ref) const;
  int load(const std::string& path);

 private:
  std::vector<Clause> clauses_;
};

}  // namespace cnl
