// Depth-bounded SLD resolution with negation as failure and comparison
// builtins.
#pragma once

#include <vector>

#include "cnl/kb.hpp"
#include "cnl/logic.hpp"

namespace cnl {

enum class Answer { kYes, kNo, kDepthExceeded };

struct SolveResult {
  Answer answer = Answer::kNo;
  // One entry per distinct solution: each binds the goals' variables to
  // fully resolved terms.
  std::vector<Bindings> solutions;
};

class Solver {
 public:
  static constexpr int kDefaultDepth = 64;

  explicit Solver(const KnowledgeBase& kb, int depth_limit = kDefaultDepth)
      : clauses_(&kb.clauses()), depth_(depth_limit) {}
  explicit Solver(const std::vector<Clause>& clauses,
                  int depth_limit = kDefaultDepth)
      : clauses_(&clauses), depth_(depth_limit) {}

  int depth_limit() const { return depth_; }

  // Leftmost goal selection, clauses in store order. Collects distinct
  // solutions up to `max_solutions`. A negated goal succeeds when its
  // positive form has no solution within the current remaining depth; a
  // depth cutoff inside the subproof surfaces as kDepthExceeded, never as a
  // silent "no". Comparison builtins (bigger_than, smaller_than, equal) are
  // tried after store clauses; they raise InstantiationError or TypeError
  // only when the store has nothing for the predicate.
  SolveResult solve(const std::vector<Literal>& goals,
                    size_t max_solutions = 16) const;

 private:
  const std::vector<Clause>* clauses_;
  int depth_;
};

}  // namespace cnl
