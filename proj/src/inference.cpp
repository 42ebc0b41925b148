#include "cnl/inference.hpp"

#include <algorithm>
#include <set>

#include "cnl/errors.hpp"

namespace cnl {

namespace {

bool is_comparison(const Literal& l) {
  return l.args.size() == 2 && (l.pred == "bigger_than" ||
                                l.pred == "smaller_than" || l.pred == "equal");
}

void collect_goal_vars(const Term& t, std::vector<std::string>& vars) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (std::find(vars.begin(), vars.end(), t.name()) == vars.end())
        vars.push_back(t.name());
      break;
    case Term::Kind::kSkolem:
      for (const Term& a : t.args()) collect_goal_vars(a, vars);
      break;
    default:
      break;
  }
}

struct Engine {
  const std::vector<Clause>& clauses;
  size_t max_solutions;
  std::vector<std::string> goal_vars;

  Bindings bindings;
  std::vector<std::string> trail;
  int serial = 0;
  bool cut_off = false;
  std::vector<Bindings> solutions;
  std::set<std::string> seen;

  bool record_solution() {
    Bindings projected;
    std::string key;
    for (const std::string& v : goal_vars) {
      Term value = apply_bindings(Term::var(v), bindings);
      key += v + "=" + value.render() + ";";
      projected.emplace(v, std::move(value));
    }
    if (seen.insert(key).second) solutions.push_back(std::move(projected));
    return solutions.size() >= max_solutions;
  }

  // True when enough solutions have been collected to stop the search.
  bool run(const std::vector<Literal>& goals, int depth) {
    if (goals.empty()) return record_solution();
    Literal goal = goals.front();
    std::vector<Literal> rest(goals.begin() + 1, goals.end());

    if (!goal.positive) {
      Literal positive = apply_bindings(goal, bindings);
      positive.positive = true;
      Engine sub{clauses, 1, {}, {}, {}, serial + 1, false, {}, {}};
      sub.run({positive}, depth);
      if (!sub.solutions.empty()) return false;  // provable: negation fails
      if (sub.cut_off) {
        // Unprovable only because the bound cut the subproof short.
        cut_off = true;
        return false;
      }
      return run(rest, depth);
    }

    bool any_clause = false;
    for (const Clause& clause : clauses) {
      if (!clause.head.positive || clause.head.pred != goal.pred ||
          clause.head.args.size() != goal.args.size())
        continue;
      any_clause = true;
      if (depth <= 0) {
        cut_off = true;
        break;
      }
      Clause renamed = rename_clause(clause, ++serial);
      size_t mark = trail.size();
      bool matched = true;
      for (size_t i = 0; i < goal.args.size(); ++i) {
        if (!unify_terms(goal.args[i], renamed.head.args[i], bindings,
                         trail)) {
          matched = false;
          break;
        }
      }
      if (matched) {
        std::vector<Literal> next = renamed.body;
        next.insert(next.end(), rest.begin(), rest.end());
        if (run(next, depth - 1)) return true;
      }
      undo_trail(bindings, trail, mark);
    }

    if (is_comparison(goal)) {
      Term a = apply_bindings(goal.args[0], bindings);
      Term b = apply_bindings(goal.args[1], bindings);
      bool unbound =
          a.kind() == Term::Kind::kVar || b.kind() == Term::Kind::kVar;
      if (goal.pred == "equal") {
        if (unbound) {
          if (!any_clause) throw InstantiationError(goal.render());
        } else if (a == b) {
          return run(rest, depth);
        }
      } else {
        bool numeric = a.kind() == Term::Kind::kInt &&
                       b.kind() == Term::Kind::kInt;
        if (unbound) {
          if (!any_clause) throw InstantiationError(goal.render());
        } else if (!numeric) {
          if (!any_clause) throw TypeError(goal.render());
        } else {
          bool holds = goal.pred == "bigger_than" ? a.value() > b.value()
                                                  : a.value() < b.value();
          if (holds) return run(rest, depth);
        }
      }
    }
    return false;
  }
};

}  // namespace

SolveResult Solver::solve(const std::vector<Literal>& goals,
                          size_t max_solutions) const {
  Engine engine{*clauses_, max_solutions == 0 ? 1 : max_solutions,
                {}, {}, {}, 0, false, {}, {}};
  for (const Literal& g : goals)
    for (const Term& t : g.args) collect_goal_vars(t, engine.goal_vars);
  engine.run(goals, depth_);
  SolveResult result;
  result.solutions = std::move(engine.solutions);
  result.answer = !result.solutions.empty()
                      ? Answer::kYes
                      : (engine.cut_off ? Answer::kDepthExceeded : Answer::kNo);
  return result;
}

}  // namespace cnl
