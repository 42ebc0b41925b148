#include "cnl/translator.hpp"

#include <algorithm>
#include <set>

#include "cnl/errors.hpp"

namespace cnl {

namespace {

// Construction-time variable names carry the referent id; canonical()
// renames them to X1, X2, ... per clause afterwards.
std::string scratch_var(RefId id) { return "R" + std::to_string(id); }

void collect_vars(const Term& t, std::vector<std::string>& order) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (std::find(order.begin(), order.end(), t.name()) == order.end())
        order.push_back(t.name());
      break;
    case Term::Kind::kSkolem:
      for (const Term& a : t.args()) collect_vars(a, order);
      break;
    default:
      break;
  }
}

Term rename_term(const Term& t,
                 const std::map<std::string, std::string>& names) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return Term::var(names.at(t.name()));
    case Term::Kind::kSkolem: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(rename_term(a, names));
      return Term::skolem(t.skolem_index(), std::move(args));
    }
    default:
      return t;
  }
}

// Renames variables to X1, X2, ... by first occurrence, head before body.
Clause canonical(Clause c) {
  std::vector<std::string> order;
  for (const Term& t : c.head.args) collect_vars(t, order);
  for (const Literal& l : c.body)
    for (const Term& t : l.args) collect_vars(t, order);
  std::map<std::string, std::string> names;
  for (size_t i = 0; i < order.size(); ++i)
    names[order[i]] = "X" + std::to_string(i + 1);
  for (Term& t : c.head.args) t = rename_term(t, names);
  for (Literal& l : c.body)
    for (Term& t : l.args) t = rename_term(t, names);
  return c;
}

using Scope = std::map<RefId, Term>;

struct Emitter {
  TranslationState& state;
  const Provenance& origin;
  AssertionTranslation out;

  Term constant_for(const Referent& r) {
    auto it = state.bindings.find(r.id);
    if (it != state.bindings.end()) return it->second;
    Term c = Term::integer(r.id);
    state.bindings.emplace(r.id, c);
    out.fresh_constants.insert(r.id);
    return c;
  }

  Term arg_term(const DrsArg& a, const Scope& scope) {
    switch (a.kind) {
      case DrsArg::Kind::kSym:
        return Term::sym(a.sym);
      case DrsArg::Kind::kNum:
        return Term::integer(a.num);
      case DrsArg::Kind::kRef:
        break;
    }
    auto it = scope.find(a.ref);
    if (it != scope.end()) return it->second;
    auto bound = state.bindings.find(a.ref);
    if (bound != state.bindings.end()) return bound->second;
    throw UnsupportedDrsError("a reference outside its scope");
  }

  Literal literal_of(const Condition& c, const Scope& scope) {
    Literal lit;
    lit.pred = c.pred;
    lit.args.reserve(c.args.size());
    for (const DrsArg& a : c.args) lit.args.push_back(arg_term(a, scope));
    return lit;
  }

  void push(Clause c) { out.clauses.push_back(std::move(c)); }

  void push_fact(Literal lit, int event_tag) {
    Clause fact;
    fact.head = std::move(lit);
    fact.origin = origin;
    if (event_tag != 0) out.event_literals[event_tag] = fact.head;
    push(std::move(fact));
  }

  // Emits the conditions that mention only `r` as facts over its constant.
  // Such facts carry the presupposition of a definite unique reference.
  void presupposition_facts(const Drs& box, const Referent& r,
                            const Term& cst,
                            std::set<const Condition*>* consumed) {
    for (const Condition& c : box.conditions) {
      if (c.kind != Condition::Kind::kAtomic) continue;
      bool about = false;
      bool other = false;
      for (const DrsArg& a : c.args) {
        if (a.kind != DrsArg::Kind::kRef) continue;
        if (a.ref == r.id)
          about = true;
        else
          other = true;
      }
      if (!about || other) continue;
      Literal lit;
      lit.pred = c.pred;
      for (const DrsArg& a : c.args) {
        lit.args.push_back(a.kind == DrsArg::Kind::kRef ? cst
                                                        : arg_term(a, {}));
      }
      push_fact(std::move(lit), 0);
      if (consumed) consumed->insert(&c);
    }
  }

  // Right-nested disjunctions flatten into a list of leaf boxes.
  void expand_disjuncts(const Drs& box, std::vector<const Drs*>& leaves) {
    if (box.referents.empty() && box.conditions.size() == 1 &&
        box.conditions[0].kind == Condition::Kind::kDisjunction) {
      expand_disjuncts(*box.conditions[0].sub1, leaves);
      expand_disjuncts(*box.conditions[0].sub2, leaves);
      return;
    }
    leaves.push_back(&box);
  }

  // One body literal group per disjunct; referents local to the disjunct
  // become variables that never reach skolem argument lists.
  std::vector<Literal> disjunct_literals(const Drs& box, Scope scope) {
    for (const Referent& r : box.referents)
      scope.emplace(r.id, Term::var(scratch_var(r.id)));
    std::vector<Literal> lits;
    append_body(box, scope, lits);
    return lits;
  }

  void append_negation(const Drs& box, Scope scope,
                       std::vector<Literal>& lits) {
    for (const Referent& r : box.referents)
      scope.emplace(r.id, Term::var(scratch_var(r.id)));
    for (const Condition& c : box.conditions) {
      if (c.kind != Condition::Kind::kAtomic)
        throw UnsupportedDrsError("a nested structure inside a negation");
      Literal lit = literal_of(c, scope);
      lit.positive = false;
      lits.push_back(std::move(lit));
    }
  }

  void append_body(const Drs& box, const Scope& scope,
                   std::vector<Literal>& lits) {
    for (const Condition& c : box.conditions) {
      switch (c.kind) {
        case Condition::Kind::kAtomic:
          lits.push_back(literal_of(c, scope));
          break;
        case Condition::Kind::kNegation:
          append_negation(*c.sub1, scope, lits);
          break;
        case Condition::Kind::kIfThen:
          throw UnsupportedDrsError("an embedded conditional");
        case Condition::Kind::kDisjunction:
          throw UnsupportedDrsError("a nested disjunction");
        default:
          break;
      }
    }
  }

  void translate_rule(const Condition& cond) {
    const Drs& k1 = *cond.sub1;
    const Drs& k2 = *cond.sub2;

    Scope scope;
    std::vector<Term> univ;  // skolem arguments: K1's quantified referents
    for (const Referent& r : k1.referents) {
      if (r.unique_definite) {
        Term cst = constant_for(r);
        presupposition_facts(k1, r, cst, nullptr);
        scope.emplace(r.id, std::move(cst));
      } else {
        Term v = Term::var(scratch_var(r.id));
        univ.push_back(v);
        scope.emplace(r.id, std::move(v));
      }
    }

    // Body alternatives: a disjunction in the antecedent multiplies the
    // rule into one clause set per disjunct, all sharing the heads.
    std::vector<std::vector<Literal>> alts{{}};
    for (const Condition& c : k1.conditions) {
      switch (c.kind) {
        case Condition::Kind::kAtomic: {
          Literal lit = literal_of(c, scope);
          for (auto& alt : alts) alt.push_back(lit);
          break;
        }
        case Condition::Kind::kNegation: {
          std::vector<Literal> lits;
          append_negation(*c.sub1, scope, lits);
          for (auto& alt : alts)
            alt.insert(alt.end(), lits.begin(), lits.end());
          break;
        }
        case Condition::Kind::kDisjunction: {
          std::vector<const Drs*> leaves;
          expand_disjuncts(*c.sub1, leaves);
          expand_disjuncts(*c.sub2, leaves);
          std::vector<std::vector<Literal>> next;
          for (const auto& alt : alts) {
            for (const Drs* leaf : leaves) {
              std::vector<Literal> extended = alt;
              for (Literal& l : disjunct_literals(*leaf, scope))
                extended.push_back(std::move(l));
              next.push_back(std::move(extended));
            }
          }
          alts = std::move(next);
          break;
        }
        case Condition::Kind::kIfThen:
          throw UnsupportedDrsError("an embedded conditional");
        default:
          break;
      }
    }

    Scope k2scope = scope;
    std::set<const Condition*> consumed;
    for (const Referent& r : k2.referents) {
      if (r.unique_definite) {
        Term cst = constant_for(r);
        presupposition_facts(k2, r, cst, &consumed);
        k2scope.emplace(r.id, std::move(cst));
      } else {
        out.fresh_skolems.insert(r.id);
        out.skolemized.insert(r.id);
        k2scope.emplace(r.id, Term::skolem(r.id, univ));
      }
    }

    std::vector<Literal> heads;
    for (const Condition& c : k2.conditions) {
      switch (c.kind) {
        case Condition::Kind::kAtomic:
          if (!consumed.count(&c)) heads.push_back(literal_of(c, k2scope));
          break;
        case Condition::Kind::kNegation: {
          const Drs& box = *c.sub1;
          if (!box.referents.empty())
            throw UnsupportedDrsError(
                "a negated consequent that introduces new individuals");
          if (box.conditions.size() != 1 ||
              box.conditions[0].kind != Condition::Kind::kAtomic)
            throw UnsupportedDrsError(
                "a negated consequent with several conditions");
          Literal lit = literal_of(box.conditions[0], k2scope);
          lit.positive = false;
          heads.push_back(std::move(lit));
          break;
        }
        case Condition::Kind::kIfThen:
          throw UnsupportedDrsError("an embedded conditional");
        case Condition::Kind::kDisjunction:
          throw UnsupportedDrsError("a disjunction in a consequent");
        default:
          break;
      }
    }
    if (heads.empty()) return;

    for (const auto& alt : alts) {
      MultiHeadClause group{heads, alt};
      for (Clause& c : group.distribute(origin)) push(canonical(std::move(c)));
    }
  }

  void translate_top(const Drs& drs) {
    for (const Referent& r : drs.referents) constant_for(r);
    for (const Condition& c : drs.conditions) {
      switch (c.kind) {
        case Condition::Kind::kAtomic:
          push_fact(literal_of(c, {}), c.event_tag);
          break;
        case Condition::Kind::kNegation: {
          const Drs& box = *c.sub1;
          Scope scope;
          std::set<const Condition*> consumed;
          for (const Referent& r : box.referents) {
            if (r.unique_definite) {
              Term cst = constant_for(r);
              presupposition_facts(box, r, cst, &consumed);
              scope.emplace(r.id, std::move(cst));
            } else {
              scope.emplace(r.id, Term::var(scratch_var(r.id)));
            }
          }
          std::vector<Literal> lits;
          for (const Condition& ic : box.conditions) {
            if (ic.kind != Condition::Kind::kAtomic)
              throw UnsupportedDrsError(
                  "a nested structure inside a negation");
            if (!consumed.count(&ic)) lits.push_back(literal_of(ic, scope));
          }
          if (lits.empty())
            throw UnsupportedDrsError("an empty negation");
          // The box's final condition is the verb's; it becomes the
          // negated head, conditioned on the box's other conditions.
          Clause neg;
          neg.head = std::move(lits.back());
          neg.head.positive = false;
          lits.pop_back();
          neg.body = std::move(lits);
          neg.origin = origin;
          push(canonical(std::move(neg)));
          break;
        }
        case Condition::Kind::kIfThen:
          translate_rule(c);
          break;
        case Condition::Kind::kDisjunction:
          throw UnsupportedDrsError("a disjunctive assertion");
        default:
          break;
      }
    }
  }
};

}  // namespace

AssertionTranslation translate_assertion(const Drs& drs,
                                         TranslationState& state,
                                         const Provenance& origin) {
  Emitter emitter{state, origin, {}};
  emitter.translate_top(drs);
  return std::move(emitter.out);
}

QueryTranslation translate_query(const Drs& drs,
                                 const std::map<RefId, Term>& bindings,
                                 const std::vector<RefId>& wh_refs) {
  QueryTranslation out;
  Scope scope;
  int next = 1;
  auto var_for = [&](RefId id) -> Term {
    auto it = scope.find(id);
    if (it != scope.end()) return it->second;
    Term v = Term::var("X" + std::to_string(next++));
    scope.emplace(id, v);
    return v;
  };
  for (RefId w : wh_refs) out.wh_vars.push_back(var_for(w).name());
  auto term_of = [&](const DrsArg& a) -> Term {
    switch (a.kind) {
      case DrsArg::Kind::kSym:
        return Term::sym(a.sym);
      case DrsArg::Kind::kNum:
        return Term::integer(a.num);
      case DrsArg::Kind::kRef:
        break;
    }
    auto it = scope.find(a.ref);
    if (it != scope.end()) return it->second;
    auto bound = bindings.find(a.ref);
    if (bound != bindings.end()) return bound->second;
    return var_for(a.ref);
  };
  auto literal_of = [&](const Condition& c) {
    Literal lit;
    lit.pred = c.pred;
    for (const DrsArg& a : c.args) lit.args.push_back(term_of(a));
    return lit;
  };
  for (const Condition& c : drs.conditions) {
    switch (c.kind) {
      case Condition::Kind::kAtomic:
        out.goals.push_back(literal_of(c));
        break;
      case Condition::Kind::kNegation:
        for (const Condition& ic : c.sub1->conditions) {
          if (ic.kind != Condition::Kind::kAtomic)
            throw UnsupportedDrsError("a nested structure inside a negation");
          Literal lit = literal_of(ic);
          lit.positive = false;
          out.goals.push_back(std::move(lit));
        }
        break;
      case Condition::Kind::kIfThen:
        throw UnsupportedDrsError("a conditional question");
      case Condition::Kind::kDisjunction:
        throw UnsupportedDrsError("a disjunctive question");
      default:
        break;
    }
  }
  return out;
}

}  // namespace cnl
