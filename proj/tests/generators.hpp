// Random generators for the property suites. Everything is seeded, so a
// failure reproduces from the reported seed.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "cnl/drs.hpp"
#include "cnl/feature_structure.hpp"

namespace cnl::testing {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename T>
const T& pick_one(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<size_t>(pick(rng, 0, static_cast<int>(items.size()) - 1))];
}

// Feature structures over a small alphabet, nested up to `depth`.
inline FeatureValue random_value(Rng& rng, int depth);

inline FeatureStructure random_structure(Rng& rng, int depth) {
  static const std::vector<std::string> features = {"gender", "number",
                                                    "person", "case", "agr"};
  FeatureStructure fs;
  int width = pick(rng, 0, 3);
  for (int i = 0; i < width; ++i) {
    auto with =
        fs.put({pick_one(rng, features)}, random_value(rng, depth - 1));
    if (with) fs = *with;
  }
  return fs;
}

inline FeatureValue random_value(Rng& rng, int depth) {
  static const std::vector<std::string> atoms = {"m", "f", "n", "sg", "pl",
                                                 "one", "two", "three"};
  int kind = pick(rng, 0, depth > 0 ? 2 : 1);
  if (kind == 0) return FeatureValue::atom(pick_one(rng, atoms));
  if (kind == 1) {
    std::vector<std::string> items;
    int n = pick(rng, 1, 3);
    for (int i = 0; i < n; ++i) items.push_back(pick_one(rng, atoms));
    return FeatureValue::atom_set(std::move(items));
  }
  return FeatureValue::nested(random_structure(rng, depth));
}

// Random well-formed DRSs: unique referent ids, conditions over declared
// (or enclosing) referents, sub-boxes for negation and implication.
inline void random_drs_into(Rng& rng, Drs& box, std::vector<RefId>& scope,
                            RefId& next, int depth) {
  static const std::vector<std::string> preds = {"p", "q", "r", "s"};
  int locals = pick(rng, depth > 0 ? 0 : 1, 2);
  for (int i = 0; i < locals; ++i) {
    Referent r;
    r.id = next++;
    r.sentence = 1;
    box.referents.push_back(r);
    scope.push_back(r.id);
  }
  int conds = pick(rng, 1, 3);
  for (int i = 0; i < conds; ++i) {
    int kind = pick(rng, 0, depth > 0 ? 4 : 2);
    if (kind <= 1 || scope.empty()) {
      std::vector<DrsArg> args;
      int arity = pick(rng, 1, 2);
      for (int a = 0; a < arity; ++a) {
        if (!scope.empty() && pick(rng, 0, 3) > 0)
          args.push_back(DrsArg::of_ref(pick_one(rng, scope)));
        else
          args.push_back(DrsArg::of_num(pick(rng, 1, 5)));
      }
      box.conditions.push_back(
          Condition::atomic(pick_one(rng, preds), std::move(args), 1));
    } else if (kind == 2 && scope.size() >= 2) {
      RefId left = pick_one(rng, scope);
      RefId right = pick_one(rng, scope);
      if (left != right)
        box.conditions.push_back(
            Condition::equality(std::max(left, right), std::min(left, right), 1));
    } else if (kind == 3) {
      Drs sub;
      auto inner = scope;
      random_drs_into(rng, sub, inner, next, depth - 1);
      box.conditions.push_back(Condition::negation(std::move(sub), 1));
    } else {
      Drs ant, cons;
      auto inner = scope;
      random_drs_into(rng, ant, inner, next, depth - 1);
      random_drs_into(rng, cons, inner, next, depth - 1);
      box.conditions.push_back(
          Condition::ifthen(std::move(ant), std::move(cons), 1));
    }
  }
}

inline Drs random_drs(Rng& rng) {
  Drs box;
  std::vector<RefId> scope;
  RefId next = 1;
  random_drs_into(rng, box, scope, next, 2);
  return box;
}

// Random corpus sentences over the built-in vocabulary. Every form is
// grammatical and unambiguous; subjects are singular throughout.
inline std::string random_sentence(Rng& rng) {
  static const std::vector<std::string> nouns = {
      "customer", "card", "machine", "number", "personal code"};
  static const std::vector<std::string> verbs = {"enter", "check", "accept",
                                                 "reject"};
  static const std::vector<std::string> adjectives = {"simple", "valid",
                                                      "personal"};
  auto np = [&](bool allow_every) {
    int kind = pick(rng, 0, allow_every ? 2 : 1);
    if (kind == 0) return std::string("SimpleMat");
    std::string det = kind == 2 ? "every " : "a ";
    std::string adj = pick(rng, 0, 1) ? pick_one(rng, adjectives) + " " : "";
    return det + adj + pick_one(rng, nouns);
  };
  int form = pick(rng, 0, 3);
  if (form == 0)
    return np(true) + " " + pick_one(rng, verbs) + "s " + np(false) + ".";
  if (form == 1) {
    // A universally quantified subject equated with one individual falls
    // outside the clause fragment, so the object stays indefinite there.
    std::string subj = np(true);
    std::string obj = np(false);
    if (subj.rfind("every ", 0) == 0)
      while (obj == "SimpleMat") obj = np(false);
    return subj + " is " + obj + ".";
  }
  if (form == 2) {
    // Negation under a universal may not introduce an individual; keep the
    // subject unquantified.
    return np(false) + " does not " + pick_one(rng, verbs) + " " + np(false) +
           ".";
  }
  return "If " + np(false) + " " + pick_one(rng, verbs) + "s " + np(false) +
         " then SimpleMat " + pick_one(rng, verbs) + "s " + np(false) + ".";
}

}  // namespace cnl::testing
