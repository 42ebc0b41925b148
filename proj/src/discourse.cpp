#include "cnl/discourse.hpp"

#include <algorithm>

#include "cnl/errors.hpp"

namespace cnl {
namespace {

bool gender_compatible(const std::vector<Gender>& a,
                       const std::vector<Gender>& b) {
  if (a.empty() || b.empty()) return true;
  for (Gender g : a)
    if (std::find(b.begin(), b.end(), g) != b.end()) return true;
  return false;
}

bool number_compatible(std::optional<NumberFeature> a,
                       std::optional<NumberFeature> b) {
  return !a || !b || *a == *b;
}

// True when the referent is described by the noun predicate somewhere in
// the structure.
bool described_as(const Drs& drs, RefId id, const std::string& noun_pred) {
  for (const Condition* c : conditions_about(drs, id)) {
    if (c->pred != noun_pred) continue;
    if (c->args.size() == 1 && c->args[0].kind == DrsArg::Kind::kRef &&
        c->args[0].ref == id)
      return true;
  }
  return false;
}

Referent* referent_in_box(Drs& box, RefId id) {
  for (auto& r : box.referents)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

void Discourse::clear() {
  context_ = Drs{};
  next_ref_ = 1;
}

void Discourse::restart(RefId next_ref) {
  context_ = Drs{};
  next_ref_ = next_ref;
}

const Referent* Discourse::named_referent(const std::string& name) const {
  for (const auto& r : context_.referents)
    if (r.proper_name == name) return &r;
  return nullptr;
}

ResolvedSentence Discourse::resolve(const ParseResult& reading,
                                    bool query) const {
  ResolvedSentence out;
  out.increment = reading.drs;

  // Structural edits are deferred until every placeholder path has been
  // used: erasing or moving a condition would shift the condition indexes
  // that later paths step through. Box pointers stay valid because sub-DRSs
  // live behind unique_ptr.
  struct PendingEdit {
    Drs* box = nullptr;
    RefId ref = 0;
    std::string pred;      // the introducing condition to remove
    bool promote = false;  // move referent and condition to the top instead
  };
  std::vector<PendingEdit> pending;

  // Antecedent candidates for a placeholder: referents accessible within
  // the increment, then the context's top level, most recent first. Only
  // referents introduced before the placeholder count.
  auto candidates = [&](const Placeholder& ph) {
    std::vector<const Referent*> cands;
    for (const Referent* r : accessible_referents(out.increment, ph.path))
      if (r->id < ph.ref) cands.push_back(r);
    for (auto it = context_.referents.rbegin(); it != context_.referents.rend();
         ++it)
      cands.push_back(&*it);
    return cands;
  };

  auto equate = [&](const Placeholder& ph, RefId antecedent) {
    Drs* box = drs_at(out.increment, ph.path);
    int sent = 0;
    if (const Referent* r = find_referent(out.increment, ph.ref))
      sent = r->sentence;
    box->conditions.push_back(Condition::equality(ph.ref, antecedent, sent));
  };

  for (const Placeholder& ph : reading.placeholders) {
    ResolutionNote note;
    note.kind = ph.kind;
    note.from = ph.ref;
    note.surface = ph.surface;
    note.token = ph.token;
    switch (ph.kind) {
      case Placeholder::Kind::kPronoun: {
        const Referent* found = nullptr;
        for (const Referent* r : candidates(ph)) {
          if (!gender_compatible(ph.gender, r->gender)) continue;
          if (!number_compatible(ph.number, r->number)) continue;
          found = r;
          break;
        }
        if (!found) {
          int sent = 1;
          if (const Referent* r = find_referent(out.increment, ph.ref))
            sent = r->sentence;
          throw UnresolvedPronounError(ph.surface, sent, ph.token + 1);
        }
        note.to = found->id;
        equate(ph, found->id);
        break;
      }
      case Placeholder::Kind::kProper: {
        const Referent* found = nullptr;
        // Names are unique: an earlier mention anywhere wins, preferring
        // the one introduced first.
        for (const auto& r : context_.referents)
          if (r.proper_name == ph.noun_pred) {
            found = &r;
            break;
          }
        if (!found)
          for (const auto& r : out.increment.referents)
            if (r.id < ph.ref && r.proper_name == ph.noun_pred) {
              found = &r;
              break;
            }
        if (found) {
          note.to = found->id;
          // An assertion adds nothing by restating the name; queries keep
          // the condition so the goal list names the individual.
          if (!query)
            pending.push_back(
                {drs_at(out.increment, ph.path), ph.ref, "named", false});
          equate(ph, found->id);
          break;
        }
        if (query) {
          note.open = true;
          break;
        }
        note.created = true;
        // First mention: a name denotes at the discourse top level, so a
        // referent introduced inside a sub-DRS moves out, along with its
        // naming condition.
        if (!ph.path.empty())
          pending.push_back(
              {drs_at(out.increment, ph.path), ph.ref, "named", true});
        break;
      }
      case Placeholder::Kind::kDefinite: {
        const Referent* found = nullptr;
        for (const Referent* r : candidates(ph)) {
          if (!gender_compatible(ph.gender, r->gender)) continue;
          if (!number_compatible(ph.number, r->number)) continue;
          if (described_as(out.increment, r->id, ph.noun_pred) ||
              described_as(context_, r->id, ph.noun_pred)) {
            found = r;
            break;
          }
        }
        if (found) {
          note.to = found->id;
          // The antecedent is already described by this noun; an assertion
          // restating it would clutter the surrounding structure.
          if (!query)
            pending.push_back({drs_at(out.increment, ph.path), ph.ref,
                               ph.noun_pred, false});
          equate(ph, found->id);
        } else if (query) {
          note.open = true;
        } else {
          // No antecedent: the definite opens a unique reference. The
          // individual is presupposed to exist outright, so it moves to the
          // discourse top level where later sentences can reach it.
          note.unique = true;
          Drs* box = drs_at(out.increment, ph.path);
          if (Referent* r = referent_in_box(*box, ph.ref))
            r->unique_definite = true;
          if (!ph.path.empty())
            pending.push_back({box, ph.ref, ph.noun_pred, true});
        }
        break;
      }
    }
    out.notes.push_back(std::move(note));
  }

  for (const PendingEdit& p : pending) {
    if (p.promote) {
      // Every condition describing only this referent moves with it: the
      // introducing noun or name, adjectives, agreement conditions.
      auto describes_only = [&](const Condition& c) {
        if (c.kind != Condition::Kind::kAtomic &&
            c.kind != Condition::Kind::kGender &&
            c.kind != Condition::Kind::kNumber)
          return false;
        bool mentions = false;
        for (const DrsArg& a : c.args) {
          if (a.kind != DrsArg::Kind::kRef) continue;
          if (a.ref == p.ref)
            mentions = true;
          else
            return false;
        }
        return mentions;
      };
      auto& conds = p.box->conditions;
      for (auto it = conds.begin(); it != conds.end();) {
        if (describes_only(*it)) {
          out.increment.conditions.push_back(*it);
          it = conds.erase(it);
        } else {
          ++it;
        }
      }
      auto rit = std::find_if(
          p.box->referents.begin(), p.box->referents.end(),
          [&](const Referent& r) { return r.id == p.ref; });
      if (rit != p.box->referents.end()) {
        out.increment.referents.push_back(*rit);
        p.box->referents.erase(rit);
      }
    } else {
      auto cit = std::find_if(
          p.box->conditions.begin(), p.box->conditions.end(),
          [&](const Condition& c) {
            return c.kind == Condition::Kind::kAtomic && c.pred == p.pred &&
                   !c.args.empty() && c.args[0].kind == DrsArg::Kind::kRef &&
                   c.args[0].ref == p.ref;
          });
      if (cit != p.box->conditions.end()) p.box->conditions.erase(cit);
    }
  }

  out.simplified = simplify(out.increment);
  return out;
}

void Discourse::accept(const ResolvedSentence& resolved, RefId next_ref) {
  context_ = simplify(merge(context_, resolved.simplified));
  next_ref_ = std::max(next_ref_, next_ref);
}

}  // namespace cnl
