#include "cnl/drs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cnl/errors.hpp"
#include "cnl/text_util.hpp"

namespace cnl {

DrsArg DrsArg::of_ref(RefId id) {
  DrsArg a;
  a.kind = Kind::kRef;
  a.ref = id;
  return a;
}

DrsArg DrsArg::of_sym(std::string s) {
  DrsArg a;
  a.kind = Kind::kSym;
  a.sym = std::move(s);
  return a;
}

DrsArg DrsArg::of_num(long n) {
  DrsArg a;
  a.kind = Kind::kNum;
  a.num = n;
  return a;
}

bool DrsArg::operator==(const DrsArg& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::kRef: return ref == other.ref;
    case Kind::kSym: return sym == other.sym;
    case Kind::kNum: return num == other.num;
  }
  return false;
}

std::string DrsArg::render() const {
  switch (kind) {
    case Kind::kRef: return "X" + std::to_string(ref);
    case Kind::kSym: return sym;
    case Kind::kNum: return std::to_string(num);
  }
  return "?";
}

Condition::Condition(const Condition& other)
    : kind(other.kind),
      sentence(other.sentence),
      event_tag(other.event_tag),
      pred(other.pred),
      args(other.args),
      gender(other.gender),
      number(other.number) {
  if (other.sub1) sub1 = std::make_unique<Drs>(*other.sub1);
  if (other.sub2) sub2 = std::make_unique<Drs>(*other.sub2);
}

Condition& Condition::operator=(const Condition& other) {
  if (this == &other) return *this;
  Condition tmp(other);
  *this = std::move(tmp);
  return *this;
}

Condition Condition::atomic(std::string pred, std::vector<DrsArg> args,
                            int sentence) {
  Condition c;
  c.kind = Kind::kAtomic;
  c.pred = std::move(pred);
  c.args = std::move(args);
  c.sentence = sentence;
  return c;
}

Condition Condition::equality(RefId left, RefId right, int sentence) {
  Condition c;
  c.kind = Kind::kEquality;
  c.args = {DrsArg::of_ref(left), DrsArg::of_ref(right)};
  c.sentence = sentence;
  return c;
}

Condition Condition::negation(Drs sub, int sentence) {
  Condition c;
  c.kind = Kind::kNegation;
  c.sub1 = std::make_unique<Drs>(std::move(sub));
  c.sentence = sentence;
  return c;
}

Condition Condition::ifthen(Drs antecedent, Drs consequent, int sentence) {
  Condition c;
  c.kind = Kind::kIfThen;
  c.sub1 = std::make_unique<Drs>(std::move(antecedent));
  c.sub2 = std::make_unique<Drs>(std::move(consequent));
  c.sentence = sentence;
  return c;
}

Condition Condition::disjunction(Drs left, Drs right, int sentence) {
  Condition c;
  c.kind = Kind::kDisjunction;
  c.sub1 = std::make_unique<Drs>(std::move(left));
  c.sub2 = std::make_unique<Drs>(std::move(right));
  c.sentence = sentence;
  return c;
}

Condition Condition::gender_of(RefId ref, std::vector<Gender> set,
                               int sentence) {
  Condition c;
  c.kind = Kind::kGender;
  c.args = {DrsArg::of_ref(ref)};
  c.gender = std::move(set);
  c.sentence = sentence;
  return c;
}

Condition Condition::number_of(RefId ref, NumberFeature n, int sentence) {
  Condition c;
  c.kind = Kind::kNumber;
  c.args = {DrsArg::of_ref(ref)};
  c.number = n;
  c.sentence = sentence;
  return c;
}

bool Condition::same_content(const Condition& other) const {
  if (kind != other.kind || pred != other.pred || !(args == other.args) ||
      gender != other.gender || number != other.number)
    return false;
  auto same_sub = [](const std::unique_ptr<Drs>& a,
                     const std::unique_ptr<Drs>& b) {
    if (!a != !b) return false;
    if (!a) return true;
    return a->render_term() == b->render_term();
  };
  return same_sub(sub1, other.sub1) && same_sub(sub2, other.sub2);
}

namespace {

std::string render_gender_set(const std::vector<Gender>& set) {
  if (set.size() == 1) return gender_name(set[0]);
  std::vector<std::string> names;
  for (Gender g : set) names.push_back(gender_name(g));
  return "[" + join(names, ",") + "]";
}

std::string render_universe(const Drs& drs, const Drs* antecedent) {
  std::vector<std::string> names;
  for (const auto& r : drs.referents) names.push_back(r.display());
  if (antecedent)
    for (const auto& r : antecedent->referents) names.push_back(r.display());
  return "[" + join(names, ",") + "]";
}

std::string render_term_inner(const Drs& drs, const Drs* antecedent);

std::string render_condition_term(const Condition& c) {
  switch (c.kind) {
    case Condition::Kind::kAtomic: {
      std::vector<std::string> parts;
      for (const auto& a : c.args) parts.push_back(a.render());
      return c.pred + "(" + join(parts, ",") + ")";
    }
    case Condition::Kind::kEquality:
      return c.args[0].render() + "=" + c.args[1].render();
    case Condition::Kind::kGender:
      return "gender(" + c.args[0].render() + "," +
             render_gender_set(c.gender) + ")";
    case Condition::Kind::kNumber:
      return "number(" + c.args[0].render() + "," + number_name(*c.number) +
             ")";
    case Condition::Kind::kNegation:
      return "not(" + render_term_inner(*c.sub1, nullptr) + ")";
    case Condition::Kind::kIfThen:
      return "ifthen(" + render_term_inner(*c.sub1, nullptr) + "," +
             render_term_inner(*c.sub2, c.sub1.get()) + ")";
    case Condition::Kind::kDisjunction:
      return "or(" + render_term_inner(*c.sub1, nullptr) + "," +
             render_term_inner(*c.sub2, nullptr) + ")";
  }
  return "?";
}

std::string render_term_inner(const Drs& drs, const Drs* antecedent) {
  std::vector<std::string> conds;
  for (const auto& c : drs.conditions) conds.push_back(render_condition_term(c));
  return "drs(" + render_universe(drs, antecedent) + ",[" + join(conds, ",") +
         "])";
}

void render_box_inner(const Drs& drs, const std::string& indent,
                      std::string& out) {
  std::vector<std::string> names;
  for (const auto& r : drs.referents) names.push_back(r.display());
  out += indent + "[ " + join(names, " ") + " ]\n";
  for (const auto& c : drs.conditions) {
    switch (c.kind) {
      case Condition::Kind::kNegation:
        out += indent + "  NOT\n";
        render_box_inner(*c.sub1, indent + "    ", out);
        break;
      case Condition::Kind::kIfThen:
        out += indent + "  IF\n";
        render_box_inner(*c.sub1, indent + "    ", out);
        out += indent + "  THEN\n";
        render_box_inner(*c.sub2, indent + "    ", out);
        break;
      case Condition::Kind::kDisjunction:
        out += indent + "  EITHER\n";
        render_box_inner(*c.sub1, indent + "    ", out);
        out += indent + "  OR\n";
        render_box_inner(*c.sub2, indent + "    ", out);
        break;
      default:
        out += indent + "  " + render_condition_term(c) + "\n";
    }
  }
}

}  // namespace

std::string Drs::render_term() const { return render_term_inner(*this, nullptr); }

std::string Drs::render_box() const {
  std::string out;
  render_box_inner(*this, "", out);
  return out;
}

namespace {

void collect_ids(const Drs& drs, std::set<RefId>& out) {
  for (const auto& r : drs.referents) {
    if (out.count(r.id)) throw DuplicateReferentError(r.id);
    out.insert(r.id);
  }
  for (const auto& c : drs.conditions) {
    if (c.sub1) collect_ids(*c.sub1, out);
    if (c.sub2) collect_ids(*c.sub2, out);
  }
}

}  // namespace

Drs merge(const Drs& a, const Drs& b) {
  std::set<RefId> ids;
  collect_ids(a, ids);
  {
    std::set<RefId> b_ids;
    collect_ids(b, b_ids);
    for (RefId id : b_ids)
      if (ids.count(id)) throw DuplicateReferentError(id);
  }
  Drs out = a;
  out.referents.insert(out.referents.end(), b.referents.begin(),
                       b.referents.end());
  out.conditions.insert(out.conditions.end(), b.conditions.begin(),
                        b.conditions.end());
  return out;
}

const Drs* drs_at(const Drs& root, const DrsPath& path) {
  const Drs* cur = &root;
  for (const auto& step : path) {
    if (step.cond_index < 0 ||
        step.cond_index >= static_cast<int>(cur->conditions.size()))
      return nullptr;
    const Condition& c = cur->conditions[step.cond_index];
    const Drs* next = step.branch == 0 ? c.sub1.get() : c.sub2.get();
    if (!next) return nullptr;
    cur = next;
  }
  return cur;
}

Drs* drs_at(Drs& root, const DrsPath& path) {
  return const_cast<Drs*>(drs_at(static_cast<const Drs&>(root), path));
}

std::vector<const Referent*> accessible_referents(const Drs& drs,
                                                  const DrsPath& path) {
  std::vector<const Referent*> out;
  auto add_level = [&](const Drs* level) {
    for (auto it = level->referents.rbegin(); it != level->referents.rend();
         ++it)
      out.push_back(&*it);
  };
  // Walk from the innermost box outwards. When the step into a box entered a
  // consequent, the matching antecedent box is visible in between.
  for (size_t depth = path.size() + 1; depth-- > 0;) {
    DrsPath prefix(path.begin(), path.begin() + depth);
    const Drs* level = drs_at(drs, prefix);
    if (!level) continue;
    if (depth == path.size()) {
      add_level(level);
      continue;
    }
    const PathStep& step = path[depth];
    const Condition& c = level->conditions[step.cond_index];
    if (c.kind == Condition::Kind::kIfThen && step.branch == 1)
      add_level(c.sub1.get());
    add_level(level);
  }
  return out;
}

const Referent* find_referent(const Drs& drs, RefId id) {
  for (const auto& r : drs.referents)
    if (r.id == id) return &r;
  for (const auto& c : drs.conditions) {
    for (const Drs* sub : {c.sub1.get(), c.sub2.get()}) {
      if (!sub) continue;
      if (const Referent* r = find_referent(*sub, id)) return r;
    }
  }
  return nullptr;
}

std::vector<const Condition*> conditions_about(const Drs& drs, RefId id) {
  std::vector<const Condition*> out;
  for (const auto& c : drs.conditions) {
    if (c.kind == Condition::Kind::kAtomic) {
      for (const auto& a : c.args)
        if (a.kind == DrsArg::Kind::kRef && a.ref == id) {
          out.push_back(&c);
          break;
        }
    }
    for (const Drs* sub : {c.sub1.get(), c.sub2.get()}) {
      if (!sub) continue;
      auto inner = conditions_about(*sub, id);
      out.insert(out.end(), inner.begin(), inner.end());
    }
  }
  return out;
}

namespace {

// Union-find over referent ids; the class representative is the smallest id,
// i.e. the referent introduced first.
struct RefUnion {
  std::map<RefId, RefId> parent;

  RefId find(RefId x) {
    auto it = parent.find(x);
    if (it == parent.end()) return x;
    RefId root = find(it->second);
    parent[x] = root;
    return root;
  }

  void merge(RefId a, RefId b) {
    RefId ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (ra < rb)
      parent[rb] = ra;
    else
      parent[ra] = rb;
  }
};

bool is_ref_equality(const Condition& c) {
  if (c.kind == Condition::Kind::kEquality) return true;
  // is/2 over two referents means identity of the described individuals.
  return c.kind == Condition::Kind::kAtomic && c.pred == "is" &&
         c.args.size() == 2 && c.args[0].kind == DrsArg::Kind::kRef &&
         c.args[1].kind == DrsArg::Kind::kRef;
}

void gather_equalities(const Drs& drs, RefUnion& uf) {
  for (const auto& c : drs.conditions) {
    if (is_ref_equality(c)) uf.merge(c.args[0].ref, c.args[1].ref);
    if (c.sub1) gather_equalities(*c.sub1, uf);
    if (c.sub2) gather_equalities(*c.sub2, uf);
  }
}

void gather_referents(const Drs& drs, std::map<RefId, const Referent*>& out) {
  for (const auto& r : drs.referents) out.emplace(r.id, &r);
  for (const auto& c : drs.conditions) {
    if (c.sub1) gather_referents(*c.sub1, out);
    if (c.sub2) gather_referents(*c.sub2, out);
  }
}

std::vector<Gender> intersect_gender(const std::vector<Gender>& a,
                                     const std::vector<Gender>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Gender> out;
  for (Gender g : a)
    if (std::find(b.begin(), b.end(), g) != b.end()) out.push_back(g);
  return out.empty() ? a : out;
}

void substitute(Drs& drs, RefUnion& uf,
                const std::map<RefId, const Referent*>& info) {
  // Referent lists keep only class representatives, with merged agreement.
  std::vector<Referent> kept;
  for (auto& r : drs.referents) {
    if (uf.find(r.id) != r.id) continue;
    Referent merged = r;
    for (const auto& [id, other] : info) {
      if (id == r.id || uf.find(id) != r.id) continue;
      merged.gender = intersect_gender(merged.gender, other->gender);
      if (!merged.number) merged.number = other->number;
      merged.unique_definite = merged.unique_definite || other->unique_definite;
      if (merged.proper_name.empty()) merged.proper_name = other->proper_name;
    }
    kept.push_back(std::move(merged));
  }
  drs.referents = std::move(kept);

  std::vector<Condition> conditions;
  for (auto& c : drs.conditions) {
    if (is_ref_equality(c)) continue;
    if (c.kind == Condition::Kind::kGender ||
        c.kind == Condition::Kind::kNumber)
      continue;
    for (auto& a : c.args)
      if (a.kind == DrsArg::Kind::kRef) a.ref = uf.find(a.ref);
    if (c.sub1) substitute(*c.sub1, uf, info);
    if (c.sub2) substitute(*c.sub2, uf, info);
    conditions.push_back(std::move(c));
  }
  drs.conditions = std::move(conditions);
}

// Removes conditions whose content duplicates an accessible earlier
// condition. `visible` carries the conditions of the enclosing boxes (and of
// the antecedent, inside a consequent).
void dedupe(Drs& drs, std::vector<const Condition*> visible) {
  std::vector<Condition> kept;
  for (auto& c : drs.conditions) {
    if (c.kind == Condition::Kind::kAtomic) {
      bool dup = false;
      for (const Condition* v : visible)
        if (v->kind == Condition::Kind::kAtomic && v->same_content(c)) {
          dup = true;
          break;
        }
      if (dup) continue;
    }
    kept.push_back(std::move(c));
  }
  drs.conditions = std::move(kept);
  for (auto& c : drs.conditions) {
    if (c.kind == Condition::Kind::kAtomic) visible.push_back(&c);
  }
  for (auto& c : drs.conditions) {
    if (c.kind == Condition::Kind::kIfThen) {
      auto inner = visible;
      dedupe(*c.sub1, inner);
      auto cons = visible;
      for (const auto& ac : c.sub1->conditions)
        if (ac.kind == Condition::Kind::kAtomic) cons.push_back(&ac);
      dedupe(*c.sub2, cons);
    } else if (c.sub1) {
      dedupe(*c.sub1, visible);
      if (c.sub2) dedupe(*c.sub2, visible);
    }
  }
}

}  // namespace

Drs simplify(const Drs& drs) {
  Drs out = drs;
  RefUnion uf;
  gather_equalities(out, uf);
  std::map<RefId, const Referent*> info;
  gather_referents(drs, info);
  substitute(out, uf, info);
  dedupe(out, {});
  return out;
}

}  // namespace cnl
