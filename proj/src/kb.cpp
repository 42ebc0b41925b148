#include "cnl/kb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cnl/errors.hpp"

namespace cnl {

namespace {

// One consistent mapping of a batch's fresh terms onto stored terms:
// fresh constants map to ground stored terms, fresh skolem indices map
// bijectively to stored indices, variables correspond bijectively per
// clause pair.
struct SigmaState {
  std::map<long, Term> consts;
  std::map<int, int> skolems;
  std::set<int> skolem_targets;
};

struct VarBijection {
  std::map<std::string, std::string> fwd;
  std::map<std::string, std::string> rev;
};

bool ground_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return false;
    case Term::Kind::kSkolem:
      for (const Term& a : t.args())
        if (!ground_term(a)) return false;
      return true;
    default:
      return true;
  }
}

bool sigma_term(const Term& fresh, const Term& stored, SigmaState& st,
                VarBijection& vars, const std::set<long>& fresh_consts,
                const std::set<int>& fresh_skolems) {
  switch (fresh.kind()) {
    case Term::Kind::kVar: {
      if (stored.kind() != Term::Kind::kVar) return false;
      auto f = vars.fwd.find(fresh.name());
      auto r = vars.rev.find(stored.name());
      if (f != vars.fwd.end()) return f->second == stored.name();
      if (r != vars.rev.end()) return false;
      vars.fwd.emplace(fresh.name(), stored.name());
      vars.rev.emplace(stored.name(), fresh.name());
      return true;
    }
    case Term::Kind::kSym:
      return stored.kind() == Term::Kind::kSym &&
             stored.name() == fresh.name();
    case Term::Kind::kInt: {
      if (!fresh_consts.count(fresh.value()))
        return stored.kind() == Term::Kind::kInt &&
               stored.value() == fresh.value();
      if (!ground_term(stored)) return false;
      auto it = st.consts.find(fresh.value());
      if (it != st.consts.end()) return it->second == stored;
      st.consts.emplace(fresh.value(), stored);
      return true;
    }
    case Term::Kind::kSkolem: {
      if (stored.kind() != Term::Kind::kSkolem) return false;
      if (stored.args().size() != fresh.args().size()) return false;
      int fi = fresh.skolem_index();
      int si = stored.skolem_index();
      if (fresh_skolems.count(fi)) {
        auto it = st.skolems.find(fi);
        if (it != st.skolems.end()) {
          if (it->second != si) return false;
        } else {
          if (st.skolem_targets.count(si)) return false;
          st.skolems.emplace(fi, si);
          st.skolem_targets.insert(si);
        }
      } else if (fi != si) {
        return false;
      }
      for (size_t i = 0; i < fresh.args().size(); ++i)
        if (!sigma_term(fresh.args()[i], stored.args()[i], st, vars,
                        fresh_consts, fresh_skolems))
          return false;
      return true;
    }
  }
  return false;
}

bool sigma_literal(const Literal& fresh, const Literal& stored,
                   SigmaState& st, VarBijection& vars,
                   const std::set<long>& fresh_consts,
                   const std::set<int>& fresh_skolems) {
  if (fresh.positive != stored.positive || fresh.pred != stored.pred ||
      fresh.args.size() != stored.args.size())
    return false;
  for (size_t i = 0; i < fresh.args.size(); ++i)
    if (!sigma_term(fresh.args[i], stored.args[i], st, vars, fresh_consts,
                    fresh_skolems))
      return false;
  return true;
}

bool sigma_clause(const Clause& fresh, const Clause& stored, SigmaState& st,
                  const std::set<long>& fresh_consts,
                  const std::set<int>& fresh_skolems) {
  if (fresh.body.size() != stored.body.size()) return false;
  VarBijection vars;
  if (!sigma_literal(fresh.head, stored.head, st, vars, fresh_consts,
                     fresh_skolems))
    return false;
  for (size_t i = 0; i < fresh.body.size(); ++i)
    if (!sigma_literal(fresh.body[i], stored.body[i], st, vars, fresh_consts,
                       fresh_skolems))
      return false;
  return true;
}

bool sigma_match(const std::vector<Clause>& batch,
                 const std::vector<Clause>& stored, size_t index,
                 SigmaState& st, const std::set<long>& fresh_consts,
                 const std::set<int>& fresh_skolems) {
  if (index == batch.size()) return true;
  for (const Clause& candidate : stored) {
    SigmaState saved = st;
    if (sigma_clause(batch[index], candidate, st, fresh_consts,
                     fresh_skolems) &&
        sigma_match(batch, stored, index + 1, st, fresh_consts,
                    fresh_skolems))
      return true;
    st = std::move(saved);
  }
  return false;
}

// True when the two facts' argument lists unify after renaming apart.
bool facts_unify(const Clause& a, const Clause& b) {
  if (a.head.pred != b.head.pred || a.head.args.size() != b.head.args.size())
    return false;
  Clause ra = rename_clause(a, 1);
  Clause rb = rename_clause(b, 2);
  Bindings bind;
  std::vector<std::string> trail;
  for (size_t i = 0; i < ra.head.args.size(); ++i)
    if (!unify_terms(ra.head.args[i], rb.head.args[i], bind, trail))
      return false;
  return true;
}

}  // namespace

AssimilationResult KnowledgeBase::assimilate(
    const std::vector<Clause>& batch, const std::set<long>& fresh_constants,
    const std::set<int>& fresh_skolems) {
  AssimilationResult result;

  // Consistency: an incoming fact may not unify with any negative fact
  // (stored or incoming), nor an incoming negative fact with any fact.
  auto clash = [&](const Clause& incoming) -> const Clause* {
    bool want_negative = incoming.is_fact();
    if (!want_negative && !incoming.is_negative_fact()) return nullptr;
    auto scan = [&](const std::vector<Clause>& pool) -> const Clause* {
      for (const Clause& other : pool) {
        if (&other == &incoming) continue;
        bool other_negative = other.is_negative_fact();
        if (want_negative != other_negative) continue;
        if (!other_negative && !other.is_fact()) continue;
        if (facts_unify(incoming, other)) return &other;
      }
      return nullptr;
    };
    if (const Clause* c = scan(clauses_)) return c;
    return scan(batch);
  };
  for (const Clause& c : batch) {
    if (const Clause* other = clash(c)) {
      result.outcome = AssimilationResult::Outcome::kInconsistent;
      result.conflict = c.render() + " contradicts " + other->render();
      return result;
    }
  }

  // Whole-batch redundancy under one substitution.
  if (!batch.empty()) {
    SigmaState st;
    if (sigma_match(batch, clauses_, 0, st, fresh_constants,
                    fresh_skolems)) {
      result.outcome = AssimilationResult::Outcome::kRedundant;
      result.constant_map = std::move(st.consts);
      result.dropped = static_cast<int>(batch.size());
      return result;
    }
  }

  // Per-clause redundancy: variants, facts below a stored fact, and rules
  // whose head a stored fact already covers.
  auto redundant = [&](const Clause& c) {
    for (const Clause& stored : clauses_) {
      if (variant_clauses(c, stored)) return true;
      if (stored.is_fact() && c.head.positive &&
          subsumes_literal(stored.head, c.head))
        return true;
    }
    return false;
  };
  std::vector<Clause> kept;
  for (const Clause& c : batch) {
    if (redundant(c))
      ++result.dropped;
    else
      kept.push_back(c);
  }
  if (kept.empty()) {
    result.outcome = AssimilationResult::Outcome::kRedundant;
    return result;
  }
  result.added = static_cast<int>(kept.size());
  for (Clause& c : kept) clauses_.push_back(std::move(c));
  return result;
}

std::optional<long> KnowledgeBase::constant_for_name(
    const std::string& name) const {
  for (const Clause& c : clauses_) {
    if (!c.is_fact() || c.head.pred != "named" || c.head.args.size() != 2)
      continue;
    if (c.head.args[0].kind() == Term::Kind::kInt &&
        c.head.args[1].kind() == Term::Kind::kSym &&
        c.head.args[1].name() == name)
      return c.head.args[0].value();
  }
  return std::nullopt;
}

bool KnowledgeBase::has_clauses_for(const std::string& pred,
                                    size_t arity) const {
  for (const Clause& c : clauses_)
    if (c.head.positive && c.head.pred == pred && c.head.args.size() == arity)
      return true;
  return false;
}

std::vector<const Clause*> KnowledgeBase::clauses_for(
    const std::string& pred) const {
  std::vector<const Clause*> out;
  for (const Clause& c : clauses_)
    if (pred.empty() || c.head.pred == pred) out.push_back(&c);
  return out;
}

void KnowledgeBase::save(const std::string& path, int next_ref) const {
  std::ofstream file(path);
  if (!file) throw KbFormatError(0, "cannot write " + path);
  file << "% controlled-language knowledge base\n";
  file << "% next_ref: " << next_ref << "\n";
  Provenance last;
  for (const Clause& c : clauses_) {
    if (!(c.origin == last)) {
      last = c.origin;
      if (!last.source.empty())
        file << "% source: " << last.sentence << " | " << last.source << "\n";
    }
    file << c.render() << "\n";
  }
}

namespace {

void bump_past_term(const Term& t, int& next_ref) {
  switch (t.kind()) {
    case Term::Kind::kInt:
      next_ref = std::max(next_ref, static_cast<int>(t.value()) + 1);
      break;
    case Term::Kind::kSkolem:
      next_ref = std::max(next_ref, t.skolem_index() + 1);
      for (const Term& a : t.args()) bump_past_term(a, next_ref);
      break;
    default:
      break;
  }
}

}  // namespace

int KnowledgeBase::load(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw KbFormatError(0, "cannot read " + path);
  clauses_.clear();
  int next_ref = 1;
  Provenance current;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
      trimmed.pop_back();
    size_t start = trimmed.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    trimmed = trimmed.substr(start);
    if (trimmed[0] == '%') {
      std::string body = trimmed.substr(1);
      size_t at = body.find_first_not_of(' ');
      body = at == std::string::npos ? "" : body.substr(at);
      if (body.rfind("next_ref:", 0) == 0) {
        try {
          next_ref = std::stoi(body.substr(9));
        } catch (const std::exception&) {
          throw KbFormatError(line_no, "bad counter value");
        }
      } else if (body.rfind("source:", 0) == 0) {
        std::string rest = body.substr(7);
        size_t bar = rest.find('|');
        if (bar == std::string::npos)
          throw KbFormatError(line_no, "bad source comment");
        try {
          current.sentence = std::stoi(rest.substr(0, bar));
        } catch (const std::exception&) {
          throw KbFormatError(line_no, "bad source sentence number");
        }
        size_t text = rest.find_first_not_of(' ', bar + 1);
        current.source = text == std::string::npos ? "" : rest.substr(text);
      }
      continue;
    }
    Clause c = parse_clause(trimmed, line_no);
    c.origin = current;
    clauses_.push_back(std::move(c));
  }
  for (const Clause& c : clauses_) {
    for (const Term& t : c.head.args) bump_past_term(t, next_ref);
    for (const Literal& l : c.body)
      for (const Term& t : l.args) bump_past_term(t, next_ref);
  }
  return next_ref;
}

}  // namespace cnl
