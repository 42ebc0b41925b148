#include "cnl/parser.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cnl/errors.hpp"
#include "cnl/text_util.hpp"

namespace cnl {
namespace {

template <typename T>
struct Parsed {
  T value;
  size_t next;
};

using NpPtr = std::shared_ptr<NounPhrase>;

// Keeps the furthest failure position and everything expected there.
struct ErrorTracker {
  size_t pos = 0;
  std::set<std::string> expected;

  void fail(size_t p, const std::string& what) {
    if (p > pos) {
      pos = p;
      expected.clear();
    }
    if (p == pos) expected.insert(what);
  }
};

struct NpOptions {
  bool allow_every = false;
  bool allow_number = false;
};

enum class VpForm { kFinite, kBase };

bool is_personal_pronoun(const LexEntry* e) {
  return e->category == Category::kPronoun &&
         (e->lemma == "it" || e->lemma == "he" || e->lemma == "she");
}

bool is_relative_pronoun(const LexEntry* e) {
  return e->category == Category::kPronoun &&
         (e->lemma == "who" || e->lemma == "that" || e->lemma == "which");
}

bool is_content_verb(const LexEntry* e) {
  return e->category == Category::kVerb && e->verb_kind &&
         (*e->verb_kind == VerbKind::kEvent || *e->verb_kind == VerbKind::kState);
}

FeatureStructure agreement_of(const std::vector<Gender>& gender,
                              std::optional<NumberFeature> number) {
  FeatureStructure fs;
  if (!gender.empty()) {
    std::vector<std::string> names;
    for (Gender g : gender) names.push_back(gender_name(g));
    fs = *fs.put({"gender"}, FeatureValue::atom_set(names));
  }
  if (number)
    fs = *fs.put({"number"}, FeatureValue::atom(number_name(*number)));
  return *fs.put({"person"}, FeatureValue::atom("third"));
}

// Number carried by a finite verb occurrence. Unmarked base forms are the
// plural/non-third paradigm slot.
NumberFeature finite_number(const LexEntry* e, bool inflected_s) {
  if (e->number) return *e->number;
  return inflected_s ? NumberFeature::kSg : NumberFeature::kPl;
}

FeatureStructure finite_agreement(const LexEntry* e, bool inflected_s) {
  FeatureStructure fs;
  fs = *fs.put({"number"},
               FeatureValue::atom(number_name(finite_number(e, inflected_s))));
  return *fs.put({"person"}, FeatureValue::atom("third"));
}

class SentenceParser {
 public:
  SentenceParser(const Sentence& toks, const Lexicon& lex)
      : toks_(toks), lex_(lex) {
    for (const auto& t : toks_) words_.push_back(t.lower);
  }

  std::vector<SentenceAst> run() {
    char term = 0;
    end_ = toks_.size();
    if (!toks_.empty() && toks_.back().kind == TokenKind::kPunct &&
        (toks_.back().text == "." || toks_.back().text == "?")) {
      term = toks_.back().text[0];
      end_ = toks_.size() - 1;
    }
    std::vector<SentenceAst> out;
    if (term == '?')
      collect_queries(out);
    else
      collect_assertions(out, term == '.');
    return out;
  }

  ParseFailure failure(int sentence_index) const {
    ParseFailure f;
    f.sentence = sentence_index;
    f.token = static_cast<int>(err_.pos);
    if (err_.pos < toks_.size()) f.got = toks_[err_.pos].text;
    f.expected.assign(err_.expected.begin(), err_.expected.end());
    if (f.expected.empty()) f.expected.push_back("a different sentence form");
    return f;
  }

 private:
  const Sentence& toks_;
  const Lexicon& lex_;
  std::vector<std::string> words_;
  size_t end_ = 0;  // index of the terminator
  ErrorTracker err_;

  bool word_is(size_t i, const char* w) const {
    return i < end_ && toks_[i].kind == TokenKind::kWord && words_[i] == w;
  }

  std::vector<LexMatch> matches(size_t i) const {
    if (i >= end_ || toks_[i].kind != TokenKind::kWord) return {};
    return lex_.lookup_at(words_, i);
  }

  // --- sentence forms ------------------------------------------------------

  void collect_assertions(std::vector<SentenceAst>& out, bool has_term) {
    if (word_is(0, "if")) {
      for (auto& ant : clause_seq(1)) {
        if (!word_is(ant.next, "then")) {
          err_.fail(ant.next, "'then'");
          continue;
        }
        for (auto& cons : clause_seq(ant.next + 1)) {
          if (cons.next != end_ || !has_term) {
            err_.fail(cons.next, "'.'");
            continue;
          }
          SentenceAst ast;
          ast.kind = SentenceAst::Kind::kConditional;
          ast.antecedent = ant.value;
          ast.consequent = cons.value;
          out.push_back(std::move(ast));
        }
      }
    }
    for (auto& seq : clause_seq(0)) {
      if (seq.next != end_ || !has_term) {
        err_.fail(seq.next, has_term ? "'.'" : "'.' or '?'");
        continue;
      }
      SentenceAst ast;
      ast.kind = SentenceAst::Kind::kDeclarative;
      ast.main = seq.value;
      out.push_back(std::move(ast));
    }
  }

  void collect_queries(std::vector<SentenceAst>& out) {
    bool any_start = false;
    for (const LexMatch& m : matches(0)) {
      const LexEntry* e = m.entry;
      if (e->category == Category::kQueryWord) {
        any_start = true;
        wh_subject(e, out);
        wh_object(e, out);
      } else if (e->category == Category::kVerb && e->verb_kind) {
        if (*e->verb_kind == VerbKind::kCopula) {
          any_start = true;
          yesno_copula(e, out);
        } else if (*e->verb_kind == VerbKind::kAux) {
          any_start = true;
          yesno_do(e, out);
        }
      }
    }
    if (!any_start)
      err_.fail(0, "'is', 'are', 'does', 'do', 'who' or 'what'");
  }

  NpPtr wh_phrase(const LexEntry* qw) const {
    auto np = std::make_shared<NounPhrase>();
    np->kind = NounPhrase::Kind::kWh;
    np->head = qw;
    np->first_token = np->last_token = np->head_token = 0;
    np->agreement = qw->agreement();
    return np;
  }

  void wh_subject(const LexEntry* qw, std::vector<SentenceAst>& out) {
    NpPtr subj = wh_phrase(qw);
    for (auto& vps : vp_list(1, subj->agreement, VpForm::kFinite)) {
      if (vps.next != end_) {
        err_.fail(vps.next, "'?'");
        continue;
      }
      SentenceAst ast;
      ast.kind = SentenceAst::Kind::kWh;
      ast.main.items.push_back({subj, vps.value});
      ast.main.sequenced.push_back(false);
      out.push_back(std::move(ast));
    }
  }

  void wh_object(const LexEntry* qw, std::vector<SentenceAst>& out) {
    for (const LexMatch& am : matches(1)) {
      const LexEntry* aux = am.entry;
      if (aux->category != Category::kVerb || !aux->verb_kind ||
          *aux->verb_kind != VerbKind::kAux)
        continue;
      for (auto& subj : noun_phrase(2, {})) {
        if (!unify(subj.value->agreement, finite_agreement(aux, false))) {
          err_.fail(1, "an auxiliary agreeing with the subject");
          continue;
        }
        bool found = false;
        for (const LexMatch& vm : matches(subj.next)) {
          if (!base_form(vm)) continue;
          found = true;
          size_t j = subj.next + vm.consumed;
          if (j != end_) {
            err_.fail(j, "'?'");
            continue;
          }
          VerbPhrase vp;
          vp.kind = VerbPhrase::Kind::kVerb;
          vp.verb = {vm.entry, false, static_cast<int>(subj.next)};
          vp.object = wh_phrase(qw);
          SentenceAst ast;
          ast.kind = SentenceAst::Kind::kWh;
          ast.wh_object = true;
          VpList vps;
          vps.items.push_back(vp);
          vps.sequenced.push_back(false);
          ast.main.items.push_back({subj.value, vps});
          ast.main.sequenced.push_back(false);
          out.push_back(std::move(ast));
        }
        if (!found) err_.fail(subj.next, "a base-form verb");
      }
    }
  }

  void yesno_copula(const LexEntry* be, std::vector<SentenceAst>& out) {
    for (auto& subj : noun_phrase(1, {})) {
      if (!unify(subj.value->agreement, finite_agreement(be, false))) {
        err_.fail(0, "a copula agreeing with the subject");
        continue;
      }
      VerbUse use{be, false, 0};
      for (auto& pred : copula_predicate(subj.next, use, false)) {
        if (pred.next != end_) {
          err_.fail(pred.next, "'?'");
          continue;
        }
        SentenceAst ast;
        ast.kind = SentenceAst::Kind::kYesNo;
        VpList vps;
        vps.items.push_back(pred.value);
        vps.sequenced.push_back(false);
        ast.main.items.push_back({subj.value, vps});
        ast.main.sequenced.push_back(false);
        out.push_back(std::move(ast));
      }
    }
  }

  void yesno_do(const LexEntry* aux, std::vector<SentenceAst>& out) {
    for (auto& subj : noun_phrase(1, {})) {
      if (!unify(subj.value->agreement, finite_agreement(aux, false))) {
        err_.fail(0, "an auxiliary agreeing with the subject");
        continue;
      }
      for (auto& vps : vp_list(subj.next, subj.value->agreement, VpForm::kBase)) {
        if (vps.next != end_) {
          err_.fail(vps.next, "'?'");
          continue;
        }
        SentenceAst ast;
        ast.kind = SentenceAst::Kind::kYesNo;
        ast.main.items.push_back({subj.value, vps.value});
        ast.main.sequenced.push_back(false);
        out.push_back(std::move(ast));
      }
    }
  }

  // --- clauses -------------------------------------------------------------

  std::vector<Parsed<ClauseSeq>> clause_seq(size_t i) {
    std::vector<Parsed<ClauseSeq>> out;
    for (auto& cl : clause(i)) {
      ClauseSeq seq;
      seq.items.push_back(cl.value);
      seq.sequenced.push_back(false);
      extend_clause_seq(seq, cl.next, out);
    }
    return out;
  }

  void extend_clause_seq(const ClauseSeq& sofar, size_t j,
                         std::vector<Parsed<ClauseSeq>>& out) {
    out.push_back({sofar, j});
    struct Opt {
      Connective conn;
      bool seq;
      size_t next;
    };
    std::vector<Opt> opts;
    if (word_is(j, "and") && sofar.conn != Connective::kOr) {
      opts.push_back({Connective::kAnd, false, j + 1});
      if (word_is(j + 1, "then"))
        opts.push_back({Connective::kAnd, true, j + 2});
    }
    if (word_is(j, "or") && sofar.conn != Connective::kAnd)
      opts.push_back({Connective::kOr, false, j + 1});
    for (const auto& o : opts) {
      for (auto& cl : clause(o.next)) {
        ClauseSeq ext = sofar;
        ext.conn = o.conn;
        ext.items.push_back(cl.value);
        ext.sequenced.push_back(o.seq);
        extend_clause_seq(ext, cl.next, out);
      }
    }
  }

  std::vector<Parsed<ClauseAst>> clause(size_t i) {
    std::vector<Parsed<ClauseAst>> out;
    NpOptions opts;
    opts.allow_every = true;
    for (auto& subj : noun_phrase(i, opts)) {
      for (auto& vps :
           vp_list(subj.next, subj.value->agreement, VpForm::kFinite))
        out.push_back({ClauseAst{subj.value, vps.value}, vps.next});
    }
    return out;
  }

  // --- verb phrases --------------------------------------------------------

  std::vector<Parsed<VpList>> vp_list(size_t i, const FeatureStructure& agr,
                                      VpForm form) {
    std::vector<Parsed<VpList>> out;
    for (auto& first : verb_phrase(i, agr, form)) {
      VpList vps;
      vps.items.push_back(first.value);
      vps.sequenced.push_back(false);
      extend_vp_list(vps, first.next, out, agr, form);
    }
    return out;
  }

  void extend_vp_list(const VpList& sofar, size_t j,
                      std::vector<Parsed<VpList>>& out,
                      const FeatureStructure& agr, VpForm form) {
    out.push_back({sofar, j});
    struct Opt {
      Connective conn;
      bool seq;
      size_t next;
    };
    std::vector<Opt> opts;
    if (word_is(j, "and") && sofar.conn != Connective::kOr) {
      opts.push_back({Connective::kAnd, false, j + 1});
      if (word_is(j + 1, "then"))
        opts.push_back({Connective::kAnd, true, j + 2});
    }
    if (word_is(j, "or") && sofar.conn != Connective::kAnd)
      opts.push_back({Connective::kOr, false, j + 1});
    for (const auto& o : opts) {
      for (auto& vp : verb_phrase(o.next, agr, form)) {
        VpList ext = sofar;
        ext.conn = o.conn;
        ext.items.push_back(vp.value);
        ext.sequenced.push_back(o.seq);
        extend_vp_list(ext, vp.next, out, agr, form);
      }
    }
  }

  bool base_form(const LexMatch& m) const {
    return is_content_verb(m.entry) && !m.inflected_s && !m.entry->number;
  }

  std::vector<Parsed<VerbPhrase>> verb_phrase(size_t i,
                                              const FeatureStructure& agr,
                                              VpForm form) {
    std::vector<Parsed<VerbPhrase>> out;
    auto ms = matches(i);
    if (ms.empty()) {
      err_.fail(i, form == VpForm::kBase ? "a base-form verb" : "a verb");
      return out;
    }
    bool saw_verb = false;
    for (const LexMatch& m : ms) {
      const LexEntry* e = m.entry;
      if (e->category != Category::kVerb) continue;
      saw_verb = true;
      if (form == VpForm::kBase) {
        if (!base_form(m)) {
          err_.fail(i, "a base-form verb");
          continue;
        }
        plain_verb(i, m, out);
        continue;
      }
      if (!e->verb_kind) continue;
      switch (*e->verb_kind) {
        case VerbKind::kCopula: {
          if (!unify(agr, finite_agreement(e, false))) {
            err_.fail(i, "a verb agreeing with the subject");
            break;
          }
          size_t j = i + 1;
          bool negated = word_is(j, "not");
          if (negated) ++j;
          VerbUse use{e, false, static_cast<int>(i)};
          for (auto& pred : copula_predicate(j, use, negated))
            out.push_back(pred);
          break;
        }
        case VerbKind::kAux: {
          if (!unify(agr, finite_agreement(e, false))) {
            err_.fail(i, "a verb agreeing with the subject");
            break;
          }
          if (!word_is(i + 1, "not")) {
            err_.fail(i + 1, "'not'");
            break;
          }
          auto vms = matches(i + 2);
          bool found = false;
          for (const LexMatch& vm : vms) {
            if (!base_form(vm)) continue;
            found = true;
            VerbPhrase vp;
            vp.kind = VerbPhrase::Kind::kVerb;
            vp.negated = true;
            vp.verb = {vm.entry, false, static_cast<int>(i + 2)};
            with_optional_object(vp, i + 2 + vm.consumed, out);
          }
          if (!found) err_.fail(i + 2, "a base-form verb");
          break;
        }
        case VerbKind::kEvent:
        case VerbKind::kState: {
          if (!unify(agr, finite_agreement(e, m.inflected_s))) {
            err_.fail(i, "a verb agreeing with the subject");
            break;
          }
          if (e->lemma == "have" && word_is(i + m.consumed, "not")) {
            VerbPhrase vp;
            vp.kind = VerbPhrase::Kind::kVerb;
            vp.negated = true;
            vp.verb = {e, m.inflected_s, static_cast<int>(i)};
            with_optional_object(vp, i + m.consumed + 1, out);
          }
          plain_verb(i, m, out);
          break;
        }
      }
    }
    if (!saw_verb)
      err_.fail(i, form == VpForm::kBase ? "a base-form verb" : "a verb");
    return out;
  }

  void plain_verb(size_t i, const LexMatch& m,
                  std::vector<Parsed<VerbPhrase>>& out) {
    VerbPhrase vp;
    vp.kind = VerbPhrase::Kind::kVerb;
    vp.verb = {m.entry, m.inflected_s, static_cast<int>(i)};
    with_optional_object(vp, i + m.consumed, out);
  }

  void with_optional_object(const VerbPhrase& vp, size_t j,
                            std::vector<Parsed<VerbPhrase>>& out) {
    out.push_back({vp, j});
    for (auto& obj : noun_phrase(j, {})) {
      VerbPhrase with = vp;
      with.object = obj.value;
      out.push_back({with, obj.next});
    }
  }

  std::vector<Parsed<VerbPhrase>> copula_predicate(size_t j,
                                                   const VerbUse& use,
                                                   bool negated) {
    std::vector<Parsed<VerbPhrase>> out;
    if (j < end_ && toks_[j].kind == TokenKind::kWord) {
      if (const LexEntry* base = progressive_base(lex_, words_[j])) {
        VerbPhrase vp;
        vp.kind = VerbPhrase::Kind::kProgressive;
        vp.negated = negated;
        vp.verb = {base, false, static_cast<int>(j)};
        with_optional_object(vp, j + 1, out);
      }
    }
    for (const LexMatch& m : matches(j)) {
      const LexEntry* e = m.entry;
      if (e->category == Category::kComparative) {
        NpOptions opts;
        opts.allow_number = true;
        for (auto& obj : noun_phrase(j + m.consumed, opts)) {
          VerbPhrase vp;
          vp.kind = VerbPhrase::Kind::kCopulaComparative;
          vp.negated = negated;
          vp.verb = use;
          vp.comparative = e;
          vp.object = obj.value;
          out.push_back({vp, obj.next});
        }
      } else if (e->category == Category::kAdjective) {
        VerbPhrase vp;
        vp.kind = VerbPhrase::Kind::kCopulaAdjective;
        vp.negated = negated;
        vp.verb = use;
        vp.adjective = e;
        out.push_back({vp, j + m.consumed});
      }
    }
    for (auto& obj : noun_phrase(j, {})) {
      VerbPhrase vp;
      vp.kind = VerbPhrase::Kind::kCopulaNominal;
      vp.negated = negated;
      vp.verb = use;
      vp.object = obj.value;
      out.push_back({vp, obj.next});
    }
    if (out.empty())
      err_.fail(j, "an adjective, a comparative, an -ing form or a noun phrase");
    return out;
  }

  // --- noun phrases --------------------------------------------------------

  std::vector<Parsed<NpPtr>> noun_phrase(size_t i, NpOptions opts) {
    std::vector<Parsed<NpPtr>> out;
    if (i >= end_) {
      err_.fail(i, "a noun phrase");
      return out;
    }
    if (toks_[i].kind == TokenKind::kNumber) {
      if (opts.allow_number) {
        auto np = std::make_shared<NounPhrase>();
        np->kind = NounPhrase::Kind::kNumber;
        try {
          np->number_value = std::stol(toks_[i].text);
        } catch (const std::out_of_range&) {
          err_.fail(i, "a representable number");
          return out;
        }
        np->first_token = np->last_token = np->head_token =
            static_cast<int>(i);
        np->agreement = agreement_of({}, NumberFeature::kSg);
        out.push_back({np, i + 1});
      } else {
        err_.fail(i, "a noun phrase");
      }
      return out;
    }
    for (const LexMatch& m : matches(i)) {
      const LexEntry* e = m.entry;
      switch (e->category) {
        case Category::kProperNoun: {
          auto np = std::make_shared<NounPhrase>();
          np->kind = NounPhrase::Kind::kProper;
          np->head = e;
          np->first_token = np->head_token = static_cast<int>(i);
          np->last_token = static_cast<int>(i + m.consumed - 1);
          np->agreement = e->agreement();
          out.push_back({np, i + m.consumed});
          break;
        }
        case Category::kPronoun: {
          if (!is_personal_pronoun(e)) break;
          auto np = std::make_shared<NounPhrase>();
          np->kind = NounPhrase::Kind::kPronoun;
          np->head = e;
          np->first_token = np->last_token = np->head_token =
              static_cast<int>(i);
          np->agreement = e->agreement();
          out.push_back({np, i + 1});
          break;
        }
        case Category::kDeterminer: {
          if (e->lemma == "every" && !opts.allow_every) {
            err_.fail(i, "'a', 'an' or 'the'");
            break;
          }
          quant_tail(i, e, i + 1, {}, out);
          break;
        }
        case Category::kNoun:
          quant_tail(i, nullptr, i, {}, out);
          break;
        default:
          break;
      }
    }
    if (out.empty()) err_.fail(i, "a noun phrase");
    return out;
  }

  // Parses adjective* noun [relative] from `j`; `start` is the first token
  // of the whole phrase, `det` its determiner when present.
  void quant_tail(size_t start, const LexEntry* det, size_t j,
                  std::vector<const LexEntry*> adjs,
                  std::vector<Parsed<NpPtr>>& out) {
    bool any = false;
    for (const LexMatch& m : matches(j)) {
      const LexEntry* e = m.entry;
      if (e->category == Category::kAdjective) {
        auto more = adjs;
        more.push_back(e);
        quant_tail(start, det, j + m.consumed, std::move(more), out);
        any = true;
      } else if (e->category == Category::kNoun) {
        finish_noun(start, det, adjs, m, j, out);
        any = true;
      }
    }
    if (!any) err_.fail(j, adjs.empty() ? "a noun or an adjective" : "a noun");
  }

  void finish_noun(size_t start, const LexEntry* det,
                   const std::vector<const LexEntry*>& adjs, const LexMatch& m,
                   size_t noun_at, std::vector<Parsed<NpPtr>>& out) {
    const LexEntry* noun = m.entry;
    NumberFeature number =
        m.inflected_s ? NumberFeature::kPl
                      : noun->number.value_or(NumberFeature::kSg);
    FeatureStructure agr = agreement_of(noun->gender, number);
    if (det && det->number) {
      auto u = agr.put({"number"}, FeatureValue::atom(number_name(*det->number)));
      if (!u) {
        err_.fail(noun_at, "a noun agreeing in number with the determiner");
        return;
      }
      agr = *u;
    }
    auto np = std::make_shared<NounPhrase>();
    np->kind = NounPhrase::Kind::kQuant;
    np->head = noun;
    np->head_plural = m.inflected_s;
    np->det = det;
    np->adjectives = adjs;
    np->first_token = static_cast<int>(start);
    np->head_token = static_cast<int>(noun_at);
    np->last_token = static_cast<int>(noun_at + m.consumed - 1);
    np->agreement = agr;
    size_t j = noun_at + m.consumed;
    out.push_back({np, j});
    relative_tail(np, j, out);
  }

  void relative_tail(const NpPtr& head, size_t j,
                     std::vector<Parsed<NpPtr>>& out) {
    for (const LexMatch& m : matches(j)) {
      const LexEntry* rp = m.entry;
      if (!is_relative_pronoun(rp)) continue;
      auto gated = unify(head->agreement, rp->agreement());
      if (!gated) {
        err_.fail(j, "a relative pronoun matching the noun");
        continue;
      }
      // Subject gap: relpron + verb phrases over the head.
      for (auto& vps : vp_list(j + 1, *gated, VpForm::kFinite)) {
        auto rel = std::make_shared<RelClause>();
        rel->relpron = rp;
        rel->subject_gap = true;
        rel->vps = vps.value;
        NpPtr np = with_relative(head, rel, vps.next);
        out.push_back({np, vps.next});
      }
      // Object gap: relpron + inner subject + verb missing its object.
      for (auto& inner : noun_phrase(j + 1, {})) {
        for (const LexMatch& vm : matches(inner.next)) {
          if (!is_content_verb(vm.entry)) continue;
          if (!unify(inner.value->agreement,
                     finite_agreement(vm.entry, vm.inflected_s))) {
            err_.fail(inner.next, "a verb agreeing with the subject");
            continue;
          }
          auto rel = std::make_shared<RelClause>();
          rel->relpron = rp;
          rel->subject_gap = false;
          rel->inner_subject = inner.value;
          rel->gap_verb = {vm.entry, vm.inflected_s,
                           static_cast<int>(inner.next)};
          size_t g = inner.next + vm.consumed;
          NpPtr np = with_relative(head, rel, g);
          out.push_back({np, g});
          // Further verb phrases coordinated onto the inner subject.
          Connective conn = Connective::kNone;
          if (word_is(g, "and"))
            conn = Connective::kAnd;
          else if (word_is(g, "or"))
            conn = Connective::kOr;
          if (conn == Connective::kNone) continue;
          for (auto& extra :
               vp_list(g + 1, inner.value->agreement, VpForm::kFinite)) {
            if (extra.value.conn != Connective::kNone &&
                extra.value.conn != conn)
              continue;
            auto rel2 = std::make_shared<RelClause>(*rel);
            rel2->inner_extra = extra.value;
            rel2->inner_extra.conn = conn;
            NpPtr np2 = with_relative(head, rel2, extra.next);
            out.push_back({np2, extra.next});
          }
        }
      }
    }
  }

  NpPtr with_relative(const NpPtr& head, const std::shared_ptr<RelClause>& rel,
                      size_t last) const {
    auto np = std::make_shared<NounPhrase>(*head);
    np->relative = rel;
    np->last_token = static_cast<int>(last) - 1;
    return np;
  }
};

// --- DRS construction ------------------------------------------------------

DrsPath extended(const DrsPath& path, int cond_index, int branch) {
  DrsPath out = path;
  out.push_back({cond_index, branch});
  return out;
}

class IncrementBuilder {
 public:
  IncrementBuilder(RefId first_ref, int sentence_display)
      : next_ref_(first_ref), sentence_(sentence_display) {}

  ParseResult build(const SentenceAst& ast) {
    ParseResult r;
    r.ast = ast;
    switch (ast.kind) {
      case SentenceAst::Kind::kDeclarative:
        r.mood = Mood::kAssertion;
        build_seq(ast.main, drs_, {}, true);
        break;
      case SentenceAst::Kind::kConditional: {
        r.mood = Mood::kAssertion;
        drs_.conditions.push_back(Condition::ifthen(Drs{}, Drs{}, sentence_));
        Drs* ant = drs_.conditions[0].sub1.get();
        Drs* cons = drs_.conditions[0].sub2.get();
        build_seq(ast.antecedent, *ant, {{0, 0}}, false);
        build_seq(ast.consequent, *cons, {{0, 1}}, false);
        break;
      }
      case SentenceAst::Kind::kYesNo:
        r.mood = Mood::kYesNo;
        build_seq(ast.main, drs_, {}, false);
        break;
      case SentenceAst::Kind::kWh:
        r.mood = Mood::kWh;
        build_seq(ast.main, drs_, {}, false);
        break;
    }
    r.drs = std::move(drs_);
    r.placeholders = std::move(placeholders_);
    r.indefinite_articles = std::move(articles_);
    r.eventualities = std::move(events_);
    r.wh_refs = std::move(wh_refs_);
    r.next_ref_id = next_ref_;
    return r;
  }

 private:
  RefId next_ref_;
  int sentence_;  // 1-based display index
  Drs drs_;
  std::vector<Placeholder> placeholders_;
  std::map<RefId, int> articles_;
  std::vector<EventualityRef> events_;
  std::vector<RefId> wh_refs_;
  int seq_group_ = 0;

  void build_seq(const ClauseSeq& seq, Drs& box, const DrsPath& path,
                 bool top) {
    if (seq.conn == Connective::kOr && seq.items.size() > 1) {
      build_clause_chain(seq, 0, box, path);
      return;
    }
    for (size_t i = 0; i < seq.items.size(); ++i) {
      if (i > 0 && seq.sequenced[i]) ++seq_group_;
      build_clause(seq.items[i], box, path, top);
    }
  }

  void build_clause_chain(const ClauseSeq& seq, size_t idx, Drs& box,
                          const DrsPath& path) {
    int ci = static_cast<int>(box.conditions.size());
    box.conditions.push_back(Condition::disjunction(Drs{}, Drs{}, sentence_));
    Drs* left = box.conditions[ci].sub1.get();
    Drs* right = box.conditions[ci].sub2.get();
    build_clause(seq.items[idx], *left, extended(path, ci, 0), false);
    if (idx + 2 == seq.items.size())
      build_clause(seq.items[idx + 1], *right, extended(path, ci, 1), false);
    else
      build_clause_chain(seq, idx + 1, *right, extended(path, ci, 1));
  }

  void build_clause(const ClauseAst& cl, Drs& box, const DrsPath& path,
                    bool top) {
    const NounPhrase& subj = *cl.subject;
    if (subj.kind == NounPhrase::Kind::kQuant && subj.det &&
        subj.det->lemma == "every") {
      int ci = static_cast<int>(box.conditions.size());
      box.conditions.push_back(Condition::ifthen(Drs{}, Drs{}, sentence_));
      Drs* ant = box.conditions[ci].sub1.get();
      Drs* cons = box.conditions[ci].sub2.get();
      DrsArg s = build_np(*ant, extended(path, ci, 0), subj);
      build_vps(cl.vps, *cons, extended(path, ci, 1), s, false);
      return;
    }
    DrsArg s = build_np(box, path, subj);
    build_vps(cl.vps, box, path, s, top);
  }

  void build_vps(const VpList& vps, Drs& box, const DrsPath& path,
                 const DrsArg& subj, bool top) {
    if (vps.conn == Connective::kOr && vps.items.size() > 1) {
      build_vp_chain(vps, 0, box, path, subj);
      return;
    }
    for (size_t i = 0; i < vps.items.size(); ++i) {
      if (i > 0 && vps.sequenced[i]) ++seq_group_;
      build_vp(vps.items[i], box, path, subj, top);
    }
  }

  void build_vp_chain(const VpList& vps, size_t idx, Drs& box,
                      const DrsPath& path, const DrsArg& subj) {
    int ci = static_cast<int>(box.conditions.size());
    box.conditions.push_back(Condition::disjunction(Drs{}, Drs{}, sentence_));
    Drs* left = box.conditions[ci].sub1.get();
    Drs* right = box.conditions[ci].sub2.get();
    build_vp(vps.items[idx], *left, extended(path, ci, 0), subj, false);
    if (idx + 2 == vps.items.size())
      build_vp(vps.items[idx + 1], *right, extended(path, ci, 1), subj, false);
    else
      build_vp_chain(vps, idx + 1, *right, extended(path, ci, 1), subj);
  }

  void build_vp(const VerbPhrase& vp, Drs& box, const DrsPath& path,
                const DrsArg& subj, bool top) {
    if (vp.negated) {
      int ci = static_cast<int>(box.conditions.size());
      box.conditions.push_back(Condition::negation(Drs{}, sentence_));
      Drs* sub = box.conditions[ci].sub1.get();
      emit_vp(vp, *sub, extended(path, ci, 0), subj, false);
      return;
    }
    emit_vp(vp, box, path, subj, top);
  }

  void emit_vp(const VerbPhrase& vp, Drs& box, const DrsPath& path,
               const DrsArg& subj, bool top) {
    switch (vp.kind) {
      case VerbPhrase::Kind::kCopulaNominal: {
        DrsArg obj = build_np(box, path, *vp.object);
        box.conditions.push_back(
            Condition::atomic("is", {subj, obj}, sentence_));
        break;
      }
      case VerbPhrase::Kind::kCopulaAdjective:
        box.conditions.push_back(
            Condition::atomic(vp.adjective->pred, {subj}, sentence_));
        break;
      case VerbPhrase::Kind::kCopulaComparative: {
        DrsArg obj = build_np(box, path, *vp.object);
        box.conditions.push_back(
            Condition::atomic(vp.comparative->pred, {subj, obj}, sentence_));
        break;
      }
      case VerbPhrase::Kind::kProgressive: {
        std::vector<DrsArg> args{subj};
        if (vp.object) args.push_back(build_np(box, path, *vp.object));
        Condition c =
            Condition::atomic(vp.verb.verb->pred, std::move(args), sentence_);
        if (top) tag_eventuality(c, vp.verb.verb->pred, false, true);
        box.conditions.push_back(std::move(c));
        break;
      }
      case VerbPhrase::Kind::kVerb: {
        std::vector<DrsArg> args{subj};
        if (vp.object) args.push_back(build_np(box, path, *vp.object));
        Condition c =
            Condition::atomic(vp.verb.verb->pred, std::move(args), sentence_);
        if (top && vp.verb.verb->verb_kind &&
            *vp.verb.verb->verb_kind == VerbKind::kEvent)
          tag_eventuality(c, vp.verb.verb->pred, true, false);
        box.conditions.push_back(std::move(c));
        break;
      }
    }
  }

  void tag_eventuality(Condition& c, const std::string& pred, bool is_event,
                       bool progressive) {
    int tag = static_cast<int>(events_.size()) + 1;
    c.event_tag = tag;
    events_.push_back({pred, is_event, progressive, seq_group_, tag});
  }

  std::string phrase_text(const NounPhrase& np) const {
    std::string out;
    if (np.det) out += np.det->surface + " ";
    for (const auto* adj : np.adjectives) out += adj->surface + " ";
    out += np.head->surface;
    if (np.head_plural) out += "s";
    return out;
  }

  DrsArg build_np(Drs& box, const DrsPath& path, const NounPhrase& np) {
    switch (np.kind) {
      case NounPhrase::Kind::kNumber:
        return DrsArg::of_num(np.number_value);
      case NounPhrase::Kind::kProper: {
        RefId id = next_ref_++;
        Referent r;
        r.id = id;
        r.sentence = sentence_;
        r.description = np.head->surface;
        r.gender = np.head->gender;
        r.number = np.head->number;
        r.proper_name = np.head->pred;
        box.referents.push_back(r);
        box.conditions.push_back(Condition::atomic(
            "named", {DrsArg::of_ref(id), DrsArg::of_sym(np.head->pred)},
            sentence_));
        Placeholder ph;
        ph.kind = Placeholder::Kind::kProper;
        ph.ref = id;
        ph.surface = np.head->surface;
        ph.noun_pred = np.head->pred;
        ph.gender = np.head->gender;
        ph.number = np.head->number;
        ph.path = path;
        ph.token = np.head_token;
        placeholders_.push_back(std::move(ph));
        return DrsArg::of_ref(id);
      }
      case NounPhrase::Kind::kPronoun: {
        RefId id = next_ref_++;
        Referent r;
        r.id = id;
        r.sentence = sentence_;
        r.description = np.head->lemma;
        r.gender = np.head->gender;
        r.number = np.head->number;
        box.referents.push_back(r);
        Placeholder ph;
        ph.kind = Placeholder::Kind::kPronoun;
        ph.ref = id;
        ph.surface = np.head->lemma;
        ph.gender = np.head->gender;
        ph.number = np.head->number;
        ph.path = path;
        ph.token = np.head_token;
        placeholders_.push_back(std::move(ph));
        return DrsArg::of_ref(id);
      }
      case NounPhrase::Kind::kWh: {
        RefId id = next_ref_++;
        Referent r;
        r.id = id;
        r.sentence = sentence_;
        r.description = np.head->lemma;
        r.gender = np.head->gender;
        r.number = np.head->number;
        box.referents.push_back(r);
        wh_refs_.push_back(id);
        return DrsArg::of_ref(id);
      }
      case NounPhrase::Kind::kQuant:
        break;
    }
    RefId id = next_ref_++;
    NumberFeature number =
        np.head_plural ? NumberFeature::kPl
                       : np.head->number.value_or(NumberFeature::kSg);
    Referent r;
    r.id = id;
    r.sentence = sentence_;
    r.description = phrase_text(np);
    r.gender = np.head->gender;
    r.number = number;
    box.referents.push_back(r);
    if (!np.head->gender.empty())
      box.conditions.push_back(
          Condition::gender_of(id, np.head->gender, sentence_));
    box.conditions.push_back(Condition::number_of(id, number, sentence_));
    box.conditions.push_back(
        Condition::atomic(np.head->pred, {DrsArg::of_ref(id)}, sentence_));
    for (const auto* adj : np.adjectives)
      box.conditions.push_back(
          Condition::atomic(adj->pred, {DrsArg::of_ref(id)}, sentence_));
    if (np.relative) build_rel(box, path, *np.relative, id);
    if (np.det) {
      if (np.det->lemma == "a") {
        articles_[id] = np.first_token;
      } else if (np.det->lemma == "the") {
        Placeholder ph;
        ph.kind = Placeholder::Kind::kDefinite;
        ph.ref = id;
        ph.surface = phrase_text(np);
        ph.noun_pred = np.head->pred;
        ph.gender = np.head->gender;
        ph.number = number;
        ph.path = path;
        ph.token = np.head_token;
        ph.det_token = np.first_token;
        placeholders_.push_back(std::move(ph));
      }
    }
    return DrsArg::of_ref(id);
  }

  void build_rel(Drs& box, const DrsPath& path, const RelClause& rel,
                 RefId head) {
    if (rel.subject_gap) {
      build_vps(rel.vps, box, path, DrsArg::of_ref(head), false);
      return;
    }
    DrsArg inner = build_np(box, path, *rel.inner_subject);
    box.conditions.push_back(Condition::atomic(
        rel.gap_verb.verb->pred, {inner, DrsArg::of_ref(head)}, sentence_));
    if (!rel.inner_extra.items.empty())
      build_vps(rel.inner_extra, box, path, inner, false);
  }
};

void scan_unknown_words(const Sentence& toks, const Lexicon& lex) {
  std::vector<std::string> words;
  for (const auto& t : toks) words.push_back(t.lower);
  size_t i = 0;
  while (i < toks.size()) {
    const Token& t = toks[i];
    if (t.kind != TokenKind::kWord) {
      ++i;
      continue;
    }
    auto ms = lex.lookup_at(words, i);
    if (!ms.empty()) {
      int adv = 1;
      for (const auto& m : ms) adv = std::max(adv, m.consumed);
      i += static_cast<size_t>(adv);
      continue;
    }
    if (progressive_base(lex, t.lower)) {
      ++i;
      continue;
    }
    throw UnknownWordError(t.text, t.sentence + 1, t.index + 1);
  }
}

}  // namespace

const LexEntry* progressive_base(const Lexicon& lexicon,
                                 const std::string& lower) {
  if (lower.size() <= 4 || lower.compare(lower.size() - 3, 3, "ing") != 0)
    return nullptr;
  std::string stem = lower.substr(0, lower.size() - 3);
  std::vector<std::string> candidates{stem, stem + "e"};
  if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2])
    candidates.push_back(stem.substr(0, stem.size() - 1));
  for (const auto& c : candidates)
    for (const LexEntry* e : lexicon.lookup(c))
      if (e->category == Category::kVerb && e->verb_kind &&
          *e->verb_kind == VerbKind::kEvent)
        return e;
  return nullptr;
}

std::string ParseFailure::render() const {
  std::string out = "sentence " + std::to_string(sentence + 1) + ", token " +
                    std::to_string(token + 1);
  out += got.empty() ? " (end)" : " ('" + got + "')";
  return out + ": expected " + join(expected, " or ");
}

ParseOutcome parse_sentence(const Sentence& sentence, const Lexicon& lexicon,
                            RefId first_ref, int sentence_index) {
  if (sentence.empty()) throw EmptyInputError();
  scan_unknown_words(sentence, lexicon);
  SentenceParser parser(sentence, lexicon);
  auto asts = parser.run();
  ParseOutcome out;
  std::set<std::string> seen;
  for (const auto& ast : asts) {
    IncrementBuilder builder(first_ref, sentence_index + 1);
    ParseResult r = builder.build(ast);
    std::string key =
        std::to_string(static_cast<int>(r.mood)) + "|" + r.drs.render_term();
    if (seen.insert(key).second) out.readings.push_back(std::move(r));
  }
  if (out.readings.empty()) out.failure = parser.failure(sentence_index);
  return out;
}

}  // namespace cnl
