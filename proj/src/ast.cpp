#include "cnl/ast.hpp"

#include "cnl/text_util.hpp"

namespace cnl {
namespace {

std::string np_tree(const NounPhrase& np);

std::string vp_tree(const VerbPhrase& vp) {
  std::string out = "(vp";
  if (vp.negated) out += " neg";
  switch (vp.kind) {
    case VerbPhrase::Kind::kCopulaNominal:
      out += " (cop is) " + np_tree(*vp.object);
      break;
    case VerbPhrase::Kind::kCopulaAdjective:
      out += " (cop is) (adj " + vp.adjective->pred + ")";
      break;
    case VerbPhrase::Kind::kCopulaComparative:
      out += " (cop is) (cmp " + vp.comparative->pred + ") " +
             np_tree(*vp.object);
      break;
    case VerbPhrase::Kind::kProgressive:
      out += " (cop is) (v " + vp.verb.verb->lemma + " prog)";
      if (vp.object) out += " " + np_tree(*vp.object);
      break;
    case VerbPhrase::Kind::kVerb:
      out += " (v " + vp.verb.verb->lemma;
      if (vp.verb.third_sg) out += " 3sg";
      out += ")";
      if (vp.object) out += " " + np_tree(*vp.object);
      break;
  }
  return out + ")";
}

std::string vplist_tree(const VpList& vps) {
  if (vps.items.size() == 1) return vp_tree(vps.items[0]);
  std::string out = vps.conn == Connective::kOr ? "(vp-or" : "(vp-and";
  for (const auto& vp : vps.items) out += " " + vp_tree(vp);
  return out + ")";
}

std::string np_tree(const NounPhrase& np) {
  std::string out = "(np";
  auto agr = np.agreement.render();
  if (!agr.empty()) out += "{" + agr + "}";
  switch (np.kind) {
    case NounPhrase::Kind::kProper:
      out += " (pname " + np.head->surface + ")";
      break;
    case NounPhrase::Kind::kPronoun:
      out += " (pron " + np.head->lemma + ")";
      break;
    case NounPhrase::Kind::kWh:
      out += " (wh " + np.head->lemma + ")";
      break;
    case NounPhrase::Kind::kNumber:
      out += " (num " + std::to_string(np.number_value) + ")";
      break;
    case NounPhrase::Kind::kQuant:
      if (np.det) out += " (det " + np.det->lemma + ")";
      for (const auto* adj : np.adjectives) out += " (adj " + adj->pred + ")";
      out += " (n " + np.head->pred + (np.head_plural ? " pl" : "") + ")";
      if (np.relative) {
        const RelClause& rel = *np.relative;
        out += " (rel " + rel.relpron->lemma;
        if (rel.subject_gap) {
          out += " " + vplist_tree(rel.vps);
        } else {
          out += " " + np_tree(*rel.inner_subject) + " (v " +
                 rel.gap_verb.verb->lemma + " gap)";
          if (!rel.inner_extra.items.empty())
            out += " " + vplist_tree(rel.inner_extra);
        }
        out += ")";
      }
      break;
  }
  return out + ")";
}

std::string clause_tree(const ClauseAst& c) {
  return "(cl " + np_tree(*c.subject) + " " + vplist_tree(c.vps) + ")";
}

std::string seq_tree(const ClauseSeq& seq) {
  if (seq.items.size() == 1) return clause_tree(seq.items[0]);
  std::string out = seq.conn == Connective::kOr ? "(or" : "(and";
  for (size_t i = 0; i < seq.items.size(); ++i) {
    if (i && i < seq.sequenced.size() && seq.sequenced[i]) out += " then";
    out += " " + clause_tree(seq.items[i]);
  }
  return out + ")";
}

// --- reading summaries ---------------------------------------------------

std::string np_text(const NounPhrase& np);

std::string vp_text(const VerbPhrase& vp) {
  std::string out;
  switch (vp.kind) {
    case VerbPhrase::Kind::kCopulaNominal:
      out = vp.negated ? "is not " : "is ";
      out += np_text(*vp.object);
      break;
    case VerbPhrase::Kind::kCopulaAdjective:
      out = vp.negated ? "is not " : "is ";
      out += vp.adjective->surface;
      break;
    case VerbPhrase::Kind::kCopulaComparative:
      out = vp.negated ? "is not " : "is ";
      out += vp.comparative->surface + " " + np_text(*vp.object);
      break;
    case VerbPhrase::Kind::kProgressive:
      out = vp.negated ? "is not " : "is ";
      out += vp.verb.verb->lemma + "ing";
      if (vp.object) out += " " + np_text(*vp.object);
      break;
    case VerbPhrase::Kind::kVerb:
      if (vp.negated) {
        out = "does not " + vp.verb.verb->surface;
      } else {
        out = vp.verb.verb->surface;
        if (vp.verb.third_sg) out += "s";
      }
      if (vp.object) out += " " + np_text(*vp.object);
      break;
  }
  return out;
}

std::string vplist_text(const VpList& vps) {
  if (vps.items.size() == 1) return vp_text(vps.items[0]);
  std::vector<std::string> parts;
  for (const auto& vp : vps.items) parts.push_back("(" + vp_text(vp) + ")");
  return join(parts, vps.conn == Connective::kOr ? " or " : " and ");
}

std::string np_text(const NounPhrase& np) {
  switch (np.kind) {
    case NounPhrase::Kind::kProper:
      return np.head->surface;
    case NounPhrase::Kind::kPronoun:
    case NounPhrase::Kind::kWh:
      return np.head->lemma;
    case NounPhrase::Kind::kNumber:
      return std::to_string(np.number_value);
    case NounPhrase::Kind::kQuant: {
      std::string out = np.det ? np.det->surface + " " : "";
      for (const auto* adj : np.adjectives) out += adj->surface + " ";
      out += np.head->surface;
      if (np.head_plural) out += "s";
      if (np.relative) {
        const RelClause& rel = *np.relative;
        out += " " + rel.relpron->lemma + " ";
        if (rel.subject_gap) {
          out = "(" + out + vplist_text(rel.vps) + ")";
        } else {
          std::string inner = np_text(*rel.inner_subject) + " " +
                              rel.gap_verb.verb->surface +
                              (rel.gap_verb.third_sg ? "s" : "");
          if (!rel.inner_extra.items.empty())
            inner = "(" + inner + " and " + vplist_text(rel.inner_extra) + ")";
          out = "(" + out + inner + ")";
        }
      }
      return out;
    }
  }
  return "?";
}

std::string clause_text(const ClauseAst& c) {
  return np_text(*c.subject) + " " + vplist_text(c.vps);
}

std::string seq_text(const ClauseSeq& seq) {
  std::vector<std::string> parts;
  for (size_t i = 0; i < seq.items.size(); ++i) {
    std::string part = clause_text(seq.items[i]);
    if (i && i < seq.sequenced.size() && seq.sequenced[i]) part = "then " + part;
    parts.push_back(part);
  }
  return join(parts, seq.conn == Connective::kOr ? " or " : " and ");
}

}  // namespace

std::string SentenceAst::render_tree() const {
  switch (kind) {
    case Kind::kDeclarative:
      return "(s " + seq_tree(main) + ")";
    case Kind::kConditional:
      return "(s (if " + seq_tree(antecedent) + ") (then " +
             seq_tree(consequent) + "))";
    case Kind::kYesNo:
      return "(q-yesno " + seq_tree(main) + ")";
    case Kind::kWh:
      return std::string("(q-wh") + (wh_object ? " obj " : " ") +
             seq_tree(main) + ")";
  }
  return "?";
}

std::string SentenceAst::summary() const {
  switch (kind) {
    case Kind::kDeclarative:
      return seq_text(main);
    case Kind::kConditional:
      return "if " + seq_text(antecedent) + " then " + seq_text(consequent);
    case Kind::kYesNo:
      return "whether " + seq_text(main);
    case Kind::kWh:
      return seq_text(main);
  }
  return "?";
}

}  // namespace cnl
