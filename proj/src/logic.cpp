#include "cnl/logic.hpp"

#include <cctype>

#include "cnl/errors.hpp"
#include "cnl/text_util.hpp"

namespace cnl {

Term Term::var(std::string name) {
  Term t;
  t.kind_ = Kind::kVar;
  t.name_ = std::move(name);
  return t;
}

Term Term::sym(std::string name) {
  Term t;
  t.kind_ = Kind::kSym;
  t.name_ = std::move(name);
  return t;
}

Term Term::integer(long value) {
  Term t;
  t.kind_ = Kind::kInt;
  t.value_ = value;
  return t;
}

Term Term::skolem(int index, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::kSkolem;
  t.value_ = index;
  t.args_ = std::move(args);
  return t;
}

bool Term::operator==(const Term& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::kVar:
    case Kind::kSym:
      return name_ == other.name_;
    case Kind::kInt:
      return value_ == other.value_;
    case Kind::kSkolem:
      return value_ == other.value_ && args_ == other.args_;
  }
  return false;
}

bool Term::operator<(const Term& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  switch (kind_) {
    case Kind::kVar:
    case Kind::kSym:
      return name_ < other.name_;
    case Kind::kInt:
      return value_ < other.value_;
    case Kind::kSkolem:
      if (value_ != other.value_) return value_ < other.value_;
      return args_ < other.args_;
  }
  return false;
}

std::string Term::render() const {
  switch (kind_) {
    case Kind::kVar:
    case Kind::kSym:
      return name_;
    case Kind::kInt:
      return std::to_string(value_);
    case Kind::kSkolem: {
      std::string out = "[" + std::to_string(value_);
      for (const auto& a : args_) out += "," + a.render();
      return out + "]";
    }
  }
  return "?";
}

bool Literal::operator==(const Literal& other) const {
  return positive == other.positive && pred == other.pred && args == other.args;
}

std::string Literal::render() const {
  std::string out = positive ? "" : "naf ";
  out += pred;
  if (!args.empty()) {
    out += "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i].render();
    }
    out += ")";
  }
  return out;
}

bool Clause::operator==(const Clause& other) const {
  return head == other.head && body == other.body && origin == other.origin;
}

std::string Clause::render() const {
  std::string out = head.render();
  if (!body.empty()) {
    out += " :- ";
    for (size_t i = 0; i < body.size(); ++i) {
      if (i) out += ", ";
      out += body[i].render();
    }
  }
  return out + ".";
}

std::vector<Clause> MultiHeadClause::distribute(const Provenance& origin) const {
  std::vector<Clause> out;
  for (const auto& h : heads) {
    Clause c;
    c.head = h;
    c.body = body;
    c.origin = origin;
    out.push_back(std::move(c));
  }
  return out;
}

std::string MultiHeadClause::render() const {
  std::vector<std::string> hs, bs;
  for (const auto& h : heads) hs.push_back(h.render());
  for (const auto& b : body) bs.push_back(b.render());
  std::string out = join(hs, ", ");
  if (!bs.empty()) out += " ::- " + join(bs, ", ");
  return out + ".";
}

Term walk(const Term& t, const Bindings& b) {
  Term cur = t;
  while (cur.kind() == Term::Kind::kVar) {
    auto it = b.find(cur.name());
    if (it == b.end()) return cur;
    cur = it->second;
  }
  return cur;
}

Term apply_bindings(const Term& t, const Bindings& b) {
  Term cur = walk(t, b);
  if (cur.kind() != Term::Kind::kSkolem) return cur;
  std::vector<Term> args;
  for (const auto& a : cur.args()) args.push_back(apply_bindings(a, b));
  return Term::skolem(cur.skolem_index(), std::move(args));
}

Literal apply_bindings(const Literal& l, const Bindings& b) {
  Literal out = l;
  for (auto& a : out.args) a = apply_bindings(a, b);
  return out;
}

bool unify_terms(const Term& x, const Term& y, Bindings& b,
                 std::vector<std::string>& trail) {
  Term a = walk(x, b);
  Term c = walk(y, b);
  if (a.kind() == Term::Kind::kVar) {
    if (c.kind() == Term::Kind::kVar && c.name() == a.name()) return true;
    b.emplace(a.name(), c);
    trail.push_back(a.name());
    return true;
  }
  if (c.kind() == Term::Kind::kVar) return unify_terms(c, a, b, trail);
  if (a.kind() != c.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kSym:
      return a.name() == c.name();
    case Term::Kind::kInt:
      return a.value() == c.value();
    case Term::Kind::kSkolem: {
      if (a.skolem_index() != c.skolem_index()) return false;
      if (a.args().size() != c.args().size()) return false;
      for (size_t i = 0; i < a.args().size(); ++i)
        if (!unify_terms(a.args()[i], c.args()[i], b, trail)) return false;
      return true;
    }
    case Term::Kind::kVar:
      break;
  }
  return false;
}

void undo_trail(Bindings& b, std::vector<std::string>& trail, size_t mark) {
  while (trail.size() > mark) {
    b.erase(trail.back());
    trail.pop_back();
  }
}

namespace {

// Bijective correspondence of variable names. Skolem indices are fixed
// identities and never rename: [6,X] and [8,X] denote different functions.
struct VariantMap {
  std::map<std::string, std::string> vars_ab, vars_ba;

  bool map_var(const std::string& a, const std::string& b) {
    auto [it1, new1] = vars_ab.emplace(a, b);
    auto [it2, new2] = vars_ba.emplace(b, a);
    return it1->second == b && it2->second == a && new1 == new2;
  }
};

bool variant_terms(const Term& a, const Term& b, VariantMap& m) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar:
      return m.map_var(a.name(), b.name());
    case Term::Kind::kSym:
      return a.name() == b.name();
    case Term::Kind::kInt:
      return a.value() == b.value();
    case Term::Kind::kSkolem: {
      if (a.skolem_index() != b.skolem_index()) return false;
      if (a.args().size() != b.args().size()) return false;
      for (size_t i = 0; i < a.args().size(); ++i)
        if (!variant_terms(a.args()[i], b.args()[i], m)) return false;
      return true;
    }
  }
  return false;
}

bool variant_literals(const Literal& a, const Literal& b, VariantMap& m) {
  if (a.positive != b.positive || a.pred != b.pred ||
      a.args.size() != b.args.size())
    return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!variant_terms(a.args[i], b.args[i], m)) return false;
  return true;
}

}  // namespace

bool variant_clauses(const Clause& a, const Clause& b) {
  if (a.body.size() != b.body.size()) return false;
  VariantMap m;
  if (!variant_literals(a.head, b.head, m)) return false;
  for (size_t i = 0; i < a.body.size(); ++i)
    if (!variant_literals(a.body[i], b.body[i], m)) return false;
  return true;
}

bool subsumes_literal(const Literal& general, const Literal& specific) {
  if (general.positive != specific.positive || general.pred != specific.pred ||
      general.args.size() != specific.args.size())
    return false;
  Bindings b;
  std::vector<std::string> trail;
  for (size_t i = 0; i < general.args.size(); ++i)
    if (!unify_terms(general.args[i], specific.args[i], b, trail)) return false;
  // One-sided match: no variable of the specific literal may have been bound.
  for (const auto& name : trail) {
    bool in_general = false;
    std::vector<const Term*> stack;
    for (const auto& a : general.args) stack.push_back(&a);
    while (!stack.empty()) {
      const Term* t = stack.back();
      stack.pop_back();
      if (t->kind() == Term::Kind::kVar && t->name() == name) in_general = true;
      if (t->kind() == Term::Kind::kSkolem)
        for (const auto& a : t->args()) stack.push_back(&a);
    }
    if (!in_general) return false;
  }
  return true;
}

Clause rename_clause(const Clause& c, int serial) {
  auto rename_term = [&](const Term& t, auto&& self) -> Term {
    switch (t.kind()) {
      case Term::Kind::kVar:
        return Term::var(t.name() + "_" + std::to_string(serial));
      case Term::Kind::kSkolem: {
        std::vector<Term> args;
        for (const auto& a : t.args()) args.push_back(self(a, self));
        return Term::skolem(t.skolem_index(), std::move(args));
      }
      default:
        return t;
    }
  };
  Clause out = c;
  for (auto& a : out.head.args) a = rename_term(a, rename_term);
  for (auto& l : out.body)
    for (auto& a : l.args) a = rename_term(a, rename_term);
  return out;
}

namespace {

// Minimal recursive-descent reader for the rendered clause syntax.
class ClauseReader {
 public:
  ClauseReader(const std::string& text, int line_no)
      : text_(text), line_(line_no) {}

  Clause read() {
    Clause c;
    skip_ws();
    c.head = read_literal();
    skip_ws();
    if (peek(":")) {
      expect(":-");
      for (;;) {
        skip_ws();
        c.body.push_back(read_literal());
        skip_ws();
        if (!peek(",")) break;
        expect(",");
      }
    }
    expect(".");
    skip_ws();
    if (pos_ != text_.size()) fail("trailing text after clause");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw KbFormatError(line_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(const std::string& s) const {
    return text_.compare(pos_, s.size(), s) == 0;
  }

  void expect(const std::string& s) {
    if (!peek(s)) fail("expected '" + s + "'");
    pos_ += s.size();
  }

  std::string read_ident() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

  Literal read_literal() {
    Literal l;
    if (peek("naf ")) {
      l.positive = false;
      pos_ += 4;
      skip_ws();
    }
    l.pred = read_ident();
    if (std::isupper(static_cast<unsigned char>(l.pred[0])))
      fail("predicate must not start with an uppercase letter");
    skip_ws();
    if (peek("(")) {
      expect("(");
      for (;;) {
        skip_ws();
        l.args.push_back(read_term());
        skip_ws();
        if (peek(")")) break;
        expect(",");
      }
      expect(")");
    }
    return l;
  }

  Term read_term() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of clause");
    char c = text_[pos_];
    if (c == '[') {
      expect("[");
      skip_ws();
      long index = read_integer();
      std::vector<Term> args;
      skip_ws();
      while (peek(",")) {
        expect(",");
        args.push_back(read_term());
        skip_ws();
      }
      expect("]");
      return Term::skolem(static_cast<int>(index), std::move(args));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-')
      return Term::integer(read_integer());
    std::string ident = read_ident();
    if (std::isupper(static_cast<unsigned char>(ident[0])) || ident[0] == '_')
      return Term::var(ident);
    return Term::sym(ident);
  }

  long read_integer() {
    size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  const std::string& text_;
  int line_;
  size_t pos_ = 0;
};

}  // namespace

Clause parse_clause(const std::string& text, int line_no) {
  return ClauseReader(text, line_no).read();
}

}  // namespace cnl
