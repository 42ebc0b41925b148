// Terms, literals and clauses of the target logic-program form.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cnl {

// A term is a variable, a symbolic constant, an integer constant, or a
// skolem compound [index, args...]. Integer constants serve both as
// discourse individuals and as numeric values.
class Term {
 public:
  enum class Kind { kVar, kSym, kInt, kSkolem };

  static Term var(std::string name);
  static Term sym(std::string name);
  static Term integer(long value);
  static Term skolem(int index, std::vector<Term> args);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }     // var or sym
  long value() const { return value_; }                 // integer
  int skolem_index() const { return static_cast<int>(value_); }
  const std::vector<Term>& args() const { return args_; }

  bool operator==(const Term& other) const;
  bool operator<(const Term& other) const;

  std::string render() const;

 private:
  Kind kind_ = Kind::kSym;
  std::string name_;
  long value_ = 0;
  std::vector<Term> args_;
};

struct Literal {
  bool positive = true;  // false: negation as failure
  std::string pred;
  std::vector<Term> args;

  bool operator==(const Literal& other) const;
  std::string render() const;
};

struct Provenance {
  std::string source;  // the sentence as written
  int sentence = 0;    // 1-based index in the discourse
  bool operator==(const Provenance&) const = default;
};

// `head.` when the body is empty; a negative fact has a naf head and no body.
struct Clause {
  Literal head;
  std::vector<Literal> body;
  Provenance origin;

  bool is_fact() const { return body.empty() && head.positive; }
  bool is_negative_fact() const { return body.empty() && !head.positive; }
  bool operator==(const Clause& other) const;
  std::string render() const;  // without provenance
};

// Intermediate form: several consequent literals over one shared body.
// Distribution splits it into ordinary clauses, one per head.
struct MultiHeadClause {
  std::vector<Literal> heads;
  std::vector<Literal> body;

  std::vector<Clause> distribute(const Provenance& origin) const;
  std::string render() const;  // `h1, h2 ::- body.`
};

// Variable bindings used by unification and resolution.
using Bindings = std::map<std::string, Term>;

// Follows var links until a non-var or unbound var is reached.
Term walk(const Term& t, const Bindings& b);
// Deep substitution.
Term apply_bindings(const Term& t, const Bindings& b);
Literal apply_bindings(const Literal& l, const Bindings& b);

// Unifies into `b`, recording newly bound names on `trail` for undo.
// Skolem terms unify only with variables and with structurally identical
// skolem terms.
bool unify_terms(const Term& x, const Term& y, Bindings& b,
                 std::vector<std::string>& trail);
void undo_trail(Bindings& b, std::vector<std::string>& trail, size_t mark);

// Clause equality up to a consistent renaming of variables. Skolem indices
// must match exactly.
bool variant_clauses(const Clause& a, const Clause& b);

// True when `general` subsumes `specific` under some substitution of the
// general literal's variables; skolem indices must match exactly.
bool subsumes_literal(const Literal& general, const Literal& specific);

// Renames every variable with a suffix, for clause freshening.
Clause rename_clause(const Clause& c, int serial);

// Parsing of the rendered clause syntax, for knowledge base files.
// Raises KbFormatError with the given line number on malformed input.
Clause parse_clause(const std::string& text, int line_no);

}  // namespace cnl
