// Feature structures with graph unification.
//
// A feature structure maps feature names to values; a value is an atom, a
// set of atoms (a disjunctive value such as a gender set), or a nested
// structure. An absent feature is unbound. Unification is symmetric and
// returns no value on clash rather than raising.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cnl {

class FeatureStructure;

class FeatureValue {
 public:
  // Atom sets are kept sorted and deduplicated so equality is structural.
  static FeatureValue atom(std::string a);
  static FeatureValue atom_set(std::vector<std::string> items);
  static FeatureValue nested(FeatureStructure fs);

  bool is_atom() const;
  bool is_atom_set() const;
  bool is_nested() const;

  const std::string& as_atom() const;
  const std::vector<std::string>& as_atom_set() const;
  const FeatureStructure& as_nested() const;

  bool operator==(const FeatureValue& other) const;

  // Linear notation: atoms bare, sets as [a,b], nested in parentheses.
  std::string render() const;

 private:
  std::variant<std::string, std::vector<std::string>,
               std::shared_ptr<FeatureStructure>>
      value_;
};

class FeatureStructure {
 public:
  FeatureStructure() = default;

  bool empty() const { return slots_.empty(); }

  // Value at a feature path, or nullopt when any step is unbound.
  std::optional<FeatureValue> get(const std::vector<std::string>& path) const;

  // Structure with the value unified in at the path; intermediate structures
  // are created as needed. Nullopt when the existing value clashes.
  std::optional<FeatureStructure> put(const std::vector<std::string>& path,
                                      const FeatureValue& value) const;

  bool operator==(const FeatureStructure& other) const;

  // `f1:v1 .. f2:(g:w)` with features in name order.
  std::string render() const;

  const std::map<std::string, FeatureValue>& slots() const { return slots_; }

 private:
  friend std::optional<FeatureValue> unify_values(const FeatureValue& a,
                                                  const FeatureValue& b);
  friend std::optional<FeatureStructure> unify(const FeatureStructure& a,
                                               const FeatureStructure& b);
  std::map<std::string, FeatureValue> slots_;
};

// Most general structure subsumed by both, or nullopt on clash.
std::optional<FeatureStructure> unify(const FeatureStructure& a,
                                      const FeatureStructure& b);
std::optional<FeatureValue> unify_values(const FeatureValue& a,
                                         const FeatureValue& b);

}  // namespace cnl
