#include "cnl/feature_structure.hpp"

#include <algorithm>
#include <memory>

#include "cnl/text_util.hpp"

namespace cnl {

FeatureValue FeatureValue::atom(std::string a) {
  FeatureValue v;
  v.value_ = std::move(a);
  return v;
}

FeatureValue FeatureValue::atom_set(std::vector<std::string> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  FeatureValue v;
  v.value_ = std::move(items);
  return v;
}

FeatureValue FeatureValue::nested(FeatureStructure fs) {
  FeatureValue v;
  v.value_ = std::make_shared<FeatureStructure>(std::move(fs));
  return v;
}

bool FeatureValue::is_atom() const {
  return std::holds_alternative<std::string>(value_);
}

bool FeatureValue::is_atom_set() const {
  return std::holds_alternative<std::vector<std::string>>(value_);
}

bool FeatureValue::is_nested() const {
  return std::holds_alternative<std::shared_ptr<FeatureStructure>>(value_);
}

const std::string& FeatureValue::as_atom() const {
  return std::get<std::string>(value_);
}

const std::vector<std::string>& FeatureValue::as_atom_set() const {
  return std::get<std::vector<std::string>>(value_);
}

const FeatureStructure& FeatureValue::as_nested() const {
  return *std::get<std::shared_ptr<FeatureStructure>>(value_);
}

bool FeatureValue::operator==(const FeatureValue& other) const {
  if (is_atom() && other.is_atom()) return as_atom() == other.as_atom();
  if (is_atom_set() && other.is_atom_set())
    return as_atom_set() == other.as_atom_set();
  if (is_nested() && other.is_nested()) return as_nested() == other.as_nested();
  return false;
}

std::string FeatureValue::render() const {
  if (is_atom()) return as_atom();
  if (is_atom_set()) return "[" + join(as_atom_set(), ",") + "]";
  return "(" + as_nested().render() + ")";
}

std::optional<FeatureValue> unify_values(const FeatureValue& a,
                                         const FeatureValue& b) {
  if (a.is_nested() && b.is_nested()) {
    auto sub = unify(a.as_nested(), b.as_nested());
    if (!sub) return std::nullopt;
    return FeatureValue::nested(*sub);
  }
  if (a.is_nested() || b.is_nested()) return std::nullopt;
  if (a.is_atom() && b.is_atom())
    return a.as_atom() == b.as_atom() ? std::optional<FeatureValue>(a)
                                      : std::nullopt;
  // An atom against a set succeeds when the atom is a member; the atom, being
  // the more specific value, survives.
  if (a.is_atom()) {
    const auto& set = b.as_atom_set();
    return std::find(set.begin(), set.end(), a.as_atom()) != set.end()
               ? std::optional<FeatureValue>(a)
               : std::nullopt;
  }
  if (b.is_atom()) return unify_values(b, a);
  std::vector<std::string> common;
  std::set_intersection(a.as_atom_set().begin(), a.as_atom_set().end(),
                        b.as_atom_set().begin(), b.as_atom_set().end(),
                        std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return FeatureValue::atom_set(std::move(common));
}

std::optional<FeatureStructure> unify(const FeatureStructure& a,
                                      const FeatureStructure& b) {
  FeatureStructure out = a;
  for (const auto& [name, value] : b.slots_) {
    auto it = out.slots_.find(name);
    if (it == out.slots_.end()) {
      out.slots_.emplace(name, value);
      continue;
    }
    auto merged = unify_values(it->second, value);
    if (!merged) return std::nullopt;
    it->second = *merged;
  }
  return out;
}

std::optional<FeatureValue> FeatureStructure::get(
    const std::vector<std::string>& path) const {
  const FeatureStructure* cur = this;
  for (size_t i = 0; i < path.size(); ++i) {
    auto it = cur->slots_.find(path[i]);
    if (it == cur->slots_.end()) return std::nullopt;
    if (i + 1 == path.size()) return it->second;
    if (!it->second.is_nested()) return std::nullopt;
    cur = &it->second.as_nested();
  }
  return std::nullopt;
}

std::optional<FeatureStructure> FeatureStructure::put(
    const std::vector<std::string>& path, const FeatureValue& value) const {
  if (path.empty()) return std::nullopt;
  // Wrap the value in singleton structures along the path, then unify.
  FeatureValue wrapped = value;
  for (size_t i = path.size(); i-- > 0;) {
    FeatureStructure level;
    level.slots_.emplace(path[i], std::move(wrapped));
    wrapped = FeatureValue::nested(std::move(level));
  }
  return unify(*this, wrapped.as_nested());
}

bool FeatureStructure::operator==(const FeatureStructure& other) const {
  return slots_ == other.slots_;
}

std::string FeatureStructure::render() const {
  std::vector<std::string> parts;
  for (const auto& [name, value] : slots_)
    parts.push_back(name + ":" + value.render());
  return join(parts, " .. ");
}

}  // namespace cnl
