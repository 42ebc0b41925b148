#include "doctest.h"

#include "cnl/feature_structure.hpp"
#include "generators.hpp"

using namespace cnl;
using cnl::testing::Rng;

TEST_CASE("atoms unify when equal and clash otherwise") {
  auto a = FeatureValue::atom("m");
  CHECK(unify_values(a, FeatureValue::atom("m")) == a);
  CHECK(!unify_values(a, FeatureValue::atom("f")));
}

TEST_CASE("atom sets intersect; an atom member survives as the atom") {
  auto mf = FeatureValue::atom_set({"m", "f"});
  auto fn = FeatureValue::atom_set({"f", "n"});
  auto joined = unify_values(mf, fn);
  REQUIRE(joined);
  CHECK(joined->render() == "[f]");
  auto with_atom = unify_values(mf, FeatureValue::atom("f"));
  REQUIRE(with_atom);
  CHECK(with_atom->is_atom());
  CHECK(!unify_values(mf, FeatureValue::atom("n")));
  CHECK(!unify_values(mf, FeatureValue::atom_set({"n"})));
}

TEST_CASE("structures unify by feature; absent features are unbound") {
  FeatureStructure a = *FeatureStructure().put({"gender"}, FeatureValue::atom("m"));
  FeatureStructure b = *FeatureStructure().put({"number"}, FeatureValue::atom("sg"));
  auto joined = unify(a, b);
  REQUIRE(joined);
  CHECK(joined->get({"gender"})->as_atom() == "m");
  CHECK(joined->get({"number"})->as_atom() == "sg");
  CHECK(!joined->get({"person"}));
}

TEST_CASE("nested paths are created by put and traversed by get") {
  FeatureStructure fs;
  auto deep = fs.put({"agr", "gender"}, FeatureValue::atom("n"));
  REQUIRE(deep);
  CHECK(deep->get({"agr", "gender"})->as_atom() == "n");
  CHECK(deep->get({"agr"})->is_nested());
  auto clash = deep->put({"agr", "gender"}, FeatureValue::atom("m"));
  CHECK(!clash);
  auto refine = deep->put({"agr", "number"}, FeatureValue::atom("sg"));
  REQUIRE(refine);
  CHECK(refine->get({"agr", "number"})->as_atom() == "sg");
}

TEST_CASE("nested values never unify with atoms") {
  FeatureStructure inner = *FeatureStructure().put({"g"}, FeatureValue::atom("m"));
  CHECK(!unify_values(FeatureValue::nested(inner), FeatureValue::atom("m")));
}

TEST_CASE("render is deterministic and ordered") {
  FeatureStructure fs =
      *FeatureStructure().put({"number"}, FeatureValue::atom("sg"));
  fs = *fs.put({"gender"}, FeatureValue::atom_set({"m", "f"}));
  CHECK(fs.render() == "gender:[f,m] number:sg");
}

TEST_CASE("unification laws hold on random structures") {
  Rng rng(20260819);
  int successes = 0;
  for (int i = 0; i < 1000; ++i) {
    FeatureStructure a = cnl::testing::random_structure(rng, 2);
    FeatureStructure b = cnl::testing::random_structure(rng, 2);
    FeatureStructure c = cnl::testing::random_structure(rng, 2);

    CAPTURE(i);
    CAPTURE(a.render());
    CAPTURE(b.render());
    CAPTURE(c.render());

    // Idempotence and identity.
    auto aa = unify(a, a);
    REQUIRE(aa);
    CHECK(*aa == a);
    auto with_empty = unify(a, FeatureStructure());
    REQUIRE(with_empty);
    CHECK(*with_empty == a);

    // Commutativity: same success and same result.
    auto ab = unify(a, b);
    auto ba = unify(b, a);
    CHECK(ab.has_value() == ba.has_value());
    if (ab) {
      CHECK(*ab == *ba);
      ++successes;
    }

    // Associativity: both groupings succeed together and agree.
    auto bc = unify(b, c);
    std::optional<FeatureStructure> left, right;
    if (ab) left = unify(*ab, c);
    if (bc) right = unify(a, *bc);
    CHECK(left.has_value() == right.has_value());
    if (left && right) CHECK(*left == *right);

    // A successful unification is an upper bound: re-unifying either
    // operand into the result changes nothing.
    if (ab) {
      auto again = unify(*ab, a);
      REQUIRE(again);
      CHECK(*again == *ab);
    }
  }
  // The generator must exercise both successes and clashes.
  CHECK(successes > 100);
  CHECK(successes < 1000);
}
