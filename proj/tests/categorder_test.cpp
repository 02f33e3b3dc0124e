#include <gtest/gtest.h>

#include "pcat/categorder.hpp"
#include "pcat/fixtures.hpp"

using namespace pcat;

namespace {

// The two-element group {id, a} with a . a = id, ordered a <= id.
Categorder z2_with(bool ordered) {
  CategorderBuilder b;
  b.add_object("x");
  b.add_morphism("a", "x", "x");
  b.set_composite("a", "a", "id:x");
  if (ordered) b.add_order("a", "id:x");
  return b.build();
}

}  // namespace

TEST(ValidateCategorder, FixturesAreValid) {
  for (const auto& name : fixtures::categorder_names()) {
    auto r = validate_categorder(fixtures::categorder(name));
    EXPECT_TRUE(r.ok()) << name << "\n" << summarize(r);
  }
}

TEST(ValidateCategorder, OrdmonMonotonicityTable) {
  auto c = fixtures::ordmon();
  auto r = validate_categorder(c);
  EXPECT_TRUE(r.ok()) << summarize(r);
  EXPECT_GT(r.find("monotonicity")->instances, 0u);
}

// Reversing ORDMON's order gives id <= e. Composition stays monotone there:
// id . id = id <= e = e . e, and e is idempotent, so the reversed order is a
// valid categorder too.
TEST(ValidateCategorder, ReversedOrdmonIsStillMonotone) {
  CategorderBuilder b;
  b.add_object("x");
  b.add_morphism("e", "x", "x");
  b.set_composite("e", "e", "e");
  b.add_order("id:x", "e");
  auto r = validate_categorder(b.build());
  EXPECT_TRUE(r.ok()) << summarize(r);
}

TEST(ValidateCategorder, MonotonicityViolationHasWitness) {
  EXPECT_TRUE(validate_categorder(z2_with(false)).ok());
  auto r = validate_categorder(z2_with(true));
  EXPECT_FALSE(r.passed("monotonicity"));
  EXPECT_TRUE(r.passed("associativity"));
  const Check* m = r.find("monotonicity");
  ASSERT_FALSE(m->failures.empty());
  // a <= id, yet a . a = id is not below a . id = a
  EXPECT_EQ(m->failures[0].witness[0], "a");
  EXPECT_EQ(m->failures[0].witness[1], "id:x");
}

TEST(ValidateCategorder, MissingCompositeIsReported) {
  CategorderBuilder b;
  b.add_object("A");
  b.add_object("B");
  b.add_object("C");
  b.add_morphism("f", "A", "B");
  b.add_morphism("g", "B", "C");
  auto r = validate_categorder(b.build());
  EXPECT_FALSE(r.passed("composition_total"));
}

TEST(ValidateCategorder, AssociativityFailure) {
  // monoid {id, a, b} with a table that is not associative
  CategorderBuilder b;
  b.add_object("x");
  b.add_morphism("a", "x", "x");
  b.add_morphism("b", "x", "x");
  b.set_composite("a", "a", "b");
  b.set_composite("a", "b", "a");
  b.set_composite("b", "a", "b");
  b.set_composite("b", "b", "b");
  auto r = validate_categorder(b.build());
  EXPECT_FALSE(r.passed("associativity"));
}

TEST(ValidateCategorder, StrayOrderAndComposites) {
  CategorderBuilder b;
  b.add_object("A");
  b.add_object("B");
  b.add_morphism("f", "A", "B");
  b.add_order("f", "id:A");
  b.set_composite("f", "f", "f");
  auto r = validate_categorder(b.build());
  EXPECT_FALSE(r.passed("order_parallel"));
  EXPECT_FALSE(r.passed("stray_composition"));
}

TEST(ValidateCategorder, PreorderRejected) {
  CategorderBuilder b;
  b.add_object("x");
  b.add_morphism("e", "x", "x");
  b.set_composite("e", "e", "e");
  b.add_order("e", "id:x");
  b.add_order("id:x", "e");
  EXPECT_FALSE(validate_categorder(b.build()).passed("order_antisymmetry"));
}

TEST(ValidateCategorder, MissingIdentity) {
  CategorderBuilder b;
  b.add_bare_object("x");
  EXPECT_FALSE(validate_categorder(b.build()).passed("identity"));
}

TEST(ReflexiveCategorder, StripsOrders) {
  auto walk = reflexive_categorder(fixtures::walk());
  EXPECT_TRUE(structurally_equal(walk, fixtures::walk()));
  EXPECT_TRUE(structurally_equal(reflexive_categorder(fixtures::term()), fixtures::term()));
  EXPECT_TRUE(structurally_equal(reflexive_categorder(fixtures::ksrc()), fixtures::ksrc()));
  auto plain = reflexive_categorder(fixtures::ordmon());
  EXPECT_TRUE(plain.is_plain());
  EXPECT_FALSE(fixtures::ordmon().is_plain());
  EXPECT_TRUE(validate_categorder(plain).ok());
  // applying it twice changes nothing
  EXPECT_TRUE(structurally_equal(reflexive_categorder(plain), plain));
}

TEST(ReflexiveCategorder, RejectsInvalidCategory) {
  CategorderBuilder b;
  b.add_object("A");
  b.add_object("B");
  b.add_object("C");
  b.add_morphism("f", "A", "B");
  b.add_morphism("g", "B", "C");
  EXPECT_THROW(reflexive_categorder(b.build()), Error);
}

TEST(DiscreteIndiscrete, SpecExamples) {
  auto d = discrete({"a", "b"});
  EXPECT_EQ(d.object_count(), 2u);
  EXPECT_EQ(d.morphism_count(), 2u);
  EXPECT_TRUE(validate_categorder(d).ok());
  auto i = indiscrete({"a", "b"});
  EXPECT_EQ(i.object_count(), 2u);
  EXPECT_EQ(i.morphism_count(), 4u);
  EXPECT_TRUE(validate_categorder(i).ok());
  auto e = discrete({});
  EXPECT_EQ(e.object_count(), 0u);
  EXPECT_TRUE(validate_categorder(e).ok());
  EXPECT_TRUE(validate_categorder(indiscrete({"a", "b", "c"})).ok());
}

TEST(ForgetObjects, SpecExamples) {
  EXPECT_EQ(forget_objects(fixtures::walk()), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(forget_objects(fixtures::term()), (std::vector<std::string>{"*"}));
  EXPECT_EQ(forget_objects(discrete({"a", "b", "c"})), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(HomUnion, SpecExamples) {
  auto walk = fixtures::walk();
  auto all = hom_union(walk, {"A", "B"}, {"A", "B"});
  EXPECT_EQ(all.size(), 3u);
  EXPECT_TRUE(all.covers().empty());
  EXPECT_EQ(hom_union(walk, {"B"}, {"A"}).size(), 0u);
  auto om = hom_union(fixtures::ordmon(), {"x"}, {"x"});
  EXPECT_EQ(om, FinitePoset({"e", "id:x"}, {{"e", "id:x"}}));
  EXPECT_THROW(hom_union(walk, {"Q"}, {"A"}), Error);
}

TEST(HomUnion, SingletonsGiveTheHomSet) {
  for (const auto& name : fixtures::categorder_names()) {
    auto c = fixtures::categorder(name);
    for (ObjId x = 0; x < c.object_count(); ++x)
      for (ObjId y = 0; y < c.object_count(); ++y) {
        auto p = hom_union(c, {c.object_name(x)}, {c.object_name(y)});
        EXPECT_EQ(p.size(), c.hom(x, y).size());
        for (auto a : c.hom(x, y))
          for (auto b2 : c.hom(x, y))
            EXPECT_EQ(p.leq(p.require(c.morphism_name(a)), p.require(c.morphism_name(b2))), c.leq(a, b2));
      }
  }
}

TEST(Builder, RoundTripThroughFrom) {
  for (const auto& name : fixtures::categorder_names()) {
    auto c = fixtures::categorder(name);
    EXPECT_TRUE(structurally_equal(CategorderBuilder::from(c).build(), c)) << name;
  }
}

TEST(Builder, DanglingIdsThrow) {
  CategorderBuilder b;
  b.add_object("A");
  b.add_morphism("f", 0, 7);
  EXPECT_THROW(b.build(), Error);
  CategorderBuilder b2;
  EXPECT_THROW(b2.add_morphism("f", "A", "B"), Error);
}
