#include <gtest/gtest.h>

#include "pcat/fixtures.hpp"
#include "pcat/generate.hpp"
#include "pcat/pmv.hpp"

using namespace pcat;

namespace {

GenSpec small(std::uint64_t seed, std::size_t objects, std::size_t arrows = 4) {
  GenSpec s;
  s.objects = objects;
  s.arrows = arrows;
  s.seed = seed;
  return s;
}

// Plain categories with at most three objects and six morphisms in total.
CategorderPtr random_category(Rng& rng) {
  GenSpec s = small(0, 1 + rng.below(3));
  s.arrows = 6 - s.objects;
  return share(gen_category(s, rng));
}

// Straight from the definitions, with no shared helpers.
bool naive_valid(const PmvFunctor& F) {
  const Categorder& s = *F.source;
  const Categorder& t = *F.target;
  auto in = [](const auto& v, auto x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  for (MorId c = 0; c < s.morphism_count(); ++c)
    for (MorId d : F.morphisms[c]) {
      if (!in(F.objects[s.dom(c)], t.dom(d)) || !in(F.objects[s.cod(c)], t.cod(d))) return false;
    }
  for (ObjId x = 0; x < s.object_count(); ++x)
    for (MorId d : F.morphisms[s.identity(x)]) {
      bool ok = false;
      for (ObjId y = 0; y < t.object_count(); ++y)
        if (in(F.objects[x], y) && d == t.identity(y)) ok = true;
      if (!ok) return false;
    }
  for (MorId c = 0; c < s.morphism_count(); ++c)
    for (MorId c2 = 0; c2 < s.morphism_count(); ++c2) {
      if (s.cod(c) != s.dom(c2)) continue;
      for (MorId d3 : F.morphisms[s.compose(c2, c)]) {
        bool ok = false;
        for (MorId d = 0; d < t.morphism_count(); ++d)
          for (MorId d2 = 0; d2 < t.morphism_count(); ++d2)
            if (in(F.morphisms[c], d) && in(F.morphisms[c2], d2) && t.cod(d) == t.dom(d2) && t.compose(d2, d) == d3)
              ok = true;
        if (!ok) return false;
      }
    }
  return true;
}

PmvFunctor random_relation(const CategorderPtr& a, const CategorderPtr& b, Rng& rng) {
  PmvFunctor F{a, b, std::vector<std::vector<ObjId>>(a->object_count()),
               std::vector<std::vector<MorId>>(a->morphism_count())};
  for (auto& v : F.objects)
    for (ObjId y = 0; y < b->object_count(); ++y)
      if (rng.chance(2, 3)) v.push_back(y);
  for (auto& v : F.morphisms)
    for (MorId d = 0; d < b->morphism_count(); ++d)
      if (rng.chance(1, 3)) v.push_back(d);
  return F;
}

}  // namespace

TEST(ValidatePmv, FunctorsArePmv) {
  auto K = fixtures::k();
  auto F = functor_as_pmv(K);
  EXPECT_TRUE(validate_pmv(F).ok()) << summarize(validate_pmv(F));
  for (const auto& m : F.morphisms) EXPECT_EQ(m.size(), 1u);
}

TEST(ValidatePmv, IdentityAxiomFailure) {
  auto w = share(fixtures::walk());
  const ObjId A = w->object("A"), B = w->object("B");
  const MorId f = w->morphism("f"), idA = w->morphism("id:A"), idB = w->morphism("id:B");
  PmvFunctor F{w, w, {}, {}};
  F.objects.resize(2);
  F.objects[A] = {A, B};
  F.objects[B] = {B};
  F.morphisms.resize(3);
  F.morphisms[idA] = {std::min(idA, f), std::max(idA, f)};
  F.morphisms[idB] = {idB};
  F.morphisms[f] = {f};
  auto r = validate_pmv(F);
  EXPECT_FALSE(r.passed("identity_axiom"));
  EXPECT_TRUE(r.passed("typing"));
  EXPECT_TRUE(r.passed("decomposition_axiom"));
  EXPECT_EQ(r.find("identity_axiom")->failures[0].witness, (std::vector<std::string>{"A", "f"}));
}

TEST(ValidatePmv, DecompositionFailure) {
  auto t = share(fixtures::ktgt());
  PmvFunctor F = pmv_identity(t);
  F.morphisms[t->morphism("q")] = {};
  F.morphisms[t->morphism("p")] = {};
  auto r = validate_pmv(F);
  EXPECT_FALSE(r.passed("decomposition_axiom"));
  EXPECT_TRUE(r.passed("identity_axiom"));
  const auto& w = r.find("decomposition_axiom")->failures[0].witness;
  EXPECT_EQ(w, (std::vector<std::string>{"q", "p", "qp"}));
}

TEST(ValidatePmv, RejectsOrderedCategories) {
  auto o = share(fixtures::ordmon());
  EXPECT_FALSE(validate_pmv(pmv_identity(o)).passed("plain_categories"));
}

TEST(ValidatePmv, AgreesWithNaiveDefinition) {
  std::size_t valid = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    auto a = random_category(rng);
    auto b = random_category(rng);
    auto F = rng.coin() ? random_relation(a, b, rng) : gen_pmv(a, b, rng);
    const bool v = validate_pmv(F).ok();
    EXPECT_EQ(v, naive_valid(F)) << seed;
    valid += v;
  }
  EXPECT_GT(valid, 150u);
  EXPECT_LT(valid, 400u);
}

TEST(PmvCompose, UnitLaws) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    auto a = random_category(rng), b = random_category(rng);
    auto F = gen_pmv(a, b, rng);
    EXPECT_EQ(pmv_compose(pmv_identity(b), F), F);
    EXPECT_EQ(pmv_compose(F, pmv_identity(a)), F);
  }
}

TEST(PmvCompose, EqualsKleisliComposite) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    auto a = random_category(rng), b = random_category(rng), c = random_category(rng);
    auto F = gen_pmv(a, b, rng);
    auto G = gen_pmv(b, c, rng);
    auto direct = pmv_compose(G, F);
    EXPECT_TRUE(validate_pmv(direct).ok()) << seed;
    auto via = kleisli_to_pmv(kleisli_compose(pmv_to_kleisli(G), pmv_to_kleisli(F)));
    EXPECT_EQ(direct, via) << seed;
  }
}

TEST(PmvCompose, FunctorsComposeAsFunctors) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    auto a = random_category(rng), b = random_category(rng), c = random_category(rng);
    auto F = gen_functorder(a, b, rng, true);
    auto G = gen_functorder(b, c, rng, true);
    EXPECT_EQ(pmv_compose(functor_as_pmv(G), functor_as_pmv(F)), functor_as_pmv(compose_functorders(G, F)));
  }
}

TEST(PmvRelIso, RoundTrips) {
  auto K = functor_as_pmv(fixtures::k());
  EXPECT_EQ(pmv_rel_iso(pmv_rel_iso(K)), K);
  auto w = share(fixtures::walk());
  PmvFunctor empty{w, w, std::vector<std::vector<ObjId>>(2), std::vector<std::vector<MorId>>(3)};
  auto er = pmv_rel_iso(empty);
  EXPECT_TRUE(er.objects.empty());
  EXPECT_TRUE(er.morphisms.empty());
  EXPECT_EQ(pmv_rel_iso(er), empty);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    auto F = gen_pmv(random_category(rng), random_category(rng), rng);
    auto R = pmv_rel_iso(F);
    EXPECT_TRUE(validate_cat_relation(R).ok());
    EXPECT_EQ(pmv_rel_iso(R), F);
  }
}

TEST(PmvRelIso, PreservesIdentitiesAndComposition) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    auto a = random_category(rng), b = random_category(rng), c = random_category(rng);
    auto F = gen_pmv(a, b, rng);
    auto G = gen_pmv(b, c, rng);
    EXPECT_EQ(pmv_rel_iso(pmv_compose(G, F)), cat_relation_compose(pmv_rel_iso(G), pmv_rel_iso(F)));
    EXPECT_EQ(pmv_rel_iso(pmv_identity(a)), cat_relation_identity(a));
  }
}

TEST(PmvRelIso, RejectsInvalidInput) {
  auto t = share(fixtures::ktgt());
  PmvFunctor F = pmv_identity(t);
  F.morphisms[t->morphism("q")] = {};
  EXPECT_THROW(pmv_rel_iso(F), Error);
}

TEST(PmvKleisliCorrespondence, KleisliOfFunctor) {
  auto k = pmv_to_kleisli(functor_as_pmv(fixtures::k()));
  EXPECT_TRUE(validate_kleisli(k).ok());
  for (const auto& m : k.morphism_map) EXPECT_EQ(m.mor_set.size(), 1u);
  for (const auto& x : k.object_map) EXPECT_EQ(x.size(), 1u);
}

TEST(PmvKleisliCorrespondence, IdentitiesCorrespond) {
  auto w = share(fixtures::walk());
  EXPECT_EQ(kleisli_to_pmv(kleisli_identity(w)), pmv_identity(w));
  EXPECT_EQ(pmv_to_kleisli(pmv_identity(w)), kleisli_identity(w));
}

TEST(PmvKleisliCorrespondence, RoundTripsBothWays) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    auto a = random_category(rng), b = random_category(rng);
    auto F = gen_pmv(a, b, rng);
    auto k = pmv_to_kleisli(F);
    EXPECT_TRUE(validate_kleisli(k).ok()) << seed;
    EXPECT_EQ(kleisli_to_pmv(k), F) << seed;
    auto k2 = gen_kleisli(a, b, rng);
    auto F2 = kleisli_to_pmv(k2);
    EXPECT_TRUE(validate_pmv(F2).ok()) << seed << "\n" << summarize(validate_pmv(F2));
    EXPECT_EQ(pmv_to_kleisli(F2), k2) << seed;
  }
}

TEST(PmvKleisliCorrespondence, OrderedTargetsRefused) {
  auto o = share(fixtures::ordmon());
  EXPECT_THROW(kleisli_to_pmv(kleisli_identity(o)), Error);
}

TEST(FunctorAsPmv, Examples) {
  auto w = share(fixtures::walk());
  EXPECT_EQ(functor_as_pmv(identity_functorder(w)), pmv_identity(w));
  auto c = functor_as_pmv(constant_functorder(w, share(fixtures::term()), 0));
  EXPECT_TRUE(validate_pmv(c).ok());
  for (const auto& m : c.morphisms) EXPECT_EQ(m.size(), 1u);
  auto o = share(fixtures::ordmon());
  auto lax = make_functorder(o, o, {{"x", "x"}}, {{"id:x", "e"}, {"e", "e"}});
  EXPECT_THROW(functor_as_pmv(lax), Error);
}
