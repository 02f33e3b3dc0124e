#include <gtest/gtest.h>

#include <chrono>

#include "pcat/emalg.hpp"
#include "pcat/fixtures.hpp"
#include "pcat/generate.hpp"

using namespace pcat;

namespace {

const PCMorphism* find_obstruction(const ExtensionSearch& s, const ObjSet& dom, const ObjSet& cod) {
  for (const auto& o : s.obstructions)
    if (o.dom == dom && o.cod == cod) return &o.top;
  return nullptr;
}

}  // namespace

TEST(JoinSemilattice, FromPoset) {
  auto L = JoinSemilattice::from_poset(fixtures::cube8());
  const auto& p = L.poset();
  EXPECT_EQ(p.name(L.bottom()), "{}");
  EXPECT_EQ(p.name(L.join(p.require("{1}"), p.require("{3}"))), "{1,3}");
  EXPECT_EQ(p.name(L.join({})), "{}");
  EXPECT_EQ(p.name(L.join({p.require("{1}"), p.require("{2}"), p.require("{3}")})), "{1,2,3}");
  EXPECT_EQ(JoinSemilattice::from_poset(fixtures::chain2()).size(), 2u);
}

TEST(JoinSemilattice, RejectsNonLattices) {
  EXPECT_THROW(JoinSemilattice::from_poset(FinitePoset({"a", "b"}, {})), Error);
  EXPECT_THROW(JoinSemilattice::from_poset(FinitePoset({}, {})), Error);
  // a, b below both c and d: no least upper bound for {a, b}
  EXPECT_THROW(JoinSemilattice::from_poset(
                   FinitePoset({"0", "a", "b", "c", "d"},
                               {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}})),
               Error);
}

TEST(FreeAlgebra, Carriers) {
  EXPECT_EQ(free_p1_algebra(share(fixtures::term())).carrier->object_count(), 2u);
  EXPECT_EQ(free_p1_algebra(share(discrete({}))).carrier->object_count(), 1u);
  auto o = share(fixtures::ordmon());
  auto alg = free_p1_algebra(o);
  auto pc = power_categorder(o);
  const MorId id = alg.carrier->identity(pc.object_of({0}));
  std::vector<std::string> names;
  for (auto m : pc.morphisms[id].mor_set) names.push_back(o->morphism_name(m));
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"e", "id:x"}));
}

TEST(ValidateAlgebra, FreeTermFull) {
  auto r = validate_p1_algebra(free_p1_algebra(share(fixtures::term())), LawMode::full());
  EXPECT_TRUE(r.ok()) << summarize(r);
  EXPECT_GT(r.find("associativity: a . mu = a . P1 a")->instances, 1000u);
}

TEST(ValidateAlgebra, FreeWalkSampled) {
  auto r = validate_p1_algebra(free_p1_algebra(share(fixtures::walk())), LawMode::sampled(3, 100));
  EXPECT_TRUE(r.ok()) << summarize(r);
  EXPECT_GE(r.find("associativity: a . mu = a . P1 a")->instances, 100u);
}

TEST(ValidateAlgebra, FreeOrdmonAndEmpty) {
  EXPECT_TRUE(validate_p1_algebra(free_p1_algebra(share(fixtures::ordmon())), LawMode::sampled(1, 100)).ok());
  EXPECT_TRUE(validate_p1_algebra(free_p1_algebra(share(discrete({}))), LawMode::full()).ok());
}

TEST(ValidateAlgebra, PerturbedObjectBreaksUnitLaw) {
  auto t = share(fixtures::term());
  auto alg = free_p1_algebra(t);
  const auto& c = *alg.carrier;
  // the carrier's objects are {} and {*}; send {{*}} to {} instead of {*}
  const ObjId empty = c.object("{}"), star = c.object("{*}");
  auto bad = with_object_value(alg, {star}, empty);
  auto r = validate_p1_algebra(bad, LawMode::full());
  EXPECT_FALSE(r.passed("unit: a . eta = id"));
  const auto& w = r.find("unit: a . eta = id")->failures.at(0).witness;
  EXPECT_EQ(w, (std::vector<std::string>{"{*}", "{}"}));
}

TEST(ValidateAlgebra, FromFunctorder) {
  auto t = share(fixtures::term());
  auto p1 = power_categorder(t);
  auto p2 = power_categorder(p1.cat);
  auto alg = algebra_from_functorder(p2, mu(p1, p2));
  EXPECT_TRUE(validate_p1_algebra(alg, LawMode::full()).ok());
  // the unit is no algebra structure map: wrong direction
  EXPECT_THROW(algebra_from_functorder(p2, eta(p2)), Error);
}

TEST(ValidateAlgebra, FullModeGuard) {
  EXPECT_THROW(validate_p1_algebra(free_p1_algebra(share(fixtures::walk())), LawMode::full()), SizeGuardExceeded);
}

TEST(UnderlyingP0, FreeTerm) {
  auto u = underlying_p0_algebra(free_p1_algebra(share(fixtures::term())));
  const auto& p = u.objects.poset();
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.name(u.objects.bottom()), "{}");
  EXPECT_TRUE(p.leq(p.require("{}"), p.require("{*}")));
  EXPECT_EQ(p.name(u.objects.join({0, 1})), "{*}");
  // hom ({*},{*}) is the chain {} <= {id}
  ASSERT_EQ(u.hom_elements.size(), 4u);
  const ObjId star = 1;
  const auto& h = u.homs.at({star, star});
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h.poset().name(h.bottom()), "[{*}->{*}]{}");
  EXPECT_EQ(h.poset().name(h.join({0, 1})), "id:{*}");
}

TEST(UnderlyingP0, FreeWalkJoinsAreUnions) {
  auto w = share(fixtures::walk());
  auto pc = power_categorder(w);
  auto u = underlying_p0_algebra(free_p1_algebra(w));
  ASSERT_EQ(u.objects.size(), 4u);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      ObjSet un = pc.objects[a];
      un.insert(un.end(), pc.objects[b].begin(), pc.objects[b].end());
      sort_unique(un);
      EXPECT_EQ(u.objects.join(a, b), pc.object_of(un));
    }
  // every hom join is the union of morphism sets
  for (const auto& [key, L] : u.homs) {
    const auto& elems = u.hom_elements.at(key);
    for (std::size_t i = 0; i < L.size(); ++i)
      for (std::size_t j = 0; j < L.size(); ++j) {
        PCMorphism m = pc.morphisms[elems[i]];
        const auto& other = pc.morphisms[elems[j]].mor_set;
        m.mor_set.insert(m.mor_set.end(), other.begin(), other.end());
        sort_unique(m.mor_set);
        EXPECT_EQ(elems[L.join(i, j)], pc.morphism_of(m));
      }
  }
}

TEST(UnderlyingP0, BrokenStructureThrows) {
  auto alg = free_p1_algebra(share(fixtures::term()));
  auto bad = with_object_value(alg, {0, 1}, 0);  // {} v {*} = {}
  EXPECT_THROW(underlying_p0_algebra(bad), Error);
}

TEST(ExtensionSearch, Cube) {
  const auto start = std::chrono::steady_clock::now();
  auto L = JoinSemilattice::from_poset(fixtures::cube8());
  auto s = search_algebra_extension(L);
  EXPECT_FALSE(s.extension.has_value());
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(60));
  const auto& p = L.poset();
  const ObjId u = static_cast<ObjId>(p.require("{1}")), v = static_cast<ObjId>(p.require("{2}")),
              w = static_cast<ObjId>(p.require("{3}"));
  const PCMorphism* top = find_obstruction(s, detail::canonical({u, w}), detail::canonical({v, w}));
  ASSERT_NE(top, nullptr);
  EXPECT_EQ(top->mor_set, (std::vector<MorId>{s.carrier->identity(w)}));
  EXPECT_EQ(s.describe(s.obstructions[0]).find("needs a morphism"), s.describe(s.obstructions[0]).find("needs"));
  // every obstructed hom-set has unequal joins, and every unequal pair is reported
  std::size_t unequal = 0;
  for (std::uint64_t X = 0; X < 256; ++X)
    for (std::uint64_t Y = 0; Y < 256; ++Y) {
      std::vector<std::size_t> xs, ys;
      for (std::size_t i = 0; i < 8; ++i) {
        if ((X >> i) & 1U) xs.push_back(i);
        if ((Y >> i) & 1U) ys.push_back(i);
      }
      unequal += L.join(xs) != L.join(ys);
    }
  EXPECT_EQ(s.obstructions.size(), unequal);
  EXPECT_EQ(s.morphisms_examined, 390625u);  // sum of 2^|X cap Y| = 5^8
}

TEST(ExtensionSearch, TwoChain) {
  auto L = JoinSemilattice::from_poset(fixtures::chain2());
  auto s = search_algebra_extension(L);
  EXPECT_FALSE(s.extension.has_value());
  const ObjId bot = static_cast<ObjId>(L.poset().require("bot")), top = static_cast<ObjId>(L.poset().require("top"));
  const PCMorphism* m = find_obstruction(s, {bot}, {top});
  ASSERT_NE(m, nullptr);
  EXPECT_TRUE(m->mor_set.empty());
  EXPECT_EQ(s.describe({{bot}, {top}, *m, bot, top}), "[{bot}->{top}]{} needs a morphism bot -> top");
}

TEST(ExtensionSearch, OneElementLattice) {
  auto s = search_algebra_extension(JoinSemilattice::from_poset(fixtures::one()));
  ASSERT_TRUE(s.extension.has_value());
  EXPECT_TRUE(s.obstructions.empty());
  ASSERT_TRUE(s.validation.has_value());
  EXPECT_TRUE(s.validation->ok());
  EXPECT_EQ(s.assignments_tried, 1u);
  auto u = underlying_p0_algebra(*s.extension);
  EXPECT_EQ(u.objects.size(), 1u);
}

TEST(ExtensionSearch, NoneWheneverTwoJoinValues) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_posets_up_to_iso(n)) {
      std::optional<JoinSemilattice> L;
      try {
        L = JoinSemilattice::from_poset(p);
      } catch (const Error&) {
        continue;
      }
      auto s = search_algebra_extension(*L);
      EXPECT_EQ(s.extension.has_value(), L->size() == 1);
      EXPECT_EQ(s.obstructions.empty(), L->size() == 1);
    }
}
