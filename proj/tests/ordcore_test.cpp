#include <gtest/gtest.h>

#include "pcat/fixtures.hpp"
#include "pcat/ordcore.hpp"

using namespace pcat;

namespace {

FinitePoset chain(std::vector<std::string> xs) {
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) leq.push_back({xs[i], xs[i + 1]});
  return FinitePoset(xs, leq);
}

std::vector<std::string> names(const FinitePoset& p, const DownSet& d) { return member_names(p, d.members); }

// Random poset on n elements: pairs (i, j) with i < j only, so no cycles.
FinitePoset random_poset(Rng& rng, std::size_t n) {
  std::vector<std::string> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(1, 3)) leq.push_back({xs[i], xs[j]});
  return FinitePoset(xs, leq);
}

Bitset random_subset(Rng& rng, std::size_t n) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng.coin()) b.set(i);
  return b;
}

}  // namespace

TEST(ValidatePoset, ChainIsValid) { EXPECT_TRUE(validate_poset(chain({"a", "b", "c"})).ok()); }

TEST(ValidatePoset, TwoCycleViolatesAntisymmetry) {
  FinitePoset p({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  auto r = validate_poset(p);
  EXPECT_FALSE(r.ok());
  const Check* c = r.find("antisymmetry");
  ASSERT_NE(c, nullptr);
  ASSERT_EQ(c->failure_count, 1u);
  EXPECT_EQ(c->failures[0].witness, (std::vector<std::string>{"a", "b"}));
}

TEST(ValidatePoset, EmptyIsValid) { EXPECT_TRUE(validate_poset(FinitePoset{}).ok()); }

TEST(ValidatePoset, UnknownAndDuplicateElementsReported) {
  FinitePoset p({"a", "a"}, {{"a", "z"}});
  auto r = validate_poset(p);
  EXPECT_FALSE(r.passed("unique_elements"));
  EXPECT_FALSE(r.passed("known_elements"));
}

TEST(DownClosure, SpecExamples) {
  auto p = chain({"a", "b", "c"});
  EXPECT_EQ(names(p, down_closure(p, std::vector<std::string>{"b"})), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(down_closure(p, std::vector<std::string>{}).members.none());
  FinitePoset ordmon_hom({"e", "id"}, {{"e", "id"}});
  EXPECT_EQ(names(ordmon_hom, down_closure(ordmon_hom, std::vector<std::string>{"id"})),
            (std::vector<std::string>{"e", "id"}));
  EXPECT_THROW(down_closure(p, std::vector<std::string>{"zz"}), Error);
}

TEST(P0Ord, SpecExamples) {
  FinitePoset discrete2({"a", "b"}, {});
  auto p = p0_ord(discrete2);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_TRUE(validate_poset(p).ok());
  EXPECT_TRUE(p.leq(p.require("{}"), p.require("{a,b}")));
  EXPECT_FALSE(p.leq(p.require("{a}"), p.require("{b}")));

  auto c = p0_ord(chain({"a", "b"}));
  EXPECT_EQ(c.elements(), (std::vector<std::string>{"{}", "{a}", "{a,b}"}));
  EXPECT_EQ(c.covers().size(), 2u);  // a 3-chain

  EXPECT_EQ(p0_ord(FinitePoset{}).elements(), (std::vector<std::string>{"{}"}));
}

TEST(P0Ord, GuardRefusesLargeInput) {
  std::vector<std::string> xs;
  for (int i = 0; i < 24; ++i) xs.push_back("x" + std::to_string(i));
  SizeGuard g;
  g.max_morphisms = 1000;
  EXPECT_THROW(p0_ord(FinitePoset(xs, {}), g), SizeGuardExceeded);
}

TEST(OrdEta, SpecExamples) {
  FinitePoset d({"a", "b"}, {});
  EXPECT_EQ(names(d, ord_eta(d, "a")), (std::vector<std::string>{"a"}));
  auto c = chain({"a", "b"});
  EXPECT_EQ(names(c, ord_eta(c, "b")), (std::vector<std::string>{"a", "b"}));
  FinitePoset ordmon_hom({"e", "id"}, {{"e", "id"}});
  EXPECT_EQ(names(ordmon_hom, ord_eta(ordmon_hom, "e")), (std::vector<std::string>{"e"}));
  EXPECT_THROW(ord_eta(c, "zz"), Error);
}

TEST(OrdMu, SpecExamples) {
  FinitePoset d({"a", "b"}, {});
  auto all = down_sets(d);
  EXPECT_EQ(names(d, ord_mu(d, all)), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(ord_mu(d, {DownSet{Bitset(2)}}).members.none());

  auto c = chain({"a", "b", "c"});
  auto family = std::vector<DownSet>{{Bitset(3)}, down_closure(c, std::vector<std::string>{"a"}),
                                     down_closure(c, std::vector<std::string>{"b"})};
  EXPECT_EQ(names(c, ord_mu(c, family)), (std::vector<std::string>{"a", "b"}));

  Bitset not_closed(3);
  not_closed.set(c.require("b"));
  EXPECT_THROW(ord_mu(c, {DownSet{not_closed}}), Error);
}

TEST(OrdMonadLaws, ChainOfTwoPasses) {
  auto r = check_ord_monad_laws(chain({"a", "b"}));
  EXPECT_TRUE(r.ok()) << summarize(r);
}

TEST(OrdMonadLaws, DiscreteThreePassesExhaustively) {
  auto r = check_ord_monad_laws(FinitePoset({"a", "b", "c"}, {}));
  EXPECT_TRUE(r.ok()) << summarize(r);
  // P0 of the 3-antichain has 8 elements, P0^2 has 20, P0^3 has 84.
  EXPECT_EQ(r.find("associativity: mu . mu_P0 = mu . P0 mu")->instances, 84u);
  EXPECT_EQ(r.find("unit_left: mu . eta_P0 = id")->instances, 8u);
}

TEST(OrdMonadLaws, DroppedMemberBreaksAssociativity) {
  auto r = check_ord_monad_laws(FinitePoset({"a", "b", "c"}, {}), {}, OrdFault::mu_drop_member);
  const Check* assoc = r.find("associativity: mu . mu_P0 = mu . P0 mu");
  ASSERT_NE(assoc, nullptr);
  EXPECT_FALSE(assoc->passed());
  ASSERT_FALSE(assoc->failures.empty());
  EXPECT_FALSE(assoc->failures[0].witness.empty());
}

TEST(OrdMonadLaws, GeneratorSweepAboveTheGuard) {
  SizeGuard g;
  g.max_morphisms = 50;
  auto r = check_ord_monad_laws(FinitePoset({"a", "b", "c"}, {}), g);
  EXPECT_TRUE(r.ok()) << summarize(r);
  EXPECT_FALSE(r.find("associativity: mu . mu_P0 = mu . P0 mu")->notes.empty());
}

TEST(DownClosureProperties, RandomPosets) {
  Rng rng(11);
  for (int round = 0; round < 300; ++round) {
    const auto p = random_poset(rng, rng.below(7));
    ASSERT_TRUE(validate_poset(p).ok());
    const std::size_t n = p.size();
    const Bitset a = random_subset(rng, n);
    const Bitset b = a | random_subset(rng, n);
    const Bitset da = down_closure(p, a).members;
    EXPECT_TRUE(a.subset_of(da));
    EXPECT_TRUE(da.subset_of(down_closure(p, b).members));
    EXPECT_EQ(down_closure(p, da).members, da);
    EXPECT_TRUE(is_down_closed(p, da));
    EXPECT_EQ(is_down_closed(p, a), down_closure(p, a).members == a);
    EXPECT_TRUE(validate_poset(p0_ord(p)).ok());
  }
}

TEST(DownClosureProperties, UnionOfDownSetsIsDownClosed) {
  Rng rng(12);
  for (int round = 0; round < 200; ++round) {
    const auto p = random_poset(rng, 1 + rng.below(6));
    const auto sets = down_sets(p);
    std::vector<DownSet> family;
    for (const auto& s : sets)
      if (rng.coin()) family.push_back(s);
    EXPECT_TRUE(is_down_closed(p, ord_mu(p, family).members));
  }
}

TEST(P0Ord, EtaIsAnOrderEmbedding) {
  Rng rng(13);
  for (int round = 0; round < 100; ++round) {
    const auto p = random_poset(rng, 1 + rng.below(5));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        EXPECT_EQ(p.leq(a, b), ord_eta(p, a).members.subset_of(ord_eta(p, b).members));
  }
}

TEST(DownSets, CountsMatchBruteForce) {
  Rng rng(14);
  for (int round = 0; round < 100; ++round) {
    const auto p = random_poset(rng, rng.below(7));
    std::uint64_t brute = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
      Bitset s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i)
        if ((mask >> i) & 1U) s.set(i);
      if (is_down_closed(p, s)) ++brute;
    }
    EXPECT_EQ(down_sets(p).size(), brute);
    EXPECT_EQ(count_down_sets(p.down_sets_of_elements(), 1000), brute);
  }
}
