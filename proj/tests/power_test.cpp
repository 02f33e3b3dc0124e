#include <gtest/gtest.h>

#include "pcat/fixtures.hpp"
#include "pcat/power.hpp"

using namespace pcat;

namespace {

// Independent count: every subset of mor C, kept when it is typed within the
// tags and down-closed. No shared code with the down-set enumerator.
std::pair<std::uint64_t, std::uint64_t> brute_force_counts(const Categorder& c) {
  const std::size_t n = c.object_count(), m = c.morphism_count();
  std::uint64_t morphisms = 0;
  for (std::uint64_t X = 0; X < (1ULL << n); ++X)
    for (std::uint64_t Y = 0; Y < (1ULL << n); ++Y)
      for (std::uint64_t S = 0; S < (1ULL << m); ++S) {
        bool ok = true;
        for (MorId e = 0; e < m && ok; ++e) {
          if (!((S >> e) & 1U)) continue;
          if (!((X >> c.dom(e)) & 1U) || !((Y >> c.cod(e)) & 1U)) ok = false;
          for (MorId d = 0; d < m && ok; ++d)
            if (c.leq(d, e) && !((S >> d) & 1U)) ok = false;
        }
        if (ok) ++morphisms;
      }
  return {1ULL << n, morphisms};
}

PCMorphism named(const Categorder& c, std::vector<std::string> dom, std::vector<std::string> cod,
                 std::vector<std::string> mors) {
  ObjSet d, e;
  std::vector<MorId> ms;
  for (auto& x : dom) d.push_back(c.object(x));
  for (auto& x : cod) e.push_back(c.object(x));
  for (auto& x : mors) ms.push_back(c.morphism(x));
  return pc_make(c, d, e, ms);
}

std::vector<std::string> member_names(const Categorder& c, const PCMorphism& m) {
  std::vector<std::string> out;
  for (auto e : m.mor_set) out.push_back(c.morphism_name(e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(PowerCategorder, TermCounts) {
  auto pc = power_categorder(share(fixtures::term()));
  EXPECT_EQ(pc.cat->object_count(), 2u);
  EXPECT_EQ(pc.cat->morphism_count(), 5u);
  EXPECT_EQ(brute_force_counts(fixtures::term()), (std::pair<std::uint64_t, std::uint64_t>{2, 5}));
  // the hom-set {*} -> {*} holds the empty set and {id}
  const ObjId star = pc.object_of({0});
  EXPECT_EQ(pc.cat->hom(star, star).size(), 2u);
  EXPECT_EQ(pc.cat->hom(pc.object_of({}), star).size(), 1u);
}

TEST(PowerCategorder, WalkCounts) {
  auto pc = power_categorder(share(fixtures::walk()));
  EXPECT_EQ(pc.cat->object_count(), 4u);
  EXPECT_EQ(pc.cat->morphism_count(), 34u);
  EXPECT_EQ(brute_force_counts(fixtures::walk()), (std::pair<std::uint64_t, std::uint64_t>{4, 34}));
  auto counts = count_power_categorder(fixtures::walk());
  EXPECT_EQ(counts.objects, 4u);
  EXPECT_EQ(counts.morphisms, 34u);
}

TEST(PowerCategorder, CountsAgreeWithBruteForceOnFixtures) {
  for (const auto& name : fixtures::categorder_names()) {
    auto c = fixtures::categorder(name);
    if (c.morphism_count() > 7) continue;
    auto [objs, mors] = brute_force_counts(c);
    auto pc = power_categorder(share(c));
    EXPECT_EQ(pc.cat->object_count(), objs) << name;
    EXPECT_EQ(pc.cat->morphism_count(), mors) << name;
    EXPECT_EQ(count_power_categorder(c).morphisms, mors) << name;
  }
}

TEST(PowerCategorder, FixturesGiveValidCategorders) {
  for (const auto& name : fixtures::categorder_names()) {
    auto pc = power_categorder(share(fixtures::categorder(name)));
    auto r = validate_categorder(*pc.cat);
    EXPECT_TRUE(r.ok()) << name << "\n" << summarize(r);
  }
}

TEST(PowerCategorder, OrdmonIdentityIsDownClosed) {
  auto c = share(fixtures::ordmon());
  auto pc = power_categorder(c);
  const ObjId x = pc.object_of({0});
  const auto& id = pc.morphisms[pc.cat->identity(x)];
  EXPECT_EQ(member_names(*c, id), (std::vector<std::string>{"e", "id:x"}));
  EXPECT_EQ(pc.cat->morphism_name(pc.cat->identity(x)), "id:{x}");
}

TEST(PowerCategorder, GuardRefusesBeforeBuilding) {
  SizeGuard g;
  g.max_morphisms = 10;
  EXPECT_THROW(power_categorder(share(fixtures::walk()), g), SizeGuardExceeded);
  auto cube = discrete(fixtures::cube8().elements());
  auto counts = count_power_categorder(cube);
  EXPECT_EQ(counts.objects, 256u);
  EXPECT_EQ(counts.morphisms, 390625u);
  EXPECT_THROW(power_categorder(share(cube)), SizeGuardExceeded);
}

TEST(PowerCategorder, HomSetsAreDownSetLatticesOfHomUnions) {
  for (const auto& name : fixtures::categorder_names()) {
    auto c = share(fixtures::categorder(name));
    auto pc = power_categorder(c);
    for (ObjId X = 0; X < pc.objects.size(); ++X)
      for (ObjId Y = 0; Y < pc.objects.size(); ++Y) {
        std::vector<std::string> xs, ys;
        for (auto o : pc.objects[X]) xs.push_back(c->object_name(o));
        for (auto o : pc.objects[Y]) ys.push_back(c->object_name(o));
        const auto p0 = p0_ord(hom_union(*c, xs, ys));
        const auto& h = pc.cat->hom(X, Y);
        ASSERT_EQ(h.size(), p0.size());
        for (auto a : h) {
          const std::string an = braces(member_names(*c, pc.morphisms[a]));
          ASSERT_TRUE(p0.index_of(an).has_value()) << an;
          for (auto b : h) {
            const std::string bn = braces(member_names(*c, pc.morphisms[b]));
            EXPECT_EQ(pc.cat->leq(a, b), p0.leq(p0.require(an), p0.require(bn)));
          }
        }
      }
  }
}

TEST(PowerCategorder, PlainHomSetsArePowerSets) {
  auto c = share(fixtures::chain3());
  auto pc = power_categorder(c);
  for (ObjId X = 0; X < pc.objects.size(); ++X)
    for (ObjId Y = 0; Y < pc.objects.size(); ++Y) {
      std::size_t u = 0;
      for (auto x : pc.objects[X])
        for (auto y : pc.objects[Y]) u += c->hom(x, y).size();
      EXPECT_EQ(pc.cat->hom(X, Y).size(), 1u << u);
    }
}

TEST(PowerCategorder, TaggingMakesMoreMorphismsThanSubsets) {
  for (const auto& name : fixtures::categorder_names()) {
    auto c = fixtures::categorder(name);
    if (c.object_count() < 2) continue;
    const auto p0 = p0_ord(hom_union(c, c.objects(), c.objects()));
    EXPECT_GT(count_power_categorder(c).morphisms, p0.size()) << name;
  }
}

TEST(PcCompose, KtgtComposite) {
  auto c = fixtures::ktgt();
  auto p = named(c, {"star"}, {"half"}, {"p"});
  auto q = named(c, {"half"}, {"diamond"}, {"q"});
  auto qp = pc_compose(c, p, q);
  EXPECT_EQ(member_names(c, qp), (std::vector<std::string>{"qp"}));
  EXPECT_EQ(qp.dom_tag, ObjSet{c.object("star")});
  EXPECT_EQ(qp.cod_tag, ObjSet{c.object("diamond")});
}

TEST(PcCompose, TagsDecideComposability) {
  auto c = fixtures::ksrc();
  auto f = named(c, {"star"}, {"black"}, {"f"});
  auto g = named(c, {"white"}, {"diamond"}, {"g"});
  // as bare sets {f} and {g} would compose to the empty set; the tags forbid it
  EXPECT_THROW(pc_compose(c, f, g), Error);
  auto f2 = named(c, {"star"}, {"black", "white"}, {"f"});
  auto g2 = named(c, {"black", "white"}, {"diamond"}, {"g"});
  auto gf = pc_compose(c, f2, g2);
  EXPECT_TRUE(gf.mor_set.empty());
  EXPECT_EQ(gf.dom_tag, ObjSet{c.object("star")});
}

TEST(PcCompose, EmptyAbsorbs) {
  auto c = fixtures::walk();
  auto e = named(c, {"A"}, {"A", "B"}, {});
  auto id = pc_identity(c, {c.object("A"), c.object("B")});
  auto f = named(c, {"A", "B"}, {"A", "B"}, {"f", "id:A", "id:B"});
  EXPECT_TRUE(pc_compose(c, e, id).mor_set.empty());
  EXPECT_TRUE(pc_compose(c, e, f).mor_set.empty());
}

TEST(PcCompose, TernaryOracleAgreesWithBothBracketings) {
  for (const char* name : {"ORDMON", "WALK"}) {
    auto c = share(fixtures::categorder(name));
    P1 p(c);
    Rng rng(2024);
    for (int i = 0; i < 500; ++i) {
      auto X = p.sample_object(rng), Y = p.sample_object(rng), Z = p.sample_object(rng), W = p.sample_object(rng);
      auto m1 = to_pc(p, *p.sample_in_hom(X, Y, rng));
      auto m2 = to_pc(p, *p.sample_in_hom(Y, Z, rng));
      auto m3 = to_pc(p, *p.sample_in_hom(Z, W, rng));
      auto tern = pc_compose3(*c, m1, m2, m3);
      EXPECT_EQ(tern, pc_compose(*c, pc_compose(*c, m1, m2), m3));
      EXPECT_EQ(tern, pc_compose(*c, m1, pc_compose(*c, m2, m3)));
    }
  }
}

TEST(PcCompose, MaximaRepresentationAgrees) {
  for (const auto& name : fixtures::categorder_names()) {
    auto c = share(fixtures::categorder(name));
    P1 p(c);
    Rng rng(99);
    for (int i = 0; i < 300; ++i) {
      auto f = *p.sample_morphism(rng);
      auto g = *p.sample_in_hom(f.cod, p.sample_object(rng), rng);
      EXPECT_EQ(to_pc(p, p.compose(g, f)), pc_compose(*c, to_pc(p, f), to_pc(p, g)));
      EXPECT_EQ(from_pc(p, to_pc(p, f)), f);
      EXPECT_EQ(p.leq(p.sample_below(f, rng), f), true);
    }
  }
}

TEST(Eta, SpecExamples) {
  auto term = share(fixtures::term());
  auto pt = power_categorder(term);
  auto et = eta(pt);
  EXPECT_EQ(pt.cat->object_name(et.obj(0)), "{*}");
  EXPECT_EQ(pt.cat->morphism_name(et.mor(0)), "id:{*}");
  EXPECT_TRUE(is_strict_functor(et).strict);

  auto om = share(fixtures::ordmon());
  auto po = power_categorder(om);
  auto eo = eta(po);
  EXPECT_EQ(member_names(*om, po.morphisms[eo.mor(om->morphism("id:x"))]), (std::vector<std::string>{"e", "id:x"}));
  EXPECT_EQ(member_names(*om, po.morphisms[eo.mor(om->morphism("e"))]), (std::vector<std::string>{"e"}));

  auto walk = share(fixtures::walk());
  auto pw = power_categorder(walk);
  auto ew = eta(pw);
  EXPECT_EQ(pw.cat->morphism_name(ew.mor(walk->morphism("f"))), "[{A}->{B}]{f}");
}

TEST(Eta, IsAFunctorderOnFixtures) {
  for (const auto& name : fixtures::categorder_names()) {
    auto pc = power_categorder(share(fixtures::categorder(name)));
    auto r = validate_functorder(eta(pc));
    EXPECT_TRUE(r.ok()) << name << "\n" << summarize(r);
  }
}

TEST(DirectImage, KIsAFunctorderButNotAFunctor) {
  auto K = fixtures::k();
  auto ps = power_categorder(K.source);
  auto pt = power_categorder(K.target);
  auto KK = direct_image(K, ps, pt);
  auto r = validate_functorder(KK);
  EXPECT_TRUE(r.ok()) << summarize(r);
  auto strict = is_strict_functor(KK);
  EXPECT_FALSE(strict.strict);
  ASSERT_TRUE(strict.witness.has_value());
  EXPECT_EQ(strict.witness->kind, "composition");

  // the pair from the obstruction: {f} tagged {star}->{black,white}, then {g}
  const auto& c = *K.source;
  auto f = named(c, {"star"}, {"black", "white"}, {"f"});
  auto g = named(c, {"black", "white"}, {"diamond"}, {"g"});
  auto composite = pc_compose(c, f, g);
  EXPECT_TRUE(composite.mor_set.empty());
  auto lhs = pc_direct_image(K, composite);
  auto rhs = pc_compose(*K.target, pc_direct_image(K, f), pc_direct_image(K, g));
  EXPECT_TRUE(lhs.mor_set.empty());
  EXPECT_EQ(member_names(*K.target, rhs), (std::vector<std::string>{"qp"}));
  EXPECT_TRUE(pc_leq(lhs, rhs));
  EXPECT_NE(lhs, rhs);

  auto empty = named(c, {"star"}, {"diamond"}, {});
  auto img = pc_direct_image(K, empty);
  EXPECT_TRUE(img.mor_set.empty());
  EXPECT_EQ(img.dom_tag, ObjSet{K.target->object("star")});
}

TEST(DirectImage, OfIdentityIsIdentity) {
  for (const auto& name : fixtures::categorder_names()) {
    auto c = share(fixtures::categorder(name));
    auto pc = power_categorder(c);
    EXPECT_EQ(direct_image(identity_functorder(c), pc, pc), identity_functorder(pc.cat)) << name;
  }
}

TEST(DirectImage, IdentityFormulaMatchesShortcut) {
  auto K = fixtures::k();
  auto ps = power_categorder(K.source);
  for (const auto& x : ps.objects) {
    const auto exact = pc_direct_image(K, pc_identity(*K.source, x));
    EXPECT_EQ(exact, pc_direct_image_identity_shortcut(K, x));
  }
  auto om = share(fixtures::ordmon());
  auto po = power_categorder(om);
  auto F = make_functorder(om, om, {{"x", "x"}}, {{"id:x", "e"}, {"e", "e"}});
  ASSERT_TRUE(validate_functorder(F).ok());
  for (const auto& x : po.objects)
    EXPECT_EQ(pc_direct_image(F, pc_identity(*om, x)), pc_direct_image_identity_shortcut(F, x));
}

TEST(Mu, SpecExamples) {
  auto term = share(fixtures::term());
  auto p1 = power_categorder(term);
  auto p2 = power_categorder(p1.cat);
  auto m = mu(p1, p2);
  EXPECT_EQ(p2.cat->object_count(), 4u);
  EXPECT_EQ(p2.cat->morphism_count(), 60u);
  // {{*}, {}} flattens to {*}
  const ObjId fam = p2.object_of({p1.object_of({}), p1.object_of({0})});
  EXPECT_EQ(p1.cat->object_name(m.obj(fam)), "{*}");
  // the family holding the identity of {*} unwraps to that identity
  const ObjId star1 = p1.object_of({0});
  const ObjId star2 = p2.object_of({star1});
  const MorId wrapped = p2.morphism_of(pc_make(*p1.cat, {star1}, {star1}, {p1.cat->identity(star1)}));
  EXPECT_EQ(m.mor(wrapped), p1.cat->identity(star1));
  EXPECT_EQ(wrapped, p2.cat->identity(star2));
  EXPECT_TRUE(validate_functorder(m).ok()) << summarize(validate_functorder(m));

  auto walk = share(fixtures::walk());
  P1 pw(walk);
  P2 pp(std::make_shared<const P1>(pw));
  auto mw = multiplication_map(pp);
  EXPECT_TRUE(mw.object({}).empty());
}

TEST(Mu, MaterializedAgreesWithLazy) {
  auto term = share(fixtures::term());
  auto p1 = power_categorder(term);
  auto p2 = power_categorder(p1.cat);
  auto m = mu(p1, p2);
  auto lazy1 = std::make_shared<const P1>(term);
  P2 lazy2(lazy1);
  auto mm = multiplication_map(lazy2);
  for (const auto& x : lazy2.enumerate_objects())
    for (const auto& y : lazy2.enumerate_objects())
      for (const auto& z : lazy2.enumerate_hom(x, y)) {
        // translate the lazy morphism into the materialized one
        auto tag = [&](const P2::Object& o) {
          ObjSet s;
          for (const auto& a : o) s.push_back(p1.object_of(a));
          sort_unique(s);
          return s;
        };
        std::vector<MorId> members;
        for (const auto& g : z.gens) members.push_back(p1.morphism_of(to_pc(*lazy1, g)));
        const MorId k = p2.morphism_of(pc_make(*p1.cat, tag(z.dom), tag(z.cod), members));
        EXPECT_EQ(p1.morphisms[m.mor(k)], to_pc(*lazy1, mm.morphism(z)));
      }
}

TEST(PcMu, UnionsAndRetagging) {
  auto c = fixtures::walk();
  auto a = named(c, {"A"}, {"B"}, {"f"});
  auto b = named(c, {"B"}, {"B"}, {"id:B"});
  PC2Morphism m{{{c.object("A")}, {c.object("B")}}, {{c.object("B")}}, {a, b}};
  auto u = pc_mu(c, m);
  EXPECT_EQ(u.dom_tag, (ObjSet{c.object("A"), c.object("B")}));
  EXPECT_EQ(u.cod_tag, (ObjSet{c.object("B")}));
  EXPECT_EQ(member_names(c, u), (std::vector<std::string>{"f", "id:B"}));
}

TEST(PcMake, RejectsUntypedMembers) {
  auto c = fixtures::walk();
  EXPECT_THROW(named(c, {"B"}, {"A"}, {"f"}), Error);
  EXPECT_TRUE(pc_defect(c, PCMorphism{{0}, {1}, {}}) == std::nullopt);
  EXPECT_TRUE(pc_defect(c, PCMorphism{{1}, {0}, {c.morphism("f")}}).has_value());
  auto o = fixtures::ordmon();
  EXPECT_TRUE(pc_defect(o, PCMorphism{{0}, {0}, {o.morphism("id:x")}}).has_value());  // e missing
}
