#include <gtest/gtest.h>

#include "pcat/fixtures.hpp"
#include "pcat/generate.hpp"
#include "pcat/rel1.hpp"

using namespace pcat;

namespace {

GenSpec small(std::uint64_t seed, std::size_t objects) {
  GenSpec s;
  s.objects = objects;
  s.arrows = 3;
  s.seed = seed;
  return s;
}

std::vector<std::string> image_names(const KleisliMorphism& k, const std::string& m) {
  std::vector<std::string> out;
  for (auto e : k.mor(k.source->morphism(m)).mor_set) out.push_back(k.target->morphism_name(e));
  std::sort(out.begin(), out.end());
  return out;
}

// mu . P1 G . F evaluated with the lazy views, as an independent oracle.
PCMorphism lazy_composite(const KleisliMorphism& G, const KleisliMorphism& F, MorId m) {
  auto pe = std::make_shared<const P1>(G.target);
  P2 ppe(pe);
  const auto g_hat = G.hat();
  const auto image = direct_image_map(g_hat, ppe);
  const auto mu = multiplication_map(ppe);
  return to_pc(*pe, mu.morphism(image.morphism(F.hat().morphism(m))));
}

}  // namespace

TEST(KleisliIdentity, SpecExamples) {
  auto t = kleisli_identity(share(fixtures::term()));
  EXPECT_EQ(t.obj(0), ObjSet{0});
  EXPECT_TRUE(validate_kleisli(t).ok());
  auto w = kleisli_identity(share(fixtures::walk()));
  EXPECT_EQ(image_names(w, "f"), (std::vector<std::string>{"f"}));
  auto o = kleisli_identity(share(fixtures::ordmon()));
  EXPECT_EQ(image_names(o, "id:x"), (std::vector<std::string>{"e", "id:x"}));
  EXPECT_TRUE(validate_kleisli(o).ok());
}

TEST(KleisliCompose, UnitLaws) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    auto a = share(gen_categorder(small(seed, 1 + seed % 3), rng));
    auto b = share(gen_categorder(small(seed + 1, 1 + (seed / 3) % 3), rng));
    auto F = gen_kleisli(a, b, rng);
    EXPECT_EQ(kleisli_compose(kleisli_identity(b), F), F) << seed;
    EXPECT_EQ(kleisli_compose(F, kleisli_identity(a)), F) << seed;
  }
}

TEST(KleisliCompose, Associativity) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    std::vector<CategorderPtr> cs;
    for (int i = 0; i < 4; ++i) cs.push_back(share(gen_categorder(small(seed * 4 + i, 1 + rng.below(3)), rng)));
    auto F = gen_kleisli(cs[0], cs[1], rng);
    auto G = gen_kleisli(cs[1], cs[2], rng);
    auto H = gen_kleisli(cs[2], cs[3], rng);
    auto left = kleisli_compose(H, kleisli_compose(G, F));
    auto right = kleisli_compose(kleisli_compose(H, G), F);
    EXPECT_EQ(left, right) << seed;
    EXPECT_TRUE(validate_kleisli(left).ok()) << seed;
  }
}

TEST(KleisliCompose, AgreesWithLazyMonadStructure) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    auto a = share(gen_categorder(small(seed, 1 + seed % 3), rng));
    auto b = share(gen_categorder(small(seed + 5, 1 + (seed / 3) % 3), rng));
    auto c = share(gen_categorder(small(seed + 9, 1 + (seed / 9) % 3), rng));
    auto F = gen_kleisli(a, b, rng);
    auto G = gen_kleisli(b, c, rng);
    auto GF = kleisli_compose(G, F);
    for (MorId m = 0; m < a->morphism_count(); ++m) EXPECT_EQ(GF.mor(m), lazy_composite(G, F, m)) << seed;
  }
}

TEST(KleisliCompose, MismatchThrows) {
  auto w = kleisli_identity(share(fixtures::walk()));
  auto t = kleisli_identity(share(fixtures::term()));
  EXPECT_THROW(kleisli_compose(w, t), Error);
}

TEST(KleisliCompose, FunctordersEmbed) {
  auto K = fixtures::k();
  auto k = kleisli_of_functorder(K);
  EXPECT_TRUE(validate_kleisli(k).ok());
  auto id = identity_functorder(K.target);
  EXPECT_EQ(kleisli_compose(kleisli_of_functorder(id), k), k);
}

TEST(ValidateKleisli, MonotonicityViolation) {
  auto o = share(fixtures::ordmon());
  KleisliMorphism k{o, o, {{0}}, {}};
  const MorId id = o->morphism("id:x"), e = o->morphism("e");
  k.morphism_map.resize(2);
  k.morphism_map[id] = pc_make(*o, {0}, {0}, {e});
  k.morphism_map[e] = pc_make(*o, {0}, {0}, {id});
  auto r = validate_kleisli(k);
  EXPECT_FALSE(r.passed("monotone"));
  EXPECT_TRUE(r.passed("target_shape"));
  EXPECT_TRUE(r.passed("subfunctorial_identity"));
  // F(e . id) = {id:x} is not below F(e) . F(id) = {e}
  EXPECT_FALSE(r.passed("subfunctorial_composition"));
  const Check* m = r.find("monotone");
  ASSERT_FALSE(m->failures.empty());
  EXPECT_EQ(m->failures[0].witness[0], "e");
  EXPECT_EQ(m->failures[0].witness[1], "id:x");
}

TEST(ValidateKleisli, ShapeViolation) {
  auto o = share(fixtures::ordmon());
  KleisliMorphism k = kleisli_identity(o);
  k.morphism_map[o->morphism("id:x")].mor_set = {o->morphism("id:x")};  // e missing
  auto r = validate_kleisli(k);
  EXPECT_FALSE(r.passed("target_shape"));
}

TEST(ValidateKleisli, PlainImagesArePlainSubsets) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    auto a = share(gen_category(small(seed, 1 + seed % 3), rng));
    auto b = share(gen_category(small(seed + 2, 1 + (seed / 3) % 3), rng));
    auto k = gen_kleisli(a, b, rng);
    for (const auto& m : k.morphism_map) EXPECT_EQ(pc_make(*b, m.dom_tag, m.cod_tag, m.mor_set), m);
  }
}
