#pragma once

#include <memory>
#include <string>
#include <vector>

#include "categorder.hpp"
#include "functorder.hpp"
#include "power.hpp"
#include "report.hpp"
#include "view.hpp"

namespace pcat {

/// A morphism C -/-> D of the Kleisli category: a functorder C -> P1 D,
/// stored with its images written out over the base D.
struct KleisliMorphism {
  CategorderPtr source;
  CategorderPtr target;                  // the base D, not P1 D
  std::vector<ObjSet> object_map;        // indexed by source object
  std::vector<PCMorphism> morphism_map;  // indexed by source morphism

  const ObjSet& obj(ObjId x) const { return object_map.at(x); }
  const PCMorphism& mor(MorId m) const { return morphism_map.at(m); }

  /// The underlying functorder into the lazy P1 of the target.
  Mapping<Categorder, P1> hat() const {
    auto om = std::make_shared<const std::vector<ObjSet>>(object_map);
    auto mm = std::make_shared<const std::vector<PCMorphism>>(morphism_map);
    auto p = std::make_shared<const P1>(target);
    return {[om](const ObjId& x) { return (*om)[x]; },
            [mm, p](const MorId& m) { return from_pc(*p, (*mm)[m]); }};
  }

  /// Equal boundaries (structurally) and equal images, compared by name.
  friend bool operator==(const KleisliMorphism& a, const KleisliMorphism& b) {
    if (!structurally_equal(*a.source, *b.source) || !structurally_equal(*a.target, *b.target)) return false;
    for (ObjId x = 0; x < a.source->object_count(); ++x) {
      const ObjId y = b.source->object(a.source->object_name(x));
      if (objset_name(*a.target, a.object_map[x]) != objset_name(*b.target, b.object_map[y])) return false;
    }
    for (MorId f = 0; f < a.source->morphism_count(); ++f) {
      const MorId g = b.source->morphism(a.source->morphism_name(f));
      if (pc_name(*a.target, a.morphism_map[f]) != pc_name(*b.target, b.morphism_map[g])) return false;
    }
    return true;
  }
};

/// The unit of the monad at C.
inline KleisliMorphism kleisli_identity(const CategorderPtr& c) {
  KleisliMorphism k{c, c, {}, {}};
  for (ObjId x = 0; x < c->object_count(); ++x) k.object_map.push_back({x});
  for (MorId m = 0; m < c->morphism_count(); ++m) k.morphism_map.push_back(pc_eta(*c, m));
  return k;
}

/// mu_E . direct_image(G) . F, evaluated one source element at a time. The
/// direct image of F c is the family of the G-images of its members (its
/// down-closure only adds subsets of those images, which the union absorbs).
inline KleisliMorphism kleisli_compose(const KleisliMorphism& G, const KleisliMorphism& F) {
  if (F.target.get() != G.source.get() && !structurally_equal(*F.target, *G.source))
    throw Error("kleisli_compose: the target of the first is not the source of the second");
  const Categorder& e = *G.target;
  auto lift_objects = [&](const ObjSet& xs) {
    std::vector<ObjSet> family;
    for (auto x : xs) family.push_back(G.obj(G.source->object(F.target->object_name(x))));
    return family;
  };
  KleisliMorphism out{F.source, G.target, {}, {}};
  for (ObjId x = 0; x < F.source->object_count(); ++x) {
    ObjSet u;
    for (const auto& s : lift_objects(F.obj(x))) u.insert(u.end(), s.begin(), s.end());
    sort_unique(u);
    out.object_map.push_back(std::move(u));
  }
  for (MorId m = 0; m < F.source->morphism_count(); ++m) {
    const PCMorphism& fm = F.mor(m);
    PC2Morphism lifted{lift_objects(fm.dom_tag), lift_objects(fm.cod_tag), {}};
    for (auto d : fm.mor_set) lifted.members.push_back(G.mor(G.source->morphism(F.target->morphism_name(d))));
    out.morphism_map.push_back(pc_mu(e, lifted));
  }
  return out;
}

/// Shape of the images, then the functorder conditions of C -> P1 D.
inline ValidationReport validate_kleisli(const KleisliMorphism& k, const SizeGuard& guard = {}) {
  const Categorder& s = *k.source;
  const Categorder& t = *k.target;
  ValidationReport shape{"kleisli"};
  auto& sh = shape.check("target_shape");
  sh.expect(k.object_map.size() == s.object_count() && k.morphism_map.size() == s.morphism_count(), [&] {
    return std::pair{std::string("maps do not cover the source"), std::vector<std::string>{}};
  });
  for (std::size_t x = 0; x < k.object_map.size(); ++x) {
    bool ok = detail::canonical(k.object_map[x]) == k.object_map[x];
    for (auto o : k.object_map[x]) ok = ok && o < t.object_count();
    sh.expect(ok, [&] {
      return std::pair{std::string("object image is not a set of target objects"),
                       std::vector<std::string>{x < s.object_count() ? s.object_name(x) : std::to_string(x)}};
    });
  }
  for (std::size_t m = 0; m < k.morphism_map.size(); ++m) {
    const auto defect = pc_defect(t, k.morphism_map[m]);
    sh.expect(!defect, [&] {
      return std::pair{"morphism image is not a morphism of P1: " + *defect,
                       std::vector<std::string>{m < s.morphism_count() ? s.morphism_name(m) : std::to_string(m)}};
    });
  }
  if (!sh.passed()) return shape;
  P1 p(k.target);
  ValidationReport r = validate_mapping(s, p, k.hat(), full_sample(s, guard), "kleisli");
  r.checks.push_front(sh);
  return r;
}

/// The Kleisli morphism of a functorder: eta after F.
inline KleisliMorphism kleisli_of_functorder(const Functorder& F) {
  KleisliMorphism k{F.source, F.target, {}, {}};
  for (ObjId x = 0; x < F.source->object_count(); ++x) k.object_map.push_back({F.obj(x)});
  for (MorId m = 0; m < F.source->morphism_count(); ++m) k.morphism_map.push_back(pc_eta(*F.target, F.mor(m)));
  return k;
}

}  // namespace pcat
