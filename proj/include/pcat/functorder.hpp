#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "categorder.hpp"
#include "report.hpp"
#include "view.hpp"

namespace pcat {

using CategorderPtr = std::shared_ptr<const Categorder>;

inline CategorderPtr share(Categorder c) { return std::make_shared<const Categorder>(std::move(c)); }

/// A prefunctor between two materialized categorders, stored as index maps.
/// Whether it is a functorder is decided by validate_functorder.
struct Functorder {
  CategorderPtr source;
  CategorderPtr target;
  std::vector<ObjId> object_map;    // indexed by source object
  std::vector<MorId> morphism_map;  // indexed by source morphism

  ObjId obj(ObjId x) const { return object_map.at(x); }
  MorId mor(MorId m) const { return morphism_map.at(m); }

  Mapping<Categorder, Categorder> mapping() const {
    auto om = std::make_shared<const std::vector<ObjId>>(object_map);
    auto mm = std::make_shared<const std::vector<MorId>>(morphism_map);
    return {[om](const ObjId& x) { return (*om)[x]; }, [mm](const MorId& m) { return (*mm)[m]; }};
  }

  /// Equal boundary categorders (structurally) and equal maps by name.
  friend bool operator==(const Functorder& a, const Functorder& b) {
    if (!structurally_equal(*a.source, *b.source) || !structurally_equal(*a.target, *b.target)) return false;
    for (ObjId x = 0; x < a.source->object_count(); ++x) {
      const ObjId y = b.source->object(a.source->object_name(x));
      if (a.target->object_name(a.object_map[x]) != b.target->object_name(b.object_map[y])) return false;
    }
    for (MorId f = 0; f < a.source->morphism_count(); ++f) {
      const MorId g = b.source->morphism(a.source->morphism_name(f));
      if (a.target->morphism_name(a.morphism_map[f]) != b.target->morphism_name(b.morphism_map[g])) return false;
    }
    return true;
  }
};

inline ValidationReport validate_functorder(const Functorder& F, const SizeGuard& guard = {}) {
  const Categorder& s = *F.source;
  const Categorder& t = *F.target;
  ValidationReport shape{"functorder"};
  auto& ranges = shape.check("total_maps");
  ranges.expect(F.object_map.size() == s.object_count() && F.morphism_map.size() == s.morphism_count(), [&] {
    return std::pair{std::string("maps do not cover the source"),
                     std::vector<std::string>{std::to_string(F.object_map.size()) + " object entries",
                                              std::to_string(F.morphism_map.size()) + " morphism entries"}};
  });
  for (std::size_t x = 0; x < F.object_map.size(); ++x)
    ranges.expect(F.object_map[x] < t.object_count(), [&] {
      return std::pair{std::string("object image outside the target"), std::vector<std::string>{s.object_name(x)}};
    });
  for (std::size_t m = 0; m < F.morphism_map.size(); ++m)
    ranges.expect(F.morphism_map[m] < t.morphism_count(), [&] {
      return std::pair{std::string("morphism image outside the target"), std::vector<std::string>{s.morphism_name(m)}};
    });
  if (!ranges.passed()) return shape;
  ValidationReport r = validate_mapping(s, t, F.mapping(), full_sample(s, guard));
  r.checks.insert(r.checks.begin(), ranges);
  return r;
}

inline Functorder identity_functorder(const CategorderPtr& c) {
  Functorder F{c, c, {}, {}};
  for (ObjId x = 0; x < c->object_count(); ++x) F.object_map.push_back(x);
  for (MorId m = 0; m < c->morphism_count(); ++m) F.morphism_map.push_back(m);
  return F;
}

/// G . F. The boundary categorders must agree structurally.
inline Functorder compose_functorders(const Functorder& G, const Functorder& F) {
  if (F.target != G.source && !structurally_equal(*F.target, *G.source))
    throw Error("compose_functorders: target of the first is not the source of the second");
  // Translate through names when the middle categorder is a different instance.
  std::vector<ObjId> om(F.target->object_count());
  std::vector<MorId> mm(F.target->morphism_count());
  for (ObjId x = 0; x < om.size(); ++x) om[x] = G.source->object(F.target->object_name(x));
  for (MorId m = 0; m < mm.size(); ++m) mm[m] = G.source->morphism(F.target->morphism_name(m));
  Functorder out{F.source, G.target, {}, {}};
  for (auto y : F.object_map) out.object_map.push_back(G.object_map.at(om.at(y)));
  for (auto n : F.morphism_map) out.morphism_map.push_back(G.morphism_map.at(mm.at(n)));
  return out;
}

/// Builds a functorder from name maps. Identities missing from `morphisms`
/// go to the identity of the image object.
inline Functorder make_functorder(const CategorderPtr& source, const CategorderPtr& target,
                                  const std::map<std::string, std::string>& objects,
                                  const std::map<std::string, std::string>& morphisms) {
  Functorder F{source, target, std::vector<ObjId>(source->object_count(), kNone),
               std::vector<MorId>(source->morphism_count(), kNone)};
  for (const auto& [a, b] : objects) F.object_map[source->object(a)] = target->object(b);
  for (const auto& [a, b] : morphisms) F.morphism_map[source->morphism(a)] = target->morphism(b);
  for (ObjId x = 0; x < source->object_count(); ++x)
    if (F.object_map[x] == kNone) throw Error("functorder: no image for object '" + source->object_name(x) + "'");
  for (MorId m = 0; m < source->morphism_count(); ++m) {
    if (F.morphism_map[m] != kNone) continue;
    for (ObjId x = 0; x < source->object_count(); ++x)
      if (source->identity(x) == m) F.morphism_map[m] = target->identity(F.object_map[x]);
    if (F.morphism_map[m] == kNone) throw Error("functorder: no image for morphism '" + source->morphism_name(m) + "'");
  }
  return F;
}

/// The functorder sending everything to `y` and its identity.
inline Functorder constant_functorder(const CategorderPtr& source, const CategorderPtr& target, ObjId y) {
  Functorder F{source, target, std::vector<ObjId>(source->object_count(), y),
               std::vector<MorId>(source->morphism_count(), target->identity(y))};
  return F;
}

struct StrictResult {
  bool strict = true;
  std::optional<StrictnessWitness> witness;
};

inline StrictResult is_strict_functor(const Functorder& F, const SizeGuard& guard = {}) {
  auto w = strictness_violation(*F.source, *F.target, F.mapping(), full_sample(*F.source, guard));
  return {!w.has_value(), w};
}

struct ImageResult {
  std::vector<ObjId> objects;
  std::vector<MorId> morphisms;
  bool is_subcategory = true;
  std::vector<std::string> witness;  // g, f of an image pair whose composite is not in the image, or a missing identity
};

inline ImageResult image(const Functorder& F) {
  const Categorder& t = *F.target;
  ImageResult r;
  r.objects = F.object_map;
  r.morphisms = F.morphism_map;
  sort_unique(r.objects);
  sort_unique(r.morphisms);
  auto in_image = [&](MorId m) { return std::binary_search(r.morphisms.begin(), r.morphisms.end(), m); };
  for (auto x : r.objects)
    if (!in_image(t.identity(x))) {
      r.is_subcategory = false;
      r.witness = {t.morphism_name(t.identity(x))};
      return r;
    }
  for (auto f : r.morphisms)
    for (auto g : r.morphisms) {
      if (t.cod(f) != t.dom(g)) continue;
      const MorId gf = t.compose(g, f);
      if (!in_image(gf)) {
        r.is_subcategory = false;
        r.witness = {t.morphism_name(g), t.morphism_name(f)};
        return r;
      }
    }
  return r;
}

}  // namespace pcat
