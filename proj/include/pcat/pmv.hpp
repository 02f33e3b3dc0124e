#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "categorder.hpp"
#include "functorder.hpp"
#include "power.hpp"
#include "rel1.hpp"
#include "report.hpp"

namespace pcat {

/// A partial multivalued functor between plain categories: every object and
/// morphism of the source is sent to a (possibly empty) set of objects or
/// morphisms of the target.
struct PmvFunctor {
  CategorderPtr source;
  CategorderPtr target;
  std::vector<std::vector<ObjId>> objects;    // indexed by source object, sorted
  std::vector<std::vector<MorId>> morphisms;  // indexed by source morphism, sorted

  friend bool operator==(const PmvFunctor& a, const PmvFunctor& b);
};

/// The same data presented as two relations, each a sorted list of pairs.
struct CatRelation {
  CategorderPtr source;
  CategorderPtr target;
  std::vector<std::pair<ObjId, ObjId>> objects;
  std::vector<std::pair<MorId, MorId>> morphisms;

  friend bool operator==(const CatRelation& a, const CatRelation& b);
};

namespace detail {

inline std::vector<std::string> names_of_objects(const Categorder& c, const std::vector<ObjId>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(c.object_name(x));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> names_of_morphisms(const Categorder& c, const std::vector<MorId>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(c.morphism_name(x));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has(const std::vector<std::uint32_t>& v, std::uint32_t x) { return std::binary_search(v.begin(), v.end(), x); }

}  // namespace detail

inline bool operator==(const PmvFunctor& a, const PmvFunctor& b) {
  if (!structurally_equal(*a.source, *b.source) || !structurally_equal(*a.target, *b.target)) return false;
  if (a.objects.size() != a.source->object_count() || b.objects.size() != b.source->object_count()) return false;
  if (a.morphisms.size() != a.source->morphism_count() || b.morphisms.size() != b.source->morphism_count()) return false;
  for (ObjId x = 0; x < a.source->object_count(); ++x) {
    const ObjId y = b.source->object(a.source->object_name(x));
    if (detail::names_of_objects(*a.target, a.objects[x]) != detail::names_of_objects(*b.target, b.objects[y]))
      return false;
  }
  for (MorId f = 0; f < a.source->morphism_count(); ++f) {
    const MorId g = b.source->morphism(a.source->morphism_name(f));
    if (detail::names_of_morphisms(*a.target, a.morphisms[f]) != detail::names_of_morphisms(*b.target, b.morphisms[g]))
      return false;
  }
  return true;
}

inline bool operator==(const CatRelation& a, const CatRelation& b) {
  if (!structurally_equal(*a.source, *b.source) || !structurally_equal(*a.target, *b.target)) return false;
  auto obj_names = [](const CatRelation& r) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [x, y] : r.objects) out.push_back({r.source->object_name(x), r.target->object_name(y)});
    std::sort(out.begin(), out.end());
    return out;
  };
  auto mor_names = [](const CatRelation& r) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [x, y] : r.morphisms) out.push_back({r.source->morphism_name(x), r.target->morphism_name(y)});
    std::sort(out.begin(), out.end());
    return out;
  };
  return obj_names(a) == obj_names(b) && mor_names(a) == mor_names(b);
}

/// Typing, the identity axiom and the decomposition axiom, the latter over
/// every factorization c'' = c' . c in the source. Source and target must be
/// plain categories. No congruence condition is imposed.
inline ValidationReport validate_pmv(const PmvFunctor& F) {
  ValidationReport r{"pmv"};
  const Categorder& s = *F.source;
  const Categorder& t = *F.target;
  auto& plain = r.check("plain_categories");
  for (const Categorder* c : {&s, &t}) {
    const auto v = validate_categorder(*c);
    plain.expect(v.ok() && c->is_plain(), [&] {
      return std::pair{std::string(v.ok() ? "hom-orders are not trivial" : "not a valid category"),
                       std::vector<std::string>{c == &s ? "source" : "target"}};
    });
  }
  auto& shape = r.check("shape");
  shape.expect(F.objects.size() == s.object_count() && F.morphisms.size() == s.morphism_count(), [&] {
    return std::pair{std::string("images do not cover the source"), std::vector<std::string>{}};
  });
  for (const auto& xs : F.objects)
    for (auto y : xs)
      shape.expect(y < t.object_count() && std::is_sorted(xs.begin(), xs.end()), [&] {
        return std::pair{std::string("object image out of range or unsorted"), std::vector<std::string>{}};
      });
  for (const auto& ms : F.morphisms)
    for (auto m : ms)
      shape.expect(m < t.morphism_count() && std::is_sorted(ms.begin(), ms.end()), [&] {
        return std::pair{std::string("morphism image out of range or unsorted"), std::vector<std::string>{}};
      });
  if (!plain.passed() || !shape.passed()) return r;

  auto& typing = r.check("typing");
  auto& ident = r.check("identity_axiom");
  auto& decomp = r.check("decomposition_axiom");
  for (MorId c = 0; c < s.morphism_count(); ++c)
    for (MorId d : F.morphisms[c]) {
      typing.expect(detail::has(F.objects[s.dom(c)], t.dom(d)) && detail::has(F.objects[s.cod(c)], t.cod(d)), [&] {
        return std::pair{std::string("d in F(c) but its ends are not images of the ends of c"),
                         std::vector<std::string>{s.morphism_name(c), t.morphism_name(d)}};
      });
    }
  for (ObjId x = 0; x < s.object_count(); ++x)
    for (MorId d : F.morphisms[s.identity(x)]) {
      bool ok = false;
      for (ObjId y : F.objects[x]) ok = ok || t.identity(y) == d;
      ident.expect(ok, [&] {
        return std::pair{std::string("d in F(id) is not an identity of an image object"),
                         std::vector<std::string>{s.object_name(x), t.morphism_name(d)}};
      });
    }
  for (MorId c = 0; c < s.morphism_count(); ++c)
    for (MorId c2 : s.outgoing(s.cod(c))) {
      const MorId c3 = s.compose(c2, c);
      for (MorId d3 : F.morphisms[c3]) {
        bool found = false;
        for (MorId d : F.morphisms[c]) {
          for (MorId d2 : F.morphisms[c2])
            if (t.cod(d) == t.dom(d2) && t.compose(d2, d) == d3) {
              found = true;
              break;
            }
          if (found) break;
        }
        decomp.expect(found, [&] {
          return std::pair{std::string("d'' in F(c' . c) does not factor through F(c) and F(c')"),
                           std::vector<std::string>{s.morphism_name(c2), s.morphism_name(c), t.morphism_name(d3)}};
        });
      }
    }
  return r;
}

inline PmvFunctor pmv_identity(const CategorderPtr& c) {
  PmvFunctor F{c, c, {}, {}};
  for (ObjId x = 0; x < c->object_count(); ++x) F.objects.push_back({x});
  for (MorId m = 0; m < c->morphism_count(); ++m) F.morphisms.push_back({m});
  return F;
}

/// Relational composition: (G . F)(c) is the union of G(d) over d in F(c).
inline PmvFunctor pmv_compose(const PmvFunctor& G, const PmvFunctor& F) {
  if (F.target.get() != G.source.get() && !structurally_equal(*F.target, *G.source))
    throw Error("pmv_compose: the target of the first is not the source of the second");
  auto gobj = [&](ObjId d) -> const std::vector<ObjId>& { return G.objects[G.source->object(F.target->object_name(d))]; };
  auto gmor = [&](MorId d) -> const std::vector<MorId>& {
    return G.morphisms[G.source->morphism(F.target->morphism_name(d))];
  };
  PmvFunctor out{F.source, G.target, {}, {}};
  for (const auto& ds : F.objects) {
    std::vector<ObjId> es;
    for (auto d : ds) es.insert(es.end(), gobj(d).begin(), gobj(d).end());
    sort_unique(es);
    out.objects.push_back(std::move(es));
  }
  for (const auto& ds : F.morphisms) {
    std::vector<MorId> es;
    for (auto d : ds) es.insert(es.end(), gmor(d).begin(), gmor(d).end());
    sort_unique(es);
    out.morphisms.push_back(std::move(es));
  }
  return out;
}

/// The relation presentation: C R D iff D in F(C), c R d iff d in F(c).
inline CatRelation pmv_to_relation(const PmvFunctor& F) {
  if (const auto v = validate_pmv(F); !v.ok()) throw Error("pmv_to_relation: invalid input\n" + summarize(v));
  CatRelation r{F.source, F.target, {}, {}};
  for (ObjId x = 0; x < F.objects.size(); ++x)
    for (auto y : F.objects[x]) r.objects.push_back({x, y});
  for (MorId m = 0; m < F.morphisms.size(); ++m)
    for (auto d : F.morphisms[m]) r.morphisms.push_back({m, d});
  return r;
}

namespace detail {

inline PmvFunctor relation_as_pmv(const CatRelation& r) {
  PmvFunctor F{r.source, r.target, std::vector<std::vector<ObjId>>(r.source->object_count()),
               std::vector<std::vector<MorId>>(r.source->morphism_count())};
  for (auto [x, y] : r.objects) {
    if (x >= F.objects.size() || y >= r.target->object_count()) throw Error("cat relation: pair out of range");
    F.objects[x].push_back(y);
  }
  for (auto [m, d] : r.morphisms) {
    if (m >= F.morphisms.size() || d >= r.target->morphism_count()) throw Error("cat relation: pair out of range");
    F.morphisms[m].push_back(d);
  }
  for (auto& v : F.objects) sort_unique(v);
  for (auto& v : F.morphisms) sort_unique(v);
  return F;
}

}  // namespace detail

/// The relation axioms, read through the transpose: a relation is valid
/// exactly when its transposed pmv functor is.
inline ValidationReport validate_cat_relation(const CatRelation& r) {
  ValidationReport out = validate_pmv(detail::relation_as_pmv(r));
  out.subject = "cat-relation";
  return out;
}

inline PmvFunctor relation_to_pmv(const CatRelation& r) {
  PmvFunctor F = detail::relation_as_pmv(r);
  if (const auto v = validate_pmv(F); !v.ok()) throw Error("relation_to_pmv: invalid input\n" + summarize(v));
  return F;
}

inline CatRelation pmv_rel_iso(const PmvFunctor& F) { return pmv_to_relation(F); }
inline PmvFunctor pmv_rel_iso(const CatRelation& r) { return relation_to_pmv(r); }

/// The diagonal relation.
inline CatRelation cat_relation_identity(const CategorderPtr& c) {
  CatRelation r{c, c, {}, {}};
  for (ObjId x = 0; x < c->object_count(); ++x) r.objects.push_back({x, x});
  for (MorId m = 0; m < c->morphism_count(); ++m) r.morphisms.push_back({m, m});
  return r;
}

/// Composition of relations: c (S . R) e iff c R d and d S e for some d.
inline CatRelation cat_relation_compose(const CatRelation& s, const CatRelation& r) {
  if (r.target.get() != s.source.get() && !structurally_equal(*r.target, *s.source))
    throw Error("cat_relation_compose: boundaries do not match");
  CatRelation out{r.source, s.target, {}, {}};
  for (auto [x, y] : r.objects)
    for (auto [y2, z] : s.objects)
      if (s.source->object(r.target->object_name(y)) == y2) out.objects.push_back({x, z});
  for (auto [x, y] : r.morphisms)
    for (auto [y2, z] : s.morphisms)
      if (s.source->morphism(r.target->morphism_name(y)) == y2) out.morphisms.push_back({x, z});
  sort_unique(out.objects);
  sort_unique(out.morphisms);
  return out;
}

/// The Kleisli morphism C -> P1 D: C to F(C), c to F(c) tagged F(dom c) -> F(cod c).
inline KleisliMorphism pmv_to_kleisli(const PmvFunctor& F) {
  if (const auto v = validate_pmv(F); !v.ok()) throw Error("pmv_to_kleisli: invalid pmv functor\n" + summarize(v));
  KleisliMorphism k{F.source, F.target, F.objects, {}};
  for (MorId m = 0; m < F.source->morphism_count(); ++m)
    k.morphism_map.push_back(pc_make(*F.target, F.objects[F.source->dom(m)], F.objects[F.source->cod(m)], F.morphisms[m]));
  return k;
}

/// Reads the relations back from a Kleisli morphism between plain categories.
inline PmvFunctor kleisli_to_pmv(const KleisliMorphism& k) {
  if (!k.source->is_plain() || !k.target->is_plain())
    throw Error("kleisli_to_pmv: source and target must be plain categories (trivial hom-orders)");
  PmvFunctor F{k.source, k.target, k.object_map, {}};
  for (const auto& m : k.morphism_map) F.morphisms.push_back(m.mor_set);
  return F;
}

/// A strict functor as a pmv functor with singleton images.
inline PmvFunctor functor_as_pmv(const Functorder& F) {
  if (const auto s = is_strict_functor(F); !s.strict) {
    std::string why = "functor_as_pmv: not a strict functor";
    if (s.witness) why += " (" + s.witness->kind + " at " + join(s.witness->items) + ")";
    throw Error(why);
  }
  PmvFunctor out{F.source, F.target, {}, {}};
  for (auto y : F.object_map) out.objects.push_back({y});
  for (auto d : F.morphism_map) out.morphisms.push_back({d});
  return out;
}

}  // namespace pcat
