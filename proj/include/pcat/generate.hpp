#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "categorder.hpp"
#include "functorder.hpp"
#include "ordcore.hpp"
#include "pmv.hpp"
#include "power.hpp"
#include "rel1.hpp"
#include "util.hpp"

namespace pcat {

/// Size bounds and seed for the random generators.
struct GenSpec {
  std::string kind = "categorder";  // categorder | category | poset | functorder | kleisli | pmv
  std::size_t objects = 3;          // exact object count (elements, for posets)
  std::size_t arrows = 4;           // at most this many non-identity morphisms
  double order_density = 0.3;       // chance of proposing each parallel pair as an order pair
  std::uint64_t seed = 42;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

namespace detail {

// A morphism of a concrete category: a function between the carriers of its
// two objects. Composites of generators are closed up to equality of
// functions, which quotients the free category on the generating graph.
struct ConcreteArrow {
  ObjId dom;
  ObjId cod;
  std::vector<std::uint8_t> fn;

  friend bool operator==(const ConcreteArrow&, const ConcreteArrow&) = default;
  friend auto operator<=>(const ConcreteArrow&, const ConcreteArrow&) = default;
};

inline std::optional<Categorder> try_concrete_category(const GenSpec& spec, Rng& rng) {
  const std::size_t n = spec.objects;
  std::vector<std::size_t> carrier(n);
  for (auto& k : carrier) k = 1 + rng.below(3);

  std::vector<ConcreteArrow> arrows;
  std::set<ConcreteArrow> seen;
  for (ObjId x = 0; x < n; ++x) {
    ConcreteArrow id{x, x, {}};
    for (std::size_t i = 0; i < carrier[x]; ++i) id.fn.push_back(static_cast<std::uint8_t>(i));
    seen.insert(id);
  }
  const std::size_t generators = n == 0 ? 0 : rng.below(spec.arrows + 1);
  for (std::size_t g = 0; g < generators; ++g) {
    ConcreteArrow a{static_cast<ObjId>(rng.below(n)), static_cast<ObjId>(rng.below(n)), {}};
    for (std::size_t i = 0; i < carrier[a.dom]; ++i) a.fn.push_back(static_cast<std::uint8_t>(rng.below(carrier[a.cod])));
    if (seen.insert(a).second) arrows.push_back(a);
  }
  // close under composition
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows.size() > spec.arrows) return std::nullopt;
    for (std::size_t j = 0; j <= i && arrows.size() <= spec.arrows; ++j) {
      for (auto [f, g] : {std::pair{arrows[i], arrows[j]}, std::pair{arrows[j], arrows[i]}}) {
        if (f.cod != g.dom) continue;
        ConcreteArrow h{f.dom, g.cod, {}};
        for (auto v : f.fn) h.fn.push_back(g.fn[v]);
        if (seen.insert(h).second) arrows.push_back(h);
      }
    }
  }
  if (arrows.size() > spec.arrows) return std::nullopt;

  CategorderBuilder b;
  std::vector<std::string> obj_names;
  for (std::size_t x = 0; x < n; ++x) {
    obj_names.push_back("O" + std::to_string(x));
    b.add_object(obj_names.back());
  }
  std::map<ConcreteArrow, MorId> index;
  for (ObjId x = 0; x < n; ++x) {
    ConcreteArrow id{x, x, {}};
    for (std::size_t i = 0; i < carrier[x]; ++i) id.fn.push_back(static_cast<std::uint8_t>(i));
    index[id] = *b.morphism(identity_name(obj_names[x]));
  }
  for (std::size_t i = 0; i < arrows.size(); ++i)
    index[arrows[i]] = b.add_morphism("m" + std::to_string(i), arrows[i].dom, arrows[i].cod);
  for (const auto& [f, fi] : index)
    for (const auto& [g, gi] : index) {
      if (f.cod != g.dom) continue;
      ConcreteArrow h{f.dom, g.cod, {}};
      for (auto v : f.fn) h.fn.push_back(g.fn[v]);
      b.set_composite(gi, fi, index.at(h));
    }
  return b.build();
}

// Closes `pairs` (lo, hi) under transitivity and whiskering by composition.
// Returns nullopt when the closure identifies two distinct morphisms.
inline std::optional<std::set<std::pair<MorId, MorId>>> monotone_closure(const Categorder& c,
                                                                        std::set<std::pair<MorId, MorId>> pairs) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<MorId, MorId>> add;
    for (auto [a, b] : pairs) {
      for (MorId g : c.outgoing(c.cod(a))) add.push_back({c.compose(g, a), c.compose(g, b)});
      for (MorId f : c.incoming(c.dom(a))) add.push_back({c.compose(a, f), c.compose(b, f)});
      for (auto [b2, d] : pairs)
        if (b2 == b) add.push_back({a, d});
    }
    for (auto p : add) {
      if (p.first == p.second) continue;
      if (pairs.count({p.second, p.first})) return std::nullopt;
      if (pairs.insert(p).second) changed = true;
    }
  }
  return pairs;
}

}  // namespace detail

/// A random category (trivial hom-orders), `spec.objects` objects and at most
/// `spec.arrows` non-identity morphisms. Deterministic in the seed.
inline Categorder gen_category(const GenSpec& spec, Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt)
    if (auto c = detail::try_concrete_category(spec, rng)) return *c;
  throw GenerationFailed("gen: no category within the bounds after 200 attempts");
}

/// A random categorder: a random category, then proposed order pairs closed
/// under monotonicity, dropping proposals until the closure is antisymmetric.
inline Categorder gen_categorder(const GenSpec& spec, Rng& rng) {
  const Categorder base = gen_category(spec, rng);
  std::vector<std::pair<MorId, MorId>> proposals;
  for (ObjId x = 0; x < base.object_count(); ++x)
    for (ObjId y = 0; y < base.object_count(); ++y) {
      const auto& h = base.hom(x, y);
      for (MorId a : h)
        for (MorId b : h)
          if (a != b && rng.below(1'000'000) < static_cast<std::uint64_t>(spec.order_density * 1'000'000))
            proposals.push_back({a, b});
    }
  while (true) {
    std::set<std::pair<MorId, MorId>> start(proposals.begin(), proposals.end());
    if (auto closed = detail::monotone_closure(base, start)) {
      CategorderBuilder b = CategorderBuilder::from(base);
      for (auto [lo, hi] : *closed) b.add_order(lo, hi);
      return b.build();
    }
    proposals.erase(proposals.begin() + static_cast<std::ptrdiff_t>(rng.below(proposals.size())));
  }
}

/// A random poset on x0..x(n-1): relations only from lower to higher index.
inline FinitePoset gen_poset(const GenSpec& spec, Rng& rng) {
  std::vector<std::string> xs;
  for (std::size_t i = 0; i < spec.objects; ++i) xs.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (rng.below(1'000'000) < static_cast<std::uint64_t>(spec.order_density * 1'000'000)) leq.push_back({xs[i], xs[j]});
  std::vector<std::size_t> perm(xs.size());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<std::string> shuffled;
  for (auto i : perm) shuffled.push_back(xs[i]);
  return FinitePoset(shuffled, leq);
}

/// Every partial order on n labelled elements up to isomorphism, n <= 5.
inline std::vector<FinitePoset> all_posets_up_to_iso(std::size_t n) {
  if (n > 5) throw Error("all_posets_up_to_iso: n must be at most 5");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.push_back({i, j});
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint64_t> canon_seen;
  std::vector<FinitePoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    auto rel = [&](std::size_t i, std::size_t j) {
      if (i == j) return true;
      const auto k = static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::pair{i, j}) - slots.begin());
      return ((mask >> k) & 1U) != 0;
    };
    bool order = true;
    for (std::size_t i = 0; i < n && order; ++i)
      for (std::size_t j = 0; j < n && order; ++j) {
        if (i != j && rel(i, j) && rel(j, i)) order = false;
        for (std::size_t k = 0; k < n && order; ++k)
          if (rel(i, j) && rel(j, k) && !rel(i, k)) order = false;
      }
    if (!order) continue;
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& q : perms) {
      std::uint64_t code = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (rel(slots[s].first, slots[s].second)) {
          const auto k = static_cast<std::size_t>(
              std::find(slots.begin(), slots.end(), std::pair{q[slots[s].first], q[slots[s].second]}) - slots.begin());
          code |= std::uint64_t{1} << k;
        }
      best = std::min(best, code);
    }
    if (!canon_seen.insert(best).second) continue;
    std::vector<std::pair<std::string, std::string>> leq;
    for (auto [i, j] : slots)
      if (rel(i, j)) leq.push_back({names[i], names[j]});
    out.emplace_back(names, leq);
  }
  return out;
}

/// A random functorder source -> target, found by randomized backtracking
/// over morphism images for random object maps. With `strict`, composites
/// and identities are preserved exactly. A constant map always succeeds.
inline Functorder gen_functorder(const CategorderPtr& source, const CategorderPtr& target, Rng& rng,
                                 bool strict = false) {
  const Categorder& s = *source;
  const Categorder& t = *target;
  if (s.object_count() > 0 && t.object_count() == 0) throw GenerationFailed("gen: no functorder into an empty target");
  std::vector<std::pair<MorId, MorId>> ordered;
  for (ObjId x = 0; x < s.object_count(); ++x)
    for (ObjId y = 0; y < s.object_count(); ++y)
      for (MorId a : s.hom(x, y))
        for (MorId b : s.hom(x, y))
          if (a != b && s.leq(a, b)) ordered.push_back({a, b});

  auto attempt = [&](const std::vector<ObjId>& om) -> std::optional<Functorder> {
    std::vector<MorId> mm(s.morphism_count(), kNone);
    std::vector<MorId> order(s.morphism_count());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::size_t budget = 20000;
    auto consistent = [&](MorId m) {
      const MorId fm = mm[m];
      for (ObjId x = 0; x < s.object_count(); ++x)
        if (s.identity(x) == m) {
          const MorId id = t.identity(om[x]);
          if (strict ? fm != id : !t.leq(fm, id)) return false;
        }
      for (auto [a, b] : ordered)
        if ((a == m || b == m) && mm[a] != kNone && mm[b] != kNone && !t.leq(mm[a], mm[b])) return false;
      auto comp_ok = [&](MorId f, MorId g) {
        const MorId h = s.compose(g, f);
        if (mm[f] == kNone || mm[g] == kNone || mm[h] == kNone) return true;
        const MorId rhs = t.compose(mm[g], mm[f]);
        return strict ? mm[h] == rhs : t.leq(mm[h], rhs);
      };
      for (MorId g : s.outgoing(s.cod(m)))
        if (!comp_ok(m, g)) return false;
      for (MorId f : s.incoming(s.dom(m)))
        if (!comp_ok(f, m)) return false;
      for (MorId f = 0; f < s.morphism_count(); ++f)
        for (MorId g : s.outgoing(s.cod(f)))
          if (s.compose(g, f) == m && !comp_ok(f, g)) return false;
      return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
      if (k == order.size()) return true;
      if (budget-- == 0) return false;
      const MorId m = order[k];
      std::vector<MorId> cands = t.hom(om[s.dom(m)], om[s.cod(m)]);
      rng.shuffle(cands);
      for (MorId c : cands) {
        mm[m] = c;
        if (consistent(m) && rec(k + 1)) return true;
      }
      mm[m] = kNone;
      return false;
    };
    if (!rec(0)) return std::nullopt;
    return Functorder{source, target, om, mm};
  };

  for (int tries = 0; tries < 20; ++tries) {
    std::vector<ObjId> om;
    for (ObjId x = 0; x < s.object_count(); ++x) om.push_back(static_cast<ObjId>(rng.below(t.object_count())));
    if (auto F = attempt(om)) return *F;
  }
  const ObjId y = t.object_count() == 0 ? 0 : static_cast<ObjId>(rng.below(t.object_count()));
  return constant_functorder(source, target, y);
}

/// A random Kleisli morphism source -> P1 target: random object images and
/// random down-closed morphism images, shrunk to the greatest solution of the
/// functorder conditions below them.
inline KleisliMorphism gen_kleisli(const CategorderPtr& source, const CategorderPtr& target, Rng& rng,
                                   double density = 0.5) {
  const Categorder& s = *source;
  const Categorder& t = *target;
  auto draw = [&] { return rng.below(1'000'000) < static_cast<std::uint64_t>(density * 1'000'000); };
  KleisliMorphism k{source, target, {}, {}};
  for (ObjId x = 0; x < s.object_count(); ++x) {
    ObjSet xs;
    for (ObjId y = 0; y < t.object_count(); ++y)
      if (draw()) xs.push_back(y);
    k.object_map.push_back(xs);
  }
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    const ObjSet& dx = k.object_map[s.dom(m)];
    const ObjSet& cx = k.object_map[s.cod(m)];
    std::vector<MorId> elems;
    for (ObjId a : dx)
      for (ObjId b : cx)
        for (MorId e : t.hom(a, b))
          if (draw()) elems.push_back(e);
    k.morphism_map.push_back(pc_make(t, dx, cx, elems));
  }
  auto intersect = [](std::vector<MorId>& a, const std::vector<MorId>& b) {
    std::vector<MorId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    const bool changed = out.size() != a.size();
    a = std::move(out);
    return changed;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (ObjId x = 0; x < s.object_count(); ++x)
      changed |= intersect(k.morphism_map[s.identity(x)].mor_set, pc_identity(t, k.object_map[x]).mor_set);
    for (MorId a = 0; a < s.morphism_count(); ++a)
      for (MorId b : s.hom(s.dom(a), s.cod(a)))
        if (a != b && s.leq(a, b)) changed |= intersect(k.morphism_map[a].mor_set, k.morphism_map[b].mor_set);
    for (MorId f = 0; f < s.morphism_count(); ++f)
      for (MorId g : s.outgoing(s.cod(f))) {
        const auto bound = pc_compose(t, k.morphism_map[f], k.morphism_map[g]);
        changed |= intersect(k.morphism_map[s.compose(g, f)].mor_set, bound.mor_set);
      }
  }
  return k;
}

/// A random pmv functor between plain categories: every identity image
/// starts in the relation, other pairs with the given density, then pairs
/// violating typing, the identity axiom or decomposition are removed until
/// none remain.
inline PmvFunctor gen_pmv(const CategorderPtr& source, const CategorderPtr& target, Rng& rng, double density = 0.5) {
  const Categorder& s = *source;
  const Categorder& t = *target;
  auto draw = [&] { return rng.below(1'000'000) < static_cast<std::uint64_t>(density * 1'000'000); };
  PmvFunctor F{source, target, std::vector<std::vector<ObjId>>(s.object_count()),
               std::vector<std::vector<MorId>>(s.morphism_count())};
  for (ObjId x = 0; x < s.object_count(); ++x)
    for (ObjId y = 0; y < t.object_count(); ++y)
      if (draw()) F.objects[x].push_back(y);
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    for (MorId d = 0; d < t.morphism_count(); ++d)
      if (draw()) F.morphisms[m].push_back(d);
  }
  for (ObjId x = 0; x < s.object_count(); ++x)
    for (ObjId y : F.objects[x]) F.morphisms[s.identity(x)].push_back(t.identity(y));
  for (auto& v : F.morphisms) sort_unique(v);

  auto keep = [&](MorId c, MorId d) {
    if (!detail::has(F.objects[s.dom(c)], t.dom(d)) || !detail::has(F.objects[s.cod(c)], t.cod(d))) return false;
    for (ObjId x = 0; x < s.object_count(); ++x)
      if (s.identity(x) == c) {
        bool ok = false;
        for (ObjId y : F.objects[x]) ok = ok || t.identity(y) == d;
        if (!ok) return false;
      }
    for (MorId f = 0; f < s.morphism_count(); ++f)
      for (MorId g : s.outgoing(s.cod(f))) {
        if (s.compose(g, f) != c) continue;
        bool found = false;
        for (MorId a : F.morphisms[f])
          for (MorId b : F.morphisms[g])
            found = found || (t.cod(a) == t.dom(b) && t.compose(b, a) == d);
        if (!found) return false;
      }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (MorId c = 0; c < s.morphism_count(); ++c) {
      std::vector<MorId> kept;
      for (MorId d : F.morphisms[c])
        if (keep(c, d)) kept.push_back(d);
      if (kept.size() != F.morphisms[c].size()) {
        F.morphisms[c] = std::move(kept);
        changed = true;
      }
    }
  }
  return F;
}

}  // namespace pcat
