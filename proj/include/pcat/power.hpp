#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "categorder.hpp"
#include "functorder.hpp"
#include "ordcore.hpp"
#include "util.hpp"
#include "view.hpp"

namespace pcat {

// ---------------------------------------------------------------------------
// Lazy power construction over any view
// ---------------------------------------------------------------------------

/// A morphism of the power construction over V. The down-closed morphism set
/// is represented by its maximal elements, which determine it uniquely; the
/// two object sets are the tags that fix which hom-set the morphism lives in.
template <class V>
struct PowerMorphism {
  std::vector<typename V::Object> dom;
  std::vector<typename V::Object> cod;
  std::vector<typename V::Morphism> gens;

  friend bool operator==(const PowerMorphism&, const PowerMorphism&) = default;
  friend auto operator<=>(const PowerMorphism&, const PowerMorphism&) = default;
};

/// The maximal elements of `xs` under v.leq, sorted and without duplicates.
template <class V>
std::vector<typename V::Morphism> maxima(const V& v, std::vector<typename V::Morphism> xs) {
  sort_unique(xs);
  std::vector<typename V::Morphism> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool top = true;
    for (std::size_t j = 0; j < xs.size() && top; ++j)
      if (j != i && v.leq(xs[i], xs[j])) top = false;
    if (top) out.push_back(xs[i]);
  }
  return out;
}

template <CategorderView V>
class Power {
 public:
  using Base = V;
  using Object = std::vector<typename V::Object>;
  using Morphism = PowerMorphism<V>;

  explicit Power(std::shared_ptr<const V> base) : base_(std::move(base)) {}

  const V& base() const { return *base_; }
  const std::shared_ptr<const V>& base_ptr() const { return base_; }

  Object make_object(Object xs) const {
    sort_unique(xs);
    return xs;
  }

  /// The morphism dom -> cod whose set is the down-closure of `elements`.
  Morphism make_morphism(Object dom, Object cod, std::vector<typename V::Morphism> elements) const {
    dom = make_object(std::move(dom));
    cod = make_object(std::move(cod));
    for (const auto& e : elements) {
      if (!std::binary_search(dom.begin(), dom.end(), base_->dom(e)) ||
          !std::binary_search(cod.begin(), cod.end(), base_->cod(e)))
        throw Error("power morphism: element " + base_->morphism_name(e) + " is not between the tags");
    }
    return {std::move(dom), std::move(cod), maxima(*base_, std::move(elements))};
  }

  const Object& dom(const Morphism& m) const { return m.dom; }
  const Object& cod(const Morphism& m) const { return m.cod; }

  Morphism identity(const Object& x) const {
    Morphism m{x, x, {}};
    for (const auto& o : x) m.gens.push_back(base_->identity(o));
    sort_unique(m.gens);
    return m;
  }

  /// g . f: the down-closure of all composites of composable members.
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (f.cod != g.dom) throw Error("power compose: tags do not match");
    std::vector<typename V::Morphism> parts;
    for (const auto& a : f.gens)
      for (const auto& b : g.gens)
        if (base_->cod(a) == base_->dom(b)) parts.push_back(base_->compose(b, a));
    return {f.dom, g.cod, maxima(*base_, std::move(parts))};
  }

  /// Inclusion of down-sets within one hom-set.
  bool leq(const Morphism& a, const Morphism& b) const {
    if (a.dom != b.dom || a.cod != b.cod) return false;
    for (const auto& x : a.gens) {
      bool covered = false;
      for (const auto& y : b.gens)
        if (base_->leq(x, y)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  }

  std::string object_name(const Object& x) const {
    std::vector<std::string> parts;
    for (const auto& o : x) parts.push_back(base_->object_name(o));
    return braces(parts);
  }

  std::string morphism_name(const Morphism& m) const {
    if (m.dom == m.cod && m == identity(m.dom)) return identity_name(object_name(m.dom));
    std::vector<std::string> parts;
    if constexpr (std::is_same_v<V, Categorder>) {
      for (auto e : elements(m)) parts.push_back(base_->morphism_name(e));
      std::sort(parts.begin(), parts.end());
      return "[" + object_name(m.dom) + "->" + object_name(m.cod) + "]" + braces(parts);
    } else {
      for (const auto& e : m.gens) parts.push_back(base_->morphism_name(e));
      return "[" + object_name(m.dom) + "->" + object_name(m.cod) + "]down" + braces(parts);
    }
  }

  /// Every element of the down-set, for a materialized base.
  std::vector<MorId> elements(const Morphism& m) const
    requires std::is_same_v<V, Categorder>
  {
    std::vector<MorId> out;
    for (auto g : m.gens) {
      const auto& h = base_->hom(base_->dom(g), base_->cod(g));
      base_->below(g).for_each([&](std::size_t p) { out.push_back(h[p]); });
    }
    sort_unique(out);
    return out;
  }

  /// The morphisms of the base between members of the two tags.
  std::vector<typename V::Morphism> hom_union(const Object& x, const Object& y, const SizeGuard& guard = {}) const {
    std::vector<typename V::Morphism> out;
    for (const auto& a : x)
      for (const auto& b : y) {
        auto h = base_->enumerate_hom(a, b, guard);
        guard.require_morphisms(out.size() + h.size(), "hom union");
        out.insert(out.end(), h.begin(), h.end());
      }
    return out;
  }

  std::uint64_t object_count_hint() const {
    const auto n = base_->object_count_hint();
    return n >= 64 ? kSaturated : sat_pow2(static_cast<std::size_t>(n));
  }

  /// All subsets of the base objects, by size and then by members.
  std::vector<Object> enumerate_objects(const SizeGuard& guard = {}) const {
    const auto base_objects = base_->enumerate_objects(guard);
    const std::size_t n = base_objects.size();
    guard.require_objects(n >= 64 ? kSaturated : sat_pow2(n), "power objects");
    std::vector<Object> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Object x;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) x.push_back(base_objects[i]);
      out.push_back(make_object(std::move(x)));
    }
    std::sort(out.begin(), out.end(), [](const Object& a, const Object& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  }

  /// All morphisms x -> y, empty first, in canonical down-set order.
  std::vector<Morphism> enumerate_hom(const Object& x, const Object& y, const SizeGuard& guard = {}) const {
    const auto elems = hom_union(x, y, guard);
    const auto [below, above] = order_rows(elems);
    std::vector<Morphism> out;
    for (const auto& s : enumerate_down_sets(below, guard, "power hom-set")) {
      Morphism m{x, y, {}};
      s.for_each([&](std::size_t i) {
        Bitset up = above[i];
        up.reset(i);
        if ((up & s).none()) m.gens.push_back(elems[i]);
      });
      sort_unique(m.gens);
      out.push_back(std::move(m));
    }
    return out;
  }

  /// Number of morphisms x -> y, saturating at cap + 1.
  std::uint64_t hom_size(const Object& x, const Object& y, std::uint64_t cap, const SizeGuard& guard = {}) const {
    const auto elems = hom_union(x, y, guard);
    return count_down_sets(order_rows(elems).first, cap);
  }

  Object sample_object(Rng& rng) const {
    Object x;
    if (base_->object_count_hint() <= 6) {
      for (const auto& o : base_->enumerate_objects())
        if (rng.coin()) x.push_back(o);
    } else {
      const auto k = rng.below(4);
      for (std::uint64_t i = 0; i < k; ++i) x.push_back(base_->sample_object(rng));
    }
    return make_object(std::move(x));
  }

  std::optional<Morphism> sample_in_hom(const Object& x, const Object& y, Rng& rng) const {
    Morphism m{x, y, {}};
    if (x.empty() || y.empty()) return m;
    const auto k = rng.below(4);
    std::vector<typename V::Morphism> parts;
    for (std::uint64_t i = 0; i < k; ++i)
      if (auto e = base_->sample_in_hom(rng.pick(x), rng.pick(y), rng)) parts.push_back(*e);
    m.gens = maxima(*base_, std::move(parts));
    return m;
  }

  std::optional<Morphism> sample_morphism(Rng& rng) const {
    const Object x = sample_object(rng);
    const Object y = sample_object(rng);
    return sample_in_hom(x, y, rng);
  }

  Morphism sample_below(const Morphism& m, Rng& rng) const {
    std::vector<typename V::Morphism> parts;
    for (const auto& g : m.gens)
      if (rng.coin()) parts.push_back(base_->sample_below(g, rng));
    return {m.dom, m.cod, maxima(*base_, std::move(parts))};
  }

 private:
  std::pair<std::vector<Bitset>, std::vector<Bitset>> order_rows(const std::vector<typename V::Morphism>& elems) const {
    std::vector<Bitset> below(elems.size(), Bitset(elems.size()));
    std::vector<Bitset> above(elems.size(), Bitset(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (i == j || base_->leq(elems[j], elems[i])) {
          below[i].set(j);
          above[j].set(i);
        }
    return {std::move(below), std::move(above)};
  }

  std::shared_ptr<const V> base_;
};

using P1 = Power<Categorder>;
using P2 = Power<P1>;
using P3 = Power<P2>;

// Structure maps of the monad, on lazy views.

/// x -> {x}, c -> down{c}.
template <CategorderView V>
Mapping<V, Power<V>> unit_map(const Power<V>& pv) {
  return {[](const typename V::Object& x) { return typename Power<V>::Object{x}; },
          [pv_base = pv.base_ptr()](const typename V::Morphism& m) {
            return typename Power<V>::Morphism{{pv_base->dom(m)}, {pv_base->cod(m)}, {m}};
          }};
}

enum class MuFault { none, drop_member };

/// Unions of families of object sets and of families of down-sets.
template <CategorderView V>
Mapping<Power<Power<V>>, Power<V>> multiplication_map(const Power<Power<V>>& ppv, MuFault fault = MuFault::none) {
  auto base = ppv.base().base_ptr();
  auto flatten = [](const std::vector<std::vector<typename V::Object>>& family) {
    std::vector<typename V::Object> out;
    for (const auto& s : family) out.insert(out.end(), s.begin(), s.end());
    sort_unique(out);
    return out;
  };
  return {flatten, [base, flatten, fault](const PowerMorphism<Power<V>>& m) {
            std::vector<typename V::Morphism> parts;
            std::size_t count = m.gens.size();
            if (fault == MuFault::drop_member && count >= 2) --count;
            for (std::size_t i = 0; i < count; ++i)
              parts.insert(parts.end(), m.gens[i].gens.begin(), m.gens[i].gens.end());
            return PowerMorphism<V>{flatten(m.dom), flatten(m.cod), maxima(*base, std::move(parts))};
          }};
}

/// The direct image of a mapping: images of object sets, down-closures of
/// images of morphism sets. Computed on maximal elements, which gives the
/// same down-set whenever F is monotone.
template <CategorderView V, CategorderView W>
Mapping<Power<V>, Power<W>> direct_image_map(const Mapping<V, W>& F, const Power<W>& pw) {
  auto target = pw.base_ptr();
  auto image = [obj = F.object](const std::vector<typename V::Object>& x) {
    std::vector<typename W::Object> out;
    for (const auto& o : x) out.push_back(obj(o));
    sort_unique(out);
    return out;
  };
  return {image, [image, mor = F.morphism, target](const PowerMorphism<V>& m) {
            std::vector<typename W::Morphism> parts;
            for (const auto& g : m.gens) parts.push_back(mor(g));
            return PowerMorphism<W>{image(m.dom), image(m.cod), maxima(*target, std::move(parts))};
          }};
}

// ---------------------------------------------------------------------------
// Explicit tagged morphisms over a materialized categorder
// ---------------------------------------------------------------------------

using ObjSet = std::vector<ObjId>;

/// A morphism of the power categorder written out in full: domain tag,
/// codomain tag and the whole down-closed morphism set. All three fields take
/// part in equality, so one set may be several distinct morphisms.
struct PCMorphism {
  ObjSet dom_tag;
  ObjSet cod_tag;
  std::vector<MorId> mor_set;

  friend bool operator==(const PCMorphism&, const PCMorphism&) = default;
  friend auto operator<=>(const PCMorphism&, const PCMorphism&) = default;
};

inline std::string objset_name(const Categorder& c, const ObjSet& x) {
  std::vector<std::string> parts;
  for (auto o : x) parts.push_back(c.object_name(o));
  return braces(parts);
}

inline std::string pc_name(const Categorder& c, const PCMorphism& m) {
  std::vector<std::string> parts;
  for (auto e : m.mor_set) parts.push_back(c.morphism_name(e));
  std::sort(parts.begin(), parts.end());
  return "[" + objset_name(c, m.dom_tag) + "->" + objset_name(c, m.cod_tag) + "]" + braces(parts);
}

namespace detail {

inline bool contains(const ObjSet& s, ObjId x) { return std::binary_search(s.begin(), s.end(), x); }

inline ObjSet canonical(ObjSet s) {
  sort_unique(s);
  return s;
}

inline void add_down(const Categorder& c, MorId m, std::vector<MorId>& out) {
  const auto& h = c.hom(c.dom(m), c.cod(m));
  c.below(m).for_each([&](std::size_t p) { out.push_back(h[p]); });
}

}  // namespace detail

/// Why `m` is not a morphism of the power categorder, if it is not.
inline std::optional<std::string> pc_defect(const Categorder& c, const PCMorphism& m) {
  if (detail::canonical(m.dom_tag) != m.dom_tag || detail::canonical(m.cod_tag) != m.cod_tag)
    return "tags are not sorted sets";
  for (auto x : m.dom_tag)
    if (x >= c.object_count()) return "domain tag has an unknown object";
  for (auto x : m.cod_tag)
    if (x >= c.object_count()) return "codomain tag has an unknown object";
  std::vector<MorId> sorted = m.mor_set;
  sort_unique(sorted);
  if (sorted != m.mor_set) return "morphism set is not sorted";
  for (auto e : m.mor_set) {
    if (e >= c.morphism_count()) return "unknown morphism in set";
    if (!detail::contains(m.dom_tag, c.dom(e)) || !detail::contains(m.cod_tag, c.cod(e)))
      return c.morphism_name(e) + " is not between the tags";
    std::vector<MorId> down;
    detail::add_down(c, e, down);
    for (auto d : down)
      if (!std::binary_search(m.mor_set.begin(), m.mor_set.end(), d)) return "set is not down-closed at " + c.morphism_name(e);
  }
  return std::nullopt;
}

/// The tagged down-closure of `elements`. Throws when an element is not
/// between the tags.
inline PCMorphism pc_make(const Categorder& c, ObjSet dom, ObjSet cod, const std::vector<MorId>& elements) {
  PCMorphism m{detail::canonical(std::move(dom)), detail::canonical(std::move(cod)), {}};
  for (auto e : elements) {
    if (e >= c.morphism_count() || !detail::contains(m.dom_tag, c.dom(e)) || !detail::contains(m.cod_tag, c.cod(e)))
      throw Error("pc_make: morphism is not between the tags");
    detail::add_down(c, e, m.mor_set);
  }
  sort_unique(m.mor_set);
  return m;
}

inline PCMorphism pc_identity(const Categorder& c, const ObjSet& x) {
  std::vector<MorId> ids;
  for (auto o : x) ids.push_back(c.identity(o));
  return pc_make(c, x, x, ids);
}

inline bool pc_leq(const PCMorphism& a, const PCMorphism& b) {
  return a.dom_tag == b.dom_tag && a.cod_tag == b.cod_tag &&
         std::includes(b.mor_set.begin(), b.mor_set.end(), a.mor_set.begin(), a.mor_set.end());
}

/// m2 . m1, the down-closure of all composites c' . c with c in m1, c' in m2.
inline PCMorphism pc_compose(const Categorder& c, const PCMorphism& m1, const PCMorphism& m2) {
  if (m1.cod_tag != m2.dom_tag) throw Error("pc_compose: codomain tag of the first is not the domain tag of the second");
  PCMorphism out{m1.dom_tag, m2.cod_tag, {}};
  for (auto a : m1.mor_set)
    for (auto b : m2.mor_set)
      if (c.cod(a) == c.dom(b)) detail::add_down(c, c.compose(b, a), out.mor_set);
  sort_unique(out.mor_set);
  return out;
}

/// m3 . m2 . m1 computed in one step from triple composites.
inline PCMorphism pc_compose3(const Categorder& c, const PCMorphism& m1, const PCMorphism& m2, const PCMorphism& m3) {
  if (m1.cod_tag != m2.dom_tag || m2.cod_tag != m3.dom_tag) throw Error("pc_compose3: tags do not chain");
  PCMorphism out{m1.dom_tag, m3.cod_tag, {}};
  for (auto a : m1.mor_set)
    for (auto b : m2.mor_set) {
      if (c.cod(a) != c.dom(b)) continue;
      for (auto d : m3.mor_set)
        if (c.cod(b) == c.dom(d)) detail::add_down(c, c.compose(d, c.compose(b, a)), out.mor_set);
    }
  sort_unique(out.mor_set);
  return out;
}

inline PCMorphism pc_eta(const Categorder& c, MorId m) { return pc_make(c, {c.dom(m)}, {c.cod(m)}, {m}); }

/// The exact direct image: down-closure of the images of every member.
inline PCMorphism pc_direct_image(const Functorder& F, const PCMorphism& m) {
  ObjSet dom, cod;
  for (auto x : m.dom_tag) dom.push_back(F.obj(x));
  for (auto x : m.cod_tag) cod.push_back(F.obj(x));
  std::vector<MorId> img;
  for (auto e : m.mor_set) img.push_back(F.mor(e));
  return pc_make(*F.target, std::move(dom), std::move(cod), img);
}

/// down{F id_C | C in X}, which equals the direct image of id_X for monotone F.
inline PCMorphism pc_direct_image_identity_shortcut(const Functorder& F, const ObjSet& x) {
  ObjSet img;
  std::vector<MorId> ids;
  for (auto o : x) {
    img.push_back(F.obj(o));
    ids.push_back(F.mor(F.source->identity(o)));
  }
  return pc_make(*F.target, img, img, ids);
}

/// A morphism of the second power written out over the first: tags are
/// families of object sets, members are tagged morphisms of the first power.
struct PC2Morphism {
  std::vector<ObjSet> dom_tag;
  std::vector<ObjSet> cod_tag;
  std::vector<PCMorphism> members;
};

/// Union of the untagged member sets, retagged by the unions of the families.
inline PCMorphism pc_mu(const Categorder& c, const PC2Morphism& m) {
  PCMorphism out;
  for (const auto& s : m.dom_tag) out.dom_tag.insert(out.dom_tag.end(), s.begin(), s.end());
  for (const auto& s : m.cod_tag) out.cod_tag.insert(out.cod_tag.end(), s.begin(), s.end());
  sort_unique(out.dom_tag);
  sort_unique(out.cod_tag);
  for (const auto& member : m.members) {
    if (pc_defect(c, member)) throw Error("pc_mu: member is not a morphism of the power categorder");
    out.mor_set.insert(out.mor_set.end(), member.mor_set.begin(), member.mor_set.end());
  }
  sort_unique(out.mor_set);
  return out;
}

inline PCMorphism to_pc(const P1& p, const P1::Morphism& m) { return {m.dom, m.cod, p.elements(m)}; }

inline P1::Morphism from_pc(const P1& p, const PCMorphism& m) {
  return {m.dom_tag, m.cod_tag, maxima(p.base(), m.mor_set)};
}

// ---------------------------------------------------------------------------
// Counting and materialization
// ---------------------------------------------------------------------------

struct PowerCounts {
  std::uint64_t objects = 0;
  std::uint64_t morphisms = 0;         // kSaturated when not counted
  std::uint64_t composable_pairs = 0;  // kSaturated when not counted
  bool exact = true;
};

namespace detail {

/// Down-sets of one base hom-set, as sets of morphism ids.
inline std::vector<std::vector<MorId>> hom_down_sets(const Categorder& c, ObjId x, ObjId y, const SizeGuard& guard) {
  const auto& h = c.hom(x, y);
  std::vector<Bitset> rows;
  for (auto m : h) rows.push_back(c.below(m));
  std::vector<std::vector<MorId>> out;
  for (const auto& s : enumerate_down_sets(rows, guard, "base hom-set down-sets")) {
    std::vector<MorId> ids;
    s.for_each([&](std::size_t p) { ids.push_back(h[p]); });
    out.push_back(std::move(ids));
  }
  return out;
}

inline std::uint64_t hom_down_set_count(const Categorder& c, ObjId x, ObjId y) {
  const auto& h = c.hom(x, y);
  bool plain = true;
  for (auto m : h)
    if (c.below(m).count() != 1) plain = false;
  if (plain) return sat_pow2(h.size());
  std::vector<Bitset> rows;
  for (auto m : h) rows.push_back(c.below(m));
  return count_down_sets(rows, std::uint64_t{1} << 40);
}

}  // namespace detail

/// Sizes of the power categorder without building it. Hom-sets of the
/// power are products over the base hom-sets they span, since morphisms of
/// different base hom-sets are incomparable. Morphism counts are exact up to
/// 10 base objects.
inline PowerCounts count_power_categorder(const Categorder& c) {
  PowerCounts r;
  const std::size_t n = c.object_count();
  r.objects = sat_pow2(n);
  if (n > 10) {
    r.morphisms = r.composable_pairs = kSaturated;
    r.exact = false;
    return r;
  }
  std::vector<std::uint64_t> d(n * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) d[x * n + y] = detail::hom_down_set_count(c, x, y);
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::uint64_t> in(subsets, 0), out(subsets, 0);
  for (std::size_t X = 0; X < subsets; ++X)
    for (std::size_t Y = 0; Y < subsets; ++Y) {
      std::uint64_t hom = 1;
      for (std::size_t x = 0; x < n; ++x)
        if ((X >> x) & 1U)
          for (std::size_t y = 0; y < n; ++y)
            if ((Y >> y) & 1U) hom = sat_mul(hom, d[x * n + y]);
      r.morphisms = sat_add(r.morphisms, hom);
      out[X] = sat_add(out[X], hom);
      in[Y] = sat_add(in[Y], hom);
    }
  for (std::size_t Y = 0; Y < subsets; ++Y) r.composable_pairs = sat_add(r.composable_pairs, sat_mul(in[Y], out[Y]));
  return r;
}

/// A power categorder built out in full, with the tagged triple behind every
/// object and morphism of `cat`.
struct PowerCategorder {
  CategorderPtr base;
  CategorderPtr cat;
  std::vector<ObjSet> objects;
  std::vector<PCMorphism> morphisms;
  std::map<ObjSet, ObjId> object_index;
  std::map<PCMorphism, MorId> morphism_index;

  ObjId object_of(const ObjSet& x) const {
    auto it = object_index.find(x);
    if (it == object_index.end()) throw Error("not an object of the power categorder");
    return it->second;
  }

  MorId morphism_of(const PCMorphism& m) const {
    auto it = morphism_index.find(m);
    if (it == morphism_index.end()) throw Error("not a morphism of the power categorder: " + pc_name(*base, m));
    return it->second;
  }
};

/// Builds the power categorder: all object subsets, all tagged down-sets,
/// composition by down-closed composites, order by inclusion.
inline PowerCategorder power_categorder(const CategorderPtr& c, const SizeGuard& guard = SizeGuard::from_env()) {
  const std::size_t n = c->object_count();
  const PowerCounts counts = count_power_categorder(*c);
  guard.require_objects(counts.objects, "power categorder");
  guard.require_morphisms(counts.morphisms, "power categorder");
  guard.require_composites(counts.composable_pairs, "power categorder");

  PowerCategorder pc;
  pc.base = c;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ObjSet x;
    for (ObjId i = 0; i < n; ++i)
      if ((mask >> i) & 1U) x.push_back(i);
    pc.objects.push_back(std::move(x));
  }
  std::sort(pc.objects.begin(), pc.objects.end(), [](const ObjSet& a, const ObjSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  const std::size_t N = pc.objects.size();
  for (ObjId i = 0; i < N; ++i) pc.object_index.emplace(pc.objects[i], i);

  std::vector<std::vector<std::vector<MorId>>> base_down(n * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) base_down[x * n + y] = detail::hom_down_sets(*c, x, y, guard);

  const std::size_t M = c->morphism_count();
  std::vector<Bitset> down_of(M, Bitset(M));
  for (MorId m = 0; m < M; ++m) {
    std::vector<MorId> d;
    detail::add_down(*c, m, d);
    for (auto e : d) down_of[m].set(e);
  }

  CategorderBuilder b;
  b.infer_identity_composites = false;
  for (const auto& x : pc.objects) b.add_bare_object(objset_name(*c, x));

  std::vector<Bitset> bits;
  std::vector<std::map<Bitset, MorId>> hom_index(N * N);
  std::vector<std::vector<MorId>> homs(N * N);
  for (ObjId X = 0; X < N; ++X)
    for (ObjId Y = 0; Y < N; ++Y) {
      // cartesian product of the base hom-sets' down-sets
      std::vector<std::vector<MorId>> sets{{}};
      for (auto x : pc.objects[X])
        for (auto y : pc.objects[Y]) {
          const auto& choices = base_down[x * n + y];
          std::vector<std::vector<MorId>> next;
          next.reserve(sets.size() * choices.size());
          for (const auto& s : sets)
            for (const auto& ch : choices) {
              auto t = s;
              t.insert(t.end(), ch.begin(), ch.end());
              next.push_back(std::move(t));
            }
          sets = std::move(next);
        }
      for (auto& s : sets) sort_unique(s);
      std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b2) {
        if (a.size() != b2.size()) return a.size() < b2.size();
        return a < b2;
      });
      const PCMorphism id = pc_identity(*c, pc.objects[X]);
      for (auto& s : sets) {
        PCMorphism m{pc.objects[X], pc.objects[Y], std::move(s)};
        const bool is_id = X == Y && m == id;
        const std::string name = is_id ? identity_name(objset_name(*c, m.dom_tag)) : pc_name(*c, m);
        const MorId k = b.add_morphism(name, X, Y);
        if (is_id) b.set_identity(X, k);
        Bitset bs(M);
        for (auto e : m.mor_set) bs.set(e);
        hom_index[X * N + Y].emplace(bs, k);
        homs[X * N + Y].push_back(k);
        bits.push_back(std::move(bs));
        pc.morphism_index.emplace(m, k);
        pc.morphisms.push_back(std::move(m));
      }
    }

  // composition: down-closure of member composites, on bitsets
  for (ObjId Y = 0; Y < N; ++Y)
    for (ObjId X = 0; X < N; ++X)
      for (MorId f : homs[X * N + Y])
        for (ObjId Z = 0; Z < N; ++Z)
          for (MorId g : homs[Y * N + Z]) {
            Bitset r(M);
            bits[f].for_each([&](std::size_t a) {
              for (MorId e : c->outgoing(c->cod(static_cast<MorId>(a))))
                if (bits[g].test(e)) r |= down_of[c->compose(e, static_cast<MorId>(a))];
            });
            b.set_composite(g, f, hom_index[X * N + Z].at(r));
          }

  // order: covers of the inclusion order remove one maximal element
  for (MorId k = 0; k < pc.morphisms.size(); ++k) {
    const auto& m = pc.morphisms[k];
    for (auto e : m.mor_set) {
      bool maximal = true;
      for (auto o : m.mor_set)
        if (o != e && c->leq(e, o)) maximal = false;
      if (!maximal) continue;
      Bitset smaller = bits[k];
      smaller.reset(e);
      b.add_order(hom_index[pc.object_of(m.dom_tag) * N + pc.object_of(m.cod_tag)].at(smaller), k);
    }
  }
  pc.cat = share(b.build());
  return pc;
}

/// The unit component C -> P1 C.
inline Functorder eta(const PowerCategorder& pc) {
  const Categorder& c = *pc.base;
  Functorder F{pc.base, pc.cat, {}, {}};
  for (ObjId x = 0; x < c.object_count(); ++x) F.object_map.push_back(pc.object_of({x}));
  for (MorId m = 0; m < c.morphism_count(); ++m) F.morphism_map.push_back(pc.morphism_of(pc_eta(c, m)));
  return F;
}

/// The direct image P1 C -> P1 D of F : C -> D, by the exact formula.
inline Functorder direct_image(const Functorder& F, const PowerCategorder& pc, const PowerCategorder& pd) {
  Functorder out{pc.cat, pd.cat, {}, {}};
  for (const auto& x : pc.objects) {
    ObjSet img;
    for (auto o : x) img.push_back(F.obj(o));
    out.object_map.push_back(pd.object_of(detail::canonical(img)));
  }
  for (const auto& m : pc.morphisms) out.morphism_map.push_back(pd.morphism_of(pc_direct_image(F, m)));
  return out;
}

/// The multiplication P1 P1 C -> P1 C; `p2` must be the power of `p1.cat`.
inline Functorder mu(const PowerCategorder& p1, const PowerCategorder& p2) {
  if (p2.base != p1.cat)
    throw Error("mu: second power categorder is not built over the first");
  auto flatten = [&](const ObjSet& family) {
    ObjSet out;
    for (auto i : family) out.insert(out.end(), p1.objects[i].begin(), p1.objects[i].end());
    return detail::canonical(out);
  };
  Functorder out{p2.cat, p1.cat, {}, {}};
  for (const auto& x : p2.objects) out.object_map.push_back(p1.object_of(flatten(x)));
  for (const auto& m : p2.morphisms) {
    PCMorphism u{flatten(m.dom_tag), flatten(m.cod_tag), {}};
    for (auto k : m.mor_set)
      u.mor_set.insert(u.mor_set.end(), p1.morphisms[k].mor_set.begin(), p1.morphisms[k].mor_set.end());
    sort_unique(u.mor_set);
    out.morphism_map.push_back(p1.morphism_of(u));
  }
  return out;
}

}  // namespace pcat
