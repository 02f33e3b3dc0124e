#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ordcore.hpp"
#include "report.hpp"
#include "util.hpp"

namespace pcat {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;
inline constexpr std::uint32_t kNone = 0xFFFFFFFFu;

inline std::string identity_name(std::string_view object) { return "id:" + std::string(object); }

struct MorphismInfo {
  std::string name;
  ObjId dom = kNone;
  ObjId cod = kNone;
};

class Categorder;

/// Accumulates a categorder. Nothing is checked here beyond index ranges;
/// build() keeps every inconsistency so that validate_categorder can report it.
class CategorderBuilder {
 public:
  /// When set (the default), f . id = f and id . f = f are filled in for every
  /// morphism wherever the table has no explicit entry.
  bool infer_identity_composites = true;

  static CategorderBuilder from(const Categorder& c);

  /// Adds an object together with its identity morphism `id:<name>`.
  ObjId add_object(std::string name) {
    const ObjId x = add_bare_object(name);
    set_identity(x, add_morphism(identity_name(name), x, x));
    return x;
  }

  /// Adds an object without an identity.
  ObjId add_bare_object(std::string name) {
    const auto x = static_cast<ObjId>(objects_.size());
    object_index_.emplace(name, x);
    objects_.push_back(std::move(name));
    identities_.push_back(kNone);
    return x;
  }

  MorId add_morphism(std::string name, ObjId dom, ObjId cod) {
    const auto m = static_cast<MorId>(morphisms_.size());
    morphism_index_.emplace(name, m);
    morphisms_.push_back({std::move(name), dom, cod});
    return m;
  }

  MorId add_morphism(std::string name, std::string_view dom, std::string_view cod) {
    return add_morphism(std::move(name), require_object(dom), require_object(cod));
  }

  void set_identity(ObjId x, MorId m) { identities_.at(x) = m; }

  /// Records g . f = gf.
  void set_composite(MorId g, MorId f, MorId gf) { composites_.push_back({g, f, gf}); }

  void set_composite(std::string_view g, std::string_view f, std::string_view gf) {
    set_composite(require_morphism(g), require_morphism(f), require_morphism(gf));
  }

  void add_order(MorId lo, MorId hi) { order_.push_back({lo, hi}); }

  void add_order(std::string_view lo, std::string_view hi) { add_order(require_morphism(lo), require_morphism(hi)); }

  std::optional<ObjId> object(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<MorId> morphism(std::string_view name) const {
    auto it = morphism_index_.find(std::string(name));
    if (it == morphism_index_.end()) return std::nullopt;
    return it->second;
  }

  ObjId require_object(std::string_view name) const {
    if (auto x = object(name)) return *x;
    throw Error("unknown object '" + std::string(name) + "'");
  }

  MorId require_morphism(std::string_view name) const {
    if (auto m = morphism(name)) return *m;
    throw Error("unknown morphism '" + std::string(name) + "'");
  }

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }

  Categorder build() const;

 private:
  friend class Categorder;
  std::vector<std::string> objects_;
  std::map<std::string, ObjId> object_index_;
  std::vector<MorphismInfo> morphisms_;
  std::map<std::string, MorId> morphism_index_;
  std::vector<MorId> identities_;
  std::vector<std::tuple<MorId, MorId, MorId>> composites_;
  std::vector<std::pair<MorId, MorId>> order_;
};

/// A finite category with a partial order on each hom-set. Immutable once
/// built. Morphism ids are global; hom-sets are disjoint.
class Categorder {
 public:
  using Object = ObjId;
  using Morphism = MorId;

  Categorder() = default;

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }

  const std::string& object_name(ObjId x) const { return objects_.at(x); }
  const std::string& morphism_name(MorId m) const { return morphisms_.at(m).name; }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const MorphismInfo& info(MorId m) const { return morphisms_.at(m); }

  ObjId dom(MorId m) const { return morphisms_[m].dom; }
  ObjId cod(MorId m) const { return morphisms_[m].cod; }

  /// The identity of `x`, or kNone when the input declared none.
  MorId identity(ObjId x) const { return identities_[x]; }

  const std::vector<MorId>& hom(ObjId x, ObjId y) const { return homs_[x * objects_.size() + y]; }
  std::size_t hom_position(MorId m) const { return hom_pos_[m]; }
  const std::vector<MorId>& outgoing(ObjId x) const { return out_[x]; }
  const std::vector<MorId>& incoming(ObjId x) const { return in_[x]; }

  /// g . f, or kNone when the pair is not composable or the table has no entry.
  MorId compose(MorId g, MorId f) const {
    if (f >= morphisms_.size() || g >= morphisms_.size()) return kNone;
    if (morphisms_[f].cod != morphisms_[g].dom) return kNone;
    return comp_[comp_offset_[f] + out_pos_[g]];
  }

  bool leq(MorId a, MorId b) const {
    if (a >= morphisms_.size() || b >= morphisms_.size()) return false;
    if (morphisms_[a].dom != morphisms_[b].dom || morphisms_[a].cod != morphisms_[b].cod) return false;
    return below_[b].test(hom_pos_[a]);
  }

  /// Hom positions of everything below `m` in its hom-set, `m` included.
  const Bitset& below(MorId m) const { return below_[m]; }

  /// Every parallel pair (lo, hi) with lo < hi.
  std::vector<std::pair<MorId, MorId>> strict_order() const {
    std::vector<std::pair<MorId, MorId>> out;
    for (MorId b = 0; b < morphisms_.size(); ++b) {
      const auto& h = hom(dom(b), cod(b));
      below_[b].for_each([&](std::size_t p) {
        if (h[p] != b) out.push_back({h[p], b});
      });
    }
    return out;
  }

  /// Hasse diagram of the hom-orders.
  std::vector<std::pair<MorId, MorId>> order_covers() const {
    std::vector<std::pair<MorId, MorId>> out;
    for (const auto& h : homs_) {
      if (h.size() < 2) continue;
      std::vector<Bitset> rows;
      rows.reserve(h.size());
      for (auto m : h) rows.push_back(below_[m]);
      for (const auto& [a, b] : covering_pairs(rows)) out.push_back({h[a], h[b]});
    }
    return out;
  }

  std::optional<ObjId> find_object(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<MorId> find_morphism(std::string_view name) const {
    auto it = morphism_index_.find(std::string(name));
    if (it == morphism_index_.end()) return std::nullopt;
    return it->second;
  }

  ObjId object(std::string_view name) const {
    if (auto x = find_object(name)) return *x;
    throw Error("unknown object '" + std::string(name) + "'");
  }

  MorId morphism(std::string_view name) const {
    if (auto m = find_morphism(name)) return *m;
    throw Error("unknown morphism '" + std::string(name) + "'");
  }

  /// True when every hom-order is equality, i.e. this is an ordinary category.
  bool is_plain() const {
    for (const auto& b : below_)
      if (b.count() != 1) return false;
    return true;
  }

  // View interface shared with the lazy power constructions.

  std::vector<ObjId> enumerate_objects(const SizeGuard& = {}) const {
    std::vector<ObjId> out(objects_.size());
    for (ObjId x = 0; x < out.size(); ++x) out[x] = x;
    return out;
  }
  std::vector<MorId> enumerate_hom(ObjId x, ObjId y, const SizeGuard& = {}) const { return hom(x, y); }
  std::uint64_t hom_size(ObjId x, ObjId y, std::uint64_t = kSaturated) const { return hom(x, y).size(); }
  std::uint64_t object_count_hint() const { return objects_.size(); }

  ObjId sample_object(Rng& rng) const { return static_cast<ObjId>(rng.below(objects_.size())); }

  std::optional<MorId> sample_in_hom(ObjId x, ObjId y, Rng& rng) const {
    const auto& h = hom(x, y);
    if (h.empty()) return std::nullopt;
    return rng.pick(h);
  }

  std::optional<MorId> sample_morphism(Rng& rng) const {
    if (morphisms_.empty()) return std::nullopt;
    return static_cast<MorId>(rng.below(morphisms_.size()));
  }

  MorId sample_below(MorId m, Rng& rng) const {
    const auto members = below_[m].members();
    return hom(dom(m), cod(m))[members[rng.below(members.size())]];
  }

  // Defects kept from the input for validate_categorder.
  const std::vector<std::string>& duplicate_objects() const noexcept { return duplicate_objects_; }
  const std::vector<std::string>& duplicate_morphisms() const noexcept { return duplicate_morphisms_; }
  const std::vector<std::tuple<MorId, MorId, MorId>>& stray_composites() const noexcept { return stray_composites_; }
  const std::vector<std::tuple<MorId, MorId, MorId, MorId>>& conflicting_composites() const noexcept {
    return conflicting_composites_;
  }
  const std::vector<std::pair<MorId, MorId>>& stray_order() const noexcept { return stray_order_; }

 private:
  friend class CategorderBuilder;

  std::vector<std::string> objects_;
  std::map<std::string, ObjId> object_index_;
  std::vector<MorphismInfo> morphisms_;
  std::map<std::string, MorId> morphism_index_;
  std::vector<MorId> identities_;

  std::vector<std::vector<MorId>> homs_;
  std::vector<std::uint32_t> hom_pos_;
  std::vector<std::vector<MorId>> out_;
  std::vector<std::vector<MorId>> in_;
  std::vector<std::uint32_t> out_pos_;
  std::vector<std::size_t> comp_offset_;
  std::vector<MorId> comp_;
  std::vector<Bitset> below_;

  std::vector<std::string> duplicate_objects_;
  std::vector<std::string> duplicate_morphisms_;
  std::vector<std::tuple<MorId, MorId, MorId>> stray_composites_;
  std::vector<std::tuple<MorId, MorId, MorId, MorId>> conflicting_composites_;  // g, f, first, second
  std::vector<std::pair<MorId, MorId>> stray_order_;
};

inline Categorder CategorderBuilder::build() const {
  Categorder c;
  const std::size_t n = objects_.size();
  const std::size_t m = morphisms_.size();
  c.objects_ = objects_;
  c.morphisms_ = morphisms_;
  c.identities_ = identities_;
  for (std::size_t i = 0; i < n; ++i)
    if (!c.object_index_.emplace(objects_[i], static_cast<ObjId>(i)).second) c.duplicate_objects_.push_back(objects_[i]);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& info = morphisms_[i];
    if (info.dom >= n || info.cod >= n)
      throw Error("morphism '" + info.name + "' refers to an object outside the categorder");
    if (!c.morphism_index_.emplace(info.name, static_cast<MorId>(i)).second)
      c.duplicate_morphisms_.push_back(info.name);
  }
  for (std::size_t x = 0; x < n; ++x)
    if (identities_[x] != kNone && identities_[x] >= m) throw Error("identity of '" + objects_[x] + "' is out of range");

  c.homs_.assign(n * n, {});
  c.hom_pos_.assign(m, 0);
  c.out_.assign(n, {});
  c.in_.assign(n, {});
  c.out_pos_.assign(m, 0);
  for (MorId f = 0; f < m; ++f) {
    auto& h = c.homs_[morphisms_[f].dom * n + morphisms_[f].cod];
    c.hom_pos_[f] = static_cast<std::uint32_t>(h.size());
    h.push_back(f);
    c.out_pos_[f] = static_cast<std::uint32_t>(c.out_[morphisms_[f].dom].size());
    c.out_[morphisms_[f].dom].push_back(f);
    c.in_[morphisms_[f].cod].push_back(f);
  }

  c.comp_offset_.assign(m, 0);
  std::size_t total = 0;
  for (MorId f = 0; f < m; ++f) {
    c.comp_offset_[f] = total;
    total += c.out_[morphisms_[f].cod].size();
  }
  c.comp_.assign(total, kNone);
  for (const auto& [g, f, gf] : composites_) {
    if (g >= m || f >= m || gf >= m) throw Error("composition entry refers to an unknown morphism");
    if (morphisms_[f].cod != morphisms_[g].dom) {
      c.stray_composites_.push_back({g, f, gf});
      continue;
    }
    auto& slot = c.comp_[c.comp_offset_[f] + c.out_pos_[g]];
    if (slot != kNone && slot != gf) {
      c.conflicting_composites_.push_back({g, f, slot, gf});
      continue;
    }
    slot = gf;
  }
  if (infer_identity_composites) {
    for (MorId f = 0; f < m; ++f) {
      const MorId left = identities_[morphisms_[f].cod];
      const MorId right = identities_[morphisms_[f].dom];
      if (left != kNone && morphisms_[left].dom == morphisms_[f].cod) {
        auto& slot = c.comp_[c.comp_offset_[f] + c.out_pos_[left]];
        if (slot == kNone) slot = f;
      }
      if (right != kNone && morphisms_[right].cod == morphisms_[f].dom) {
        auto& slot = c.comp_[c.comp_offset_[right] + c.out_pos_[f]];
        if (slot == kNone) slot = f;
      }
    }
  }

  c.below_.resize(m);
  for (MorId f = 0; f < m; ++f) {
    c.below_[f] = Bitset(c.homs_[morphisms_[f].dom * n + morphisms_[f].cod].size());
    c.below_[f].set(c.hom_pos_[f]);
  }
  bool any_order = false;
  for (const auto& [lo, hi] : order_) {
    if (lo >= m || hi >= m) throw Error("order pair refers to an unknown morphism");
    if (morphisms_[lo].dom != morphisms_[hi].dom || morphisms_[lo].cod != morphisms_[hi].cod) {
      c.stray_order_.push_back({lo, hi});
      continue;
    }
    c.below_[hi].set(c.hom_pos_[lo]);
    any_order = true;
  }
  if (any_order) {
    for (const auto& h : c.homs_) {
      for (std::size_t k = 0; k < h.size(); ++k)
        for (std::size_t i = 0; i < h.size(); ++i)
          if (i != k && c.below_[h[i]].test(k)) c.below_[h[i]] |= c.below_[h[k]];
    }
  }
  return c;
}

inline CategorderBuilder CategorderBuilder::from(const Categorder& c) {
  CategorderBuilder b;
  for (ObjId x = 0; x < c.object_count(); ++x) b.add_bare_object(c.object_name(x));
  for (MorId f = 0; f < c.morphism_count(); ++f) b.add_morphism(c.morphism_name(f), c.dom(f), c.cod(f));
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (c.identity(x) != kNone) b.set_identity(x, c.identity(x));
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g : c.outgoing(c.cod(f)))
      if (auto gf = c.compose(g, f); gf != kNone) b.set_composite(g, f, gf);
  for (const auto& [g, f, gf] : c.stray_composites()) b.set_composite(g, f, gf);
  for (const auto& [lo, hi] : c.strict_order()) b.add_order(lo, hi);
  for (const auto& [lo, hi] : c.stray_order()) b.add_order(lo, hi);
  b.infer_identity_composites = false;
  return b;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline ValidationReport validate_categorder(const Categorder& c) {
  ValidationReport r{"categorder"};
  auto mn = [&](MorId m) { return m == kNone ? std::string("<undefined>") : c.morphism_name(m); };

  auto& unique = r.check("unique_ids");
  unique.instances = c.object_count() + c.morphism_count();
  for (const auto& d : c.duplicate_objects()) unique.fail("duplicate object id", {d});
  for (const auto& d : c.duplicate_morphisms()) unique.fail("duplicate morphism id", {d});

  auto& ident = r.check("identity");
  for (ObjId x = 0; x < c.object_count(); ++x) {
    const MorId i = c.identity(x);
    ident.expect(i != kNone && c.dom(i) == x && c.cod(i) == x, [&] {
      return std::pair{std::string(i == kNone ? "object has no identity" : "identity is not an endomorphism of its object"),
                       std::vector<std::string>{c.object_name(x), mn(i)}};
    });
  }

  auto& total = r.check("composition_total");
  auto& typing = r.check("composition_typing");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    for (MorId g : c.outgoing(c.cod(f))) {
      const MorId gf = c.compose(g, f);
      total.expect(gf != kNone, [&] {
        return std::pair{std::string("composable pair has no composite"), std::vector<std::string>{mn(g), mn(f)}};
      });
      if (gf == kNone) continue;
      typing.expect(c.dom(gf) == c.dom(f) && c.cod(gf) == c.cod(g), [&] {
        return std::pair{std::string("composite has the wrong domain or codomain"),
                         std::vector<std::string>{mn(g), mn(f), mn(gf)}};
      });
    }
  }

  auto& stray = r.check("stray_composition");
  stray.instances = c.stray_composites().size() + c.conflicting_composites().size();
  for (const auto& [g, f, gf] : c.stray_composites())
    stray.fail("composite given for a non-composable pair", {mn(g), mn(f), mn(gf)});
  for (const auto& [g, f, a, b] : c.conflicting_composites())
    stray.fail("two different composites given for one pair", {mn(g), mn(f), mn(a), mn(b)});

  auto& units = r.check("unit_laws");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const MorId l = c.identity(c.cod(f));
    const MorId rt = c.identity(c.dom(f));
    if (l != kNone) {
      const MorId v = c.compose(l, f);
      units.expect(v == f, [&] {
        return std::pair{std::string("id . f != f"), std::vector<std::string>{mn(f), mn(v)}};
      });
    }
    if (rt != kNone) {
      const MorId v = c.compose(f, rt);
      units.expect(v == f, [&] {
        return std::pair{std::string("f . id != f"), std::vector<std::string>{mn(f), mn(v)}};
      });
    }
  }

  auto& assoc = r.check("associativity");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    for (MorId g : c.outgoing(c.cod(f))) {
      const MorId gf = c.compose(g, f);
      if (gf == kNone) continue;
      for (MorId h : c.outgoing(c.cod(g))) {
        const MorId hg = c.compose(h, g);
        if (hg == kNone) continue;
        const MorId lhs = c.compose(h, gf);
        const MorId rhs = c.compose(hg, f);
        if (lhs == kNone || rhs == kNone) continue;
        assoc.expect(lhs == rhs, [&] {
          return std::pair{std::string("h.(g.f) != (h.g).f"),
                           std::vector<std::string>{mn(h), mn(g), mn(f), mn(lhs), mn(rhs)}};
        });
      }
    }
  }

  auto& parallel = r.check("order_parallel");
  parallel.instances = c.stray_order().size();
  for (const auto& [lo, hi] : c.stray_order()) parallel.fail("order relates non-parallel morphisms", {mn(lo), mn(hi)});

  auto& anti = r.check("order_antisymmetry");
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (ObjId y = 0; y < c.object_count(); ++y) {
      const auto& h = c.hom(x, y);
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j)
          anti.expect(!(c.leq(h[i], h[j]) && c.leq(h[j], h[i])), [&] {
            return std::pair{std::string("distinct parallel morphisms below each other"),
                             std::vector<std::string>{mn(h[i]), mn(h[j])}};
          });
    }

  // Monotone in each argument along covering pairs; transitivity gives the rest.
  auto& mono = r.check("monotonicity");
  for (const auto& [a, b] : c.order_covers()) {
    for (MorId g : c.outgoing(c.cod(a))) {
      const MorId ga = c.compose(g, a), gb = c.compose(g, b);
      if (ga == kNone || gb == kNone) continue;
      mono.expect(c.leq(ga, gb), [&] {
        return std::pair{std::string("a <= b but g.a !<= g.b"), std::vector<std::string>{mn(a), mn(b), mn(g)}};
      });
    }
    for (MorId f : c.incoming(c.dom(a))) {
      const MorId af = c.compose(a, f), bf = c.compose(b, f);
      if (af == kNone || bf == kNone) continue;
      mono.expect(c.leq(af, bf), [&] {
        return std::pair{std::string("a <= b but a.f !<= b.f"), std::vector<std::string>{mn(a), mn(b), mn(f)}};
      });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// The same category with equality as every hom-order. Throws when the
/// underlying category data is not a valid category.
inline Categorder reflexive_categorder(const Categorder& data) {
  CategorderBuilder stripped;
  stripped.infer_identity_composites = false;
  for (ObjId x = 0; x < data.object_count(); ++x) stripped.add_bare_object(data.object_name(x));
  for (MorId f = 0; f < data.morphism_count(); ++f) stripped.add_morphism(data.morphism_name(f), data.dom(f), data.cod(f));
  for (ObjId x = 0; x < data.object_count(); ++x)
    if (data.identity(x) != kNone) stripped.set_identity(x, data.identity(x));
  for (MorId f = 0; f < data.morphism_count(); ++f)
    for (MorId g : data.outgoing(data.cod(f)))
      if (auto gf = data.compose(g, f); gf != kNone) stripped.set_composite(g, f, gf);
  for (const auto& [g, f, gf] : data.stray_composites()) stripped.set_composite(g, f, gf);
  Categorder out = stripped.build();
  const auto report = validate_categorder(out);
  if (!report.ok()) throw Error("reflexive_categorder: input is not a valid category\n" + summarize(report));
  return out;
}

inline Categorder discrete(const std::vector<std::string>& s) {
  CategorderBuilder b;
  for (const auto& x : s) b.add_object(x);
  return b.build();
}

/// Exactly one morphism `a->b` for every ordered pair; identities are named
/// `id:<a>` like everywhere else.
inline Categorder indiscrete(const std::vector<std::string>& s) {
  CategorderBuilder b;
  for (const auto& x : s) b.add_object(x);
  const auto n = static_cast<ObjId>(s.size());
  std::vector<MorId> arrow(std::size_t{n} * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      arrow[x * n + y] = x == y ? *b.morphism(identity_name(s[x])) : b.add_morphism(s[x] + "->" + s[y], x, y);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) b.set_composite(arrow[y * n + z], arrow[x * n + y], arrow[x * n + z]);
  return b.build();
}

inline std::vector<std::string> forget_objects(const Categorder& c) { return c.objects(); }

/// Morphisms with domain in `from` and codomain in `to`, in id order.
inline std::vector<MorId> hom_union_ids(const Categorder& c, const std::vector<ObjId>& from, const std::vector<ObjId>& to) {
  std::vector<MorId> out;
  for (auto x : from)
    for (auto y : to)
      for (auto m : c.hom(x, y)) out.push_back(m);
  sort_unique(out);
  return out;
}

/// The union of hom-sets between two object sets, as a poset under the
/// ambient morphism order. Element names are morphism ids.
inline FinitePoset hom_union(const Categorder& c, const std::vector<std::string>& from, const std::vector<std::string>& to) {
  std::vector<ObjId> xs, ys;
  for (const auto& n : from) xs.push_back(c.object(n));
  for (const auto& n : to) ys.push_back(c.object(n));
  sort_unique(xs);
  sort_unique(ys);
  const auto ids = hom_union_ids(c, xs, ys);
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> leq;
  for (auto m : ids) names.push_back(c.morphism_name(m));
  for (auto a : ids)
    for (auto b : ids)
      if (a != b && c.leq(a, b)) leq.push_back({c.morphism_name(a), c.morphism_name(b)});
  return FinitePoset(std::move(names), std::move(leq));
}

/// Equality of categorders up to the positions of objects and morphisms:
/// same names, same typing, identities, composition table and order.
inline bool structurally_equal(const Categorder& a, const Categorder& b) {
  if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count()) return false;
  std::vector<ObjId> om(a.object_count());
  std::vector<MorId> mm(a.morphism_count());
  for (ObjId x = 0; x < a.object_count(); ++x) {
    auto y = b.find_object(a.object_name(x));
    if (!y) return false;
    om[x] = *y;
  }
  for (MorId f = 0; f < a.morphism_count(); ++f) {
    auto g = b.find_morphism(a.morphism_name(f));
    if (!g || b.dom(*g) != om[a.dom(f)] || b.cod(*g) != om[a.cod(f)]) return false;
    mm[f] = *g;
  }
  auto map_m = [&](MorId m) { return m == kNone ? kNone : mm[m]; };
  for (ObjId x = 0; x < a.object_count(); ++x)
    if (map_m(a.identity(x)) != b.identity(om[x])) return false;
  for (MorId f = 0; f < a.morphism_count(); ++f)
    for (MorId g : a.outgoing(a.cod(f)))
      if (map_m(a.compose(g, f)) != b.compose(mm[g], mm[f])) return false;
  for (MorId f = 0; f < a.morphism_count(); ++f)
    for (MorId g : a.hom(a.dom(f), a.cod(f)))
      if (a.leq(f, g) != b.leq(mm[f], mm[g])) return false;
  return true;
}

}  // namespace pcat
