#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "categorder.hpp"
#include "functorder.hpp"
#include "monad.hpp"
#include "ordcore.hpp"
#include "power.hpp"
#include "report.hpp"
#include "view.hpp"

namespace pcat {

/// A finite poset in which every subset, the empty one included, has a least
/// upper bound. Binary joins are tabulated; larger joins fold them.
class JoinSemilattice {
 public:
  /// Throws Error naming the first pair without a least upper bound.
  static JoinSemilattice from_poset(FinitePoset p) {
    const auto rv = validate_poset(p);
    if (!rv.ok()) throw Error("join semilattice: not a partial order\n" + summarize(rv));
    JoinSemilattice L;
    const std::size_t n = p.size();
    L.order_ = std::move(p);
    const auto& P = L.order_;
    auto least = [&](const Bitset& candidates) -> std::optional<std::size_t> {
      std::optional<std::size_t> found;
      candidates.for_each([&](std::size_t c) {
        bool least = true;
        candidates.for_each([&](std::size_t d) { least = least && P.leq(c, d); });
        if (least) found = c;
      });
      return found;
    };
    Bitset all(n);
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    auto bottom = least(all);
    if (!bottom) throw Error("join semilattice: no least element (the empty join)");
    L.bottom_ = *bottom;
    L.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Bitset upper(n);
        for (std::size_t c = 0; c < n; ++c)
          if (P.leq(a, c) && P.leq(b, c)) upper.set(c);
        auto j = least(upper);
        if (!j) throw Error("join semilattice: " + P.name(a) + " and " + P.name(b) + " have no least upper bound");
        L.table_[a * n + b] = *j;
      }
    return L;
  }

  const FinitePoset& poset() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t join(std::size_t a, std::size_t b) const { return table_.at(a * size() + b); }

  std::size_t join(const std::vector<std::size_t>& xs) const {
    std::size_t out = bottom_;
    for (auto x : xs) out = join(out, x);
    return out;
  }

 private:
  FinitePoset order_;
  std::size_t bottom_ = 0;
  std::vector<std::size_t> table_;
};

/// A carrier categorder with a structure map P1(carrier) -> carrier, kept
/// lazy on the power side so large carriers need not be materialized.
struct P1Algebra {
  CategorderPtr carrier;
  Mapping<P1, Categorder> structure;
};

/// Builds the structure map from functions on explicit subsets and tagged
/// down-sets of the carrier.
inline P1Algebra make_p1_algebra(const CategorderPtr& carrier, std::function<ObjId(const ObjSet&)> on_objects,
                                 std::function<MorId(const PCMorphism&)> on_morphisms) {
  auto p = std::make_shared<const P1>(carrier);
  return {carrier,
          {[on_objects](const ObjSet& x) { return on_objects(x); },
           [p, on_morphisms](const P1::Morphism& m) { return on_morphisms(to_pc(*p, m)); }}};
}

/// An algebra whose structure is a materialized functorder out of `pc.cat`.
inline P1Algebra algebra_from_functorder(const PowerCategorder& pc, const Functorder& a) {
  if (!structurally_equal(*a.source, *pc.cat) || !structurally_equal(*a.target, *pc.base))
    throw Error("algebra structure must run from the power categorder of the carrier to the carrier");
  auto power = std::make_shared<const PowerCategorder>(pc);
  auto fn = std::make_shared<const Functorder>(a);
  return make_p1_algebra(
      pc.base, [power, fn](const ObjSet& x) { return fn->obj(power->object_of(x)); },
      [power, fn](const PCMorphism& m) { return fn->mor(power->morphism_of(m)); });
}

/// The same algebra with the structure map changed at one object subset.
inline P1Algebra with_object_value(P1Algebra alg, ObjSet at, ObjId value) {
  at = detail::canonical(std::move(at));
  alg.structure.object = [inner = alg.structure.object, at, value](const ObjSet& x) {
    return x == at ? value : inner(x);
  };
  return alg;
}

/// The free algebra on C: carrier P1 C, structure the multiplication.
inline P1Algebra free_p1_algebra(const CategorderPtr& c, const SizeGuard& guard = SizeGuard::from_env()) {
  auto pc = std::make_shared<const PowerCategorder>(power_categorder(c, guard));
  auto flatten = [pc](const ObjSet& family) {
    ObjSet out;
    for (auto i : family) out.insert(out.end(), pc->objects[i].begin(), pc->objects[i].end());
    return detail::canonical(out);
  };
  return make_p1_algebra(
      pc->cat, [pc, flatten](const ObjSet& x) { return pc->object_of(flatten(x)); },
      [pc, flatten](const PCMorphism& m) {
        PCMorphism u{flatten(m.dom_tag), flatten(m.cod_tag), {}};
        for (auto k : m.mor_set)
          u.mor_set.insert(u.mor_set.end(), pc->morphisms[k].mor_set.begin(), pc->morphisms[k].mor_set.end());
        sort_unique(u.mor_set);
        return pc->morphism_of(u);
      });
}

/// Unit law on every object and morphism of the carrier, associativity on
/// P1^2 of the carrier (all of it, or a seeded sample), and the functorder
/// conditions of the structure map on P1 of the carrier.
inline LawReport validate_p1_algebra(const P1Algebra& alg, const LawMode& mode = LawMode::full(),
                                     const SizeGuard& guard = SizeGuard::from_env()) {
  LawReport r{"p1-algebra"};
  const Categorder& c = *alg.carrier;
  auto p1 = std::make_shared<const P1>(alg.carrier);
  auto p2 = std::make_shared<const P2>(p1);
  const auto& a = alg.structure;
  Rng rng(mode.seed);

  // an invalid structure map can produce ill-typed intermediate values;
  // evaluating them is recorded as a failure of the law, not thrown
  auto attempt = [](Check& chk, auto&& eval, auto&& describe) {
    std::string error;
    bool ok = false;
    try {
      ok = eval();
    } catch (const Error& e) {
      error = e.what();
    }
    chk.expect(ok, [&] {
      auto [what, witness] = describe();
      if (!error.empty()) what = "evaluation failed: " + error;
      return std::pair{what, witness};
    });
  };

  auto& unit = r.check("unit: a . eta = id");
  const auto eta = unit_map(*p1);
  for (ObjId x = 0; x < c.object_count(); ++x) {
    ObjId y = x;
    attempt(unit, [&] { return (y = a.object(eta.object(x))) == x; }, [&] {
      return std::pair{std::string("object"), std::vector<std::string>{c.object_name(x), c.object_name(y)}};
    });
  }
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    MorId k = m;
    attempt(unit, [&] { return (k = a.morphism(eta.morphism(m))) == m; }, [&] {
      return std::pair{std::string("morphism"), std::vector<std::string>{c.morphism_name(m), c.morphism_name(k)}};
    });
  }
  unit.notes.push_back("every object and morphism of the carrier");

  auto& assoc = r.check("associativity: a . mu = a . P1 a");
  const auto mu = multiplication_map(*p2);
  const auto p1a = direct_image_map(a, *p1);
  const auto e2 = law_elements(*p2, mode, rng, guard);
  for (const auto& x : e2.objects) {
    ObjId l = 0, rr = 0;
    attempt(assoc, [&] {
      l = a.object(mu.object(x));
      rr = a.object(p1a.object(x));
      return l == rr;
    }, [&] {
      return std::pair{std::string("object"),
                       std::vector<std::string>{p2->object_name(x), c.object_name(l), c.object_name(rr)}};
    });
  }
  for (const auto& m : e2.morphisms) {
    MorId l = 0, rr = 0;
    attempt(assoc, [&] {
      l = a.morphism(mu.morphism(m));
      rr = a.morphism(p1a.morphism(m));
      return l == rr;
    }, [&] {
      return std::pair{std::string("morphism"),
                       std::vector<std::string>{p2->morphism_name(m), c.morphism_name(l), c.morphism_name(rr)}};
    });
  }
  assoc.notes.push_back(e2.coverage);

  const auto sample = mode.is_full() ? full_sample(*p1, guard) : random_sample(*p1, rng, mode.n);
  r.merge(validate_mapping(*p1, c, a, sample), "structure: ");
  return r;
}

/// What an algebra induces: a join semilattice on the carrier's objects and
/// one on each hom-set, with the axioms checked in `report`.
struct UnderlyingP0Algebra {
  JoinSemilattice objects;
  std::map<std::pair<ObjId, ObjId>, JoinSemilattice> homs;
  std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> hom_elements;  // hom element i is morphism hom_elements[i]
  LawReport report;
};

namespace detail {

/// Subsets of {0..n-1} to test a join on: all of them when there are at
/// most 2^16, otherwise the empty set, singletons, pairs and the full set.
inline std::vector<std::vector<std::size_t>> join_test_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n <= 16) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) s.push_back(i);
      out.push_back(std::move(s));
    }
    return out;
  }
  out.push_back({});
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({i});
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({i, j});
  }
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  out.push_back(std::move(all));
  return out;
}

// Checks that join(S) is the least upper bound of S for the given order.
template <class Leq, class Join, class Name>
void check_lub(Check& chk, std::size_t n, Leq leq, Join join, Name name, const std::string& where) {
  for (const auto& s : join_test_subsets(n)) {
    const std::size_t j = join(s);
    bool upper = true;
    for (auto x : s) upper = upper && leq(x, j);
    bool least = true;
    std::size_t spoiler = 0;
    for (std::size_t u = 0; u < n && least; ++u) {
      bool bound = true;
      for (auto x : s) bound = bound && leq(x, u);
      if (bound && !leq(j, u)) {
        least = false;
        spoiler = u;
      }
    }
    chk.expect(upper && least, [&] {
      std::vector<std::string> names;
      for (auto x : s) names.push_back(name(x));
      std::vector<std::string> w{where, braces(names), name(j)};
      if (!least) w.push_back(name(spoiler));
      return std::pair{std::string(upper ? "join is not least" : "join is not an upper bound"), w};
    });
  }
}

}  // namespace detail

/// Reads off the object semilattice (x <= y iff a{x,y} = y, join = a on
/// subsets) and the hom semilattices (join of S in hom(x,y) = a applied to the
/// down-closure of S tagged {x} -> {y}), checking the semilattice axioms.
/// Throws Error carrying the report if they fail.
inline UnderlyingP0Algebra underlying_p0_algebra(const P1Algebra& alg, const SizeGuard& guard = SizeGuard::from_env()) {
  const Categorder& c = *alg.carrier;
  const auto& a = alg.structure;
  P1 p1(alg.carrier);
  const std::size_t n = c.object_count();
  guard.require_objects(n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << n, "object subsets of the carrier");
  LawReport r{"underlying-p0-algebra"};

  auto& otype = r.check("object_order: partial order");
  std::vector<Bitset> below(n, Bitset(n));
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      if (a.object(detail::canonical({x, y})) == y) below[y].set(x);
  for (ObjId x = 0; x < n; ++x) {
    otype.expect(below[x].test(x), [&] {
      return std::pair{std::string("not reflexive"), std::vector<std::string>{c.object_name(x)}};
    });
    for (ObjId y = 0; y < n; ++y) {
      if (x != y)
        otype.expect(!(below[y].test(x) && below[x].test(y)), [&] {
          return std::pair{std::string("not antisymmetric"), std::vector<std::string>{c.object_name(x), c.object_name(y)}};
        });
      for (ObjId z = 0; z < n; ++z)
        if (below[y].test(x) && below[z].test(y))
          otype.expect(below[z].test(x), [&] {
            return std::pair{std::string("not transitive"),
                             std::vector<std::string>{c.object_name(x), c.object_name(y), c.object_name(z)}};
          });
    }
  }
  auto& ojoin = r.check("object_join: least upper bound");
  if (otype.passed()) {
    detail::check_lub(
        ojoin, n, [&](std::size_t x, std::size_t y) { return below[y].test(x); },
        [&](const std::vector<std::size_t>& s) {
          ObjSet x(s.begin(), s.end());
          return static_cast<std::size_t>(a.object(x));
        },
        [&](std::size_t x) { return c.object_name(static_cast<ObjId>(x)); }, "objects");
  }

  auto& htype = r.check("hom_join: typed");
  auto& hjoin = r.check("hom_join: least upper bound");
  std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> homs;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      const auto hom = c.hom(x, y);
      auto join = [&](const std::vector<std::size_t>& s) -> std::optional<std::size_t> {
        std::vector<MorId> members;
        for (auto i : s) members.push_back(hom[i]);
        const MorId j = a.morphism(p1.make_morphism({x}, {y}, members));
        if (c.dom(j) != x || c.cod(j) != y) return std::nullopt;
        return static_cast<std::size_t>(std::find(hom.begin(), hom.end(), j) - hom.begin());
      };
      bool typed = true;
      for (const auto& s : detail::join_test_subsets(hom.size()))
        htype.expect(join(s).has_value(), [&] {
          typed = false;
          std::vector<std::string> names{c.object_name(x) + " -> " + c.object_name(y)};
          for (auto i : s) names.push_back(c.morphism_name(hom[i]));
          return std::pair{std::string("join leaves the hom-set"), names};
        });
      if (!typed) continue;
      detail::check_lub(
          hjoin, hom.size(), [&](std::size_t i, std::size_t j) { return c.leq(hom[i], hom[j]); },
          [&](const std::vector<std::size_t>& s) { return *join(s); },
          [&](std::size_t i) { return c.morphism_name(hom[i]); }, c.object_name(x) + " -> " + c.object_name(y));
      homs.emplace(std::pair{x, y}, hom);
    }
  if (!r.ok()) throw Error("structure map does not induce join semilattices\n" + summarize(r));

  std::vector<std::string> onames;
  for (ObjId x = 0; x < n; ++x) onames.push_back(c.object_name(x));
  UnderlyingP0Algebra out{JoinSemilattice::from_poset(FinitePoset::from_relation(onames, below)), {}, {}, r};
  for (const auto& [key, hom] : homs) {
    std::vector<std::string> names;
    std::vector<Bitset> hb(hom.size(), Bitset(hom.size()));
    for (std::size_t i = 0; i < hom.size(); ++i) {
      names.push_back(c.morphism_name(hom[i]));
      for (std::size_t j = 0; j < hom.size(); ++j)
        if (c.leq(hom[j], hom[i])) hb[i].set(j);
    }
    out.homs.emplace(key, JoinSemilattice::from_poset(FinitePoset::from_relation(names, hb)));
  }
  out.hom_elements = std::move(homs);
  return out;
}

/// A hom-set X -> Y of P1(Delta L) with join X != join Y: none of its
/// morphisms can go anywhere. `top` is its largest morphism.
struct ExtensionObstruction {
  ObjSet dom;
  ObjSet cod;
  PCMorphism top;
  std::size_t dom_join;
  std::size_t cod_join;
};

struct ExtensionSearch {
  CategorderPtr carrier;                       // Delta L
  std::optional<P1Algebra> extension;          // set when one exists
  std::vector<ExtensionObstruction> obstructions;
  std::uint64_t morphisms_examined = 0;        // morphisms of P1(Delta L)
  std::uint64_t assignments_tried = 0;         // complete candidate structure maps validated
  std::optional<LawReport> validation;         // of the extension, when one was tried

  std::string describe(const ExtensionObstruction& o) const {
    const Categorder& d = *carrier;
    return pc_name(d, o.top) + " needs a morphism " + d.object_name(o.dom_join) + " -> " + d.object_name(o.cod_join);
  }
};

/// Looks for a P1-algebra on the discrete categorder on L whose object part
/// is the join of L. Every morphism X -> Y of P1(Delta L) must go to a
/// morphism join X -> join Y of Delta L, of which there is one if the joins
/// agree and none otherwise; the search enumerates these candidate sets,
/// records every hom-set whose candidates are empty, and validates each
/// complete assignment that remains.
inline ExtensionSearch search_algebra_extension(const JoinSemilattice& L, const SizeGuard& guard = SizeGuard::from_env()) {
  const std::size_t n = L.size();
  if (n >= 32) throw SizeGuardExceeded("lattice for the extension search", n, 31);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  guard.require_objects(subsets, "objects of P1 of the discrete lattice");
  guard.require_composites(sat_mul(subsets, subsets), "hom-sets of P1 of the discrete lattice");

  ExtensionSearch out;
  out.carrier = share(discrete(L.poset().elements()));
  const Categorder& d = *out.carrier;
  std::vector<ObjSet> sets(subsets);
  std::vector<std::size_t> joins(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) {
        sets[mask].push_back(static_cast<ObjId>(i));
        members.push_back(i);
      }
    joins[mask] = L.join(members);
  }

  // candidates[X][Y] for the morphisms of hom(X, Y); all of them share one
  // candidate set since Delta L has only identities
  for (std::uint64_t X = 0; X < subsets; ++X)
    for (std::uint64_t Y = 0; Y < subsets; ++Y) {
      const std::uint64_t common = X & Y;
      out.morphisms_examined = sat_add(out.morphisms_examined, std::uint64_t{1} << std::popcount(common));
      const auto candidates = d.hom(static_cast<ObjId>(joins[X]), static_cast<ObjId>(joins[Y]));
      if (!candidates.empty()) continue;
      PCMorphism top{sets[X], sets[Y], {}};
      for (auto o : sets[common]) top.mor_set.push_back(d.identity(o));
      sort_unique(top.mor_set);
      out.obstructions.push_back({sets[X], sets[Y], std::move(top), joins[X], joins[Y]});
    }
  if (!out.obstructions.empty()) return out;

  // every candidate set is a singleton: exactly one assignment to validate
  auto join_of = [joins](const ObjSet& x) {
    std::uint64_t mask = 0;
    for (auto o : x) mask |= std::uint64_t{1} << o;
    return static_cast<ObjId>(joins[mask]);
  };
  auto carrier = out.carrier;
  P1Algebra alg = make_p1_algebra(carrier, join_of, [carrier, join_of](const PCMorphism& m) {
    const ObjId a = join_of(m.dom_tag), b = join_of(m.cod_tag);
    const auto h = carrier->hom(a, b);
    if (h.empty()) throw Error("extension: no morphism between the joins");
    return h.front();
  });
  ++out.assignments_tried;
  out.validation = validate_p1_algebra(alg, LawMode::full(), guard);
  if (out.validation->ok()) out.extension = std::move(alg);
  return out;
}

}  // namespace pcat
