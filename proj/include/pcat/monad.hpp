#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "categorder.hpp"
#include "functorder.hpp"
#include "ordcore.hpp"
#include "power.hpp"
#include "report.hpp"
#include "view.hpp"

namespace pcat {

/// Exhaustive or seeded-sampled evaluation of a law.
struct LawMode {
  enum class Kind { full, sampled };
  Kind kind = Kind::full;
  std::uint64_t seed = 0;
  std::size_t n = 0;

  static LawMode full() { return {}; }
  static LawMode sampled(std::uint64_t seed, std::size_t n) { return {Kind::sampled, seed, n}; }
  bool is_full() const { return kind == Kind::full; }
  std::string describe() const {
    return is_full() ? "full" : "sampled(seed=" + std::to_string(seed) + ", n=" + std::to_string(n) + ")";
  }
};

enum class MonadFault { none, mu_drop_member, eta_drop_member };

/// Objects and morphisms of a power view on which a law is evaluated.
template <class V>
struct LawElements {
  std::vector<typename V::Object> objects;
  std::vector<typename V::Morphism> morphisms;
  std::string coverage;
};

namespace detail {

// Down-sets generated by at most two elements, plus the empty one.
template <class W>
void generator_sweep(const Power<W>& pv, const typename Power<W>::Object& x, const typename Power<W>::Object& y,
                     std::vector<typename Power<W>::Morphism>& out, const SizeGuard& guard) {
  const auto elems = pv.hom_union(x, y, guard);
  out.push_back(pv.make_morphism(x, y, {}));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out.push_back(pv.make_morphism(x, y, {elems[i]}));
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!pv.base().leq(elems[i], elems[j]) && !pv.base().leq(elems[j], elems[i]))
        out.push_back(pv.make_morphism(x, y, {elems[i], elems[j]}));
  }
}

}  // namespace detail

/// Hom-sets larger than this are covered by their join-generators in full mode.
inline constexpr std::uint64_t kFullHomCap = 16384;

/// Full mode: every object, and every morphism of each hom-set with at most
/// kFullHomCap elements. Larger hom-sets contribute the empty morphism and
/// the down-sets generated by one or two elements; every law checked here
/// has both sides preserving unions within a hom-set, so agreement on
/// generators gives agreement everywhere.
template <class W>
LawElements<Power<W>> law_elements(const Power<W>& pv, const LawMode& mode, Rng& rng, const SizeGuard& guard) {
  LawElements<Power<W>> e;
  if (!mode.is_full()) {
    for (std::size_t i = 0; i < mode.n; ++i) e.objects.push_back(pv.sample_object(rng));
    for (std::size_t i = 0; i < mode.n; ++i)
      if (auto m = pv.sample_morphism(rng)) e.morphisms.push_back(*m);
    e.coverage = "sampled, " + std::to_string(mode.n) + " draws (" + mode.describe() + ")";
    return e;
  }
  e.objects = pv.enumerate_objects(guard);
  const std::uint64_t n = e.objects.size();
  guard.require_composites(sat_mul(n, n), "hom-sets to enumerate");
  std::uint64_t swept = 0, total = 0;
  for (const auto& x : e.objects)
    for (const auto& y : e.objects) {
      ++total;
      if (pv.hom_size(x, y, kFullHomCap, guard) <= kFullHomCap) {
        auto h = pv.enumerate_hom(x, y, guard);
        e.morphisms.insert(e.morphisms.end(), h.begin(), h.end());
      } else {
        ++swept;
        detail::generator_sweep(pv, x, y, e.morphisms, guard);
      }
      guard.require_morphisms(e.morphisms.size(), "law elements");
    }
  e.coverage = "exhaustive over " + std::to_string(total) + " hom-sets";
  if (swept > 0)
    e.coverage += "; " + std::to_string(swept) + " hom-sets above " + std::to_string(kFullHomCap) +
                  " elements covered by their empty, principal and two-generator down-sets";
  return e;
}

/// Checks the unit, associativity and naturality laws of (P1, eta, mu) at C,
/// working on lazy views of P1 C, P1^2 C and P1^3 C. Naturality is checked
/// against each functorder in `against` (whose sources must be C); when none
/// are given, the identity and the collapse onto TERM are used.
inline LawReport check_p1_monad_laws(const CategorderPtr& c, const LawMode& mode = LawMode::full(),
                                     const SizeGuard& guard = SizeGuard::from_env(),
                                     MonadFault fault = MonadFault::none, std::vector<Functorder> against = {}) {
  LawReport r{"p1-monad"};
  Rng rng(mode.seed);
  auto p1 = std::make_shared<const P1>(c);
  auto p2 = std::make_shared<const P2>(p1);
  auto p3 = std::make_shared<const P3>(p2);
  const MuFault mf = fault == MonadFault::mu_drop_member ? MuFault::drop_member : MuFault::none;

  auto faulty_unit = [fault]<class W>(Mapping<W, Power<W>> m) {
    if (fault != MonadFault::eta_drop_member) return m;
    auto inner = m.morphism;
    m.morphism = [inner](const typename W::Morphism& x) {
      auto out = inner(x);
      out.gens.clear();
      return out;
    };
    return m;
  };

  const auto eta_c = faulty_unit(unit_map(*p1));       // C -> P1
  const auto eta_p1 = faulty_unit(unit_map(*p2));      // P1 -> P2
  const auto p1_eta = direct_image_map(eta_c, *p2);    // P1 -> P2
  const auto mu_c = multiplication_map(*p2, mf);       // P2 -> P1
  const auto mu_p1 = multiplication_map(*p3, mf);      // P3 -> P2
  const auto p1_mu = direct_image_map(mu_c, *p2);      // P3 -> P2

  auto& unit_left = r.check("unit_left: mu . eta_P1 = id");
  auto& unit_right = r.check("unit_right: mu . P1 eta = id");
  const auto e1 = law_elements(*p1, mode, rng, guard);
  for (const auto& x : e1.objects) {
    const auto l = mu_c.object(eta_p1.object(x));
    const auto rr = mu_c.object(p1_eta.object(x));
    unit_left.expect(l == x, [&] {
      return std::pair{std::string("object"), std::vector<std::string>{p1->object_name(x), p1->object_name(l)}};
    });
    unit_right.expect(rr == x, [&] {
      return std::pair{std::string("object"), std::vector<std::string>{p1->object_name(x), p1->object_name(rr)}};
    });
  }
  for (const auto& m : e1.morphisms) {
    const auto l = mu_c.morphism(eta_p1.morphism(m));
    const auto rr = mu_c.morphism(p1_eta.morphism(m));
    unit_left.expect(l == m, [&] {
      return std::pair{std::string("morphism"), std::vector<std::string>{p1->morphism_name(m), p1->morphism_name(l)}};
    });
    unit_right.expect(rr == m, [&] {
      return std::pair{std::string("morphism"), std::vector<std::string>{p1->morphism_name(m), p1->morphism_name(rr)}};
    });
  }
  unit_left.notes.push_back(e1.coverage);
  unit_right.notes.push_back(e1.coverage);

  auto& assoc = r.check("associativity: mu . mu_P1 = mu . P1 mu");
  const auto e3 = law_elements(*p3, mode, rng, guard);
  for (const auto& x : e3.objects) {
    const auto l = mu_c.object(mu_p1.object(x));
    const auto rr = mu_c.object(p1_mu.object(x));
    assoc.expect(l == rr, [&] {
      return std::pair{std::string("object"),
                       std::vector<std::string>{p3->object_name(x), p1->object_name(l), p1->object_name(rr)}};
    });
  }
  for (const auto& m : e3.morphisms) {
    const auto l = mu_c.morphism(mu_p1.morphism(m));
    const auto rr = mu_c.morphism(p1_mu.morphism(m));
    assoc.expect(l == rr, [&] {
      return std::pair{std::string("morphism"),
                       std::vector<std::string>{p3->morphism_name(m), p1->morphism_name(l), p1->morphism_name(rr)}};
    });
  }
  assoc.notes.push_back(e3.coverage);

  if (against.empty()) {
    against.push_back(identity_functorder(c));
    against.push_back(constant_functorder(c, share(discrete({"*"})), 0));
  }
  auto& eta_nat = r.check("eta_naturality");
  auto& mu_nat = r.check("mu_naturality");
  const auto e2 = law_elements(*p2, mode, rng, guard);
  for (const auto& F : against) {
    if (F.source.get() != c.get() && !structurally_equal(*F.source, *c))
      throw Error("naturality: functorder source differs from the categorder under test");
    auto q1 = std::make_shared<const P1>(F.target);
    auto q2 = std::make_shared<const P2>(q1);
    const auto f = F.mapping();
    const auto eta_d = faulty_unit(unit_map(*q1));
    const auto p1f = direct_image_map(f, *q1);
    const auto p2f = direct_image_map(p1f, *q2);
    const auto mu_d = multiplication_map(*q2, mf);
    for (ObjId x = 0; x < c->object_count(); ++x) {
      const auto l = eta_d.object(f.object(x));
      const auto rr = p1f.object(eta_c.object(x));
      eta_nat.expect(l == rr, [&] {
        return std::pair{std::string("object"), std::vector<std::string>{c->object_name(x), q1->object_name(l),
                                                                         q1->object_name(rr)}};
      });
    }
    for (MorId m = 0; m < c->morphism_count(); ++m) {
      const auto l = eta_d.morphism(f.morphism(m));
      const auto rr = p1f.morphism(eta_c.morphism(m));
      eta_nat.expect(l == rr, [&] {
        return std::pair{std::string("morphism"), std::vector<std::string>{c->morphism_name(m), q1->morphism_name(l),
                                                                           q1->morphism_name(rr)}};
      });
    }
    for (const auto& x : e2.objects) {
      const auto l = mu_d.object(p2f.object(x));
      const auto rr = p1f.object(mu_c.object(x));
      mu_nat.expect(l == rr, [&] {
        return std::pair{std::string("object"),
                         std::vector<std::string>{p2->object_name(x), q1->object_name(l), q1->object_name(rr)}};
      });
    }
    for (const auto& m : e2.morphisms) {
      const auto l = mu_d.morphism(p2f.morphism(m));
      const auto rr = p1f.morphism(mu_c.morphism(m));
      mu_nat.expect(l == rr, [&] {
        return std::pair{std::string("morphism"),
                         std::vector<std::string>{p2->morphism_name(m), q1->morphism_name(l), q1->morphism_name(rr)}};
      });
    }
  }
  eta_nat.notes.push_back(std::to_string(against.size()) + " functorders; all of C");
  mu_nat.notes.push_back(std::to_string(against.size()) + " functorders; " + e2.coverage);

  r.merge(validate_mapping(*c, *p1, eta_c, full_sample(*c, guard)), "eta_functorder: ");
  if (mode.is_full()) {
    r.merge(validate_mapping(*p2, *p1, mu_c, full_sample(*p2, guard)), "mu_functorder: ");
  } else {
    r.merge(validate_mapping(*p2, *p1, mu_c, random_sample(*p2, rng, mode.n)), "mu_functorder: ");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sets, ordered sets and the discrete embedding
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> subset_names(const std::vector<std::string>& s) {
  return p0_ord(FinitePoset(s, {})).elements();
}

// All functions from an n-element set into a k-element set, as index vectors.
inline std::vector<std::vector<std::size_t>> all_functions(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == k) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// The discrete or indiscrete functorder induced by a function on objects.
inline Functorder induced_functorder(const CategorderPtr& src, const CategorderPtr& tgt, const std::vector<std::size_t>& f,
                                     bool indiscrete_arrows) {
  std::map<std::string, std::string> objs, mors;
  for (ObjId x = 0; x < src->object_count(); ++x) objs[src->object_name(x)] = tgt->object_name(static_cast<ObjId>(f[x]));
  if (indiscrete_arrows)
    for (ObjId x = 0; x < src->object_count(); ++x)
      for (ObjId y = 0; y < src->object_count(); ++y) {
        if (x == y) continue;
        const auto fx = tgt->object_name(static_cast<ObjId>(f[x])), fy = tgt->object_name(static_cast<ObjId>(f[y]));
        mors[src->object_name(x) + "->" + src->object_name(y)] = fx == fy ? identity_name(fx) : fx + "->" + fy;
      }
  return make_functorder(src, tgt, objs, mors);
}

}  // namespace detail

/// Relates the ordered-set monad P0 and the categorder monad P1 through the
/// discrete embedding Delta and the object-set functor G:
///  (a) ob P1(Delta S) = P0 S;
///  (b) iota: Delta P0 S -> P1 Delta S is a faithful functorder, identity on objects;
///  (c) iota is natural in functions S -> T (all T with 1 to 3 elements);
///  (d) G P1 Delta = P0 on objects and on those functions;
///  (e) sigma: P0 G C -> G P1 C is a bijection, natural, and satisfies the
///      unit and multiplication equations, for C = Delta S and indiscrete(S);
///  (f) no transformation P1 Delta -> Delta P0 satisfies the unit equation,
///      so (Delta, iota) cannot be turned into a monad functor.
/// Check (f) passes when the obstruction is exhibited; the witness is in its notes.
inline LawReport check_p0_p1_bridge(const std::vector<std::string>& s, const SizeGuard& guard = SizeGuard::from_env()) {
  LawReport r{"bridge"};
  guard.require_objects(s.size() >= 20 ? kSaturated : sat_pow2(s.size()), "bridge subsets");
  const auto ds = share(discrete(s));
  const auto p1 = power_categorder(ds, guard);
  const auto p0_names = detail::subset_names(s);

  // (a)
  auto& a = r.check("a: objects of P1 Delta S are P0 S");
  std::vector<std::string> p1_names;
  for (ObjId x = 0; x < p1.cat->object_count(); ++x) p1_names.push_back(p1.cat->object_name(x));
  auto sorted_p1 = p1_names, sorted_p0 = p0_names;
  std::sort(sorted_p1.begin(), sorted_p1.end());
  std::sort(sorted_p0.begin(), sorted_p0.end());
  a.expect(sorted_p1 == sorted_p0, [&] {
    return std::pair{std::string("object sets differ"), std::vector<std::string>{braces(sorted_p1), braces(sorted_p0)}};
  });

  // (b)
  auto dp0 = share(discrete(p0_names));
  auto iota_for = [&](const CategorderPtr& delta_p0, const PowerCategorder& pc) {
    std::map<std::string, std::string> objs;
    for (ObjId x = 0; x < delta_p0->object_count(); ++x) objs[delta_p0->object_name(x)] = delta_p0->object_name(x);
    return make_functorder(delta_p0, pc.cat, objs, {});
  };
  auto& b = r.check("b: iota is a faithful functorder, identity on objects");
  const Functorder iota = iota_for(dp0, p1);
  const auto vb = validate_functorder(iota, guard);
  b.expect(vb.ok(), [&] { return std::pair{std::string("iota is not a functorder"), vb.failed_checks()}; });
  for (ObjId x = 0; x < dp0->object_count(); ++x)
    b.expect(p1.cat->object_name(iota.obj(x)) == dp0->object_name(x), [&] {
      return std::pair{std::string("not the identity on objects"), std::vector<std::string>{dp0->object_name(x)}};
    });
  for (ObjId x = 0; x < dp0->object_count(); ++x)
    for (ObjId y = 0; y < dp0->object_count(); ++y) {
      std::vector<MorId> images;
      for (auto m : dp0->hom(x, y)) images.push_back(iota.mor(m));
      const auto n = images.size();
      sort_unique(images);
      b.expect(images.size() == n, [&] {
        return std::pair{std::string("not faithful"), std::vector<std::string>{dp0->object_name(x), dp0->object_name(y)}};
      });
    }

  // (c), (d) over all functions into sets of size 1..3
  auto& c = r.check("c: iota is natural in functions S -> T");
  auto& d = r.check("d: G P1 Delta agrees with P0");
  for (std::size_t k = 1; k <= 3; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < s.size(); ++i) count = sat_mul(count, k);
    guard.require_morphisms(count, "bridge functions");
    std::vector<std::string> t;
    for (std::size_t i = 0; i < k; ++i) t.push_back("t" + std::to_string(i));
    const auto dt = share(discrete(t));
    const auto p1t = power_categorder(dt, guard);
    const auto t_names = detail::subset_names(t);
    const auto dp0t = share(discrete(t_names));
    const Functorder iota_t = iota_for(dp0t, p1t);
    for (const auto& f : detail::all_functions(s.size(), k)) {
      const Functorder delta_f = detail::induced_functorder(ds, dt, f, false);
      const Functorder p1_delta_f = direct_image(delta_f, p1, p1t);
      // Delta P0 f, computed as images of subsets in P0 T
      std::map<std::string, std::string> objs;
      const FinitePoset tp(t, {});
      for (std::size_t i = 0; i < p1.objects.size(); ++i) {
        std::vector<std::string> img;
        for (auto o : p1.objects[i]) img.push_back(t[f[o]]);
        const std::string src = objset_name(*ds, p1.objects[i]);
        objs[src] = set_name(tp, down_closure(tp, img).members);
      }
      const Functorder dp0f = make_functorder(dp0, dp0t, objs, {});
      const Functorder lhs = compose_functorders(p1_delta_f, iota);
      const Functorder rhs = compose_functorders(iota_t, dp0f);
      c.expect(lhs == rhs, [&] {
        std::vector<std::string> w;
        for (std::size_t i = 0; i < f.size(); ++i) w.push_back(s[i] + "->" + t[f[i]]);
        return std::pair{std::string("naturality square fails"), w};
      });
      for (ObjId x = 0; x < p1.cat->object_count(); ++x) {
        const auto via_p1 = p1t.cat->object_name(p1_delta_f.obj(x));
        const auto via_p0 = objs.at(p1.cat->object_name(x));
        d.expect(via_p1 == via_p0, [&] {
          return std::pair{std::string("object images differ"),
                           std::vector<std::string>{p1.cat->object_name(x), via_p1, via_p0}};
        });
      }
    }
  }

  // (e) sigma on Delta S and indiscrete(S)
  auto& e_bij = r.check("e: sigma is a bijection");
  auto& e_nat = r.check("e: sigma is natural");
  auto& e_unit = r.check("e: G eta = sigma . eta");
  auto& e_mult = r.check("e: sigma . mu = G mu . sigma P1 . P0 sigma");
  for (bool indisc : {false, true}) {
    const auto cc = indisc ? share(indiscrete(s)) : ds;
    const auto pc = power_categorder(cc, guard);
    const FinitePoset obs(forget_objects(*cc), {});
    const auto p0_obs = down_sets(obs, guard);
    // sigma_C: P0(G C) -> G(P1 C), identity on underlying sets
    std::vector<std::size_t> hit(pc.objects.size(), 0);
    for (const auto& A : p0_obs) {
      ObjSet xs;
      A.members.for_each([&](std::size_t i) { xs.push_back(cc->object(obs.name(i))); });
      const ObjId img = pc.object_of(detail::canonical(xs));
      ++hit[img];
      e_bij.expect(pc.cat->object_name(img) == set_name(obs, A.members), [&] {
        return std::pair{std::string("sigma renames a subset"), std::vector<std::string>{set_name(obs, A.members)}};
      });
    }
    for (std::size_t i = 0; i < hit.size(); ++i)
      e_bij.expect(hit[i] == 1, [&] {
        return std::pair{std::string("sigma is not bijective at"), std::vector<std::string>{pc.cat->object_name(i)}};
      });

    const auto eta_c = eta(pc);
    for (ObjId x = 0; x < cc->object_count(); ++x)
      e_unit.expect(pc.cat->object_name(eta_c.obj(x)) == "{" + cc->object_name(x) + "}", [&] {
        return std::pair{std::string("eta on objects"), std::vector<std::string>{cc->object_name(x)}};
      });

    // naturality against maps induced by functions S -> S
    for (const auto& f : detail::all_functions(s.size(), s.size())) {
      const Functorder F = detail::induced_functorder(cc, cc, f, indisc);
      const Functorder PF = direct_image(F, pc, pc);
      for (const auto& A : p0_obs) {
        ObjSet xs, ys;
        A.members.for_each([&](std::size_t i) {
          const ObjId o = cc->object(obs.name(i));
          xs.push_back(o);
          ys.push_back(F.obj(o));
        });
        const ObjId lhs = PF.obj(pc.object_of(detail::canonical(xs)));
        const ObjId rhs = pc.object_of(detail::canonical(ys));
        e_nat.expect(lhs == rhs, [&] {
          return std::pair{std::string("naturality square fails"), std::vector<std::string>{set_name(obs, A.members)}};
        });
      }
    }

    // multiplication on objects of P0 P0 (G C), through a lazy P1^2
    auto lazy1 = std::make_shared<const P1>(cc);
    P2 lazy2(lazy1);
    const auto mu_lazy = multiplication_map(lazy2);
    guard.require_objects(p0_obs.size() >= 64 ? kSaturated : sat_pow2(p0_obs.size()), "families of subsets");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p0_obs.size()); ++mask) {
      std::vector<DownSet> members;
      P2::Object family;
      for (std::size_t i = 0; i < p0_obs.size(); ++i) {
        if (!((mask >> i) & 1U)) continue;
        members.push_back(p0_obs[i]);
        P1::Object o;
        p0_obs[i].members.for_each([&](std::size_t k) { o.push_back(cc->object(obs.name(k))); });
        family.push_back(lazy1->make_object(o));
      }
      const auto lhs = set_name(obs, ord_mu(obs, members).members);
      const auto rhs = lazy1->object_name(mu_lazy.object(lazy2.make_object(family)));
      e_mult.expect(lhs == rhs, [&] {
        return std::pair{std::string("multiplication square fails"), std::vector<std::string>{lhs, rhs}};
      });
    }
  }

  // (f)
  auto& f = r.check("f: (Delta, iota) is not a monad functor");
  std::vector<std::string> level = s;
  std::string where = "S";
  for (int depth = 0; depth < 2 && level.size() < 2; ++depth) {
    level = detail::subset_names(level);
    where = depth == 0 ? "P0 S" : "P0 P0 S";
  }
  ++f.instances;
  if (level.size() < 2) {
    f.fail("no two-element level found", {where});
  } else {
    // A monad functor (Delta, sigma) needs sigma: P1 Delta X -> Delta P0 X
    // with sigma . eta_Delta = Delta eta, forcing sigma{x} = {x}. The empty
    // morphism {x} -> {y} of P1 Delta X then needs a morphism {x} -> {y} in
    // the discrete Delta P0 X, which exists only when x = y.
    const auto dx = share(discrete(level));
    const auto px = power_categorder(dx, guard);
    const ObjId x = px.object_of({0}), y = px.object_of({1});
    const auto& h = px.cat->hom(x, y);
    const bool p1_has_empty = h.size() == 1 && px.morphisms[h[0]].mor_set.empty();
    const auto target = share(discrete(detail::subset_names(level)));
    const std::string sx = "{" + level[0] + "}", sy = "{" + level[1] + "}";
    const bool delta_p0_has_none = target->hom(target->object(sx), target->object(sy)).empty();
    if (!(p1_has_empty && delta_p0_has_none)) {
      f.fail("expected obstruction not found", {where, sx, sy});
    } else {
      f.notes.push_back("X = " + where + " = " + braces(level) + ": the empty morphism " + sx + " -> " + sy +
                        " of P1 Delta X has no image " + sx + " -> " + sy +
                        " in Delta P0 X, yet the unit equation forces sigma " + sx + " = " + sx + " and sigma " + sy +
                        " = " + sy);
      f.notes.push_back("iota itself points the other way (Delta P0 -> P1 Delta) and misses that empty morphism");
    }
  }
  return r;
}

}  // namespace pcat
