#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "categorder.hpp"
#include "document.hpp"
#include "emalg.hpp"
#include "fixtures.hpp"
#include "functorder.hpp"
#include "generate.hpp"
#include "monad.hpp"
#include "ordcore.hpp"
#include "pmv.hpp"
#include "power.hpp"
#include "rel1.hpp"
#include "report.hpp"

namespace pcat {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ord-monad",        "categorder-props", "p1-monad",      "bridge",
                                              "pmv-main-theorem", "algebra",          "counterexample"};
  return names;
}

enum class SuiteFault { none, mu_drop_member, eta_drop_member };

struct SuiteConfig {
  std::vector<std::string> suites = suite_names();
  std::uint64_t seed = 7;
  std::size_t samples = 200;       // per law in sampled mode
  std::size_t random_cases = 100;  // random pmv functors and Kleisli morphisms
  SuiteFault fault = SuiteFault::none;
  SizeGuard guard = SizeGuard::from_env();
};

inline std::string fault_name(SuiteFault f) {
  switch (f) {
    case SuiteFault::mu_drop_member: return "mu-drop-member";
    case SuiteFault::eta_drop_member: return "eta-drop-member";
    default: return "none";
  }
}

/// Exit status: 0 all pass, 1 a law or validation failed, 2 bad config,
/// 3 a size guard stopped a suite.
struct SuiteResult {
  int exit_code = 0;
  Json report;
};

// ---------------------------------------------------------------------------
// Reports shared by the suites and the acceptance run
// ---------------------------------------------------------------------------

/// image(K) is no subcategory, direct_image(K) is a functorder and no functor.
inline Report obstruction_report() {
  Report r{"obstruction"};
  const Functorder K = fixtures::k();
  const auto img = image(K);
  auto& sub = r.check("image(K) is not a subcategory");
  sub.expect(!img.is_subcategory, [] { return std::pair{std::string("image is closed"), std::vector<std::string>{}}; });
  if (!img.is_subcategory) sub.notes.push_back("witness: " + braces(img.witness));
  const auto pa = power_categorder(K.source), pb = power_categorder(K.target);
  const Functorder DK = direct_image(K, pa, pb);
  r.merge(validate_functorder(DK), "direct_image(K) ");
  const auto st = is_strict_functor(DK);
  auto& strict = r.check("direct_image(K) is not a functor");
  strict.expect(!st.strict, [] { return std::pair{std::string("strict"), std::vector<std::string>{}}; });
  if (st.witness) strict.notes.push_back(st.witness->kind + " witness: " + braces(st.witness->items));
  return r;
}

/// Random pmv functors and Kleisli morphisms between plain categories with
/// at most three objects and six morphisms: the correspondence in both
/// directions, composition, the relation form and identities.
inline Report main_theorem_report(std::uint64_t seed, std::size_t cases) {
  Report r{"pmv-main-theorem"};
  auto& pk = r.check("pmv -> kleisli -> pmv = id");
  auto& kp = r.check("kleisli -> pmv -> kleisli = id");
  auto& valid = r.check("both directions land in valid morphisms");
  auto& comp = r.check("pmv_compose = kleisli composite");
  auto& iso = r.check("pmv_rel_iso round trip");
  auto& ids = r.check("identities correspond");
  Rng rng(seed);
  auto category = [&] {
    GenSpec s;
    s.objects = 1 + rng.below(3);
    s.arrows = 6 - s.objects;
    return share(gen_category(s, rng));
  };
  auto none = [] { return std::pair{std::string("mismatch"), std::vector<std::string>{}}; };
  for (std::size_t i = 0; i < cases; ++i) {
    auto a = category(), b = category(), c = category();
    const auto F = gen_pmv(a, b, rng);
    const auto G = gen_pmv(b, c, rng);
    const auto kF = pmv_to_kleisli(F);
    pk.expect(kleisli_to_pmv(kF) == F, [&] {
      return std::pair{std::string("round trip changed the pmv functor"), std::vector<std::string>{std::to_string(i)}};
    });
    const auto k = gen_kleisli(a, b, rng);
    const auto Fk = kleisli_to_pmv(k);
    kp.expect(pmv_to_kleisli(Fk) == k, [&] {
      return std::pair{std::string("round trip changed the Kleisli morphism"), std::vector<std::string>{std::to_string(i)}};
    });
    valid.expect(validate_kleisli(kF).ok() && validate_pmv(Fk).ok(), none);
    const auto direct = pmv_compose(G, F);
    comp.expect(direct == kleisli_to_pmv(kleisli_compose(pmv_to_kleisli(G), kF)) && validate_pmv(direct).ok(), [&] {
      return std::pair{std::string("composites differ"), std::vector<std::string>{std::to_string(i)}};
    });
    iso.expect(pmv_rel_iso(pmv_rel_iso(F)) == F &&
                   pmv_rel_iso(direct) == cat_relation_compose(pmv_rel_iso(G), pmv_rel_iso(F)),
               none);
    ids.expect(kleisli_to_pmv(kleisli_identity(a)) == pmv_identity(a) &&
                   pmv_to_kleisli(pmv_identity(a)) == kleisli_identity(a) &&
                   pmv_rel_iso(pmv_identity(a)) == cat_relation_identity(a),
               none);
  }
  for (auto* c : {&pk, &kp, &valid, &comp, &iso, &ids})
    c->notes.push_back(std::to_string(cases) + " random cases, seed " + std::to_string(seed));
  return r;
}

/// CUBE8, the 2-chain and the 1-element lattice.
inline Report counterexample_report(const SizeGuard& guard) {
  Report r{"counterexample"};
  auto none_with = [&](const std::string& name, const FinitePoset& p, const std::function<bool(const ExtensionSearch&)>& witness) {
    const auto L = JoinSemilattice::from_poset(p);
    const auto s = search_algebra_extension(L, guard);
    auto& c = r.check(name + ": no algebra extends the lattice");
    c.expect(!s.extension.has_value(), [] { return std::pair{std::string("an extension was found"), std::vector<std::string>{}}; });
    auto& w = r.check(name + ": expected obstruction reported");
    w.expect(witness(s), [] { return std::pair{std::string("witness missing"), std::vector<std::string>{}}; });
    c.notes.push_back(std::to_string(s.obstructions.size()) + " obstructed hom-sets among " +
                      std::to_string(s.morphisms_examined) + " morphisms of P1 of the discrete lattice");
    return s;
  };
  none_with("cube8", fixtures::cube8(), [&](const ExtensionSearch& s) {
    const Categorder& d = *s.carrier;
    const ObjId u = d.object("{1}"), v = d.object("{2}"), w = d.object("{3}");
    for (const auto& o : s.obstructions)
      if (o.dom == detail::canonical({u, w}) && o.cod == detail::canonical({v, w}) &&
          o.top.mor_set == std::vector<MorId>{d.identity(w)}) {
        r.check("cube8: expected obstruction reported").notes.push_back(s.describe(o));
        return true;
      }
    return false;
  });
  none_with("chain2", fixtures::chain2(), [&](const ExtensionSearch& s) {
    const Categorder& d = *s.carrier;
    for (const auto& o : s.obstructions)
      if (o.dom == ObjSet{d.object("bot")} && o.cod == ObjSet{d.object("top")} && o.top.mor_set.empty()) {
        r.check("chain2: expected obstruction reported").notes.push_back(s.describe(o));
        return true;
      }
    return false;
  });
  const auto s = search_algebra_extension(JoinSemilattice::from_poset(fixtures::one()), guard);
  auto& one = r.check("one: an algebra extends the lattice");
  one.expect(s.extension.has_value(), [&] {
    return std::pair{std::string("no extension"), std::vector<std::string>{std::to_string(s.obstructions.size())}};
  });
  return r;
}

/// Free algebras on TERM (full) and WALK (sampled), and their joins.
inline Report algebra_report(std::uint64_t seed, std::size_t samples, const SizeGuard& guard) {
  Report r{"algebra"};
  r.merge(validate_p1_algebra(free_p1_algebra(share(fixtures::term()), guard), LawMode::full(), guard), "TERM full: ");
  r.merge(validate_p1_algebra(free_p1_algebra(share(fixtures::walk()), guard), LawMode::sampled(seed, samples), guard),
          "WALK " + LawMode::sampled(seed, samples).describe() + ": ");
  for (const char* name : {"TERM", "WALK"}) {
    auto c = share(fixtures::categorder(name));
    const auto pc = power_categorder(c, guard);
    const auto u = underlying_p0_algebra(free_p1_algebra(c, guard), guard);
    auto& ob = r.check(std::string(name) + ": object joins are unions");
    for (ObjId a = 0; a < pc.objects.size(); ++a)
      for (ObjId b = 0; b < pc.objects.size(); ++b) {
        ObjSet un = pc.objects[a];
        un.insert(un.end(), pc.objects[b].begin(), pc.objects[b].end());
        const ObjId expected = pc.object_of(detail::canonical(un));
        ob.expect(u.objects.join(a, b) == expected, [&] {
          return std::pair{std::string("join differs from union"),
                           std::vector<std::string>{pc.cat->object_name(a), pc.cat->object_name(b)}};
        });
      }
    auto& hm = r.check(std::string(name) + ": hom joins are unions");
    for (const auto& [key, L] : u.homs) {
      const auto& elems = u.hom_elements.at(key);
      for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = 0; j < L.size(); ++j) {
          PCMorphism m = pc.morphisms[elems[i]];
          const auto& other = pc.morphisms[elems[j]].mor_set;
          m.mor_set.insert(m.mor_set.end(), other.begin(), other.end());
          sort_unique(m.mor_set);
          hm.expect(elems[L.join(i, j)] == pc.morphism_of(m), [&] {
            return std::pair{std::string("join differs from union"),
                             std::vector<std::string>{pc.cat->morphism_name(elems[i]), pc.cat->morphism_name(elems[j])}};
          });
        }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

inline std::vector<Report> run_one_suite(const std::string& name, const SuiteConfig& cfg) {
  std::vector<Report> out;
  const auto& g = cfg.guard;
  if (name == "ord-monad") {
    const OrdFault f = cfg.fault == SuiteFault::mu_drop_member ? OrdFault::mu_drop_member : OrdFault::none;
    for (std::size_t n = 0; n <= 4; ++n)
      for (const auto& p : all_posets_up_to_iso(n)) {
        auto r = check_ord_monad_laws(p, g, f);
        std::vector<std::string> covers;
        for (const auto& [lo, hi] : p.covers()) covers.push_back(p.name(lo) + "<" + p.name(hi));
        r.subject = "ord-monad " + braces(p.elements()) + " " + braces(covers);
        out.push_back(std::move(r));
      }
  } else if (name == "categorder-props") {
    for (const auto& n : fixtures::categorder_names()) {
      auto c = share(fixtures::categorder(n));
      auto r = validate_categorder(*c);
      r.subject = "categorder " + n;
      out.push_back(std::move(r));
      const auto pc = power_categorder(c, g);
      auto pr = validate_categorder(*pc.cat);
      pr.subject = "power categorder of " + n;
      const auto counts = count_power_categorder(*c);
      pr.checks.front().notes.push_back(std::to_string(counts.objects) + " objects, " +
                                        std::to_string(counts.morphisms) + " morphisms");
      out.push_back(std::move(pr));
      auto er = validate_functorder(eta(pc));
      er.subject = "eta at " + n;
      out.push_back(std::move(er));
    }
    out.push_back(obstruction_report());
  } else if (name == "p1-monad") {
    const MonadFault f = cfg.fault == SuiteFault::mu_drop_member    ? MonadFault::mu_drop_member
                         : cfg.fault == SuiteFault::eta_drop_member ? MonadFault::eta_drop_member
                                                                    : MonadFault::none;
    auto full = [&](const std::string& label, Categorder c) {
      auto r = check_p1_monad_laws(share(std::move(c)), LawMode::full(), g, f);
      r.subject = "p1-monad " + label + " full";
      out.push_back(std::move(r));
    };
    full("TERM", fixtures::term());
    full("discrete{a}", discrete({"a"}));
    for (const char* n : {"WALK", "ORDMON", "CHAIN3"}) {
      const auto mode = LawMode::sampled(cfg.seed, cfg.samples);
      auto r = check_p1_monad_laws(share(fixtures::categorder(n)), mode, g, f);
      r.subject = std::string("p1-monad ") + n + " " + mode.describe();
      out.push_back(std::move(r));
    }
  } else if (name == "bridge") {
    const std::vector<std::string> letters{"a", "b", "c"};
    for (std::size_t k = 0; k <= 3; ++k) {
      auto r = check_p0_p1_bridge({letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k)}, g);
      r.subject = "bridge |S|=" + std::to_string(k);
      out.push_back(std::move(r));
    }
  } else if (name == "pmv-main-theorem") {
    out.push_back(main_theorem_report(cfg.seed, cfg.random_cases));
    auto kr = validate_pmv(functor_as_pmv(fixtures::k()));
    kr.subject = "pmv K";
    out.push_back(std::move(kr));
  } else if (name == "algebra") {
    out.push_back(algebra_report(cfg.seed, cfg.samples, g));
  } else if (name == "counterexample") {
    out.push_back(counterexample_report(g));
  }
  return out;
}

/// Runs the named suites in order. The report holds no timing data, so equal
/// configurations give byte-identical reports.
inline SuiteResult run_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  Json config{{"suites", cfg.suites},
              {"seed", cfg.seed},
              {"samples", cfg.samples},
              {"random_cases", cfg.random_cases},
              {"fault", fault_name(cfg.fault)},
              {"guard", {{"max_objects", cfg.guard.max_objects}, {"max_morphisms", cfg.guard.max_morphisms}}}};
  res.report = {{"config", config}};
  for (const auto& s : cfg.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      res.exit_code = 2;
      res.report["error"] = "unknown suite \"" + s + "\"";
      res.report["ok"] = false;
      return res;
    }
  bool ok = true, guarded = false;
  Json suites = Json::array();
  for (const auto& s : cfg.suites) {
    Json entry{{"name", s}};
    try {
      Json reports = Json::array();
      bool suite_ok = true;
      for (const auto& r : run_one_suite(s, cfg)) {
        suite_ok = suite_ok && r.ok();
        reports.push_back(to_json(r));
      }
      entry["ok"] = suite_ok;
      entry["reports"] = reports;
      ok = ok && suite_ok;
    } catch (const SizeGuardExceeded& e) {
      entry["ok"] = false;
      entry["guard_exceeded"] = e.what();
      guarded = true;
    }
    suites.push_back(std::move(entry));
  }
  res.report["suites"] = suites;
  res.report["ok"] = ok && !guarded;
  res.exit_code = !ok ? 1 : guarded ? 3 : 0;
  return res;
}

}  // namespace pcat
