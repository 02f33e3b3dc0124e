// Command-line front end. Exit status: 0 ok, 1 a law or validation failed,
// 2 usage or document error, 3 a size guard was exceeded.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcat/pcat.hpp"

using namespace pcat;

namespace {

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
  }
  void write(const Json& j) const { write(dump_document(j)); }
};

// Prints a report and turns its verdict into the exit status.
int finish(const Report& r, const Output& out, bool text) {
  if (text)
    out.write(summarize(r));
  else
    out.write(to_json(r));
  return r.ok() ? 0 : 1;
}

SizeGuard guard_with(std::optional<std::uint64_t> objects, std::optional<std::uint64_t> morphisms) {
  SizeGuard g = SizeGuard::from_env();
  if (objects) g.max_objects = *objects;
  if (morphisms) g.max_morphisms = *morphisms;
  return g;
}

LawMode law_mode(const std::string& mode, std::uint64_t seed, std::size_t n) {
  if (mode == "full") return LawMode::full();
  if (mode == "sampled") return LawMode::sampled(seed, n);
  throw DocumentError(DocumentError::Kind::schema, "mode must be full or sampled");
}

std::string expect_kind(const Document& d, std::initializer_list<const char*> kinds) {
  const std::string k = document_kind(d.body);
  for (const char* w : kinds)
    if (k == w) return k;
  std::string want;
  for (const char* w : kinds) want += (want.empty() ? "" : " or ") + std::string(w);
  throw DocumentError(DocumentError::Kind::schema, "expected a " + want + " document, found " + k);
}

JoinSemilattice bundled_lattice(const std::string& name) {
  if (name == "cube8") return JoinSemilattice::from_poset(fixtures::cube8());
  if (name == "chain2") return JoinSemilattice::from_poset(fixtures::chain2());
  if (name == "one") return JoinSemilattice::from_poset(fixtures::one());
  throw DocumentError(DocumentError::Kind::schema, "unknown bundled lattice \"" + name + "\" (cube8, chain2, one)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcat: categorders, power categorders and partial multivalued functors"};
  app.require_subcommand(1);
  app.fallthrough();  // -o and --text may follow the verb
  Output out;
  bool text = false;
  app.add_option("-o,--output", out.path, "write the result here instead of stdout");
  app.add_flag("--text", text, "print reports as text instead of JSON");

  std::function<int()> action;

  // validate
  auto* validate = app.add_subcommand("validate", "check a document against its axioms");
  std::string validate_file;
  validate->add_option("file", validate_file)->required();
  validate->callback([&] {
    action = [&] {
      const Document d = load_document(validate_file);
      const std::string kind = document_kind(d.body);
      if (kind == "poset") return finish(validate_poset(poset_from_json(d.body)), out, text);
      if (kind == "lattice") {
        Report r{"lattice"};
        auto& c = r.check("complete join semilattice");
        std::string why;
        try {
          lattice_from_json(d.body);
        } catch (const DocumentError&) {
          throw;
        } catch (const Error& e) {
          why = e.what();
        }
        c.expect(why.empty(), [&] { return std::pair{why, std::vector<std::string>{}}; });
        return finish(r, out, text);
      }
      if (kind == "categorder") return finish(validate_categorder(categorder_from_json(d.body)), out, text);
      if (kind == "functorder") return finish(validate_functorder(functorder_from_json(d.body, d.base_dir)), out, text);
      if (kind == "kleisli") return finish(validate_kleisli(kleisli_from_json(d.body, d.base_dir)), out, text);
      return finish(validate_pmv(pmv_from_json(d.body, d.base_dir)), out, text);
    };
  });

  // power
  auto* power = app.add_subcommand("power", "the power categorder of a categorder");
  std::string power_file;
  bool count_only = false;
  std::optional<std::uint64_t> max_objects, max_morphisms;
  power->add_option("file", power_file)->required();
  power->add_flag("--count-only", count_only, "print object and morphism counts only");
  power->add_option("--max-objects", max_objects);
  power->add_option("--max-morphisms", max_morphisms);
  power->callback([&] {
    action = [&] {
      const Document d = load_document(power_file);
      expect_kind(d, {"categorder"});
      auto c = share(categorder_from_json(d.body));
      const auto counts = count_power_categorder(*c);
      if (count_only) {
        out.write(Json{{"objects", counts.objects},
                       {"morphisms", counts.morphisms},
                       {"composable_pairs", counts.composable_pairs},
                       {"exact", counts.exact}});
        return 0;
      }
      out.write(categorder_to_json(*power_categorder(c, guard_with(max_objects, max_morphisms)).cat));
      return 0;
    };
  });

  // image
  auto* img = app.add_subcommand("image", "the image of a functorder and whether it is a subcategory");
  std::string image_file;
  img->add_option("file", image_file)->required();
  img->callback([&] {
    action = [&] {
      const Document d = load_document(image_file);
      expect_kind(d, {"functorder"});
      const Functorder F = functorder_from_json(d.body, d.base_dir);
      const auto r = image(F);
      std::vector<std::string> objects, morphisms;
      for (auto x : r.objects) objects.push_back(F.target->object_name(x));
      for (auto m : r.morphisms) morphisms.push_back(F.target->morphism_name(m));
      out.write(Json{{"objects", objects},
                     {"morphisms", morphisms},
                     {"is_subcategory", r.is_subcategory},
                     {"witness", r.witness}});
      return 0;
    };
  });

  // compose
  auto* compose = app.add_subcommand("compose", "g . f for two documents f and g");
  std::string f_file, g_file;
  bool as_kleisli = false, as_pmv = false, as_functorder = false;
  compose->add_option("f", f_file)->required();
  compose->add_option("g", g_file)->required();
  auto* k_flag = compose->add_flag("--kleisli", as_kleisli);
  auto* p_flag = compose->add_flag("--pmv", as_pmv);
  auto* f_flag = compose->add_flag("--functorder", as_functorder);
  k_flag->excludes(p_flag)->excludes(f_flag);
  p_flag->excludes(f_flag);
  compose->callback([&] {
    action = [&] {
      const Document f = load_document(f_file), g = load_document(g_file);
      if (as_kleisli) {
        out.write(kleisli_to_json(kleisli_compose(kleisli_from_json(g.body, g.base_dir), kleisli_from_json(f.body, f.base_dir))));
      } else if (as_pmv) {
        out.write(pmv_to_json(pmv_compose(pmv_from_json(g.body, g.base_dir), pmv_from_json(f.body, f.base_dir))));
      } else {
        out.write(functorder_to_json(
            compose_functorders(functorder_from_json(g.body, g.base_dir), functorder_from_json(f.body, f.base_dir))));
      }
      return 0;
    };
  });

  // laws
  auto* laws = app.add_subcommand("laws", "monad laws at a categorder (P1) or a poset (P0)");
  std::string laws_file, laws_mode = "full", laws_fault = "none";
  std::uint64_t laws_seed = 0;
  std::size_t laws_n = 200;
  laws->add_option("file", laws_file)->required();
  laws->add_option("--mode", laws_mode)->check(CLI::IsMember({"full", "sampled"}));
  laws->add_option("--seed", laws_seed);
  laws->add_option("--n", laws_n, "draws per law in sampled mode");
  laws->add_option("--fault", laws_fault)->check(CLI::IsMember({"none", "mu-drop-member", "eta-drop-member"}));
  laws->callback([&] {
    action = [&]() -> int {
      const Document d = load_document(laws_file);
      const std::string kind = expect_kind(d, {"categorder", "poset"});
      if (kind == "poset") {
        if (laws_fault == "eta-drop-member") throw DocumentError(DocumentError::Kind::schema, "eta fault applies to P1 only");
        return finish(check_ord_monad_laws(poset_from_json(d.body), SizeGuard::from_env(),
                                           laws_fault == "none" ? OrdFault::none : OrdFault::mu_drop_member),
                      out, text);
      }
      const MonadFault f = laws_fault == "mu-drop-member"    ? MonadFault::mu_drop_member
                           : laws_fault == "eta-drop-member" ? MonadFault::eta_drop_member
                                                             : MonadFault::none;
      return finish(check_p1_monad_laws(share(categorder_from_json(d.body)), law_mode(laws_mode, laws_seed, laws_n),
                                        SizeGuard::from_env(), f),
                    out, text);
    };
  });

  // pmv validate | roundtrip | compose
  auto* pmv = app.add_subcommand("pmv", "partial multivalued functors");
  pmv->require_subcommand(1);
  pmv->fallthrough();
  std::string pmv_file, pmv_f, pmv_g;
  auto* pmv_validate = pmv->add_subcommand("validate", "check the pmv axioms");
  pmv_validate->add_option("file", pmv_file)->required();
  pmv_validate->callback([&] {
    action = [&] {
      const Document d = load_document(pmv_file);
      expect_kind(d, {"pmv"});
      return finish(validate_pmv(pmv_from_json(d.body, d.base_dir)), out, text);
    };
  });
  auto* pmv_round = pmv->add_subcommand("roundtrip", "pmv -> Kleisli -> pmv, printing the Kleisli form");
  pmv_round->add_option("file", pmv_file)->required();
  pmv_round->callback([&] {
    action = [&] {
      const Document d = load_document(pmv_file);
      expect_kind(d, {"pmv", "kleisli"});
      if (document_kind(d.body) == "kleisli") {
        const auto k = kleisli_from_json(d.body, d.base_dir);
        const auto F = kleisli_to_pmv(k);
        out.write(pmv_to_json(F));
        return pmv_to_kleisli(F) == k ? 0 : 1;
      }
      const auto F = pmv_from_json(d.body, d.base_dir);
      const auto k = pmv_to_kleisli(F);
      out.write(kleisli_to_json(k));
      return kleisli_to_pmv(k) == F ? 0 : 1;
    };
  });
  auto* pmv_comp = pmv->add_subcommand("compose", "g . f");
  pmv_comp->add_option("f", pmv_f)->required();
  pmv_comp->add_option("g", pmv_g)->required();
  pmv_comp->callback([&] {
    action = [&] {
      const Document f = load_document(pmv_f), g = load_document(pmv_g);
      out.write(pmv_to_json(pmv_compose(pmv_from_json(g.body, g.base_dir), pmv_from_json(f.body, f.base_dir))));
      return 0;
    };
  });

  // algebra validate | free
  auto* algebra = app.add_subcommand("algebra", "algebras of the power monad");
  algebra->require_subcommand(1);
  algebra->fallthrough();
  std::string carrier_file, structure_file, alg_mode = "full";
  std::uint64_t alg_seed = 0;
  std::size_t alg_n = 100;
  auto* alg_validate = algebra->add_subcommand("validate", "a structure functorder P1(carrier) -> carrier");
  alg_validate->add_option("carrier", carrier_file)->required();
  alg_validate->add_option("structure", structure_file)->required();
  auto* alg_free = algebra->add_subcommand("free", "the free algebra on a categorder");
  alg_free->add_option("categorder", carrier_file)->required();
  for (auto* sc : {alg_validate, alg_free}) {
    sc->add_option("--mode", alg_mode)->check(CLI::IsMember({"full", "sampled"}));
    sc->add_option("--seed", alg_seed);
    sc->add_option("--n", alg_n);
  }
  alg_validate->callback([&] {
    action = [&] {
      const Document c = load_document(carrier_file), s = load_document(structure_file);
      expect_kind(c, {"categorder"});
      expect_kind(s, {"functorder"});
      const auto guard = SizeGuard::from_env();
      const auto pc = power_categorder(share(categorder_from_json(c.body)), guard);
      const auto alg = algebra_from_functorder(pc, functorder_from_json(s.body, s.base_dir));
      return finish(validate_p1_algebra(alg, law_mode(alg_mode, alg_seed, alg_n), guard), out, text);
    };
  });
  alg_free->callback([&] {
    action = [&] {
      const Document c = load_document(carrier_file);
      expect_kind(c, {"categorder"});
      const auto guard = SizeGuard::from_env();
      const auto alg = free_p1_algebra(share(categorder_from_json(c.body)), guard);
      return finish(validate_p1_algebra(alg, law_mode(alg_mode, alg_seed, alg_n), guard), out, text);
    };
  });

  // counterexample
  auto* counter = app.add_subcommand("counterexample", "search for an algebra on a discrete lattice");
  std::string lattice_name, lattice_file;
  std::size_t max_witnesses = 10;
  auto* by_name = counter->add_option("--lattice", lattice_name, "bundled lattice: cube8, chain2 or one");
  auto* by_file = counter->add_option("--file", lattice_file, "lattice document");
  by_name->excludes(by_file);
  counter->add_option("--max-witnesses", max_witnesses, "obstructions to list (0 for all)");
  counter->callback([&] {
    action = [&] {
      std::optional<JoinSemilattice> L;
      if (!lattice_file.empty()) {
        const Document d = load_document(lattice_file);
        expect_kind(d, {"lattice"});
        L = lattice_from_json(d.body);
      } else {
        L = bundled_lattice(lattice_name.empty() ? "cube8" : lattice_name);
      }
      const auto s = search_algebra_extension(*L, SizeGuard::from_env());
      std::vector<std::string> witnesses;
      for (const auto& o : s.obstructions) {
        if (max_witnesses != 0 && witnesses.size() >= max_witnesses) break;
        witnesses.push_back(s.describe(o));
      }
      Json j{{"extension_found", s.extension.has_value()},
             {"obstructed_hom_sets", s.obstructions.size()},
             {"morphisms_examined", s.morphisms_examined},
             {"assignments_validated", s.assignments_tried},
             {"witnesses", witnesses}};
      if (s.validation) j["validation"] = to_json(*s.validation);
      out.write(j);
      return 0;
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "a seeded random document");
  GenSpec spec;
  gen->add_option("--kind", spec.kind)
      ->check(CLI::IsMember({"categorder", "category", "poset", "functorder", "kleisli", "pmv"}));
  gen->add_option("--objects", spec.objects);
  gen->add_option("--arrows", spec.arrows);
  gen->add_option("--density", spec.order_density);
  gen->add_option("--seed", spec.seed);
  gen->callback([&] {
    action = [&] {
      out.write(gen_document(spec));
      return 0;
    };
  });

  // dot
  auto* dot = app.add_subcommand("dot", "Graphviz rendering of a categorder or functorder");
  std::string dot_file;
  dot->add_option("file", dot_file)->required();
  dot->callback([&] {
    action = [&] {
      out.write(emit_dot(load_document(dot_file)));
      return 0;
    };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "run law and property suites");
  SuiteConfig cfg;
  std::string suite_fault = "none";
  suite->add_option("--suites", cfg.suites, "suites to run")->delimiter(',');
  suite->add_option("--seed", cfg.seed);
  suite->add_option("--samples", cfg.samples);
  suite->add_option("--cases", cfg.random_cases);
  suite->add_option("--fault", suite_fault)->check(CLI::IsMember({"none", "mu-drop-member", "eta-drop-member"}));
  suite->callback([&] {
    action = [&] {
      cfg.fault = suite_fault == "mu-drop-member"    ? SuiteFault::mu_drop_member
                  : suite_fault == "eta-drop-member" ? SuiteFault::eta_drop_member
                                                     : SuiteFault::none;
      const auto res = run_suite(cfg);
      out.write(res.report);
      if (res.report.contains("error")) std::cerr << "pcat: " << res.report["error"].get<std::string>() << "\n";
      return res.exit_code;
    };
  });

  // fixture
  auto* fixture = app.add_subcommand("fixture", "print a bundled fixture document");
  std::string fixture_name;
  bool list = false;
  fixture->add_option("name", fixture_name);
  fixture->add_flag("--list", list);
  fixture->callback([&] {
    action = [&] {
      if (list || fixture_name.empty()) {
        std::string names;
        for (const auto& n : fixture_names()) names += n + "\n";
        out.write(names);
        return 0;
      }
      if (std::find(fixture_names().begin(), fixture_names().end(), fixture_name) == fixture_names().end())
        throw DocumentError(DocumentError::Kind::schema, "unknown fixture \"" + fixture_name + "\"");
      out.write(fixture_document(fixture_name));
      return 0;
    };
  });

  // canon
  auto* canon = app.add_subcommand("canon", "rewrite a document in canonical form");
  std::string canon_file;
  canon->add_option("file", canon_file)->required();
  canon->callback([&] {
    action = [&] {
      out.write(canonicalize(load_document(canon_file)));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const SizeGuardExceeded& e) {
    std::cerr << "pcat: size guard: " << e.what() << "\n";
    return 3;
  } catch (const DocumentError& e) {
    std::cerr << "pcat: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "pcat: " << e.what() << "\n";
    return 1;
  }
}
