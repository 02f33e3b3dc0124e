#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "categorder.hpp"
#include "emalg.hpp"
#include "fixtures.hpp"
#include "functorder.hpp"
#include "generate.hpp"
#include "ordcore.hpp"
#include "pmv.hpp"
#include "power.hpp"
#include "rel1.hpp"

namespace pcat {

using Json = nlohmann::json;

/// Unreadable or ill-formed documents. `kind` separates malformed text,
/// wrong structure and names that refer to nothing.
class DocumentError : public Error {
 public:
  enum class Kind { parse, schema, dangling };

  DocumentError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw DocumentError(DocumentError::Kind::schema, where + ": " + what);
}

[[noreturn]] inline void dangling(const std::string& where, const std::string& what) {
  throw DocumentError(DocumentError::Kind::dangling, where + ": " + what);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, "missing field \"" + key + "\"");
  return *it;
}

inline void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      schema_error(where, "unexpected field \"" + it.key() + "\"");
}

inline const std::string& as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get_ref<const std::string&>();
}

inline const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  return j;
}

inline const Json& as_object(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  return j;
}

inline std::vector<std::string> strings(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i)
    out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::vector<std::string>> tuples(const Json& j, std::size_t arity, const std::string& where) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    auto t = strings(j[i], w);
    if (t.size() != arity) schema_error(w, "expected " + std::to_string(arity) + " names");
    out.push_back(std::move(t));
  }
  return out;
}

inline void expect_type(const Json& j, const std::string& type, const std::string& where) {
  as_object(j, where);
  const auto& t = as_string(field(j, "type", where), where + ".type");
  if (t != type) schema_error(where, "expected a " + type + " document, found \"" + t + "\"");
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline bool is_identity(const Categorder& c, MorId m) { return c.identity(c.dom(m)) == m; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

/// Parses JSON text; syntax errors carry a line and column.
inline Json parse_document_text(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw DocumentError(DocumentError::Kind::parse,
                        source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
  }
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(DocumentError::Kind::parse, path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A parsed document and the directory that relative references resolve in.
struct Document {
  Json body;
  std::filesystem::path base_dir;
};

inline Document load_document(const std::filesystem::path& path) {
  return {parse_document_text(read_text_file(path), path.string()), path.parent_path()};
}

inline void save_document(const Json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << dump_document(j);
}

/// "poset", "lattice", "categorder", "functorder", "kleisli" or "pmv".
inline std::string document_kind(const Json& j) {
  detail::as_object(j, "document");
  const std::string t = detail::as_string(detail::field(j, "type", "document"), "document.type");
  if (t == "functorder" && j.contains("kleisli")) {
    if (!j["kleisli"].is_boolean()) detail::schema_error("document.kleisli", "expected a boolean");
    if (j["kleisli"].get<bool>()) return "kleisli";
  }
  static const std::set<std::string> known{"poset", "lattice", "categorder", "functorder", "pmv"};
  if (!known.count(t)) detail::schema_error("document.type", "unknown document type \"" + t + "\"");
  return t;
}

// A nested source/target: an inline document or a path relative to base_dir.
inline Document resolve_reference(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  if (j.is_string()) {
    const std::filesystem::path p = base_dir / j.get<std::string>();
    if (!std::filesystem::exists(p)) detail::dangling(where, "no such document file " + p.string());
    return load_document(p);
  }
  detail::as_object(j, where);
  return {j, base_dir};
}

// ---------------------------------------------------------------------------
// Posets and lattices
// ---------------------------------------------------------------------------

inline FinitePoset poset_from_json(const Json& j, const std::string& type = "poset") {
  detail::expect_type(j, type, type);
  detail::only_keys(j, {"type", "elements", "leq"}, type);
  auto elements = detail::strings(detail::field(j, "elements", type), type + ".elements");
  std::vector<std::pair<std::string, std::string>> leq;
  if (j.contains("leq")) {
    const std::set<std::string> known(elements.begin(), elements.end());
    const auto pairs = detail::tuples(j["leq"], 2, type + ".leq");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (const auto& n : pairs[i])
        if (!known.count(n)) detail::dangling(type + ".leq[" + std::to_string(i) + "]", "unknown element \"" + n + "\"");
      leq.push_back({pairs[i][0], pairs[i][1]});
    }
  }
  return FinitePoset(std::move(elements), std::move(leq));
}

inline Json poset_to_json(const FinitePoset& p, const std::string& type = "poset") {
  std::vector<std::vector<std::string>> leq;
  for (const auto& [lo, hi] : p.covers()) leq.push_back({p.name(lo), p.name(hi)});
  return {{"type", type}, {"elements", detail::sorted(p.elements())}, {"leq", detail::sorted(leq)}};
}

inline JoinSemilattice lattice_from_json(const Json& j) { return JoinSemilattice::from_poset(poset_from_json(j, "lattice")); }

inline Json lattice_to_json(const JoinSemilattice& L) { return poset_to_json(L.poset(), "lattice"); }

// ---------------------------------------------------------------------------
// Categorders
// ---------------------------------------------------------------------------

/// Builds the categorder as written. Identities `id:<object>` are implicit;
/// everything else, including an incomplete composition table, is left for
/// validate_categorder to judge.
inline Categorder categorder_from_json(const Json& j) {
  const std::string w = "categorder";
  detail::expect_type(j, "categorder", w);
  detail::only_keys(j, {"type", "objects", "morphisms", "composition", "order"}, w);
  CategorderBuilder b;
  const auto objects = detail::strings(detail::field(j, "objects", w), w + ".objects");
  std::set<std::string> object_names;
  for (const auto& o : objects) {
    object_names.insert(o);
    b.add_object(o);
  }
  std::set<std::string> morphism_names;
  for (const auto& o : objects) morphism_names.insert(identity_name(o));
  const auto& ms = detail::as_array(detail::field(j, "morphisms", w), w + ".morphisms");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string wi = w + ".morphisms[" + std::to_string(i) + "]";
    detail::as_object(ms[i], wi);
    detail::only_keys(ms[i], {"id", "dom", "cod"}, wi);
    const auto& id = detail::as_string(detail::field(ms[i], "id", wi), wi + ".id");
    const auto& dom = detail::as_string(detail::field(ms[i], "dom", wi), wi + ".dom");
    const auto& cod = detail::as_string(detail::field(ms[i], "cod", wi), wi + ".cod");
    if (!object_names.count(dom)) detail::dangling(wi, "morphism \"" + id + "\" has unknown dom \"" + dom + "\"");
    if (!object_names.count(cod)) detail::dangling(wi, "morphism \"" + id + "\" has unknown cod \"" + cod + "\"");
    morphism_names.insert(id);
    b.add_morphism(id, dom, cod);
  }
  auto require = [&](const std::string& n, const std::string& wi) {
    if (!morphism_names.count(n)) detail::dangling(wi, "unknown morphism \"" + n + "\"");
  };
  if (j.contains("composition")) {
    const auto triples = detail::tuples(j["composition"], 3, w + ".composition");
    for (std::size_t i = 0; i < triples.size(); ++i) {
      for (const auto& n : triples[i]) require(n, w + ".composition[" + std::to_string(i) + "]");
      b.set_composite(triples[i][0], triples[i][1], triples[i][2]);
    }
  }
  if (j.contains("order")) {
    const auto pairs = detail::tuples(j["order"], 2, w + ".order");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (const auto& n : pairs[i]) require(n, w + ".order[" + std::to_string(i) + "]");
      b.add_order(pairs[i][0], pairs[i][1]);
    }
  }
  return b.build();
}

inline Json categorder_to_json(const Categorder& c) {
  Json morphisms = Json::array();
  std::vector<std::pair<std::string, MorId>> named;
  for (MorId m = 0; m < c.morphism_count(); ++m)
    if (!detail::is_identity(c, m)) named.push_back({c.morphism_name(m), m});
  std::sort(named.begin(), named.end());
  for (const auto& [name, m] : named)
    morphisms.push_back({{"id", name}, {"dom", c.object_name(c.dom(m))}, {"cod", c.object_name(c.cod(m))}});
  std::vector<std::vector<std::string>> composition;
  for (const auto& [gname, g] : named)
    for (const auto& [fname, f] : named)
      if (c.cod(f) == c.dom(g)) {
        const MorId gf = c.compose(g, f);
        if (gf != kNone) composition.push_back({gname, fname, c.morphism_name(gf)});
      }
  Json j{{"type", "categorder"},
         {"objects", detail::sorted(c.objects())},
         {"morphisms", morphisms},
         {"composition", detail::sorted(composition)}};
  std::vector<std::vector<std::string>> order;
  for (const auto& [lo, hi] : c.order_covers()) order.push_back({c.morphism_name(lo), c.morphism_name(hi)});
  if (!order.empty()) j["order"] = detail::sorted(order);
  return j;
}

inline CategorderPtr categorder_ref(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  const Document d = resolve_reference(j, base_dir, where);
  return share(categorder_from_json(d.body));
}

// ---------------------------------------------------------------------------
// Functorders, Kleisli morphisms, pmv functors
// ---------------------------------------------------------------------------

namespace detail {

inline ObjId object_ref(const Categorder& c, const std::string& n, const std::string& where) {
  auto x = c.find_object(n);
  if (!x) dangling(where, "unknown object \"" + n + "\"");
  return *x;
}

inline MorId morphism_ref(const Categorder& c, const std::string& n, const std::string& where) {
  auto m = c.find_morphism(n);
  if (!m) dangling(where, "unknown morphism \"" + n + "\"");
  return *m;
}

inline ObjSet objset_ref(const Categorder& c, const Json& j, const std::string& where) {
  ObjSet out;
  for (const auto& n : strings(j, where)) out.push_back(object_ref(c, n, where));
  return canonical(out);
}

inline std::vector<MorId> morset_ref(const Categorder& c, const Json& j, const std::string& where) {
  std::vector<MorId> out;
  for (const auto& n : strings(j, where)) out.push_back(morphism_ref(c, n, where));
  sort_unique(out);
  return out;
}

inline std::vector<std::string> objset_names(const Categorder& c, const ObjSet& x) {
  std::vector<std::string> out;
  for (auto o : x) out.push_back(c.object_name(o));
  return sorted(out);
}

inline std::vector<std::string> morset_names(const Categorder& c, const std::vector<MorId>& s) {
  std::vector<std::string> out;
  for (auto m : s) out.push_back(c.morphism_name(m));
  return sorted(out);
}

}  // namespace detail

inline Functorder functorder_from_json(const Json& j, const std::filesystem::path& base_dir = {}) {
  const std::string w = "functorder";
  detail::expect_type(j, "functorder", w);
  detail::only_keys(j, {"type", "kleisli", "source", "target", "objects", "morphisms"}, w);
  if (document_kind(j) != "functorder") detail::schema_error(w, "a Kleisli document is not a functorder");
  auto s = categorder_ref(detail::field(j, "source", w), base_dir, w + ".source");
  auto t = categorder_ref(detail::field(j, "target", w), base_dir, w + ".target");
  Functorder F{s, t, std::vector<ObjId>(s->object_count(), kNone), std::vector<MorId>(s->morphism_count(), kNone)};
  const auto& objs = detail::as_object(detail::field(j, "objects", w), w + ".objects");
  for (auto it = objs.begin(); it != objs.end(); ++it) {
    const std::string wi = w + ".objects." + it.key();
    F.object_map[detail::object_ref(*s, it.key(), wi)] = detail::object_ref(*t, detail::as_string(*it, wi), wi);
  }
  if (j.contains("morphisms")) {
    const auto& mors = detail::as_object(j["morphisms"], w + ".morphisms");
    for (auto it = mors.begin(); it != mors.end(); ++it) {
      const std::string wi = w + ".morphisms." + it.key();
      F.morphism_map[detail::morphism_ref(*s, it.key(), wi)] =
          detail::morphism_ref(*t, detail::as_string(*it, wi), wi);
    }
  }
  for (ObjId x = 0; x < s->object_count(); ++x)
    if (F.object_map[x] == kNone) detail::schema_error(w + ".objects", "no image for object \"" + s->object_name(x) + "\"");
  for (MorId m = 0; m < s->morphism_count(); ++m) {
    if (F.morphism_map[m] != kNone) continue;
    if (!detail::is_identity(*s, m))
      detail::schema_error(w + ".morphisms", "no image for morphism \"" + s->morphism_name(m) + "\"");
    F.morphism_map[m] = t->identity(F.object_map[s->dom(m)]);
  }
  return F;
}

/// Identities sent to identities are left implicit.
inline Json functorder_to_json(const Functorder& F) {
  const Categorder& s = *F.source;
  const Categorder& t = *F.target;
  Json objects = Json::object(), morphisms = Json::object();
  for (ObjId x = 0; x < s.object_count(); ++x) objects[s.object_name(x)] = t.object_name(F.obj(x));
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    if (detail::is_identity(s, m) && F.mor(m) == t.identity(F.obj(s.dom(m)))) continue;
    morphisms[s.morphism_name(m)] = t.morphism_name(F.mor(m));
  }
  return {{"type", "functorder"},
          {"source", categorder_to_json(s)},
          {"target", categorder_to_json(t)},
          {"objects", objects},
          {"morphisms", morphisms}};
}

/// Morphism images are written as the full set when their tags are the
/// images of the source morphism's ends, and as {"dom","cod","set"} otherwise.
/// Sets are kept as written; validate_kleisli judges down-closure.
inline KleisliMorphism kleisli_from_json(const Json& j, const std::filesystem::path& base_dir = {}) {
  const std::string w = "kleisli";
  detail::expect_type(j, "functorder", w);
  detail::only_keys(j, {"type", "kleisli", "source", "target", "objects", "morphisms"}, w);
  if (document_kind(j) != "kleisli") detail::schema_error(w, "expected \"kleisli\": true");
  auto s = categorder_ref(detail::field(j, "source", w), base_dir, w + ".source");
  auto t = categorder_ref(detail::field(j, "target", w), base_dir, w + ".target");
  KleisliMorphism k{s, t, std::vector<ObjSet>(s->object_count()), std::vector<PCMorphism>(s->morphism_count())};
  std::vector<bool> seen_obj(s->object_count()), seen_mor(s->morphism_count());
  const auto& objs = detail::as_object(detail::field(j, "objects", w), w + ".objects");
  for (auto it = objs.begin(); it != objs.end(); ++it) {
    const std::string wi = w + ".objects." + it.key();
    const ObjId x = detail::object_ref(*s, it.key(), wi);
    k.object_map[x] = detail::objset_ref(*t, *it, wi);
    seen_obj[x] = true;
  }
  for (ObjId x = 0; x < s->object_count(); ++x)
    if (!seen_obj[x]) detail::schema_error(w + ".objects", "no image for object \"" + s->object_name(x) + "\"");
  if (j.contains("morphisms")) {
    const auto& mors = detail::as_object(j["morphisms"], w + ".morphisms");
    for (auto it = mors.begin(); it != mors.end(); ++it) {
      const std::string wi = w + ".morphisms." + it.key();
      const MorId m = detail::morphism_ref(*s, it.key(), wi);
      PCMorphism img;
      if (it->is_object()) {
        detail::only_keys(*it, {"dom", "cod", "set"}, wi);
        img.dom_tag = detail::objset_ref(*t, detail::field(*it, "dom", wi), wi + ".dom");
        img.cod_tag = detail::objset_ref(*t, detail::field(*it, "cod", wi), wi + ".cod");
        img.mor_set = detail::morset_ref(*t, detail::field(*it, "set", wi), wi + ".set");
      } else {
        img.dom_tag = k.object_map[s->dom(m)];
        img.cod_tag = k.object_map[s->cod(m)];
        img.mor_set = detail::morset_ref(*t, *it, wi);
      }
      k.morphism_map[m] = std::move(img);
      seen_mor[m] = true;
    }
  }
  for (MorId m = 0; m < s->morphism_count(); ++m) {
    if (seen_mor[m]) continue;
    if (!detail::is_identity(*s, m))
      detail::schema_error(w + ".morphisms", "no image for morphism \"" + s->morphism_name(m) + "\"");
    k.morphism_map[m] = pc_identity(*t, k.object_map[s->dom(m)]);
  }
  return k;
}

inline Json kleisli_to_json(const KleisliMorphism& k) {
  const Categorder& s = *k.source;
  const Categorder& t = *k.target;
  Json objects = Json::object(), morphisms = Json::object();
  for (ObjId x = 0; x < s.object_count(); ++x) objects[s.object_name(x)] = detail::objset_names(t, k.obj(x));
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    const PCMorphism& img = k.mor(m);
    const ObjSet& d = k.obj(s.dom(m));
    const ObjSet& c = k.obj(s.cod(m));
    if (detail::is_identity(s, m) && img == pc_identity(t, d)) continue;
    const auto set = detail::morset_names(t, img.mor_set);
    if (img.dom_tag == d && img.cod_tag == c)
      morphisms[s.morphism_name(m)] = set;
    else
      morphisms[s.morphism_name(m)] = {{"dom", detail::objset_names(t, img.dom_tag)},
                                       {"cod", detail::objset_names(t, img.cod_tag)},
                                       {"set", set}};
  }
  return {{"type", "functorder"},
          {"kleisli", true},
          {"source", categorder_to_json(s)},
          {"target", categorder_to_json(t)},
          {"objects", objects},
          {"morphisms", morphisms}};
}

/// Both relations are listed in full, identities included.
inline PmvFunctor pmv_from_json(const Json& j, const std::filesystem::path& base_dir = {}) {
  const std::string w = "pmv";
  detail::expect_type(j, "pmv", w);
  detail::only_keys(j, {"type", "source", "target", "objects", "morphisms"}, w);
  auto s = categorder_ref(detail::field(j, "source", w), base_dir, w + ".source");
  auto t = categorder_ref(detail::field(j, "target", w), base_dir, w + ".target");
  PmvFunctor F{s, t, std::vector<std::vector<ObjId>>(s->object_count()),
               std::vector<std::vector<MorId>>(s->morphism_count())};
  const auto objs = detail::tuples(detail::field(j, "objects", w), 2, w + ".objects");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::string wi = w + ".objects[" + std::to_string(i) + "]";
    F.objects[detail::object_ref(*s, objs[i][0], wi)].push_back(detail::object_ref(*t, objs[i][1], wi));
  }
  const auto mors = detail::tuples(detail::field(j, "morphisms", w), 2, w + ".morphisms");
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const std::string wi = w + ".morphisms[" + std::to_string(i) + "]";
    F.morphisms[detail::morphism_ref(*s, mors[i][0], wi)].push_back(detail::morphism_ref(*t, mors[i][1], wi));
  }
  for (auto& v : F.objects) sort_unique(v);
  for (auto& v : F.morphisms) sort_unique(v);
  return F;
}

inline Json pmv_to_json(const PmvFunctor& F) {
  const Categorder& s = *F.source;
  const Categorder& t = *F.target;
  std::vector<std::vector<std::string>> objects, morphisms;
  for (ObjId x = 0; x < s.object_count(); ++x)
    for (auto y : F.objects.at(x)) objects.push_back({s.object_name(x), t.object_name(y)});
  for (MorId m = 0; m < s.morphism_count(); ++m)
    for (auto d : F.morphisms.at(m)) morphisms.push_back({s.morphism_name(m), t.morphism_name(d)});
  return {{"type", "pmv"},
          {"source", categorder_to_json(s)},
          {"target", categorder_to_json(t)},
          {"objects", detail::sorted(objects)},
          {"morphisms", detail::sorted(morphisms)}};
}

/// Reads a document of any kind and writes it back in canonical form.
inline Json canonicalize(const Document& d) {
  const std::string kind = document_kind(d.body);
  if (kind == "poset") return poset_to_json(poset_from_json(d.body));
  if (kind == "lattice") return poset_to_json(poset_from_json(d.body, "lattice"), "lattice");
  if (kind == "categorder") return categorder_to_json(categorder_from_json(d.body));
  if (kind == "functorder") return functorder_to_json(functorder_from_json(d.body, d.base_dir));
  if (kind == "kleisli") return kleisli_to_json(kleisli_from_json(d.body, d.base_dir));
  return pmv_to_json(pmv_from_json(d.body, d.base_dir));
}

// ---------------------------------------------------------------------------
// Generated and bundled documents
// ---------------------------------------------------------------------------

/// A random document of kind spec.kind. Maps get their own source and target,
/// drawn from the same seeded stream; pmv functors use plain categories.
inline Json gen_document(const GenSpec& spec) {
  Rng rng(spec.seed);
  if (spec.kind == "poset") return poset_to_json(gen_poset(spec, rng));
  if (spec.kind == "category") return categorder_to_json(gen_category(spec, rng));
  if (spec.kind == "categorder") return categorder_to_json(gen_categorder(spec, rng));
  const bool plain = spec.kind == "pmv";
  auto make = [&] { return share(plain ? gen_category(spec, rng) : gen_categorder(spec, rng)); };
  auto a = make();
  auto b = make();
  if (spec.kind == "functorder") return functorder_to_json(gen_functorder(a, b, rng));
  if (spec.kind == "kleisli") return kleisli_to_json(gen_kleisli(a, b, rng));
  if (spec.kind == "pmv") return pmv_to_json(gen_pmv(a, b, rng));
  throw DocumentError(DocumentError::Kind::schema, "gen: unknown kind \"" + spec.kind + "\"");
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"TERM", "WALK",  "ORDMON", "CHAIN3", "KSRC",
                                              "KTGT", "K",     "CUBE8",  "CHAIN2", "ONE"};
  return names;
}

/// The bundled fixture as a canonical document.
inline Json fixture_document(const std::string& name) {
  if (name == "K") return functorder_to_json(fixtures::k());
  if (name == "CUBE8") return lattice_to_json(JoinSemilattice::from_poset(fixtures::cube8()));
  if (name == "CHAIN2") return lattice_to_json(JoinSemilattice::from_poset(fixtures::chain2()));
  if (name == "ONE") return lattice_to_json(JoinSemilattice::from_poset(fixtures::one()));
  return categorder_to_json(fixtures::categorder(name));
}

}  // namespace pcat
