#pragma once

#include <string>
#include <vector>

#include "categorder.hpp"
#include "functorder.hpp"
#include "ordcore.hpp"

namespace pcat::fixtures {

/// One object, identity only.
inline Categorder term() {
  CategorderBuilder b;
  b.add_object("*");
  return b.build();
}

/// A -> B via f.
inline Categorder walk() {
  CategorderBuilder b;
  b.add_object("A");
  b.add_object("B");
  b.add_morphism("f", "A", "B");
  return b.build();
}

/// One object x with an idempotent e below the identity.
inline Categorder ordmon() {
  CategorderBuilder b;
  b.add_object("x");
  b.add_morphism("e", "x", "x");
  b.set_composite("e", "e", "e");
  b.add_order("e", "id:x");
  return b.build();
}

/// The poset a <= b <= c as a category.
inline Categorder chain3() {
  CategorderBuilder b;
  for (const char* x : {"a", "b", "c"}) b.add_object(x);
  b.add_morphism("ab", "a", "b");
  b.add_morphism("bc", "b", "c");
  b.add_morphism("ac", "a", "c");
  b.set_composite("bc", "ab", "ac");
  return b.build();
}

/// Two disjoint arrows star -> black and white -> diamond.
inline Categorder ksrc() {
  CategorderBuilder b;
  for (const char* x : {"star", "black", "white", "diamond"}) b.add_object(x);
  b.add_morphism("f", "star", "black");
  b.add_morphism("g", "white", "diamond");
  return b.build();
}

/// star -p-> half -q-> diamond with the composite qp.
inline Categorder ktgt() {
  CategorderBuilder b;
  for (const char* x : {"star", "half", "diamond"}) b.add_object(x);
  b.add_morphism("p", "star", "half");
  b.add_morphism("q", "half", "diamond");
  b.add_morphism("qp", "star", "diamond");
  b.set_composite("q", "p", "qp");
  return b.build();
}

/// Glues black and white together; a functor whose image misses q . p.
inline Functorder k(const CategorderPtr& src, const CategorderPtr& tgt) {
  return make_functorder(src, tgt, {{"star", "star"}, {"black", "half"}, {"white", "half"}, {"diamond", "diamond"}},
                         {{"f", "p"}, {"g", "q"}});
}

inline Functorder k() { return k(share(ksrc()), share(ktgt())); }

/// Subsets of {1,2,3} under inclusion.
inline FinitePoset cube8() {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> leq;
  auto name = [](unsigned mask) {
    std::vector<std::string> parts;
    for (unsigned i = 0; i < 3; ++i)
      if ((mask >> i) & 1U) parts.push_back(std::to_string(i + 1));
    return braces(parts);
  };
  for (unsigned m = 0; m < 8; ++m) names.push_back(name(m));
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned i = 0; i < 3; ++i)
      if (!((a >> i) & 1U)) leq.push_back({name(a), name(a | (1U << i))});
  return FinitePoset(names, leq);
}

inline FinitePoset chain2() { return FinitePoset({"bot", "top"}, {{"bot", "top"}}); }

inline FinitePoset one() { return FinitePoset({"*"}, {}); }

inline const std::vector<std::string>& categorder_names() {
  static const std::vector<std::string> names{"TERM", "WALK", "ORDMON", "CHAIN3", "KSRC", "KTGT"};
  return names;
}

/// A bundled categorder by name; throws for unknown names.
inline Categorder categorder(const std::string& name) {
  if (name == "TERM") return term();
  if (name == "WALK") return walk();
  if (name == "ORDMON") return ordmon();
  if (name == "CHAIN3") return chain3();
  if (name == "KSRC") return ksrc();
  if (name == "KTGT") return ktgt();
  throw Error("unknown fixture '" + name + "'");
}

}  // namespace pcat::fixtures
