#pragma once

#include <string>

#include "categorder.hpp"
#include "document.hpp"
#include "functorder.hpp"

namespace pcat {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

// Objects as nodes, non-identity morphisms as labelled edges. Node ids get
// `prefix` so that two categorders can share one graph.
inline void dot_body(std::string& out, const Categorder& c, const std::string& prefix, const std::string& indent) {
  for (ObjId x = 0; x < c.object_count(); ++x)
    out += indent + dot_quote(prefix + c.object_name(x)) + " [label=" + dot_quote(c.object_name(x)) + "];\n";
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    if (is_identity(c, m)) continue;
    out += indent + dot_quote(prefix + c.object_name(c.dom(m))) + " -> " + dot_quote(prefix + c.object_name(c.cod(m))) +
           " [label=" + dot_quote(c.morphism_name(m)) + "];\n";
  }
}

}  // namespace detail

inline std::string emit_dot(const Categorder& c, const std::string& name = "categorder") {
  std::string out = "digraph " + detail::dot_quote(name) + " {\n";
  detail::dot_body(out, c, "", "  ");
  return out + "}\n";
}

/// Source and target as two clusters; dashed edges show the object map.
inline std::string emit_dot(const Functorder& F, const std::string& name = "functorder") {
  std::string out = "digraph " + detail::dot_quote(name) + " {\n  compound=true;\n";
  out += "  subgraph cluster_source {\n    label=\"source\";\n";
  detail::dot_body(out, *F.source, "s:", "    ");
  out += "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
  detail::dot_body(out, *F.target, "t:", "    ");
  out += "  }\n";
  for (ObjId x = 0; x < F.source->object_count(); ++x)
    out += "  " + detail::dot_quote("s:" + F.source->object_name(x)) + " -> " +
           detail::dot_quote("t:" + F.target->object_name(F.obj(x))) + " [style=dashed, arrowhead=open];\n";
  return out + "}\n";
}

inline std::string emit_dot(const Document& d) {
  const std::string kind = document_kind(d.body);
  if (kind == "categorder") return emit_dot(categorder_from_json(d.body));
  if (kind == "functorder") return emit_dot(functorder_from_json(d.body, d.base_dir));
  throw DocumentError(DocumentError::Kind::schema, "dot: cannot draw a " + kind + " document");
}

}  // namespace pcat
