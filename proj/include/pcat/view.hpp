#pragma once

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "util.hpp"

namespace pcat {

/// What law checkers need from a categorder, whether it is materialized or a
/// lazily evaluated power construction. compose(g, f) is only called on
/// composable pairs.
template <class V>
concept CategorderView = requires(const V& v, const typename V::Object& x, const typename V::Morphism& m, Rng& rng,
                                  const SizeGuard& guard) {
  { v.dom(m) } -> std::convertible_to<typename V::Object>;
  { v.cod(m) } -> std::convertible_to<typename V::Object>;
  { v.identity(x) } -> std::convertible_to<typename V::Morphism>;
  { v.compose(m, m) } -> std::convertible_to<typename V::Morphism>;
  { v.leq(m, m) } -> std::convertible_to<bool>;
  { v.object_name(x) } -> std::convertible_to<std::string>;
  { v.morphism_name(m) } -> std::convertible_to<std::string>;
  { v.enumerate_objects(guard) } -> std::convertible_to<std::vector<typename V::Object>>;
  { v.enumerate_hom(x, x, guard) } -> std::convertible_to<std::vector<typename V::Morphism>>;
  { v.object_count_hint() } -> std::convertible_to<std::uint64_t>;
  { v.sample_object(rng) } -> std::convertible_to<typename V::Object>;
  { v.sample_in_hom(x, x, rng) } -> std::convertible_to<std::optional<typename V::Morphism>>;
  { v.sample_morphism(rng) } -> std::convertible_to<std::optional<typename V::Morphism>>;
  { v.sample_below(m, rng) } -> std::convertible_to<typename V::Morphism>;
};

/// An object map and a morphism map between two views. Nothing about it is
/// assumed; validate_mapping decides whether it is a functorder.
template <class V, class W>
struct Mapping {
  std::function<typename W::Object(const typename V::Object&)> object;
  std::function<typename W::Morphism(const typename V::Morphism&)> morphism;
};

template <class U, class V, class W>
Mapping<U, W> then(Mapping<U, V> first, Mapping<V, W> second) {
  return {[f = first.object, g = second.object](const typename U::Object& x) { return g(f(x)); },
          [f = first.morphism, g = second.morphism](const typename U::Morphism& m) { return g(f(m)); }};
}

/// The elements a law is checked on. `composable` holds pairs (f, g) with
/// cod f = dom g; `ordered` holds pairs (a, b) with a <= b.
template <class V>
struct ElementSample {
  std::vector<typename V::Object> objects;
  std::vector<typename V::Morphism> morphisms;
  std::vector<std::pair<typename V::Morphism, typename V::Morphism>> composable;
  std::vector<std::pair<typename V::Morphism, typename V::Morphism>> ordered;
  std::string coverage;
};

/// Every object, morphism and composable pair; for the order, the covering
/// pairs of each hom-set, which is enough for monotonicity into a partial order.
template <CategorderView V>
ElementSample<V> full_sample(const V& v, const SizeGuard& guard = {}) {
  ElementSample<V> s;
  s.objects = v.enumerate_objects(guard);
  std::vector<std::vector<std::vector<typename V::Morphism>>> homs(s.objects.size());
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    homs[i].resize(s.objects.size());
    for (std::size_t j = 0; j < s.objects.size(); ++j) {
      homs[i][j] = v.enumerate_hom(s.objects[i], s.objects[j], guard);
      guard.require_morphisms(s.morphisms.size() + homs[i][j].size(), "full sample");
      for (const auto& m : homs[i][j]) s.morphisms.push_back(m);
      const auto& h = homs[i][j];
      for (std::size_t a = 0; a < h.size(); ++a)
        for (std::size_t b = 0; b < h.size(); ++b) {
          if (a == b || !v.leq(h[a], h[b])) continue;
          bool cover = true;
          for (std::size_t c = 0; c < h.size() && cover; ++c)
            if (c != a && c != b && v.leq(h[a], h[c]) && v.leq(h[c], h[b])) cover = false;
          if (cover) s.ordered.push_back({h[a], h[b]});
        }
    }
  }
  for (std::size_t j = 0; j < s.objects.size(); ++j) {
    std::uint64_t in = 0, out = 0;
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
      in += homs[i][j].size();
      out += homs[j][i].size();
    }
    pairs = sat_add(pairs, sat_mul(in, out));
  }
  guard.require_composites(pairs, "full sample");
  for (std::size_t y = 0; y < s.objects.size(); ++y)
    for (std::size_t x = 0; x < s.objects.size(); ++x)
      for (const auto& f : homs[x][y])
        for (std::size_t z = 0; z < s.objects.size(); ++z)
          for (const auto& g : homs[y][z]) s.composable.push_back({f, g});
  s.coverage = "exhaustive";
  return s;
}

/// `n` seeded draws of each kind.
template <CategorderView V>
ElementSample<V> random_sample(const V& v, Rng& rng, std::size_t n) {
  ElementSample<V> s;
  for (std::size_t i = 0; i < n; ++i) s.objects.push_back(v.sample_object(rng));
  for (std::size_t i = 0; i < n; ++i)
    if (auto m = v.sample_morphism(rng)) s.morphisms.push_back(*m);
  for (std::size_t i = 0; i < n; ++i) {
    auto f = v.sample_morphism(rng);
    if (!f) break;
    if (auto g = v.sample_in_hom(v.cod(*f), v.sample_object(rng), rng)) s.composable.push_back({*f, *g});
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto b = v.sample_morphism(rng);
    if (!b) break;
    s.ordered.push_back({v.sample_below(*b, rng), *b});
  }
  s.coverage = "sampled, " + std::to_string(n) + " draws per kind";
  return s;
}

template <class V>
void note_coverage(Report& r, const ElementSample<V>& s) {
  for (auto& c : r.checks) c.notes.push_back(s.coverage);
}

/// Checks the functorder conditions of a mapping on the given elements:
/// typing, monotonicity and lax preservation of identities and composites.
template <CategorderView V, CategorderView W>
ValidationReport validate_mapping(const V& v, const W& w, const Mapping<V, W>& F, const ElementSample<V>& s,
                                  const std::string& subject = "functorder") {
  ValidationReport r{subject};
  auto& typing = r.check("typing");
  auto& mono = r.check("monotone");
  auto& ident = r.check("subfunctorial_identity");
  auto& comp = r.check("subfunctorial_composition");

  auto typed = [&](const typename V::Morphism& m) {
    const auto fm = F.morphism(m);
    return w.dom(fm) == F.object(v.dom(m)) && w.cod(fm) == F.object(v.cod(m));
  };

  for (const auto& m : s.morphisms) {
    typing.expect(typed(m), [&] {
      const auto fm = F.morphism(m);
      return std::pair{std::string("image morphism has the wrong domain or codomain"),
                       std::vector<std::string>{v.morphism_name(m), w.morphism_name(fm)}};
    });
  }
  for (const auto& [a, b] : s.ordered) {
    const auto fa = F.morphism(a), fb = F.morphism(b);
    mono.expect(w.leq(fa, fb), [&] {
      return std::pair{std::string("a <= b but F a !<= F b"),
                       std::vector<std::string>{v.morphism_name(a), v.morphism_name(b), w.morphism_name(fa),
                                                w.morphism_name(fb)}};
    });
  }
  for (const auto& x : s.objects) {
    const auto fid = F.morphism(v.identity(x));
    const auto idf = w.identity(F.object(x));
    ident.expect(w.leq(fid, idf), [&] {
      return std::pair{std::string("F(id) !<= id(F x)"),
                       std::vector<std::string>{v.object_name(x), w.morphism_name(fid), w.morphism_name(idf)}};
    });
  }
  for (const auto& [f, g] : s.composable) {
    if (!typed(f) || !typed(g)) continue;
    const auto lhs = F.morphism(v.compose(g, f));
    const auto rhs = w.compose(F.morphism(g), F.morphism(f));
    comp.expect(w.leq(lhs, rhs), [&] {
      return std::pair{std::string("F(g.f) !<= F g . F f"),
                       std::vector<std::string>{v.morphism_name(g), v.morphism_name(f), w.morphism_name(lhs),
                                                w.morphism_name(rhs)}};
    });
  }
  note_coverage(r, s);
  return r;
}

/// A composable pair (f, g) or an object at which F fails to preserve
/// composition or identities strictly.
struct StrictnessWitness {
  std::string kind;  // "identity" or "composition"
  std::vector<std::string> items;
};

template <CategorderView V, CategorderView W>
std::optional<StrictnessWitness> strictness_violation(const V& v, const W& w, const Mapping<V, W>& F,
                                                      const ElementSample<V>& s) {
  for (const auto& x : s.objects) {
    const auto fid = F.morphism(v.identity(x));
    const auto idf = w.identity(F.object(x));
    if (!(fid == idf)) return StrictnessWitness{"identity", {v.object_name(x), w.morphism_name(fid), w.morphism_name(idf)}};
  }
  for (const auto& [f, g] : s.composable) {
    const auto lhs = F.morphism(v.compose(g, f));
    const auto ff = F.morphism(f), fg = F.morphism(g);
    if (!(w.cod(ff) == w.dom(fg))) return StrictnessWitness{"composition", {v.morphism_name(g), v.morphism_name(f)}};
    const auto rhs = w.compose(fg, ff);
    if (!(lhs == rhs))
      return StrictnessWitness{"composition",
                               {v.morphism_name(g), v.morphism_name(f), w.morphism_name(lhs), w.morphism_name(rhs)}};
  }
  return std::nullopt;
}

}  // namespace pcat
