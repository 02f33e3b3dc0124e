#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "util.hpp"

namespace pcat {

// ---------------------------------------------------------------------------
// Down-set enumeration over an abstract finite order
// ---------------------------------------------------------------------------

/// Orders 0..n-1 so that every element follows everything strictly below it.
/// `below[i]` holds all x with x <= i. Only meaningful for partial orders.
inline std::vector<std::size_t> linear_extension(const std::vector<Bitset>& below) {
  std::vector<std::size_t> order(below.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> weight(below.size());
  for (std::size_t i = 0; i < below.size(); ++i) weight[i] = below[i].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });
  return order;
}

/// Calls `visit(const Bitset&)` once per down-closed subset. Stops early and
/// returns false as soon as more than `limit` sets have been produced.
template <class Visit>
bool for_each_down_set(const std::vector<Bitset>& below, Visit&& visit,
                       std::uint64_t limit = kSaturated) {
  const std::size_t n = below.size();
  const auto order = linear_extension(below);
  Bitset current(n);
  std::uint64_t produced = 0;
  bool within = true;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (!within) return;
    if (k == n) {
      if (++produced > limit) {
        within = false;
        return;
      }
      visit(static_cast<const Bitset&>(current));
      return;
    }
    const std::size_t x = order[k];
    rec(k + 1);
    Bitset strictly = below[x];
    strictly.reset(x);
    if (strictly.subset_of(current)) {
      current.set(x);
      rec(k + 1);
      current.reset(x);
    }
  };
  rec(0);
  return within;
}

/// Number of down-closed subsets, saturating at `cap + 1`.
inline std::uint64_t count_down_sets(const std::vector<Bitset>& below, std::uint64_t cap) {
  std::uint64_t n = 0;
  const bool within = for_each_down_set(below, [&](const Bitset&) { ++n; }, cap);
  return within ? n : sat_add(cap, 1);
}

/// Down-sets of a finite order in canonical order: by size, then by members.
inline std::vector<Bitset> enumerate_down_sets(const std::vector<Bitset>& below, const SizeGuard& guard,
                                               const std::string& what) {
  std::vector<Bitset> out;
  const bool ok = for_each_down_set(below, [&](const Bitset& s) { out.push_back(s); }, guard.max_morphisms);
  if (!ok) throw SizeGuardExceeded(what, sat_add(guard.max_morphisms, 1), guard.max_morphisms);
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.members() < b.members();
  });
  return out;
}

/// Covering pairs (a, b) with a < b and nothing strictly between, for a
/// closed relation given as `below[i]` = {x | x <= i}. Sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const std::vector<Bitset>& below) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < below.size(); ++b) {
    Bitset strict = below[b];
    strict.reset(b);
    Bitset covered = strict;
    strict.for_each([&](std::size_t c) {
      Bitset under = below[c];
      under.reset(c);
      under.for_each([&](std::size_t x) { covered.reset(x); });
    });
    covered.for_each([&](std::size_t a) {
      if (!below[a].test(b)) out.push_back({a, b});
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// FinitePoset
// ---------------------------------------------------------------------------

/// A finite partial order on named elements. The order is given by generator
/// pairs; its reflexive-transitive closure is computed on construction.
/// Construction never rejects a cyclic relation: validate_poset reports it.
class FinitePoset {
 public:
  FinitePoset() = default;

  FinitePoset(std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> leq)
      : names_(std::move(elements)), generators_(std::move(leq)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second) duplicates_.push_back(names_[i]);
    }
    below_.assign(names_.size(), Bitset(names_.size()));
    for (std::size_t i = 0; i < names_.size(); ++i) below_[i].set(i);
    for (const auto& [lo, hi] : generators_) {
      auto a = index_of(lo);
      auto b = index_of(hi);
      if (!a || !b) {
        unknown_.push_back({lo, hi});
        continue;
      }
      below_[*b].set(*a);
    }
    close();
  }

  /// Builds a poset from an already reflexive and transitive relation.
  static FinitePoset from_relation(std::vector<std::string> elements, std::vector<Bitset> below) {
    FinitePoset p;
    p.names_ = std::move(elements);
    for (std::size_t i = 0; i < p.names_.size(); ++i) {
      if (!p.index_.emplace(p.names_[i], i).second) p.duplicates_.push_back(p.names_[i]);
    }
    p.below_ = std::move(below);
    for (const auto& [lo, hi] : p.covers()) p.generators_.push_back({p.names_[lo], p.names_[hi]});
    return p;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& elements() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view n) const {
    auto it = index_.find(std::string(n));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t require(std::string_view n) const {
    auto i = index_of(n);
    if (!i) throw Error("unknown poset element '" + std::string(n) + "'");
    return *i;
  }

  bool leq(std::size_t a, std::size_t b) const { return below_[b].test(a); }

  /// All x with x <= a.
  const Bitset& down(std::size_t a) const { return below_[a]; }
  const std::vector<Bitset>& down_sets_of_elements() const noexcept { return below_; }

  const std::vector<std::pair<std::string, std::string>>& generators() const noexcept { return generators_; }
  const std::vector<std::pair<std::string, std::string>>& unknown_pairs() const noexcept { return unknown_; }
  const std::vector<std::string>& duplicate_elements() const noexcept { return duplicates_; }

  /// Covering pairs (Hasse diagram) of the closed relation.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const { return covering_pairs(below_); }

  /// Same element set and same order, irrespective of element positions.
  friend bool operator==(const FinitePoset& x, const FinitePoset& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto j = y.index_of(x.names_[i]);
      if (!j) return false;
      for (std::size_t k = 0; k < x.size(); ++k) {
        auto l = y.index_of(x.names_[k]);
        if (x.leq(i, k) != y.leq(*j, *l)) return false;
      }
    }
    return true;
  }

 private:
  void close() {
    const std::size_t n = names_.size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (below_[i].test(k)) below_[i] |= below_[k];
  }

  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::pair<std::string, std::string>> generators_;
  std::vector<std::pair<std::string, std::string>> unknown_;
  std::vector<std::string> duplicates_;
  std::vector<Bitset> below_;
};

/// A down-closed subset of some FinitePoset, stored as a membership bitset
/// over the poset's element indices.
struct DownSet {
  Bitset members;

  friend bool operator==(const DownSet&, const DownSet&) = default;
  friend auto operator<=>(const DownSet&, const DownSet&) = default;
};

inline std::vector<std::string> member_names(const FinitePoset& p, const Bitset& s) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(p.name(i)); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string set_name(const FinitePoset& p, const Bitset& s) { return braces(member_names(p, s)); }

inline ValidationReport validate_poset(const FinitePoset& p) {
  ValidationReport r{"poset"};
  auto& uniq = r.check("unique_elements");
  uniq.instances = p.size();
  for (const auto& d : p.duplicate_elements()) uniq.fail("duplicate element id", {d});

  auto& known = r.check("known_elements");
  known.instances = p.generators().size();
  for (const auto& [lo, hi] : p.unknown_pairs()) known.fail("order pair mentions an unknown element", {lo, hi});

  auto& refl = r.check("reflexivity");
  refl.instances = p.size();
  refl.notes.push_back("reflexive pairs are added by closure");

  auto& anti = r.check("antisymmetry");
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      anti.expect(!(p.leq(a, b) && p.leq(b, a)), [&] {
        return std::pair{std::string("distinct elements below each other"),
                         std::vector<std::string>{p.name(a), p.name(b)}};
      });
    }
  }

  auto& trans = r.check("transitivity");
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b))
        for (std::size_t c = 0; c < p.size(); ++c)
          if (p.leq(b, c))
            trans.expect(p.leq(a, c), [&] {
              return std::pair{std::string("a<=b<=c but not a<=c"),
                               std::vector<std::string>{p.name(a), p.name(b), p.name(c)}};
            });
  return r;
}

inline bool is_down_closed(const FinitePoset& p, const Bitset& s) {
  bool ok = true;
  s.for_each([&](std::size_t y) {
    if (!p.down(y).subset_of(s)) ok = false;
  });
  return ok;
}

inline DownSet down_closure(const FinitePoset& p, const Bitset& a) {
  Bitset out(p.size());
  a.for_each([&](std::size_t y) { out |= p.down(y); });
  return {out};
}

inline DownSet down_closure(const FinitePoset& p, const std::vector<std::string>& a) {
  Bitset s(p.size());
  for (const auto& n : a) s.set(p.require(n));
  return down_closure(p, s);
}

/// All down-closed subsets of `p`, in canonical order.
inline std::vector<DownSet> down_sets(const FinitePoset& p, const SizeGuard& guard = {}) {
  std::vector<DownSet> out;
  for (auto& b : enumerate_down_sets(p.down_sets_of_elements(), guard, "down-sets of a poset"))
    out.push_back({std::move(b)});
  return out;
}

/// The ordered set of down-sets ordered by inclusion. Element i of the
/// result is down_sets(p)[i], named by its sorted members.
inline FinitePoset p0_ord(const FinitePoset& p, const SizeGuard& guard = {}) {
  const auto sets = down_sets(p, guard);
  std::vector<std::string> names;
  names.reserve(sets.size());
  for (const auto& s : sets) names.push_back(set_name(p, s.members));
  std::vector<Bitset> below(sets.size(), Bitset(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (sets[j].members.subset_of(sets[i].members)) below[i].set(j);
  return FinitePoset::from_relation(std::move(names), std::move(below));
}

inline DownSet ord_eta(const FinitePoset& p, std::size_t s) { return {p.down(s)}; }

inline DownSet ord_eta(const FinitePoset& p, std::string_view s) { return ord_eta(p, p.require(s)); }

inline DownSet ord_mu(const FinitePoset& p, const std::vector<DownSet>& family) {
  Bitset out(p.size());
  for (const auto& member : family) {
    if (!is_down_closed(p, member.members))
      throw Error("ord_mu: family member " + set_name(p, member.members) + " is not down-closed");
    out |= member.members;
  }
  return {out};
}

// ---------------------------------------------------------------------------
// Monad laws of P0 on ordered sets
// ---------------------------------------------------------------------------

enum class OrdFault { none, mu_drop_member };

namespace detail {

// Union of the chosen members of `family`, optionally omitting the last one.
inline Bitset union_of(const std::vector<Bitset>& carrier, const Bitset& family, std::size_t width, OrdFault fault) {
  Bitset out(width);
  auto members = family.members();
  if (fault == OrdFault::mu_drop_member && members.size() >= 2) members.pop_back();
  for (auto i : members) out |= carrier[i];
  return out;
}

inline std::vector<Bitset> inclusion_below(const std::vector<Bitset>& sets) {
  std::vector<Bitset> below(sets.size(), Bitset(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (sets[j].subset_of(sets[i])) below[i].set(j);
  return below;
}

}  // namespace detail

/// Checks the unit laws on P0(P) and associativity on P0^3(P) pointwise.
///
/// P0^3 is enumerated exhaustively when it has at most `guard.max_morphisms`
/// elements. Past that bound every element of P0^3 is a union of principal
/// down-sets, and both sides of associativity are unions of their values on
/// those generators; the check then covers the empty set, every principal
/// down-set and every down-set generated by two elements, and says so in
/// the report notes.
inline LawReport check_ord_monad_laws(const FinitePoset& p, const SizeGuard& guard = {},
                                      OrdFault fault = OrdFault::none) {
  LawReport r{"ord-monad"};
  const std::size_t n = p.size();

  std::vector<Bitset> l1;
  for (auto& d : down_sets(p, guard)) l1.push_back(d.members);
  const auto below1 = detail::inclusion_below(l1);
  const auto l2 = enumerate_down_sets(below1, guard, "P0^2 of a poset");
  const auto below2 = detail::inclusion_below(l2);

  auto mu1 = [&](const Bitset& fam) { return detail::union_of(l1, fam, n, fault); };
  auto mu2 = [&](const Bitset& fam) { return detail::union_of(l2, fam, l1.size(), fault); };
  auto find_l1 = [&](const Bitset& s) -> std::optional<std::size_t> {
    auto it = std::find(l1.begin(), l1.end(), s);
    if (it == l1.end()) return std::nullopt;
    return static_cast<std::size_t>(it - l1.begin());
  };
  auto name1 = [&](const Bitset& s) { return set_name(p, s); };
  auto name2 = [&](const Bitset& fam) {
    std::vector<std::string> parts;
    fam.for_each([&](std::size_t i) { parts.push_back(name1(l1[i])); });
    return braces(parts);
  };
  auto name3 = [&](const Bitset& fam) {
    std::vector<std::string> parts;
    fam.for_each([&](std::size_t i) { parts.push_back(name2(l2[i])); });
    return braces(parts);
  };

  auto& unit_left = r.check("unit_left: mu . eta_P0 = id");
  auto& unit_right = r.check("unit_right: mu . P0 eta = id");
  for (std::size_t a = 0; a < l1.size(); ++a) {
    // eta_{P0 P}(A) = down-closure of {A} in P0 P
    const Bitset eta_a = below1[a];
    const Bitset lhs = mu1(eta_a);
    unit_left.expect(lhs == l1[a], [&] {
      return std::pair{std::string("mu(eta(A)) != A"), std::vector<std::string>{name1(l1[a]), name1(lhs)}};
    });
    // P0 eta_P(A) = down-closure of {down(x) | x in A} in P0 P
    Bitset image(l1.size());
    l1[a].for_each([&](std::size_t x) {
      if (auto k = find_l1(p.down(x))) image |= below1[*k];
    });
    const Bitset rhs = mu1(image);
    unit_right.expect(rhs == l1[a], [&] {
      return std::pair{std::string("mu(P0 eta(A)) != A"), std::vector<std::string>{name1(l1[a]), name1(rhs)}};
    });
  }

  auto& assoc = r.check("associativity: mu . mu_P0 = mu . P0 mu");
  auto check_assoc = [&](const Bitset& x) {
    // left: flatten the outer two levels first
    const Bitset flat = mu2(x);
    const Bitset lhs = mu1(flat);
    // right: apply mu inside, then down-close in P0 P, then flatten
    Bitset inner(l1.size());
    x.for_each([&](std::size_t k) {
      if (auto idx = find_l1(mu1(l2[k]))) inner |= below1[*idx];
    });
    const Bitset rhs = mu1(inner);
    assoc.expect(lhs == rhs, [&] {
      return std::pair{std::string("associativity differs"),
                       std::vector<std::string>{name3(x), "mu.mu_P0 = " + name1(lhs), "mu.P0mu = " + name1(rhs)}};
    });
  };

  const std::uint64_t l3_count = count_down_sets(below2, guard.max_morphisms);
  if (l3_count <= guard.max_morphisms) {
    for_each_down_set(below2, check_assoc);
    assoc.notes.push_back("exhaustive over all " + std::to_string(assoc.instances) + " elements of P0^3");
  } else {
    // generated by at most two elements of P0^2
    check_assoc(Bitset(l2.size()));
    for (std::size_t i = 0; i < l2.size(); ++i) {
      check_assoc(below2[i]);
      for (std::size_t j = i + 1; j < l2.size(); ++j)
        if (!below2[j].test(i) && !below2[i].test(j)) check_assoc(below2[i] | below2[j]);
    }
    assoc.notes.push_back("P0^3 has more than " + std::to_string(guard.max_morphisms) +
                          " elements; checked the empty set and every down-set generated by one or two elements (" +
                          std::to_string(assoc.instances) + " instances)");
  }
  return r;
}

}  // namespace pcat
