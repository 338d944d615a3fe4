#pragma once

#include <gengraph/group.hpp>

#include <algorithm>
#include <cstddef>
#include <unordered_set>
#include <vector>

namespace gengraph {

inline bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  for (Element h : n.elements())
    for (Element x = 0; x < g.order(); ++x)
      if (!n.contains(conjugate(g, h, x))) return false;
  return true;
}

inline bool is_abelian_subgroup(const FiniteGroup& g, const Subgroup& h) {
  const auto elems = h.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  return true;
}

/// Least normal subgroup containing the seeds: the subgroup generated by
/// every conjugate of every seed.
inline Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> seeds) {
  ElementSet conjugates(g.order());
  for (Element s : seeds)
    for (Element x = 0; x < g.order(); ++x) conjugates.set(conjugate(g, s, x));
  std::vector<Element> gens;
  for_each_member(conjugates, [&](std::size_t i) { gens.push_back(static_cast<Element>(i)); });
  return generated_closure(g, gens);
}

inline Subgroup normal_closure(const FiniteGroup& g, std::initializer_list<Element> seeds) {
  return normal_closure(g, std::span<const Element>(seeds.begin(), seeds.size()));
}

/// Inclusion-minimal members of {normal_closure({x}) : x != 1}. Every minimal
/// normal subgroup is the normal closure of any of its nontrivial elements,
/// so nothing is missed. Sorted by size, then by lexicographic mask.
inline std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  if (g.order() == 1) throw Error(ErrorCode::TrivialGroup, "the trivial group has no minimal normal subgroups");
  std::vector<Subgroup> closures;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Element x = 1; x < g.order(); ++x) {
    auto c = normal_closure(g, {x});
    if (seen.insert(c.members()).second) closures.push_back(std::move(c));
  }
  std::vector<Subgroup> minimal;
  for (const auto& c : closures) {
    const bool has_smaller = std::any_of(closures.begin(), closures.end(), [&](const Subgroup& d) {
      return d.size() < c.size() && d.is_subset_of(c);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a.members(), b.members());
  });
  return minimal;
}

/// G/N together with the projection G -> G/N.
struct QuotientMap {
  FiniteGroup group;
  std::vector<Element> projection;  // element of G -> coset index in `group`

  /// Image of a subgroup of G under the projection.
  Subgroup image(const Subgroup& h) const {
    ElementSet members(group.order());
    for (Element x : h.elements()) members.set(projection[x]);
    return Subgroup(detail::trusted, std::move(members));
  }

  /// Full preimage of a subgroup of G/N.
  Subgroup preimage(const Subgroup& h) const {
    ElementSet members(projection.size());
    for (std::size_t x = 0; x < projection.size(); ++x)
      if (h.contains(projection[x])) members.set(x);
    return Subgroup(detail::trusted, std::move(members));
  }
};

/// Cosets are numbered in order of their least element, so the identity
/// coset is index 0.
inline QuotientMap quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "quotient requires a normal subgroup");
  constexpr Element unset = ~Element{0};
  std::vector<Element> projection(g.order(), unset);
  std::vector<Element> reps;
  const auto n_elems = n.elements();
  for (Element x = 0; x < g.order(); ++x) {
    if (projection[x] != unset) continue;
    const auto coset = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : n_elems) projection[g.mul(x, m)] = coset;
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = i == 0 ? std::string("e") : g.element_name(reps[i]) + "N";
    for (std::size_t j = 0; j < k; ++j) table[i][j] = projection[g.mul(reps[i], reps[j])];
  }
  const auto validation = k <= max_checked_order ? Validation::full : Validation::skip_associativity;
  auto q = FiniteGroup::from_cayley_table(table, g.name() + "/N", std::move(names), validation);
  return {std::move(q), std::move(projection)};
}

enum class ChiefTieBreak {
  smallest_first,  // smallest factor order, then lexicographically smallest mask
  largest_first,   // the reverse; used to check choice-independence
};

/// G = terms[0] > terms[1] > ... > terms[t] = 1, each term normal in G and
/// each factor terms[i-1]/terms[i] minimal normal in G/terms[i].
struct ChiefSeries {
  FiniteGroup group;
  std::vector<Subgroup> terms;
  std::vector<std::size_t> factor_orders;  // |terms[i-1]| / |terms[i]|, i = 1..t

  std::size_t length() const noexcept { return factor_orders.size(); }
};

/// Built from the bottom: pick a minimal normal subgroup of the current
/// quotient G/N_i and pull it back to get N_{i-1}.
inline ChiefSeries chief_series(const FiniteGroup& g,
                                ChiefTieBreak tie_break = ChiefTieBreak::smallest_first) {
  std::vector<Subgroup> ascending{Subgroup::trivial(g)};
  while (!ascending.back().is_whole()) {
    const auto q = quotient(g, ascending.back());
    const auto candidates = minimal_normal_subgroups(q.group);
    const Subgroup& pick =
        tie_break == ChiefTieBreak::smallest_first ? candidates.front() : candidates.back();
    ascending.push_back(q.preimage(pick));
  }
  ChiefSeries series{g, {ascending.rbegin(), ascending.rend()}, {}};
  for (std::size_t i = 1; i < series.terms.size(); ++i)
    series.factor_orders.push_back(series.terms[i - 1].size() / series.terms[i].size());
  return series;
}

/// All subgroups: cyclic subgroups, then joins with cyclic subgroups until
/// nothing new appears. Sorted by size, then mask.
inline std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
  constexpr std::size_t limit = 64;
  if (g.order() > limit)
    throw Error(ErrorCode::TooLarge, "subgroup enumeration is limited to order " + std::to_string(limit));
  std::vector<Subgroup> cyclic;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> all;
  for (Element x = 0; x < g.order(); ++x) {
    auto c = generated_closure(g, {x});
    if (seen.insert(c.members()).second) {
      cyclic.push_back(c);
      all.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.is_subset_of(all[i])) continue;
      std::vector<Element> gens = all[i].elements();
      const auto extra = c.elements();
      gens.insert(gens.end(), extra.begin(), extra.end());
      auto joined = generated_closure(g, gens);
      if (seen.insert(joined.members()).second) all.push_back(std::move(joined));
    }
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a.members(), b.members());
  });
  return all;
}

inline bool is_complement(const Subgroup& h, const Subgroup& n, std::size_t group_order) {
  return h.size() * n.size() == group_order && (h.members() & n.members()).count() == 1;
}

/// Number of subgroups H with H ∩ N = 1 and |H||N| = |G|. Complements are
/// isomorphic to G/N, so when G/N is 2-generated every complement is the
/// closure of some pair.
inline std::size_t count_complements(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "complements are counted for normal subgroups");
  if (g.order() % n.size() != 0)
    throw Error(ErrorCode::InvariantViolated, "normal subgroup order does not divide group order");
  const auto q = quotient(g, n);
  if (!is_two_generated(q.group)) {
    std::size_t count = 0;
    for (const auto& h : enumerate_subgroups(g))
      if (is_complement(h, n, g.order())) ++count;
    return count;
  }
  const std::size_t target = g.order() / n.size();
  std::unordered_set<ElementSet, ElementSetHash> found;
  for (Element x = 0; x < g.order(); ++x) {
    if (target % g.element_order(x) != 0) continue;
    for (Element y = x; y < g.order(); ++y) {
      if (target % g.element_order(y) != 0) continue;
      auto h = generated_closure(g, {x, y});
      if (is_complement(h, n, g.order())) found.insert(h.members());
    }
  }
  return found.size();
}

/// True iff G maps onto C_2, i.e. K = <commutators, squares> is proper.
inline bool has_order2_quotient(const FiniteGroup& g) {
  ElementSet seeds(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    seeds.set(g.mul(x, x));
    for (Element y = 0; y < g.order(); ++y) seeds.set(commutator(g, x, y));
  }
  std::vector<Element> gens;
  for_each_member(seeds, [&](std::size_t i) { gens.push_back(static_cast<Element>(i)); });
  return !generated_closure(g, gens).is_whole();
}

}  // namespace gengraph
