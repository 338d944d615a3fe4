#pragma once

#include <gengraph/genstats.hpp>
#include <gengraph/graph.hpp>
#include <gengraph/group.hpp>
#include <gengraph/planarity.hpp>
#include <gengraph/structure.hpp>

#include <random>
#include <string>
#include <vector>

namespace gengraph {

/// Outcome of one corpus-wide property check. `checked` counts the
/// individual instances examined; `failures` holds one line per violation.
struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty() && checked > 0; }
};

namespace detail {

inline std::string where(const FiniteGroup& g, const Subgroup& n) {
  return g.name() + " / N of order " + std::to_string(n.size());
}

inline bool quotient_two_generated(const FiniteGroup& g, const Subgroup& n) {
  return is_two_generated(quotient(g, n).group);
}

}  // namespace detail

/// The fiber size over N is the same for every pair generating G modulo N.
inline PropertyResult check_fiber_independence(const std::vector<FiniteGroup>& groups) {
  PropertyResult r{"fiber independence", 0, {}};
  for (const auto& g : groups) {
    if (g.order() == 1) continue;
    for (const auto& n : minimal_normal_subgroups(g)) {
      const auto counts = distinct_fiber_counts(g, n);
      if (counts.empty()) continue;  // no pair generates G/N
      ++r.checked;
      if (counts.size() != 1) r.failures.push_back(detail::where(g, n) + ": " + std::to_string(counts.size()) + " distinct fiber sizes");
    }
  }
  return r;
}

/// P_G(2) = P_{G/N}(2) P_{G,N}(2) for every minimal normal N, and the α
/// values along a chief series multiply to |G| P_G(2).
inline PropertyResult check_multiplicativity(const std::vector<FiniteGroup>& groups) {
  PropertyResult r{"multiplicativity", 0, {}};
  for (const auto& g : groups) {
    if (g.order() == 1) continue;
    const ExactRatio pg = generation_probability(g);
    for (const auto& n : minimal_normal_subgroups(g)) {
      if (!detail::quotient_two_generated(g, n)) continue;
      ++r.checked;
      const ExactRatio rhs = generation_probability(quotient(g, n).group) * relative_generation_probability(g, n);
      if (pg != rhs) r.failures.push_back(detail::where(g, n) + ": " + to_string(pg) + " != " + to_string(rhs));
    }
    if (!is_two_generated(g)) continue;
    for (auto tie : {ChiefTieBreak::smallest_first, ChiefTieBreak::largest_first}) {
      ++r.checked;
      const auto series = chief_series(g, tie);
      ExactRatio product(1);
      for (std::size_t i = 1; i < series.terms.size(); ++i) {
        const auto q = quotient(g, series.terms[i]);
        product *= alpha(q.group, q.image(series.terms[i - 1]));
      }
      const ExactRatio expected = static_cast<std::int64_t>(g.order()) * pg;
      if (product != expected)
        r.failures.push_back(g.name() + ": alpha product " + to_string(product) + " != " + to_string(expected));
    }
  }
  return r;
}

/// For 2-generated G and abelian minimal normal N of order p^a:
/// α = (p^2a - c)/p^a with c the complement count, α >= p^a - p^(a-1),
/// and α = 1, 3/2 or >= 2 exactly when the side conditions say so.
inline PropertyResult check_abelian_factor_formula(const std::vector<FiniteGroup>& groups) {
  PropertyResult r{"abelian factor formula", 0, {}};
  for (const auto& g : groups) {
    if (g.order() == 1 || !is_two_generated(g)) continue;
    for (const auto& n : minimal_normal_subgroups(g)) {
      if (!is_abelian_subgroup(g, n)) continue;
      ++r.checked;
      const auto pp = prime_power(n.size());
      if (!pp) {
        r.failures.push_back(detail::where(g, n) + ": order is not a prime power");
        continue;
      }
      const std::int64_t pa = detail::ipow(static_cast<std::int64_t>(pp->p), pp->a);
      const auto c = static_cast<std::int64_t>(count_complements(g, n));
      const ExactRatio a = alpha(g, n);
      if (a != ExactRatio(pa * pa - c, pa)) r.failures.push_back(detail::where(g, n) + ": closed form mismatch");
      if (a < ExactRatio(pa - pa / static_cast<std::int64_t>(pp->p)))
        r.failures.push_back(detail::where(g, n) + ": below p^a - p^(a-1)");
      const bool small = n.size() == 2 && c != 0;
      const bool onto_c2 = has_order2_quotient(quotient(g, n).group);
      const bool want1 = small && onto_c2;
      const bool want2 = small && !onto_c2;
      if ((a == ExactRatio(1)) != want1 || (a == ExactRatio(3, 2)) != want2 || (!want1 && !want2 && a < ExactRatio(2)))
        r.failures.push_back(detail::where(g, n) + ": alpha " + to_string(a) + " does not match its case");
    }
  }
  return r;
}

/// For non-cyclic 2-generated G, twice the edge count of Γ(G) is the number
/// of generating ordered pairs. Cyclic G of order n > 1 adds 3 φ(n) pairs.
inline PropertyResult check_edge_pair_relation(const std::vector<FiniteGroup>& groups) {
  PropertyResult r{"edge/pair relation", 0, {}};
  for (const auto& g : groups) {
    if (g.order() < 2) continue;
    ++r.checked;
    const std::size_t twice = 2 * generating_graph(g).edge_count();
    const std::size_t extra = g.is_cyclic() ? 3 * totient(g.order()) : 0;
    const std::size_t pairs = ordered_generating_pairs(g);
    if (twice + extra != pairs)
      r.failures.push_back(g.name() + ": 2e + extra = " + std::to_string(twice + extra) + ", pairs = " + std::to_string(pairs));
  }
  return r;
}

/// Every 2-generated non-cyclic group with planar Γ has |G| P_G(2) < 6,
/// and every group with |G| P_G(2) >= 6 has non-planar Γ.
inline PropertyResult check_density_inequality(const std::vector<FiniteGroup>& groups) {
  PropertyResult r{"density inequality", 0, {}};
  for (const auto& g : groups) {
    if (g.order() < 2 || !is_two_generated(g)) continue;
    ++r.checked;
    const ExactRatio density = static_cast<std::int64_t>(g.order()) * generation_probability(g);
    const bool planar = is_planar_graph(generating_graph(g));
    if (planar && !g.is_cyclic() && density >= ExactRatio(6))
      r.failures.push_back(g.name() + ": planar with |G|P = " + to_string(density));
    if (density >= ExactRatio(6) && planar) r.failures.push_back(g.name() + ": |G|P >= 6 but planar");
  }
  return r;
}

/// A seeded Erdos-Renyi graph.
inline SimpleGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Certificate self-check: every verdict carries an embedding passing the
/// face count or a witness that is a genuine Kuratowski subdivision.
inline PropertyResult check_planarity_certificates(std::size_t count, std::uint64_t seed) {
  PropertyResult r{"planarity certificates", 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(8, 10);
  std::uniform_real_distribution<double> density(0.2, 0.7);
  for (std::size_t i = 0; i < count; ++i) {
    const auto g = random_graph(size(rng), density(rng), rng);
    const auto verdict = is_planar(g);
    ++r.checked;
    const bool ok = verdict.planar ? verdict.embedding && is_valid_planar_embedding(*verdict.embedding, g)
                                   : verdict.witness && is_kuratowski_subdivision(g, *verdict.witness);
    if (!ok) r.failures.push_back("random graph #" + std::to_string(i) + ":\n" + to_edge_list(g));
  }
  return r;
}

}  // namespace gengraph
