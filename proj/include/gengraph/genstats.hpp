#pragma once

#include <gengraph/group.hpp>
#include <gengraph/ratio.hpp>
#include <gengraph/structure.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace gengraph {

/// |{(x, y) in G^2 : <x, y> = G}|, counting repeats and the identity.
inline std::size_t ordered_generating_pairs(const FiniteGroup& g) {
  std::size_t count = 0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x; y < g.order(); ++y)
      if (generates(g, x, y)) count += x == y ? 1 : 2;
  return count;
}

/// P_G(2): probability that a uniform ordered pair generates G.
inline ExactRatio generation_probability(const FiniteGroup& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  return {static_cast<std::int64_t>(ordered_generating_pairs(g)), n * n};
}

namespace detail {

inline bool generates_modulo(const QuotientMap& q, Element g1, Element g2) {
  return generates(q.group, q.projection[g1], q.projection[g2]);
}

inline std::size_t fiber_count_unchecked(const FiniteGroup& g, const std::vector<Element>& n_elems,
                                         Element g1, Element g2) {
  std::size_t count = 0;
  for (Element n1 : n_elems) {
    const Element x = g.mul(g1, n1);
    for (Element n2 : n_elems)
      if (generates(g, x, g.mul(g2, n2))) ++count;
  }
  return count;
}

inline std::optional<std::pair<Element, Element>> pair_generating_modulo(const FiniteGroup& g,
                                                                         const QuotientMap& q) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (generates_modulo(q, x, y)) return std::pair{x, y};
  return std::nullopt;
}

}  // namespace detail

/// |Φ_N(g1, g2)| = |{(n1, n2) in N^2 : <g1 n1, g2 n2> = G}|.
/// Requires <g1, g2> N = G.
inline std::size_t gaschutz_fiber_count(const FiniteGroup& g, const Subgroup& n, Element g1, Element g2) {
  std::vector<Element> seeds = n.elements();
  seeds.push_back(g1);
  seeds.push_back(g2);
  if (!generated_closure(g, seeds).is_whole())
    throw Error(ErrorCode::NotGeneratingModuloN, "the pair does not generate G modulo N");
  return detail::fiber_count_unchecked(g, n.elements(), g1, g2);
}

/// The distinct fiber sizes over every pair generating G modulo N. The
/// fiber size does not depend on the pair, so a correct run yields at most
/// one value (none if G/N is not 2-generated).
inline std::set<std::size_t> distinct_fiber_counts(const FiniteGroup& g, const Subgroup& n) {
  const auto q = quotient(g, n);
  const auto n_elems = n.elements();
  std::set<std::size_t> counts;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (detail::generates_modulo(q, x, y))
        counts.insert(detail::fiber_count_unchecked(g, n_elems, x, y));
  return counts;
}

enum class FiberCheck {
  any_pair,   // one fiber from the first valid pair
  all_pairs,  // recompute over every valid pair and require agreement
};

/// P_{G,N}(2) = |Φ_N(g1, g2)| / |N|^2.
inline ExactRatio relative_generation_probability(const FiniteGroup& g, const Subgroup& n,
                                                  FiberCheck check = FiberCheck::any_pair) {
  const auto q = quotient(g, n);
  const auto pair = detail::pair_generating_modulo(g, q);
  if (!pair) throw Error(ErrorCode::QuotientNotTwoGenerated, "G/N is not 2-generated");
  const auto fiber = detail::fiber_count_unchecked(g, n.elements(), pair->first, pair->second);
  if (check == FiberCheck::all_pairs) {
    const auto counts = distinct_fiber_counts(g, n);
    if (counts.size() != 1)
      throw Error(ErrorCode::InvariantViolated, "fiber size depends on the chosen pair");
  }
  const auto size = static_cast<std::int64_t>(n.size());
  return {static_cast<std::int64_t>(fiber), size * size};
}

/// α(G, N) = |N| P_{G,N}(2).
inline ExactRatio alpha(const FiniteGroup& g, const Subgroup& n) {
  return static_cast<std::int64_t>(n.size()) * relative_generation_probability(g, n);
}

struct PrimePower {
  std::size_t p = 0;
  std::size_t a = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline std::optional<PrimePower> prime_power(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  std::size_t a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, a};
}

enum class FactorCase {
  case1,        // α = 1: |N| = 2, complemented, G/N maps onto C_2
  case2,        // α = 3/2: |N| = 2, complemented, G/N has no C_2 image
  case3,        // α >= 2
  non_abelian,  // the closed form does not apply
};

constexpr std::string_view to_string(FactorCase c) {
  switch (c) {
    case FactorCase::case1: return "case1";
    case FactorCase::case2: return "case2";
    case FactorCase::case3: return "case3";
    case FactorCase::non_abelian: return "non-abelian";
  }
  return "unknown";
}

/// One chief factor N_{i-1}/N_i seen as a minimal normal subgroup of G/N_i.
struct AlphaRecord {
  std::size_t level = 0;
  std::size_t factor_order = 0;
  std::size_t fiber_count = 0;
  ExactRatio alpha;
  bool is_abelian_factor = false;
  std::optional<std::size_t> p;
  std::optional<std::size_t> a;
  std::optional<std::size_t> complement_count;
  FactorCase lemma3_case = FactorCase::non_abelian;
};

namespace detail {

inline std::int64_t ipow(std::int64_t base, std::size_t exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline bool is_minimal_normal(const FiniteGroup& g, const Subgroup& n) {
  if (n.is_trivial() || !is_normal(g, n)) return false;
  for (Element x : n.elements())
    if (x != identity_element && !(normal_closure(g, {x}) == n)) return false;
  return true;
}

inline AlphaRecord factor_record(const FiniteGroup& g, const Subgroup& n) {
  const auto q = quotient(g, n);
  const auto pair = pair_generating_modulo(g, q);
  if (!pair) throw Error(ErrorCode::QuotientNotTwoGenerated, "G/N is not 2-generated");
  AlphaRecord rec;
  rec.factor_order = n.size();
  rec.fiber_count = fiber_count_unchecked(g, n.elements(), pair->first, pair->second);
  rec.alpha = ExactRatio(static_cast<std::int64_t>(rec.fiber_count), static_cast<std::int64_t>(n.size()));
  rec.is_abelian_factor = is_abelian_subgroup(g, n);
  if (!rec.is_abelian_factor) return rec;

  const auto pp = prime_power(n.size());
  if (!pp) throw Error(ErrorCode::InvariantViolated, "abelian minimal normal subgroup of non-prime-power order");
  rec.p = pp->p;
  rec.a = pp->a;
  const std::size_t c = count_complements(g, n);
  rec.complement_count = c;

  const std::int64_t pa = ipow(static_cast<std::int64_t>(pp->p), pp->a);
  const ExactRatio closed_form(pa * pa - static_cast<std::int64_t>(c), pa);
  if (closed_form != rec.alpha)
    throw Error(ErrorCode::InvariantViolated,
                "fiber alpha " + to_string(rec.alpha) + " != (p^2a - c)/p^a = " + to_string(closed_form));
  const ExactRatio lower(pa - pa / static_cast<std::int64_t>(pp->p));
  if (rec.alpha < lower)
    throw Error(ErrorCode::InvariantViolated, "alpha below p^a - p^(a-1)");

  if (rec.alpha == ExactRatio(1)) {
    rec.lemma3_case = FactorCase::case1;
  } else if (rec.alpha == ExactRatio(3, 2)) {
    rec.lemma3_case = FactorCase::case2;
  } else if (rec.alpha >= ExactRatio(2)) {
    rec.lemma3_case = FactorCase::case3;
  } else {
    throw Error(ErrorCode::InvariantViolated, "alpha " + to_string(rec.alpha) + " is below 2 but not 1 or 3/2");
  }

  const bool small_complemented = n.size() == 2 && c != 0;
  const bool order2_image = has_order2_quotient(q.group);
  const bool cond1 = small_complemented && order2_image;
  const bool cond2 = small_complemented && !order2_image;
  if (cond1 != (rec.lemma3_case == FactorCase::case1) || cond2 != (rec.lemma3_case == FactorCase::case2))
    throw Error(ErrorCode::InvariantViolated, "factor case does not match its side conditions");
  return rec;
}

}  // namespace detail

/// Computes α(G, N) from the fiber and from (p^2a - c)/p^a with c counted
/// exhaustively, requires both to agree, and classifies the case. The case
/// is cross-checked against |N| = 2, complement existence and whether G/N
/// maps onto C_2.
inline AlphaRecord lemma3_check(const FiniteGroup& g, const Subgroup& n) {
  if (!detail::is_minimal_normal(g, n) || !is_abelian_subgroup(g, n))
    throw Error(ErrorCode::NotAbelianMinimalNormal, "N must be an abelian minimal normal subgroup");
  return detail::factor_record(g, n);
}

/// α_i = α(G/N_i, N_{i-1}/N_i) along chief_series(G). Requires
/// prod α_i = |G| P_G(2) exactly.
inline std::vector<AlphaRecord> alpha_profile(const FiniteGroup& g,
                                              ChiefTieBreak tie_break = ChiefTieBreak::smallest_first) {
  if (g.order() == 1) throw Error(ErrorCode::TrivialGroup, "alpha profile needs |G| > 1");
  if (!is_two_generated(g)) throw Error(ErrorCode::NotTwoGenerated, g.name() + " is not 2-generated");
  const auto series = chief_series(g, tie_break);
  std::vector<AlphaRecord> records;
  ExactRatio product(1);
  for (std::size_t i = 1; i < series.terms.size(); ++i) {
    const auto q = quotient(g, series.terms[i]);
    auto rec = detail::factor_record(q.group, q.image(series.terms[i - 1]));
    rec.level = i;
    product *= rec.alpha;
    records.push_back(std::move(rec));
  }
  const ExactRatio expected = static_cast<std::int64_t>(g.order()) * generation_probability(g);
  if (product != expected)
    throw Error(ErrorCode::InvariantViolated,
                "product of alphas " + to_string(product) + " != |G| P_G(2) = " + to_string(expected));
  return records;
}

inline ExactRatio alpha_product(const std::vector<AlphaRecord>& records) {
  ExactRatio product(1);
  for (const auto& r : records) product *= r.alpha;
  return product;
}

}  // namespace gengraph
