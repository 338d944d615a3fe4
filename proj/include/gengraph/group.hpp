#pragma once

#include <gengraph/element_set.hpp>
#include <gengraph/error.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gengraph {

using Element = std::uint32_t;
inline constexpr Element identity_element = 0;

/// Tables larger than this are only accepted with Validation::skip_associativity.
inline constexpr std::size_t max_checked_order = 256;

enum class Validation { full, skip_associativity };

/// A finite group stored as a validated Cayley table over indices 0..n-1.
/// Index 0 is always the identity. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates Latin-square, identity and associativity, renumbers the
  /// identity to index 0, and caches inverses and element orders.
  /// `element_names` (optional) are given in the input numbering.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                                       std::string name,
                                       std::vector<std::string> element_names = {},
                                       Validation validation = Validation::full);

  std::size_t order() const noexcept { return order_; }
  Element mul(Element x, Element y) const noexcept { return table_[x * order_ + y]; }
  Element inverse(Element x) const noexcept { return inverses_[x]; }
  std::size_t element_order(Element x) const noexcept { return element_orders_[x]; }

  std::span<const Element> row(Element x) const noexcept {
    return {table_.data() + x * order_, order_};
  }
  std::span<const Element> inverses() const noexcept { return inverses_; }
  std::span<const std::size_t> element_orders() const noexcept { return element_orders_; }

  const std::string& name() const noexcept { return name_; }
  const std::string& element_name(Element x) const { return element_names_.at(x); }
  const std::vector<std::string>& element_names() const noexcept { return element_names_; }

  bool is_abelian() const noexcept { return abelian_; }
  bool is_cyclic() const noexcept {
    return std::find(element_orders_.begin(), element_orders_.end(), order_) !=
           element_orders_.end();
  }

  FiniteGroup renamed(std::string name) const {
    FiniteGroup copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  std::vector<std::vector<Element>> table() const {
    std::vector<std::vector<Element>> out(order_);
    for (Element x = 0; x < order_; ++x) out[x].assign(row(x).begin(), row(x).end());
    return out;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::size_t> element_orders_;
  std::vector<std::string> element_names_;
  std::string name_;
  bool abelian_ = true;
};

namespace detail {
struct trusted_t {
  explicit trusted_t() = default;
};
inline constexpr trusted_t trusted{};
}  // namespace detail

/// Membership mask of a subgroup of some FiniteGroup. The parent group is not
/// stored; every operation taking a Subgroup also takes the group it lives in.
class Subgroup {
 public:
  /// Checks identity, closure under products and inverses, and Lagrange.
  static Subgroup from_members(const FiniteGroup& g, ElementSet members);

  static Subgroup trivial(const FiniteGroup& g) {
    return Subgroup(detail::trusted, make_set(g.order(), {identity_element}));
  }
  static Subgroup whole(const FiniteGroup& g) {
    ElementSet all(g.order());
    all.set();
    return Subgroup(detail::trusted, std::move(all));
  }

  /// For library internals that produce closed sets by construction.
  Subgroup(detail::trusted_t, ElementSet members)
      : members_(std::move(members)), size_(members_.count()) {}

  bool contains(Element x) const { return members_.test(x); }
  std::size_t size() const noexcept { return size_; }
  std::size_t parent_order() const noexcept { return members_.size(); }
  const ElementSet& members() const noexcept { return members_; }
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size_);
    for_each_member(members_, [&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
    return out;
  }
  bool is_trivial() const noexcept { return size_ == 1; }
  bool is_whole() const noexcept { return size_ == members_.size(); }
  bool is_subset_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  ElementSet members_;
  std::size_t size_ = 0;
};

// ---------------------------------------------------------------------------
// FiniteGroup construction

inline FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& table,
                                                  std::string name,
                                                  std::vector<std::string> element_names,
                                                  Validation validation) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::BadParameter, "group order must be at least 1");
  if (!element_names.empty() && element_names.size() != n)
    throw Error(ErrorCode::BadParameter, "expected " + std::to_string(n) + " element names");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw Error(ErrorCode::BadParameter,
                  "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                      " entries, expected " + std::to_string(n),
                  r);
    for (auto v : table[r])
      if (v >= n)
        throw Error(ErrorCode::BadParameter,
                    "entry " + std::to_string(v) + " in row " + std::to_string(r) +
                        " is out of range",
                    r);
  }

  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (auto v : table[r]) {
      if (seen[v])
        throw Error(ErrorCode::NotLatinSquare,
                    "row " + std::to_string(r) + " repeats entry " + std::to_string(v), r);
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      auto v = table[r][c];
      if (seen[v])
        throw Error(ErrorCode::NotLatinSquare,
                    "column " + std::to_string(c) + " repeats entry " + std::to_string(v) +
                        " (row " + std::to_string(r) + ")",
                    r);
      seen[v] = 1;
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no element acts as a two-sided identity");

  if (validation == Validation::full) {
    if (n > max_checked_order)
      throw Error(ErrorCode::TooLarge,
                  "associativity check refused for order " + std::to_string(n) + " > " +
                      std::to_string(max_checked_order) +
                      "; construct with Validation::skip_associativity");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto xy = table[x][y];
        for (std::size_t z = 0; z < n; ++z)
          if (table[xy][z] != table[x][table[y][z]])
            throw Error(ErrorCode::NotAssociative,
                        "(" + std::to_string(x) + "*" + std::to_string(y) + ")*" +
                            std::to_string(z) + " != " + std::to_string(x) + "*(" +
                            std::to_string(y) + "*" + std::to_string(z) + ") for triple (" +
                            std::to_string(x) + ", " + std::to_string(y) + ", " +
                            std::to_string(z) + ")",
                        x);
      }
  }

  // Swap the identity into index 0.
  std::vector<Element> relabel(n);
  for (std::size_t i = 0; i < n; ++i) relabel[i] = static_cast<Element>(i);
  std::swap(relabel[0], relabel[*identity]);  // relabel is its own inverse

  FiniteGroup g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.table_[i * n + j] = relabel[table[relabel[i]][relabel[j]]];

  if (element_names.empty()) {
    g.element_names_.resize(n);
    g.element_names_[0] = "e";
    for (std::size_t i = 1; i < n; ++i) g.element_names_[i] = "x" + std::to_string(i);
  } else {
    g.element_names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.element_names_[i] = element_names[relabel[i]];
  }

  g.inverses_.resize(n);
  g.element_orders_.resize(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y)
      if (g.mul(x, y) == identity_element) {
        g.inverses_[x] = y;
        break;
      }
    std::size_t k = 1;
    for (Element p = x; p != identity_element; p = g.mul(p, x)) ++k;
    g.element_orders_[x] = k;
  }
  for (Element x = 0; x < n && g.abelian_; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (g.mul(x, y) != g.mul(y, x)) {
        g.abelian_ = false;
        break;
      }
  return g;
}

// ---------------------------------------------------------------------------
// Element-level queries

/// Least subgroup containing `seeds`: breadth-first closure of the identity
/// under right multiplication by the seeds (finite, so inverses come free).
inline Subgroup generated_closure(const FiniteGroup& g, std::span<const Element> seeds) {
  ElementSet members(g.order());
  members.set(identity_element);
  std::vector<Element> frontier{identity_element};
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element s : seeds) {
      const Element y = g.mul(x, s);
      if (!members.test(y)) {
        members.set(y);
        frontier.push_back(y);
      }
    }
  }
  return Subgroup(detail::trusted, std::move(members));
}

inline Subgroup generated_closure(const FiniteGroup& g, std::initializer_list<Element> seeds) {
  return generated_closure(g, std::span<const Element>(seeds.begin(), seeds.size()));
}

/// True iff <x, y> = G.
inline bool generates(const FiniteGroup& g, Element x, Element y) {
  const Element seeds[] = {x, y};
  return generated_closure(g, seeds).size() == g.order();
}

inline Subgroup Subgroup::from_members(const FiniteGroup& g, ElementSet members) {
  if (members.size() != g.order())
    throw Error(ErrorCode::BadParameter, "membership mask has the wrong universe size");
  if (!members.test(identity_element))
    throw Error(ErrorCode::BadParameter, "subgroup must contain the identity");
  const auto elems = to_indices(members);
  for (auto x : elems) {
    if (!members.test(g.inverse(static_cast<Element>(x))))
      throw Error(ErrorCode::BadParameter, "subset is not closed under inverses");
    for (auto y : elems)
      if (!members.test(g.mul(static_cast<Element>(x), static_cast<Element>(y))))
        throw Error(ErrorCode::BadParameter, "subset is not closed under products");
  }
  if (g.order() % elems.size() != 0)
    throw Error(ErrorCode::InvariantViolated, "subgroup order does not divide group order");
  return Subgroup(detail::trusted, std::move(members));
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  return Subgroup(detail::trusted, a.members() & b.members());
}

inline Subgroup centralizer(const FiniteGroup& g, Element x) {
  ElementSet members(g.order());
  for (Element z = 0; z < g.order(); ++z)
    if (g.mul(z, x) == g.mul(x, z)) members.set(z);
  return Subgroup(detail::trusted, std::move(members));
}

inline Subgroup center(const FiniteGroup& g) {
  ElementSet members(g.order());
  members.set();
  for (Element x = 0; x < g.order(); ++x) members &= centralizer(g, x).members();
  return Subgroup(detail::trusted, std::move(members));
}

/// [g, n] = g^-1 n^-1 g n, so that g * [g, n] = n^-1 g n.
inline Element commutator(const FiniteGroup& grp, Element g, Element n) {
  return grp.mul(grp.mul(grp.inverse(g), grp.inverse(n)), grp.mul(g, n));
}

/// g^-1 x g
inline Element conjugate(const FiniteGroup& grp, Element x, Element g) {
  return grp.mul(grp.mul(grp.inverse(g), x), g);
}

inline std::optional<std::pair<Element, Element>> find_generating_pair(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x; y < g.order(); ++y)
      if (generates(g, x, y)) return std::pair{x, y};
  return std::nullopt;
}

inline bool is_two_generated(const FiniteGroup& g) {
  return g.order() == 1 || find_generating_pair(g).has_value();
}

inline std::size_t totient(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadParameter, "totient requires n >= 1");
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// ---------------------------------------------------------------------------
// Isomorphism

/// Cheap invariants compared before any backtracking.
struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<std::size_t> order_histogram;  // count of elements of each order

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

inline GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint f{g.order(), g.is_abelian(), std::vector<std::size_t>(g.order() + 1)};
  for (auto o : g.element_orders()) ++f.order_histogram[o];
  return f;
}

namespace detail {

/// A short generating sequence: one element if cyclic, a pair if
/// 2-generated (chosen to have few same-order candidates), else greedy.
inline std::vector<Element> small_generating_sequence(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  for (Element x = 0; x < n; ++x)
    if (g.element_order(x) == n) return {x};

  std::vector<std::size_t> class_size(n + 1);
  for (auto o : g.element_orders()) ++class_size[o];
  std::vector<Element> by_rarity(n - 1);
  for (Element x = 1; x < n; ++x) by_rarity[x - 1] = x;
  std::stable_sort(by_rarity.begin(), by_rarity.end(), [&](Element a, Element b) {
    return class_size[g.element_order(a)] < class_size[g.element_order(b)];
  });
  std::optional<std::pair<Element, Element>> best;
  std::size_t best_cost = 0;
  for (std::size_t i = 0; i < by_rarity.size(); ++i)
    for (std::size_t j = i + 1; j < by_rarity.size(); ++j) {
      const Element x = by_rarity[i], y = by_rarity[j];
      const std::size_t cost = class_size[g.element_order(x)] * class_size[g.element_order(y)];
      if (best && cost >= best_cost) continue;
      if (generates(g, x, y)) {
        best = {x, y};
        best_cost = cost;
      }
    }
  if (best) return {best->first, best->second};

  std::vector<Element> gens;
  Subgroup current = Subgroup::trivial(g);
  while (!current.is_whole()) {
    Element pick = 0;
    std::size_t pick_order = 0;
    for (Element x = 1; x < n; ++x)
      if (!current.contains(x) && g.element_order(x) > pick_order) {
        pick = x;
        pick_order = g.element_order(x);
      }
    gens.push_back(pick);
    current = generated_closure(g, gens);
  }
  return gens;
}

/// Extends generator images to a map by walking the Cayley graph of `from`.
/// Returns nullopt if the assignment is not a well-defined bijective
/// homomorphism.
inline std::optional<std::vector<Element>> extend_images(const FiniteGroup& from,
                                                         const FiniteGroup& to,
                                                         std::span<const Element> gens,
                                                         std::span<const Element> images) {
  constexpr Element unset = ~Element{0};
  std::vector<Element> phi(from.order(), unset);
  phi[identity_element] = identity_element;
  std::vector<Element> queue{identity_element};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = from.mul(x, gens[i]);
      const Element image = to.mul(phi[x], images[i]);
      if (phi[y] == unset) {
        phi[y] = image;
        queue.push_back(y);
      } else if (phi[y] != image) {
        return std::nullopt;
      }
    }
  }
  // Consistency on every edge x -> x*s gives phi(xy) = phi(x)phi(y) by induction.
  ElementSet hit(to.order());
  for (auto v : phi) {
    if (v == unset || hit.test(v)) return std::nullopt;
    hit.set(v);
  }
  return phi;
}

}  // namespace detail

/// An isomorphism G -> H as an index map, if one exists.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g,
                                                            const FiniteGroup& h) {
  if (!(fingerprint(g) == fingerprint(h))) return std::nullopt;
  const auto gens = detail::small_generating_sequence(g);
  if (gens.empty()) return std::vector<Element>{identity_element};

  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element y = 0; y < h.order(); ++y)
      if (h.element_order(y) == g.element_order(gens[i])) candidates[i].push_back(y);

  std::vector<Element> images(gens.size());
  std::optional<std::vector<Element>> found;
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      found = detail::extend_images(g, h, gens, images);
      return found.has_value();
    }
    for (Element y : candidates[depth]) {
      images[depth] = y;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

inline bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace gengraph
