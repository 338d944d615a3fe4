#pragma once

#include <gengraph/group.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace gengraph {

namespace detail {

inline Validation validation_for(std::size_t order) {
  return order <= max_checked_order ? Validation::full : Validation::skip_associativity;
}

inline std::string power_name(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

/// Name for a^i b^j with an "e" fallback for the identity.
inline std::string word_name(const std::string& a, std::size_t i, const std::string& b, std::size_t j) {
  std::string s = power_name(a, i) + power_name(b, j);
  return s.empty() ? "e" : s;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

}  // namespace detail

/// C_n, generated by g.
inline FiniteGroup cyclic_group(std::size_t n) {
  detail::require(n >= 1, "C:n needs n >= 1");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = detail::word_name("g", i, "", 0);
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  }
  return FiniteGroup::from_cayley_table(t, "C" + std::to_string(n), names, detail::validation_for(n));
}

/// C_m ⋊ C_n = <a, b | a^m, b^n, b a b^-1 = a^k>, elements a^i b^j with
/// (a^i b^j)(a^i' b^j') = a^(i + i' k^j) b^(j + j'). Requires k^n = 1 mod m.
inline FiniteGroup metacyclic_group(std::size_t m, std::size_t n, std::size_t k) {
  detail::require(m >= 1 && n >= 1, "M:m,n,k needs m, n >= 1");
  std::vector<std::size_t> kpow(n + 1, 1 % m);
  for (std::size_t j = 1; j <= n; ++j) kpow[j] = (kpow[j - 1] * (k % m)) % m;
  detail::require(kpow[n] == 1 % m, "M:m,n,k needs k^n = 1 mod m");
  const std::size_t order = m * n;
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t x = j * m + i;
      names[x] = detail::word_name("a", i, "b", j);
      for (std::size_t j2 = 0; j2 < n; ++j2)
        for (std::size_t i2 = 0; i2 < m; ++i2)
          t[x][j2 * m + i2] = static_cast<Element>(((j + j2) % n) * m + (i + i2 * kpow[j]) % m);
    }
  return FiniteGroup::from_cayley_table(
      t, "M(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")", names,
      detail::validation_for(order));
}

/// D_n of order 2n: rotations r^i and reflections r^i s, s r s = r^-1.
inline FiniteGroup dihedral_group(std::size_t n) {
  detail::require(n >= 1, "D:n needs n >= 1");
  const std::size_t order = 2 * n;
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  // index j*n + i stands for r^i s^j
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t x = j * n + i;
      names[x] = detail::word_name("r", i, "s", j);
      for (std::size_t j2 = 0; j2 < 2; ++j2)
        for (std::size_t i2 = 0; i2 < n; ++i2) {
          // r^i s^j r^i2 s^j2 = r^(i ± i2) s^(j + j2)
          const std::size_t rot = j == 0 ? (i + i2) % n : (i + n - i2) % n;
          t[x][j2 * n + i2] = static_cast<Element>(((j + j2) % 2) * n + rot);
        }
    }
  return FiniteGroup::from_cayley_table(t, "D" + std::to_string(n), names, detail::validation_for(order));
}

/// Dic_n of order 4n: a^i b^j with a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1.
/// Dic_2 is the quaternion group Q8.
inline FiniteGroup dicyclic_group(std::size_t n) {
  detail::require(n >= 1, "Dic:n needs n >= 1");
  const std::size_t m = 2 * n;
  const std::size_t order = 2 * m;
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t x = j * m + i;
      names[x] = detail::word_name("a", i, "b", j);
      for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t k = 0; k < m; ++k) {
          std::size_t rot = 0, bpow = 0;
          if (j == 0) {
            rot = (i + k) % m;
            bpow = l;
          } else if (l == 0) {  // a^i b a^k = a^(i-k) b
            rot = (i + m - k) % m;
            bpow = 1;
          } else {  // a^i b a^k b = a^(i-k) b^2 = a^(i-k+n)
            rot = (i + m - k + n) % m;
            bpow = 0;
          }
          t[x][l * m + k] = static_cast<Element>(bpow * m + rot);
        }
    }
  return FiniteGroup::from_cayley_table(t, n == 2 ? "Q8" : "Dic" + std::to_string(n), names,
                                        detail::validation_for(order));
}

namespace detail {

inline std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<char> seen(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += "(";
    for (std::size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      if (out.back() != '(') out += " ";
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

inline bool is_even(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 == 0;
}

inline FiniteGroup permutation_group(std::size_t degree, bool even_only, std::string name) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
  const std::size_t order = perms.size();
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  std::vector<std::size_t> composed(degree);
  for (std::size_t x = 0; x < order; ++x) {
    names[x] = cycle_notation(perms[x]);
    for (std::size_t y = 0; y < order; ++y) {
      // apply x first, then y
      for (std::size_t i = 0; i < degree; ++i) composed[i] = perms[y][perms[x][i]];
      t[x][y] = index.at(composed);
    }
  }
  return FiniteGroup::from_cayley_table(t, std::move(name), names, validation_for(order));
}

}  // namespace detail

inline constexpr std::size_t max_permutation_degree = 6;

inline FiniteGroup symmetric_group(std::size_t n) {
  detail::require(n >= 1 && n <= max_permutation_degree, "S:n needs 1 <= n <= 6");
  return detail::permutation_group(n, false, "S" + std::to_string(n));
}

inline FiniteGroup alternating_group(std::size_t n) {
  detail::require(n >= 1 && n <= max_permutation_degree, "A:n needs 1 <= n <= 6");
  return detail::permutation_group(n, true, "A" + std::to_string(n));
}

/// G x H with (g, h) at index g * |H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t order = g.order() * h.order();
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < h.order(); ++b) {
      const std::size_t x = a * h.order() + b;
      names[x] = "(" + g.element_name(a) + "," + h.element_name(b) + ")";
      for (Element c = 0; c < g.order(); ++c)
        for (Element d = 0; d < h.order(); ++d)
          t[x][c * h.order() + d] = static_cast<Element>(g.mul(a, c) * h.order() + h.mul(b, d));
    }
  return FiniteGroup::from_cayley_table(t, g.name() + "x" + h.name(), names, detail::validation_for(order));
}

}  // namespace gengraph
