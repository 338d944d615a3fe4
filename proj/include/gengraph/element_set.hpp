#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace gengraph {

/// Membership mask over element (or vertex) indices 0..n-1.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline ElementSet make_set(std::size_t universe, std::initializer_list<std::size_t> members = {}) {
  ElementSet s(universe);
  for (auto m : members) s.set(m);
  return s;
}

inline std::vector<std::size_t> to_indices(const ElementSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

template <typename F>
void for_each_member(const ElementSet& s, F&& f) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) f(i);
}

/// Lexicographic order on the sorted member lists (smallest first element wins).
inline bool lex_less(const ElementSet& a, const ElementSet& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != ElementSet::npos && j != ElementSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == ElementSet::npos && j != ElementSet::npos;
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return std::hash<ElementSet>{}(s); }
};

}  // namespace gengraph
