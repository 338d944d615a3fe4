#pragma once

#include <gengraph/cayley_io.hpp>
#include <gengraph/group.hpp>
#include <gengraph/group_spec.hpp>

#include <algorithm>
#include <filesystem>
#include <string_view>
#include <vector>

namespace gengraph {

/// Every group of order <= 15 up to isomorphism (28 groups), by order.
inline std::vector<FiniteGroup> corpus_up_to_15() {
  static constexpr std::string_view specs[] = {
      "C:1",
      "C:2",
      "C:3",
      "C:4", "C:2 x C:2",
      "C:5",
      "C:6", "D:3",
      "C:7",
      "C:8", "C:4 x C:2", "C:2 x C:2 x C:2", "D:4", "Dic:2",
      "C:9", "C:3 x C:3",
      "C:10", "D:5",
      "C:11",
      "C:12", "C:6 x C:2", "D:6", "A:4", "Dic:3",
      "C:13",
      "C:14", "D:7",
      "C:15",
  };
  std::vector<FiniteGroup> out;
  for (auto s : specs) out.push_back(build_group(s));
  return out;
}

/// Constructor-buildable groups of order 16..24, used for wider property
/// sweeps. Not a complete classification of those orders.
inline std::vector<FiniteGroup> groups_16_to_24() {
  static constexpr std::string_view specs[] = {
      // 16
      "C:16", "C:8 x C:2", "C:4 x C:4", "C:4 x C:2 x C:2", "C:2 x C:2 x C:2 x C:2", "D:8", "Dic:4",
      "D:4 x C:2", "Dic:2 x C:2", "M:8,2,3", "M:8,2,5", "M:4,4,3",
      // 17..19
      "C:17", "C:18", "C:6 x C:3", "D:9", "D:3 x C:3", "C:19",
      // 20..23
      "C:20", "C:10 x C:2", "D:10", "Dic:5", "M:5,4,2", "C:21", "M:7,3,2", "C:22", "D:11", "C:23",
      // 24
      "C:24", "C:12 x C:2", "C:6 x C:2 x C:2", "D:12", "Dic:6", "S:4", "A:4 x C:2", "D:6 x C:2",
      "D:4 x C:3", "Dic:2 x C:3", "D:3 x C:4", "Dic:3 x C:2", "M:3,8,2",
  };
  std::vector<FiniteGroup> out;
  for (auto s : specs) out.push_back(build_group(s));
  return out;
}

/// corpus_up_to_15 plus groups_16_to_24, restricted to order <= max_order.
inline std::vector<FiniteGroup> extended_corpus(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (auto& g : corpus_up_to_15())
    if (g.order() <= max_order) out.push_back(std::move(g));
  if (max_order >= 16)
    for (auto& g : groups_16_to_24())
      if (g.order() <= max_order) out.push_back(std::move(g));
  return out;
}

/// Every regular file in `dir`, read as a Cayley table, in filename order.
inline std::vector<FiniteGroup> read_corpus_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::Io, dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<FiniteGroup> out;
  for (const auto& f : files) out.push_back(read_cayley_file(f));
  return out;
}

}  // namespace gengraph
