#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace gengraph {

/// Exact non-negative ratio of integer counts, always in lowest terms.
using ExactRatio = boost::rational<std::int64_t>;

inline ExactRatio make_ratio(std::int64_t num, std::int64_t den) { return ExactRatio(num, den); }

inline std::string to_string(const ExactRatio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace gengraph
