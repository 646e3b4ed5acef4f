#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "dearr/dearr.hpp"

namespace testing {

/// Rows of "a1 ... an | b" written as strings, e.g. {{"1", "0", "3/2"}}.
inline dearr::Arrangement arrangement(int n, const std::vector<std::vector<std::string>>& rows) {
  std::vector<dearr::Hyperplane> hs;
  for (const auto& row : rows) {
    std::vector<dearr::Rational> normal;
    for (int i = 0; i < n; ++i) normal.push_back(dearr::parse_rational(row[static_cast<std::size_t>(i)]));
    hs.emplace_back(std::move(normal), dearr::parse_rational(row.back()));
  }
  return dearr::Arrangement(n, std::move(hs));
}

inline dearr::Arrangement axes() { return arrangement(2, {{"1", "0", "0"}, {"0", "1", "0"}}); }
inline dearr::Arrangement concurrent3() { return arrangement(2, {{"1", "0", "0"}, {"0", "1", "0"}, {"1", "-1", "0"}}); }
inline dearr::Arrangement generic3() { return arrangement(2, {{"1", "0", "0"}, {"0", "1", "0"}, {"1", "1", "1"}}); }
inline dearr::Arrangement empty_plane() { return dearr::Arrangement(2, {}); }

/// Tangent lines y = 2k x - k^2 of a parabola, k = 1..m: pairwise crossing,
/// never three through one point.
inline dearr::Arrangement tangent_lines(int m) {
  std::vector<dearr::Hyperplane> hs;
  for (int k = 1; k <= m; ++k) hs.emplace_back(std::vector<dearr::Rational>{2 * k, -1}, dearr::Rational(k * k));
  return dearr::Arrangement(2, std::move(hs));
}

inline dearr::FVector fv(std::initializer_list<long> values) {
  dearr::FVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(DEARR_FIXTURE_DIR) / name;
}

/// Random arrangement for property tests: dimension 2 or 3, 1..6 hyperplanes.
inline dearr::Arrangement random_arrangement(std::uint64_t seed, int max_count = 6) {
  dearr::HyperplaneParams p;
  p.seed = seed;
  p.dim = 2 + static_cast<int>(seed % 2);
  p.count = 1 + static_cast<int>((seed / 2) % static_cast<std::uint64_t>(max_count));
  p.bound = 3;
  return dearr::generate_arrangement(p);
}

}  // namespace testing
