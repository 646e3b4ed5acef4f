#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dearr/error.hpp"
#include "dearr/exactgeom.hpp"
#include "dearr/wiring.hpp"

namespace dearr {

struct HyperplaneParams {
  int dim = 2;
  int count = 4;
  int bound = 5;  // |entries| <= bound, offset denominators in [1, bound]
  std::uint64_t seed = 0;
};

struct WiringParams {
  int wires = 4;
  std::optional<int> crossings;  // drawn from [0, C(wires, 2)] when absent
  std::uint64_t seed = 0;
};

namespace detail {

// Plain modulo mapping: unlike std::uniform_int_distribution it produces the
// same stream on every standard library.
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(rng() % span);
}

}  // namespace detail

/// Random arrangement with small integer normals and rational offsets.
/// Duplicates are redrawn.
inline Arrangement generate_arrangement(const HyperplaneParams& p) {
  if (p.dim < 1) throw Error(Errc::param_error, "--dim must be at least 1");
  if (p.count < 0) throw Error(Errc::param_error, "--count must be nonnegative");
  if (p.bound < 1) throw Error(Errc::param_error, "--bound must be at least 1");

  std::mt19937_64 rng(p.seed);
  std::vector<Hyperplane> out;
  std::set<Hyperplane> seen;
  const int max_attempts = 1000 * (p.count + 1);
  for (int attempt = 0; static_cast<int>(out.size()) < p.count; ++attempt) {
    if (attempt == max_attempts)
      throw Error(Errc::param_error, "could not draw " + std::to_string(p.count) + " distinct hyperplanes");
    std::vector<Rational> normal(static_cast<std::size_t>(p.dim));
    bool nonzero = false;
    for (auto& v : normal) {
      v = static_cast<long>(detail::draw(rng, -p.bound, p.bound));
      nonzero = nonzero || v != 0;
    }
    Rational offset(static_cast<long>(detail::draw(rng, -p.bound, p.bound)), static_cast<long>(detail::draw(rng, 1, p.bound)));
    offset.canonicalize();
    if (!nonzero) continue;
    Hyperplane h(std::move(normal), std::move(offset));
    if (!seen.insert(h).second) continue;
    out.push_back(std::move(h));
  }
  return Arrangement(p.dim, std::move(out));
}

/// Random valid wiring diagram: each step picks uniformly among blocks of
/// adjacent wires none of which have crossed yet.
inline WiringDiagram generate_wiring(const WiringParams& p) {
  if (p.wires < 1) throw Error(Errc::param_error, "--wires must be at least 1");
  if (p.crossings && *p.crossings < 0) throw Error(Errc::param_error, "--crossings must be nonnegative");

  std::mt19937_64 rng(p.seed);
  const auto n = static_cast<std::size_t>(p.wires);
  const int pairs = p.wires * (p.wires - 1) / 2;
  const int target = p.crossings ? *p.crossings : static_cast<int>(detail::draw(rng, 0, pairs));

  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::vector<std::vector<bool>> crossed(n, std::vector<bool>(n, false));

  WiringDiagram w{p.wires, {}};
  while (static_cast<int>(w.events.size()) < target) {
    std::vector<CrossingEvent> candidates;
    for (std::size_t top = 0; top + 1 < n; ++top) {
      for (std::size_t end = top + 1; end < n; ++end) {
        bool fresh = true;
        for (std::size_t a = top; a < end && fresh; ++a) fresh = !crossed[order[a]][order[end]];
        if (!fresh) break;
        candidates.push_back(CrossingEvent{static_cast<int>(top), static_cast<int>(end - top + 1)});
      }
    }
    if (candidates.empty()) break;
    const auto& ev = candidates[static_cast<std::size_t>(
        detail::draw(rng, 0, static_cast<long long>(candidates.size()) - 1))];
    for (int a = ev.top; a < ev.top + ev.size; ++a)
      for (int b = a + 1; b < ev.top + ev.size; ++b) crossed[order[a]][order[b]] = crossed[order[b]][order[a]] = true;
    std::reverse(order.begin() + ev.top, order.begin() + ev.top + ev.size);
    w.events.push_back(ev);
  }
  return w;
}

}  // namespace dearr
