#pragma once

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dearr/error.hpp"
#include "dearr/polynomial.hpp"
#include "dearr/rational.hpp"

namespace dearr {

using FlatId = std::int64_t;
using FVector = std::vector<Integer>;

/// An element of the intersection semilattice. `support` lists the arrangement
/// elements containing the flat, sorted ascending.
struct Flat {
  FlatId id = 0;
  int dim = 0;
  std::vector<std::size_t> support;
};

/// Unvalidated input to validate_semilattice(). `leq` holds (X, Y) pairs with
/// X <= Y, i.e. Y is contained in X; it need not be transitively closed.
struct SemilatticeCandidate {
  int ambient_dim = 0;
  std::vector<Flat> flats;
  std::vector<std::pair<FlatId, FlatId>> leq;
};

/// Dense table of mu(X, Y) indexed by flat position; zero off intervals.
class MobiusTable {
 public:
  MobiusTable() = default;
  explicit MobiusTable(std::size_t size) : size_(size), entries_(size * size, Integer(0)) {}

  [[nodiscard]] const Integer& operator()(std::size_t x, std::size_t y) const { return entries_[x * size_ + y]; }
  Integer& operator()(std::size_t x, std::size_t y) { return entries_[x * size_ + y]; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_ = 0;
  std::vector<Integer> entries_;
};

class Semilattice;
Semilattice validate_semilattice(SemilatticeCandidate candidate);

/// A validated, immutable meet semilattice of flats ordered by reverse
/// inclusion. Flats are addressed either by position (0..size()-1) or by
/// their external FlatId; the Möbius table is filled on construction.
class Semilattice {
 public:
  [[nodiscard]] int ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] std::size_t size() const noexcept { return flats_.size(); }
  [[nodiscard]] const std::vector<Flat>& flats() const noexcept { return flats_; }
  [[nodiscard]] const Flat& flat(std::size_t pos) const { return flats_[pos]; }

  [[nodiscard]] std::size_t index_of(FlatId id) const {
    const auto it = by_id_.find(id);
    if (it == by_id_.end()) throw Error(Errc::unknown_flat, "no flat with id " + std::to_string(id));
    return it->second;
  }

  [[nodiscard]] std::optional<std::size_t> find_by_support(const std::vector<std::size_t>& support) const {
    const auto it = by_support_.find(support);
    if (it == by_support_.end()) return std::nullopt;
    return it->second;
  }

  /// X <= Y, i.e. Y is a subset of X.
  [[nodiscard]] bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  [[nodiscard]] int rank_of(std::size_t pos) const { return ambient_dim_ - flats_[pos].dim; }
  /// Largest rank present in the semilattice.
  [[nodiscard]] int rank() const noexcept { return rank_; }
  /// Position of the unique minimum (the whole ambient space).
  [[nodiscard]] std::size_t root() const noexcept { return root_; }

  /// Positions sorted by rank, ties broken by position.
  [[nodiscard]] std::span<const std::size_t> rank_order() const noexcept { return rank_order_; }

  [[nodiscard]] const MobiusTable& mobius_table() const noexcept { return mobius_; }

 private:
  friend Semilattice validate_semilattice(SemilatticeCandidate candidate);
  Semilattice() = default;

  void fill_mobius();

  int ambient_dim_ = 0;
  int rank_ = 0;
  std::size_t root_ = 0;
  std::vector<Flat> flats_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<std::size_t> rank_order_;
  std::unordered_map<FlatId, std::size_t> by_id_;
  std::map<std::vector<std::size_t>, std::size_t> by_support_;
  MobiusTable mobius_;
};

inline void Semilattice::fill_mobius() {
  const std::size_t n = size();
  mobius_ = MobiusTable(n);

  // mu(X, .) over the interval [X, Y] by the defining recursion, visiting Y in
  // rank order so every strictly smaller Z is already known.
  auto fill_row = [this, n](std::size_t x) {
    for (const std::size_t y : rank_order_) {
      if (!up_[x].test(y)) continue;
      if (y == x) {
        mobius_(x, y) = 1;
        continue;
      }
      Integer sum = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (z != y && up_[x].test(z) && up_[z].test(y)) sum += mobius_(x, z);
      mobius_(x, y) = -sum;
    }
  };

  // Rows are independent; split them over workers for large lattices.
  const std::size_t workers = n < 128 ? 1 : std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1) {
    for (std::size_t x = 0; x < n; ++x) fill_row(x);
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t x = w; x < n; x += workers) fill_row(x);
    });
}

/// Closes `leq` transitively, derives ranks and checks that the result is a
/// ranked meet semilattice with a unique minimum of dimension ambient_dim.
/// When no flat carries a support, supports are derived from the atoms.
inline Semilattice validate_semilattice(SemilatticeCandidate candidate) {
  if (candidate.flats.empty()) throw Error(Errc::invalid_input, "semilattice has no flats");
  if (candidate.ambient_dim < 0) throw Error(Errc::invalid_input, "negative ambient dimension");

  Semilattice lat;
  lat.ambient_dim_ = candidate.ambient_dim;
  lat.flats_ = std::move(candidate.flats);
  const std::size_t n = lat.flats_.size();

  for (std::size_t i = 0; i < n; ++i) {
    const Flat& f = lat.flats_[i];
    if (f.dim < 0 || f.dim > lat.ambient_dim_)
      throw Error(Errc::invalid_input, "flat " + std::to_string(f.id) + " has dimension outside [0, ambient_dim]");
    if (!lat.by_id_.emplace(f.id, i).second)
      throw Error(Errc::invalid_input, "duplicate flat id " + std::to_string(f.id));
  }

  lat.up_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) lat.up_[i].set(i);
  for (const auto& [a, b] : candidate.leq) lat.up_[lat.index_of(a)].set(lat.index_of(b));

  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (lat.up_[i].test(k)) lat.up_[i] |= lat.up_[k];

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lat.up_[i].test(j) && lat.up_[j].test(i))
        throw Error(Errc::not_a_partial_order, "flats " + std::to_string(lat.flats_[i].id) + " and " +
                                                   std::to_string(lat.flats_[j].id) + " are mutually below each other");

  std::vector<std::size_t> minima;
  for (std::size_t i = 0; i < n; ++i)
    if (lat.up_[i].all()) minima.push_back(i);
  if (minima.size() != 1) throw Error(Errc::no_minimum, "no unique minimum flat");
  lat.root_ = minima.front();
  if (lat.flats_[lat.root_].dim != lat.ambient_dim_)
    throw Error(Errc::rank_violation, "minimum flat must have dimension ambient_dim");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && lat.up_[i].test(j) && lat.rank_of(i) >= lat.rank_of(j))
        throw Error(Errc::rank_violation, "flat " + std::to_string(lat.flats_[i].id) + " < " +
                                              std::to_string(lat.flats_[j].id) + " without a rank increase");

  std::vector<boost::dynamic_bitset<>> down(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lat.up_[i].test(j)) down[j].set(i);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto lower = down[a] & down[b];
      std::size_t best = lat.root_;
      for (auto z = lower.find_first(); z != boost::dynamic_bitset<>::npos; z = lower.find_next(z))
        if (lat.rank_of(z) > lat.rank_of(best)) best = z;
      if (!lower.is_subset_of(down[best]))
        throw Error(Errc::missing_meet, "flats " + std::to_string(lat.flats_[a].id) + " and " +
                                            std::to_string(lat.flats_[b].id) + " have no greatest lower bound");
    }
  }

  lat.rank_order_.resize(n);
  std::iota(lat.rank_order_.begin(), lat.rank_order_.end(), std::size_t{0});
  std::ranges::stable_sort(lat.rank_order_, {}, [&](std::size_t i) { return lat.rank_of(i); });
  lat.rank_ = lat.rank_of(lat.rank_order_.back());

  const bool abstract = std::ranges::all_of(lat.flats_, [](const Flat& f) { return f.support.empty(); });
  if (abstract) {
    std::vector<std::size_t> atoms;
    for (const std::size_t i : lat.rank_order_)
      if (lat.rank_of(i) == 1) atoms.push_back(i);
    std::ranges::sort(atoms, {}, [&](std::size_t i) { return lat.flats_[i].id; });
    for (std::size_t k = 0; k < atoms.size(); ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (lat.up_[atoms[k]].test(i)) lat.flats_[i].support.push_back(k);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::ranges::sort(lat.flats_[i].support);
    lat.by_support_.emplace(lat.flats_[i].support, i);
  }

  lat.fill_mobius();
  return lat;
}

inline Integer mobius(const Semilattice& lat, FlatId x, FlatId y) {
  return lat.mobius_table()(lat.index_of(x), lat.index_of(y));
}

/// Sum of mu(X,Y) x^{rk X} y^{rk A - rk Y} over comparable pairs.
inline BiPolynomial mobius_polynomial(const Semilattice& lat) {
  BiPolynomial poly;
  const auto& mu = lat.mobius_table();
  for (std::size_t x = 0; x < lat.size(); ++x)
    for (std::size_t y = 0; y < lat.size(); ++y)
      if (lat.leq(x, y)) poly.add(Monomial{lat.rank_of(x), lat.rank() - lat.rank_of(y)}, mu(x, y));
  return poly;
}

/// Evaluates (-1)^rank * M(-x, -1). A negative coefficient means M cannot be
/// the Möbius polynomial of an arrangement and is reported as an error.
inline BiPolynomial f_from_mobius(const BiPolynomial& mobius_poly, int arrangement_rank) {
  BiPolynomial f;
  for (const auto& [m, c] : mobius_poly.terms()) {
    const bool flip = (arrangement_rank + m.x + m.y) % 2 != 0;
    f.add(Monomial{m.x, 0}, flip ? Integer(-c) : c);
  }
  for (const auto& [m, c] : f.terms())
    if (c < 0)
      throw Error(Errc::negative_coefficient,
                  "coefficient " + c.get_str() + " of x^" + std::to_string(m.x) + " in " + to_string(f));
  return f;
}

/// Reads f_0..f_n off an f-polynomial: f_i is the coefficient of x^{n-i}.
inline FVector f_vector_from_polynomial(const BiPolynomial& f, int ambient_dim) {
  FVector out(static_cast<std::size_t>(ambient_dim + 1), Integer(0));
  for (const auto& [m, c] : f.terms()) {
    if (m.y != 0 || m.x > ambient_dim)
      throw Error(Errc::invalid_input, "not an f-polynomial of an arrangement in dimension " +
                                           std::to_string(ambient_dim) + ": " + to_string(f));
    out[static_cast<std::size_t>(ambient_dim - m.x)] = c;
  }
  return out;
}

/// f_i = sum over i-dimensional X of sum_{Y >= X} (-1)^{rk Y - rk X} mu(X,Y).
inline FVector f_vector_from_semilattice(const Semilattice& lat) {
  FVector f(static_cast<std::size_t>(lat.ambient_dim() + 1), Integer(0));
  const auto& mu = lat.mobius_table();
  for (std::size_t x = 0; x < lat.size(); ++x) {
    Integer chambers = 0;
    for (std::size_t y = 0; y < lat.size(); ++y) {
      if (!lat.leq(x, y)) continue;
      if ((lat.rank_of(y) - lat.rank_of(x)) % 2 == 0)
        chambers += mu(x, y);
      else
        chambers -= mu(x, y);
    }
    f[static_cast<std::size_t>(lat.flat(x).dim)] += chambers;
  }
  return f;
}

/// Sum over X of (-1)^{rk X} mu(T, X).
inline Integer chamber_count(const Semilattice& lat) {
  Integer total = 0;
  const auto root = lat.root();
  for (std::size_t x = 0; x < lat.size(); ++x) {
    if (lat.rank_of(x) % 2 == 0)
      total += lat.mobius_table()(root, x);
    else
      total -= lat.mobius_table()(root, x);
  }
  return total;
}

/// Alternating sum f_0 - f_1 + f_2 - ...
inline Integer euler_characteristic(const FVector& f) {
  Integer chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) chi += i % 2 == 0 ? f[i] : Integer(-f[i]);
  return chi;
}

/// The flats above X, re-rooted at X in an ambient space of dimension dim X.
/// Flat ids and supports (indices into the original arrangement) are kept.
inline Semilattice upper_set(const Semilattice& lat, FlatId x_id) {
  const std::size_t x = lat.index_of(x_id);
  SemilatticeCandidate sub;
  sub.ambient_dim = lat.flat(x).dim;
  for (std::size_t y = 0; y < lat.size(); ++y)
    if (lat.leq(x, y)) sub.flats.push_back(lat.flat(y));
  for (const Flat& a : sub.flats)
    for (const Flat& b : sub.flats)
      if (a.id != b.id && lat.leq(lat.index_of(a.id), lat.index_of(b.id))) sub.leq.emplace_back(a.id, b.id);
  return validate_semilattice(std::move(sub));
}

}  // namespace dearr
