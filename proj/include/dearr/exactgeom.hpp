#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dearr/error.hpp"
#include "dearr/matrix.hpp"
#include "dearr/poset.hpp"
#include "dearr/rational.hpp"

namespace dearr {

/// The affine hyperplane {x : normal . x = offset}, normalised so that the
/// first nonzero normal entry is 1. P+ is the side normal . x > offset.
class Hyperplane {
 public:
  Hyperplane(std::vector<Rational> normal, Rational offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
    const auto lead = std::ranges::find_if(normal_, [](const Rational& v) { return v != 0; });
    if (lead == normal_.end()) throw Error(Errc::invalid_input, "hyperplane normal is zero");
    const Rational scale = 1 / *lead;
    for (auto& v : normal_) v *= scale;
    offset_ *= scale;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return normal_.size(); }
  [[nodiscard]] const std::vector<Rational>& normal() const noexcept { return normal_; }
  [[nodiscard]] const Rational& offset() const noexcept { return offset_; }

  /// normal . point - offset
  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const {
    Rational value = -offset_;
    for (std::size_t i = 0; i < normal_.size(); ++i) value += normal_[i] * point[i];
    return value;
  }

  /// The row [normal | offset] of an augmented system.
  [[nodiscard]] std::vector<Rational> augmented_row() const {
    std::vector<Rational> row(normal_);
    row.push_back(offset_);
    return row;
  }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.normal_ != b.normal_) return a.normal_ < b.normal_;
    return a.offset_ < b.offset_;
  }

 private:
  std::vector<Rational> normal_;
  Rational offset_;
};

/// A finite set of distinct hyperplanes in R^n, kept in input order.
class Arrangement {
 public:
  Arrangement(int ambient_dim, std::vector<Hyperplane> hyperplanes)
      : ambient_dim_(ambient_dim), hyperplanes_(std::move(hyperplanes)) {
    if (ambient_dim_ < 1) throw Error(Errc::invalid_input, "ambient dimension must be at least 1");
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
      if (hyperplanes_[i].dim() != static_cast<std::size_t>(ambient_dim_))
        throw Error(Errc::dimension_mismatch, "hyperplane " + std::to_string(i) + " has " +
                                                  std::to_string(hyperplanes_[i].dim()) + " coordinates, expected " +
                                                  std::to_string(ambient_dim_));
      for (std::size_t j = 0; j < i; ++j)
        if (hyperplanes_[i] == hyperplanes_[j])
          throw Error(Errc::duplicate_hyperplane,
                      "hyperplanes " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
  }

  [[nodiscard]] int ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] std::size_t size() const noexcept { return hyperplanes_.size(); }
  [[nodiscard]] const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
  [[nodiscard]] const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

 private:
  int ambient_dim_;
  std::vector<Hyperplane> hyperplanes_;
};

/// x = point + sum_k t_k * directions[k]
struct Parametrization {
  std::vector<Rational> point;
  std::vector<std::vector<Rational>> directions;
};

/// A nonempty affine subspace given by its canonical RREF system [E | e]
/// (zero rows dropped). Two flats are equal iff their systems are equal.
class AffineFlat {
 public:
  /// Returns nullopt if the system is inconsistent.
  static std::optional<AffineFlat> from_system(int ambient_dim, RationalMatrix augmented) {
    const auto n = static_cast<std::size_t>(ambient_dim);
    auto reduced = rref(std::move(augmented), n);
    for (std::size_t r = reduced.rank; r < reduced.form.rows(); ++r)
      if (reduced.form(r, n) != 0) return std::nullopt;
    reduced.form.truncate_rows(reduced.rank);

    AffineFlat flat;
    flat.ambient_dim_ = ambient_dim;
    flat.system_ = std::move(reduced);
    if (flat.system_.form.rows() == 0) flat.system_.form = RationalMatrix(0, n + 1);
    return flat;
  }

  [[nodiscard]] int ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] int dim() const noexcept { return ambient_dim_ - static_cast<int>(system_.rank); }
  [[nodiscard]] const RationalMatrix& equations() const noexcept { return system_.form; }
  [[nodiscard]] const std::vector<std::size_t>& support() const noexcept { return support_; }

  /// True if every point of the flat satisfies `row` (an augmented equation).
  [[nodiscard]] bool satisfies(std::span<const Rational> row) const {
    const auto rest = reduce_against(system_, row);
    return std::ranges::all_of(rest, [](const Rational& v) { return v == 0; });
  }

  [[nodiscard]] bool lies_in(const Hyperplane& h) const { return satisfies(h.augmented_row()); }

  [[nodiscard]] bool is_subset_of(const AffineFlat& other) const {
    for (std::size_t r = 0; r < other.system_.rank; ++r)
      if (!satisfies(other.system_.form.row(r))) return false;
    return true;
  }

  /// Intersection with one more hyperplane; nullopt if empty.
  [[nodiscard]] std::optional<AffineFlat> meet(const Hyperplane& h) const {
    RationalMatrix stacked = system_.form;
    stacked.append_row(h.augmented_row());
    return from_system(ambient_dim_, std::move(stacked));
  }

  [[nodiscard]] Parametrization parametrize() const {
    const auto n = static_cast<std::size_t>(ambient_dim_);
    Parametrization p;
    p.point.assign(n, Rational(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < system_.rank; ++r) {
      p.point[system_.pivots[r]] = system_.form(r, n);
      is_pivot[system_.pivots[r]] = true;
    }
    for (std::size_t free = 0; free < n; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> dir(n, Rational(0));
      dir[free] = 1;
      for (std::size_t r = 0; r < system_.rank; ++r) dir[system_.pivots[r]] = -system_.form(r, free);
      p.directions.push_back(std::move(dir));
    }
    return p;
  }

  /// Recomputes the support as every hyperplane of `arr` containing the flat.
  void saturate_support(const Arrangement& arr) {
    support_.clear();
    for (std::size_t i = 0; i < arr.size(); ++i)
      if (lies_in(arr[i])) support_.push_back(i);
  }

  friend bool operator==(const AffineFlat& a, const AffineFlat& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.system_.form == b.system_.form;
  }

 private:
  AffineFlat() = default;

  int ambient_dim_ = 0;
  RrefResult system_;
  std::vector<std::size_t> support_;
};

/// Intersection of the hyperplanes listed in `support`, with the support
/// widened to every hyperplane containing the result. The empty set yields
/// the whole space.
inline std::optional<AffineFlat> intersect(const Arrangement& arr, std::span<const std::size_t> support) {
  const auto n = static_cast<std::size_t>(arr.ambient_dim());
  RationalMatrix system(0, n + 1);
  for (const std::size_t i : support) {
    if (i >= arr.size()) throw Error(Errc::out_of_range, "hyperplane index " + std::to_string(i) + " out of range");
    system.append_row(arr[i].augmented_row());
  }
  auto flat = AffineFlat::from_system(arr.ambient_dim(), std::move(system));
  if (flat) flat->saturate_support(arr);
  return flat;
}

/// Semilattice together with the geometric flat behind each position.
struct HyperplaneLattice {
  std::vector<AffineFlat> flats;
  Semilattice lattice;
};

namespace detail {

inline const std::vector<Rational>& flat_key(const AffineFlat& f) { return f.equations().data(); }

}  // namespace detail

/// Builds L_A level by level: each new flat is a known flat cut by one more
/// hyperplane, deduplicated by canonical system. The order by support
/// inclusion is cross-checked against geometric containment.
inline HyperplaneLattice build_hyperplane_lattice(const Arrangement& arr) {
  std::vector<AffineFlat> flats;
  std::map<std::vector<Rational>, std::size_t> seen;

  flats.push_back(*intersect(arr, {}));
  seen.emplace(detail::flat_key(flats.front()), 0);

  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (const std::size_t f : level) {
      for (std::size_t h = 0; h < arr.size(); ++h) {
        if (std::ranges::binary_search(flats[f].support(), h)) continue;
        auto cut = flats[f].meet(arr[h]);
        if (!cut) continue;
        if (seen.contains(detail::flat_key(*cut))) continue;
        cut->saturate_support(arr);
        seen.emplace(detail::flat_key(*cut), flats.size());
        next.push_back(flats.size());
        flats.push_back(std::move(*cut));
      }
    }
    level = std::move(next);
  }

  SemilatticeCandidate candidate;
  candidate.ambient_dim = arr.ambient_dim();
  for (std::size_t i = 0; i < flats.size(); ++i)
    candidate.flats.push_back(Flat{static_cast<FlatId>(i), flats[i].dim(), flats[i].support()});
  for (std::size_t x = 0; x < flats.size(); ++x) {
    for (std::size_t y = 0; y < flats.size(); ++y) {
      if (x == y) continue;
      const bool by_support = std::ranges::includes(flats[y].support(), flats[x].support());
      if (by_support != flats[y].is_subset_of(flats[x]))
        throw std::logic_error("support order disagrees with containment for flats " + std::to_string(x) + ", " +
                               std::to_string(y));
      if (by_support) candidate.leq.emplace_back(static_cast<FlatId>(x), static_cast<FlatId>(y));
    }
  }
  auto lattice = validate_semilattice(std::move(candidate));
  return HyperplaneLattice{std::move(flats), std::move(lattice)};
}

inline Semilattice build_lattice(const Arrangement& arr) { return build_hyperplane_lattice(arr).lattice; }

/// A^X written in coordinates of X. origins[k] lists the hyperplanes of A
/// that cut X in the k-th restricted hyperplane.
struct Restriction {
  AffineFlat flat;
  int dim = 0;
  std::optional<Arrangement> arrangement;  // absent when dim X == 0
  std::vector<std::vector<std::size_t>> origins;
};

inline Restriction restriction(const Arrangement& arr, const AffineFlat& x) {
  if (x.ambient_dim() != arr.ambient_dim())
    throw Error(Errc::dimension_mismatch, "flat and arrangement live in different dimensions");
  const auto canonical = intersect(arr, x.support());
  if (!canonical || !(*canonical == x) || canonical->support() != x.support())
    throw Error(Errc::flat_not_in_lattice, "flat is not an intersection of arrangement elements");

  Restriction out{x, x.dim(), std::nullopt, {}};
  if (out.dim == 0) return out;

  const auto param = x.parametrize();
  std::map<Hyperplane, std::vector<std::size_t>> grouped;
  std::vector<Hyperplane> order;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (std::ranges::binary_search(x.support(), i)) continue;
    const Hyperplane& h = arr[i];
    std::vector<Rational> normal;
    for (const auto& dir : param.directions) {
      Rational dot = 0;
      for (std::size_t c = 0; c < dir.size(); ++c) dot += h.normal()[c] * dir[c];
      normal.push_back(dot);
    }
    // Parallel to X and not containing it: no intersection.
    if (std::ranges::all_of(normal, [](const Rational& v) { return v == 0; })) continue;
    Hyperplane restricted(std::move(normal), -h.evaluate(param.point));
    auto [it, inserted] = grouped.try_emplace(restricted);
    if (inserted) order.push_back(restricted);
    it->second.push_back(i);
  }
  for (const auto& h : order) out.origins.push_back(grouped.at(h));
  out.arrangement.emplace(out.dim, std::move(order));
  return out;
}

/// The semilattice of A^X, computed in the coordinates of X. Supports are
/// reported as indices of the original arrangement so the result can be
/// compared with upper_set(build_lattice(A), X).
inline Semilattice restrict(const Arrangement& arr, const AffineFlat& x) {
  const auto r = restriction(arr, x);
  SemilatticeCandidate candidate;
  candidate.ambient_dim = r.dim;
  if (!r.arrangement) {
    candidate.flats.push_back(Flat{0, 0, x.support()});
    return validate_semilattice(std::move(candidate));
  }

  const auto inner = build_lattice(*r.arrangement);
  for (const Flat& f : inner.flats()) {
    std::vector<std::size_t> support = x.support();
    for (const std::size_t k : f.support) support.insert(support.end(), r.origins[k].begin(), r.origins[k].end());
    std::ranges::sort(support);
    candidate.flats.push_back(Flat{f.id, f.dim, std::move(support)});
  }
  for (std::size_t a = 0; a < inner.size(); ++a)
    for (std::size_t b = 0; b < inner.size(); ++b)
      if (a != b && inner.leq(a, b)) candidate.leq.emplace_back(inner.flat(a).id, inner.flat(b).id);
  return validate_semilattice(std::move(candidate));
}

}  // namespace dearr
