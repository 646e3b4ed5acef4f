#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dearr/error.hpp"
#include "dearr/exactgeom.hpp"
#include "dearr/poset.hpp"
#include "dearr/rational.hpp"

namespace dearr {

enum class Sign : std::int8_t { zero = 0, plus = 1, minus = -1 };

using SignVector = std::vector<Sign>;

constexpr char to_char(Sign s) noexcept {
  switch (s) {
    case Sign::zero: return '0';
    case Sign::plus: return '+';
    case Sign::minus: return '-';
  }
  return '?';
}

inline std::string to_string(const SignVector& signs) {
  std::string out;
  out.reserve(signs.size());
  for (const Sign s : signs) out += to_char(s);
  return out;
}

inline SignVector parse_signs(std::string_view text) {
  SignVector out;
  for (const char c : text) {
    switch (c) {
      case '0': out.push_back(Sign::zero); break;
      case '+': out.push_back(Sign::plus); break;
      case '-': out.push_back(Sign::minus); break;
      default: throw Error(Errc::parse_error, std::string("bad sign character '") + c + "'");
    }
  }
  return out;
}

struct FaceRecord {
  SignVector signs;
  int dim = 0;
  FlatId flat = 0;

  friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
};

struct FaceOptions {
  std::size_t cap = 12;  // largest hyperplane count accepted
};

namespace detail {

/// coeffs . t + constant > 0 (strict) or >= 0.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational constant;
  bool strict = true;

  friend auto operator<=>(const LinearConstraint& a, const LinearConstraint& b) {
    if (auto c = a.strict <=> b.strict; c != 0) return c;
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.constant == b.constant) return std::strong_ordering::equal;
    return a.constant < b.constant ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

// Positive rescaling so the first nonzero coefficient is +-1; keeps the
// constraint set small under elimination.
inline LinearConstraint normalized(LinearConstraint c) {
  const auto lead = std::ranges::find_if(c.coeffs, [](const Rational& v) { return v != 0; });
  if (lead == c.coeffs.end()) return c;
  const Rational scale = 1 / abs(*lead);
  for (auto& v : c.coeffs) v *= scale;
  c.constant *= scale;
  return c;
}

inline bool holds_constant(const LinearConstraint& c) { return c.strict ? c.constant > 0 : c.constant >= 0; }

/// Exact Fourier-Motzkin elimination. A combined constraint is strict when
/// either parent is strict.
inline bool fourier_motzkin_feasible(std::vector<LinearConstraint> system, std::size_t vars) {
  std::set<LinearConstraint> current;
  for (auto& c : system) current.insert(normalized(std::move(c)));

  for (std::size_t k = vars; k-- > 0;) {
    std::vector<const LinearConstraint*> lower, upper;
    std::set<LinearConstraint> next;
    for (const auto& c : current) {
      const int s = sgn(c.coeffs[k]);
      if (s > 0)
        lower.push_back(&c);
      else if (s < 0)
        upper.push_back(&c);
      else
        next.insert(c);
    }
    for (const auto* lo : lower) {
      for (const auto* up : upper) {
        const Rational wl = -up->coeffs[k];
        const Rational wu = lo->coeffs[k];
        LinearConstraint combined;
        combined.coeffs.resize(k);
        for (std::size_t i = 0; i < k; ++i) combined.coeffs[i] = wl * lo->coeffs[i] + wu * up->coeffs[i];
        combined.constant = wl * lo->constant + wu * up->constant;
        combined.strict = lo->strict || up->strict;
        next.insert(normalized(std::move(combined)));
      }
    }
    // Drop the eliminated column from the constraints that never had it.
    std::set<LinearConstraint> trimmed;
    for (auto c : next) {
      c.coeffs.resize(k);
      if (std::ranges::all_of(c.coeffs, [](const Rational& v) { return v == 0; })) {
        if (!holds_constant(c)) return false;
        continue;
      }
      trimmed.insert(std::move(c));
    }
    current = std::move(trimmed);
  }
  return std::ranges::all_of(current, holds_constant);
}

/// Decides whether the hyperplanes 0..signs.size()-1 admit a common point
/// with the given signs; the remaining hyperplanes are unconstrained.
inline bool feasible_prefix(const Arrangement& arr, std::span<const Sign> signs, int* dim_out = nullptr) {
  const auto n = static_cast<std::size_t>(arr.ambient_dim());
  RationalMatrix equalities(0, n + 1);
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] == Sign::zero) equalities.append_row(arr[i].augmented_row());
  const auto flat = AffineFlat::from_system(arr.ambient_dim(), std::move(equalities));
  if (!flat) return false;
  if (dim_out) *dim_out = flat->dim();

  const auto param = flat->parametrize();
  std::vector<LinearConstraint> strict;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == Sign::zero) continue;
    const Hyperplane& h = arr[i];
    LinearConstraint c;
    for (const auto& dir : param.directions) {
      Rational dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += h.normal()[j] * dir[j];
      c.coeffs.push_back(dot);
    }
    c.constant = h.evaluate(param.point);
    if (signs[i] == Sign::minus) {
      for (auto& v : c.coeffs) v = -v;
      c.constant = -c.constant;
    }
    strict.push_back(std::move(c));
  }
  return fourier_motzkin_feasible(std::move(strict), param.directions.size());
}

inline void check_cap(const Arrangement& arr, const FaceOptions& options) {
  if (arr.size() > options.cap)
    throw Error(Errc::cap_exceeded, std::to_string(arr.size()) + " hyperplanes exceed the cap of " +
                                        std::to_string(options.cap) + " (raise it with --cap)");
}

constexpr Sign kSignOrder[] = {Sign::zero, Sign::plus, Sign::minus};

}  // namespace detail

/// Exact nonemptiness test for the face with sign vector `signs`.
inline bool feasible(const Arrangement& arr, const SignVector& signs) {
  if (signs.size() != arr.size())
    throw Error(Errc::dimension_mismatch, "sign vector has " + std::to_string(signs.size()) + " entries for " +
                                              std::to_string(arr.size()) + " hyperplanes");
  return detail::feasible_prefix(arr, signs);
}

/// Sign vector and dimension of a face, without reference to any lattice.
struct SignedFace {
  SignVector signs;
  int dim = 0;

  friend bool operator==(const SignedFace&, const SignedFace&) = default;
};

/// Depth-first assignment of 0, +, - to the hyperplanes in input order,
/// abandoning infeasible prefixes. Output is lexicographic with 0 < + < -.
inline std::vector<SignedFace> enumerate_sign_vectors(const Arrangement& arr, const FaceOptions& options = {}) {
  detail::check_cap(arr, options);
  std::vector<SignedFace> out;
  SignVector prefix;
  prefix.reserve(arr.size());

  auto descend = [&](auto&& self) -> void {
    int dim = 0;
    if (!detail::feasible_prefix(arr, prefix, &dim)) return;
    if (prefix.size() == arr.size()) {
      out.push_back(SignedFace{prefix, dim});
      return;
    }
    for (const Sign s : detail::kSignOrder) {
      prefix.push_back(s);
      self(self);
      prefix.pop_back();
    }
  };
  descend(descend);
  return out;
}

/// Tests all 3^m sign vectors, in the same order as enumerate_sign_vectors.
inline std::vector<SignedFace> enumerate_sign_vectors_exhaustive(const Arrangement& arr,
                                                                 const FaceOptions& options = {}) {
  detail::check_cap(arr, options);
  const std::size_t m = arr.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;

  std::vector<SignedFace> out;
  for (std::size_t code = 0; code < total; ++code) {
    SignVector signs(m);
    std::size_t rest = code;
    for (std::size_t i = m; i-- > 0;) {
      signs[i] = detail::kSignOrder[rest % 3];
      rest /= 3;
    }
    int dim = 0;
    if (detail::feasible_prefix(arr, signs, &dim)) out.push_back(SignedFace{std::move(signs), dim});
  }
  return out;
}

/// Every face of `arr`, tagged with the flat of `lattice` spanned by its zero set.
inline std::vector<FaceRecord> enumerate_faces(const Arrangement& arr, const Semilattice& lattice,
                                               const FaceOptions& options = {}) {
  std::vector<FaceRecord> out;
  for (auto& face : enumerate_sign_vectors(arr, options)) {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < face.signs.size(); ++i)
      if (face.signs[i] == Sign::zero) zeros.push_back(i);
    const auto pos = lattice.find_by_support(zeros);
    if (!pos) throw Error(Errc::flat_not_in_lattice, "zero set of face " + to_string(face.signs) + " is not a flat");
    out.push_back(FaceRecord{std::move(face.signs), face.dim, lattice.flat(*pos).id});
  }
  return out;
}

inline std::vector<FaceRecord> enumerate_faces(const Arrangement& arr, const FaceOptions& options = {}) {
  detail::check_cap(arr, options);
  return enumerate_faces(arr, build_lattice(arr), options);
}

/// Histogram of face dimensions: entry i counts the i-faces.
inline FVector f_vector_oracle(const Arrangement& arr, const FaceOptions& options = {}) {
  FVector f(static_cast<std::size_t>(arr.ambient_dim() + 1), Integer(0));
  for (const auto& face : enumerate_sign_vectors(arr, options)) f[static_cast<std::size_t>(face.dim)] += 1;
  return f;
}

inline std::vector<SignVector> chambers(const Arrangement& arr, const FaceOptions& options = {}) {
  std::vector<SignVector> out;
  for (auto& face : enumerate_sign_vectors(arr, options))
    if (std::ranges::none_of(face.signs, [](Sign s) { return s == Sign::zero; })) out.push_back(std::move(face.signs));
  return out;
}

}  // namespace dearr
