#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dearr/rational.hpp"

namespace dearr {

struct Monomial {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Display order: higher total degree first, then higher power of x.
struct DisplayOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.x + a.y != b.x + b.y) return a.x + a.y > b.x + b.y;
    return a.x > b.x;
  }
};

/// Integer polynomial in x and y, kept free of zero coefficients.
class BiPolynomial {
 public:
  using Terms = std::map<Monomial, Integer, DisplayOrder>;

  BiPolynomial() = default;

  static BiPolynomial constant(const Integer& c) {
    BiPolynomial p;
    p.add(Monomial{0, 0}, c);
    return p;
  }

  void add(Monomial m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  [[nodiscard]] Integer coeff(Monomial m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  [[nodiscard]] int degree_x() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
  }

  [[nodiscard]] bool is_univariate_x() const {
    return std::ranges::all_of(terms_, [](const auto& t) { return t.first.y == 0; });
  }

  /// Coefficients of x^0 .. x^degree; only meaningful when univariate in x.
  [[nodiscard]] std::vector<Integer> x_coefficients(int degree) const {
    std::vector<Integer> out(static_cast<std::size_t>(degree + 1), Integer(0));
    for (const auto& [m, c] : terms_)
      if (m.y == 0 && m.x <= degree) out[static_cast<std::size_t>(m.x)] = c;
    return out;
  }

  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

namespace detail {

inline void append_power(std::string& out, char var, int exponent) {
  if (exponent == 0) return;
  out += var;
  if (exponent > 1) out += "^" + std::to_string(exponent);
}

}  // namespace detail

/// Renders as e.g. "x^2 + 2xy + y^2 - 2x - 2y + 1".
inline std::string to_string(const BiPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    const bool constant_term = m.x == 0 && m.y == 0;
    if (constant_term || magnitude != 1) out += magnitude.get_str();
    detail::append_power(out, 'x', m.x);
    detail::append_power(out, 'y', m.y);
  }
  return out;
}

}  // namespace dearr
