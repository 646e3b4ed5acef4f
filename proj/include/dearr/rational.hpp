#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "dearr/error.hpp"

namespace dearr {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!detail::all_digits(num) || (slash != std::string_view::npos && !detail::all_digits(den)))
    throw Error(Errc::parse_error, "malformed rational '" + std::string(text) + "'");

  Rational value;
  value.get_num() = Integer(std::string(num), 10);
  value.get_den() = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (value.get_den() == 0)
    throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  if (text.front() == '-') value.get_num() = -value.get_num();
  value.canonicalize();
  return value;
}

inline std::string to_string(const Rational& value) { return value.get_str(); }
inline std::string to_string(const Integer& value) { return value.get_str(); }

inline Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  if (!detail::all_digits(body))
    throw Error(Errc::parse_error, "malformed integer '" + std::string(text) + "'");
  return Integer(std::string(text), 10);
}

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace dearr
