#pragma once

#include <sstream>
#include <string>
#include <variant>

#include "dearr/exactgeom.hpp"
#include "dearr/faces.hpp"
#include "dearr/io.hpp"
#include "dearr/poset.hpp"
#include "dearr/wiring.hpp"

namespace dearr {

/// Builds and validates the intersection semilattice of any input document.
inline Semilattice semilattice_of(const InputDocument& doc) {
  return std::visit(
      [](const auto& payload) -> Semilattice {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, Arrangement>)
          return build_lattice(payload);
        else if constexpr (std::is_same_v<T, WiringDiagram>)
          return lattice_from_wiring(validate_wiring(payload));
        else
          return validate_semilattice(payload);
      },
      doc);
}

/// f-polynomial predicted from the Möbius polynomial.
inline BiPolynomial f_polynomial(const Semilattice& lat) { return f_from_mobius(mobius_polynomial(lat), lat.rank()); }

/// Face counts predicted from the lattice against face counts found by
/// direct enumeration, for one arrangement.
struct VerifyReport {
  std::string kind;
  int ambient_dim = 0;
  int rank = 0;
  BiPolynomial mobius_poly;
  BiPolynomial f_poly_theorem;
  FVector f_vector_theorem;
  FVector f_vector_direct;
  Integer euler;
  bool euler_check = false;
  bool match = false;
};

namespace detail {

inline VerifyReport finish_report(std::string kind, const Semilattice& lat, FVector direct) {
  VerifyReport r;
  r.kind = std::move(kind);
  r.ambient_dim = lat.ambient_dim();
  r.rank = lat.rank();
  r.mobius_poly = mobius_polynomial(lat);
  r.f_poly_theorem = f_from_mobius(r.mobius_poly, r.rank);
  r.f_vector_theorem = f_vector_from_polynomial(r.f_poly_theorem, r.ambient_dim);
  r.f_vector_direct = std::move(direct);
  r.euler = euler_characteristic(r.f_vector_direct);
  r.euler_check = r.euler == (r.ambient_dim % 2 == 0 ? 1 : -1);
  r.match = r.f_vector_theorem == r.f_vector_direct;
  return r;
}

}  // namespace detail

inline VerifyReport verify(const Arrangement& arr, const FaceOptions& options = {}) {
  auto direct = f_vector_oracle(arr, options);
  return detail::finish_report("hyperplanes", build_lattice(arr), std::move(direct));
}

inline VerifyReport verify(const WiringDiagram& w) {
  const auto vw = validate_wiring(w);
  return detail::finish_report("wiring", lattice_from_wiring(vw), sweep_f_vector(vw));
}

inline VerifyReport verify(const InputDocument& doc, const FaceOptions& options = {}) {
  if (const auto* arr = std::get_if<Arrangement>(&doc)) return verify(*arr, options);
  if (const auto* w = std::get_if<WiringDiagram>(&doc)) return verify(*w);
  throw Error(Errc::unsupported_kind, "abstract semilattices have no face oracle");
}

inline Json report_json(const VerifyReport& r) {
  return Json{{"kind", r.kind},
              {"ambient_dim", r.ambient_dim},
              {"rank", r.rank},
              {"mobius_poly", polynomial_json(r.mobius_poly)},
              {"f_poly_theorem", polynomial_json(r.f_poly_theorem)},
              {"f_vector_theorem", f_vector_json(r.f_vector_theorem)},
              {"f_vector_direct", f_vector_json(r.f_vector_direct)},
              {"euler", r.euler.get_str()},
              {"euler_check", r.euler_check},
              {"match", r.match}};
}

inline std::string report_text(const VerifyReport& r) {
  auto join = [](const FVector& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].get_str();
    return s + ")";
  };
  std::ostringstream out;
  out << "kind:             " << r.kind << " (n = " << r.ambient_dim << ", rank = " << r.rank << ")\n"
      << "Mobius:           " << to_string(r.mobius_poly) << "\n"
      << "f from Mobius:    " << to_string(r.f_poly_theorem) << "  " << join(r.f_vector_theorem) << "\n"
      << "f by enumeration: " << join(r.f_vector_direct) << "\n"
      << "Euler:            " << r.euler.get_str() << (r.euler_check ? " ok" : " FAILED") << "\n"
      << "match:            " << (r.match ? "yes" : "NO") << "\n";
  return out.str();
}

}  // namespace dearr
