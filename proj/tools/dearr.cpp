// Command-line front end: Möbius and f-polynomials of arrangements, direct
// face enumeration, per-instance verification and random instances.
//
// Exit codes: 0 success, 1 predicted and enumerated face counts differ,
// 2 usage, parse or validation error.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <variant>

#include "dearr/dearr.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

void print_polynomial(const dearr::BiPolynomial& p, bool text) {
  if (text)
    std::cout << dearr::to_string(p) << "\n";
  else
    std::cout << dearr::polynomial_json(p).dump(2) << "\n";
}

int run_faces(const dearr::InputDocument& doc, const dearr::FaceOptions& options) {
  if (const auto* arr = std::get_if<dearr::Arrangement>(&doc)) {
    const auto faces = dearr::enumerate_faces(*arr, options);
    dearr::FVector f(static_cast<std::size_t>(arr->ambient_dim() + 1), dearr::Integer(0));
    for (const auto& face : faces) f[static_cast<std::size_t>(face.dim)] += 1;
    std::cout << dearr::faces_json(f, faces).dump(2) << "\n";
    return 0;
  }
  if (const auto* w = std::get_if<dearr::WiringDiagram>(&doc)) {
    const auto vw = dearr::validate_wiring(*w);
    std::cout << dearr::faces_json(dearr::sweep_f_vector(vw), dearr::sweep_faces(vw)).dump(2) << "\n";
    return 0;
  }
  throw dearr::Error(dearr::Errc::unsupported_kind, "abstract semilattices have no face oracle");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection semilattices, Möbius polynomials and face counts of arrangements"};
  app.require_subcommand(1);

  dearr::FaceOptions face_options;
  app.add_option("--cap", face_options.cap, "Largest hyperplane count accepted by face enumeration")
      ->capture_default_str();

  std::string input;
  bool text = false;
  bool json = false;

  auto* mobius = app.add_subcommand("mobius", "Print the Möbius polynomial M(x, y)");
  mobius->add_option("file", input, "Input document")->required();
  mobius->add_flag("--text", text, "Print only the polynomial string");

  auto* fpoly = app.add_subcommand("fpoly", "Print the f-polynomial (-1)^rk M(-x, -1)");
  fpoly->add_option("file", input, "Input document")->required();
  fpoly->add_flag("--text", text, "Print only the polynomial string");

  auto* faces = app.add_subcommand("faces", "Enumerate faces directly");
  faces->add_option("file", input, "Input document (hyperplanes or wiring)")->required();

  auto* verify = app.add_subcommand("verify", "Compare predicted and enumerated face counts");
  verify->add_option("file", input, "Input document (hyperplanes or wiring)")->required();
  verify->add_flag("--json", json, "Machine-readable report");

  std::string kind;
  std::uint64_t seed = 0;
  dearr::HyperplaneParams hp;
  dearr::WiringParams wp;
  int crossings = -1;
  auto* gen = app.add_subcommand("gen", "Print a random input document");
  gen->add_option("--kind", kind, "hyperplanes or wiring")->required()->check(CLI::IsMember({"hyperplanes", "wiring"}));
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--dim", hp.dim, "Ambient dimension")->capture_default_str();
  gen->add_option("--count", hp.count, "Number of hyperplanes")->capture_default_str();
  gen->add_option("--bound", hp.bound, "Coefficient bound")->capture_default_str();
  gen->add_option("--wires", wp.wires, "Number of wires")->capture_default_str();
  gen->add_option("--crossings", crossings, "Number of crossing events (random when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*gen) {
      if (kind == "hyperplanes") {
        hp.seed = seed;
        std::cout << dearr::document_json(dearr::generate_arrangement(hp)).dump(2) << "\n";
      } else {
        wp.seed = seed;
        if (crossings >= 0) wp.crossings = crossings;
        std::cout << dearr::document_json(dearr::generate_wiring(wp)).dump(2) << "\n";
      }
      return 0;
    }

    const auto doc = dearr::load_document(input);
    if (*mobius) {
      print_polynomial(dearr::mobius_polynomial(dearr::semilattice_of(doc)), text);
      return 0;
    }
    if (*fpoly) {
      print_polynomial(dearr::f_polynomial(dearr::semilattice_of(doc)), text);
      return 0;
    }
    if (*faces) return run_faces(doc, face_options);
    if (*verify) {
      const auto report = dearr::verify(doc, face_options);
      if (json)
        std::cout << dearr::report_json(report).dump(2) << "\n";
      else
        std::cout << dearr::report_text(report);
      return report.match && report.euler_check ? 0 : kExitMismatch;
    }
  } catch (const dearr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
