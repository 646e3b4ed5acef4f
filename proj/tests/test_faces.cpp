#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "dearr/faces.hpp"
#include "oracle/planar_sampling.hpp"
#include "support.hpp"

using namespace dearr;
using testing::arrangement;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::invalid_input;
}

std::map<std::string, int> as_map(const std::vector<SignedFace>& faces) {
  std::map<std::string, int> out;
  for (const auto& f : faces) out.emplace(to_string(f.signs), f.dim);
  return out;
}

std::vector<oracle::Line> lines_of(const Arrangement& arr) {
  std::vector<oracle::Line> out;
  for (const auto& h : arr.hyperplanes()) out.push_back({h.normal()[0], h.normal()[1], h.offset()});
  return out;
}

}  // namespace

TEST_CASE("feasible", "[faces]") {
  const auto axes = testing::axes();
  CHECK(feasible(axes, parse_signs("++")));
  CHECK(feasible(axes, parse_signs("00")));
  CHECK(feasible(axes, parse_signs("-0")));

  const auto parallel = arrangement(2, {{"1", "0", "0"}, {"1", "0", "1"}});
  CHECK_FALSE(feasible(parallel, parse_signs("-+")));
  CHECK_FALSE(feasible(parallel, parse_signs("00")));
  CHECK(feasible(parallel, parse_signs("+-")));

  // x > 0, y > 0, x + y < 1 is the open triangle; x + y < 0 cannot hold with the first two.
  const auto generic = testing::generic3();
  CHECK(feasible(generic, parse_signs("++-")));
  CHECK(feasible(generic, parse_signs("++0")));
  CHECK_FALSE(feasible(arrangement(2, {{"1", "0", "0"}, {"0", "1", "0"}, {"1", "1", "0"}}), parse_signs("++-")));

  CHECK(error_of([&] { feasible(axes, parse_signs("+")); }) == Errc::dimension_mismatch);
  CHECK(error_of([] { parse_signs("+x"); }) == Errc::parse_error);
}

TEST_CASE("enumerate_faces", "[faces]") {
  const auto empty = enumerate_faces(testing::empty_plane());
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].signs.empty());
  CHECK(empty[0].dim == 2);

  const auto axes = enumerate_faces(testing::axes());
  CHECK(axes.size() == 9);
  CHECK(std::ranges::count(axes, 0, &FaceRecord::dim) == 1);
  CHECK(std::ranges::count(axes, 1, &FaceRecord::dim) == 4);
  CHECK(std::ranges::count(axes, 2, &FaceRecord::dim) == 4);
  // order 0 < + < -
  CHECK(to_string(axes.front().signs) == "00");
  CHECK(to_string(axes[1].signs) == "0+");
  CHECK(to_string(axes.back().signs) == "--");

  const auto concurrent = enumerate_faces(testing::concurrent3());
  CHECK(concurrent.size() == 13);

  // faces sharing a zero set sit on the same flat
  const auto lat = build_lattice(testing::axes());
  for (const auto& face : axes) {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < face.signs.size(); ++i)
      if (face.signs[i] == Sign::zero) zeros.push_back(i);
    CHECK(lat.flat(*lat.find_by_support(zeros)).id == face.flat);
    CHECK(lat.flat(*lat.find_by_support(zeros)).dim == face.dim);
  }
}

TEST_CASE("f_vector_oracle and chambers", "[faces]") {
  CHECK(f_vector_oracle(testing::axes()) == testing::fv({1, 4, 4}));
  CHECK(f_vector_oracle(arrangement(2, {{"1", "1", "0"}, {"1", "-1", "2"}})) == testing::fv({1, 4, 4}));
  CHECK(f_vector_oracle(testing::generic3()) == testing::fv({3, 9, 7}));
  CHECK(f_vector_oracle(arrangement(1, {{"2", "3/2"}})) == testing::fv({1, 2}));

  CHECK(chambers(testing::empty_plane()).size() == 1);
  CHECK(chambers(testing::concurrent3()).size() == 6);
  CHECK(chambers(testing::generic3()).size() == 7);
}

TEST_CASE("hyperplane cap", "[faces]") {
  const auto lines = testing::tangent_lines(5);
  CHECK(error_of([&] { enumerate_sign_vectors(lines, FaceOptions{4}); }) == Errc::cap_exceeded);
  CHECK(error_of([&] { f_vector_oracle(lines, FaceOptions{4}); }) == Errc::cap_exceeded);
  CHECK(f_vector_oracle(lines, FaceOptions{5}) == testing::fv({10, 25, 16}));
}

TEST_CASE("planar witness points agree with elimination", "[faces][property]") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    CAPTURE(seed);
    HyperplaneParams p;
    p.seed = seed;
    p.dim = 2;
    p.count = 1 + static_cast<int>(seed % 6);
    p.bound = 2;
    const auto arr = generate_arrangement(p);
    CHECK(as_map(enumerate_sign_vectors(arr)) == oracle::planar_faces(lines_of(arr)));
  }
  for (int m = 0; m <= 6; ++m) {
    const auto arr = testing::tangent_lines(m);
    CHECK(as_map(enumerate_sign_vectors(arr)) == oracle::planar_faces(lines_of(arr)));
  }
}

TEST_CASE("face invariants on random arrangements", "[faces][property]") {
  std::mt19937_64 shuffler(2024);
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    CAPTURE(seed);
    const auto arr = testing::random_arrangement(seed);
    const auto lat = build_lattice(arr);
    const auto faces = enumerate_faces(arr, lat);
    const auto pruned = enumerate_sign_vectors(arr);

    // pruned search and full 3^m scan agree, order included
    CHECK(pruned == enumerate_sign_vectors_exhaustive(arr));

    const auto f = f_vector_oracle(arr);
    CHECK(f == f_vector_from_semilattice(lat));
    CHECK(euler_characteristic(f) == (arr.ambient_dim() % 2 == 0 ? 1 : -1));
    CHECK(Integer(static_cast<unsigned long>(chambers(arr).size())) == chamber_count(lat));

    // faces on flat X are the chambers of the restriction to X
    std::map<FlatId, long> per_flat;
    for (const auto& face : faces) ++per_flat[face.flat];
    for (const auto& flat : lat.flats())
      CHECK(Integer(per_flat[flat.id]) == chamber_count(upper_set(lat, flat.id)));

    // relabelling hyperplanes permutes sign vectors consistently
    std::vector<std::size_t> perm(arr.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), shuffler);
    std::vector<Hyperplane> permuted;
    for (const auto i : perm) permuted.push_back(arr[i]);
    const Arrangement shuffled(arr.ambient_dim(), permuted);
    for (const auto& face : pruned) {
      SignVector moved;
      for (const auto i : perm) moved.push_back(face.signs[i]);
      CHECK(feasible(shuffled, moved));
    }
    CHECK(enumerate_sign_vectors(shuffled).size() == pruned.size());
  }
}

TEST_CASE("fourier_motzkin_feasible keeps strictness", "[faces]") {
  using detail::LinearConstraint;
  // t > 0 and -t >= 0 is empty; t >= 0 and -t >= 0 is the point 0.
  CHECK_FALSE(detail::fourier_motzkin_feasible({{{1}, 0, true}, {{-1}, 0, false}}, 1));
  CHECK(detail::fourier_motzkin_feasible({{{1}, 0, false}, {{-1}, 0, false}}, 1));
  // 0 < t < 1/2 and 0 < s < t
  CHECK(detail::fourier_motzkin_feasible(
      {{{1, 0}, 0, true}, {{-1, 0}, Rational(1, 2), true}, {{0, 1}, 0, true}, {{1, -1}, 0, true}}, 2));
  CHECK_FALSE(detail::fourier_motzkin_feasible({{{1, 0}, 0, true}, {{-1, 0}, 0, true}, {{0, 1}, 0, true}}, 2));
}
