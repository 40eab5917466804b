#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "toricdef/fan_io.hpp"
#include "toricdef/lattice_fan.hpp"

using namespace toricdef;

namespace {

std::vector<LatticeVector> rays2(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<LatticeVector> out;
  for (auto [x, y] : pts) out.push_back(lattice_vector({x, y}));
  return out;
}

Fan fixture(const std::string& name) {
  return *load_fan_file(std::string(FIXTURE_DIR) + "/" + name + ".json").validate().fan;
}

IntMatrix gl2(long a, long b, long c, long d) {
  IntMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("standard fans validate") {
  CHECK(projective_plane().num_rays() == 3);
  CHECK(product_of_lines().max_cones().size() == 4);
  for (long r = 0; r <= 6; ++r) CHECK(hirzebruch(r).num_rays() == 4);
  CHECK(fixture("f1_blown_up_twice").num_rays() == 6);
  CHECK(fixture("threefold_h1_two").max_cones().size() == 12);
}

TEST_CASE("validation reports the failed invariant") {
  SUBCASE("non-primitive ray") {
    auto r = validate_fan(2, rays2({{2, 0}, {0, 1}, {-1, -1}}), std::nullopt);
    CHECK(r.has(ErrorCode::NonPrimitiveRay));
  }
  SUBCASE("not smooth") {
    auto r = validate_fan(2, rays2({{1, 0}, {1, 2}, {-1, -1}}), std::nullopt);
    CHECK(r.has(ErrorCode::NotSmooth));
  }
  SUBCASE("not complete") {
    auto r = validate_fan(2, rays2({{1, 0}, {0, 1}}), std::vector<std::vector<std::size_t>>{{0, 1}});
    CHECK(r.has(ErrorCode::NotComplete));
    auto half = validate_fan(2, rays2({{1, 0}, {0, 1}, {-1, 0}}), std::nullopt);
    CHECK(half.has(ErrorCode::NotComplete));
  }
  SUBCASE("overlapping cones") {
    // P^2 cones plus a cone that covers two of them
    auto r = validate_fan(2, rays2({{1, 0}, {0, 1}, {-1, -1}, {1, 1}}),
                          std::vector<std::vector<std::size_t>>{{0, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}});
    CHECK_FALSE(r.ok());
    CHECK(r.has(ErrorCode::NotAFan));
  }
  SUBCASE("duplicate rays") {
    auto r = validate_fan(2, rays2({{1, 0}, {0, 1}, {-1, -1}, {1, 0}}), std::nullopt);
    CHECK(r.has(ErrorCode::NotAFan));
  }
  SUBCASE("literal threefold data is rejected") {
    const FanFile file = load_fan_file(std::string(FIXTURE_DIR) + "/weak_fano_threefold_literal.json");
    CHECK_FALSE(file.validate().ok());
    CHECK(load_fan_file(std::string(FIXTURE_DIR) + "/weak_fano_threefold.json").validate().ok());
  }
  CHECK_THROWS_AS(Fan::create(2, rays2({{1, 0}, {0, 1}})), Error);
}

TEST_CASE("surface ordering") {
  const Fan fan = Fan::create(2, rays2({{0, -1}, {-1, 1}, {1, 0}, {1, 2}, {0, 1}, {1, 1}}));
  const SurfaceFan s = order_surface(fan);
  REQUIRE(s.size() == 6);
  CHECK(s.ray(0) == lattice_vector({1, 0}));
  CHECK(s.ray(1) == lattice_vector({1, 1}));
  CHECK(s.ray(5) == lattice_vector({0, -1}));
  CHECK(s.ray(-1) == s.ray(5));
  for (long k = 0; k < 6; ++k) {
    IntMatrix b(2, 2);
    b.col(0) = s.ray(k);
    b.col(1) = s.ray(k + 1);
    CHECK(determinant(b) == 1);
    CHECK(fan.ray(s.source_index(static_cast<std::size_t>(k))) == s.ray(k));
  }
  CHECK_THROWS_AS(order_surface(fixture("threefold_h1_two")), Error);
}

TEST_CASE("adapted basis") {
  for (long p = -5; p <= 5; ++p) {
    for (long q = -5; q <= 5; ++q) {
      const Weight R = weight({p, q});
      if (!is_primitive(R)) continue;
      const AdaptedBasis b = adapted_basis(R);
      CHECK(determinant(b.on_n) == 1);
      CHECK(b.to_adapted(R) == weight({0, 1}));
      const LatticeVector v = lattice_vector({3, -7});
      CHECK(pairing(b.to_adapted(v), b.to_adapted(R)) == pairing(v, R));
      CHECK(b.from_adapted(b.to_adapted(v)) == v);
    }
  }
}

TEST_CASE("fano status") {
  CHECK(fano_status(projective_plane()) == FanoStatus::Fano);
  CHECK(fano_status(product_of_lines()) == FanoStatus::Fano);
  CHECK(fano_status(hirzebruch(1)) == FanoStatus::Fano);
  CHECK(fano_status(hirzebruch(2)) == FanoStatus::WeaklyFano);
  CHECK(fano_status(hirzebruch(3)) == FanoStatus::Neither);
  CHECK(fano_status(fixture("hexagon")) == FanoStatus::Fano);
  CHECK(fano_status(fixture("f1_blown_up_twice")) == FanoStatus::Neither);
  CHECK(fano_status(fixture("weak_fano_threefold")) == FanoStatus::WeaklyFano);
}

TEST_CASE("A1-cylinder witnesses") {
  CHECK(detect_a1_cylinder(projective_plane()).empty());
  CHECK(detect_a1_cylinder(hirzebruch(1)).empty());
  const Fan f2 = hirzebruch(2);
  const auto w = detect_a1_cylinder(f2);
  REQUIRE(w.size() == 1);
  CHECK(f2.ray(w[0].j) + f2.ray(w[0].k) == 2 * f2.ray(w[0].i));
  CHECK(detect_a1_cylinder(fixture("weak_fano_threefold")).empty());
}

TEST_CASE("iso classes") {
  CHECK(iso_class(order_surface(projective_plane())).cycle == std::vector<Integer>{-1, -1, -1});
  CHECK(iso_class(order_surface(product_of_lines())).cycle == std::vector<Integer>{0, 0, 0, 0});
  for (long r = 1; r <= 6; ++r) {
    CHECK(iso_class(order_surface(hirzebruch(r))).cycle == std::vector<Integer>{-r, 0, r, 0});
    CHECK(iso_class(order_surface(hirzebruch(r))) == iso_class(order_surface(hirzebruch(-r))));
  }
  CHECK(iso_class(order_surface(hirzebruch(2))) != iso_class(order_surface(hirzebruch(4))));
  const auto cycle = self_intersection_cycle(order_surface(fixture("f1_blown_up_twice")));
  Integer sum = 0;
  for (const auto& a : cycle) sum += a;
  // sum of a_i = 3l - 12 for a complete smooth surface fan
  CHECK(sum == 3 * 6 - 12);
}

TEST_CASE("GL(2,Z) invariance of fano status and iso class") {
  const std::vector<IntMatrix> moves{gl2(1, 1, 0, 1), gl2(0, -1, 1, 0), gl2(2, 1, 1, 1), gl2(1, 0, 0, -1)};
  for (const SurfaceFan& s : surface_corpus(6)) {
    for (const IntMatrix& g : moves) {
      const Fan t = transform(s.fan(), g);
      CHECK(fano_status(t) == fano_status(s.fan()));
      CHECK(iso_class(order_surface(t)) == iso_class(s));
      CHECK(detect_a1_cylinder(t).size() == detect_a1_cylinder(s.fan()).size());
    }
  }
}

TEST_CASE("star subdivision") {
  const Fan p2 = projective_plane();
  const Fan blown = star_subdivide(p2, {0, 1});
  CHECK(blown.num_rays() == 4);
  CHECK(iso_class(order_surface(blown)) == iso_class(order_surface(hirzebruch(1))));
  const Fan p3 = Fan::create(3, {lattice_vector({1, 0, 0}), lattice_vector({0, 1, 0}), lattice_vector({0, 0, 1}),
                                 lattice_vector({-1, -1, -1})},
                             std::vector<std::vector<std::size_t>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  const Fan point_blowup = star_subdivide(p3, {0, 1, 2});
  CHECK(point_blowup.max_cones().size() == 6);
  const Fan line_blowup = star_subdivide(p3, {0, 1});
  CHECK(line_blowup.max_cones().size() == 6);
}

TEST_CASE("corpus") {
  const auto corpus = surface_corpus(7);
  std::set<IsoClass> classes;
  for (const auto& s : corpus) {
    CHECK(s.size() <= 7);
    classes.insert(iso_class(s));
  }
  CHECK(classes.size() == corpus.size());
  std::size_t fano = 0;
  for (const auto& s : corpus) fano += fano_status(s.fan()) == FanoStatus::Fano;
  CHECK(fano == 5);
}
