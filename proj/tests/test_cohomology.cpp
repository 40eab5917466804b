#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toricdef/cohomology.hpp"
#include "toricdef/fan_io.hpp"
#include "toricdef/tangent.hpp"

using namespace toricdef;

namespace {

Fan fixture(const std::string& name) {
  return *load_fan_file(std::string(FIXTURE_DIR) + "/" + name + ".json").validate().fan;
}

RatVector unit(std::size_t n, std::size_t i, long c = 1) {
  RatVector v = RatVector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(i)) = c;
  return v;
}

}  // namespace

TEST_CASE("degree graph of the threefold example") {
  const Fan fan = fixture("threefold_h1_two");
  const Weight u = weight({0, 0, -1});
  const DegreeGraph g = gamma_graph(fan, 6, u, GraphFlavor::Full);
  CHECK(g.vertices == std::vector<std::size_t>{0, 2, 4});
  CHECK(g.edges.empty());
  CHECK(g.components == 3);
  CHECK(h1_dim_graph(fan, 6, u) == 2);
  CHECK(h1_dim_graph(fan, 6, u, GraphFlavor::Restricted) == 2);
  CHECK(cech_h_dim(fan, 6, u, 1) == 2);
  CHECK(cech_h_dim(fan, 6, u, 2) == 0);
  // off the hyperplane <rho_7, u> = -1 the graph formula gives 0
  CHECK(h1_dim_graph(fan, 6, weight({0, 0, 1})) == 0);
}

TEST_CASE("graph formula and Cech complex agree on surfaces") {
  for (const SurfaceFan& s : surface_corpus(6)) {
    const Fan& fan = s.fan();
    for (const Weight& u : random_degrees(2, 3, 30, 11)) {
      for (std::size_t i = 0; i < fan.num_rays(); ++i) {
        CHECK(h1_dim_graph(fan, i, u) == cech_h_dim(fan, i, u, 1));
        CHECK(cech_h_dim(fan, i, u, 2) == 0);
      }
    }
  }
}

TEST_CASE("H^0 of O(D_i) is one exactly at the lattice points of its polytope") {
  const Fan fan = fixture("f1_blown_up_twice");
  for (const Weight& u : random_degrees(2, 3, 40, 5)) {
    for (std::size_t i = 0; i < fan.num_rays(); ++i) {
      bool inside = true;
      for (std::size_t j = 0; j < fan.num_rays(); ++j) inside = inside && pairing(fan.ray(j), u) >= (i == j ? -1 : 0);
      CHECK(cech_h_dim(fan, i, u, 0) == (inside ? 1u : 0u));
    }
  }
}

TEST_CASE("restricted graph equality in dimensions two and three") {
  for (const char* name : {"threefold_h1_two", "weak_fano_threefold", "f1_blown_up_twice", "hexagon"}) {
    const Fan fan = fixture(name);
    for (const Weight& u : random_degrees(fan.dim(), 2, 60, 3)) {
      for (std::size_t i = 0; i < fan.num_rays(); ++i) {
        if (pairing(fan.ray(i), u) != -1) continue;
        const auto full = gamma_graph(fan, i, u, GraphFlavor::Full).components;
        const auto restricted = gamma_graph(fan, i, u, GraphFlavor::Restricted).components;
        CHECK(full == restricted);
      }
    }
  }
}

TEST_CASE("Cech complex dimension limit") {
  std::vector<LatticeVector> rays;
  for (long k = 0; k < 4; ++k) {
    std::vector<long> e(4, 0);
    e[static_cast<std::size_t>(k)] = 1;
    rays.push_back(lattice_vector(e));
  }
  rays.push_back(lattice_vector({-1, -1, -1, -1}));
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = 0; skip < 5; ++skip) {
    std::vector<std::size_t> c;
    for (std::size_t k = 0; k < 5; ++k)
      if (k != skip) c.push_back(k);
    cones.push_back(c);
  }
  const Fan p4 = Fan::create(4, rays, cones);
  const Weight u = weight({-1, 0, 0, 0});
  try {
    cech_h_dim(p4, 0, u, 1);
    FAIL("expected DIMENSION_LIMIT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionLimit);
  }
  CHECK(cech_h_dim(p4, 0, u, 1, CechOptions{4}) == h1_dim_graph(p4, 0, u));
}

TEST_CASE("coboundary test on F_2") {
  const SurfaceFan f2 = order_surface(hirzebruch(2));
  const Fan& fan = f2.fan();
  const std::size_t l = f2.size();
  const Weight u = weight({-1, -1});
  std::size_t i = 0;
  while (!(fan.ray(i) == lattice_vector({0, 1}))) ++i;
  REQUIRE(h1_dim_graph(fan, i, u) == 1);

  // transitions e_i across (0,1) and -e_i across (0,-1)
  std::vector<RatVector> t(l, RatVector::Zero(static_cast<Eigen::Index>(l)));
  std::size_t down = 0;
  while (!(fan.ray(down) == lattice_vector({0, -1}))) ++down;
  t[i] = unit(l, i);
  t[down] = unit(l, i, -1);
  const BundleCochain c = from_overlaps(f2, u, t);
  const CoboundaryCertificate cert = is_coboundary(fan, c);
  CHECK_FALSE(cert.coboundary);
  CHECK(cert.divisor == i);

  // the functional kills the image of d^0 and not the cochain
  const CechSlice slice(fan, u, cert.divisor, 2);
  RatVector y = RatVector::Zero(static_cast<Eigen::Index>(slice.dim(1)));
  Rational on_cochain = 0;
  for (const auto& [pair, value] : cert.functional) {
    auto idx = slice.index({pair.first, pair.second});
    REQUIRE(idx);
    y(static_cast<Eigen::Index>(*idx)) = value;
    on_cochain += value * c.at(pair.first, pair.second, l)(static_cast<Eigen::Index>(i));
  }
  CHECK((y.transpose() * slice.boundary(0)).isZero());
  CHECK(on_cochain != 0);

  const BundleCochain doubled = from_overlaps(f2, u, {t[0] * 2, t[1] * 2, t[2] * 2, t[3] * 2});
  CHECK(class_rank(fan, u, {c, doubled}) == 1);

  SUBCASE("entries without sections are rejected") {
    std::vector<RatVector> bad(l, RatVector::Zero(static_cast<Eigen::Index>(l)));
    bad[(i + 1) % l] = unit(l, i);
    bad[(i + 3) % l] = unit(l, i, -1);
    CHECK_THROWS_AS(is_coboundary(fan, from_overlaps(f2, u, bad)), Error);
  }
  SUBCASE("transitions must sum to zero") {
    std::vector<RatVector> open(l, RatVector::Zero(static_cast<Eigen::Index>(l)));
    open[i] = unit(l, i);
    CHECK_THROWS_AS(from_overlaps(f2, u, open), Error);
  }
}

TEST_CASE("coboundaries are recognised with a preimage") {
  const SurfaceFan s = order_surface(fixture("f1_blown_up_twice"));
  const Fan& fan = s.fan();
  const std::size_t l = s.size();
  for (const Weight& u : {weight({0, -1}), weight({1, -1}), weight({0, 0}), weight({-1, 0})}) {
    // a 0-cochain supported where sections exist
    std::vector<RatVector> f(l, RatVector::Zero(static_cast<Eigen::Index>(l)));
    for (std::size_t c = 0; c < l; ++c) {
      for (std::size_t i = 0; i < l; ++i) {
        const auto& cone = fan.max_cones()[c].ray_indices;
        bool section = true;
        for (auto j : cone) section = section && pairing(fan.ray(j), u) >= (i == j ? -1 : 0);
        if (section) f[c](static_cast<Eigen::Index>(i)) = Rational(static_cast<long>(c + 2 * i + 1), 3);
      }
    }
    const BundleCochain d = coboundary_of(fan, u, f);
    const CoboundaryCertificate cert = is_coboundary(fan, d);
    REQUIRE(cert.coboundary);
    CHECK(coboundary_of(fan, u, cert.preimage).values == d.values);
    CHECK(class_rank(fan, u, {d}) == 0);
  }
}
