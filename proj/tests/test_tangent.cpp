#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "toricdef/fan_io.hpp"
#include "toricdef/tangent.hpp"

using namespace toricdef;

namespace {

Fan fixture(const std::string& name) {
  return *load_fan_file(std::string(FIXTURE_DIR) + "/" + name + ".json").validate().fan;
}

std::vector<Weight> degrees(const T1Report& r) {
  std::vector<Weight> out;
  for (const auto& e : r.entries) out.push_back(e.degree);
  return out;
}

// Every nonzero degree in a box, by brute force over the graph formula.
std::set<Weight, LexLess> brute_support(const Fan& fan, long radius) {
  std::set<Weight, LexLess> out;
  for (long x = -radius; x <= radius; ++x)
    for (long y = -radius; y <= radius; ++y)
      if (t1_dim_degree(fan, weight({x, y})).dim > 0) out.insert(weight({x, y}));
  return out;
}

}  // namespace

TEST_CASE("Hirzebruch surfaces") {
  for (long r = 0; r <= 6; ++r) {
    const T1Report rep = t1_total(hirzebruch(r));
    CHECK(rep.total == static_cast<std::size_t>(std::max(0L, r - 1)));
    std::vector<Weight> expected;
    for (long alpha = r - 1; alpha >= 1; --alpha) expected.push_back(weight({-alpha, -1}));
    CHECK(degrees(rep) == expected);
    for (const auto& e : rep.entries) CHECK(e.dim == 1);
  }
}

TEST_CASE("twice blown up F_1") {
  const T1Report rep = t1_total(fixture("f1_blown_up_twice"));
  CHECK(rep.total == 3);
  CHECK(degrees(rep) == std::vector<Weight>{weight({-1, 0}), weight({0, -1}), weight({1, -1})});
  CHECK_FALSE(rep.box_radius);
}

TEST_CASE("the three methods agree") {
  for (const SurfaceFan& s : surface_corpus(6)) {
    const auto support = t1_support(s.fan()).degrees;
    std::vector<Weight> sample = random_degrees(2, 4, 15, 7);
    sample.insert(sample.end(), support.begin(), support.end());
    for (const Weight& u : sample) {
      const T1Entry g = t1_dim_degree(s.fan(), u, T1Method::Graph);
      CHECK(g.dim == t1_dim_degree(s.fan(), u, T1Method::Cech).dim);
      const T1Entry q = t1_dim_degree(s.fan(), u, T1Method::Surface);
      CHECK(g.dim == q.dim);
      CHECK(g.per_ray == q.per_ray);
    }
  }
}

TEST_CASE("exact surface support matches a brute force box") {
  for (const SurfaceFan& s : surface_corpus(6)) {
    const auto exact = t1_support(s.fan()).degrees;
    const auto brute = brute_support(s.fan(), 7);
    CHECK(std::set<Weight, LexLess>(exact.begin(), exact.end()) == brute);
  }
}

TEST_CASE("box mode in dimension three") {
  const Fan fan = fixture("threefold_h1_two");
  try {
    t1_support(fan);
    FAIL("expected BOX_REQUIRED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoxRequired);
  }
  const T1Report rep = t1_total(fan, 3);
  CHECK(rep.total == 2);
  CHECK(degrees(rep) == std::vector<Weight>{weight({0, 0, -1})});
  CHECK(rep.box_radius == 3);
  CHECK(t1_total(fan, 3, T1Method::Cech).total == 2);

  const T1Report parallel = t1_total(fan, 3, T1Method::Graph, 4);
  CHECK(degrees(parallel) == degrees(rep));
  CHECK(t1_total(fixture("weak_fano_threefold"), 3).total == 0);
}

TEST_CASE("T^2 vanishes for surfaces") {
  for (const SurfaceFan& s : surface_corpus(6)) CHECK(t2_surface_check(s.fan(), random_degrees(2, 3, 10, 2)));
}

TEST_CASE("blow-ups do not lose degrees") {
  for (const SurfaceFan& s : surface_corpus(6)) {
    const long l = static_cast<long>(s.size());
    for (long k = 0; k < l; ++k) {
      // the surface fan's own ray indices are its cyclic positions
      const Fan& base = s.fan();
      const Fan blown = star_subdivide(base, {s.wrap(k), s.wrap(k + 1)});
      std::set<Weight, LexLess> support;
      for (const auto& u : t1_support(base).degrees) support.insert(u);
      for (const auto& u : t1_support(blown).degrees) support.insert(u);
      for (const auto& u : support) CHECK(t1_dim_degree(base, u).dim <= t1_dim_degree(blown, u).dim);
    }
  }
}

TEST_CASE("GL(2,Z) invariance of totals") {
  IntMatrix g(2, 2);
  g << 2, 1, 1, 1;
  for (const SurfaceFan& s : surface_corpus(7)) {
    CHECK(t1_total(transform(s.fan(), g)).total == t1_total(s.fan()).total);
  }
}

TEST_CASE("rigidity decisions") {
  const RigidityResult p2 = is_rigid(projective_plane());
  CHECK(p2.verdict == Rigidity::Rigid);
  CHECK(p2.fano == FanoStatus::Fano);

  const RigidityResult f2 = is_rigid(hirzebruch(2));
  CHECK(f2.verdict == Rigidity::NonRigid);
  REQUIRE(f2.witness);
  CHECK(*f2.witness == weight({-1, -1}));
  CHECK(f2.cylinders.size() == 1);

  const RigidityResult weak = is_rigid(fixture("weak_fano_threefold"));
  CHECK(weak.verdict == Rigidity::Rigid);
  CHECK(weak.fano == FanoStatus::WeaklyFano);
  CHECK(weak.cylinders.empty());

  const RigidityResult threefold = is_rigid(fixture("threefold_h1_two"), 2, 1, true);
  CHECK(threefold.verdict == Rigidity::NonRigid);
  CHECK(*threefold.witness == weight({0, 0, -1}));
  CHECK(threefold.doubled_box_agrees == true);
  CHECK(default_box_radius(fixture("threefold_h1_two")) == 3);
}

TEST_CASE("random degrees are reproducible") {
  CHECK(random_degrees(3, 4, 10, 99) == random_degrees(3, 4, 10, 99));
  for (const auto& u : random_degrees(2, 2, 50, 1)) CHECK(u.cwiseAbs().maxCoeff() <= 2);
}
