#include <doctest.h>

#include <set>

#include "flipforge/errors.h"
#include "flipforge/graphs.h"
#include "flipforge/heawood.h"
#include "flipforge/phi.h"
#include "flipforge/signing.h"

using namespace flipforge;

namespace {

Permutation digits(const std::string& s) {
  Permutation p;
  for (char c : s) p.push_back(c - '0');
  return p;
}

SphereTriangulation signed_sphere(const Triangulation& north, const Coloring& ns,
                                  const Triangulation& south, const Coloring& ss) {
  SphereTriangulation s = glue(north, south);
  s.signs = SphereSigning{ns, ss};
  return s;
}

// Brute force: does any total signing of the sphere pass the mod-3 check?
bool some_heawood_signing(const SphereTriangulation& base) {
  const int n = base.n();
  for (unsigned long long m = 0; m < (1ULL << (2 * n)); ++m) {
    SphereTriangulation s = base;
    s.signs = SphereSigning{signing_from_mask(n, m & ((1ULL << n) - 1)), signing_from_mask(n, m >> n)};
    if (is_heawood(s)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("heawood") {

TEST_CASE("gluing") {
  const SphereTriangulation tri = glue(Triangulation(1, {}), Triangulation(1, {}));
  CHECK(tri.vertex_count() == 3);
  CHECK(faces(tri.north).size() + faces(tri.south).size() == 2);
  CHECK(sphere_edges(tri).size() == 3);
  const SphereTriangulation oct = glue(phi(digits("324156")), phi(digits("453126")));
  CHECK(oct.vertex_count() == 8);
  CHECK(faces(oct.north).size() + faces(oct.south).size() == 12);
  CHECK_THROWS_AS(glue(Triangulation(1, {}), Triangulation(2, {{0, 2}})), DomainError);
}

TEST_CASE("incidence counts follow the degree formula") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_triangulations(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const SphereTriangulation s = glue(a, b);
        const auto count = incident_face_counts(s);
        const auto da = diagonal_degrees(a);
        const auto db = diagonal_degrees(b);
        for (Vertex v = 0; v < s.vertex_count(); ++v) CHECK(count[v] == (da[v] + 1) + (db[v] + 1));
      }
    }
  }
}

TEST_CASE("mirror signings are Heawood, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_triangulations(n)) {
      for (unsigned long long m = 0; m < (1ULL << n); m += (n <= 4 ? 1 : 7)) {
        const Coloring eps = signing_from_mask(n, m);
        CHECK(is_heawood(signed_sphere(t, eps, t, eps.negated())));
      }
    }
  }
}

TEST_CASE("the all-plus doubled square is not Heawood") {
  const Triangulation t(2, {{0, 2}});
  const auto bad = heawood_violations(signed_sphere(t, Coloring({1, 1}), t, Coloring({1, 1})));
  // Vertices 0 and 2 lie on four faces, 1 and 3 on two.
  CHECK(bad == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_THROWS_AS(heawood_violations(glue(t, t)), DomainError);
}

TEST_CASE("the example sphere") {
  const Triangulation north = phi(digits("453126"));
  const Triangulation south = phi(digits("324156"));
  // End signs of the example chain on the north, negated start signs on the south.
  const SphereTriangulation s = signed_sphere(north, Coloring({1, 1, 1, -1, -1, 1}), south,
                                              Coloring({-1, -1, 1, 1, -1, -1}));
  CHECK(is_heawood(s));
  auto colors = four_color(s);
  REQUIRE(colors);
  CHECK(verify_coloring(s, *colors));
}

TEST_CASE("four coloring") {
  const SphereTriangulation tri = glue(Triangulation(1, {}), Triangulation(1, {}));
  auto c = four_color(tri);
  REQUIRE(c);
  CHECK(verify_coloring(tri, *c));
  CHECK(std::set<int>(c->begin(), c->end()).size() == 3);
  CHECK_FALSE(verify_coloring(tri, {0, 0, 0}));
  CHECK_FALSE(verify_coloring(tri, {0, 1}));
  CHECK_FALSE(verify_coloring(tri, {0, 1, 4}));

  const SphereTriangulation s = glue(phi(digits("2143")), phi(digits("4321")));
  auto good = four_color(s);
  REQUIRE(good);
  std::vector<int> broken = *good;
  const Diagonal d = s.south.diagonals().front();
  broken[d.hi] = broken[d.lo];
  auto conflict = coloring_conflict(s, broken);
  REQUIRE(conflict);
  CHECK(broken[conflict->lo] == broken[conflict->hi]);
}

TEST_CASE("generic coloring search can fail") {
  std::vector<std::vector<int>> k5(5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a != b) k5[a].push_back(b);
  CHECK_FALSE(color_graph(k5, 4, 1000));
  CHECK(color_graph(k5, 5, 1000));
  CHECK_THROWS_AS(color_graph(k5, 4, 2), CapExceeded);
}

TEST_CASE("Heawood signings and four colorings co-occur, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_triangulations(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const SphereTriangulation s = glue(a, b);
        auto colors = four_color(s);
        REQUIRE(colors);
        CHECK(verify_coloring(s, *colors));
        SphereTriangulation derived = s;
        derived.signs = heawood_signing_from_coloring(s, *colors);
        CHECK(is_heawood(derived));
        CHECK(some_heawood_signing(s));
      }
    }
  }
}

TEST_CASE("every sphere up to n = 5 is four colorable") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_triangulations(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const SphereTriangulation s = glue(a, b);
        auto colors = four_color(s);
        REQUIRE(colors);
        CHECK(verify_coloring(s, *colors));
      }
  }
}

TEST_CASE("signed flips in the north keep a sphere Heawood, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const auto all = enumerate_triangulations(n);
    for (const auto& t : all) {
      for (unsigned long long m = 0; m < (1ULL << n); ++m) {
        const Coloring eps = signing_from_mask(n, m);
        SphereTriangulation s = signed_sphere(t, eps, t, eps.negated());
        REQUIRE(is_heawood(s));
        for (const SignedState& st : sigma_closure({t, eps}).states) {
          SphereTriangulation moved = signed_sphere(st.triangulation, st.coloring, t, eps.negated());
          CHECK(is_heawood(moved));
        }
      }
    }
  }
}

}
