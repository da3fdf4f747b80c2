#include <doctest.h>

#include <set>

#include "flipforge/errors.h"
#include "flipforge/graphs.h"
#include "flipforge/phi.h"
#include "flipforge/triangulation.h"
#include "support.h"

using namespace flipforge;

TEST_SUITE("triangulation") {

TEST_CASE("validate accepts and rejects small inputs") {
  const std::vector<Diagonal> square{{0, 2}};
  CHECK(validate(2, square).empty());
  const std::vector<Diagonal> overfull{{0, 2}, {1, 3}};
  CHECK_FALSE(validate(2, overfull).empty());
  const std::vector<Diagonal> fan{{1, 3}, {0, 3}};
  CHECK(validate(3, fan).empty());
  const std::vector<Diagonal> boundary{{1, 2}};
  CHECK_FALSE(validate(2, boundary).empty());
  const std::vector<Diagonal> closing{{0, 3}};
  CHECK_FALSE(validate(2, closing).empty());
  CHECK_THROWS_AS(Triangulation(2, {{0, 2}, {1, 3}}), DomainError);
}

TEST_CASE("ears") {
  CHECK(ears(Triangulation(2, {{0, 2}})) == std::vector<Vertex>{1, 3});
  CHECK(ears(Triangulation(3, {{1, 3}, {0, 3}})) == std::vector<Vertex>{2, 4});
  CHECK(ears(Triangulation(1, {})) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("faces are labelled by their middle vertex") {
  const auto f1 = faces(Triangulation(1, {}));
  REQUIRE(f1.size() == 1);
  CHECK(f1[0] == Face{0, 1, 2});
  const auto f2 = faces(Triangulation(2, {{0, 2}}));
  CHECK(f2 == std::vector<Face>{{0, 1, 2}, {0, 2, 3}});
  const auto f3 = faces(Triangulation(3, {{1, 3}, {0, 3}}));
  for (int i = 0; i < 3; ++i) CHECK(f3[i].label() == i + 1);
}

TEST_CASE("third vertex") {
  CHECK(third_vertex(Triangulation(2, {{0, 2}}), 1) == 0);
  CHECK(third_vertex(Triangulation(2, {{1, 3}}), 1) == 3);
  CHECK(third_vertex(phi({2, 3, 5, 4, 6, 1}), 3) < 3);
  CHECK_THROWS_AS(third_vertex(Triangulation(2, {{0, 2}}), 2), DomainError);
}

TEST_CASE("canonical key") {
  CHECK(canonical_key(Triangulation(2, {{0, 2}})) == "2:0-2");
  CHECK(canonical_key(Triangulation(1, {})) == "1:");
  CHECK(canonical_key(Triangulation(3, {{1, 3}, {0, 3}})) == "3:0-3;1-3");
  std::set<std::string> keys;
  for (const auto& t : enumerate_triangulations(4)) keys.insert(canonical_key(t));
  CHECK(keys.size() == 14);
}

TEST_CASE("structural invariants on every triangulation up to n = 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      CHECK(static_cast<int>(t.diagonals().size()) == n - 1);
      const auto fs = faces(t);
      REQUIRE(static_cast<int>(fs.size()) == n);
      std::set<int> labels;
      for (const Face& f : fs) labels.insert(f.label());
      CHECK(static_cast<int>(labels.size()) == n);
      const auto es = ears(t);
      CHECK(es.size() >= 2);
      if (n >= 2) {
        for (std::size_t i = 0; i + 1 < es.size(); ++i) CHECK(es[i] + 1 != es[i + 1]);
        CHECK_FALSE((es.front() == 0 && es.back() == n + 1));
      }
      // Degree d means d-1 faces, with polygon edges counted in the degree.
      const auto deg = diagonal_degrees(t);
      std::vector<int> incident(t.vertex_count(), 0);
      for (const Face& f : fs) {
        ++incident[f.low];
        ++incident[f.mid];
        ++incident[f.high];
      }
      for (Vertex v = 0; v < t.vertex_count(); ++v) CHECK(incident[v] == deg[v] + 1);
      // Faces agree with the triangles of the edge graph.
      const auto tri = oracle::triangles(t);
      REQUIRE(tri.size() == fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) {
        CHECK(std::find(tri.begin(), tri.end(), std::array<int, 3>{fs[i].low, fs[i].mid, fs[i].high}) !=
              tri.end());
      }
    }
  }
}

TEST_CASE("enumeration agrees with a subset search and the Catalan numbers") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_triangulations(n);
    CHECK(all.size() == catalan(n));
    std::set<Triangulation> by_subsets;
    for (auto& ds : oracle::triangulations_by_subsets(n)) by_subsets.emplace(n, ds);
    CHECK(std::set<Triangulation>(all.begin(), all.end()) == by_subsets);
  }
  CHECK(enumerate_triangulations(8).size() == 1430);
}

TEST_CASE("is_simple agrees with the definition for n <= 5, p <= 3") {
  std::size_t simple = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_triangulations(n);
    for (const auto& w : oracle::words(n, 3)) {
      const Coloring eps(w);
      for (const Triangulation& t : all) {
        const bool got = is_simple(t, eps);
        CHECK(got == oracle::simple_by_definition(t, eps));
        simple += got;
      }
    }
  }
  CHECK(simple > 0);
}

TEST_CASE("simplicity examples") {
  CHECK(is_simple(big_phi({2, 2, 3, 2, 3, 1})));
  // Diagonal 1-3 joins two vertices colored alike.
  CHECK_FALSE(is_simple(Triangulation(3, {{1, 3}, {0, 3}}), Coloring({1, 1, 1})));
  // Distinct increasing colors: only the diagonal and run conditions are vacuous.
  for (const Triangulation& t : enumerate_triangulations(4)) CHECK(is_simple(t, Coloring({1, 2, 3, 4})));
}

TEST_CASE("coloring helpers") {
  const std::vector<int> mu{1, 3, 2};
  CHECK(block_coloring(mu).values() == std::vector<int>{1, 2, 2, 2, 3, 3});
  CHECK(Coloring({1, -1}).negated().values() == std::vector<int>{-1, 1});
  CHECK(Coloring({1, -1}).is_signing());
  CHECK_FALSE(Coloring({2, 1}).is_increasing());
}

}
