#include <doctest.h>

#include <map>
#include <set>

#include "flipforge/errors.h"
#include "flipforge/graphs.h"
#include "flipforge/phi.h"
#include "flipforge/signing.h"
#include "support.h"

using namespace flipforge;

namespace {

Permutation digits(const std::string& s) {
  Permutation p;
  for (char c : s) p.push_back(c - '0');
  return p;
}

const std::vector<SignedWord> kPaperChain{
    {-3, 2, -4, 1, 5, 6},   {-3, 2, -4, -5, -1, 6}, {-3, 2, 5, 4, -1, 6},
    {-3, 5, 2, 4, -1, 6},   {-3, 5, -4, -2, -1, 6}, {5, -3, -4, -2, -1, 6},
    {5, 4, 3, -2, -1, 6},   {-4, -5, 3, -2, -1, 6}, {-4, -5, 3, 1, 2, 6}};
const std::vector<StepKind> kPaperKinds{StepKind::K2, StepKind::K2, StepKind::K1, StepKind::K2,
                                        StepKind::K1, StepKind::K2, StepKind::K2, StepKind::K2};

}  // namespace

TEST_SUITE("signing") {

TEST_CASE("closures") {
  const ClosureReport one = sigma_closure({Triangulation(1, {}), Coloring({1})});
  CHECK(one.states.size() == 1);
  const ClosureReport two = sigma_closure({Triangulation(2, {{0, 2}}), Coloring({1, 1})});
  REQUIRE(two.states.size() == 2);
  CHECK(two.states[1] == SignedState{Triangulation(2, {{1, 3}}), Coloring({-1, -1})});
  CHECK(two.conflicts == 0);
  CHECK_THROWS_AS(sigma_closure({phi(digits("123456")), Coloring::constant(6, 1)}, 3), CapExceeded);
}

TEST_CASE("no closure holds a triangulation twice, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      for (unsigned long long m = 0; m < (1ULL << n); ++m) {
        const ClosureReport r = sigma_closure({t, signing_from_mask(n, m)});
        CHECK(r.conflicts == 0);
        std::set<Triangulation> underlying;
        for (const auto& s : r.states) underlying.insert(s.triangulation);
        CHECK(underlying.size() == r.states.size());
      }
    }
  }
}

TEST_CASE("step classification") {
  auto k2 = classify_step({-3, 2, -4, 1, 5, 6}, {-3, 2, -4, -5, -1, 6});
  REQUIRE(k2);
  CHECK(k2->kind == StepKind::K2);
  CHECK(k2->alpha == 1);
  CHECK(k2->gamma == 5);
  auto k1 = classify_step({-3, 2, 5, 4, -1, 6}, {-3, 5, 2, 4, -1, 6});
  REQUIRE(k1);
  CHECK(k1->kind == StepKind::K1);
  REQUIRE(k1->beta);
  CHECK(*k1->beta == 4);
  const SignedWord w{-3, 2, -4, 1, 5, 6};
  CHECK_FALSE(classify_step(w, w));
  // Opposite signs cannot be barred together.
  CHECK_FALSE(classify_step({1, -2}, {2, -1}));
  // A later letter between the two blocks the signed transposition.
  CHECK_FALSE(classify_step({1, 3, 2}, {-3, -1, 2}));
  // A sylvester swap with a sign change is neither kind.
  auto syl = classify_step({3, 1, 2}, {1, 3, 2});
  REQUIRE(syl);
  CHECK(syl->kind == StepKind::K1);
  CHECK_FALSE(classify_step({3, 1, 2}, {1, -3, 2}));
}

TEST_CASE("the worked example chain validates") {
  const CertificateCheck c = validate_certificate({kPaperChain, kPaperKinds});
  CHECK(c.ok);
  CHECK(c.start == digits("324156"));
  CHECK(c.end == digits("453126"));
  CHECK(validate_certificate({{{-3, 2, -4, 1, 5, 6}}, {}}).ok);
}

TEST_CASE("invalid certificates report the first bad step") {
  // Opposite signs on the swapped pair.
  Certificate bad{{{1, -2, 3}, {2, -1, 3}}, {StepKind::K2}};
  CertificateCheck c = validate_certificate(bad);
  CHECK_FALSE(c.ok);
  CHECK(c.bad_step == 0);
  CHECK(c.reason.find("opposite signs") != std::string::npos);

  Certificate mislabeled{kPaperChain, kPaperKinds};
  mislabeled.kinds[2] = StepKind::K2;
  c = validate_certificate(mislabeled);
  CHECK_FALSE(c.ok);
  CHECK(c.bad_step == 2);

  Certificate short_kinds{kPaperChain, {StepKind::K2}};
  CHECK_FALSE(validate_certificate(short_kinds).ok);
}

TEST_CASE("signable path search") {
  auto same = signable_path_search(Triangulation(2, {{0, 2}}), Triangulation(2, {{0, 2}}));
  REQUIRE(same);
  CHECK(same->flips.empty());
  CHECK(same->start_signs() == same->end_signs());

  auto square = signable_path_search(Triangulation(2, {{0, 2}}), Triangulation(2, {{1, 3}}));
  REQUIRE(square);
  CHECK(square->flips.size() == 1);
  CHECK(square->start_signs().values() == std::vector<int>{1, 1});
  CHECK(square->end_signs().values() == std::vector<int>{-1, -1});

  const Triangulation from = phi(digits("324156"));
  const Triangulation to = phi(digits("453126"));
  auto path = signable_path_search(from, to);
  REQUIRE(path);
  CHECK(path->flips.size() <= 6);
  CHECK(path->states.front().triangulation == from);
  CHECK(path->states.back().triangulation == to);
  for (std::size_t i = 0; i < path->flips.size(); ++i) {
    CHECK(signed_flip(path->states[i], path->flips[i]) == path->states[i + 1]);
  }
  CHECK_THROWS_AS(signable_path_search(from, to, 5), CapExceeded);
}

TEST_CASE("the example's signed flips are a signed path of six flips") {
  std::vector<Triangulation> tris;
  for (const SignedWord& w : kPaperChain) {
    Triangulation t = phi(abs_word(w));
    if (tris.empty() || tris.back() != t) tris.push_back(t);
  }
  CHECK(tris.size() == 7);
  Coloring eps = Coloring::constant(6, 1);
  for (int v : kPaperChain.front()) eps.set(std::abs(v), v > 0 ? 1 : -1);
  SignedState s{tris.front(), eps};
  for (std::size_t i = 0; i + 1 < tris.size(); ++i) {
    auto next = signed_flip(s, *flip_between(tris[i], tris[i + 1]));
    REQUIRE(next);
    s = *next;
  }
  for (int v : kPaperChain.back()) CHECK(s.coloring.color_of(std::abs(v)) == (v > 0 ? 1 : -1));
}

TEST_CASE("emitted certificates validate") {
  auto square = signable_path_search(Triangulation(2, {{0, 2}}), Triangulation(2, {{1, 3}}));
  REQUIRE(square);
  const Certificate small = emit_word_certificate(*square);
  CHECK(small.chain == std::vector<SignedWord>{{1, 2}, {-2, -1}});

  auto same = signable_path_search(Triangulation(2, {{0, 2}}), Triangulation(2, {{0, 2}}));
  CHECK(emit_word_certificate(*same).chain.size() == 1);

  const Triangulation from = phi(digits("324156"));
  const Triangulation to = phi(digits("453126"));
  const Certificate cert = emit_word_certificate(*signable_path_search(from, to));
  const CertificateCheck check = validate_certificate(cert);
  CHECK(check.ok);
  CHECK(phi(check.start) == from);
  CHECK(phi(check.end) == to);

  for (int n = 2; n <= 4; ++n) {
    const auto all = enumerate_triangulations(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        auto p = signable_path_search(a, b);
        REQUIRE(p);
        const CertificateCheck ch = validate_certificate(emit_word_certificate(*p));
        CHECK(ch.ok);
        CHECK(phi(ch.start) == a);
        CHECK(phi(ch.end) == b);
      }
    }
  }
}

TEST_CASE("diagonal-signing procedure") {
  const std::vector<Triangulation> single{Triangulation(2, {{0, 2}})};
  const PathSigning one = sign_path_diagonals(single);
  CHECK(one.signable);
  REQUIRE(one.signings.size() == 1);
  CHECK(one.completed == std::vector<Diagonal>{{0, 2}});

  const std::vector<Triangulation> bad{Triangulation(3, {{0, 2}, {0, 3}}), Triangulation(3, {{1, 3}, {1, 4}})};
  CHECK_THROWS_AS(sign_path_diagonals(bad), DomainError);
}

TEST_CASE("paths that never flip a created diagonal are signable") {
  std::size_t covered = 0;
  for (const auto& path : oracle::loop_free_paths(4, 4)) {
    std::set<Diagonal> created;
    bool short_chains = true;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const FlipQuad q = flip_quad(path[i], *flip_between(path[i], path[i + 1]));
      short_chains &= !created.count(q.removed);
      created.insert(q.added);
    }
    if (!short_chains) continue;
    ++covered;
    CHECK(sign_path_diagonals(path).signable);
  }
  CHECK(covered > 0);
}

TEST_CASE("a re-flip after a sign change is refused") {
  // Search n = 4 for a short path refused by the procedure.
  bool found = false;
  for (const auto& path : oracle::loop_free_paths(4, 4)) {
    const PathSigning r = sign_path_diagonals(path);
    if (r.signable) continue;
    found = true;
    CHECK(r.failed_step < path.size() - 1);
    // The refused diagonal was created earlier in the path.
    const Diagonal d = *flip_between(path[r.failed_step], path[r.failed_step + 1]);
    bool created = false;
    for (std::size_t i = 0; i < r.failed_step; ++i) {
      created |= flip_quad(path[i], *flip_between(path[i], path[i + 1])).added == d;
    }
    CHECK(created);
    // Prefixes ending before the refused step stay signable.
    std::vector<Triangulation> prefix(path.begin(), path.begin() + r.failed_step + 1);
    CHECK(sign_path_diagonals(prefix).signable);
  }
  CHECK(found);
}

TEST_CASE("successful signings are signed flip sequences") {
  for (const auto& path : oracle::loop_free_paths(5, 3)) {
    const PathSigning r = sign_path_diagonals(path);
    if (!r.signable) continue;
    REQUIRE(r.signings.size() == path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      CHECK(r.signings[i].base == path[i]);
      CHECK(r.signings[i].signs.size() == path[i].diagonals().size());
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto next = signed_flip_diagonal(r.signings[i], *flip_between(path[i], path[i + 1]));
      REQUIRE(next);
      CHECK(*next == r.signings[i + 1]);
    }
  }
}

TEST_CASE("decision procedures agree on loop-free paths, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& path : oracle::loop_free_paths(n, n <= 4 ? 5 : 3)) {
      const bool by_diagonals = sign_path_diagonals(path).signable;
      const auto by_faces = signable_by_face_signs(path);
      CHECK(by_diagonals == by_faces.has_value());
      // Subpaths of signable paths are signable.
      if (by_diagonals && path.size() > 2) {
        std::vector<Triangulation> tail(path.begin() + 1, path.end());
        CHECK(sign_path_diagonals(tail).signable);
        std::vector<Triangulation> head(path.begin(), path.end() - 1);
        CHECK(sign_path_diagonals(head).signable);
      }
    }
  }
}

TEST_CASE("word procedure agrees with the face simulation on Cayley paths") {
  const auto perms = oracle::permutations(4);
  std::size_t signable = 0;
  std::size_t refused = 0;
  std::vector<Permutation> path;
  auto rec = [&](auto&& self) -> void {
    const PermutationPathSigning w = sign_permutation_path(path);
    std::vector<Triangulation> tris;
    for (const auto& p : path) {
      Triangulation t = phi(p);
      if (tris.empty() || tris.back() != t) tris.push_back(t);
    }
    CHECK(w.signable == signable_by_face_signs(tris).has_value());
    if (w.signable) {
      ++signable;
      REQUIRE(w.words.size() == path.size());
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        CHECK(abs_word(w.words[i]) == path[i]);
        if (phi(path[i]) == phi(path[i + 1])) {
          auto s = classify_step(w.words[i], w.words[i + 1]);
          REQUIRE(s);
          CHECK(s->kind == StepKind::K1);
        } else {
          auto s = classify_step(w.words[i], w.words[i + 1]);
          REQUIRE(s);
          CHECK(s->kind == StepKind::K2);
        }
      }
    } else {
      ++refused;
    }
    if (path.size() > 4) return;
    for (int k = 0; k < 3; ++k) {
      Permutation q = path.back();
      std::swap(q[k], q[k + 1]);
      path.push_back(q);
      self(self);
      path.pop_back();
    }
  };
  for (const auto& p : perms) {
    path = {p};
    rec(rec);
  }
  CHECK(signable > 0);
  CHECK(refused > 0);
}

TEST_CASE("word procedure on the example's permutations") {
  std::vector<Permutation> perms;
  for (const SignedWord& w : kPaperChain) perms.push_back(abs_word(w));
  const PermutationPathSigning r = sign_permutation_path(perms);
  REQUIRE(r.signable);
  // Signings are fixed up to one global inversion per constrained component.
  const CertificateCheck c = validate_certificate({r.words, kPaperKinds});
  CHECK(c.ok);
}

TEST_CASE("signing masks") {
  CHECK(signing_from_mask(3, 0).values() == std::vector<int>{1, 1, 1});
  CHECK(signing_from_mask(3, 5).values() == std::vector<int>{-1, 1, -1});
}

}
