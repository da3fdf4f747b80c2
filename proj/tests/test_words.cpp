#include <doctest.h>

#include <map>
#include <set>

#include "flipforge/errors.h"
#include "flipforge/graphs.h"
#include "flipforge/words.h"
#include "support.h"

using namespace flipforge;

namespace {

Word letters(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(c - 'a' + 1);
  return w;
}

Permutation digits(const std::string& s) {
  Permutation p;
  for (char c : s) p.push_back(c - '0');
  return p;
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("standardization") {
  CHECK(standardize(letters("bacbbacd")) == digits("31645278"));
  CHECK(standardize(letters("bbcbca")) == digits("235461"));
  CHECK(standardize(digits("4132")) == digits("4132"));
  CHECK(evaluation(letters("bbcbca")) == std::vector<int>{1, 3, 2});
}

TEST_CASE("destandardization") {
  const std::vector<int> mu{2, 3, 2, 1};
  CHECK(destandardize(digits("31672485"), mu) == letters("baccabdb"));
  const std::vector<int> ones{1, 1, 1};
  CHECK(destandardize(digits("312"), ones) == Word{3, 1, 2});
  // Values 1 and 2 appear out of order.
  CHECK_THROWS_AS(destandardize(digits("21"), std::vector<int>{2}), DomainError);
}

TEST_CASE("destandardize inverts standardize on every class, n = 5") {
  for (const auto& mu : compositions(5)) {
    for (const Permutation& sigma : oracle::permutations(5)) {
      if (!in_evaluation_class(sigma, mu)) {
        CHECK_THROWS_AS(destandardize(sigma, mu), DomainError);
        continue;
      }
      const Word w = destandardize(sigma, mu);
      CHECK(evaluation(w) == mu);
      CHECK(standardize(w) == sigma);
    }
    for (const Word& w : words_of_evaluation(mu)) CHECK(in_evaluation_class(standardize(w), mu));
  }
}

TEST_CASE("delta profile") {
  CHECK(delta_profile(digits("12345")).lengths == std::vector<int>{5});
  CHECK(delta_profile(digits("54321")).lengths == std::vector<int>{1, 1, 1, 1, 1});
  const auto d = delta_profile(digits("31645278"));
  CHECK(d.segments == std::vector<std::vector<int>>{{1, 2}, {3, 4, 5}, {6, 7, 8}});
  CHECK(d.lengths == std::vector<int>{2, 3, 3});
  CHECK(in_evaluation_class(digits("31645278"), std::vector<int>{2, 3, 2, 1}));
}

TEST_CASE("sylvester adjacency") {
  auto w = sylvester_adjacent(digits("235461"), digits("253461"));
  REQUIRE(w);
  CHECK(w->x == 3);
  CHECK(w->z == 5);
  CHECK(w->y == 4);
  auto v = sylvester_adjacent(digits("253461"), digits("523461"));
  REQUIRE(v);
  CHECK(v->x == 2);
  CHECK(v->z == 5);
  CHECK((v->y == 3 || v->y == 4));
  CHECK_FALSE(sylvester_adjacent(digits("253461"), digits("253461")));
  CHECK_FALSE(sylvester_adjacent(digits("12"), digits("21")));
}

TEST_CASE("sylvester classes") {
  CHECK(sylvester_class(digits("235461")) ==
        std::set<Word>{digits("235461"), digits("253461"), digits("523461")});
  CHECK(sylvester_class(letters("bbcbca")) ==
        std::set<Word>{letters("bbcbca"), letters("bcbbca"), letters("cbbbca")});
  CHECK(sylvester_class(digits("12345")).size() == 1);
  CHECK_THROWS_AS(sylvester_class(digits("235461"), 2), CapExceeded);
}

TEST_CASE("classes partition S_n into Catalan many parts with a common last letter") {
  for (int n = 1; n <= 7; ++n) {
    std::set<Word> seen;
    std::size_t classes = 0;
    for (const Permutation& p : oracle::permutations(n)) {
      if (seen.count(p)) continue;
      const auto cls = sylvester_class(p);
      ++classes;
      for (const Word& w : cls) {
        CHECK(w.back() == p.back());
        CHECK(seen.insert(w).second);
      }
    }
    CHECK(classes == catalan(n));
  }
}

TEST_CASE("standardization is compatible with the congruence") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<int>, std::vector<Word>> by_eval;
    for (const Word& w : oracle::words(n, 3)) by_eval[evaluation(w)].push_back(w);
    for (const auto& [mu, ws] : by_eval) {
      std::set<Word> done;
      for (const Word& w : ws) {
        if (done.count(w)) continue;
        const auto cls = sylvester_class(w);
        const auto std_cls = sylvester_class(standardize(w));
        // std maps the class of w onto the class of std(w).
        std::set<Word> image;
        for (const Word& u : cls) image.insert(standardize(u));
        CHECK(image == std_cls);
        done.insert(cls.begin(), cls.end());
      }
    }
  }
}

TEST_CASE("bar and abs") {
  CHECK(bar(-3) == 3);
  CHECK(bar(3) == -3);
  for (int x = -5; x <= 5; ++x) CHECK(bar(bar(x)) == x);
  CHECK(abs_word({-3, 2, -4, 1, 5, 6}) == digits("324156"));
  CHECK(abs_word({-4, -5, 3, 1, 2, 6}) == digits("453126"));
  CHECK(is_signed_permutation({-3, 2, -4, 1, 5, 6}));
  CHECK_FALSE(is_signed_permutation({-3, 3}));
  CHECK_FALSE(is_signed_permutation({0, 1}));
}

}
