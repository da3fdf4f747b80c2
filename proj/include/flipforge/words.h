#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace flipforge {

/// A word over an ordered alphabet of colors 1..p (or values 1..n).
using Word = std::vector<int>;

/// A word over 1..n using each value exactly once.
using Permutation = std::vector<int>;

/// A word of nonzero integers with pairwise distinct absolute values; the
/// negative letters are the barred ones.
using SignedWord = std::vector<int>;

/// Multiplicity of each color 1..max(w). Entries may be zero.
std::vector<int> evaluation(const Word& w);

bool is_permutation(const Word& w);
bool is_signed_permutation(const SignedWord& w);

/// std(w): occurrences of color 1 get values 1..mu_1 left to right, then
/// occurrences of color 2 continue the numbering, and so on.
Permutation standardize(const Word& w);

/// True when every value interval of mu appears in increasing left-to-right
/// order in sigma, i.e. sigma lies in the image of std over evaluation-mu words.
bool in_evaluation_class(const Permutation& sigma, std::span<const int> mu);

/// dstd_mu(sigma): replaces each value by the index of the mu-interval
/// containing it. Throws DomainError naming the first interval whose values
/// are out of order.
Word destandardize(const Permutation& sigma, std::span<const int> mu);

/// Delta(sigma): delta_1 is the longest run 1, 2, ... of consecutive values
/// appearing left to right in sigma; each next segment restarts at the first
/// value not yet covered.
struct DeltaProfile {
  std::vector<std::vector<int>> segments;
  std::vector<int> lengths;
};

DeltaProfile delta_profile(const Permutation& sigma);

/// A decomposition w1 = u x z u' y u'', w2 = u z x u' y u'' with x <= y < z.
/// `position` indexes x z in the word holding x first; `first_holds_xz` tells
/// which of the two input words that is.
struct SylvesterWitness {
  std::size_t position = 0;
  int x = 0;
  int z = 0;
  int y = 0;
  std::size_t y_position = 0;
  bool first_holds_xz = true;
};

std::optional<SylvesterWitness> sylvester_adjacent(const Word& w1, const Word& w2);

/// All words sylvester adjacent to w.
std::vector<Word> sylvester_neighbors(const Word& w);

/// The sylvester class of w, by breadth-first closure of the adjacency.
/// Throws CapExceeded once more than `cap` members have been found.
std::set<Word> sylvester_class(const Word& w, std::size_t cap = 1'000'000);

/// The bar involution on signed letters.
constexpr int bar(int letter) { return -letter; }

/// |w|: erases the bars.
Permutation abs_word(const SignedWord& w);

}  // namespace flipforge
