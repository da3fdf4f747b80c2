#pragma once

#include <set>
#include <vector>

#include "flipforge/triangulation.h"
#include "flipforge/words.h"

namespace flipforge {

/// phi(sigma): walks sigma_1..sigma_{n-1}, each time joining the live
/// predecessor and successor of the letter by a diagonal and then deleting the
/// letter from the live polygon. The last letter adds nothing.
Triangulation phi(const Permutation& sigma);

/// The cutting-ear procedure: repeatedly delete an ear x in 1..n (never 0 or
/// infinity) together with its face, recording x. The recorded word is a
/// reading of the starting triangulation.
class EarCutter {
 public:
  explicit EarCutter(const Triangulation& t);

  /// Live inner vertex incident to no live diagonal.
  bool is_cuttable(Vertex v) const;
  std::vector<Vertex> cuttable() const;

  /// Throws DomainError if v is not cuttable.
  void cut(Vertex v);

  const Permutation& reading() const { return reading_; }
  bool done() const { return static_cast<int>(reading_.size()) == n_; }

 private:
  bool has_diagonal(Vertex a, Vertex b) const { return live_diag_[a * (n_ + 2) + b]; }
  void set_diagonal(Vertex a, Vertex b, bool on) { live_diag_[a * (n_ + 2) + b] = on; }

  int n_;
  std::vector<Vertex> prev_;
  std::vector<Vertex> next_;
  std::vector<int> degree_;
  std::vector<bool> live_;
  std::vector<bool> live_diag_;
  Permutation reading_;
};

/// All readings of t; equal to the fiber phi^{-1}(t).
std::set<Permutation> readings(const Triangulation& t);

/// The reading obtained by always cutting the greatest cuttable ear; the
/// lexicographically greatest reading.
Permutation canonical_reading(const Triangulation& t);

/// Phi(w) = (phi(std(w)), epsilon_mu) with mu = eval(w).
ColoredTriangulation big_phi(const Word& w);

/// Readings of a simple colored triangulation, recorded by color. Throws
/// DomainError when (t, eps) is not simple.
std::set<Word> colored_readings(const ColoredTriangulation& ct);

/// Inserts a new vertex of color `color` into a simple colored triangulation.
/// The vertex goes right after v, the unique vertex not colored `color` whose
/// successor is colored `color`; vertex 0 acts as an uncolored floor and,
/// when no vertex has that color yet, v is the last vertex of smaller color.
/// The boundary edge (v, succ v) becomes a diagonal and the new face gets the
/// color. Throws DomainError if the state is not simple.
ColoredTriangulation insert(const ColoredTriangulation& state, int color);

/// T_0 followed by the states after inserting w_n, w_{n-1}, ..., w_1.
std::vector<ColoredTriangulation> insertion_trace(const Word& w);

/// Last state of insertion_trace(w).
ColoredTriangulation insertion_fold(const Word& w);

}  // namespace flipforge
