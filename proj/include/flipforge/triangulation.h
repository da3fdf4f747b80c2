#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace flipforge {

/// Polygon vertices are the integers 0..n+1. Vertex 0 is the floor, vertex
/// n+1 stands for infinity, and 1..n are the inner labels x_1 < ... < x_n,
/// increasing clockwise.
using Vertex = int;

/// A chord {lo, hi} of the polygon with lo < hi.
struct Diagonal {
  Vertex lo = 0;
  Vertex hi = 0;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Orders the endpoints.
Diagonal make_diagonal(Vertex a, Vertex b);

/// Two open chords of a convex polygon intersect iff their endpoints interleave.
bool crosses(Diagonal a, Diagonal b);

/// A triangular face low < mid < high. Faces are labelled by their middle vertex.
struct Face {
  Vertex low = 0;
  Vertex mid = 0;
  Vertex high = 0;

  int label() const { return mid; }
  bool contains(Vertex v) const { return v == low || v == mid || v == high; }

  friend auto operator<=>(const Face&, const Face&) = default;
};

/// Checks the triangulation invariants for n inner labels and the given
/// diagonals. Returns the violated invariants in the order they were
/// detected; an empty result means the input is a valid triangulation.
std::vector<std::string> validate(int n, std::span<const Diagonal> diagonals);

/// A triangulation of the convex (n+2)-gon: n-1 pairwise noncrossing
/// diagonals, kept sorted. n = 0 is the single edge 0-infinity with no faces.
class Triangulation {
 public:
  /// The empty triangulation T_0.
  Triangulation() = default;

  /// Throws DomainError naming the first violated invariant.
  Triangulation(int n, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  Vertex infinity() const { return n_ + 1; }
  int vertex_count() const { return n_ + 2; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  bool contains(Diagonal d) const;

  /// Replaces `removed` by `added` without revalidating. Used by flip, whose
  /// output is valid by construction.
  Triangulation with_replaced(Diagonal removed, Diagonal added) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend auto operator<=>(const Triangulation& a, const Triangulation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.diagonals_ <=> b.diagonals_;
  }

 private:
  struct Unchecked {};
  Triangulation(Unchecked, int n, std::vector<Diagonal> diagonals)
      : n_(n), diagonals_(std::move(diagonals)) {}

  int n_ = 0;
  std::vector<Diagonal> diagonals_;
};

/// Number of diagonals incident to each vertex 0..n+1.
std::vector<int> diagonal_degrees(const Triangulation& t);

/// Vertices incident to no diagonal, in increasing order.
std::vector<Vertex> ears(const Triangulation& t);

/// The n faces indexed by label: result[i] is the face labelled i+1.
std::vector<Face> faces(const Triangulation& t);

/// The face labelled `label` (1 <= label <= n).
Face face_of(const Triangulation& t, int label);

/// Third vertex t_i of the unique face containing the boundary edge {i, i+1},
/// for 1 <= i <= n-1. Throws DomainError when i is out of range.
Vertex third_vertex(const Triangulation& t, int i);

/// Serialized sorted diagonal list, e.g. "3:0-3;1-3". Injective for fixed n.
std::string canonical_key(const Triangulation& t);

/// Assignment of an ordinal color to each label 1..n. Sign colorings use
/// the values -1 and +1 (with - < +).
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {}

  /// All n labels carry `color`.
  static Coloring constant(int n, int color) { return Coloring(std::vector<int>(n, color)); }

  int size() const { return static_cast<int>(colors_.size()); }
  int color_of(int label) const { return colors_.at(label - 1); }
  void set(int label, int color) { colors_.at(label - 1) = color; }
  const std::vector<int>& values() const { return colors_; }

  bool is_increasing() const;
  bool is_signing() const;

  /// Sign negation on every label; meaningful for sign colorings.
  Coloring negated() const;

  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
};

/// The block coloring epsilon_mu: mu_1 copies of color 1, then mu_2 copies of 2, ...
Coloring block_coloring(std::span<const int> mu);

/// A triangulation together with a coloring of its labels (and hence faces).
struct ColoredTriangulation {
  Triangulation triangulation;
  Coloring coloring;

  friend auto operator<=>(const ColoredTriangulation&, const ColoredTriangulation&) = default;
};

/// Simplicity of a colored triangulation:
///  (a) the coloring is weakly increasing;
///  (b) no diagonal joins two labels of the same color;
///  (c) for consecutive same-colored labels i, i+1 the third vertex t_i < i.
bool is_simple(const Triangulation& t, const Coloring& eps);
inline bool is_simple(const ColoredTriangulation& ct) {
  return is_simple(ct.triangulation, ct.coloring);
}

}  // namespace flipforge
