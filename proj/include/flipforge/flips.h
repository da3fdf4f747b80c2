#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "flipforge/triangulation.h"
#include "flipforge/words.h"

namespace flipforge {

/// The quadrilateral a < b < c < d formed by the two faces adjacent to a
/// flipped diagonal. Its chords are (a,c) and (b,d); whichever is present,
/// the two faces of the quadrilateral are labelled b and c.
struct FlipQuad {
  std::array<Vertex, 4> vertices{};
  Diagonal removed;
  Diagonal added;

  int low_label() const { return vertices[1]; }
  int high_label() const { return vertices[2]; }

  /// The four sides of the quadrilateral.
  std::array<Diagonal, 4> sides() const;
};

/// Quadrilateral of the flip of d in t. Throws DomainError if d is not in t.
FlipQuad flip_quad(const Triangulation& t, Diagonal d);

struct FlipResult {
  Triangulation triangulation;
  FlipQuad quad;
};

/// Replaces d by the opposite chord of its quadrilateral.
FlipResult flip(const Triangulation& t, Diagonal d);

/// If a and b differ by exactly one flip, the diagonal of a that is flipped.
std::optional<Diagonal> flip_between(const Triangulation& a, const Triangulation& b);

/// Readings first = u x z v of t1 and second = u z x v of t2 where v holds no
/// letter strictly between x and z. x and z are the face labels of the flip
/// quadrilateral.
struct FlipWitness {
  Permutation first;
  Permutation second;
  int x = 0;
  int z = 0;
};

/// Witness readings when t1 and t2 differ by one flip, otherwise nullopt.
std::optional<FlipWitness> flip_characterization(const Triangulation& t1, const Triangulation& t2);

/// Signed flip: legal iff the two faces adjacent to d carry equal signs; both
/// signs are negated and every other sign is kept. Face signs are stored per
/// label since flips preserve the label set.
std::optional<ColoredTriangulation> signed_flip(const ColoredTriangulation& st, Diagonal d);

/// Flips whose two quadrilateral faces have equal color; coloring unchanged.
std::vector<ColoredTriangulation> homogeneous_neighbors(const ColoredTriangulation& ct);

/// Flips whose two quadrilateral faces have different colors and whose
/// result is again simple; coloring unchanged. Throws DomainError if ct is
/// not simple.
std::vector<ColoredTriangulation> switched_neighbors(const ColoredTriangulation& ct);

/// Partial signing of the diagonals of a triangulation.
struct DiagonalSigning {
  Triangulation base;
  std::map<Diagonal, int> signs;

  friend bool operator==(const DiagonalSigning&, const DiagonalSigning&) = default;
};

/// Signs each diagonal by the product of its two adjacent face signs.
DiagonalSigning diagonal_signing_from_faces(const ColoredTriangulation& st);

/// Recovers face signs from a total diagonal signing and the sign of one face.
Coloring face_signs_from_diagonals(const DiagonalSigning& ds, int anchor_label, int anchor_sign);

/// Signed flip on a diagonal signing. Defined only when d is signed +: the
/// new chord is signed +, signed sides of the quadrilateral are negated and
/// every other sign is kept. Throws DomainError when d is unsigned or absent.
std::optional<DiagonalSigning> signed_flip_diagonal(const DiagonalSigning& ds, Diagonal d);

}  // namespace flipforge
