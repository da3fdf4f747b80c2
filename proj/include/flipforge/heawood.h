#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flipforge/triangulation.h"

namespace flipforge {

/// Face signs of a sphere, keyed by hemisphere and polygon label.
struct SphereSigning {
  Coloring north;
  Coloring south;
  friend bool operator==(const SphereSigning&, const SphereSigning&) = default;
};

/// Two triangulations of the same polygon glued along their boundary, one
/// per hemisphere. The sphere has 2n faces and n+2 vertices.
struct SphereTriangulation {
  Triangulation north;
  Triangulation south;
  std::optional<SphereSigning> signs;

  int n() const { return north.n(); }
  int vertex_count() const { return north.vertex_count(); }
};

/// Throws DomainError when the two triangulations have different n.
SphereTriangulation glue(const Triangulation& north, const Triangulation& south);

/// Polygon edges (including 0-infinity) and the diagonals of both
/// hemispheres, sorted with duplicates collapsed.
std::vector<Diagonal> sphere_edges(const SphereTriangulation& s);

/// Number of sphere faces incident to each vertex.
std::vector<int> incident_face_counts(const SphereTriangulation& s);

/// Vertices whose incident face signs do not sum to 0 mod 3. Throws
/// DomainError when the sphere carries no total signing.
std::vector<Vertex> heawood_violations(const SphereTriangulation& s);
bool is_heawood(const SphereTriangulation& s);

/// A proper k-coloring of a graph by backtracking (most constrained vertex
/// first), colors 0..k-1, or nullopt when none exists. Throws CapExceeded
/// after `max_nodes` search nodes.
std::optional<std::vector<int>> color_graph(const std::vector<std::vector<int>>& adjacency, int k,
                                            std::size_t max_nodes);

inline constexpr std::size_t kDefaultColorNodes = 10'000'000;

/// A proper vertex 4-coloring of the sphere, colors 0..3 indexed by vertex.
std::optional<std::vector<int>> four_color(const SphereTriangulation& s,
                                           std::size_t max_nodes = kDefaultColorNodes);

/// First edge whose endpoints share a color, if any.
std::optional<Diagonal> coloring_conflict(const SphereTriangulation& s,
                                          const std::vector<int>& colors);

/// True iff the coloring is total, uses colors 0..3 and is proper.
bool verify_coloring(const SphereTriangulation& s, const std::vector<int>& colors);

/// Face signing read off a proper 4-coloring: colors are elements of the
/// Klein group, each edge gets the sum of its endpoint colors, and a face is
/// + when its edge colors 1, 2, 3 run clockwise. Southern faces are seen
/// from the other side of the equator and so have the opposite orientation.
SphereSigning heawood_signing_from_coloring(const SphereTriangulation& s,
                                            const std::vector<int>& colors);

}  // namespace flipforge
