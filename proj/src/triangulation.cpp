#include "flipforge/triangulation.h"

#include <algorithm>
#include <sstream>

#include "flipforge/errors.h"

namespace flipforge {

namespace {

std::string describe(Diagonal d) {
  return "(" + std::to_string(d.lo) + "," + std::to_string(d.hi) + ")";
}

// Smallest and largest neighbor of every vertex, polygon edges included.
struct NeighborBounds {
  std::vector<Vertex> min;
  std::vector<Vertex> max;
};

NeighborBounds neighbor_bounds(const Triangulation& t) {
  const int count = t.vertex_count();
  NeighborBounds b{std::vector<Vertex>(count), std::vector<Vertex>(count)};
  for (Vertex v = 0; v < count; ++v) {
    b.min[v] = v == 0 ? 1 : v - 1;
    b.max[v] = v == count - 1 ? count - 2 : v + 1;
  }
  // The closing edge 0-infinity.
  b.max[0] = count - 1;
  b.min[count - 1] = 0;
  for (const Diagonal& d : t.diagonals()) {
    b.min[d.hi] = std::min(b.min[d.hi], d.lo);
    b.max[d.lo] = std::max(b.max[d.lo], d.hi);
  }
  return b;
}

}  // namespace

Diagonal make_diagonal(Vertex a, Vertex b) {
  return a < b ? Diagonal{a, b} : Diagonal{b, a};
}

bool crosses(Diagonal a, Diagonal b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

std::vector<std::string> validate(int n, std::span<const Diagonal> diagonals) {
  std::vector<std::string> out;
  if (n < 0) {
    out.push_back("negative label count " + std::to_string(n));
    return out;
  }
  const Vertex inf = n + 1;
  for (const Diagonal& d : diagonals) {
    if (d.lo < 0 || d.hi > inf || d.lo >= d.hi) {
      out.push_back("diagonal " + describe(d) + " is not a chord of the " +
                    std::to_string(n + 2) + "-gon");
    } else if (d.hi == d.lo + 1 || (d.lo == 0 && d.hi == inf)) {
      out.push_back("boundary edge " + describe(d) + " listed as diagonal");
    }
  }
  std::vector<Diagonal> sorted(diagonals.begin(), diagonals.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    out.push_back("duplicate diagonal " + describe(*it));
  }
  const std::size_t expected = n == 0 ? 0 : static_cast<std::size_t>(n - 1);
  if (diagonals.size() != expected) {
    out.push_back("wrong diagonal count: expected " + std::to_string(expected) + ", got " +
                  std::to_string(diagonals.size()));
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (crosses(sorted[i], sorted[j])) {
        out.push_back("crossing diagonals " + describe(sorted[i]) + " and " +
                      describe(sorted[j]));
      }
    }
  }
  return out;
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals) : n_(n) {
  std::sort(diagonals.begin(), diagonals.end());
  if (auto v = validate(n, diagonals); !v.empty()) {
    throw DomainError("invalid triangulation: " + v.front());
  }
  diagonals_ = std::move(diagonals);
}

bool Triangulation::contains(Diagonal d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

Triangulation Triangulation::with_replaced(Diagonal removed, Diagonal added) const {
  std::vector<Diagonal> next;
  next.reserve(diagonals_.size());
  for (const Diagonal& d : diagonals_) {
    if (d != removed) next.push_back(d);
  }
  next.insert(std::upper_bound(next.begin(), next.end(), added), added);
  return Triangulation(Unchecked{}, n_, std::move(next));
}

std::vector<int> diagonal_degrees(const Triangulation& t) {
  std::vector<int> deg(t.vertex_count(), 0);
  for (const Diagonal& d : t.diagonals()) {
    ++deg[d.lo];
    ++deg[d.hi];
  }
  return deg;
}

std::vector<Vertex> ears(const Triangulation& t) {
  const auto deg = diagonal_degrees(t);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (deg[v] == 0) out.push_back(v);
  }
  return out;
}

std::vector<Face> faces(const Triangulation& t) {
  const auto b = neighbor_bounds(t);
  std::vector<Face> out;
  out.reserve(t.n());
  for (Vertex y = 1; y <= t.n(); ++y) out.push_back(Face{b.min[y], y, b.max[y]});
  return out;
}

Face face_of(const Triangulation& t, int label) {
  if (label < 1 || label > t.n()) {
    throw DomainError("face label " + std::to_string(label) + " out of range");
  }
  const auto b = neighbor_bounds(t);
  return Face{b.min[label], label, b.max[label]};
}

Vertex third_vertex(const Triangulation& t, int i) {
  if (i < 1 || i > t.n() - 1) {
    throw DomainError("third_vertex index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(t.n() - 1));
  }
  const auto b = neighbor_bounds(t);
  // Either the face labelled i is (t_i, i, i+1), or the face labelled i+1 is
  // (i, i+1, t_i).
  return b.max[i] == i + 1 ? b.min[i] : b.max[i + 1];
}

std::string canonical_key(const Triangulation& t) {
  std::ostringstream os;
  os << t.n() << ':';
  bool first = true;
  for (const Diagonal& d : t.diagonals()) {
    if (!first) os << ';';
    first = false;
    os << d.lo << '-' << d.hi;
  }
  return os.str();
}

bool Coloring::is_increasing() const {
  return std::is_sorted(colors_.begin(), colors_.end());
}

bool Coloring::is_signing() const {
  return std::all_of(colors_.begin(), colors_.end(), [](int c) { return c == 1 || c == -1; });
}

Coloring Coloring::negated() const {
  std::vector<int> out(colors_.size());
  std::transform(colors_.begin(), colors_.end(), out.begin(), [](int c) { return -c; });
  return Coloring(std::move(out));
}

Coloring block_coloring(std::span<const int> mu) {
  std::vector<int> out;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] < 0) throw DomainError("negative multiplicity in evaluation");
    out.insert(out.end(), mu[k], static_cast<int>(k) + 1);
  }
  return Coloring(std::move(out));
}

bool is_simple(const Triangulation& t, const Coloring& eps) {
  if (eps.size() != t.n()) return false;
  if (!eps.is_increasing()) return false;
  for (const Diagonal& d : t.diagonals()) {
    const bool both_inner = d.lo >= 1 && d.hi <= t.n();
    if (both_inner && eps.color_of(d.lo) == eps.color_of(d.hi)) return false;
  }
  if (t.n() >= 2) {
    const auto b = neighbor_bounds(t);
    for (int i = 1; i < t.n(); ++i) {
      if (eps.color_of(i) != eps.color_of(i + 1)) continue;
      const Vertex ti = b.max[i] == i + 1 ? b.min[i] : b.max[i + 1];
      if (ti >= i) return false;
    }
  }
  return true;
}

}  // namespace flipforge
