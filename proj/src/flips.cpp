#include "flipforge/flips.h"

#include <algorithm>
#include <deque>

#include "flipforge/errors.h"
#include "flipforge/phi.h"

namespace flipforge {

std::array<Diagonal, 4> FlipQuad::sides() const {
  const auto& v = vertices;
  return {make_diagonal(v[0], v[1]), make_diagonal(v[1], v[2]), make_diagonal(v[2], v[3]),
          make_diagonal(v[0], v[3])};
}

FlipQuad flip_quad(const Triangulation& t, Diagonal d) {
  if (!t.contains(d)) {
    throw DomainError("diagonal (" + std::to_string(d.lo) + "," + std::to_string(d.hi) +
                      ") is not in the triangulation");
  }
  // One adjacent face has d as its long side; the other lies outside [lo, hi].
  Vertex inner = -1;
  Vertex outer = -1;
  for (const Face& f : faces(t)) {
    if (f.low == d.lo && f.high == d.hi) {
      inner = f.mid;
    } else if (f.mid == d.lo && f.high == d.hi) {
      outer = f.low;
    } else if (f.low == d.lo && f.mid == d.hi) {
      outer = f.high;
    }
  }
  FlipQuad q;
  q.vertices = {d.lo, inner, d.hi, outer};
  std::sort(q.vertices.begin(), q.vertices.end());
  q.removed = d;
  q.added = make_diagonal(inner, outer);
  return q;
}

FlipResult flip(const Triangulation& t, Diagonal d) {
  FlipQuad q = flip_quad(t, d);
  return FlipResult{t.with_replaced(q.removed, q.added), q};
}

std::optional<Diagonal> flip_between(const Triangulation& a, const Triangulation& b) {
  if (a.n() != b.n()) return std::nullopt;
  std::vector<Diagonal> only_a, only_b;
  std::set_difference(a.diagonals().begin(), a.diagonals().end(), b.diagonals().begin(),
                      b.diagonals().end(), std::back_inserter(only_a));
  std::set_difference(b.diagonals().begin(), b.diagonals().end(), a.diagonals().begin(),
                      a.diagonals().end(), std::back_inserter(only_b));
  if (only_a.size() != 1 || only_b.size() != 1) return std::nullopt;
  if (flip_quad(a, only_a[0]).added != only_b[0]) return std::nullopt;
  return only_a[0];
}

namespace {

// Cuts every live vertex strictly inside (lo, hi). (lo, hi) is an edge, so the
// region keeps offering an ear until it is empty.
void cut_region(EarCutter& cutter, Vertex lo, Vertex hi) {
  for (;;) {
    Vertex pick = -1;
    for (Vertex v : cutter.cuttable()) {
      if (lo < v && v < hi) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return;
    cutter.cut(pick);
  }
}

Permutation reading_through_quad(const Triangulation& t, const FlipQuad& q, Vertex first,
                                 Vertex second) {
  EarCutter cutter(t);
  const auto& v = q.vertices;
  cut_region(cutter, v[0], v[1]);
  cut_region(cutter, v[1], v[2]);
  cut_region(cutter, v[2], v[3]);
  cutter.cut(first);
  cutter.cut(second);
  while (!cutter.done()) cutter.cut(cutter.cuttable().back());
  return cutter.reading();
}

}  // namespace

std::optional<FlipWitness> flip_characterization(const Triangulation& t1, const Triangulation& t2) {
  auto d = flip_between(t1, t2);
  if (!d) return std::nullopt;
  const FlipQuad q = flip_quad(t1, *d);
  const int x = q.low_label();
  const int z = q.high_label();
  // With chord (a, c) the ear freed first is b; with chord (b, d) it is c.
  const bool low_first = q.removed == make_diagonal(q.vertices[0], q.vertices[2]);
  FlipWitness w;
  w.x = low_first ? x : z;
  w.z = low_first ? z : x;
  w.first = reading_through_quad(t1, q, w.x, w.z);
  w.second = reading_through_quad(t2, q, w.z, w.x);
  return w;
}

std::optional<ColoredTriangulation> signed_flip(const ColoredTriangulation& st, Diagonal d) {
  const FlipQuad q = flip_quad(st.triangulation, d);
  const int a = q.low_label();
  const int b = q.high_label();
  if (st.coloring.color_of(a) != st.coloring.color_of(b)) return std::nullopt;
  Coloring signs = st.coloring;
  signs.set(a, -signs.color_of(a));
  signs.set(b, -signs.color_of(b));
  return ColoredTriangulation{st.triangulation.with_replaced(q.removed, q.added), std::move(signs)};
}

std::vector<ColoredTriangulation> homogeneous_neighbors(const ColoredTriangulation& ct) {
  std::vector<ColoredTriangulation> out;
  for (const Diagonal& d : ct.triangulation.diagonals()) {
    const FlipQuad q = flip_quad(ct.triangulation, d);
    if (ct.coloring.color_of(q.low_label()) != ct.coloring.color_of(q.high_label())) continue;
    out.push_back({ct.triangulation.with_replaced(q.removed, q.added), ct.coloring});
  }
  return out;
}

std::vector<ColoredTriangulation> switched_neighbors(const ColoredTriangulation& ct) {
  if (!is_simple(ct)) throw DomainError("switched flips require a simple colored triangulation");
  std::vector<ColoredTriangulation> out;
  for (const Diagonal& d : ct.triangulation.diagonals()) {
    const FlipQuad q = flip_quad(ct.triangulation, d);
    if (ct.coloring.color_of(q.low_label()) == ct.coloring.color_of(q.high_label())) continue;
    ColoredTriangulation next{ct.triangulation.with_replaced(q.removed, q.added), ct.coloring};
    if (is_simple(next)) out.push_back(std::move(next));
  }
  return out;
}

DiagonalSigning diagonal_signing_from_faces(const ColoredTriangulation& st) {
  DiagonalSigning ds{st.triangulation, {}};
  for (const Diagonal& d : st.triangulation.diagonals()) {
    const FlipQuad q = flip_quad(st.triangulation, d);
    ds.signs[d] = st.coloring.color_of(q.low_label()) * st.coloring.color_of(q.high_label());
  }
  return ds;
}

Coloring face_signs_from_diagonals(const DiagonalSigning& ds, int anchor_label, int anchor_sign) {
  const Triangulation& t = ds.base;
  if (anchor_sign != 1 && anchor_sign != -1) throw DomainError("anchor sign must be +1 or -1");
  if (anchor_label < 1 || anchor_label > t.n()) throw DomainError("anchor label out of range");
  // Dual tree: faces joined across diagonals.
  std::vector<std::vector<std::pair<int, int>>> dual(t.n() + 1);
  for (const Diagonal& d : t.diagonals()) {
    auto it = ds.signs.find(d);
    if (it == ds.signs.end()) throw DomainError("diagonal signing is not total");
    const FlipQuad q = flip_quad(t, d);
    dual[q.low_label()].emplace_back(q.high_label(), it->second);
    dual[q.high_label()].emplace_back(q.low_label(), it->second);
  }
  Coloring signs = Coloring::constant(t.n(), 0);
  signs.set(anchor_label, anchor_sign);
  std::deque<int> queue{anchor_label};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (auto [g, s] : dual[f]) {
      if (signs.color_of(g) != 0) continue;
      signs.set(g, signs.color_of(f) * s);
      queue.push_back(g);
    }
  }
  return signs;
}

std::optional<DiagonalSigning> signed_flip_diagonal(const DiagonalSigning& ds, Diagonal d) {
  auto it = ds.signs.find(d);
  if (it == ds.signs.end()) throw DomainError("signed flip on an unsigned diagonal");
  if (it->second < 0) return std::nullopt;
  const FlipQuad q = flip_quad(ds.base, d);
  DiagonalSigning out{ds.base.with_replaced(q.removed, q.added), ds.signs};
  out.signs.erase(q.removed);
  for (const Diagonal& side : q.sides()) {
    if (auto s = out.signs.find(side); s != out.signs.end()) s->second = -s->second;
  }
  out.signs[q.added] = 1;
  return out;
}

}  // namespace flipforge
