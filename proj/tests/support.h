#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "flipforge/flips.h"
#include "flipforge/graphs.h"
#include "flipforge/triangulation.h"
#include "flipforge/words.h"

// Brute-force oracles that avoid the library's own algorithms.
namespace oracle {

using flipforge::Coloring;
using flipforge::Diagonal;
using flipforge::Triangulation;

inline std::vector<Diagonal> all_chords(int n) {
  std::vector<Diagonal> out;
  for (int i = 0; i <= n + 1; ++i) {
    for (int j = i + 2; j <= n + 1; ++j) {
      if (i == 0 && j == n + 1) continue;
      out.push_back({i, j});
    }
  }
  return out;
}

inline bool interleave(Diagonal a, Diagonal b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

// Every (n-1)-subset of chords that is pairwise noncrossing.
inline std::vector<std::vector<Diagonal>> triangulations_by_subsets(int n) {
  const auto chords = all_chords(n);
  std::vector<std::vector<Diagonal>> out;
  std::vector<Diagonal> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == n - 1) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = from; i < chords.size(); ++i) {
      if (std::any_of(pick.begin(), pick.end(), [&](Diagonal d) { return interleave(d, chords[i]); })) {
        continue;
      }
      pick.push_back(chords[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  if (n >= 1) rec(rec, 0);
  return out;
}

inline bool is_edge(const Triangulation& t, int a, int b) {
  if (a > b) std::swap(a, b);
  if (b == a + 1) return true;
  if (a == 0 && b == t.n() + 1) return true;
  return t.contains({a, b});
}

// Faces are exactly the triangles of the edge graph.
inline std::vector<std::array<int, 3>> triangles(const Triangulation& t) {
  std::vector<std::array<int, 3>> out;
  const int m = t.vertex_count();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        if (is_edge(t, a, b) && is_edge(t, b, c) && is_edge(t, a, c)) out.push_back({a, b, c});
  return out;
}

inline bool simple_by_definition(const Triangulation& t, const Coloring& eps) {
  const int n = t.n();
  for (int i = 1; i < n; ++i)
    if (eps.color_of(i) > eps.color_of(i + 1)) return false;
  for (const Diagonal& d : t.diagonals()) {
    if (d.lo >= 1 && d.hi <= n && eps.color_of(d.lo) == eps.color_of(d.hi)) return false;
  }
  for (int i = 1; i < n; ++i) {
    if (eps.color_of(i) != eps.color_of(i + 1)) continue;
    for (const auto& f : triangles(t)) {
      const bool has_i = std::find(f.begin(), f.end(), i) != f.end();
      const bool has_next = std::find(f.begin(), f.end(), i + 1) != f.end();
      if (!has_i || !has_next) continue;
      int third = f[0] + f[1] + f[2] - i - (i + 1);
      if (third > i) return false;
    }
  }
  return true;
}

inline std::vector<flipforge::Permutation> permutations(int n) {
  flipforge::Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<flipforge::Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every word of length n over 1..p.
inline std::vector<flipforge::Word> words(int n, int p) {
  std::vector<flipforge::Word> out;
  flipforge::Word w(n, 1);
  for (;;) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == p) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

// Loop-free flip paths with at most `max_flips` flips, from every start.
inline std::vector<std::vector<Triangulation>> loop_free_paths(int n, std::size_t max_flips) {
  std::vector<std::vector<Triangulation>> out;
  std::vector<Triangulation> path;
  auto rec = [&](auto&& self) -> void {
    out.push_back(path);
    if (path.size() > max_flips) return;
    for (const Diagonal& d : path.back().diagonals()) {
      Triangulation next = flipforge::flip(path.back(), d).triangulation;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      path.push_back(next);
      self(self);
      path.pop_back();
    }
  };
  for (const Triangulation& t : flipforge::enumerate_triangulations(n)) {
    path = {t};
    rec(rec);
  }
  return out;
}

}  // namespace oracle
