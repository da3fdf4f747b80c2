#include "flipforge/phi.h"

#include <algorithm>
#include <functional>

#include "flipforge/errors.h"

namespace flipforge {

Triangulation phi(const Permutation& sigma) {
  if (!is_permutation(sigma)) throw DomainError("phi expects a permutation of 1..n");
  const int n = static_cast<int>(sigma.size());
  std::vector<Vertex> prev(n + 2), next(n + 2);
  for (Vertex v = 0; v < n + 2; ++v) {
    prev[v] = v - 1;
    next[v] = v + 1;
  }
  std::vector<Diagonal> diagonals;
  diagonals.reserve(n > 0 ? n - 1 : 0);
  for (int k = 0; k + 1 < n; ++k) {
    const Vertex v = sigma[k];
    diagonals.push_back(Diagonal{prev[v], next[v]});
    next[prev[v]] = next[v];
    prev[next[v]] = prev[v];
  }
  return Triangulation(n, std::move(diagonals));
}

EarCutter::EarCutter(const Triangulation& t)
    : n_(t.n()),
      prev_(t.n() + 2),
      next_(t.n() + 2),
      degree_(diagonal_degrees(t)),
      live_(t.n() + 2, true),
      live_diag_(static_cast<std::size_t>(t.n() + 2) * (t.n() + 2), false) {
  for (Vertex v = 0; v < n_ + 2; ++v) {
    prev_[v] = v - 1;
    next_[v] = v + 1;
  }
  for (const Diagonal& d : t.diagonals()) set_diagonal(d.lo, d.hi, true);
  reading_.reserve(n_);
}

bool EarCutter::is_cuttable(Vertex v) const {
  return v >= 1 && v <= n_ && live_[v] && degree_[v] == 0;
}

std::vector<Vertex> EarCutter::cuttable() const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n_; ++v) {
    if (is_cuttable(v)) out.push_back(v);
  }
  return out;
}

void EarCutter::cut(Vertex v) {
  if (!is_cuttable(v)) throw DomainError("vertex " + std::to_string(v) + " is not a cuttable ear");
  const Vertex p = prev_[v];
  const Vertex s = next_[v];
  // The chord closing the ear becomes a boundary edge of the smaller polygon.
  if (has_diagonal(p, s)) {
    set_diagonal(p, s, false);
    --degree_[p];
    --degree_[s];
  }
  next_[p] = s;
  prev_[s] = p;
  live_[v] = false;
  reading_.push_back(v);
}

std::set<Permutation> readings(const Triangulation& t) {
  std::set<Permutation> out;
  std::function<void(const EarCutter&)> walk = [&](const EarCutter& state) {
    if (state.done()) {
      out.insert(state.reading());
      return;
    }
    for (Vertex v : state.cuttable()) {
      EarCutter next = state;
      next.cut(v);
      walk(next);
    }
  };
  walk(EarCutter(t));
  return out;
}

Permutation canonical_reading(const Triangulation& t) {
  EarCutter cutter(t);
  while (!cutter.done()) cutter.cut(cutter.cuttable().back());
  return cutter.reading();
}

ColoredTriangulation big_phi(const Word& w) {
  return ColoredTriangulation{phi(standardize(w)), block_coloring(evaluation(w))};
}

std::set<Word> colored_readings(const ColoredTriangulation& ct) {
  if (!is_simple(ct)) throw DomainError("colored readings require a simple colored triangulation");
  std::set<Word> out;
  for (const Permutation& sigma : readings(ct.triangulation)) {
    Word w(sigma.size());
    std::transform(sigma.begin(), sigma.end(), w.begin(),
                   [&](int label) { return ct.coloring.color_of(label); });
    out.insert(std::move(w));
  }
  return out;
}

ColoredTriangulation insert(const ColoredTriangulation& state, int color) {
  const Triangulation& t = state.triangulation;
  const auto& colors = state.coloring.values();
  if (static_cast<int>(colors.size()) != t.n()) {
    throw DomainError("coloring length does not match the triangulation");
  }
  if (!state.coloring.is_increasing()) {
    throw DomainError("insertion-order error: no boundary vertex for color " +
                      std::to_string(color) + " in a non-increasing coloring");
  }
  if (!is_simple(state)) throw DomainError("insertion requires a simple colored triangulation");

  // With an increasing coloring, v is the number of labels of smaller color.
  const Vertex v = static_cast<Vertex>(
      std::lower_bound(colors.begin(), colors.end(), color) - colors.begin());
  auto shift = [v](Vertex u) { return u > v ? u + 1 : u; };

  std::vector<Diagonal> diagonals;
  diagonals.reserve(t.diagonals().size() + 1);
  for (const Diagonal& d : t.diagonals()) diagonals.push_back(Diagonal{shift(d.lo), shift(d.hi)});
  if (t.n() >= 1) diagonals.push_back(Diagonal{v, v + 2});

  std::vector<int> next_colors = colors;
  next_colors.insert(next_colors.begin() + v, color);
  return ColoredTriangulation{Triangulation(t.n() + 1, std::move(diagonals)),
                              Coloring(std::move(next_colors))};
}

std::vector<ColoredTriangulation> insertion_trace(const Word& w) {
  std::vector<ColoredTriangulation> states{ColoredTriangulation{}};
  states.reserve(w.size() + 1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 1) throw DomainError("color letters must be positive");
    states.push_back(insert(states.back(), *it));
  }
  return states;
}

ColoredTriangulation insertion_fold(const Word& w) {
  return insertion_trace(w).back();
}

}  // namespace flipforge
