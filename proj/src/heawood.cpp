#include "flipforge/heawood.h"

#include <algorithm>

#include "flipforge/errors.h"

namespace flipforge {

SphereTriangulation glue(const Triangulation& north, const Triangulation& south) {
  if (north.n() != south.n()) {
    throw DomainError("cannot glue triangulations with n = " + std::to_string(north.n()) +
                      " and n = " + std::to_string(south.n()));
  }
  return SphereTriangulation{north, south, std::nullopt};
}

std::vector<Diagonal> sphere_edges(const SphereTriangulation& s) {
  std::vector<Diagonal> edges;
  const Vertex inf = s.north.infinity();
  for (Vertex v = 0; v < inf; ++v) edges.push_back({v, v + 1});
  if (inf > 1) edges.push_back({0, inf});
  for (const Diagonal& d : s.north.diagonals()) edges.push_back(d);
  for (const Diagonal& d : s.south.diagonals()) edges.push_back(d);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<int> incident_face_counts(const SphereTriangulation& s) {
  std::vector<int> count(s.vertex_count(), 0);
  for (const Triangulation* t : {&s.north, &s.south}) {
    for (const Face& f : faces(*t)) {
      ++count[f.low];
      ++count[f.mid];
      ++count[f.high];
    }
  }
  return count;
}

std::vector<Vertex> heawood_violations(const SphereTriangulation& s) {
  if (!s.signs || s.signs->north.size() != s.n() || s.signs->south.size() != s.n()) {
    throw DomainError("heawood check needs a total face signing");
  }
  std::vector<int> sum(s.vertex_count(), 0);
  auto add = [&](const Triangulation& t, const Coloring& signs) {
    for (const Face& f : faces(t)) {
      const int sign = signs.color_of(f.label());
      if (sign != 1 && sign != -1) throw DomainError("face signs must be +1 or -1");
      sum[f.low] += sign;
      sum[f.mid] += sign;
      sum[f.high] += sign;
    }
  };
  add(s.north, s.signs->north);
  add(s.south, s.signs->south);
  std::vector<Vertex> bad;
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    if (sum[v] % 3 != 0) bad.push_back(v);
  }
  return bad;
}

bool is_heawood(const SphereTriangulation& s) { return heawood_violations(s).empty(); }

namespace {

struct Backtracker {
  const std::vector<std::vector<int>>& adj;
  int k;
  std::size_t max_nodes;
  std::size_t nodes = 0;
  std::vector<int> color;

  bool available(int v, int c) const {
    return std::none_of(adj[v].begin(), adj[v].end(), [&](int u) { return color[u] == c; });
  }

  int saturation(int v) const {
    std::vector<bool> used(k, false);
    for (int u : adj[v]) {
      if (color[u] >= 0) used[color[u]] = true;
    }
    return static_cast<int>(std::count(used.begin(), used.end(), true));
  }

  bool run() {
    if (++nodes > max_nodes) throw CapExceeded("coloring search", max_nodes);
    int pick = -1;
    int best = -1;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      if (color[v] >= 0) continue;
      const int sat = saturation(v);
      if (sat > best) {
        best = sat;
        pick = v;
      }
    }
    if (pick < 0) return true;
    for (int c = 0; c < k; ++c) {
      if (!available(pick, c)) continue;
      color[pick] = c;
      if (run()) return true;
    }
    color[pick] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> color_graph(const std::vector<std::vector<int>>& adjacency, int k,
                                            std::size_t max_nodes) {
  Backtracker bt{adjacency, k, max_nodes, 0, std::vector<int>(adjacency.size(), -1)};
  if (!bt.run()) return std::nullopt;
  return bt.color;
}

std::optional<std::vector<int>> four_color(const SphereTriangulation& s, std::size_t max_nodes) {
  std::vector<std::vector<int>> adj(s.vertex_count());
  for (const Diagonal& e : sphere_edges(s)) {
    adj[e.lo].push_back(e.hi);
    adj[e.hi].push_back(e.lo);
  }
  return color_graph(adj, 4, max_nodes);
}

std::optional<Diagonal> coloring_conflict(const SphereTriangulation& s,
                                          const std::vector<int>& colors) {
  for (const Diagonal& e : sphere_edges(s)) {
    if (colors.at(e.lo) == colors.at(e.hi)) return e;
  }
  return std::nullopt;
}

bool verify_coloring(const SphereTriangulation& s, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != s.vertex_count()) return false;
  if (std::any_of(colors.begin(), colors.end(), [](int c) { return c < 0 || c > 3; })) {
    return false;
  }
  return !coloring_conflict(s, colors);
}

SphereSigning heawood_signing_from_coloring(const SphereTriangulation& s,
                                            const std::vector<int>& colors) {
  if (!verify_coloring(s, colors)) throw DomainError("not a proper four coloring");
  auto sign_of = [&](const Face& f) {
    const int a = colors[f.low] ^ colors[f.mid];
    const int b = colors[f.mid] ^ colors[f.high];
    const int c = colors[f.high] ^ colors[f.low];
    const bool cyclic = (a == 1 && b == 2 && c == 3) || (a == 2 && b == 3 && c == 1) ||
                        (a == 3 && b == 1 && c == 2);
    return cyclic ? 1 : -1;
  };
  SphereSigning out{Coloring::constant(s.n(), 1), Coloring::constant(s.n(), 1)};
  for (const Face& f : faces(s.north)) out.north.set(f.label(), sign_of(f));
  for (const Face& f : faces(s.south)) out.south.set(f.label(), -sign_of(f));
  return out;
}

}  // namespace flipforge
