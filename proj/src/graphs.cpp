#include "flipforge/graphs.h"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "flipforge/errors.h"
#include "flipforge/flips.h"
#include "flipforge/phi.h"
#include "flipforge/signing.h"

namespace flipforge {

namespace {

void check_n(int n, int max_n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": n must be nonnegative");
  if (n > max_n) {
    throw DomainError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the limit " +
                      std::to_string(max_n));
  }
}

class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Triangulations of the polygon 0..len, as diagonal lists.
const std::vector<std::vector<Diagonal>>& polygon_triangulations(
    int len, std::map<int, std::vector<std::vector<Diagonal>>>& memo) {
  if (auto it = memo.find(len); it != memo.end()) return it->second;
  std::vector<std::vector<Diagonal>> out;
  if (len <= 1) {
    out.push_back({});
  } else {
    for (int k = 1; k < len; ++k) {
      const auto& left = polygon_triangulations(k, memo);
      const auto& right = polygon_triangulations(len - k, memo);
      for (const auto& l : left) {
        for (const auto& r : right) {
          std::vector<Diagonal> ds = l;
          for (const Diagonal& d : r) ds.push_back({d.lo + k, d.hi + k});
          if (k >= 2) ds.push_back({0, k});
          if (len - k >= 2) ds.push_back({k, len});
          out.push_back(std::move(ds));
        }
      }
    }
  }
  return memo.emplace(len, std::move(out)).first->second;
}

std::size_t index_of(const std::vector<Triangulation>& all, const Triangulation& t) {
  auto it = std::lower_bound(all.begin(), all.end(), t);
  if (it == all.end() || *it != t) throw Error("triangulation missing from enumeration");
  return static_cast<std::size_t>(it - all.begin());
}

void add_edge(CombGraph& g, int a, int b) {
  g.adjacency[a].push_back(b);
  g.adjacency[b].push_back(a);
}

void finish(CombGraph& g) {
  for (auto& list : g.adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int mu_total(std::span<const int> mu) {
  int n = 0;
  for (int m : mu) {
    if (m < 0) throw DomainError("composition parts must be nonnegative");
    n += m;
  }
  return n;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n, int max_n) {
  check_n(n, max_n, "enumerate_triangulations");
  std::map<int, std::vector<std::vector<Diagonal>>> memo;
  std::vector<Triangulation> out;
  for (const auto& ds : polygon_triangulations(n + 1, memo)) out.emplace_back(n, ds);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t catalan(int n) {
  if (n < 0) throw DomainError("catalan: n must be nonnegative");
  unsigned __int128 c = 1;
  for (int k = 0; k < n; ++k) {
    // c_{k+1} = c_k * 2(2k+1) / (k+2), exact at every step.
    c = c * (2 * (2 * static_cast<unsigned __int128>(k) + 1)) / (k + 2);
    if (c > UINT64_MAX) throw DomainError("catalan: c_" + std::to_string(n) + " overflows 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t catalan_recurrence(int n) {
  if (n < 0) throw DomainError("catalan: n must be nonnegative");
  std::vector<unsigned __int128> f(n + 1, 0);
  f[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 1; i <= m; ++i) f[m] += f[i - 1] * f[m - i];
    if (f[m] > UINT64_MAX) throw DomainError("catalan: c_" + std::to_string(n) + " overflows 64 bits");
  }
  return static_cast<std::uint64_t>(f[n]);
}

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Flip: return "flip";
    case GraphKind::Cayley: return "cayley";
    case GraphKind::WordCayley: return "word-cayley";
    case GraphKind::Switched: return "switched";
    case GraphKind::Homogeneous: return "homogeneous";
    case GraphKind::SignedState: return "signed";
  }
  return "?";
}

std::size_t CombGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& list : adjacency) deg += list.size();
  return deg / 2;
}

std::size_t CombGraph::component_count() const {
  Dsu dsu(keys.size());
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    for (int u : adjacency[v]) dsu.unite(v, u);
  }
  std::size_t roots = 0;
  for (std::size_t v = 0; v < keys.size(); ++v) roots += dsu.find(v) == v;
  return roots;
}

std::string word_key(const Word& w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](int c) { return 0 <= c && c <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + w[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(w[i]);
    }
  }
  return out;
}

std::string signed_key(const ColoredTriangulation& st) {
  std::string out = canonical_key(st.triangulation) + "|";
  for (int s : st.coloring.values()) out += s > 0 ? '+' : '-';
  return out;
}

CombGraph build_flip_graph(int n, int max_n) {
  check_n(n, max_n, "flip graph");
  const auto all = enumerate_triangulations(n, max_n);
  CombGraph g{GraphKind::Flip, {}, std::vector<std::vector<int>>(all.size())};
  for (const Triangulation& t : all) g.keys.push_back(canonical_key(t));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const Diagonal& d : all[i].diagonals()) {
      add_edge(g, static_cast<int>(i), static_cast<int>(index_of(all, flip(all[i], d).triangulation)));
    }
  }
  finish(g);
  return g;
}

CombGraph build_cayley_graph(int n, int max_n) {
  check_n(n, max_n, "cayley graph");
  const auto perms = all_permutations(n);
  CombGraph g{GraphKind::Cayley, {}, std::vector<std::vector<int>>(perms.size())};
  for (const auto& p : perms) g.keys.push_back(word_key(p));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (int k = 0; k + 1 < n; ++k) {
      Permutation q = perms[i];
      std::swap(q[k], q[k + 1]);
      auto it = std::lower_bound(perms.begin(), perms.end(), q);
      add_edge(g, static_cast<int>(i), static_cast<int>(it - perms.begin()));
    }
  }
  finish(g);
  return g;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  // Bit i of mask set: a part ends after position i.
  for (unsigned long long mask = 0; mask < (1ULL << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if ((mask >> i) & 1ULL) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_of_evaluation(std::span<const int> mu) {
  Word w;
  for (std::size_t c = 0; c < mu.size(); ++c) {
    if (mu[c] < 0) throw DomainError("composition parts must be nonnegative");
    w.insert(w.end(), mu[c], static_cast<int>(c) + 1);
  }
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

CombGraph build_word_cayley_graph(std::span<const int> mu, int max_n) {
  check_n(mu_total(mu), max_n, "word cayley graph");
  const auto words = words_of_evaluation(mu);
  CombGraph g{GraphKind::WordCayley, {}, std::vector<std::vector<int>>(words.size())};
  for (const auto& w : words) g.keys.push_back(word_key(w));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t k = 0; k + 1 < words[i].size(); ++k) {
      if (words[i][k] == words[i][k + 1]) continue;
      Word q = words[i];
      std::swap(q[k], q[k + 1]);
      auto it = std::lower_bound(words.begin(), words.end(), q);
      add_edge(g, static_cast<int>(i), static_cast<int>(it - words.begin()));
    }
  }
  finish(g);
  return g;
}

namespace {

struct SwitchedVertices {
  Coloring eps;
  std::vector<Triangulation> simple;
};

SwitchedVertices switched_vertices(std::span<const int> mu, int max_n) {
  const int n = mu_total(mu);
  check_n(n, max_n, "switched graph");
  SwitchedVertices out{block_coloring(mu), {}};
  for (Triangulation& t : enumerate_triangulations(n, max_n)) {
    if (is_simple(t, out.eps)) out.simple.push_back(std::move(t));
  }
  return out;
}

CombGraph switched_from(const SwitchedVertices& sv) {
  CombGraph g{GraphKind::Switched, {}, std::vector<std::vector<int>>(sv.simple.size())};
  for (const Triangulation& t : sv.simple) g.keys.push_back(canonical_key(t));
  for (std::size_t i = 0; i < sv.simple.size(); ++i) {
    for (const ColoredTriangulation& next : switched_neighbors({sv.simple[i], sv.eps})) {
      add_edge(g, static_cast<int>(i), static_cast<int>(index_of(sv.simple, next.triangulation)));
    }
  }
  finish(g);
  return g;
}

}  // namespace

CombGraph build_switched_graph(std::span<const int> mu, int max_n) {
  return switched_from(switched_vertices(mu, max_n));
}

CombGraph build_homogeneous_graph(const ColoredTriangulation& ct) {
  std::vector<ColoredTriangulation> order{ct};
  std::map<Triangulation, int> index{{ct.triangulation, 0}};
  std::vector<std::pair<int, int>> edges;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (ColoredTriangulation& next : homogeneous_neighbors(order[head])) {
      auto [it, fresh] = index.emplace(next.triangulation, static_cast<int>(order.size()));
      if (fresh) order.push_back(std::move(next));
      edges.emplace_back(static_cast<int>(head), it->second);
    }
  }
  CombGraph g{GraphKind::Homogeneous, {}, std::vector<std::vector<int>>(order.size())};
  for (const auto& st : order) g.keys.push_back(canonical_key(st.triangulation));
  for (auto [a, b] : edges) add_edge(g, a, b);
  finish(g);
  return g;
}

namespace {

// Flip table: for triangulation i and its j-th diagonal, the flipped
// triangulation and the two quadrilateral labels.
struct FlipEntry {
  std::uint32_t target;
  std::uint8_t low;
  std::uint8_t high;
};

std::vector<std::vector<FlipEntry>> flip_table(const std::vector<Triangulation>& all,
                                               unsigned threads) {
  std::vector<std::vector<FlipEntry>> table(all.size());
  parallel_for(all.size(), threads, [&](std::size_t i) {
    for (const Diagonal& d : all[i].diagonals()) {
      const FlipResult r = flip(all[i], d);
      table[i].push_back({static_cast<std::uint32_t>(index_of(all, r.triangulation)),
                          static_cast<std::uint8_t>(r.quad.low_label()),
                          static_cast<std::uint8_t>(r.quad.high_label())});
    }
  });
  return table;
}

}  // namespace

CombGraph build_signed_state_graph(int n, int max_n) {
  check_n(n, max_n, "signed-state graph");
  const auto all = enumerate_triangulations(n, max_n);
  const auto table = flip_table(all, 1);
  const std::size_t masks = std::size_t{1} << n;
  CombGraph g{GraphKind::SignedState, {}, std::vector<std::vector<int>>(all.size() * masks)};
  for (std::size_t t = 0; t < all.size(); ++t) {
    for (std::size_t m = 0; m < masks; ++m) {
      g.keys.push_back(signed_key({all[t], signing_from_mask(n, m)}));
      for (const FlipEntry& e : table[t]) {
        const bool a = (m >> (e.low - 1)) & 1;
        const bool b = (m >> (e.high - 1)) & 1;
        if (a != b) continue;
        const std::size_t m2 = m ^ (std::size_t{1} << (e.low - 1)) ^ (std::size_t{1} << (e.high - 1));
        add_edge(g, static_cast<int>(t * masks + m), static_cast<int>(e.target * masks + m2));
      }
    }
  }
  finish(g);
  return g;
}

MorphismReport phi_morphism_check(int n, int max_n) {
  check_n(n, max_n, "phi morphism check");
  MorphismReport report;
  const auto perms = all_permutations(n);
  std::set<Triangulation> images;
  for (const Permutation& p : perms) {
    const Triangulation tp = phi(p);
    images.insert(tp);
    for (int k = 0; k + 1 < n; ++k) {
      Permutation q = p;
      std::swap(q[k], q[k + 1]);
      if (q < p) continue;  // each undirected edge once
      ++report.edges;
      const Triangulation tq = phi(q);
      const bool syl = sylvester_adjacent(p, q).has_value();
      if (tp == tq) {
        ++report.contracted;
        if (!syl) ++report.criterion_mismatches;
      } else if (flip_between(tp, tq)) {
        ++report.mapped;
        if (syl) ++report.criterion_mismatches;
      } else {
        ++report.violations;
      }
    }
  }
  report.onto = images.size() == catalan(n);
  return report;
}

FiberReport fiber_audit(int n, int max_n) {
  check_n(n, max_n, "fiber audit");
  FiberReport report;
  report.expected_classes = catalan(n);
  std::map<Triangulation, std::set<Permutation>> fibers;
  for (const Permutation& p : all_permutations(n)) {
    fibers[phi(p)].insert(p);
    ++report.permutations;
  }
  report.classes = fibers.size();
  for (const auto& [t, fiber] : fibers) {
    if (fiber != readings(t) || fiber != sylvester_class(*fiber.begin())) ++report.mismatched_fibers;
  }
  return report;
}

HomogeneousReport homogeneous_components(const Triangulation& t, const Coloring& eps) {
  if (eps.size() != t.n()) throw DomainError("coloring length differs from n");
  HomogeneousReport report;
  Dsu dsu(t.n() + 1);
  for (const Diagonal& d : t.diagonals()) {
    const FlipQuad q = flip_quad(t, d);
    if (eps.color_of(q.low_label()) == eps.color_of(q.high_label())) {
      dsu.unite(q.low_label(), q.high_label());
    }
  }
  std::map<std::size_t, int> sizes;
  for (int label = 1; label <= t.n(); ++label) ++sizes[dsu.find(label)];
  for (auto [root, size] : sizes) {
    report.component_sizes.push_back(size);
    report.product *= catalan(size);
  }
  std::sort(report.component_sizes.begin(), report.component_sizes.end());
  report.reachable = build_homogeneous_graph({t, eps}).vertex_count();
  return report;
}

SwitchedReport switched_graph(std::span<const int> mu, int max_n) {
  const SwitchedVertices sv = switched_vertices(mu, max_n);
  SwitchedReport report;
  report.graph = switched_from(sv);
  report.connected = report.graph.connected();
  std::vector<bool> hit(sv.simple.size(), false);
  auto locate = [&](const Triangulation& t) -> long {
    auto it = std::lower_bound(sv.simple.begin(), sv.simple.end(), t);
    if (it == sv.simple.end() || *it != t) return -1;
    return it - sv.simple.begin();
  };
  for (const Word& w : words_of_evaluation(mu)) {
    const long i = locate(big_phi(w).triangulation);
    if (i < 0) {
      ++report.morphism_violations;
      continue;
    }
    hit[i] = true;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] >= w[k + 1]) continue;  // each undirected edge once
      Word v = w;
      std::swap(v[k], v[k + 1]);
      const long j = locate(big_phi(v).triangulation);
      if (j < 0) {
        ++report.morphism_violations;
      } else if (i != j && !std::binary_search(report.graph.adjacency[i].begin(),
                                                report.graph.adjacency[i].end(), j)) {
        ++report.morphism_violations;
      }
    }
  }
  report.onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return report;
}

Ref1Report verify_ref1(int n, unsigned threads, int max_n) {
  check_n(n, max_n, "verify_ref1");
  Ref1Report report;
  report.n = n;
  const auto all = enumerate_triangulations(n, max_n);
  const auto table = flip_table(all, threads);
  const std::size_t masks = std::size_t{1} << n;
  const std::size_t states = all.size() * masks;
  report.triangulations = all.size();
  report.signed_states = states;

  Dsu dsu(states);
  for (std::size_t t = 0; t < all.size(); ++t) {
    for (std::size_t m = 0; m < masks; ++m) {
      for (const FlipEntry& e : table[t]) {
        const std::size_t lo = std::size_t{1} << (e.low - 1);
        const std::size_t hi = std::size_t{1} << (e.high - 1);
        if (((m & lo) != 0) != ((m & hi) != 0)) continue;
        dsu.unite(t * masks + m, e.target * masks + (m ^ lo ^ hi));
      }
    }
  }
  // Dense component ids and, per component, the set of triangulations it covers.
  std::vector<std::size_t> comp(states);
  std::map<std::size_t, std::size_t> dense;
  for (std::size_t s = 0; s < states; ++s) {
    comp[s] = dense.emplace(dsu.find(s), dense.size()).first->second;
  }
  report.components = dense.size();
  const std::size_t words = (all.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> covers(dense.size(), std::vector<std::uint64_t>(words, 0));
  std::vector<bool> conflicted(dense.size(), false);
  for (std::size_t s = 0; s < states; ++s) {
    const std::size_t t = s / masks;
    auto& bits = covers[comp[s]];
    const std::uint64_t bit = std::uint64_t{1} << (t % 64);
    if (bits[t / 64] & bit) conflicted[comp[s]] = true;
    bits[t / 64] |= bit;
  }
  report.conflicts = static_cast<std::size_t>(std::count(conflicted.begin(), conflicted.end(), true));

  std::mutex guard;
  parallel_for(all.size(), threads, [&](std::size_t t) {
    std::vector<std::uint64_t> reach(words, 0);
    for (std::size_t m = 0; m < masks; ++m) {
      const auto& bits = covers[comp[t * masks + m]];
      for (std::size_t k = 0; k < words; ++k) reach[k] |= bits[k];
    }
    std::vector<std::pair<std::size_t, std::size_t>> missing;
    for (std::size_t u = 0; u < all.size(); ++u) {
      if (!(reach[u / 64] >> (u % 64) & 1)) missing.emplace_back(t, u);
    }
    if (missing.empty()) return;
    std::lock_guard<std::mutex> lock(guard);
    report.missing.insert(report.missing.end(), missing.begin(), missing.end());
  });
  std::sort(report.missing.begin(), report.missing.end());
  return report;
}

DiagramReport commuting_diagram_check(std::span<const int> mu, int max_n) {
  check_n(mu_total(mu), max_n, "commuting diagram check");
  DiagramReport report;
  std::set<Permutation> stds;
  for (const Word& w : words_of_evaluation(mu)) {
    ++report.words;
    const Permutation s = standardize(w);
    const ColoredTriangulation big = big_phi(w);
    if (big.triangulation != phi(s)) ++report.square_violations;
    if (insertion_fold(w) != big) ++report.insertion_mismatches;
    if (!is_simple(big)) ++report.not_simple;
    if (!stds.insert(s).second) ++report.std_collisions;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] >= w[k + 1]) continue;
      Word v = w;
      std::swap(v[k], v[k + 1]);
      Permutation expected = s;
      std::swap(expected[k], expected[k + 1]);
      if (standardize(v) != expected) ++report.std_edge_violations;
      const ColoredTriangulation other = big_phi(v);
      if (other == big) continue;
      auto d = flip_between(big.triangulation, other.triangulation);
      bool switched = false;
      if (d) {
        const FlipQuad q = flip_quad(big.triangulation, *d);
        switched = big.coloring.color_of(q.low_label()) != big.coloring.color_of(q.high_label()) &&
                   is_simple(other);
      }
      if (!switched) ++report.phi_edge_violations;
    }
  }
  return report;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::exception_ptr failure;
  std::mutex guard;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace flipforge
