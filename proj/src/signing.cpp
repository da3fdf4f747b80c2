#include "flipforge/signing.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "flipforge/errors.h"
#include "flipforge/phi.h"

namespace flipforge {

ClosureReport sigma_closure(const SignedState& start, std::size_t max_states) {
  ClosureReport report;
  std::map<Triangulation, Coloring> seen;
  seen.emplace(start.triangulation, start.coloring);
  report.states.push_back(start);
  for (std::size_t head = 0; head < report.states.size(); ++head) {
    const SignedState cur = report.states[head];
    for (const Diagonal& d : cur.triangulation.diagonals()) {
      auto next = signed_flip(cur, d);
      if (!next) continue;
      auto [it, fresh] = seen.emplace(next->triangulation, next->coloring);
      if (!fresh) {
        if (it->second != next->coloring) ++report.conflicts;
        continue;
      }
      if (report.states.size() >= max_states) throw CapExceeded("signed closure", max_states);
      report.states.push_back(std::move(*next));
    }
  }
  return report;
}

const char* to_string(StepKind kind) { return kind == StepKind::K1 ? "K1" : "K2"; }

std::optional<StepKind> step_kind_from_string(std::string_view s) {
  if (s == "K1") return StepKind::K1;
  if (s == "K2") return StepKind::K2;
  return std::nullopt;
}

namespace {

// Index p such that w1 and w2 agree outside positions p, p+1, or nullopt.
std::optional<std::size_t> changed_pair(const SignedWord& w1, const SignedWord& w2) {
  if (w1.size() != w2.size()) return std::nullopt;
  std::size_t first = w1.size();
  std::size_t last = 0;
  for (std::size_t i = 0; i < w1.size(); ++i) {
    if (w1[i] == w2[i]) continue;
    first = std::min(first, i);
    last = i;
  }
  if (first == w1.size() || last != first + 1) return std::nullopt;
  return first;
}

bool suffix_separates(const SignedWord& w, std::size_t from, int a, int c) {
  const int lo = std::min(std::abs(a), std::abs(c));
  const int hi = std::max(std::abs(a), std::abs(c));
  for (std::size_t i = from; i < w.size(); ++i) {
    const int b = std::abs(w[i]);
    if (lo < b && b < hi) return true;
  }
  return false;
}

std::string letter(int v) { return std::to_string(v); }

}  // namespace

std::optional<StepWitness> classify_step(const SignedWord& w1, const SignedWord& w2) {
  if (!is_signed_permutation(w1) || !is_signed_permutation(w2)) return std::nullopt;
  auto p = changed_pair(w1, w2);
  if (!p) return std::nullopt;
  const int a = w1[*p];
  const int c = w1[*p + 1];
  StepWitness witness;
  witness.position = *p;
  witness.alpha = a;
  witness.gamma = c;
  if (w2[*p] == c && w2[*p + 1] == a) {
    auto syl = sylvester_adjacent(abs_word(w1), abs_word(w2));
    if (!syl) return std::nullopt;
    witness.kind = StepKind::K1;
    witness.beta = w1[syl->y_position];
    return witness;
  }
  if (w2[*p] == bar(c) && w2[*p + 1] == bar(a)) {
    if ((a > 0) != (c > 0)) return std::nullopt;
    if (suffix_separates(w1, *p + 2, a, c)) return std::nullopt;
    witness.kind = StepKind::K2;
    return witness;
  }
  return std::nullopt;
}

namespace {

std::string explain(const SignedWord& w1, const SignedWord& w2, StepKind kind) {
  if (w1.size() != w2.size()) return "words have different lengths";
  if (!is_signed_permutation(w1) || !is_signed_permutation(w2)) {
    return "not a signed permutation";
  }
  auto p = changed_pair(w1, w2);
  if (!p) return "words do not differ in exactly one adjacent pair";
  const int a = w1[*p];
  const int c = w1[*p + 1];
  const std::string at = "at position " + std::to_string(*p);
  if (kind == StepKind::K1) {
    if (w2[*p] != c || w2[*p + 1] != a) return "K1 step does not carry signs with letters " + at;
    return "K1 step " + at + " is not a sylvester transposition";
  }
  if (w2[*p] != bar(c) || w2[*p + 1] != bar(a)) return "K2 step does not bar both letters " + at;
  if ((a > 0) != (c > 0)) {
    return "K2 letters " + letter(a) + " and " + letter(c) + " have opposite signs " + at;
  }
  return "K2 step " + at + " has a later letter strictly between " + letter(std::abs(a)) +
         " and " + letter(std::abs(c));
}

}  // namespace

CertificateCheck validate_certificate(const Certificate& cert) {
  CertificateCheck check;
  if (cert.chain.empty()) {
    check.reason = "empty chain";
    return check;
  }
  check.start = abs_word(cert.chain.front());
  check.end = abs_word(cert.chain.back());
  if (cert.kinds.size() + 1 != cert.chain.size()) {
    check.reason = "expected " + std::to_string(cert.chain.size() - 1) + " step kinds, got " +
                   std::to_string(cert.kinds.size());
    check.bad_step = std::min(cert.kinds.size(), cert.chain.size() - 1);
    return check;
  }
  if (!is_signed_permutation(cert.chain.front())) {
    check.reason = "first word is not a signed permutation";
    return check;
  }
  for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
    auto w = classify_step(cert.chain[i], cert.chain[i + 1]);
    if (!w || w->kind != cert.kinds[i]) {
      check.bad_step = i;
      check.reason = explain(cert.chain[i], cert.chain[i + 1], cert.kinds[i]);
      return check;
    }
  }
  check.ok = true;
  return check;
}

SignedWord sign_word(const Permutation& sigma, const Coloring& signs) {
  SignedWord out;
  out.reserve(sigma.size());
  for (int v : sigma) out.push_back(v * signs.color_of(v));
  return out;
}

Coloring signing_from_mask(int n, unsigned long long mask) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1ULL ? -1 : 1;
  return Coloring(std::move(s));
}

std::optional<SignedPath> signable_path_search(const Triangulation& from, const Triangulation& to,
                                               std::size_t max_states) {
  if (from.n() != to.n()) throw DomainError("triangulations have different n");
  const int n = from.n();
  if (n > 62) throw DomainError("n too large for signing enumeration");
  struct Node {
    SignedState state;
    std::size_t parent;
    Diagonal via;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::set<SignedState> seen;
  auto path_to = [&](std::size_t i) {
    SignedPath path;
    for (; i != kRoot; i = nodes[i].parent) {
      path.states.push_back(nodes[i].state);
      if (nodes[i].parent != kRoot) path.flips.push_back(nodes[i].via);
    }
    std::reverse(path.states.begin(), path.states.end());
    std::reverse(path.flips.begin(), path.flips.end());
    return path;
  };
  const unsigned long long masks = 1ULL << n;
  for (unsigned long long m = 0; m < masks; ++m) {
    SignedState s{from, signing_from_mask(n, m)};
    if (nodes.size() >= max_states) throw CapExceeded("signed path search", max_states);
    seen.insert(s);
    nodes.push_back({std::move(s), kRoot, {}});
    if (from == to) return path_to(0);
  }
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (const Diagonal& d : nodes[head].state.triangulation.diagonals()) {
      auto next = signed_flip(nodes[head].state, d);
      if (!next || seen.count(*next)) continue;
      if (nodes.size() >= max_states) throw CapExceeded("signed path search", max_states);
      seen.insert(*next);
      const bool hit = next->triangulation == to;
      nodes.push_back({std::move(*next), head, d});
      if (hit) return path_to(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

namespace {

// Shortest chain of sylvester transpositions from a to b inside one class.
std::vector<Permutation> sylvester_path(const Permutation& a, const Permutation& b) {
  std::map<Permutation, Permutation> parent;
  parent.emplace(a, Permutation{});
  std::deque<Permutation> queue{a};
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    if (cur == b) break;
    for (Permutation& next : sylvester_neighbors(cur)) {
      if (parent.count(next)) continue;
      parent.emplace(next, cur);
      queue.push_back(std::move(next));
    }
  }
  if (!parent.count(b)) throw DomainError("readings are not sylvester equivalent");
  std::vector<Permutation> chain;
  for (Permutation cur = b; !cur.empty(); cur = parent.at(cur)) chain.push_back(cur);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

Certificate emit_word_certificate(const SignedPath& path) {
  if (path.states.empty()) throw DomainError("empty signed path");
  Certificate cert;
  const SignedState& start = path.states.front();
  Permutation current = canonical_reading(start.triangulation);
  cert.chain.push_back(sign_word(current, start.coloring));
  for (std::size_t i = 0; i < path.flips.size(); ++i) {
    const SignedState& a = path.states[i];
    const SignedState& b = path.states[i + 1];
    auto witness = flip_characterization(a.triangulation, b.triangulation);
    if (!witness) throw DomainError("consecutive states do not differ by a flip");
    const auto bridge = sylvester_path(current, witness->first);
    for (std::size_t k = 1; k < bridge.size(); ++k) {
      cert.chain.push_back(sign_word(bridge[k], a.coloring));
      cert.kinds.push_back(StepKind::K1);
    }
    cert.chain.push_back(sign_word(witness->second, b.coloring));
    cert.kinds.push_back(StepKind::K2);
    current = witness->second;
  }
  return cert;
}

PathSigning sign_path_diagonals(std::span<const Triangulation> path) {
  PathSigning result;
  if (path.empty()) throw DomainError("malformed path: no triangulations");
  std::vector<FlipQuad> quads;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto d = flip_between(path[i], path[i + 1]);
    if (!d) {
      throw DomainError("malformed path: triangulations " + std::to_string(i) + " and " +
                        std::to_string(i + 1) + " do not differ by a flip");
    }
    quads.push_back(flip_quad(path[i], *d));
  }
  std::map<Diagonal, int> tracked;
  for (std::size_t i = 0; i < quads.size(); ++i) {
    const FlipQuad& q = quads[i];
    if (auto it = tracked.find(q.removed); it != tracked.end()) {
      if (it->second < 0) {
        result.failed_step = i;
        return result;
      }
      tracked.erase(it);
    }
    for (const Diagonal& side : q.sides()) {
      if (auto it = tracked.find(side); it != tracked.end()) it->second = -it->second;
    }
    tracked[q.added] = 1;
  }
  result.signable = true;
  DiagonalSigning last{path.back(), tracked};
  for (const Diagonal& d : path.back().diagonals()) {
    if (last.signs.emplace(d, 1).second) result.completed.push_back(d);
  }
  result.signings.assign(path.size(), {});
  result.signings.back() = last;
  for (std::size_t i = quads.size(); i-- > 0;) {
    const FlipQuad& q = quads[i];
    DiagonalSigning prev{path[i], result.signings[i + 1].signs};
    prev.signs.erase(q.added);
    for (const Diagonal& side : q.sides()) {
      if (auto it = prev.signs.find(side); it != prev.signs.end()) it->second = -it->second;
    }
    prev.signs[q.removed] = 1;
    result.signings[i] = std::move(prev);
  }
  return result;
}

std::optional<Coloring> signable_by_face_signs(std::span<const Triangulation> path) {
  if (path.empty()) throw DomainError("malformed path: no triangulations");
  const int n = path.front().n();
  if (n > 30) throw DomainError("n too large for exhaustive signing simulation");
  std::vector<Diagonal> flips;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto d = flip_between(path[i], path[i + 1]);
    if (!d) throw DomainError("malformed path: step " + std::to_string(i) + " is not a flip");
    flips.push_back(*d);
  }
  for (unsigned long long m = 0; m < (1ULL << n); ++m) {
    const Coloring eps = signing_from_mask(n, m);
    SignedState s{path.front(), eps};
    bool ok = true;
    for (const Diagonal& d : flips) {
      auto next = signed_flip(s, d);
      if (!next) {
        ok = false;
        break;
      }
      s = std::move(*next);
    }
    if (ok) return eps;
  }
  return std::nullopt;
}

namespace {

// Union-find over letters with the parity of each letter's initial sign
// relative to its root.
class ParityUnion {
 public:
  explicit ParityUnion(int n) : parent_(n + 1), parity_(n + 1, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::pair<int, int> find(int v) {
    int p = 0;
    int r = v;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // Path compression keeps the accumulated parity.
    int cur = v;
    int acc = p;
    while (parent_[cur] != cur) {
      const int next = parent_[cur];
      const int step = parity_[cur];
      parent_[cur] = r;
      parity_[cur] = acc;
      acc ^= step;
      cur = next;
    }
    return {r, p};
  }
  // Requires parity(a) xor parity(b) == rel; false on contradiction.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

}  // namespace

PermutationPathSigning sign_permutation_path(std::span<const Permutation> path) {
  PermutationPathSigning result;
  if (path.empty()) throw DomainError("malformed path: no permutations");
  const int n = static_cast<int>(path.front().size());
  for (const Permutation& p : path) {
    if (!is_permutation(p) || static_cast<int>(p.size()) != n) {
      throw DomainError("malformed path: entries must be permutations of one length");
    }
  }
  // Letters barred by the steps so far; the parity of a letter's initial sign
  // is what the constraints pin down.
  std::vector<int> flips(n + 1, 0);
  std::vector<std::size_t> k2_positions;
  std::vector<std::size_t> k2_steps;
  ParityUnion constraints(n);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto p = changed_pair(path[i], path[i + 1]);
    if (!p || path[i][*p] != path[i + 1][*p + 1] || path[i][*p + 1] != path[i + 1][*p]) {
      throw DomainError("malformed path: step " + std::to_string(i) +
                        " is not an adjacent transposition");
    }
    if (sylvester_adjacent(path[i], path[i + 1])) continue;
    const int a = path[i][*p];
    const int c = path[i][*p + 1];
    // Current signs agree: init(a) * (-1)^flips(a) == init(c) * (-1)^flips(c).
    if (!constraints.unite(a, c, flips[a] ^ flips[c])) {
      result.failed_step = i;
      return result;
    }
    flips[a] ^= 1;
    flips[c] ^= 1;
    k2_steps.push_back(i);
    k2_positions.push_back(*p);
  }
  std::vector<int> sign(n + 1, 1);
  for (int v = 1; v <= n; ++v) sign[v] = constraints.find(v).second ? -1 : 1;
  result.signable = true;
  std::size_t next_k2 = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    SignedWord w;
    for (int v : path[i]) w.push_back(v * sign[v]);
    result.words.push_back(std::move(w));
    if (next_k2 < k2_steps.size() && k2_steps[next_k2] == i) {
      const std::size_t p = k2_positions[next_k2++];
      sign[path[i][p]] = -sign[path[i][p]];
      sign[path[i][p + 1]] = -sign[path[i][p + 1]];
    }
  }
  return result;
}

}  // namespace flipforge
