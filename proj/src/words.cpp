#include "flipforge/words.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "flipforge/errors.h"

namespace flipforge {

std::vector<int> evaluation(const Word& w) {
  std::vector<int> mu;
  for (int letter : w) {
    if (letter < 1) throw DomainError("color letters must be positive, got " + std::to_string(letter));
    if (static_cast<std::size_t>(letter) > mu.size()) mu.resize(letter, 0);
    ++mu[letter - 1];
  }
  return mu;
}

bool is_permutation(const Word& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int letter : w) {
    if (letter < 1 || static_cast<std::size_t>(letter) > w.size() || seen[letter]) return false;
    seen[letter] = true;
  }
  return true;
}

bool is_signed_permutation(const SignedWord& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int letter : w) {
    const auto a = static_cast<std::size_t>(std::abs(letter));
    if (a < 1 || a > w.size() || seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

Permutation standardize(const Word& w) {
  const auto mu = evaluation(w);
  std::vector<int> next(mu.size() + 1, 1);
  for (std::size_t k = 1; k < mu.size(); ++k) next[k + 1] = next[k] + mu[k - 1];
  Permutation sigma(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) sigma[i] = next[w[i]]++;
  return sigma;
}

namespace {

// Interval index (0-based) for every value 1..n under mu.
std::vector<int> interval_of_value(std::span<const int> mu, std::size_t n) {
  std::vector<int> block(n + 1, -1);
  std::size_t value = 1;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] < 0) throw DomainError("negative multiplicity in evaluation");
    for (int c = 0; c < mu[k]; ++c) {
      if (value > n) throw DomainError("evaluation sums past the permutation length");
      block[value++] = static_cast<int>(k);
    }
  }
  if (value != n + 1) throw DomainError("evaluation does not sum to the permutation length");
  return block;
}

// Index of the first interval whose values are not left-to-right increasing, or -1.
int first_disordered_interval(const Permutation& sigma, std::span<const int> mu) {
  if (!is_permutation(sigma)) throw DomainError("not a permutation");
  const auto block = interval_of_value(mu, sigma.size());
  std::vector<int> last(mu.size(), 0);
  for (int v : sigma) {
    int& prev = last[block[v]];
    if (v < prev) return block[v];
    prev = v;
  }
  return -1;
}

}  // namespace

bool in_evaluation_class(const Permutation& sigma, std::span<const int> mu) {
  return first_disordered_interval(sigma, mu) < 0;
}

Word destandardize(const Permutation& sigma, std::span<const int> mu) {
  if (int bad = first_disordered_interval(sigma, mu); bad >= 0) {
    throw DomainError("permutation is not a standardized word of this evaluation: values of run " +
                      std::to_string(bad + 1) + " are not in increasing order");
  }
  const auto block = interval_of_value(mu, sigma.size());
  Word w(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) w[i] = block[sigma[i]] + 1;
  return w;
}

DeltaProfile delta_profile(const Permutation& sigma) {
  if (!is_permutation(sigma)) throw DomainError("not a permutation");
  const std::size_t n = sigma.size();
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 0; i < n; ++i) pos[sigma[i]] = i;
  DeltaProfile out;
  std::size_t v = 1;
  while (v <= n) {
    std::vector<int> seg{static_cast<int>(v)};
    while (v + 1 <= n && pos[v + 1] > pos[v]) seg.push_back(static_cast<int>(++v));
    ++v;
    out.lengths.push_back(static_cast<int>(seg.size()));
    out.segments.push_back(std::move(seg));
  }
  return out;
}

namespace {

// A letter y in w[from..] with x <= y < z, as a position.
std::optional<std::size_t> find_witness_letter(const Word& w, std::size_t from, int x, int z) {
  for (std::size_t k = from; k < w.size(); ++k) {
    if (x <= w[k] && w[k] < z) return k;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SylvesterWitness> sylvester_adjacent(const Word& w1, const Word& w2) {
  if (w1.size() != w2.size()) return std::nullopt;
  auto [a, b] = std::mismatch(w1.begin(), w1.end(), w2.begin());
  if (a == w1.end()) return std::nullopt;
  const auto i = static_cast<std::size_t>(a - w1.begin());
  if (i + 1 >= w1.size()) return std::nullopt;
  if (w1[i] != w2[i + 1] || w1[i + 1] != w2[i]) return std::nullopt;
  if (!std::equal(w1.begin() + i + 2, w1.end(), w2.begin() + i + 2)) return std::nullopt;
  const bool first = w1[i] < w1[i + 1];
  const Word& holder = first ? w1 : w2;
  const int x = holder[i];
  const int z = holder[i + 1];
  if (x >= z) return std::nullopt;
  auto k = find_witness_letter(holder, i + 2, x, z);
  if (!k) return std::nullopt;
  return SylvesterWitness{i, x, z, holder[*k], *k, first};
}

std::vector<Word> sylvester_neighbors(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const int lo = std::min(w[i], w[i + 1]);
    const int hi = std::max(w[i], w[i + 1]);
    if (lo == hi) continue;
    if (!find_witness_letter(w, i + 2, lo, hi)) continue;
    Word next = w;
    std::swap(next[i], next[i + 1]);
    out.push_back(std::move(next));
  }
  return out;
}

std::set<Word> sylvester_class(const Word& w, std::size_t cap) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (Word& next : sylvester_neighbors(cur)) {
      if (seen.contains(next)) continue;
      if (seen.size() >= cap) throw CapExceeded("sylvester class closure", cap);
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return seen;
}

Permutation abs_word(const SignedWord& w) {
  Permutation out(w.size());
  std::transform(w.begin(), w.end(), out.begin(), [](int b) { return std::abs(b); });
  return out;
}

}  // namespace flipforge
