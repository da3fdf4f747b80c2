#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flipforge/flips.h"
#include "flipforge/triangulation.h"
#include "flipforge/words.h"

namespace flipforge {

/// A triangulation with a sign (+1/-1) on every face label.
using SignedState = ColoredTriangulation;

inline constexpr std::size_t kDefaultMaxStates = 4'000'000;

/// Closure of a signed triangulation under signed flips, in breadth-first
/// order. `conflicts` counts underlying triangulations reached with two
/// different signings; it stays zero for every start.
struct ClosureReport {
  std::vector<SignedState> states;
  std::size_t conflicts = 0;
};

ClosureReport sigma_closure(const SignedState& start, std::size_t max_states = kDefaultMaxStates);

/// Authorized transpositions between signed permutations.
///  K1: w1 = u a c v b w, w2 = u c a v b w with |a| < |b| < |c| (either
///      orientation), signs travelling with their letters.
///  K2: w1 = u a c v, w2 = u c' a' v where a, c have the same sign, ' is the
///      bar involution, and v holds no letter strictly between |a| and |c|.
enum class StepKind { K1, K2 };

const char* to_string(StepKind kind);
std::optional<StepKind> step_kind_from_string(std::string_view s);

struct StepWitness {
  StepKind kind = StepKind::K1;
  std::size_t position = 0;
  int alpha = 0;  // w1[position]
  int gamma = 0;  // w1[position + 1]
  std::optional<int> beta;  // K1 only: the letter licensing the transposition
};

std::optional<StepWitness> classify_step(const SignedWord& w1, const SignedWord& w2);

/// A chain of signed permutations and the kind of each step between them.
struct Certificate {
  std::vector<SignedWord> chain;
  std::vector<StepKind> kinds;
};

struct CertificateCheck {
  bool ok = false;
  std::size_t bad_step = 0;  // step from chain[bad_step] to chain[bad_step + 1]
  std::string reason;
  Permutation start;
  Permutation end;
};

CertificateCheck validate_certificate(const Certificate& cert);

/// Signing of a permutation: letter v carries the sign of face label v.
SignedWord sign_word(const Permutation& sigma, const Coloring& signs);

/// A sequence of signed flips from (from, start signs) to (to, end signs).
struct SignedPath {
  std::vector<SignedState> states;
  std::vector<Diagonal> flips;  // flips[i] takes states[i] to states[i+1]

  const Coloring& start_signs() const { return states.front().coloring; }
  const Coloring& end_signs() const { return states.back().coloring; }
};

/// Breadth-first search of the signed-state graph from every signing of
/// `from` at once. Returns a shortest path to some signing of `to`, or nullopt
/// when the reachable space is exhausted. Sources are taken in signing order
/// (all + first) and neighbors in diagonal order, so results are deterministic.
/// Throws CapExceeded past `max_states` visited states.
std::optional<SignedPath> signable_path_search(const Triangulation& from, const Triangulation& to,
                                               std::size_t max_states = kDefaultMaxStates);

/// Word-level certificate for a signed flip path: every signed flip becomes a
/// K2 step between witness readings, and consecutive readings of one
/// triangulation are bridged by K1 steps.
Certificate emit_word_certificate(const SignedPath& path);

/// Result of the diagonal-signing procedure on a flip path T_1..T_r.
struct PathSigning {
  bool signable = false;
  std::size_t failed_step = 0;  // index of the refused flip T_i -> T_{i+1}
  std::vector<DiagonalSigning> signings;  // total signing of each T_i when signable
  std::vector<Diagonal> completed;  // diagonals of T_r signed + arbitrarily
};

/// Tracks the signs of diagonals created along the path: each created
/// diagonal is signed +, sides of a flip quadrilateral that are tracked get
/// negated, and flipping a tracked diagonal signed - stops the procedure. On
/// success the untracked diagonals of T_r are signed + and the signings are
/// propagated back to T_1. Throws DomainError when consecutive triangulations
/// do not differ by a flip.
PathSigning sign_path_diagonals(std::span<const Triangulation> path);

/// Face-sign simulation: the first initial signing (in signing order) under
/// which every flip of the path is a legal signed flip.
std::optional<Coloring> signable_by_face_signs(std::span<const Triangulation> path);

/// Word-level procedure on a path of permutations in the Cayley graph of S_n.
/// Sylvester steps carry signs; other steps must swap two letters of equal
/// sign and bar both. Letters get their sign the first time a non-sylvester
/// step touches them, so the outcome does not depend on a guessed initial
/// signing. `failed_step` indexes the first step that cannot be signed.
struct PermutationPathSigning {
  bool signable = false;
  std::size_t failed_step = 0;
  std::vector<SignedWord> words;
};

PermutationPathSigning sign_permutation_path(std::span<const Permutation> path);

/// Signing enumeration order shared by every search: bit i of `mask` set
/// means label i+1 is negative.
Coloring signing_from_mask(int n, unsigned long long mask);

}  // namespace flipforge
