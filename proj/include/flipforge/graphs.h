#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "flipforge/triangulation.h"
#include "flipforge/words.h"

namespace flipforge {

/// All triangulations with n inner labels, sorted. The face on the closing
/// edge 0-infinity has some apex k; the two sub-polygons on either side are
/// triangulated independently. Throws DomainError when n exceeds `max_n`.
std::vector<Triangulation> enumerate_triangulations(int n, int max_n = 12);

/// c_n by the closed form C(2n, n) / (n + 1). Throws DomainError on 64-bit overflow.
std::uint64_t catalan(int n);
/// c_n by the recurrence c_n = sum c_{i-1} c_{n-i}. Same overflow behavior.
std::uint64_t catalan_recurrence(int n);

enum class GraphKind { Flip, Cayley, WordCayley, Switched, Homogeneous, SignedState };
const char* to_string(GraphKind kind);

/// An undirected simple graph on string keys. Vertex order is the order of
/// `keys`; adjacency lists are sorted.
struct CombGraph {
  GraphKind kind = GraphKind::Flip;
  std::vector<std::string> keys;
  std::vector<std::vector<int>> adjacency;

  std::size_t vertex_count() const { return keys.size(); }
  std::size_t edge_count() const;
  std::size_t component_count() const;
  bool connected() const { return component_count() <= 1; }
};

/// Digits when every letter is at most 9, otherwise comma separated.
std::string word_key(const Word& w);

/// Signed-state key: canonical triangulation key, '|', one +/- per label.
std::string signed_key(const ColoredTriangulation& st);

CombGraph build_flip_graph(int n, int max_n = 8);
/// Permutations of 1..n in lexicographic order; edges swap adjacent letters.
CombGraph build_cayley_graph(int n, int max_n = 8);
/// Words of evaluation mu; edges swap two adjacent distinct letters.
CombGraph build_word_cayley_graph(std::span<const int> mu, int max_n = 8);
/// Simple triangulations colored by epsilon_mu; edges are switched flips.
CombGraph build_switched_graph(std::span<const int> mu, int max_n = 8);
/// Colored triangulations reachable from ct by homogeneous flips.
CombGraph build_homogeneous_graph(const ColoredTriangulation& ct);
/// All c_n 2^n signed triangulations; edges are signed flips.
CombGraph build_signed_state_graph(int n, int max_n = 7);

/// Every composition of n (positive parts), in lexicographic order.
std::vector<std::vector<int>> compositions(int n);
/// Every word of evaluation mu, in lexicographic order.
std::vector<Word> words_of_evaluation(std::span<const int> mu);

struct MorphismReport {
  std::size_t edges = 0;
  std::size_t contracted = 0;
  std::size_t mapped = 0;
  std::size_t violations = 0;
  std::size_t criterion_mismatches = 0;  // contracted iff sylvester adjacent
  bool onto = false;
  bool ok() const { return violations == 0 && criterion_mismatches == 0 && onto; }
};

/// phi on the Cayley graph of S_n: each edge is contracted or sent to a flip.
MorphismReport phi_morphism_check(int n, int max_n = 7);

struct FiberReport {
  std::size_t permutations = 0;
  std::size_t classes = 0;
  std::uint64_t expected_classes = 0;
  std::size_t mismatched_fibers = 0;  // fibers differing from the sylvester class
  bool ok() const { return classes == expected_classes && mismatched_fibers == 0; }
};

/// Fibers of phi against readings and sylvester classes.
FiberReport fiber_audit(int n, int max_n = 7);

struct HomogeneousReport {
  std::vector<int> component_sizes;  // faces per monochrome component, sorted
  std::size_t reachable = 0;
  std::uint64_t product = 1;
  bool ok() const { return reachable == product; }
};

/// Monochrome components glued across diagonals, and the homogeneous
/// reachable set compared with the product of their Catalan numbers.
HomogeneousReport homogeneous_components(const Triangulation& t, const Coloring& eps);

struct SwitchedReport {
  CombGraph graph;
  bool connected = false;
  std::size_t morphism_violations = 0;  // Cayley edges not sent to equal or adjacent states
  bool onto = false;
  bool ok() const { return connected && morphism_violations == 0 && onto; }
};

SwitchedReport switched_graph(std::span<const int> mu, int max_n = 8);

struct Ref1Report {
  int n = 0;
  std::size_t triangulations = 0;
  std::size_t signed_states = 0;
  std::size_t components = 0;
  std::size_t conflicts = 0;  // closures holding one triangulation with two signings
  std::vector<std::pair<std::size_t, std::size_t>> missing;  // (from, to) indices
  bool ok() const { return missing.empty() && conflicts == 0; }
};

/// For every triangulation T, the closures of all signings of T together
/// cover every triangulation. Also audits that no closure contains a
/// triangulation twice. Work is split over `threads` threads.
Ref1Report verify_ref1(int n, unsigned threads = 1, int max_n = 7);

struct DiagramReport {
  std::size_t words = 0;
  std::size_t square_violations = 0;     // underlying(Phi(w)) != phi(std(w))
  std::size_t insertion_mismatches = 0;  // insertion fold differs from Phi(w)
  std::size_t not_simple = 0;
  std::size_t std_edge_violations = 0;   // std does not map edges to edges
  std::size_t phi_edge_violations = 0;   // Phi does not map edges to equal or switched-adjacent states
  std::size_t std_collisions = 0;        // std not injective
  bool ok() const {
    return square_violations == 0 && insertion_mismatches == 0 && not_simple == 0 &&
           std_edge_violations == 0 && phi_edge_violations == 0 && std_collisions == 0;
  }
};

DiagramReport commuting_diagram_check(std::span<const int> mu, int max_n = 7);

/// Runs fn(i) for i in [0, count) on up to `threads` threads.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace flipforge
