#pragma once

// Type A wiring diagrams: the sorting network of a word, pseudoline
// arrangements given by a set of contacts, and brick counting.
//
// Levels and pseudolines are numbered 1..n from the bottom in every public
// structure here; pseudoline L is the one entering on the left at level L.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brick/coxeter.hpp"
#include "brick/subword.hpp"

namespace brick {

struct Commutator {
  std::size_t position;  ///< 1-based position k in Q
  std::size_t level;     ///< joins levels `level` and `level + 1`
};

/// Region between two consecutive levels, bounded on the left by a
/// commutator and on the right by the next commutator on the same pair of
/// levels (or unbounded).
struct Brick {
  std::size_t commutator;         ///< 1-based position of the left boundary
  std::size_t level;              ///< lies between `level` and `level + 1`
  std::optional<std::size_t> end; ///< 1-based position of the right boundary
};

struct SortingNetwork {
  std::size_t levels = 0;
  std::vector<Commutator> commutators;
  std::vector<Brick> bricks;
};

/// Q must be a word of A_{levels-1}; throws DomainError otherwise.
SortingNetwork sorting_network(const Word& q, std::size_t levels);

struct PseudolineArrangement {
  SortingNetwork network;
  Subword contacts;
  /// trajectories[L-1][k] = level of pseudoline L after the first k
  /// commutators (k = 0..|Q|).
  std::vector<std::vector<std::size_t>> trajectories;
  /// Every pair of pseudolines crosses at most once.
  bool valid = false;
  /// start_level[i-1] = level on the left of the line ending at level i.
  std::vector<std::size_t> start_level;
};

/// Routes the n pseudolines through N(Q), crossing at positions outside J
/// and touching at positions in J. Always constructible; `valid` reports
/// whether it is a pseudoline arrangement.
PseudolineArrangement arrangement_from_face(const Word& q, const Subword& face);

/// i-th entry = number of bricks lying above pseudoline i.
IntVector brick_count_vector(const PseudolineArrangement& arr);

/// Lines (1-based labels) below the brick whose left boundary is commutator
/// k (1-based).
std::vector<std::size_t> lines_below_brick(const PseudolineArrangement& arr, std::size_t k);

/// Type A realization: sigma with g(e_p) = e_{sigma(p)}, 1-based values.
std::vector<std::size_t> permutation_of(const GroupElement& g);

/// Weight-basis vector of A_{n-1} to R^n, omega_i -> (1,..,1,0,..,0) with i
/// ones, fixing the free (1,...,1) component by the coordinate sum.
/// Throws DomainError when `coordinate_sum` is incompatible.
IntVector ambient_coordinates(std::span<const std::int64_t> weight, std::int64_t coordinate_sum);

enum class DrawingFormat { Svg, Tikz };
DrawingFormat parse_drawing_format(std::string_view name);

std::string render(const PseudolineArrangement& arr, DrawingFormat format);
std::string render(const SortingNetwork& network, DrawingFormat format);

}  // namespace brick
