#pragma once

// Subwords of a word Q and the subword complex Delta(Q, w).
//
// A face F of Delta(Q, w) is recorded by the positions REMOVED from Q; the
// remaining letters Q \ F must contain a reduced word for w. Strata of the
// brick manifold are recorded by the positions KEPT. Both use Subword with
// an explicit role so the two readings cannot be mixed silently.

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "brick/coxeter.hpp"

namespace brick {

enum class SubwordRole {
  Face,  ///< marked positions are the removed letters (J, a face of Delta)
  Kept,  ///< marked positions are the letters kept (R, a stratum)
};

/// Position mask over a word of fixed length. Positions are 0-based.
class Subword {
 public:
  Subword() : Subword(0) {}
  explicit Subword(std::size_t word_size, SubwordRole role = SubwordRole::Face)
      : mask_(word_size, false), role_(role) {}
  static Subword from_positions(std::size_t word_size, const std::vector<std::size_t>& positions,
                                SubwordRole role = SubwordRole::Face);
  /// 1-based positions, as in the JSON formats.
  static Subword from_one_based(std::size_t word_size, const std::vector<std::size_t>& positions,
                                SubwordRole role = SubwordRole::Face);

  std::size_t word_size() const { return mask_.size(); }
  SubwordRole role() const { return role_; }
  bool contains(std::size_t k) const { return mask_.at(k); }
  void set(std::size_t k, bool value = true) { mask_.at(k) = value; }
  std::size_t count() const;
  std::vector<std::size_t> positions() const;
  std::vector<std::size_t> one_based() const;

  /// Same role, flipped mask.
  Subword complement() const;
  /// The same set of letters read in the other role: a face J becomes the
  /// kept-letter subword Q \ J and vice versa.
  Subword switch_role() const;
  bool is_subset_of(const Subword& other) const;
  Subword intersect(const Subword& other) const;

  /// Lexicographic on sorted position lists.
  friend std::strong_ordering operator<=>(const Subword& a, const Subword& b);
  friend bool operator==(const Subword& a, const Subword& b) = default;

 private:
  std::vector<bool> mask_;
  SubwordRole role_;
};

/// Letters of Q at the marked positions of a Kept subword.
Word kept_letters(const Word& q, const Subword& kept);

/// (Q \ J)_{(k)}: product of the first k letters of Q that are not in J.
GroupElement complement_product(const Word& q, const Subword& face, std::size_t k);

/// r(J, k) = (Q \ J)_{(k)}(alpha_{q_k}) in root coordinates; k is 0-based, so
/// the prefix consists of positions strictly before k.
IntVector root_function(const Word& q, const Subword& face, std::size_t k);

/// w(J, k) = (Q \ J)_{(k)}(omega_{q_k}) in weight coordinates, same indexing.
IntVector weight_function(const Word& q, const Subword& face, std::size_t k);

/// All r(J, k) for k = 0..|Q|-1 in one pass.
std::vector<IntVector> root_functions(const Word& q, const Subword& face);
std::vector<IntVector> weight_functions(const Word& q, const Subword& face);

/// Multiset {r(F, i) : i in F}, in increasing position order.
std::vector<IntVector> root_configuration(const Word& q, const Subword& face);

struct SubwordComplex {
  Word q;
  GroupElement w;
  /// Sorted lexicographically by positions; each of size |Q| - l(w).
  std::vector<Subword> facets;
  /// Dem(Q) == w, i.e. the complex is a sphere.
  bool sphere = false;

  /// True iff the face lies in some facet.
  bool is_face(const Subword& face) const;
};

/// Flip-graph search from the greedy facet. Non-sphere inputs are computed
/// and flagged through SubwordComplex::sphere.
SubwordComplex facets(const Word& q, const GroupElement& w);

/// The greedy facet: Q \ F is the positionwise-leftmost reduced subword for
/// w. Empty when w is not a subword product of Q.
std::optional<Subword> greedy_facet(const Word& q, const GroupElement& w);

/// Exchanges position i of facet F for the unique j with F \ {i} u {j} a
/// facet. Throws DomainError when the ridge F \ {i} lies in only one facet.
std::pair<Subword, std::size_t> flip(const SubwordComplex& complex, const Subword& facet, std::size_t i);

bool is_sphere(const Word& q, const GroupElement& w);

struct StrataPoset {
  Word q;
  GroupElement w;
  /// Kept-letter subwords R with Dem(R) = w, sorted.
  std::vector<Subword> nodes;
  /// Pairs (a, b) of node indices with nodes[a] covered by nodes[b].
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t maximum = 0;
  std::vector<std::size_t> minimal;
  /// For all nodes R, S with Dem(R n S) = w, R n S is a node.
  bool intersection_closed = false;
};

/// Exhaustive over all 2^|Q| kept-letter masks; |Q| must be below 25.
StrataPoset strata_poset(const Word& q, const GroupElement& w);

struct RichardsonSeed {
  Word r;  ///< reduced word for v
  Word s;  ///< reduced word for u^{-1} w_0
  Word q;  ///< r + s
  bool demazure_is_longest = false;
  std::size_t fiber_dim = 0;  ///< |Q| - l(w_0)
};

/// Throws DomainError unless u <= v; requires a finite type.
RichardsonSeed richardson_seed(const GroupElement& u, const GroupElement& v);

}  // namespace brick
