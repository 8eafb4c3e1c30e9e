#pragma once

// Crystallographic Coxeter groups given by a Cartan matrix.
//
// Conventions used throughout the library:
//   * generators are indexed 0..rank-1 internally; textual input and output
//     (CLI, JSON) is 1-based;
//   * the simple root alpha_j written in fundamental-weight coordinates is
//     column j of the Cartan matrix A;
//   * s_i acts on weight coordinates by v -> v - v_i * alpha_i and on root
//     coordinates by alpha_j -> alpha_j - A[i][j] * alpha_i.
// With these choices every group element is an integer matrix in both bases
// and A * rootMatrix == weightMatrix * A.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brick {

using IntVector = std::vector<std::int64_t>;

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::size_t n, std::vector<std::int64_t> row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  IntVector column(std::size_t c) const;
  IntVector apply(std::span<const std::int64_t> v) const;
  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Sign of a vector in root coordinates: +1 if nonzero and all entries >= 0,
/// -1 if nonzero and all entries <= 0, 0 otherwise (zero or mixed).
int root_sign(std::span<const std::int64_t> root);

class GroupElement;

/// Cartan datum of a crystallographic Coxeter group. Cheap to copy; the
/// underlying data is immutable and shared.
class CoxeterDatum {
 public:
  /// Standard finite type, e.g. finite_type('B', 3). Bourbaki numbering.
  static CoxeterDatum finite_type(char family, std::size_t index);
  /// Generalized Cartan matrix; validated (A_ii = 2, A_ij <= 0,
  /// A_ij = 0 iff A_ji = 0).
  static CoxeterDatum custom(IntMatrix cartan);
  /// "A2", "B3", "D4", "E6", "F4", "G2" or "custom:[[2,-1],[-1,2]]".
  static CoxeterDatum parse(std::string_view literal);

  std::size_t rank() const;
  const IntMatrix& cartan() const;
  /// "A2", ... or "custom".
  const std::string& label() const;
  /// Canonical literal accepted by parse().
  std::string literal() const;

  bool is_finite() const;
  /// Cartan matrix equals the one of A_rank (whatever the label says).
  bool is_type_a() const;
  /// Positive roots in root coordinates, sorted by height then lexicographically.
  /// Throws DomainError for infinite types.
  const std::vector<IntVector>& positive_roots() const;

  friend bool operator==(const CoxeterDatum& a, const CoxeterDatum& b);

 private:
  struct Data;
  explicit CoxeterDatum(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static CoxeterDatum build(IntMatrix cartan, std::string label);

  std::shared_ptr<const Data> data_;
};

/// A Weyl group element, stored as its action on root and weight coordinates.
/// Equality compares the root matrix.
class GroupElement {
 public:
  static GroupElement identity(const CoxeterDatum& datum);

  const CoxeterDatum& datum() const { return datum_; }
  const IntMatrix& root_matrix() const { return root_; }
  const IntMatrix& weight_matrix() const { return weight_; }
  std::size_t length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  /// l(w s_i) < l(w), i.e. w(alpha_i) is a negative root.
  bool has_right_descent(std::size_t i) const;
  /// l(s_i w) < l(w).
  bool has_left_descent(std::size_t i) const;

  /// w * s_i and s_i * w, with the length cache updated incrementally.
  GroupElement times_generator(std::size_t i) const;
  GroupElement generator_times(std::size_t i) const;

  GroupElement inverse() const;

  IntVector act_on_root(std::span<const std::int64_t> root) const { return root_.apply(root); }
  IntVector act_on_weight(std::span<const std::int64_t> weight) const { return weight_.apply(weight); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.root_ < b.root_; }

 private:
  friend class CoxeterDatum;
  GroupElement(CoxeterDatum datum, IntMatrix root, IntMatrix weight, std::size_t length)
      : datum_(std::move(datum)), root_(std::move(root)), weight_(std::move(weight)), length_(length) {}
  GroupElement(CoxeterDatum datum, IntMatrix root, IntMatrix weight);

  CoxeterDatum datum_;
  IntMatrix root_;
  IntMatrix weight_;
  std::size_t length_ = 0;
};

/// Ordered sequence of generator indices (0-based) over a fixed datum.
class Word {
 public:
  Word(CoxeterDatum datum, std::vector<std::size_t> letters);
  /// Whitespace-separated 1-based indices, e.g. "1 2 1 2 1". Empty string is
  /// the empty word.
  static Word parse(const CoxeterDatum& datum, std::string_view text);

  const CoxeterDatum& datum() const { return datum_; }
  std::span<const std::size_t> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::size_t operator[](std::size_t k) const { return letters_[k]; }

  /// 1-based, space separated.
  std::string to_string() const;
  /// 1-based indices.
  std::vector<std::size_t> one_based() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b);

 private:
  CoxeterDatum datum_;
  std::vector<std::size_t> letters_;
};

GroupElement simple_reflection(const CoxeterDatum& datum, std::size_t i);

/// Product q_1 * ... * q_m; the empty word evaluates to the identity.
GroupElement evaluate(const Word& word);

std::size_t length(const GroupElement& g);

/// Length as the number of positive roots sent to negative roots. Finite
/// types only; an independent route to GroupElement::length().
std::size_t inversion_count(const GroupElement& g);

bool is_reduced(const Word& word);

/// Append a letter only when it increases the length.
GroupElement demazure_product(const Word& word);

/// Bruhat order by the lifting recursion on right descents of v.
bool bruhat_leq(const GroupElement& u, const GroupElement& v);

/// Lexicographically smallest reduced word (by generator index).
Word reduced_word(const GroupElement& g);

/// True iff the word uses every generator exactly once.
bool is_coxeter_word(const Word& c);

/// Greedy (lexicographically first) reduced subword of c c c ... for w.
Word c_sorting_word(const Word& c, const GroupElement& w);

GroupElement longest_element(const CoxeterDatum& datum);

}  // namespace brick
