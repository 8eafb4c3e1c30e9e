#include "brick/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "brick/error.hpp"

namespace brick {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t n, std::vector<std::int64_t> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw DomainError("matrix data has wrong size");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(n_);
  for (std::size_t r = 0; r < n_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::apply(std::span<const std::int64_t> v) const {
  IntVector out(n_, 0);
  for (std::size_t r = 0; r < n_; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < n_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += x * b(k, c);
    }
  return out;
}

int root_sign(std::span<const std::int64_t> root) {
  bool pos = false, neg = false;
  for (auto x : root) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// CoxeterDatum

namespace {

// Finite types have at most 120 positive roots in rank <= 10 (E8); anything
// that keeps producing roots past this bound is taken to be infinite.
constexpr std::size_t kRootEnumerationCap = 4096;

IntMatrix chain_cartan(std::size_t n) {
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
  }
  return a;
}

// s_i on root coordinates: c -> c - (A_i . c) e_i.
void reflect_root(const IntMatrix& cartan, std::size_t i, IntVector& c) {
  std::int64_t pairing = 0;
  for (std::size_t j = 0; j < c.size(); ++j) pairing += cartan(i, j) * c[j];
  c[i] -= pairing;
}

std::optional<std::vector<IntVector>> enumerate_positive_roots(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::set<IntVector> seen;
  std::vector<IntVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector img = queue[head];
      reflect_root(cartan, i, img);
      if (root_sign(img) <= 0) continue;  // only alpha_i itself goes negative
      if (seen.insert(img).second) {
        if (seen.size() > kRootEnumerationCap) return std::nullopt;
        queue.push_back(std::move(img));
      }
    }
  }
  std::vector<IntVector> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const IntVector& a, const IntVector& b) {
    const auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return roots;
}

void validate_cartan(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw DomainError("Cartan matrix must have positive rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 2) throw DomainError("Cartan matrix must have 2 on the diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw DomainError("off-diagonal Cartan entries must be <= 0");
      if ((a(i, j) == 0) != (a(j, i) == 0))
        throw DomainError("Cartan matrix must satisfy A_ij = 0 iff A_ji = 0");
    }
  }
}

std::size_t parse_index(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

IntMatrix parse_matrix_literal(std::string_view text) {
  // [[2,-1],[-1,2]]
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t depth = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("invalid matrix entry '" + token + "'");
    rows.back().push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '[') {
      ++depth;
      if (depth == 2) rows.emplace_back();
      if (depth > 2) throw ParseError("matrix literal nested too deeply");
    } else if (ch == ']') {
      if (depth == 0) throw ParseError("unbalanced ']' in matrix literal");
      if (depth == 2) flush();
      --depth;
    } else if (ch == ',') {
      if (depth == 2) flush();
    } else if (depth == 2) {
      token.push_back(ch);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' in matrix literal");
    }
  }
  if (depth != 0) throw ParseError("unbalanced '[' in matrix literal");
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("empty matrix literal");
  std::vector<std::int64_t> data;
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("matrix literal is not square");
    data.insert(data.end(), r.begin(), r.end());
  }
  return IntMatrix(n, std::move(data));
}

}  // namespace

struct CoxeterDatum::Data {
  IntMatrix cartan;
  std::string label;
  std::optional<std::vector<IntVector>> positive_roots;
  bool type_a = false;
};

CoxeterDatum CoxeterDatum::build(IntMatrix cartan, std::string label) {
  validate_cartan(cartan);
  auto data = std::make_shared<Data>();
  data->type_a = cartan == chain_cartan(cartan.size());
  data->positive_roots = enumerate_positive_roots(cartan);
  data->cartan = std::move(cartan);
  data->label = std::move(label);
  return CoxeterDatum(std::move(data));
}

CoxeterDatum CoxeterDatum::finite_type(char family, std::size_t n) {
  const std::string label = std::string(1, family) + std::to_string(n);
  auto bad = [&] { return DomainError("no crystallographic finite type " + label); };
  if (n == 0) throw bad();
  IntMatrix a = chain_cartan(n);
  switch (family) {
    case 'A':
      break;
    case 'B':
      if (n < 2) throw bad();
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw bad();
      a(n - 2, n - 1) = -2;
      break;
    case 'D':
      if (n < 4) throw bad();
      a(n - 2, n - 1) = a(n - 1, n - 2) = 0;
      a(n - 3, n - 1) = a(n - 1, n - 3) = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      a = IntMatrix(n);
      for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
      auto link = [&](std::size_t i, std::size_t j) { a(i - 1, j - 1) = a(j - 1, i - 1) = -1; };
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      if (n != 4) throw bad();
      a(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      if (n != 2) throw bad();
      a(0, 1) = -3;  // alpha_1 short
      break;
    case 'H':
    case 'I':
      throw DomainError("non-crystallographic type " + label + " is not supported");
    default:
      throw bad();
  }
  return build(std::move(a), label);
}

CoxeterDatum CoxeterDatum::custom(IntMatrix cartan) { return build(std::move(cartan), "custom"); }

CoxeterDatum CoxeterDatum::parse(std::string_view literal) {
  constexpr std::string_view prefix = "custom:";
  if (literal.substr(0, prefix.size()) == prefix) {
    try {
      return custom(parse_matrix_literal(literal.substr(prefix.size())));
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid Cartan matrix: ") + e.what());
    }
  }
  if (literal.size() < 2 || !std::isupper(static_cast<unsigned char>(literal[0])))
    throw ParseError("invalid datum literal '" + std::string(literal) + "'");
  const std::size_t n = parse_index(literal.substr(1), "datum rank");
  if (literal[0] == 'H' || literal[0] == 'I')
    throw DomainError("non-crystallographic type " + std::string(literal) + " is not supported");
  try {
    return finite_type(literal[0], n);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::size_t CoxeterDatum::rank() const { return data_->cartan.size(); }
const IntMatrix& CoxeterDatum::cartan() const { return data_->cartan; }
const std::string& CoxeterDatum::label() const { return data_->label; }
bool CoxeterDatum::is_finite() const { return data_->positive_roots.has_value(); }
bool CoxeterDatum::is_type_a() const { return data_->type_a; }

std::string CoxeterDatum::literal() const {
  if (label() != "custom") return label();
  std::ostringstream out;
  out << "custom:[";
  const auto& a = cartan();
  for (std::size_t i = 0; i < a.size(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.size(); ++j) out << (j ? "," : "") << a(i, j);
    out << "]";
  }
  out << "]";
  return out.str();
}

const std::vector<IntVector>& CoxeterDatum::positive_roots() const {
  if (!data_->positive_roots) throw DomainError("datum is not of finite type");
  return *data_->positive_roots;
}

bool operator==(const CoxeterDatum& a, const CoxeterDatum& b) {
  return a.data_ == b.data_ || a.cartan() == b.cartan();
}

// ---------------------------------------------------------------------------
// GroupElement

namespace {

// m <- m * s_i for a root matrix: column j gains -A[i][j] times column i.
void right_multiply_root(const IntMatrix& cartan, std::size_t i, IntMatrix& m) {
  const std::size_t n = m.size();
  const IntVector col = m.column(i);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t a = cartan(i, j);
    if (a == 0) continue;
    for (std::size_t r = 0; r < n; ++r) m(r, j) -= a * col[r];
  }
}

// m <- m * s_i for a weight matrix: s_i = I - alpha_i e_i^T, so column i
// becomes m e_i - m alpha_i.
void right_multiply_weight(const IntMatrix& cartan, std::size_t i, IntMatrix& m) {
  const std::size_t n = m.size();
  IntVector alpha = cartan.column(i);
  IntVector image = m.apply(alpha);
  for (std::size_t r = 0; r < n; ++r) m(r, i) -= image[r];
}

// m <- s_i * m for a root matrix: row i gains -(A_i . column).
void left_multiply_root(const IntMatrix& cartan, std::size_t i, IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::int64_t pairing = 0;
    for (std::size_t j = 0; j < n; ++j) pairing += cartan(i, j) * m(j, c);
    m(i, c) -= pairing;
  }
}

// m <- s_i * m for a weight matrix: every column v becomes v - v_i alpha_i.
void left_multiply_weight(const IntMatrix& cartan, std::size_t i, IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    const std::int64_t vi = m(i, c);
    if (vi == 0) continue;
    for (std::size_t r = 0; r < n; ++r) m(r, c) -= vi * cartan(r, i);
  }
}

void check_generator(const CoxeterDatum& datum, std::size_t i) {
  if (i >= datum.rank())
    throw DomainError("generator index " + std::to_string(i + 1) + " out of range 1.." +
                      std::to_string(datum.rank()));
}

// Strips right descents (smallest index first) and returns them in order
// of removal: g = s_{out[k-1]} ... s_{out[1]} s_{out[0]}.
std::vector<std::size_t> strip_right_descents(const CoxeterDatum& datum, IntMatrix root) {
  std::vector<std::size_t> removed;
  const std::size_t n = datum.rank();
  for (;;) {
    std::size_t i = 0;
    while (i < n && root_sign(root.column(i)) >= 0) ++i;
    if (i == n) return removed;
    right_multiply_root(datum.cartan(), i, root);
    removed.push_back(i);
  }
}

}  // namespace

GroupElement::GroupElement(CoxeterDatum datum, IntMatrix root, IntMatrix weight)
    : datum_(std::move(datum)), root_(std::move(root)), weight_(std::move(weight)) {
  length_ = strip_right_descents(datum_, root_).size();
}

GroupElement GroupElement::identity(const CoxeterDatum& datum) {
  return GroupElement(datum, IntMatrix::identity(datum.rank()), IntMatrix::identity(datum.rank()), 0);
}

bool GroupElement::has_right_descent(std::size_t i) const {
  check_generator(datum_, i);
  return root_sign(root_.column(i)) < 0;
}

bool GroupElement::has_left_descent(std::size_t i) const { return inverse().has_right_descent(i); }

GroupElement GroupElement::times_generator(std::size_t i) const {
  const bool descent = has_right_descent(i);
  IntMatrix root = root_, weight = weight_;
  right_multiply_root(datum_.cartan(), i, root);
  right_multiply_weight(datum_.cartan(), i, weight);
  return GroupElement(datum_, std::move(root), std::move(weight), descent ? length_ - 1 : length_ + 1);
}

GroupElement GroupElement::generator_times(std::size_t i) const {
  const bool descent = has_left_descent(i);
  IntMatrix root = root_, weight = weight_;
  left_multiply_root(datum_.cartan(), i, root);
  left_multiply_weight(datum_.cartan(), i, weight);
  return GroupElement(datum_, std::move(root), std::move(weight), descent ? length_ - 1 : length_ + 1);
}

GroupElement GroupElement::inverse() const {
  // If g = s_{r_k} ... s_{r_1} then g^{-1} = s_{r_1} ... s_{r_k}.
  GroupElement out = identity(datum_);
  for (std::size_t i : strip_right_descents(datum_, root_)) out = out.times_generator(i);
  return out;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (!(a.datum_ == b.datum_)) throw DomainError("group elements belong to different data");
  return GroupElement(a.datum_, a.root_ * b.root_, a.weight_ * b.weight_);
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.datum_ == b.datum_ && a.root_ == b.root_;
}

// ---------------------------------------------------------------------------
// Word

Word::Word(CoxeterDatum datum, std::vector<std::size_t> letters)
    : datum_(std::move(datum)), letters_(std::move(letters)) {
  for (std::size_t i : letters_) check_generator(datum_, i);
}

Word Word::parse(const CoxeterDatum& datum, std::string_view text) {
  std::vector<std::size_t> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',')
      ++end;
    const std::size_t index = parse_index(text.substr(pos, end - pos), "generator index");
    if (index == 0 || index > datum.rank())
      throw ParseError("generator index " + std::to_string(index) + " out of range 1.." +
                       std::to_string(datum.rank()));
    letters.push_back(index - 1);
    pos = end;
  }
  return Word(datum, std::move(letters));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(letters_[k] + 1);
  }
  return out;
}

std::vector<std::size_t> Word::one_based() const {
  std::vector<std::size_t> out(letters_);
  for (auto& x : out) ++x;
  return out;
}

Word operator+(const Word& a, const Word& b) {
  if (!(a.datum_ == b.datum_)) throw DomainError("words belong to different data");
  std::vector<std::size_t> letters(a.letters_);
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(a.datum_, std::move(letters));
}

bool operator==(const Word& a, const Word& b) { return a.datum_ == b.datum_ && a.letters_ == b.letters_; }

// ---------------------------------------------------------------------------
// Operations

GroupElement simple_reflection(const CoxeterDatum& datum, std::size_t i) {
  check_generator(datum, i);
  return GroupElement::identity(datum).times_generator(i);
}

GroupElement evaluate(const Word& word) {
  GroupElement g = GroupElement::identity(word.datum());
  for (std::size_t i : word.letters()) g = g.times_generator(i);
  return g;
}

std::size_t length(const GroupElement& g) { return g.length(); }

std::size_t inversion_count(const GroupElement& g) {
  std::size_t count = 0;
  for (const auto& beta : g.datum().positive_roots())
    if (root_sign(g.act_on_root(beta)) < 0) ++count;
  return count;
}

bool is_reduced(const Word& word) { return evaluate(word).length() == word.size(); }

GroupElement demazure_product(const Word& word) {
  GroupElement g = GroupElement::identity(word.datum());
  for (std::size_t i : word.letters())
    if (!g.has_right_descent(i)) g = g.times_generator(i);
  return g;
}

bool bruhat_leq(const GroupElement& u, const GroupElement& v) {
  if (!(u.datum() == v.datum())) throw DomainError("Bruhat comparison across different data");
  if (u.length() > v.length()) return false;
  if (v.is_identity()) return u.is_identity();
  if (u.is_identity()) return true;
  std::size_t s = 0;
  while (!v.has_right_descent(s)) ++s;
  // Lifting: for s a right descent of v, u <= v iff min(u, us) <= vs.
  const GroupElement vs = v.times_generator(s);
  const GroupElement u_low = u.has_right_descent(s) ? u.times_generator(s) : u;
  return bruhat_leq(u_low, vs);
}

Word reduced_word(const GroupElement& g) {
  // Lexicographically smallest: repeatedly peel the smallest left descent.
  // Left descents of r are right descents of r^{-1}; track the inverse.
  std::vector<std::size_t> letters;
  GroupElement inv = g.inverse();
  while (!inv.is_identity()) {
    std::size_t s = 0;
    while (!inv.has_right_descent(s)) ++s;
    letters.push_back(s);
    inv = inv.times_generator(s);
  }
  return Word(g.datum(), std::move(letters));
}

bool is_coxeter_word(const Word& c) {
  const std::size_t n = c.datum().rank();
  if (c.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i : c.letters()) {
    if (seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

Word c_sorting_word(const Word& c, const GroupElement& w) {
  if (!is_coxeter_word(c)) throw DomainError("'" + c.to_string() + "' is not a Coxeter-element word");
  if (!(c.datum() == w.datum())) throw DomainError("word and element belong to different data");
  // Scan c c c ...; keep a letter iff it is a left descent of what is left
  // to produce. Every pass removes at least one letter while w != id.
  std::vector<std::size_t> letters;
  GroupElement remaining_inv = w.inverse();
  while (!remaining_inv.is_identity()) {
    for (std::size_t s : c.letters()) {
      if (remaining_inv.has_right_descent(s)) {
        letters.push_back(s);
        remaining_inv = remaining_inv.times_generator(s);
      }
    }
  }
  return Word(c.datum(), std::move(letters));
}

GroupElement longest_element(const CoxeterDatum& datum) {
  if (!datum.is_finite()) throw DomainError("longest element requested for an infinite Coxeter group");
  GroupElement g = GroupElement::identity(datum);
  const std::size_t n = datum.rank();
  for (;;) {
    std::size_t s = 0;
    while (s < n && g.has_right_descent(s)) ++s;
    if (s == n) return g;
    g = g.times_generator(s);
  }
}

}  // namespace brick
