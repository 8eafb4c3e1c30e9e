#include "brick/subword.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

#include "brick/error.hpp"

namespace brick {

// ---------------------------------------------------------------------------
// Subword

Subword Subword::from_positions(std::size_t word_size, const std::vector<std::size_t>& positions,
                                SubwordRole role) {
  Subword out(word_size, role);
  for (std::size_t k : positions) {
    if (k >= word_size) throw DomainError("subword position " + std::to_string(k + 1) + " out of range");
    out.mask_[k] = true;
  }
  return out;
}

Subword Subword::from_one_based(std::size_t word_size, const std::vector<std::size_t>& positions,
                                SubwordRole role) {
  std::vector<std::size_t> zero_based;
  for (std::size_t k : positions) {
    if (k == 0 || k > word_size) throw DomainError("subword position " + std::to_string(k) + " out of range");
    zero_based.push_back(k - 1);
  }
  return from_positions(word_size, zero_based, role);
}

std::size_t Subword::count() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }

std::vector<std::size_t> Subword::positions() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < mask_.size(); ++k)
    if (mask_[k]) out.push_back(k);
  return out;
}

std::vector<std::size_t> Subword::one_based() const {
  auto out = positions();
  for (auto& k : out) ++k;
  return out;
}

Subword Subword::complement() const {
  Subword out(*this);
  out.mask_.flip();
  return out;
}

Subword Subword::switch_role() const {
  Subword out = complement();
  out.role_ = role_ == SubwordRole::Face ? SubwordRole::Kept : SubwordRole::Face;
  return out;
}

bool Subword::is_subset_of(const Subword& other) const {
  for (std::size_t k = 0; k < mask_.size(); ++k)
    if (mask_[k] && !other.mask_.at(k)) return false;
  return true;
}

Subword Subword::intersect(const Subword& other) const {
  if (role_ != other.role_ || mask_.size() != other.mask_.size())
    throw DomainError("intersecting incompatible subwords");
  Subword out(*this);
  for (std::size_t k = 0; k < mask_.size(); ++k) out.mask_[k] = mask_[k] && other.mask_[k];
  return out;
}

std::strong_ordering operator<=>(const Subword& a, const Subword& b) {
  return a.positions() <=> b.positions();
}

// ---------------------------------------------------------------------------
// Products and root/weight functions

namespace {

void require_face(const Word& q, const Subword& face) {
  if (face.role() != SubwordRole::Face) throw DomainError("expected a face (removed-letter) subword");
  if (face.word_size() != q.size()) throw DomainError("subword length does not match the word");
}

void require_position(const Word& q, std::size_t k) {
  if (k >= q.size())
    throw DomainError("position " + std::to_string(k + 1) + " out of range 1.." + std::to_string(q.size()));
}

}  // namespace

Word kept_letters(const Word& q, const Subword& kept) {
  if (kept.role() != SubwordRole::Kept) throw DomainError("expected a kept-letter subword");
  std::vector<std::size_t> letters;
  for (std::size_t k : kept.positions()) letters.push_back(q[k]);
  return Word(q.datum(), std::move(letters));
}

GroupElement complement_product(const Word& q, const Subword& face, std::size_t k) {
  require_face(q, face);
  if (k > q.size()) throw DomainError("prefix length " + std::to_string(k) + " exceeds |Q|");
  GroupElement g = GroupElement::identity(q.datum());
  for (std::size_t p = 0; p < k; ++p)
    if (!face.contains(p)) g = g.times_generator(q[p]);
  return g;
}

std::vector<IntVector> root_functions(const Word& q, const Subword& face) {
  require_face(q, face);
  std::vector<IntVector> out;
  out.reserve(q.size());
  GroupElement prefix = GroupElement::identity(q.datum());
  for (std::size_t k = 0; k < q.size(); ++k) {
    out.push_back(prefix.root_matrix().column(q[k]));
    if (!face.contains(k)) prefix = prefix.times_generator(q[k]);
  }
  return out;
}

std::vector<IntVector> weight_functions(const Word& q, const Subword& face) {
  require_face(q, face);
  std::vector<IntVector> out;
  out.reserve(q.size());
  GroupElement prefix = GroupElement::identity(q.datum());
  for (std::size_t k = 0; k < q.size(); ++k) {
    out.push_back(prefix.weight_matrix().column(q[k]));
    if (!face.contains(k)) prefix = prefix.times_generator(q[k]);
  }
  return out;
}

IntVector root_function(const Word& q, const Subword& face, std::size_t k) {
  require_position(q, k);
  IntVector alpha(q.datum().rank(), 0);
  alpha[q[k]] = 1;
  return complement_product(q, face, k).act_on_root(alpha);
}

IntVector weight_function(const Word& q, const Subword& face, std::size_t k) {
  require_position(q, k);
  IntVector omega(q.datum().rank(), 0);
  omega[q[k]] = 1;
  return complement_product(q, face, k).act_on_weight(omega);
}

std::vector<IntVector> root_configuration(const Word& q, const Subword& face) {
  const auto roots = root_functions(q, face);
  std::vector<IntVector> out;
  for (std::size_t k : face.positions()) out.push_back(roots[k]);
  return out;
}

// ---------------------------------------------------------------------------
// Facets and flips

namespace {

bool is_facet_of(const Word& q, const GroupElement& w, const Subword& face) {
  return face.count() + w.length() == q.size() && complement_product(q, face, q.size()) == w;
}

}  // namespace

bool SubwordComplex::is_face(const Subword& face) const {
  return std::any_of(facets.begin(), facets.end(), [&](const Subword& f) { return face.is_subset_of(f); });
}

std::optional<Subword> greedy_facet(const Word& q, const GroupElement& w) {
  if (!(q.datum() == w.datum())) throw DomainError("word and element belong to different data");
  Subword facet(q.size(), SubwordRole::Face);
  GroupElement remaining_inv = w.inverse();
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (remaining_inv.has_right_descent(q[k])) {
      remaining_inv = remaining_inv.times_generator(q[k]);
    } else {
      facet.set(k);
    }
  }
  if (!remaining_inv.is_identity()) return std::nullopt;
  return facet;
}

std::pair<Subword, std::size_t> flip(const SubwordComplex& complex, const Subword& facet, std::size_t i) {
  const Word& q = complex.q;
  require_face(q, facet);
  if (!is_facet_of(q, complex.w, facet)) throw DomainError("flip requested on a subword that is not a facet");
  if (!facet.contains(i)) throw DomainError("flip position " + std::to_string(i + 1) + " is not in the facet");
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (facet.contains(j)) continue;
    Subword candidate = facet;
    candidate.set(i, false);
    candidate.set(j, true);
    if (is_facet_of(q, complex.w, candidate)) return {std::move(candidate), j};
  }
  throw DomainError("ridge lies in a single facet: Delta(Q, w) is not a sphere (Dem(Q) != w)");
}

SubwordComplex facets(const Word& q, const GroupElement& w) {
  SubwordComplex complex{q, w, {}, is_sphere(q, w)};
  const auto seed = greedy_facet(q, w);
  if (!seed) return complex;

  std::set<Subword> found{*seed};
  std::deque<Subword> queue{*seed};
  while (!queue.empty()) {
    Subword current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i : current.positions()) {
      std::optional<Subword> next;
      try {
        next = flip(complex, current, i).first;
      } catch (const DomainError&) {
        continue;  // boundary ridge of a ball
      }
      if (found.insert(*next).second) queue.push_back(std::move(*next));
    }
  }
  complex.facets.assign(found.begin(), found.end());
  return complex;
}

bool is_sphere(const Word& q, const GroupElement& w) { return demazure_product(q) == w; }

// ---------------------------------------------------------------------------
// Strata

StrataPoset strata_poset(const Word& q, const GroupElement& w) {
  const std::size_t m = q.size();
  if (m >= 25) throw DomainError("strata poset enumeration limited to |Q| < 25");
  StrataPoset poset{q, w, {}, {}, 0, {}, false};

  auto kept_of = [&](std::uint32_t mask) {
    Subword r(m, SubwordRole::Kept);
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1u) r.set(k);
    return r;
  };
  auto is_node = [&](const Subword& r) { return demazure_product(kept_letters(q, r)) == w; };

  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Subword r = kept_of(mask);
    if (is_node(r)) poset.nodes.push_back(std::move(r));
  }
  std::sort(poset.nodes.begin(), poset.nodes.end());

  auto index_of = [&](const Subword& r) -> std::optional<std::size_t> {
    auto it = std::lower_bound(poset.nodes.begin(), poset.nodes.end(), r);
    if (it == poset.nodes.end() || !(*it == r)) return std::nullopt;
    return static_cast<std::size_t>(it - poset.nodes.begin());
  };

  // Dem is monotone under taking subwords, so covers drop exactly one letter.
  for (std::size_t b = 0; b < poset.nodes.size(); ++b) {
    bool has_lower = false;
    for (std::size_t k : poset.nodes[b].positions()) {
      Subword smaller = poset.nodes[b];
      smaller.set(k, false);
      if (auto a = index_of(smaller)) {
        poset.covers.emplace_back(*a, b);
        has_lower = true;
      }
    }
    if (!has_lower) poset.minimal.push_back(b);
  }
  std::sort(poset.covers.begin(), poset.covers.end());

  Subword full(m, SubwordRole::Kept);
  for (std::size_t k = 0; k < m; ++k) full.set(k);
  if (auto top = index_of(full)) poset.maximum = *top;
  else throw DomainError("strata poset requires Dem(Q) = w");

  poset.intersection_closed = true;
  for (std::size_t a = 0; a < poset.nodes.size() && poset.intersection_closed; ++a)
    for (std::size_t b = a + 1; b < poset.nodes.size(); ++b) {
      const Subword meet = poset.nodes[a].intersect(poset.nodes[b]);
      if (is_node(meet) && !index_of(meet)) {
        poset.intersection_closed = false;
        break;
      }
    }
  return poset;
}

// ---------------------------------------------------------------------------
// Richardson seed

RichardsonSeed richardson_seed(const GroupElement& u, const GroupElement& v) {
  const CoxeterDatum& datum = v.datum();
  if (!datum.is_finite()) throw DomainError("Richardson seed requires a finite Coxeter group");
  if (!bruhat_leq(u, v)) throw DomainError("u is not below v in Bruhat order");
  const GroupElement w0 = longest_element(datum);
  RichardsonSeed seed{reduced_word(v), reduced_word(u.inverse() * w0), Word(datum, {}), false, 0};
  seed.q = seed.r + seed.s;
  seed.demazure_is_longest = demazure_product(seed.q) == w0;
  seed.fiber_dim = seed.q.size() - w0.length();
  return seed;
}

}  // namespace brick
