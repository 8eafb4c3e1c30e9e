#include "brick/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "brick/error.hpp"

namespace brick::oracle {

std::vector<Subword> exhaustive_facets(const Word& q, const GroupElement& w) {
  const std::size_t m = q.size();
  if (m >= 25) throw DomainError("exhaustive facet scan limited to |Q| < 25");
  const std::size_t size = m >= w.length() ? m - w.length() : m + 1;
  std::vector<Subword> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
    Subword face(m, SubwordRole::Face);
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1u) face.set(k);
      else kept.push_back(q[k]);
    }
    // Product by explicit matrix multiplication of simple reflections.
    GroupElement g = GroupElement::identity(q.datum());
    for (std::size_t s : kept) g = g * simple_reflection(q.datum(), s);
    if (g == w) out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subword> all_faces(const std::vector<Subword>& facets, std::size_t word_size) {
  std::set<Subword> faces;
  faces.insert(Subword(word_size, SubwordRole::Face));
  for (const auto& f : facets) {
    const auto pos = f.positions();
    for (std::uint32_t sub = 0; sub < (1u << pos.size()); ++sub) {
      Subword face(word_size, SubwordRole::Face);
      for (std::size_t b = 0; b < pos.size(); ++b)
        if (sub >> b & 1u) face.set(pos[b]);
      faces.insert(std::move(face));
    }
  }
  return {faces.begin(), faces.end()};
}

std::int64_t reduced_euler_characteristic(const std::vector<Subword>& facets, std::size_t word_size) {
  std::int64_t chi = 0;
  for (const auto& face : all_faces(facets, word_size)) chi += face.count() % 2 == 1 ? 1 : -1;
  return chi;
}

IntVector ambient_brick_vector_by_permutations(const Word& q, const Subword& face) {
  if (!q.datum().is_type_a()) throw DomainError("permutation oracle is type A only");
  const std::size_t n = q.datum().rank() + 1;
  // perm[p] = image of e_{p+1} under the current prefix.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  IntVector out(n, 0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!face.contains(k)) {
      // prefix * s_i sends e_i to prefix(e_{i+1}) and e_{i+1} to prefix(e_i).
      std::swap(perm[q[k]], perm[q[k] + 1]);
    }
    for (std::size_t p = 0; p <= q[k]; ++p) ++out[perm[p]];
  }
  return out;
}

}  // namespace brick::oracle
