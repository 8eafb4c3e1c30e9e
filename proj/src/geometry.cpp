#include "brick/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "brick/error.hpp"

namespace brick {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / gcd_big(a, b) * b; }

// Scales (normal, offset) to coprime integers. If `orient` the first nonzero
// normal entry is made positive (used for equations, whose sign is free).
LinearConstraint make_constraint(const std::vector<Rational>& normal, const Rational& offset, bool orient) {
  BigInt scale = denominator(offset);
  for (const auto& x : normal) scale = lcm_big(scale, denominator(x));
  LinearConstraint c;
  BigInt g = 0;
  for (const auto& x : normal) {
    c.normal.push_back(numerator(x) * (scale / denominator(x)));
    g = gcd_big(g, c.normal.back());
  }
  c.offset = numerator(offset) * (scale / denominator(offset));
  g = gcd_big(g, c.offset);
  if (g > 1) {
    for (auto& x : c.normal) x /= g;
    c.offset /= g;
  }
  if (orient) {
    auto it = std::find_if(c.normal.begin(), c.normal.end(), [](const BigInt& x) { return x != 0; });
    if (it != c.normal.end() && *it < 0) {
      for (auto& x : c.normal) x = -x;
      c.offset = -c.offset;
    }
  }
  return c;
}

Rational evaluate(const LinearConstraint& c, const RationalPoint& p) {
  Rational acc = 0;
  for (std::size_t j = 0; j < c.normal.size(); ++j)
    if (c.normal[j] != 0) acc += Rational(c.normal[j]) * p.coords[j];
  return acc;
}

// --- integer facet search --------------------------------------------------

template <class Int>
struct WideOf {
  using type = Int;
};
template <>
struct WideOf<std::int64_t> {
  using type = __int128;
};

// Fraction-free (Bareiss) determinant; every intermediate value is a minor of
// the input, and products of two of them are formed in the wide type.
template <class Int>
Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  using Wide = typename WideOf<Int>::type;
  const std::size_t n = m.size();
  if (n == 0) return Int(1);
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return Int(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide num = Wide(m[i][j]) * Wide(m[k][k]) - Wide(m[i][k]) * Wide(m[k][j]);
        m[i][j] = static_cast<Int>(num / Wide(prev));
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

template <class Int>
Int abs_value(const Int& x) {
  return x < 0 ? Int(-x) : x;
}

template <class Int>
Int gcd_int(Int a, Int b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <class Int>
struct RawFacet {
  std::vector<Int> normal;
  Int offset;
  friend bool operator<(const RawFacet& a, const RawFacet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  }
};

// All facets of the full-dimensional hull of `pts` in Z^d (d >= 1): every
// d-subset spanning a hyperplane with all points on one side.
template <class Int>
std::vector<RawFacet<Int>> facet_search(const std::vector<std::vector<Int>>& pts, std::size_t d) {
  const std::size_t n = pts.size();
  std::set<RawFacet<Int>> found;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;

  std::vector<std::vector<Int>> diffs(d - 1, std::vector<Int>(d));
  std::vector<std::vector<Int>> minor(d - 1, std::vector<Int>(d - 1));
  std::vector<Int> normal(d);
  for (;;) {
    const auto& base = pts[idx[0]];
    for (std::size_t r = 1; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) diffs[r - 1][c] = pts[idx[r]][c] - base[c];

    bool nonzero = false;
    for (std::size_t skip = 0; skip < d; ++skip) {
      for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t c = 0, cc = 0; c < d; ++c)
          if (c != skip) minor[r][cc++] = diffs[r][c];
      Int det = bareiss_determinant(minor);
      normal[skip] = (skip % 2 == 0) ? det : Int(-det);
      nonzero |= det != 0;
    }

    if (nonzero) {
      Int offset = 0;
      for (std::size_t c = 0; c < d; ++c) offset += normal[c] * base[c];
      bool above = false, below = false;
      for (std::size_t p = 0; p < n && !(above && below); ++p) {
        Int s = -offset;
        for (std::size_t c = 0; c < d; ++c) s += normal[c] * pts[p][c];
        above |= s > 0;
        below |= s < 0;
      }
      if (!(above && below)) {
        RawFacet<Int> f{normal, offset};
        if (above) {
          for (auto& x : f.normal) x = -x;
          f.offset = -f.offset;
        }
        Int g = 0;
        for (const auto& x : f.normal) g = gcd_int(g, x);
        for (auto& x : f.normal) x /= g;
        f.offset /= g;
        found.insert(std::move(f));
      }
    }

    // next combination
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == n - d + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

// True when Hadamard's bound keeps every determinant, product and dot
// product of the search inside 64 bits (products inside 128 bits).
bool fits_int64(const std::vector<std::vector<BigInt>>& pts, std::size_t d) {
  BigInt max_abs = 0;
  for (const auto& p : pts)
    for (const auto& x : p) max_abs = std::max(max_abs, abs_value(x));
  if (max_abs > BigInt(1) << 40) return false;
  const long double coord = static_cast<long double>(max_abs) + 1.0L;
  const long double diff = 2.0L * coord;
  const long double dd = static_cast<long double>(d);
  const long double log_minor = (dd - 1.0L) * std::log2(std::sqrt(std::max(dd - 1.0L, 1.0L)) * diff);
  const long double log_dot = std::log2(dd + 1.0L) + log_minor + std::log2(coord);
  return 2.0L * log_minor < 120.0L && log_dot < 61.0L;
}

std::vector<RawFacet<BigInt>> search(const std::vector<std::vector<BigInt>>& pts, std::size_t d) {
  if (!fits_int64(pts, d)) return facet_search<BigInt>(pts, d);
  std::vector<std::vector<std::int64_t>> small;
  small.reserve(pts.size());
  for (const auto& p : pts) {
    std::vector<std::int64_t> row;
    for (const auto& x : p) row.push_back(x.convert_to<std::int64_t>());
    small.push_back(std::move(row));
  }
  std::vector<RawFacet<BigInt>> out;
  for (auto& f : facet_search<std::int64_t>(small, d)) {
    RawFacet<BigInt> g;
    for (auto x : f.normal) g.normal.emplace_back(x);
    g.offset = f.offset;
    out.push_back(std::move(g));
  }
  return out;
}

// --- gift wrapping ---------------------------------------------------------

using IntPoint = std::vector<BigInt>;

BigInt dot(const std::vector<BigInt>& a, const IntPoint& b) {
  BigInt acc = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) acc += a[j] * b[j];
  return acc;
}

LinearConstraint reduced(std::vector<BigInt> normal, BigInt offset) {
  BigInt g = gcd_big(0, offset);
  for (const auto& x : normal) g = gcd_big(g, x);
  if (g > 1) {
    for (auto& x : normal) x /= g;
    offset /= g;
  }
  return {std::move(normal), std::move(offset)};
}

std::vector<IntPoint> tight_points(const std::vector<IntPoint>& pts, const LinearConstraint& h) {
  std::vector<IntPoint> out;
  for (const auto& p : pts)
    if (dot(h.normal, p) == h.offset) out.push_back(p);
  return out;
}

AffineHull affine_hull_of(const std::vector<IntPoint>& pts) {
  std::vector<RationalPoint> r(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) r[i].coords.assign(pts[i].begin(), pts[i].end());
  return affine_hull(r);
}

// Tilts the supporting hyperplane `face` about {e.x = c} until it meets a
// point off the face. Requires e.x <= c on the face.
LinearConstraint rotate(const std::vector<IntPoint>& pts, const LinearConstraint& face, const LinearConstraint& e) {
  BigInt best_num, best_den = 0;
  for (const auto& p : pts) {
    const BigInt slack = face.offset - dot(face.normal, p);
    if (slack == 0) continue;
    const BigInt excess = dot(e.normal, p) - e.offset;
    if (best_den == 0 || excess * best_den > best_num * slack) best_num = excess, best_den = slack;
  }
  std::vector<BigInt> normal(face.normal.size());
  for (std::size_t j = 0; j < normal.size(); ++j) normal[j] = best_den * e.normal[j] + best_num * face.normal[j];
  return reduced(std::move(normal), best_den * e.offset + best_num * face.offset);
}

// Facets of the hull of distinct points spanning Z^d, d >= 1.
std::vector<LinearConstraint> wrap(const std::vector<IntPoint>& pts) {
  const std::size_t d = pts.front().size();
  if (d == 1) {
    const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    return {{{BigInt(-1)}, -(*lo)[0]}, {{BigInt(1)}, (*hi)[0]}};
  }

  // A supporting hyperplane, tilted until its tight set has dimension d - 1.
  LinearConstraint face{std::vector<BigInt>(d, 0), pts.front()[0]};
  face.normal[0] = 1;
  for (const auto& p : pts) face.offset = std::max(face.offset, p[0]);
  for (;;) {
    const AffineHull hull = affine_hull_of(tight_points(pts, face));
    if (hull.dimension + 1 == d) break;
    for (const auto& eq : hull.equations)
      if (integer_rank({face.normal, eq.normal}) == 2) {
        face = rotate(pts, face, eq);
        break;
      }
  }

  std::set<LinearConstraint> seen{face};
  std::vector<LinearConstraint> queue{face};
  while (!queue.empty()) {
    const LinearConstraint f = std::move(queue.back());
    queue.pop_back();
    const auto on = tight_points(pts, f);
    const AffineHull hull = affine_hull_of(on);
    std::vector<IntPoint> projected;
    for (const auto& p : on) {
      IntPoint y;
      for (std::size_t c : hull.pivots) y.push_back(p[c]);
      projected.push_back(std::move(y));
    }
    for (const auto& ridge : wrap(projected)) {
      LinearConstraint e{std::vector<BigInt>(d, 0), ridge.offset};
      for (std::size_t c = 0; c < hull.pivots.size(); ++c) e.normal[hull.pivots[c]] = ridge.normal[c];
      LinearConstraint next = rotate(pts, f, e);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

// ---------------------------------------------------------------------------

RationalPoint RationalPoint::from_integers(std::span<const std::int64_t> values) {
  RationalPoint p;
  for (auto v : values) p.coords.emplace_back(v);
  return p;
}

std::size_t integer_rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const BigInt a = rows[rank][c], b = rows[r][c];
      BigInt g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        rows[r][j] = rows[r][j] * a - rows[rank][j] * b;
        g = gcd_big(g, rows[r][j]);
      }
      if (g > 1)
        for (auto& x : rows[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

AffineHull affine_hull(std::span<const RationalPoint> points) {
  if (points.empty()) throw DomainError("affine hull of an empty point set");
  const std::size_t dim = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != dim) throw DomainError("points of mixed dimension");

  AffineHull hull;
  hull.basepoint = points.front();
  // Incremental reduced row echelon form of the difference vectors.
  auto& basis = hull.basis;
  auto& pivots = hull.pivots;
  for (const auto& p : points) {
    std::vector<Rational> v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = p.coords[j] - hull.basepoint.coords[j];
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Rational f = v[pivots[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) v[j] -= f * basis[r][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    const std::size_t pc = static_cast<std::size_t>(it - v.begin());
    const Rational lead = *it;
    for (auto& x : v) x /= lead;
    for (auto& row : basis) {
      const Rational f = row[pc];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) row[j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    pivots.push_back(pc);
  }
  // Keep rows ordered by pivot column.
  std::vector<std::size_t> order(basis.size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  std::vector<std::vector<Rational>> sorted_basis;
  std::vector<std::size_t> sorted_pivots;
  for (std::size_t r : order) {
    sorted_basis.push_back(std::move(basis[r]));
    sorted_pivots.push_back(pivots[r]);
  }
  basis = std::move(sorted_basis);
  pivots = std::move(sorted_pivots);
  hull.dimension = basis.size();

  for (std::size_t f = 0; f < dim; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<Rational> normal(dim, Rational(0));
    normal[f] = 1;
    for (std::size_t r = 0; r < basis.size(); ++r) normal[pivots[r]] = -basis[r][f];
    Rational offset = 0;
    for (std::size_t j = 0; j < dim; ++j) offset += normal[j] * hull.basepoint.coords[j];
    hull.equations.push_back(make_constraint(normal, offset, true));
  }
  std::sort(hull.equations.begin(), hull.equations.end());
  return hull;
}

Polytope convex_hull(std::span<const RationalPoint> points, HullMethod method) {
  std::vector<RationalPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const AffineHull hull = affine_hull(pts);
  Polytope poly;
  poly.ambient_dim = pts.front().dim();
  poly.affine_dim = hull.dimension;
  poly.equations = hull.equations;
  const std::size_t d = hull.dimension;
  if (d == 0) {
    poly.vertices = pts;
    return poly;
  }

  // Project onto the pivot coordinates (injective on the affine hull) and
  // clear denominators.
  BigInt scale = 1;
  for (const auto& p : pts)
    for (std::size_t c : hull.pivots) scale = lcm_big(scale, denominator(p.coords[c]));
  std::vector<std::vector<BigInt>> projected;
  for (const auto& p : pts) {
    std::vector<BigInt> y;
    for (std::size_t c : hull.pivots) y.push_back(numerator(p.coords[c]) * (scale / denominator(p.coords[c])));
    projected.push_back(std::move(y));
  }

  std::vector<RawFacet<BigInt>> raw;
  if (method == HullMethod::Subsets) {
    raw = search(projected, d);
  } else {
    for (auto& f : wrap(projected)) raw.push_back({std::move(f.normal), std::move(f.offset)});
  }

  // Tight sets in projected coordinates decide vertices and incidences.
  std::vector<std::vector<std::size_t>> tight(pts.size());
  for (std::size_t f = 0; f < raw.size(); ++f)
    for (std::size_t p = 0; p < pts.size(); ++p) {
      BigInt s = 0;
      for (std::size_t c = 0; c < d; ++c) s += raw[f].normal[c] * projected[p][c];
      if (s == raw[f].offset) tight[p].push_back(f);
    }
  std::vector<std::size_t> vertex_ids;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t f : tight[p]) rows.push_back(raw[f].normal);
    if (integer_rank(rows) == d) vertex_ids.push_back(p);
  }
  for (std::size_t p : vertex_ids) poly.vertices.push_back(pts[p]);  // pts sorted, so vertices are too

  std::vector<std::pair<LinearConstraint, std::vector<std::size_t>>> facets;
  for (std::size_t f = 0; f < raw.size(); ++f) {
    std::vector<Rational> normal(poly.ambient_dim, Rational(0));
    for (std::size_t c = 0; c < d; ++c) normal[hull.pivots[c]] = Rational(raw[f].normal[c] * scale);
    LinearConstraint ineq = make_constraint(normal, Rational(raw[f].offset), false);
    std::vector<std::size_t> on;
    for (std::size_t v = 0; v < vertex_ids.size(); ++v) {
      const auto& t = tight[vertex_ids[v]];
      if (std::find(t.begin(), t.end(), f) != t.end()) on.push_back(v);
    }
    facets.emplace_back(std::move(ineq), std::move(on));
  }
  std::sort(facets.begin(), facets.end());
  for (auto& [ineq, on] : facets) {
    poly.inequalities.push_back(std::move(ineq));
    poly.incidence.push_back(std::move(on));
  }
  return poly;
}

bool Polytope::contains(const RationalPoint& p) const {
  if (p.dim() != ambient_dim) return false;
  for (const auto& e : equations)
    if (evaluate(e, p) != Rational(e.offset)) return false;
  for (const auto& h : inequalities)
    if (evaluate(h, p) > Rational(h.offset)) return false;
  return true;
}

std::optional<std::size_t> Polytope::vertex_index(const RationalPoint& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

EdgeGraph edge_graph(const Polytope& p) {
  EdgeGraph edges;
  if (p.affine_dim == 0) return edges;
  // Facets through each vertex.
  std::vector<std::vector<std::size_t>> through(p.vertices.size());
  for (std::size_t f = 0; f < p.incidence.size(); ++f)
    for (std::size_t v : p.incidence[f]) through[v].push_back(f);

  // u, v span an edge iff the facets containing both, together with the
  // affine-hull equations, cut out a line.
  const std::size_t target = p.ambient_dim - 1;
  for (std::size_t a = 0; a < p.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < p.vertices.size(); ++b) {
      std::vector<std::vector<BigInt>> rows;
      for (const auto& e : p.equations) rows.push_back(e.normal);
      for (std::size_t f : through[a])
        if (std::binary_search(through[b].begin(), through[b].end(), f)) rows.push_back(p.inequalities[f].normal);
      if (rows.size() >= target && integer_rank(rows) == target) edges.emplace_back(a, b);
    }
  return edges;
}

}  // namespace brick
