#include "brick/networks.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "brick/error.hpp"

namespace brick {

SortingNetwork sorting_network(const Word& q, std::size_t levels) {
  if (levels == 0) throw DomainError("a sorting network needs at least one level");
  SortingNetwork net;
  net.levels = levels;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const std::size_t level = q[k] + 1;
    if (level + 1 > levels)
      throw DomainError("letter s_" + std::to_string(level) + " does not fit " + std::to_string(levels) + " levels");
    net.commutators.push_back({k + 1, level});
  }
  for (std::size_t k = 0; k < net.commutators.size(); ++k) {
    Brick b{k + 1, net.commutators[k].level, std::nullopt};
    for (std::size_t j = k + 1; j < net.commutators.size(); ++j)
      if (net.commutators[j].level == b.level) {
        b.end = j + 1;
        break;
      }
    net.bricks.push_back(b);
  }
  return net;
}

PseudolineArrangement arrangement_from_face(const Word& q, const Subword& face) {
  if (face.role() != SubwordRole::Face || face.word_size() != q.size())
    throw DomainError("expected a face subword of Q");
  const std::size_t n = q.datum().rank() + 1;
  if (!q.datum().is_type_a()) throw DomainError("pseudoline arrangements exist in type A only");

  PseudolineArrangement arr{sorting_network(q, n), face, {}, true, {}};
  // line_at[p-1] = label of the line currently on level p.
  std::vector<std::size_t> line_at(n);
  std::iota(line_at.begin(), line_at.end(), std::size_t{1});
  arr.trajectories.assign(n, std::vector<std::size_t>(q.size() + 1));
  std::vector<std::vector<int>> crossings(n, std::vector<int>(n, 0));

  auto record = [&](std::size_t k) {
    for (std::size_t p = 0; p < n; ++p) arr.trajectories[line_at[p] - 1][k] = p + 1;
  };
  record(0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!face.contains(k)) {
      const std::size_t lo = q[k];
      const std::size_t a = line_at[lo], b = line_at[lo + 1];
      if (++crossings[std::min(a, b) - 1][std::max(a, b) - 1] > 1) arr.valid = false;
      std::swap(line_at[lo], line_at[lo + 1]);
    }
    record(k + 1);
  }
  arr.start_level = line_at;  // the line ending at level i entered at level line_at[i-1]
  return arr;
}

std::vector<std::size_t> lines_below_brick(const PseudolineArrangement& arr, std::size_t k) {
  const auto& c = arr.network.commutators.at(k - 1);
  std::vector<std::size_t> below;
  for (std::size_t line = 1; line <= arr.trajectories.size(); ++line)
    if (arr.trajectories[line - 1][k] <= c.level) below.push_back(line);
  return below;
}

IntVector brick_count_vector(const PseudolineArrangement& arr) {
  IntVector counts(arr.trajectories.size(), 0);
  for (const auto& brick : arr.network.bricks)
    for (std::size_t line : lines_below_brick(arr, brick.commutator)) ++counts[line - 1];
  return counts;
}

std::vector<std::size_t> permutation_of(const GroupElement& g) {
  if (!g.datum().is_type_a()) throw DomainError("permutation realization exists in type A only");
  const std::size_t n = g.datum().rank() + 1;
  // g(omega_i) is the indicator vector of sigma({1..i}).
  std::vector<std::size_t> sigma(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 1; i <= n; ++i) {
    IntVector indicator;
    if (i < n) {
      indicator = ambient_coordinates(g.weight_matrix().column(i - 1), static_cast<std::int64_t>(i));
    } else {
      indicator.assign(n, 1);
    }
    std::size_t fresh = n;
    for (std::size_t p = 0; p < n; ++p)
      if (indicator[p] == 1 && !used[p]) fresh = p;
    if (fresh == n) throw DomainError("weight action is not a permutation action");
    used[fresh] = true;
    sigma[i - 1] = fresh + 1;
  }
  return sigma;
}

IntVector ambient_coordinates(std::span<const std::int64_t> weight, std::int64_t coordinate_sum) {
  const std::size_t n = weight.size() + 1;
  IntVector x(n, 0);
  // x_j = sum_{i >= j} c_i, then shift by a multiple of (1,...,1).
  std::int64_t running = 0;
  for (std::size_t j = weight.size(); j-- > 0;) {
    running += weight[j];
    x[j] = running;
  }
  const std::int64_t sum = std::accumulate(x.begin(), x.end(), std::int64_t{0});
  const std::int64_t gap = coordinate_sum - sum;
  if (gap % static_cast<std::int64_t>(n) != 0)
    throw DomainError("coordinate sum incompatible with the weight lattice");
  for (auto& v : x) v += gap / static_cast<std::int64_t>(n);
  return x;
}

DrawingFormat parse_drawing_format(std::string_view name) {
  if (name == "svg") return DrawingFormat::Svg;
  if (name == "tikz") return DrawingFormat::Tikz;
  throw ParseError("unknown drawing format '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Rendering. Commutator k sits at x = k, level i at y = i; the SVG is the same
// picture scaled by kUnit with y flipped.

namespace {

constexpr int kUnit = 40;
constexpr double kCrossShift = 0.12;
constexpr std::array<const char*, 8> kColors = {"#00a0c8", "#2ca02c", "#d6278a", "#ff7f0e",
                                                "#9467bd", "#8c564b", "#17becf", "#bcbd22"};

struct Canvas {
  std::size_t levels;
  std::size_t columns;
  double sx(double x) const { return kUnit * x; }
  double sy(double y) const { return kUnit * (static_cast<double>(levels) + 1.0 - y); }
};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

void svg_header(std::ostringstream& out, const Canvas& c) {
  const double w = kUnit * (static_cast<double>(c.columns) + 1.0);
  const double h = kUnit * (static_cast<double>(c.levels) + 1.0);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w) << "\" height=\""
      << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
}

void svg_network(std::ostringstream& out, const SortingNetwork& net, const Canvas& c, const Subword* contacts) {
  out << "  <g id=\"levels\" stroke=\"#000000\" stroke-width=\"1\">\n";
  for (std::size_t i = 1; i <= net.levels; ++i)
    out << "    <line x1=\"" << fmt(c.sx(0)) << "\" y1=\"" << fmt(c.sy(i)) << "\" x2=\"" << fmt(c.sx(c.columns))
        << "\" y2=\"" << fmt(c.sy(i)) << "\"/>\n";
  out << "  </g>\n  <g id=\"commutators\" stroke=\"#000000\" stroke-width=\"1\">\n";
  for (const auto& cm : net.commutators) {
    const bool contact = contacts && contacts->contains(cm.position - 1);
    out << "    <line x1=\"" << fmt(c.sx(cm.position)) << "\" y1=\"" << fmt(c.sy(cm.level)) << "\" x2=\""
        << fmt(c.sx(cm.position)) << "\" y2=\"" << fmt(c.sy(cm.level + 1)) << "\""
        << (contact ? " stroke-dasharray=\"4,3\"" : "") << "/>\n";
  }
  out << "  </g>\n";
}

// Polyline of one pseudoline: horizontal runs on levels, vertical jumps along
// crossing commutators, shifted sideways so the two strands stay visible.
std::vector<std::pair<double, double>> pseudoline_path(const PseudolineArrangement& arr, std::size_t line,
                                                       double right_end) {
  const auto& traj = arr.trajectories[line - 1];
  std::vector<std::pair<double, double>> pts{{0.0, static_cast<double>(traj[0])}};
  for (std::size_t k = 1; k < traj.size(); ++k) {
    if (traj[k] == traj[k - 1]) continue;
    const double x = static_cast<double>(k) + (traj[k] > traj[k - 1] ? -kCrossShift : kCrossShift) / 2.0;
    pts.emplace_back(x, static_cast<double>(traj[k - 1]));
    pts.emplace_back(x, static_cast<double>(traj[k]));
  }
  pts.emplace_back(right_end, static_cast<double>(traj.back()));
  return pts;
}

}  // namespace

std::string render(const SortingNetwork& network, DrawingFormat format) {
  const Canvas c{network.levels, network.commutators.size() + 1};
  std::ostringstream out;
  if (format == DrawingFormat::Svg) {
    svg_header(out, c);
    svg_network(out, network, c, nullptr);
    out << "</svg>\n";
  } else {
    out << "\\begin{tikzpicture}\n";
    for (std::size_t i = 1; i <= network.levels; ++i)
      out << "  \\draw (0," << i << ") -- (" << c.columns << "," << i << ");\n";
    for (const auto& cm : network.commutators)
      out << "  \\draw (" << cm.position << "," << cm.level << ") -- (" << cm.position << "," << cm.level + 1
          << ");\n";
    out << "\\end{tikzpicture}\n";
  }
  return out.str();
}

std::string render(const PseudolineArrangement& arr, DrawingFormat format) {
  const auto& net = arr.network;
  const Canvas c{net.levels, net.commutators.size() + 1};
  const double right = static_cast<double>(c.columns);
  std::ostringstream out;
  if (format == DrawingFormat::Svg) {
    svg_header(out, c);
    svg_network(out, net, c, &arr.contacts);
    out << "  <g id=\"pseudolines\" fill=\"none\" stroke-width=\"3\">\n";
    for (std::size_t line = 1; line <= arr.trajectories.size(); ++line) {
      out << "    <polyline stroke=\"" << kColors[(line - 1) % kColors.size()] << "\" points=\"";
      bool first = true;
      for (auto [x, y] : pseudoline_path(arr, line, right)) {
        out << (first ? "" : " ") << fmt(c.sx(x)) << "," << fmt(c.sy(y));
        first = false;
      }
      out << "\"/>\n";
    }
    out << "  </g>\n  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 1; i <= net.levels; ++i) {
      out << "    <text x=\"" << fmt(c.sx(0) + 4) << "\" y=\"" << fmt(c.sy(i) - 4) << "\">" << i << "</text>\n";
      out << "    <text x=\"" << fmt(c.sx(right) - 12) << "\" y=\"" << fmt(c.sy(i) - 4) << "\">"
          << arr.start_level[i - 1] << "</text>\n";
    }
    out << "  </g>\n</svg>\n";
  } else {
    out << "\\begin{tikzpicture}\n";
    for (std::size_t i = 1; i <= net.levels; ++i) {
      out << "  \\draw (0," << i << ") -- (" << c.columns << "," << i << ");\n";
      out << "  \\node[left] at (0," << i << ") {" << i << "};\n";
      out << "  \\node[right] at (" << c.columns << "," << i << ") {" << arr.start_level[i - 1] << "};\n";
    }
    for (const auto& cm : net.commutators)
      if (arr.contacts.contains(cm.position - 1))
        out << "  \\draw[dashed] (" << cm.position << "," << cm.level << ") -- (" << cm.position << ","
            << cm.level + 1 << ");\n";
    for (std::size_t line = 1; line <= arr.trajectories.size(); ++line) {
      out << "  \\draw[very thick, color={rgb,255:red," << line * 37 % 256 << ";green," << line * 101 % 256
          << ";blue," << line * 163 % 256 << "}] ";
      bool first = true;
      for (auto [x, y] : pseudoline_path(arr, line, right)) {
        out << (first ? "" : " -- ") << "(" << fmt(x) << "," << fmt(y) << ")";
        first = false;
      }
      out << ";\n";
    }
    out << "\\end{tikzpicture}\n";
  }
  return out.str();
}

}  // namespace brick
