#include "brick/cli.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "brick/brick_polytope.hpp"
#include "brick/error.hpp"
#include "brick/io.hpp"
#include "brick/networks.hpp"
#include "brick/oracle.hpp"

namespace brick::cli {

namespace {

constexpr std::size_t kOracleFaceSample = 512;

struct Context {
  const Request& req;
  CoxeterDatum datum;
  std::ostream& out;
  std::ostream& err;

  void expect_args(std::size_t lo, std::size_t hi, const char* usage) const {
    if (req.args.size() < lo || req.args.size() > hi)
      throw ParseError("usage: " + req.command + " <datum> " + usage);
  }
  Word word(std::size_t i) const { return Word::parse(datum, req.args.at(i)); }
  /// The optional element argument at position i, Dem(Q) when absent.
  GroupElement element_or_demazure(std::size_t i, const Word& q) const {
    return req.args.size() > i ? evaluate(word(i)) : demazure_product(q);
  }
  std::string format(std::initializer_list<const char*> allowed) const {
    const std::string f = req.format.empty() ? *allowed.begin() : req.format;
    for (const char* a : allowed)
      if (f == a) return f;
    throw ParseError("format '" + f + "' not available for " + req.command);
  }
  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

// Oracle checks report to stderr and fail with a DomainError on mismatch.
struct OracleLog {
  std::ostream& err;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) throw DomainError("oracle mismatch: " + what);
  }
  void done() const { err << "oracle: " << checks << " checks passed\n"; }
};

void check_facets(OracleLog& log, const SubwordComplex& complex) {
  const auto brute = oracle::exhaustive_facets(complex.q, complex.w);
  log.expect(brute == complex.facets, "flip-graph facets differ from exhaustive scan");
  if (complex.sphere && !brute.empty()) {
    const std::size_t dim = complex.q.size() - complex.w.length();
    const std::int64_t expected = dim % 2 == 1 ? 1 : -1;  // (-1)^(dim - 1)
    log.expect(oracle::reduced_euler_characteristic(brute, complex.q.size()) == expected,
               "reduced Euler characteristic of a sphere");
  }
}

int cmd_demazure(const Context& c) {
  c.expect_args(1, 1, "<word>");
  const Word q = c.word(0);
  const GroupElement d = demazure_product(q);
  if (c.req.oracle) {
    OracleLog log{c.err};
    if (c.datum.is_finite()) log.expect(inversion_count(d) == d.length(), "length vs inversion count");
    log.expect(is_reduced(reduced_word(d)) && evaluate(reduced_word(d)) == d, "reduced word evaluates back");
    log.done();
  }
  if (c.format({"text", "json"}) == "json") {
    c.emit({{"Q", q.one_based()}, {"demazure", reduced_word(d).one_based()}, {"length", d.length()}});
  } else {
    c.out << (d.is_identity() ? std::string("e") : reduced_word(d).to_string()) << "\n";
  }
  return 0;
}

int cmd_complex(const Context& c) {
  c.expect_args(1, 2, "<word> [<w>]");
  c.format({"json"});
  const Word q = c.word(0);
  const auto complex = facets(q, c.element_or_demazure(1, q));
  if (!complex.sphere) c.err << "note: Dem(Q) != w, the complex is a ball or empty\n";
  if (c.req.oracle) {
    OracleLog log{c.err};
    check_facets(log, complex);
    log.done();
  }
  c.emit(to_json(complex));
  return 0;
}

void check_bricks(OracleLog& log, const BrickPolytope& bp, std::uint64_t seed) {
  const Word& q = bp.complex.q;
  check_facets(log, bp.complex);
  log.expect(bp.non_facet_faces_inside, "non-facet brick vector outside the hull");
  auto faces = oracle::all_faces(bp.complex.facets, q.size());
  if (faces.size() > kOracleFaceSample) {
    std::mt19937_64 rng(seed);
    std::shuffle(faces.begin(), faces.end(), rng);
    faces.resize(kOracleFaceSample);
  }
  for (const auto& face : faces) {
    const BrickVector b = brick_vector(q, face);
    log.expect(brick_vector_from_functions(q, face) == b.vector, "brick vector vs weight/root decomposition");
    if (!q.datum().is_type_a()) continue;
    log.expect(oracle::ambient_brick_vector_by_permutations(q, face) == *b.ambient, "ambient embedding");
    log.expect(brick_count_vector(arrangement_from_face(q, face)) == *b.ambient, "brick counting");
  }
}

int cmd_brick_polytope(const Context& c) {
  c.expect_args(1, 2, "<word> [<w>]");
  const std::string fmt = c.format({"json", "off"});
  const Word q = c.word(0);
  const BrickPolytope bp = brick_polytope(q, c.element_or_demazure(1, q));
  if (c.req.oracle) {
    OracleLog log{c.err};
    check_bricks(log, bp, c.req.seed);
    log.done();
  }
  if (fmt == "off") c.out << to_off(bp.polytope);
  else c.emit(to_json(bp));
  return 0;
}

int cmd_check_toric(const Context& c) {
  c.expect_args(1, 2, "<word> [<w>]");
  c.format({"json"});
  const Word q = c.word(0);
  const ToricReport report = toric_classification(q, c.element_or_demazure(1, q));
  if (c.req.oracle) {
    OracleLog log{c.err};
    for (const auto& [facet, rank] : report.facet_ranks)
      log.expect((rank == facet.count()) == report.root_independent, "root independence differs across facets");
    log.done();
  }
  c.emit(to_json(report));
  return 0;
}

int cmd_duality(const Context& c) {
  c.expect_args(1, 2, "<word> [<w>]");
  c.format({"json"});
  const Word q = c.word(0);
  const GroupElement w = c.element_or_demazure(1, q);
  const DualityReport report = duality_check(q, w);
  if (c.req.oracle) {
    OracleLog log{c.err};
    log.expect(oracle::exhaustive_facets(q, w).size() == report.facet_count, "facet count");
    log.done();
  }
  c.emit(to_json(report));
  if (!report.valid()) {
    c.err << "duality violated\n";
    return 1;
  }
  return 0;
}

std::vector<std::size_t> parse_positions(const std::string& text) {
  std::vector<std::size_t> out;
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    for (auto& ch : token)
      if (ch == ',') ch = ' ';
    std::istringstream parts(token);
    std::string part;
    while (parts >> part) {
      if (part.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("invalid position '" + part + "'");
      out.push_back(std::stoul(part));
    }
  }
  return out;
}

Json network_json(const SortingNetwork& net) {
  Json commutators = Json::array(), bricks = Json::array();
  for (const auto& cm : net.commutators) commutators.push_back({cm.position, cm.level});
  for (const auto& b : net.bricks)
    bricks.push_back({{"commutator", b.commutator}, {"level", b.level}, {"end", b.end ? Json(*b.end) : Json()}});
  return {{"levels", net.levels}, {"commutators", commutators}, {"bricks", bricks}};
}

int cmd_network(const Context& c) {
  c.expect_args(1, 2, "<word> [<face positions>]");
  const std::string fmt = c.format({"svg", "tikz", "json"});
  if (!c.datum.is_type_a()) throw DomainError("sorting networks are type A only");
  const Word q = c.word(0);
  if (c.req.args.size() == 1) {
    const SortingNetwork net = sorting_network(q, c.datum.rank() + 1);
    if (fmt == "json") c.emit(network_json(net));
    else c.out << render(net, parse_drawing_format(fmt));
    return 0;
  }
  const Subword face = Subword::from_one_based(q.size(), parse_positions(c.req.args[1]), SubwordRole::Face);
  const PseudolineArrangement arr = arrangement_from_face(q, face);
  if (!arr.valid) c.err << "note: some pair of pseudolines crosses twice\n";
  if (c.req.oracle) {
    OracleLog log{c.err};
    log.expect(brick_count_vector(arr) == *brick_vector(q, face).ambient, "brick counting vs brick vector");
    log.done();
  }
  if (fmt == "json") {
    Json j = network_json(arr.network);
    j["contacts"] = face.one_based();
    j["valid"] = arr.valid;
    j["startLevels"] = arr.start_level;
    j["trajectories"] = arr.trajectories;
    j["brickCounts"] = brick_count_vector(arr);
    c.emit(j);
  } else {
    c.out << render(arr, parse_drawing_format(fmt));
  }
  return 0;
}

int cmd_assoc(const Context& c) {
  c.expect_args(1, 1, "<coxeter element word>");
  const std::string fmt = c.format({"json", "off"});
  const Word q = associahedron_word(c.word(0));
  const GroupElement w0 = longest_element(c.datum);
  const BrickPolytope bp = brick_polytope(q, w0);
  const ToricReport toric = toric_classification(q, w0);
  if (c.req.oracle) {
    OracleLog log{c.err};
    check_bricks(log, bp, c.req.seed);
    log.expect(toric.is_toric, "associahedron word is toric");
    log.done();
  }
  if (fmt == "off") {
    c.out << to_off(bp.polytope);
  } else {
    c.emit({{"Q", q.one_based()}, {"toric", to_json(toric)}, {"brickPolytope", to_json(bp)}});
  }
  return 0;
}

int cmd_richardson(const Context& c) {
  c.expect_args(2, 2, "<u> <v>");
  c.format({"json"});
  const RichardsonSeed seed = richardson_seed(evaluate(c.word(0)), evaluate(c.word(1)));
  if (c.req.oracle) {
    OracleLog log{c.err};
    log.expect(demazure_product(seed.q) == longest_element(c.datum), "Dem(R + S) = w0");
    log.done();
  }
  c.emit(to_json(seed));
  return 0;
}

int cmd_strata(const Context& c) {
  c.expect_args(1, 2, "<word> [<w>]");
  c.format({"json"});
  const Word q = c.word(0);
  const GroupElement w = c.element_or_demazure(1, q);
  const StrataPoset poset = strata_poset(q, w);
  if (c.req.oracle) {
    OracleLog log{c.err};
    std::set<Subword> minimal, complements;
    for (std::size_t i : poset.minimal) minimal.insert(poset.nodes[i]);
    for (const auto& f : oracle::exhaustive_facets(q, w)) complements.insert(f.switch_role());
    log.expect(minimal == complements, "minimal strata are the facet complements");
    log.done();
  }
  c.emit(to_json(poset));
  return 0;
}

}  // namespace

int run(const Request& request, std::ostream& out, std::ostream& err) {
  try {
    const Context c{request, CoxeterDatum::parse(request.datum), out, err};
    const std::string& cmd = request.command;
    if (cmd == "demazure") return cmd_demazure(c);
    if (cmd == "complex") return cmd_complex(c);
    if (cmd == "brick-polytope") return cmd_brick_polytope(c);
    if (cmd == "check-toric") return cmd_check_toric(c);
    if (cmd == "duality") return cmd_duality(c);
    if (cmd == "network") return cmd_network(c);
    if (cmd == "assoc") return cmd_assoc(c);
    if (cmd == "richardson") return cmd_richardson(c);
    if (cmd == "strata") return cmd_strata(c);
    throw ParseError("unknown command '" + cmd + "'");
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subword complexes, brick vectors and brick polytopes of Weyl groups"};
  Request req;
  app.add_option("command", req.command, "Command")->required()->check(CLI::IsMember(kCommands));
  app.add_option("datum", req.datum, "Datum literal such as A3 or custom:[[2,-1],[-1,2]]")->required();
  app.add_option("args", req.args, "Words as 1-based index strings, e.g. \"1 2 1\"");
  app.add_option("--format", req.format, "Output format")->check(CLI::IsMember({"json", "off", "svg", "tikz"}));
  app.add_flag("--oracle", req.oracle, "Cross-check against brute-force references");
  app.add_option("--seed", req.seed, "Seed for sampled oracle checks");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }
  return run(req, out, err);
}

}  // namespace brick::cli
