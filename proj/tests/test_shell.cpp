#include "dml/error.hpp"
#include "dml/shell/audit.hpp"
#include "dml/shell/cli.hpp"
#include "dml/shell/graph_io.hpp"
#include "dml/shell/report.hpp"
#include "dml/shell/witnesses.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <sstream>

namespace dml {
namespace {

using test::cat;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "dml");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseAlgebra, SpecCases) {
  const Algebra a = parse_algebra("dim 3\ne1 e2 = e3");
  EXPECT_EQ(a.constant(0, 1, 2), Rational(1));
  EXPECT_EQ(a.constant(1, 0, 2), Rational(-1));
  EXPECT_EQ(parse_algebra("dim 7\ne1 e2 = e4\ne1 e3 = e5\ne1 e6 = e7\ne2 e3 = e6\ne2 e5 = -e7\ne3 e4 = e7"),
            cat("D7_14"));
  EXPECT_THROW(parse_algebra("dim 2\ne1 e1 = e2"), SkewConflict);
  EXPECT_THROW(parse_algebra("dim 2\ne1 e2 = e3"), IndexOutOfRange);
  EXPECT_THROW(parse_algebra("dim 3\ne1 e2 = e3\ne2 e1 = e3"), SkewConflict);
  EXPECT_THROW(parse_algebra("dim 3\ne1 e2 == e3"), SyntaxError);
}

TEST(ParseAlgebra, CoefficientsCommentsAndWhitespace) {
  const Algebra a = parse_algebra("# comment\n dim 4\n e1e2 = 2*e3 - 1/2 e4   # trailing\ne2 e1 = -2e3 + 1/2*e4\n");
  EXPECT_EQ(a.constant(0, 1, 2), Rational(2));
  EXPECT_EQ(a.constant(0, 1, 3), Rational(-1, 2));
}

TEST(ParseAlgebra, SyntaxErrorsCarryPositions) {
  try {
    parse_algebra("dim 3\ne1 e2 = e3\ne1 x = e2");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseAlgebra, RoundTripsEveryCatalogEntry) {
  for (const auto& id : Catalog::builtin().all_ids()) {
    const Algebra a = cat(id);
    EXPECT_EQ(parse_algebra(emit_algebra(a)), a) << id;
  }
}

TEST(Catalog, GoldenFilesMatchBuiltinTables) {
  const auto& c = Catalog::builtin();
  std::set<std::string> seen;
  for (const auto& f : std::filesystem::directory_iterator(test::data_path("catalog"))) {
    const std::string id = f.path().stem().string();
    seen.insert(id);
    ASSERT_TRUE(c.contains(id)) << id;
    EXPECT_EQ(parse_algebra(read_file(f.path().string())), cat(id)) << id;
  }
  for (const auto& e : c.base_entries()) {
    EXPECT_TRUE(seen.count(e.id)) << e.id;
    EXPECT_EQ(parse_algebra(e.table_text), e.algebra) << e.id;
  }
  EXPECT_GE(c.base_entries().size(), 30u);
}

TEST(Catalog, IdsAndSplitEntries) {
  const auto& c = Catalog::builtin();
  EXPECT_EQ(split_id("D8_14"), (std::pair<std::size_t, std::size_t>{8, 14}));
  EXPECT_FALSE(split_id("X8_14"));
  EXPECT_FALSE(split_id("D8"));
  EXPECT_EQ(make_id(7, 6), "D7_06");
  const auto d814 = c.get("D8_14");
  EXPECT_EQ(d814.base_id, "D7_14");
  EXPECT_FALSE(d814.indecomposable);
  EXPECT_FALSE(d814.is_lie);
  EXPECT_EQ(c.get("C6").algebra, Algebra(6));
  EXPECT_THROW(c.get("D5_14"), UnknownId);
  EXPECT_THROW(c.get("nonsense"), UnknownId);
  EXPECT_EQ(c.get("D8_06").base_id, "D6_06");
  const auto seven = c.ids_of_dim(7);
  EXPECT_EQ(seven.front(), "D7_01");
  EXPECT_EQ(seven.back(), "D7_14");
  EXPECT_EQ(seven.size(), 14u);
}

TEST(ParseCocycle, SpecCases) {
  SkewForm nabla1(7);
  nabla1.add(0, 5, 1);
  nabla1.add(1, 4, -1);
  nabla1.add(2, 3, 1);
  EXPECT_EQ(parse_cocycle("[d16]-[d25]+[d34]", 7), nabla1);
  EXPECT_EQ(parse_cocycle(" [d1,6] - [d2,5] + [d3,4] ", 7), nabla1);
  const SkewForm three = parse_cocycle("3*[d12]", 2);
  EXPECT_EQ(three.coords(), (Vec{Rational(3)}));
  EXPECT_THROW(parse_cocycle("[d11]", 3), DiagonalDelta);
  EXPECT_THROW(parse_cocycle("[d18]", 7), IndexOutOfRange);
  EXPECT_THROW(parse_cocycle("[d12", 3), SyntaxError);
  EXPECT_TRUE(parse_cocycle("0", 4).is_zero());
}

TEST(ParseCocycle, RoundTrip) {
  test::Rng rng(61);
  for (int k = 0; k < 40; ++k) {
    Vec c(num_pairs(6));
    for (auto& x : c) x = rng.index(3) == 0 ? rng.q() : Rational(0);
    const SkewForm f = SkewForm::from_coords(6, c);
    EXPECT_EQ(parse_cocycle(f.to_string(), 6), f) << f.to_string();
  }
}

TEST(ParseBasis, SpecCases) {
  const auto b = parse_parametric_basis(
      "E1 = t*e4\nE2 = t^2*e2 - e3\nE3 = t*e3 + t*e5 + t^3*e6\nE4 = e1 + e2 + t^2*e4 - e5\n"
      "E5 = t*e7\nE6 = t^3*e6\nE7 = e5 + e6",
      7);
  EXPECT_FALSE(b.determinant().is_zero());
  EXPECT_EQ(parse_parametric_basis("E1 = e1\nE2 = e2\nE3 = e3", 3), ParametricBasis::identity(3));
  EXPECT_EQ(parse_parametric_basis("", 3), ParametricBasis::identity(3));
  EXPECT_THROW(parse_parametric_basis("E1 = e1 + e2\nE2 = e1 + e2", 2), SingularBasis);
  EXPECT_THROW(parse_parametric_basis("E1 = e4", 3), IndexOutOfRange);
  EXPECT_THROW(parse_parametric_basis("E1 = t^*e1", 2), SyntaxError);
  const auto laurent = parse_parametric_basis("E1 = t^-1*e1 + (2*t^3 - t)*e2", 2);
  EXPECT_EQ(laurent.rows()(0, 0), RatFunc(TPoly::monomial(1, -1)));
  EXPECT_EQ(laurent.rows()(0, 1), RatFunc(TPoly::monomial(2, 3) - TPoly::t()));
}

TEST(ParseBasis, RoundTrip) {
  for (const auto& w : seven_dim_witnesses()) {
    const auto b = parse_parametric_basis(w.basis_text, 7);
    EXPECT_EQ(parse_parametric_basis(emit_parametric_basis(b), 7), b) << w.source << " -> " << w.target;
  }
}

TEST(ParseMatrix, ShapesAndComments) {
  const MatrixQ m = parse_matrix("# scaling\n1 0\n0 1/2\n");
  EXPECT_EQ(m(1, 1), Rational(1, 2));
  EXPECT_THROW(parse_matrix("1 0\n0 1", 3), DimensionMismatch);
  EXPECT_THROW(parse_matrix("1 0\n0", 0), SyntaxError);
  EXPECT_THROW(parse_matrix("1 x\n0 1"), SyntaxError);
}

TEST(Witnesses, DataFilesMatchRecordsAndVerify) {
  std::size_t files = 0;
  for (const auto& f : std::filesystem::directory_iterator(test::data_path("witnesses"))) {
    const std::string text = read_file(f.path().string());
    const auto arrow = text.find(" -> ");
    ASSERT_EQ(text.rfind("# ", 0), 0u) << f.path();
    const std::string src = text.substr(2, arrow - 2);
    const std::string dst = text.substr(arrow + 4, text.find_first_of(" \n", arrow + 4) - arrow - 4);
    const auto rec = find_witness(src, dst);
    ASSERT_TRUE(rec) << f.path();
    const std::size_t n = cat(src).dim();
    const auto b = parse_parametric_basis(text, n);
    EXPECT_EQ(b, parse_parametric_basis(rec->basis_text, n)) << f.path();
    const auto rep = verify_claim(cat(src), cat(dst), {src, dst, b, {}, ""});
    EXPECT_TRUE(is_verified(rep.status)) << f.path() << ": " << rep.detail;
    ++files;
  }
  EXPECT_EQ(files, 18u);
}

TEST(Witnesses, RecordsAreConsistent) {
  EXPECT_EQ(printed_witnesses().size(), 3u);
  EXPECT_EQ(seven_dim_witnesses().size(), 17u);
  EXPECT_EQ(seven_dim_figure_edges().size(), 18u);
  for (const auto& e : seven_dim_figure_edges()) {
    const bool disputed = std::any_of(disputed_edges().begin(), disputed_edges().end(),
                                      [&](const DisputedEdge& d) { return d.from == e.from && d.to == e.to; });
    EXPECT_TRUE(disputed || find_witness(e.from, e.to)) << e.from << " -> " << e.to;
  }
  for (const auto& iso : recorded_isomorphisms()) {
    const Algebra a = cat(iso.a), b = cat(iso.b);
    const auto p = parse_parametric_basis(iso.basis_text, a.dim()).at(1);
    EXPECT_TRUE(verify_isomorphism(a, b, p)) << iso.a << " ~ " << iso.b;
  }
}

TEST(Report, VerdictsAndSerialization) {
  Report r("demo");
  r.input("algebra", "D5_01");
  r.compare("h2", "dim", "5", "5");
  r.add({"h2", "typo", "7", "5", Verdict::MismatchSuspectedTypo});
  r.info("h2", "note", "x");
  EXPECT_TRUE(r.passed());
  const std::string json = r.to_json();
  EXPECT_LT(json.find("\"command\""), json.find("\"inputs\""));
  EXPECT_LT(json.find("\"inputs\""), json.find("\"findings\""));
  EXPECT_NE(r.to_text().find("MATCH"), std::string::npos);
  r.compare("h2", "other", "4", "5");
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(is_failure(Verdict::Fail));
  EXPECT_FALSE(is_failure(Verdict::Unwitnessed));
}

TEST(GraphIo, EmptyGraphDot) {
  EXPECT_EQ(emit_graph_dot(DegenerationGraph{}), "digraph degenerations {\n}\n");
}

TEST(GraphIo, SevenDimDotAndJsonRoundTrip) {
  const auto g = seven_dim_graph().graph;
  const std::string dot = emit_graph(g, GraphFormat::Dot);
  EXPECT_EQ(dot.rfind("digraph degenerations {", 0), 0u);
  EXPECT_NE(dot.find("\"D7_14\" -> \"D7_07\""), std::string::npos);
  EXPECT_EQ(dot.find("\\\\"), std::string::npos);
  EXPECT_EQ(parse_graph_json(emit_graph_json(g)), g);

  const auto g8 = eight_dim_graph().graph;
  EXPECT_EQ(parse_graph_json(emit_graph_json(g8)), g8);
  EXPECT_NE(emit_graph_dot(g8).find("UNWITNESSED"), std::string::npos);
  EXPECT_THROW(parse_graph_json("{"), SyntaxError);
  EXPECT_THROW(parse_graph_json("{\"nodes\": 3}"), SyntaxError);
}

TEST(Cli, SpecCommands) {
  const auto h2 = run({"h2", "D5_01"});
  EXPECT_EQ(h2.code, 0);
  EXPECT_NE(h2.out.find("dim H2 = 5"), std::string::npos);

  const auto deg = run({"degenerate", "D7_14", "D7_07", "--basis", test::data_path("witnesses/witness_d714_d707.txt")});
  EXPECT_EQ(deg.code, 0) << deg.out << deg.err;
  EXPECT_NE(deg.out.find("VERIFIED"), std::string::npos);

  const auto chk = run({"check", "D7_14"});
  EXPECT_EQ(chk.code, 0);
  EXPECT_NE(chk.out.find("dual_mock_lie  PASS"), std::string::npos);
  EXPECT_NE(chk.out.find("jacobi = false"), std::string::npos);
}

TEST(Cli, ExtendActAndGraph) {
  // nabla_1 + nabla_4 has e4 - e7 in its radical, so the extension is split.
  const auto split = run({"extend", "D7_06", "--cocycle", "[d16]-[d25]+[d34]+[d37]"});
  EXPECT_EQ(split.code, 1);
  EXPECT_NE(split.out.find("e3 e7 = e8"), std::string::npos) << split.out;
  EXPECT_NE(split.out.find("D8_36"), std::string::npos);
  const auto pair = run({"extend", "D7_06", "--cocycle", "[d16]-[d25]+[d34]", "--cocycle", "[d37]"});
  EXPECT_EQ(pair.code, 0) << pair.out << pair.err;
  EXPECT_NE(pair.out.find("e3 e7 = e9"), std::string::npos) << pair.out;

  const auto act = run({"act", "D7_06", "--matrix", test::data_path("matrices/d706_scaling.txt"), "--cocycle", "[d16]-[d25]+[d34]"});
  EXPECT_EQ(act.code, 0) << act.err;
  const auto bad = run({"act", "D7_06", "--matrix", test::data_path("matrices/d706_swap_e1_e4.txt"), "--cocycle", "[d17]"});
  EXPECT_NE(bad.code, 0);

  const auto dot = run({"graph", "--dim", "7"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("\"D7_14\" -> \"D7_07\""), std::string::npos);
  const auto json = run({"graph", "--dim", "7", "--format", "json"});
  EXPECT_EQ(parse_graph_json(json.out), seven_dim_graph().graph);
}

TEST(Cli, ErrorsAndFiles) {
  EXPECT_EQ(run({"check", "no_such_algebra"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"h2", test::data_path("catalog/D5_01.alg")}).code, 0);
  const auto json = run({"invariants", "D7_14", "--format", "json"});
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(json.out.rfind("{", 0), 0u);
  EXPECT_NE(json.out.find("\"der_dim\""), std::string::npos);
}

TEST(Cli, VerifyAllIsDeterministic) {
  const auto a = run({"verify-all", "--format", "json"});
  const auto b = run({"verify-all", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  EXPECT_FALSE(a.out.empty());
}

}  // namespace
}  // namespace dml
