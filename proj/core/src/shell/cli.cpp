#include "dml/shell/cli.hpp"

#include "dml/algcore/identities.hpp"
#include "dml/algcore/structure.hpp"
#include "dml/cohom/cohomology.hpp"
#include "dml/degen/screen.hpp"
#include "dml/error.hpp"
#include "dml/ext/extension.hpp"
#include "dml/shell/audit.hpp"
#include "dml/shell/catalog.hpp"
#include "dml/shell/graph_io.hpp"
#include "dml/shell/parse.hpp"
#include "dml/shell/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>

namespace dml {
namespace {

struct Loaded {
  std::string label;
  Algebra algebra;
  std::optional<CatalogEntry> entry;
};

// A catalog id, or a path to a file in parse_algebra format.
Loaded load(const std::string& what) {
  const auto& cat = Catalog::builtin();
  if (cat.contains(what)) {
    auto e = cat.get(what);
    return {what, e.algebra, e};
  }
  if (std::filesystem::exists(what)) return {what, parse_algebra(read_file(what)), std::nullopt};
  throw UnknownId("'" + what + "' is neither a catalog id nor a readable file");
}

std::string sizes(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string forms(const std::vector<SkewForm>& fs) {
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? ", " : "") + fs[i].to_string();
  return s;
}

Report cmd_catalog_list(std::size_t dim) {
  Report r("catalog list");
  const auto& cat = Catalog::builtin();
  std::vector<std::string> ids;
  if (dim)
    ids = cat.ids_of_dim(dim);
  else
    for (const auto& e : cat.base_entries()) ids.push_back(e.id);
  for (const auto& id : ids) r.info("catalog", id, cat.get(id).provenance);
  return r;
}

Report cmd_catalog_show(const std::string& id) {
  Report r("catalog show");
  r.input("id", id);
  const auto e = Catalog::builtin().get(id);
  r.info("entry", "dim", std::to_string(e.algebra.dim()));
  r.info("entry", "provenance", e.provenance);
  r.info("entry", "lie", e.is_lie ? "yes" : "no");
  r.info("entry", "indecomposable", e.indecomposable ? "yes" : "no");
  if (!e.base_id.empty()) r.info("entry", "base", e.base_id);
  r.info("entry", "table", e.table_text.empty() ? emit_algebra(e.algebra) : e.table_text);
  if (!e.printed_h2_generators.empty()) {
    std::string g;
    for (const auto& s : e.printed_h2_generators) g += (g.empty() ? "" : ", ") + s;
    r.info("entry", "printed H2 generators", g);
  }
  return r;
}

Report cmd_check(const std::string& what) {
  Report r("check");
  r.input("algebra", what);
  const auto l = load(what);
  const auto rep = check_identities(l.algebra);
  r.check("identities", "anticommutative", rep.anticommutative);
  r.check("identities", "antiassociative", rep.antiassociative);
  r.check("identities", "dual_mock_lie", rep.dual_mock_lie);
  r.info("identities", "jacobi", rep.jacobi ? "true" : "false");
  for (const auto& w : rep.witnesses) {
    const std::string triple = "(e" + std::to_string(w.triple[0] + 1) + ",e" + std::to_string(w.triple[1] + 1) +
                               ",e" + std::to_string(w.triple[2] + 1) + ")";
    r.info("witnesses", to_string(w.kind) + " " + triple, vec_text(w.lhs) + " vs " + vec_text(w.rhs));
  }
  return r;
}

Report cmd_invariants(const std::string& what) {
  Report r("invariants");
  r.input("algebra", what);
  const auto l = load(what);
  const auto fp = fingerprint(l.algebra);
  r.info("fingerprint", "dim", std::to_string(fp.dim));
  r.info("fingerprint", "der_dim", std::to_string(fp.der_dim));
  r.info("fingerprint", "orbit_dim", std::to_string(fp.dim * fp.dim - fp.der_dim));
  r.info("fingerprint", "ann_dim", std::to_string(fp.ann_dim));
  r.info("fingerprint", "lcs_dims", sizes(fp.lcs_dims));
  for (const auto& [kl, d] : fp.product_dims)
    r.info("fingerprint", "dim A^" + std::to_string(kl.first) + " A^" + std::to_string(kl.second), std::to_string(d));
  r.info("fingerprint", "nilpotent", is_nilpotent(l.algebra) ? "true" : "false");
  return r;
}

Report cmd_h2(const std::string& what) {
  Report r("h2");
  r.input("algebra", what);
  const auto l = load(what);
  const auto b = h2_basis(l.algebra);
  r.info("cohomology", "dim Z2", std::to_string(b.z2.size()));
  r.info("cohomology", "dim B2", std::to_string(b.b2.size()));
  const std::string h2 = std::to_string(b.h2_reps.size());
  if (l.entry && l.entry->claimed_h2)
    r.compare("cohomology", "dim H2", h2, std::to_string(*l.entry->claimed_h2));
  else
    r.info("cohomology", "dim H2", h2);
  r.info("cohomology", "B2 basis", forms(b.b2));
  r.info("cohomology", "H2 representatives", forms(b.h2_reps));
  if (l.entry)
    for (const auto& g : l.entry->printed_h2_generators) {
      const auto f = parse_cocycle(g, l.algebra.dim());
      const bool ok = is_cocycle(l.algebra, f);
      r.check("printed generators", g, ok, ok ? "class " + vec_text(class_coordinates(l.algebra, f, b)) : "not a cocycle");
    }
  return r;
}

std::vector<SkewForm> parse_forms(const std::vector<std::string>& exprs, std::size_t n) {
  std::vector<SkewForm> out;
  for (const auto& e : exprs) out.push_back(parse_cocycle(e, n));
  return out;
}

Report cmd_extend(const std::string& what, const std::vector<std::string>& cocycles) {
  Report r("extend");
  r.input("algebra", what);
  for (const auto& c : cocycles) r.input("cocycle", c);
  const auto l = load(what);
  const CocycleTuple t(l.algebra.dim(), parse_forms(cocycles, l.algebra.dim()));
  for (std::size_t i = 0; i < t.size(); ++i)
    r.check("cocycles", "theta_" + std::to_string(i + 1) + " is a cocycle", is_cocycle(l.algebra, t.components[i]));
  if (!r.passed()) return r;
  const auto cond = check_extension_conditions(l.algebra, t);
  r.info("conditions", "theta-perp", cond.radical.to_string());
  r.info("conditions", "theta-perp meet Ann", cond.radical_and_ann.to_string());
  r.check("conditions", "theta-perp meets Ann trivially", !cond.radical_meets_ann);
  r.check("conditions", "classes independent in H2", cond.classes_independent_in_h2);
  const Algebra ext = central_extension(l.algebra, t);
  r.info("extension", "table", emit_algebra(ext));
  r.info("extension", "dim Ann", std::to_string(annihilator(ext).dim()));
  for (const auto& e : Catalog::builtin().ids_of_dim(ext.dim()))
    if (Catalog::builtin().get(e).algebra == ext) r.info("extension", "equals catalog entry", e);
  return r;
}

Report cmd_act(const std::string& what, const std::string& matrix_file, const std::vector<std::string>& cocycles) {
  Report r("act");
  r.input("algebra", what);
  r.input("matrix", matrix_file);
  for (const auto& c : cocycles) r.input("cocycle", c);
  const auto l = load(what);
  const std::size_t n = l.algebra.dim();
  const MatrixQ phi = parse_matrix(read_file(matrix_file), n);
  const bool aut = verify_automorphism(l.algebra, phi);
  r.check("action", "matrix is an automorphism", aut);
  if (!aut) return r;
  const CocycleTuple t(n, parse_forms(cocycles, n));
  const auto u = act(l.algebra, phi, t);
  const auto basis = h2_basis(l.algebra);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const bool coc = is_cocycle(l.algebra, u.components[i]);
    r.check("action", "image of theta_" + std::to_string(i + 1) + " is a cocycle", coc);
    r.info("action", "phi theta_" + std::to_string(i + 1), u.components[i].to_string());
    if (coc) r.info("action", "class of phi theta_" + std::to_string(i + 1), vec_text(class_coordinates(l.algebra, u.components[i], basis)));
  }
  return r;
}

Report cmd_degenerate(const std::string& src, const std::string& dst, const std::string& basis_file) {
  Report r("degenerate");
  r.input("source", src);
  r.input("target", dst);
  r.input("basis", basis_file);
  const auto a = load(src);
  const auto b = load(dst);
  const auto basis = parse_parametric_basis(read_file(basis_file), a.algebra.dim());
  const auto rep = verify_claim(a.algebra, b.algebra, {src, dst, basis, std::nullopt, ""});
  r.info("claim", "determinant", basis.determinant().to_string());
  if (rep.limit) r.info("claim", "limit", emit_algebra(*rep.limit));
  r.add({"claim", "status", to_string(rep.status), "",
         is_verified(rep.status) ? Verdict::Pass
                                 : (rep.status == ClaimStatus::VerifiedUpToFingerprint ? Verdict::Unwitnessed : Verdict::Fail)});
  if (!rep.detail.empty()) r.info("claim", "detail", rep.detail);
  const auto scr = necessary_conditions(a.algebra, b.algebra);
  for (const auto& c : scr.checks) r.info("screen", c.name, (c.pass ? "ok: " : "fails: ") + c.detail);
  if (rep.status == ClaimStatus::VerifiedUpToFingerprint) r.check("claim", "verified", false, "fingerprints only");
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with dual mock-Lie algebras", "dml"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));

  auto* catalog = app.add_subcommand("catalog", "List or show catalog entries");
  catalog->require_subcommand(1);
  std::size_t list_dim = 0;
  auto* cat_list = catalog->add_subcommand("list", "List entries");
  cat_list->add_option("--dim", list_dim, "Only ids of this dimension (split entries included)");
  std::string show_id;
  auto* cat_show = catalog->add_subcommand("show", "Show one entry");
  cat_show->add_option("id", show_id)->required();

  std::string target;
  auto* check = app.add_subcommand("check", "Check the defining identities");
  check->add_option("algebra", target, "Catalog id or algebra file")->required();
  auto* inv = app.add_subcommand("invariants", "Print the invariant fingerprint");
  inv->add_option("algebra", target)->required();
  auto* h2 = app.add_subcommand("h2", "Second cohomology");
  h2->add_option("algebra", target)->required();

  std::vector<std::string> cocycles;
  auto* extend = app.add_subcommand("extend", "Central extension by a tuple of cocycles");
  extend->add_option("algebra", target)->required();
  extend->add_option("--cocycle", cocycles, "Cocycle expression such as [d16]-[d25]+[d34]; repeat for tuples")
      ->required()
      ->allow_extra_args(false);

  std::string matrix_file;
  auto* actc = app.add_subcommand("act", "Apply an automorphism to cocycles");
  actc->add_option("algebra", target)->required();
  actc->add_option("--matrix", matrix_file, "Matrix file; column j is the image of e_j")->required();
  actc->add_option("--cocycle", cocycles)->required()->allow_extra_args(false);

  std::string source, basis_file;
  auto* degen = app.add_subcommand("degenerate", "Verify a degeneration along a parametric basis");
  degen->add_option("source", source)->required();
  degen->add_option("target", target)->required();
  degen->add_option("--basis", basis_file, "Parametric basis file")->required();

  std::size_t graph_dim = 7;
  auto* graph = app.add_subcommand("graph", "Emit the verified degeneration graph");
  graph->add_option("--dim", graph_dim, "7 or 8")->check(CLI::IsMember({7, 8}));
  graph->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

  std::uint64_t seed = kDefaultSeed;
  auto* all = app.add_subcommand("verify-all", "Run the full acceptance suite");
  all->add_option("--seed", seed, "Seed for the randomized property checks");
  for (auto* sub : {check, inv, h2, extend, actc, degen, all, cat_list, cat_show})
    sub->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (graph->parsed()) {
      const auto g = graph_dim == 7 ? seven_dim_graph() : eight_dim_graph();
      if (format == "json")
        out << emit_graph_json(g.graph);
      else
        out << emit_graph_dot(g.graph);
      return g.report.passed() ? 0 : 1;
    }

    Report r("");
    if (cat_list->parsed())
      r = cmd_catalog_list(list_dim);
    else if (cat_show->parsed())
      r = cmd_catalog_show(show_id);
    else if (check->parsed())
      r = cmd_check(target);
    else if (inv->parsed())
      r = cmd_invariants(target);
    else if (h2->parsed())
      r = cmd_h2(target);
    else if (extend->parsed())
      r = cmd_extend(target, cocycles);
    else if (actc->parsed())
      r = cmd_act(target, matrix_file, cocycles);
    else if (degen->parsed())
      r = cmd_degenerate(source, target, basis_file);
    else if (all->parsed())
      r = verify_all(seed);

    out << (format == "json" ? r.to_json() : r.to_text());
    return r.passed() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dml
