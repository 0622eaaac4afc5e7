#include "liedeform/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "liedeform/analysis.hpp"
#include "liedeform/catalog.hpp"
#include "liedeform/cohomology.hpp"
#include "liedeform/errors.hpp"
#include "liedeform/io.hpp"
#include "liedeform/lie_core.hpp"

namespace liedeform {

namespace {

constexpr int schema_version = 1;

/// Loads catalog entries lazily so that commands on plain files never touch
/// LIEDEFORM_CATALOG_PATH.
class LazyCatalog : public RefResolver {
 public:
  const Catalog& get() const {
    if (!cat_) cat_.emplace(Catalog::from_environment());
    return *cat_;
  }
  LieAlgebra algebra(const std::string& key) const override { return get().algebra(key); }
  CrossedModule crossed_module(const std::string& key) const override { return get().crossed_module(key); }

 private:
  mutable std::optional<Catalog> cat_;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::vector<std::string> arguments;
  LazyCatalog catalog;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses an "@key" reference or a file. Structure is checked, axioms are not.
CatalogObject load_unchecked(Context& ctx, const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return ctx.catalog.get().get(spec.substr(1));
  Json j = parse_json(read_file(spec), spec);
  if (is_crossed_module_document(j)) return crossed_module_from_json(j, ctx.catalog);
  return algebra_from_json(j, ctx.catalog);
}

CatalogObject load(Context& ctx, const std::string& spec) {
  CatalogObject o = load_unchecked(ctx, spec);
  validate(o);
  return o;
}

LieAlgebra load_algebra(Context& ctx, const std::string& spec) {
  CatalogObject o = load(ctx, spec);
  if (auto* l = std::get_if<LieAlgebra>(&o)) return *l;
  throw PreconditionError(spec + " is a crossed module; this command expects a Lie algebra");
}

CrossedModule load_crossed(Context& ctx, const std::string& spec) {
  CatalogObject o = load(ctx, spec);
  if (auto* cm = std::get_if<CrossedModule>(&o)) return *cm;
  throw PreconditionError(spec + " is a Lie algebra; this command expects a crossed module");
}

void emit_report(Context& ctx, const std::string& command, const Json& results, bool ok) {
  Json r = Json::object();
  r["arguments"] = ctx.arguments;
  r["command"] = command;
  r["ok"] = ok;
  r["results"] = results;
  r["schema_version"] = schema_version;
  ctx.out << dump(r);
}

void table(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(w) + 2) << k << v << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// --- commands ---------------------------------------------------------------

int cmd_check(Context& ctx, const std::string& input) {
  CatalogObject o = load_unchecked(ctx, input);
  Json results = Json::object();
  bool ok = true;
  std::vector<std::string> lines;
  if (const auto* l = std::get_if<LieAlgebra>(&o)) {
    auto bad = jacobi_check(*l);
    ok = bad.empty();
    Json triples = Json::array();
    for (const auto& t : bad) triples.push_back({t[0], t[1], t[2]});
    results = {{"dim", l->dim()}, {"jacobi_violations", triples}, {"kind", "algebra"}, {"name", l->name()}};
    lines.push_back(l->name() + ": Lie algebra of dimension " + std::to_string(l->dim()));
    if (ok) {
      lines.push_back("Jacobi identity: ok");
    } else {
      lines.push_back("Jacobi identity: FAILED on " + std::to_string(bad.size()) + " triple(s)");
      for (const auto& t : bad)
        lines.push_back("  (" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
                        std::to_string(t[2] + 1) + ")");
    }
  } else {
    const auto& cm = std::get<CrossedModule>(o);
    auto jh = jacobi_check(cm.h());
    auto jg = jacobi_check(cm.g());
    auto r = check_crossed_module(cm);
    ok = jh.empty() && jg.empty() && r.ok();
    Json msgs = Json::array();
    for (const auto& m : r.messages()) msgs.push_back(m);
    results = {{"axioms_ok", r.ok()},     {"g_jacobi_ok", jg.empty()}, {"h_jacobi_ok", jh.empty()},
               {"kind", "crossed_module"}, {"messages", msgs},          {"name", cm.name()}};
    lines.push_back(cm.name() + ": crossed module " + cm.h().name() + " -> " + cm.g().name());
    lines.push_back("Jacobi identity on h: " + std::string(jh.empty() ? "ok" : "FAILED"));
    lines.push_back("Jacobi identity on g: " + std::string(jg.empty() ? "ok" : "FAILED"));
    lines.push_back("crossed-module axioms: " + std::string(r.ok() ? "ok" : "FAILED"));
    for (const auto& m : r.messages()) lines.push_back("  " + m);
  }
  if (ctx.json) {
    emit_report(ctx, "check", results, ok);
  } else {
    for (const auto& s : lines) ctx.out << s << '\n';
  }
  return ok ? exit_ok : exit_validation;
}

int cmd_analyze(Context& ctx, const std::string& input) {
  LieAlgebra l = load_algebra(ctx, input);
  Fingerprint f = fingerprint(l);
  if (ctx.json) {
    emit_report(ctx, "analyze", {{"fingerprint", to_json(f)}, {"name", l.name()}}, true);
    return exit_ok;
  }
  ctx.out << l.name() << '\n';
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [k, v] : fingerprint_fields(f)) rows.emplace_back(k, to_string(v));
  table(ctx.out, rows);
  return exit_ok;
}

int cmd_semidirect(Context& ctx, const std::string& crossed, const std::optional<std::string>& t,
                   const std::optional<std::string>& output) {
  CrossedModule cm = load_crossed(ctx, crossed);
  LieAlgebra p = t ? deformed(cm, parse_rational(*t)) : semidirect(cm);
  Json doc = to_json(p);
  if (output) {
    std::ofstream os(*output, std::ios::binary);
    if (!os) throw ParseError(*output + ": cannot write file");
    os << dump(doc);
  }
  if (ctx.json) {
    Json results = {{"algebra", doc}};
    if (output) results["output"] = *output;
    emit_report(ctx, "semidirect", results, true);
  } else if (output) {
    ctx.out << "wrote " << *output << " (" << p.name() << ", dim " << p.dim() << ")\n";
  } else {
    ctx.out << dump(doc);
  }
  return exit_ok;
}

int cmd_cohomology(Context& ctx, const std::string& input, std::size_t degree) {
  if (degree > 2) throw DegreeError("--degree must be 0, 1 or 2");
  LieAlgebra l = load_algebra(ctx, input);
  Module m = adjoint_module(l);
  Json dims = Json::object(), z = Json::object(), b = Json::object();
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t k = 0; k <= degree; ++k) {
    const std::size_t zk = cocycle_space(m, k).dim();
    const std::size_t bk = k == 0 ? 0 : coboundary_space(m, k).dim();
    dims["H" + std::to_string(k)] = zk - bk;
    z[std::to_string(k)] = zk;
    b[std::to_string(k)] = bk;
    rows.emplace_back("H^" + std::to_string(k),
                      std::to_string(zk - bk) + "  (dim Z = " + std::to_string(zk) + ", dim B = " + std::to_string(bk) + ")");
  }
  if (ctx.json) {
    emit_report(ctx, "cohomology", {{"B", b}, {"Z", z}, {"algebra", l.name()}, {"dims", dims}, {"module", "adjoint"}},
                true);
    return exit_ok;
  }
  ctx.out << l.name() << " with adjoint coefficients\n";
  table(ctx.out, rows);
  return exit_ok;
}

int cmd_cocycle_status(Context& ctx, const std::string& crossed) {
  CrossedModule cm = load_crossed(ctx, crossed);
  Cochain c = canonical_cocycle(cm);
  const bool closed = differential(c).is_zero();
  const bool zero = c.is_zero();
  const bool cob = closed && is_coboundary(c).has_value();
  bool mu_zero = true;
  for (std::size_t i = 0; i < cm.h().dim(); ++i)
    for (std::size_t j = i + 1; j < cm.h().dim(); ++j)
      if (!is_zero(cm.mu()(cm.h().bracket_basis(i, j)))) mu_zero = false;
  if (ctx.json) {
    emit_report(ctx, "cocycle-status",
                {{"closed", closed},
                 {"coboundary", cob},
                 {"crossed_module", cm.name()},
                 {"identically_zero", zero},
                 {"mu_of_brackets_zero", mu_zero}},
                closed);
    return closed ? exit_ok : exit_validation;
  }
  ctx.out << "canonical cocycle of " << cm.name() << " on " << c.algebra().name() << '\n';
  ctx.out << "closed: " << yes_no(closed) << '\n';
  if (zero)
    ctx.out << "coboundary: yes (cocycle is identically zero)\n";
  else if (cob)
    ctx.out << "coboundary: yes (primitive found)\n";
  else
    ctx.out << "coboundary: no\n";
  ctx.out << "mu([h,h]) = 0: " << yes_no(mu_zero) << '\n';
  return closed ? exit_ok : exit_validation;
}

int cmd_derivations(Context& ctx, const std::string& input, bool as_algebra) {
  LieAlgebra l = load_algebra(ctx, input);
  DerivationSpace der = derivations(l);
  if (as_algebra) {
    DerivationAlgebra da = derivations_as_algebra(der);
    Json doc = to_json(da.algebra.renamed("Der(" + l.name() + ")"));
    if (ctx.json) {
      Json real = Json::array();
      for (const auto& m : da.realization) real.push_back(to_json(m));
      emit_report(ctx, "derivations", {{"algebra", doc}, {"realization", real}}, true);
    } else {
      ctx.out << dump(doc);
    }
    return exit_ok;
  }
  const std::size_t inner = inner_derivations(l).dim();
  const std::size_t centr = centroid(l).dim();
  if (ctx.json) {
    Json basis = Json::array();
    for (const auto& m : der.basis) basis.push_back(to_json(m));
    emit_report(ctx, "derivations",
                {{"algebra", l.name()}, {"basis", basis}, {"dim_Centr", centr}, {"dim_Der", der.dim()}, {"dim_inner", inner}},
                true);
    return exit_ok;
  }
  table(ctx.out, {{"dim Der(" + l.name() + ")", std::to_string(der.dim())},
                  {"dim inner", std::to_string(inner)},
                  {"dim Centr", std::to_string(centr)}});
  for (std::size_t i = 0; i < der.dim(); ++i) ctx.out << "D" << i + 1 << " = " << to_string(der.basis[i]) << '\n';
  return exit_ok;
}

int cmd_compare(Context& ctx, const std::string& a_spec, const std::string& b_spec) {
  LieAlgebra a = load_algebra(ctx, a_spec);
  LieAlgebra b = load_algebra(ctx, b_spec);
  NonIsoCertificate c = certify_nonisomorphic(a, b);
  if (ctx.json) {
    emit_report(ctx, "compare", to_json(c), true);
    return exit_ok;
  }
  ctx.out << "A: " << a.name() << "\nB: " << b.name() << '\n';
  if (!c.diffs.empty()) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& d : c.diffs) rows.emplace_back(d.invariant, to_string(d.a) + " vs " + to_string(d.b));
    table(ctx.out, rows);
  }
  ctx.out << (c.conclusive() ? "conclusive: yes (not isomorphic)\n"
                             : "conclusive: no (fingerprints agree; isomorphism not decided)\n");
  return exit_ok;
}

bool is_identity_crmod(const CrossedModule& cm) {
  return cm.h().same_structure(cm.g()) && cm.mu().matrix() == Matrix::identity(cm.g().dim()) &&
         cm.action().rho == Action::adjoint(cm.g()).rho;
}

int cmd_contract_verify(Context& ctx, const std::string& crossed, const std::string& s_text) {
  CrossedModule cm = load_crossed(ctx, crossed);
  const Rational s = parse_rational(s_text);
  if (sgn(s) == 0) throw SingularityError("--s must be nonzero");
  const bool phi = contraction_check_phi(cm, s);
  const bool psi_applies = is_identity_crmod(cm);
  const bool psi = psi_applies && contraction_check_psi(cm.g(), s);
  const bool ok = phi && (!psi_applies || psi);
  if (ctx.json) {
    Json results = {{"crossed_module", cm.name()}, {"phi", phi}, {"psi_applicable", psi_applies}, {"s", to_string(s)}};
    if (psi_applies) results["psi"] = psi;
    emit_report(ctx, "contract-verify", results, ok);
    return ok ? exit_ok : exit_validation;
  }
  if (psi_applies)
    ctx.out << (psi ? "psi-contraction verified exactly\n" : "psi-contraction FAILED\n");
  else
    ctx.out << "psi-contraction: not applicable (mu is not the identity of g)\n";
  ctx.out << (phi ? "phi-rescaling verified exactly\n" : "phi-rescaling FAILED\n");
  return ok ? exit_ok : exit_validation;
}

int cmd_catalog_list(Context& ctx) {
  const Catalog& c = ctx.catalog.get();
  if (ctx.json) {
    Json entries = Json::array();
    for (const auto& e : c.entries())
      entries.push_back({{"description", e.description}, {"key", e.key}, {"kind", to_string(e.kind)}, {"origin", e.origin}});
    emit_report(ctx, "catalog list", {{"entries", entries}, {"families", Catalog::families()}}, true);
    return exit_ok;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& e : c.entries()) rows.emplace_back(e.key, to_string(e.kind) + "  " + e.description);
  for (const auto& f : Catalog::families()) rows.emplace_back(f, "family");
  table(ctx.out, rows);
  return exit_ok;
}

int cmd_catalog_emit(Context& ctx, const std::string& key) {
  std::string k = !key.empty() && key[0] == '@' ? key.substr(1) : key;
  Json doc = to_json(ctx.catalog.get().get(k));
  if (ctx.json)
    emit_report(ctx, "catalog emit", {{"document", doc}, {"key", k}}, true);
  else
    ctx.out << dump(doc);
  return exit_ok;
}

bool is_validation_failure(const Error& e) {
  return dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const CrossedModuleError*>(&e) ||
         dynamic_cast<const DimensionError*>(&e) || dynamic_cast<const IdealError*>(&e) ||
         dynamic_cast<const ActionError*>(&e);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, false, {}, {}};
  for (int i = 1; i < argc; ++i) ctx.arguments.emplace_back(argv[i]);

  CLI::App app{"Exact computations with Lie algebras, crossed modules and their deformed products", "liedeform"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "Emit a JSON report instead of text");

  std::string input, input_b, crossed, s_text, key;
  std::optional<std::string> t_text, output;
  std::size_t degree = 0;
  bool as_algebra = false;

  auto* check = app.add_subcommand("check", "Validate an algebra or crossed module");
  check->add_option("input", input, "File or @key")->required();
  auto* analyze = app.add_subcommand("analyze", "Print the invariant fingerprint");
  analyze->add_option("input", input, "File or @key")->required();
  auto* semi = app.add_subcommand("semidirect", "Build the semidirect product, or the deformed one with --t");
  semi->add_option("--crossed", crossed, "Crossed module file or @key")->required();
  semi->add_option("--t", t_text, "Deformation parameter p/q");
  semi->add_option("-o,--output", output, "Write the algebra to this file");
  auto* coh = app.add_subcommand("cohomology", "Adjoint cohomology dimensions up to a degree");
  coh->add_option("input", input, "File or @key")->required();
  coh->add_option("--degree", degree, "Top degree (0, 1 or 2)")->required();
  auto* cocycle = app.add_subcommand("cocycle-status", "Closedness and triviality of the canonical cocycle");
  cocycle->add_option("--crossed", crossed, "Crossed module file or @key")->required();
  auto* der = app.add_subcommand("derivations", "Derivation algebra");
  der->add_option("input", input, "File or @key")->required();
  der->add_flag("--as-algebra", as_algebra, "Emit Der as an abstract Lie algebra");
  auto* cmp = app.add_subcommand("compare", "Non-isomorphy certificate from fingerprints");
  cmp->add_option("a", input, "File or @key")->required();
  cmp->add_option("b", input_b, "File or @key")->required();
  auto* cv = app.add_subcommand("contract-verify", "Verify the contraction maps exactly");
  cv->add_option("--crossed", crossed, "Crossed module file or @key")->required();
  cv->add_option("--s", s_text, "Parameter s = sqrt(t), p/q")->required();
  auto* catalog = app.add_subcommand("catalog", "Built-in catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog keys");
  auto* emit = catalog->add_subcommand("emit", "Print the JSON document of an entry");
  emit->add_option("key", key, "Catalog key")->required();
  for (auto* sc : {check, analyze, semi, coh, cocycle, der, cmp, cv, catalog, list, emit}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*check) return cmd_check(ctx, input);
    if (*analyze) return cmd_analyze(ctx, input);
    if (*semi) return cmd_semidirect(ctx, crossed, t_text, output);
    if (*coh) return cmd_cohomology(ctx, input, degree);
    if (*cocycle) return cmd_cocycle_status(ctx, crossed);
    if (*der) return cmd_derivations(ctx, input, as_algebra);
    if (*cmp) return cmd_compare(ctx, input, input_b);
    if (*cv) return cmd_contract_verify(ctx, crossed, s_text);
    if (*list) return cmd_catalog_list(ctx);
    if (*emit) return cmd_catalog_emit(ctx, key);
  } catch (const Error& e) {
    if (is_validation_failure(e)) {
      err << "validation failed: " << e.what() << '\n';
      return exit_validation;
    }
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace liedeform
