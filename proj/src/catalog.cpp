#include "liedeform/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "liedeform/algebras.hpp"
#include "liedeform/errors.hpp"
#include "liedeform/lie_core.hpp"

namespace liedeform {

namespace alg = algebras;

namespace {

Subspace coordinate_span(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> v;
  for (auto i : idx) v.push_back(unit_vector(n, i));
  return Subspace::span(n, v);
}

Subspace first_factor(const LieAlgebra& g) {
  std::vector<Vector> b;
  for (std::size_t i = 0; i < g.dim(); ++i) b.push_back(unit_vector(2 * g.dim(), i));
  return Subspace::span(2 * g.dim(), b);
}

std::optional<std::size_t> family_parameter(const std::string& key, const std::string& stem) {
  std::smatch m;
  const std::regex re(stem + "\\(([0-9]{1,4})\\)");
  if (!std::regex_match(key, m, re)) return std::nullopt;
  return std::stoul(m[1]);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError(p.string() + ": cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string to_string(EntryKind k) { return k == EntryKind::algebra ? "algebra" : "crossed_module"; }

void validate(const CatalogObject& obj) {
  if (const auto* l = std::get_if<LieAlgebra>(&obj)) {
    auto bad = jacobi_check(*l);
    if (bad.empty()) return;
    std::ostringstream os;
    os << l->name() << ": Jacobi identity fails on " << bad.size() << " triple(s):";
    for (const auto& t : bad) os << " (" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << ")";
    throw ValidationError(os.str());
  }
  const auto& cm = std::get<CrossedModule>(obj);
  for (const LieAlgebra* l : {&cm.h(), &cm.g()}) validate(CatalogObject(*l));
  auto r = check_crossed_module(cm);
  if (r.ok()) return;
  std::ostringstream os;
  os << cm.name() << ": not a crossed module:";
  for (const auto& m : r.messages()) os << "\n  " << m;
  throw ValidationError(os.str());
}

Json to_json(const CatalogObject& obj) {
  return std::visit([](const auto& x) { return to_json(x); }, obj);
}

void Catalog::add(std::string key, std::string description, CatalogObject obj, std::string origin) {
  if (objects_.count(key))
    throw ValidationError("catalog key \"" + key + "\" defined twice (" + origin + ")");
  obj = std::visit([&](const auto& x) -> CatalogObject { return x.renamed(key); }, obj);
  validate(obj);
  const EntryKind kind = std::holds_alternative<LieAlgebra>(obj) ? EntryKind::algebra : EntryKind::crossed_module;
  entries_.push_back({key, kind, std::move(description), std::move(origin)});
  objects_.emplace(std::move(key), std::move(obj));
}

const std::vector<std::string>& Catalog::families() {
  static const std::vector<std::string> f = {"abelian(n)", "exndim(n)", "heisenberg_{2n+1}", "identity_abelian(n)"};
  return f;
}

std::optional<CatalogObject> Catalog::family(const std::string& key) const {
  if (auto n = family_parameter(key, "abelian"); n && *n >= 1) return alg::abelian(*n).renamed(key);
  if (auto n = family_parameter(key, "exndim"); n && *n >= 4) return alg::exndim(*n).renamed(key);
  if (auto n = family_parameter(key, "identity_abelian"); n && *n >= 1)
    return identity_crmod(alg::abelian(*n)).renamed(key);
  std::smatch m;
  static const std::regex heis("heisenberg_([0-9]{1,3})");
  if (std::regex_match(key, m, heis)) {
    const std::size_t d = std::stoul(m[1]);
    if (d >= 3 && d % 2 == 1) return alg::heisenberg((d - 1) / 2);
  }
  return std::nullopt;
}

const Catalog& Catalog::builtin() {
  static const Catalog c = [] {
    Catalog c;
    const std::string b = "builtin";
    const auto r2 = alg::r2(), sl2 = alg::sl2();
    c.add("r2", "<x, y | [x,y] = x>", r2, b);
    c.add("r31", "<e1, e2, e3 | [e1,e2] = e2, [e1,e3] = e3>", alg::r31(), b);
    c.add("heisenberg_3", "Heisenberg algebra h3, [e1,e2] = z", alg::heisenberg(1), b);
    c.add("heisenberg_5", "Heisenberg algebra h5, [e_i,e_{2+i}] = z", alg::heisenberg(2), b);
    c.add("free2step3", "free 2-step nilpotent algebra of rank 3", alg::free2step3(), b);
    c.add("ex4dim", "<e1..e4 | [e1,e3] = e3, [e2,e4] = e4>", alg::ex4dim(), b);
    c.add("exndim(5)", "<e1..e5 | [e1,e_i] = e_i (i >= 4), [e2,e3] = e3>", alg::exndim(5), b);
    c.add("sl2", "split sl2 on (e, h, f)", sl2, b);
    c.add("abelian(2)", "abelian algebra of dimension 2", alg::abelian(2), b);
    c.add("r2_direct_square", "r2 + r2", direct_sum(r2, r2), b);
    c.add("r2_semidirect_square", "r2 x| r2 (adjoint action)", semidirect(identity_crmod(r2)), b);

    c.add("identity_r2", "id: r2 -> r2", identity_crmod(r2), b);
    c.add("identity_r31", "id: r31 -> r31", identity_crmod(alg::r31()), b);
    c.add("identity_heisenberg_3", "id: h3 -> h3", identity_crmod(alg::heisenberg(1)), b);
    c.add("identity_sl2", "id: sl2 -> sl2", identity_crmod(sl2), b);
    c.add("identity_abelian(2)", "id: abelian(2) -> abelian(2)", identity_crmod(alg::abelian(2)), b);
    c.add("adjoint_r2", "ad: r2 -> Der(r2)", adjoint_crmod(r2), b);
    c.add("adjoint_r31", "ad: r31 -> Der(r31)", adjoint_crmod(alg::r31()), b);
    c.add("adjoint_heisenberg_3", "ad: h3 -> Der(h3)", adjoint_crmod(alg::heisenberg(1)), b);
    c.add("adjoint_heisenberg_5", "ad: h5 -> Der(h5)", adjoint_crmod(alg::heisenberg(2)), b);
    c.add("adjoint_free2step3", "ad: free2step3 -> Der(free2step3)", adjoint_crmod(alg::free2step3()), b);
    c.add("adjoint_sl2", "ad: sl2 -> Der(sl2)", adjoint_crmod(sl2), b);
    c.add("inclusion_r2_first", "first factor r2 -> r2 + r2", inclusion_crmod(direct_sum(r2, r2), first_factor(r2)), b);
    c.add("inclusion_sl2_first", "first factor sl2 -> sl2 + sl2",
          inclusion_crmod(direct_sum(sl2, sl2), first_factor(sl2)), b);
    c.add("inclusion_cx_r2", "<x> -> r2", inclusion_crmod(r2, coordinate_span(2, {0})), b);
    c.add("inclusion_ex4dim", "<e1, e3, e4> -> ex4dim", inclusion_crmod(alg::ex4dim(), coordinate_span(4, {0, 2, 3})), b);
    c.add("inclusion_exndim5", "<e1, e3, e4, e5> -> exndim(5)",
          inclusion_crmod(alg::exndim(5), coordinate_span(5, {0, 2, 3, 4})), b);
    c.add("quotient_free2step3", "free2step3 -> free2step3 / <x12, x13>",
          quotient_crmod(alg::free2step3(), coordinate_span(6, {3, 4})), b);
    c.add("zero_r2_adjoint", "0: r2 (adjoint module) -> r2", zero_crmod(Action::adjoint(r2)), b);
    c.add("zero_sl2_adjoint", "0: sl2 (adjoint module) -> sl2", zero_crmod(Action::adjoint(sl2)), b);
    return c;
  }();
  return c;
}

Catalog Catalog::with_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  Catalog c = builtin();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw ValidationError("catalog path \"" + dir + "\" is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    const std::string key = p.stem().string();
    if (c.contains(key)) throw ValidationError("catalog key \"" + key + "\" from " + p.string() + " collides with an existing entry");
    Json j = parse_json(read_file(p), p.string());
    CatalogObject obj = is_crossed_module_document(j) ? CatalogObject(crossed_module_from_json(j, c))
                                                      : CatalogObject(algebra_from_json(j, c));
    c.add(key, "loaded from " + p.filename().string(), std::move(obj), p.string());
  }
  return c;
}

Catalog Catalog::from_environment() {
  const char* dir = std::getenv("LIEDEFORM_CATALOG_PATH");
  if (dir == nullptr || *dir == '\0') return builtin();
  return with_directory(dir);
}

bool Catalog::contains(const std::string& key) const { return objects_.count(key) > 0 || family(key).has_value(); }

void Catalog::unknown(const std::string& key) const {
  std::ostringstream os;
  os << "unknown catalog key \"" << key << "\"; available:";
  for (const auto& e : entries_) os << ' ' << e.key;
  os << "; families:";
  for (const auto& f : families()) os << ' ' << f;
  throw LookupError(os.str());
}

CatalogObject Catalog::get(const std::string& key) const {
  if (auto it = objects_.find(key); it != objects_.end()) return it->second;
  if (key == "exndim") return objects_.at("exndim(5)");
  if (auto f = family(key)) {
    validate(*f);
    return *f;
  }
  unknown(key);
}

LieAlgebra Catalog::algebra(const std::string& key) const {
  CatalogObject o = get(key);
  if (auto* l = std::get_if<LieAlgebra>(&o)) return *l;
  throw LookupError("catalog key \"" + key + "\" names a crossed module, not a Lie algebra");
}

CrossedModule Catalog::crossed_module(const std::string& key) const {
  CatalogObject o = get(key);
  if (auto* cm = std::get_if<CrossedModule>(&o)) return *cm;
  throw LookupError("catalog key \"" + key + "\" names a Lie algebra, not a crossed module");
}

CatalogObject catalog_get(const std::string& key) { return Catalog::from_environment().get(key); }

}  // namespace liedeform
