#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "liedeform/analysis.hpp"
#include "liedeform/catalog.hpp"
#include "liedeform/cohomology.hpp"
#include "liedeform/errors.hpp"
#include "liedeform/io.hpp"
#include "liedeform/lie_core.hpp"

using namespace liedeform;
namespace fs = std::filesystem;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

std::vector<LieAlgebra> catalog_algebras() {
  std::vector<LieAlgebra> out;
  for (const auto& e : cat().entries())
    if (e.kind == EntryKind::algebra) out.push_back(cat().algebra(e.key));
  return out;
}

std::vector<CrossedModule> catalog_crossed_modules() {
  std::vector<CrossedModule> out;
  for (const auto& e : cat().entries())
    if (e.kind == EntryKind::crossed_module) out.push_back(cat().crossed_module(e.key));
  return out;
}

bool mu_kills_brackets(const CrossedModule& cm) {
  for (std::size_t i = 0; i < cm.h().dim(); ++i)
    for (std::size_t j = i + 1; j < cm.h().dim(); ++j)
      if (!is_zero(cm.mu()(cm.h().bracket_basis(i, j)))) return false;
  return true;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("liedeform_catalog_" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path_ / name) << text; }

 private:
  fs::path path_;
};

class EnvGuard {
 public:
  explicit EnvGuard(const std::string& value) { setenv("LIEDEFORM_CATALOG_PATH", value.c_str(), 1); }
  ~EnvGuard() { unsetenv("LIEDEFORM_CATALOG_PATH"); }
};

}  // namespace

TEST(Catalog, Examples) {
  auto r2 = cat().algebra("r2");
  EXPECT_EQ(r2.dim(), 2u);
  EXPECT_EQ(r2.bracket_basis(0, 1), unit_vector(2, 0));
  EXPECT_EQ(r2.labels(), (std::vector<std::string>{"x", "y"}));

  auto h3 = cat().algebra("heisenberg_3");
  EXPECT_EQ(h3.dim(), 3u);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) nonzero += !is_zero(h3.bracket_basis(i, j));
  EXPECT_EQ(nonzero, 1u);
  EXPECT_EQ(center(h3).dim(), 1u);

  auto a4 = cat().algebra("abelian(4)");
  EXPECT_EQ(a4.dim(), 4u);
  EXPECT_TRUE(is_abelian(a4));
  EXPECT_EQ(a4.name(), "abelian(4)");
}

TEST(Catalog, Families) {
  EXPECT_EQ(cat().algebra("heisenberg_7").dim(), 7u);
  EXPECT_EQ(cat().algebra("exndim(6)").dim(), 6u);
  EXPECT_EQ(cat().algebra("exndim").dim(), 5u);
  EXPECT_EQ(cat().crossed_module("identity_abelian(3)").h().dim(), 3u);
  EXPECT_THROW(cat().get("exndim(3)"), LookupError);
  EXPECT_THROW(cat().get("heisenberg_4"), LookupError);
}

TEST(Catalog, UnknownKeyListsAvailable) {
  try {
    cat().get("r3");
    FAIL() << "expected LookupError";
  } catch (const LookupError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("\"r3\""), std::string::npos);
    EXPECT_NE(msg.find("r31"), std::string::npos);
    EXPECT_NE(msg.find("adjoint_heisenberg_3"), std::string::npos);
  }
  EXPECT_THROW(cat().algebra("identity_r2"), LookupError);
  EXPECT_THROW(cat().crossed_module("r2"), LookupError);
}

TEST(Catalog, EveryEntryValid) {
  for (const auto& e : cat().entries()) {
    CatalogObject o = cat().get(e.key);
    EXPECT_NO_THROW(validate(o)) << e.key;
    EXPECT_EQ(std::visit([](const auto& x) { return x.name(); }, o), e.key);
  }
}

TEST(Catalog, ValidateReportsViolations) {
  LieAlgebraBuilder b("bad", 3);
  b.set(0, 1, {{2, 1}}).set(0, 2, {{0, 1}});
  EXPECT_THROW(validate(CatalogObject(b.build())), ValidationError);
}

TEST(Json, RoundTripEveryEntry) {
  for (const auto& e : cat().entries()) {
    CatalogObject o = cat().get(e.key);
    const std::string first = dump(to_json(o));
    Json j = parse_json(first);
    CatalogObject back = e.kind == EntryKind::algebra ? CatalogObject(algebra_from_json(j, cat()))
                                                      : CatalogObject(crossed_module_from_json(j, cat()));
    EXPECT_EQ(dump(to_json(back)), first) << e.key;
  }
}

TEST(Json, AlgebraFormat) {
  const std::string text = dump(to_json(cat().algebra("r2")));
  EXPECT_EQ(text,
            "{\n  \"basis\": [\n    \"x\",\n    \"y\"\n  ],\n  \"brackets\": [\n    {\n      \"left\": 0,\n"
            "      \"result\": {\n        \"0\": \"1\"\n      },\n      \"right\": 1\n    }\n  ],\n"
            "  \"dim\": 2,\n  \"name\": \"r2\"\n}\n");
}

TEST(Json, NumericKeyOrder) {
  Json j = parse_json(R"({"b": 1, "a": {"10": "1", "2": "3", "x": 0}})");
  EXPECT_EQ(canonical(j).dump(), R"({"a":{"2":"3","10":"1","x":0},"b":1})");
}

TEST(Json, ParseErrorHasPosition) {
  try {
    parse_json("{\n  \"name\": \"r2\",\n  \"dim\": 2,,\n}", "bad.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("bad.json"), std::string::npos);
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column"), std::string::npos);
  }
}

TEST(Json, SchemaErrors) {
  auto load = [](const char* text) { return algebra_from_json(parse_json(text), cat()); };
  EXPECT_THROW(load(R"({"dim": 2, "brackets": []})"), ParseError);
  EXPECT_THROW(load(R"({"name": "a", "dim": 2, "brackets": [{"left": 1, "right": 0, "result": {}}]})"), ParseError);
  EXPECT_THROW(load(R"({"name": "a", "dim": 2, "brackets": [{"left": 0, "right": 1, "result": {"2": "1"}}]})"),
               ParseError);
  EXPECT_THROW(load(R"({"name": "a", "dim": 2, "brackets": [{"left": 0, "right": 1, "result": {"0": 0.5}}]})"),
               ParseError);
  EXPECT_THROW(load(R"({"name": "a", "dim": 2, "brackets": [{"left": 0, "right": 1, "result": {"0": "1/0"}}]})"),
               ParseError);
  EXPECT_THROW(load(R"({"name": "a", "dim": 2, "brackets": [
      {"left": 0, "right": 1, "result": {"0": "1"}}, {"left": 0, "right": 1, "result": {}}]})"),
               ParseError);
  auto ok = load(R"({"name": "a", "dim": 2, "brackets": [{"left": 0, "right": 1, "result": {"1": -2}}]})");
  EXPECT_EQ(ok.bracket_basis(0, 1), (Vector{0, -2}));
  EXPECT_EQ(ok.labels(), default_labels(2));
}

TEST(Json, CrossedModuleForms) {
  auto refd = crossed_module_from_json(parse_json(R"({"builtin": "adjoint", "of": "@heisenberg_3"})"), cat());
  EXPECT_EQ(dump(to_json(refd.renamed("x"))), dump(to_json(cat().crossed_module("adjoint_heisenberg_3").renamed("x"))));
  auto inc = crossed_module_from_json(
      parse_json(R"({"builtin": "inclusion", "of": "@r2", "ideal": [["1", "0"]], "name": "cx"})"), cat());
  EXPECT_EQ(inc.name(), "cx");
  EXPECT_EQ(inc.h().dim(), 1u);
  auto z = crossed_module_from_json(parse_json(R"({"builtin": "zero", "of": "@sl2", "module": "trivial", "dim": 2})"),
                                    cat());
  EXPECT_EQ(z.h().dim(), 2u);
  auto explicit_cm = crossed_module_from_json(
      parse_json(R"({"h": "@r2", "g": "@r2", "mu": [["1", "0"], ["0", "1"]],
                     "action": [[["0", "1"], ["0", "0"]], [["-1", "0"], ["0", "0"]]]})"),
      cat());
  EXPECT_TRUE(check_crossed_module(explicit_cm).ok());
  EXPECT_THROW(crossed_module_from_json(parse_json(R"({"builtin": "twisted", "of": "@r2"})"), cat()), ParseError);
  EXPECT_THROW(crossed_module_from_json(parse_json(R"({"builtin": "inclusion", "of": "@r2", "ideal": [["0", "1"]]})"),
                                        cat()),
               IdealError);
  EXPECT_THROW(crossed_module_from_json(parse_json(R"({"h": "@nope", "g": "@r2", "mu": [], "action": []})"), cat()),
               LookupError);
}

TEST(Catalog, DirectoryMerge) {
  TempDir dir;
  dir.write("tiny.json", R"({"name": "tiny", "dim": 2, "brackets": [{"left": 0, "right": 1, "result": {"1": "1"}}]})");
  dir.write("tiny_ad.json", R"({"builtin": "adjoint", "of": "@tiny"})");
  {
    EnvGuard env(dir.path().string());
    Catalog c = Catalog::from_environment();
    EXPECT_EQ(c.algebra("tiny").dim(), 2u);
    EXPECT_EQ(c.crossed_module("tiny_ad").name(), "tiny_ad");
    EXPECT_EQ(std::get<LieAlgebra>(catalog_get("tiny")).dim(), 2u);
    EXPECT_EQ(c.entries().back().origin, (dir.path() / "tiny_ad.json").string());
  }
  EXPECT_THROW(catalog_get("tiny"), LookupError);
}

TEST(Catalog, DirectoryCollisionAndInvalid) {
  {
    TempDir dir;
    dir.write("r2.json", R"({"name": "r2", "dim": 1, "brackets": []})");
    EXPECT_THROW(Catalog::with_directory(dir.path().string()), ValidationError);
  }
  {
    TempDir dir;
    dir.write("bad.json", R"({"name": "bad", "dim": 3, "brackets": [
        {"left": 0, "right": 1, "result": {"2": "1"}}, {"left": 0, "right": 2, "result": {"0": "1"}}]})");
    EXPECT_THROW(Catalog::with_directory(dir.path().string()), ValidationError);
  }
  {
    TempDir dir;
    dir.write("broken.json", "{ \"name\": ");
    EXPECT_THROW(Catalog::with_directory(dir.path().string()), ParseError);
  }
  EXPECT_THROW(Catalog::with_directory("/nonexistent/liedeform"), ValidationError);
}

TEST(CatalogSweep, CenterAndDerivedFormulas) {
  for (const auto& cm : catalog_crossed_modules())
    for (int t : {1, -1, 2}) {
      auto d = deformed(cm, t);
      EXPECT_EQ(center_deformed_formula(cm, t), center(d)) << cm.name() << " t=" << t;
      EXPECT_EQ(derived_deformed_formula(cm, t), derived_subalgebra(d)) << cm.name() << " t=" << t;
    }
}

TEST(CatalogSweep, CenterAdjointInsideCenterBlock) {
  for (const auto& g : catalog_algebras()) {
    auto z = center_adjoint_deformed(g, 1);
    std::vector<Vector> block;
    for (const auto& v : center(g).basis_vectors()) {
      Vector w(z.ambient_dim());
      std::copy(v.begin(), v.end(), w.begin());
      block.push_back(w);
    }
    EXPECT_TRUE(Subspace::span(z.ambient_dim(), block).contains(z)) << g.name();
  }
}

TEST(CatalogSweep, Solvability) {
  for (const auto& cm : catalog_crossed_modules())
    for (int t : {0, 1, 2}) EXPECT_NO_THROW(solvability_transfer_check(cm, t)) << cm.name();
}

TEST(CatalogSweep, Contractions) {
  for (const auto& cm : catalog_crossed_modules()) {
    EXPECT_TRUE(deformed(cm, 0).same_structure(semidirect(cm))) << cm.name();
    for (const Rational& s : {Rational(1), Rational(2), Rational(1, 2)})
      EXPECT_TRUE(contraction_check_phi(cm, s)) << cm.name() << " s=" << s;
  }
  for (const auto& g : catalog_algebras())
    for (int s : {1, 2}) EXPECT_TRUE(contraction_check_psi(g, s)) << g.name();
}

TEST(CatalogSweep, CanonicalCocycle) {
  bool trivial_seen = false, nontrivial_seen = false;
  for (const auto& cm : catalog_crossed_modules()) {
    Cochain c = canonical_cocycle(cm);
    EXPECT_TRUE(differential(c).is_zero()) << cm.name();
    const bool cob = is_coboundary(c).has_value();
    EXPECT_EQ(cob, mu_kills_brackets(cm)) << cm.name();
    (cob ? trivial_seen : nontrivial_seen) = true;
  }
  EXPECT_TRUE(trivial_seen);
  EXPECT_TRUE(nontrivial_seen);
}

TEST(CatalogSweep, NonIsomorphicSquares) {
  for (const auto& g : catalog_algebras()) {
    if (is_abelian(g)) continue;
    EXPECT_TRUE(certify_nonisomorphic(direct_sum(g, g), semidirect(identity_crmod(g))).conclusive()) << g.name();
  }
}

TEST(CatalogSweep, FingerprintBasisInvariance) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const auto& g : catalog_algebras()) {
    const Fingerprint base = fingerprint(g);
    for (int k = 0; k < 20; ++k) {
      Matrix p(g.dim(), g.dim());
      do {
        for (std::size_t i = 0; i < g.dim(); ++i)
          for (std::size_t j = 0; j < g.dim(); ++j) p(i, j) = d(rng);
      } while (rank(p) < g.dim());
      ASSERT_EQ(fingerprint(transport(g, p)), base) << g.name();
    }
  }
}
