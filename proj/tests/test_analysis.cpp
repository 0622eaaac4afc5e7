#include <gtest/gtest.h>

#include <random>

#include "liedeform/algebras.hpp"
#include "liedeform/analysis.hpp"
#include "liedeform/errors.hpp"
#include "liedeform/lie_core.hpp"
#include "liedeform/products.hpp"

using namespace liedeform;
namespace alg = liedeform::algebras;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

Subspace span(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> v;
  for (auto i : idx) v.push_back(e(n, i));
  return Subspace::span(n, v);
}

const std::vector<LieAlgebra>& small_algebras() {
  static const std::vector<LieAlgebra> all = {alg::r2(), alg::r31(), alg::heisenberg(1), alg::free2step3(),
                                              alg::ex4dim(), alg::exndim(5), alg::sl2(), alg::abelian(3)};
  return all;
}

std::vector<CrossedModule> crossed_modules() {
  const auto r2 = alg::r2();
  return {identity_crmod(r2),
          identity_crmod(alg::r31()),
          identity_crmod(alg::sl2()),
          identity_crmod(alg::abelian(2)),
          adjoint_crmod(r2),
          adjoint_crmod(alg::r31()),
          adjoint_crmod(alg::heisenberg(1)),
          adjoint_crmod(alg::sl2()),
          inclusion_crmod(r2, span(2, {0})),
          inclusion_crmod(alg::ex4dim(), span(4, {0, 2, 3})),
          inclusion_crmod(alg::exndim(5), span(5, {0, 2, 3, 4})),
          quotient_crmod(alg::free2step3(), span(6, {3, 4})),
          zero_crmod(Action::adjoint(r2)),
          zero_crmod(Action::trivial(alg::sl2(), 2))};
}

Matrix random_invertible(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace

TEST(Fingerprint, Examples) {
  auto a = fingerprint(alg::abelian(3));
  EXPECT_EQ(a.dim_center, 3u);
  EXPECT_EQ(a.dim_Der, 9u);
  EXPECT_TRUE(a.is_solvable);
  EXPECT_TRUE(a.is_nilpotent);

  auto r = fingerprint(alg::r31());
  EXPECT_EQ(r.dim, 3u);
  EXPECT_EQ(r.dim_Der, 6u);
  EXPECT_TRUE(r.is_solvable);
  EXPECT_FALSE(r.is_nilpotent);
  EXPECT_EQ(r.derived_series_dims, (std::vector<std::size_t>{3, 2, 0}));

  auto h = fingerprint(alg::heisenberg(1));
  EXPECT_EQ(h.dim_center, 1u);
  EXPECT_EQ(h.dim_Der, 6u);
  EXPECT_EQ(h.dim_H1_adjoint, 4u);

  auto s = fingerprint(alg::sl2());
  EXPECT_EQ(s.dim_H1_adjoint, 0u);
  EXPECT_EQ(s.killing_rank, 3u);
  EXPECT_EQ(s.dim_Centr, 1u);
}

TEST(Fingerprint, FieldOrder) {
  auto f = fingerprint_fields(fingerprint(alg::r2()));
  std::vector<std::string> names;
  for (auto& [k, v] : f) names.push_back(k);
  EXPECT_EQ(names, (std::vector<std::string>{"dim", "dim_center", "dim_derived", "derived_series_dims",
                                             "lcs_dims", "dim_Der", "dim_Centr", "dim_hom_ab_center",
                                             "dim_H1_adjoint", "killing_rank", "is_solvable",
                                             "is_nilpotent"}));
  EXPECT_EQ(to_string(f[3].second), "(2, 1, 0)");
  EXPECT_EQ(to_string(f[10].second), "true");
}

TEST(Fingerprint, InvariantUnderBasisChange) {
  std::mt19937 rng(20240611);
  for (const auto& l : small_algebras()) {
    const Fingerprint base = fingerprint(l);
    for (int k = 0; k < 20; ++k) {
      auto moved = transport(l, random_invertible(l.dim(), rng));
      ASSERT_EQ(fingerprint(moved), base) << l.name() << " change " << k;
    }
  }
}

TEST(Certificate, DirectVersusSemidirectSquare) {
  const auto r2 = alg::r2();
  auto c = certify_nonisomorphic(direct_sum(r2, r2), semidirect(identity_crmod(r2)));
  ASSERT_TRUE(c.conclusive());
  bool found = false;
  for (const auto& d : c.diffs)
    if (d.invariant == "dim_Der") {
      found = true;
      EXPECT_EQ(std::get<std::size_t>(d.a), 4u);
      EXPECT_EQ(std::get<std::size_t>(d.b), 5u);
    }
  EXPECT_TRUE(found);

  for (const auto& g : small_algebras()) {
    if (is_abelian(g)) continue;
    EXPECT_TRUE(certify_nonisomorphic(direct_sum(g, g), semidirect(identity_crmod(g))).conclusive()) << g.name();
  }
}

TEST(Certificate, SameAlgebraInconclusive) {
  auto c = certify_nonisomorphic(alg::r31(), alg::r31());
  EXPECT_FALSE(c.conclusive());
  EXPECT_TRUE(c.diffs.empty());
}

TEST(Certificate, HeisenbergWithDerivations) {
  const auto h3 = alg::heisenberg(1);
  auto cm = adjoint_crmod(h3);
  auto c = certify_nonisomorphic(direct_sum(h3, cm.g()), deformed(cm, 1));
  ASSERT_TRUE(c.conclusive());
  EXPECT_EQ(c.diffs.front().invariant, "dim_center");
  EXPECT_EQ(std::get<std::size_t>(c.diffs.front().a), 1u);
  EXPECT_EQ(std::get<std::size_t>(c.diffs.front().b), 0u);
}

TEST(CenterFormula, MatchesGenericCenter) {
  for (const auto& cm : crossed_modules())
    for (int t : {1, -1, 2})
      EXPECT_EQ(center_deformed_formula(cm, t), center(deformed(cm, t))) << cm.name() << " t=" << t;
  EXPECT_THROW(center_deformed_formula(identity_crmod(alg::r2()), 0), ApplicabilityError);
}

TEST(CenterFormula, FreeTwoStepQuotient) {
  auto cm = quotient_crmod(alg::free2step3(), span(6, {3, 4}));
  ASSERT_EQ(cm.g().dim(), 4u);
  // h/I is represented by x1, x2, x3, x23; mu(x23) is the last g-coordinate.
  EXPECT_EQ(center_deformed_formula(cm, 1), span(10, {3, 4, 5, 9}));
  EXPECT_EQ(center_deformed_formula(cm, 3), span(10, {3, 4, 5, 9}));
  EXPECT_EQ(center(direct_sum(cm.h(), cm.g())), span(10, {3, 4, 5, 6, 9}));
}

TEST(CenterFormula, InclusionIntoNdimExample) {
  auto cm = inclusion_crmod(alg::exndim(5), span(5, {0, 2, 3, 4}));
  for (int t : {1, 2, -1}) EXPECT_TRUE(center_deformed_formula(cm, t).is_zero());
  // h = <e1, e3, e4, e5>, so (e3, 0) is coordinate 1.
  EXPECT_EQ(center(direct_sum(cm.h(), cm.g())), span(9, {1}));
}

TEST(CenterAdjoint, Examples) {
  EXPECT_TRUE(center_adjoint_deformed(alg::heisenberg(1), 1).is_zero());
  EXPECT_TRUE(center_adjoint_deformed(alg::free2step3(), 1).is_zero());
  auto ab = center_adjoint_deformed(alg::abelian(2), 1);
  EXPECT_EQ(ab, Subspace(6));
  EXPECT_EQ(ab, center(deformed(adjoint_crmod(alg::abelian(2)), 1)));
  EXPECT_THROW(center_adjoint_deformed(alg::r2(), 0), ApplicabilityError);
}

TEST(CenterAdjoint, InsideCenterBlock) {
  for (const auto& g : small_algebras()) {
    auto z = center_adjoint_deformed(g, 1);
    auto cm = adjoint_crmod(g);
    const std::size_t n = g.dim(), total = n + cm.g().dim();
    std::vector<Vector> block;
    for (const auto& v : center(g).basis_vectors()) {
      Vector w(total);
      for (std::size_t i = 0; i < n; ++i) w[i] = v[i];
      block.push_back(w);
    }
    EXPECT_TRUE(Subspace::span(total, block).contains(z)) << g.name();
    EXPECT_EQ(z, center(deformed(cm, 1))) << g.name();
  }
}

TEST(CenterCriterion, Examples) {
  // Der(h3) is centerless: [diag(1,1,2), ad x] = ad x for x outside the center.
  const auto h3 = alg::heisenberg(1);
  EXPECT_TRUE(center(derivations_as_algebra(h3).algebra).is_zero());
  EXPECT_FALSE(criterion_center_direct(h3).has_value());
  auto cm = adjoint_crmod(h3);
  EXPECT_TRUE(certify_nonisomorphic(deformed(cm, 1), direct_sum(h3, cm.g())).conclusive());

  EXPECT_FALSE(criterion_center_direct(alg::sl2()).has_value());
  auto one = criterion_center_direct(alg::abelian(1));
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(std::get<std::size_t>(one->diffs.front().a), 0u);
  EXPECT_EQ(std::get<std::size_t>(one->diffs.front().b), 2u);
}

TEST(TwoStep, D0) {
  for (const auto& g : {alg::heisenberg(1), alg::heisenberg(2), alg::free2step3()}) {
    EXPECT_TRUE(two_step_D0_check(g)) << g.name();
    Matrix d0 = two_step_D0(g);
    for (const auto& v : derived_subalgebra(g).basis_vectors()) EXPECT_EQ(d0 * v, Rational(2) * v);
  }
  EXPECT_EQ(two_step_D0(alg::heisenberg(1)), (Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_THROW(two_step_D0_check(alg::r2()), ApplicabilityError);
  EXPECT_THROW(two_step_D0_check(alg::abelian(3)), ApplicabilityError);
}

TEST(TwoStep, Theorem) {
  for (const auto& g : {alg::heisenberg(1), alg::heisenberg(2), alg::free2step3()}) {
    auto r = two_step_noniso_theorem_check(g);
    EXPECT_TRUE(r.certificate.conclusive()) << g.name();
    EXPECT_EQ(r.deformed_center_dim, 0u) << g.name();
    EXPECT_GE(r.direct_center_dim, center(g).dim());
    EXPECT_FALSE(r.deformed_is_nilpotent);
  }
  EXPECT_THROW(two_step_noniso_theorem_check(alg::sl2()), ApplicabilityError);
}

TEST(DerivedFormula, MatchesBruteForce) {
  for (const auto& cm : crossed_modules())
    for (int t : {1, -1, 2})
      EXPECT_EQ(derived_deformed_formula(cm, t), derived_subalgebra(deformed(cm, t))) << cm.name();
  auto z = zero_crmod(Action::trivial(alg::sl2(), 2));
  EXPECT_EQ(derived_deformed_formula(z, 1), span(5, {2, 3, 4}));
}

TEST(DerivedFormula, AdjointR31) {
  auto cm = adjoint_crmod(alg::r31());
  auto d = derived_deformed_formula(cm, 1);
  Vector x5_minus_x9 = e(9, 4) - e(9, 8);
  EXPECT_EQ(d, Subspace::span(9, {e(9, 1), e(9, 2), e(9, 3), x5_minus_x9, e(9, 5), e(9, 6), e(9, 7)}));
  auto def = deformed(cm, 1);
  auto ds = derived_series(def);
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[1].dim(), 7u);
  EXPECT_EQ(bracket_span(def, ds[1], ds[1]).dim(), 7u);

  auto der = derived_series(cm.g());
  ASSERT_EQ(der.size(), 2u);
  EXPECT_EQ(der[1].dim(), 5u);

  auto dir = direct_sum(alg::r31(), cm.g());
  auto dd = derived_series(dir);
  ASSERT_GE(dd.size(), 3u);
  EXPECT_EQ(dd[2].dim(), 5u);
  EXPECT_TRUE(certify_nonisomorphic(def, dir).conclusive());
}

TEST(Solvability, Transfer) {
  for (const auto& cm : crossed_modules())
    for (int t : {0, 1, 2}) EXPECT_NO_THROW(solvability_transfer_check(cm, t)) << cm.name();
  EXPECT_TRUE(solvability_transfer_check(identity_crmod(alg::r31()), 1));
  EXPECT_FALSE(solvability_transfer_check(adjoint_crmod(alg::r31()), 1));
  EXPECT_TRUE(solvability_transfer_check(identity_crmod(alg::abelian(3)), 2));
}

TEST(DerivationBlocks, InclusionIntoR2) {
  auto cm = inclusion_crmod(alg::r2(), span(2, {0}));
  auto def = derivation_block_report(ProductKind::deformed, cm, 1);
  auto semi = derivation_block_report(ProductKind::semidirect, cm);
  auto dir = derivation_block_report(ProductKind::direct, cm);
  EXPECT_EQ(def.dim_Der, 6u);
  EXPECT_EQ(semi.dim_Der, 6u);
  EXPECT_EQ(dir.dim_Der, 4u);
  EXPECT_TRUE(def.ok());
  EXPECT_TRUE(semi.ok());
  EXPECT_TRUE(dir.ok());
  EXPECT_EQ(def.conditions, 6u);
  EXPECT_EQ(semi.conditions, 5u);
}

TEST(DerivationBlocks, FourDimExample) {
  auto cm = inclusion_crmod(alg::ex4dim(), span(4, {0, 2, 3}));
  EXPECT_EQ(derivation_block_report(ProductKind::deformed, cm, 1).dim_Der, 10u);
  EXPECT_EQ(derivation_block_report(ProductKind::semidirect, cm).dim_Der, 11u);
}

TEST(DerivationBlocks, ZeroMapCoincides) {
  auto cm = zero_crmod(Action::adjoint(alg::r2()));
  auto def = derivation_block_report(ProductKind::deformed, cm, 1);
  auto semi = derivation_block_report(ProductKind::semidirect, cm);
  EXPECT_EQ(def.derivations, semi.derivations);
}

TEST(DerivationBlocks, NoViolationsAcrossModules) {
  for (const auto& cm : crossed_modules()) {
    if (cm.h().dim() + cm.g().dim() > 9) continue;
    for (auto k : {ProductKind::direct, ProductKind::semidirect, ProductKind::deformed})
      for (int t : {1, 2}) {
        auto r = derivation_block_report(k, cm, t);
        EXPECT_TRUE(r.ok()) << cm.name() << " " << to_string(k) << " t=" << t;
      }
  }
}

TEST(DerivationBlocks, SimpleSquare) {
  const auto s = alg::sl2();
  auto id = identity_crmod(s);
  auto dir = derivation_block_report(ProductKind::direct, id);
  auto semi = derivation_block_report(ProductKind::semidirect, id);
  EXPECT_EQ(semi.dim_Der, dir.dim_Der + 1);
}
