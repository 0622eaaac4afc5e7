#include <gtest/gtest.h>

#include <random>

#include "liedeform/algebras.hpp"
#include "liedeform/cohomology.hpp"
#include "liedeform/errors.hpp"
#include "liedeform/lie_core.hpp"

using namespace liedeform;
namespace alg = liedeform::algebras;

namespace {

std::vector<LieAlgebra> sample_algebras() {
  return {alg::r2(), alg::r31(), alg::heisenberg(1), alg::free2step3(), alg::ex4dim(),
          alg::exndim(5), alg::sl2(), alg::abelian(2)};
}

std::shared_ptr<const Module> adj(const LieAlgebra& l) { return std::make_shared<const Module>(adjoint_module(l)); }

// Seeded generator of small-integer cochains; about a third of the entries are zero.
Cochain random_cochain(std::mt19937_64& rng, std::shared_ptr<const Module> m, std::size_t k) {
  Cochain c(m, k);
  std::uniform_int_distribution<int> d(-3, 3);
  Vector v = c.coeffs();
  for (auto& x : v) x = d(rng) % 3 == 0 ? 0 : d(rng);
  return Cochain(m, k, v);
}

Subspace first_projection_span(std::size_t n) {
  std::vector<Vector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(2 * n, i));
  return Subspace::span(2 * n, b);
}

}  // namespace

TEST(AdjointModule, MatchesBracket) {
  for (const auto& l : sample_algebras()) {
    Module m = adjoint_module(l);
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j)
        EXPECT_EQ(m.rho[i] * unit_vector(l.dim(), j), l.bracket_basis(i, j));
    Action a(l, l.dim(), m.rho);
    EXPECT_TRUE(check_action(a, &l, true).ok());
  }
  for (const auto& r : adjoint_module(alg::abelian(3)).rho) EXPECT_TRUE(r.is_zero());
  // rho(x) y = [x, y] = x in r2
  EXPECT_EQ(adjoint_module(alg::r2()).rho[0], (Matrix{{0, 1}, {0, 0}}));
}

TEST(Tuples, LexicographicOrder) {
  auto t = increasing_tuples(4, 2);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(t[2], (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(t[5], (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(increasing_tuples(3, 0).size(), 1u);
}

TEST(Cochain, SignedEvaluation) {
  auto m = adj(alg::r31());
  Cochain c(m, 2);
  Vector v{Rational(1), Rational(2), Rational(3)};
  c.set_value({0, 2}, v);
  EXPECT_EQ(c.value({0, 2}), v);
  EXPECT_EQ(c.value({2, 0}), -v);
  EXPECT_TRUE(is_zero(c.value({1, 1})));
  Cochain c3(m, 3);
  c3.set_value({0, 1, 2}, v);
  EXPECT_EQ(c3.value({2, 0, 1}), v);
  EXPECT_EQ(c3.value({1, 0, 2}), -v);
  EXPECT_THROW(c.set_value({2, 0}, v), DimensionError);
}

TEST(Differential, DegreeZero) {
  const auto h3 = alg::heisenberg(1);
  auto m = adj(h3);
  Cochain v(m, 0, Vector{Rational(1), Rational(2), Rational(5)});
  Cochain d = differential(v);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(d.value({i}), h3.bracket(unit_vector(3, i), v.coeffs()));
  Cochain z(m, 0, unit_vector(3, 2));
  EXPECT_TRUE(differential(z).is_zero());
}

TEST(Differential, DegreeOneFormula) {
  // d alpha(x, y) = [x, alpha y] - [y, alpha x] - alpha([x, y]) for alpha = identity on r2
  const auto r2 = alg::r2();
  auto m = adj(r2);
  Cochain id(m, 1);
  id.set_value({0}, unit_vector(2, 0));
  id.set_value({1}, unit_vector(2, 1));
  // [x, y] - [y, x] - [x, y] = [x, y] = x
  EXPECT_EQ(differential(id).value({0, 1}), unit_vector(2, 0));
}

TEST(Differential, SquaresToZero) {
  std::mt19937_64 rng(2718281828);
  for (const auto& l : sample_algebras()) {
    auto m = adj(l);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t k = trial % 2;
      Cochain c = random_cochain(rng, m, k);
      EXPECT_TRUE(differential(differential(c)).is_zero()) << l.name() << " k=" << k;
    }
  }
}

TEST(Differential, DegreeCap) {
  Cochain c(adj(alg::r2()), 3);
  EXPECT_THROW(differential(c), DegreeError);
  EXPECT_THROW(differential_matrix(adjoint_module(alg::r2()), 3), DegreeError);
}

TEST(Cohomology, SpacesAndZeroth) {
  for (const auto& l : sample_algebras()) {
    Module m = adjoint_module(l);
    for (std::size_t k = 1; k <= 2; ++k)
      EXPECT_TRUE(cocycle_space(m, k).contains(coboundary_space(m, k))) << l.name();
    EXPECT_EQ(cohomology_dim(m, 0), center(l).dim());
    EXPECT_EQ(cohomology_dim(m, 1), derivations(l).dim() - inner_derivations(l).dim()) << l.name();
  }
}

TEST(Cohomology, DegreeOneCocyclesAreDerivations) {
  // flattened derivations (row-major) and 1-cocycles (tuple-major) agree up to transposition
  for (const auto& l : sample_algebras()) {
    const std::size_t n = l.dim();
    Subspace z1 = cocycle_space(adjoint_module(l), 1);
    std::vector<Vector> transposed;
    for (const auto& d : derivations(l).basis) transposed.push_back(flatten(d.transpose()));
    EXPECT_EQ(z1, Subspace::span(n * n, transposed)) << l.name();
  }
}

TEST(Cohomology, SemidirectZeroth) {
  for (const auto& g : {alg::r2(), alg::heisenberg(1)}) {
    auto s = semidirect(identity_crmod(g));
    EXPECT_EQ(cohomology_dim(adjoint_module(s), 0), 2 * center(g).dim());
  }
}

TEST(Cohomology, SecondNonzeroForSemidirectSquares) {
  for (const auto& g : {alg::r2(), alg::r31(), alg::heisenberg(1), alg::sl2()}) {
    auto s = semidirect(identity_crmod(g));
    EXPECT_GE(cohomology_dim(adjoint_module(s), 2), 1u) << g.name();
  }
}

TEST(CanonicalCocycle, IdentityReducesToBracket) {
  const auto r2 = alg::r2();
  Cochain c = canonical_cocycle(identity_crmod(r2));
  EXPECT_EQ(c.value({0, 1}), (Vector{Rational(0), Rational(0), Rational(1), Rational(0)}));
  for (const auto& t : increasing_tuples(4, 2))
    if (t != std::vector<std::size_t>{0, 1}) EXPECT_TRUE(is_zero(c.value(t)));
  EXPECT_TRUE(differential(c).is_zero());
  EXPECT_FALSE(is_coboundary(c));
}

TEST(CanonicalCocycle, TrivialCases) {
  EXPECT_TRUE(canonical_cocycle(zero_crmod(Action::adjoint(alg::r2()))).is_zero());
  Cochain h = canonical_cocycle(adjoint_crmod(alg::heisenberg(1)));
  EXPECT_TRUE(h.is_zero());
  auto p = is_coboundary(h);
  ASSERT_TRUE(p);
  EXPECT_TRUE(p->is_zero());
}

TEST(CanonicalCocycle, AlternativeCocycleIsCoboundary) {
  // c~((m,g),(m',g')) = ([m,m'], 0) on r2 x| r2
  const auto r2 = alg::r2();
  auto s = semidirect(identity_crmod(r2));
  auto m = adj(s);
  Cochain ct(m, 2);
  ct.set_value({0, 1}, unit_vector(4, 0));
  EXPECT_TRUE(differential(ct).is_zero());
  auto p = is_coboundary(ct);
  ASSERT_TRUE(p);
  EXPECT_EQ(differential(*p), ct);
  // half of (m, g) -> (0, m) is a primitive
  Cochain half(m, 1);
  half.set_value({0}, Vector{Rational(0), Rational(0), Rational(1, 2), Rational(0)});
  half.set_value({1}, Vector{Rational(0), Rational(0), Rational(0), Rational(1, 2)});
  EXPECT_EQ(differential(half), ct);
}

TEST(IsCoboundary, Preconditions) {
  auto m = adj(semidirect(identity_crmod(alg::r2())));
  Cochain open(m, 2);
  open.set_value({0, 3}, unit_vector(4, 1));
  ASSERT_FALSE(differential(open).is_zero());
  EXPECT_THROW(is_coboundary(open), PreconditionError);
  EXPECT_THROW(is_coboundary(Cochain(m, 0)), DegreeError);
}

TEST(Pullback, IdentityAndDifferential) {
  std::mt19937_64 rng(11);
  const auto r31 = alg::r31();
  auto m = adj(r31);
  Cochain c = random_cochain(rng, m, 1);
  EXPECT_EQ(pullback(LinearMap::identity(r31), c).coeffs(), c.coeffs());
  // the projection free2step3 -> free2step3 / <x12, x13> is a homomorphism
  auto q = quotient(alg::free2step3(), Subspace::span(6, {unit_vector(6, 3), unit_vector(6, 4)}));
  auto qm = adj(q.algebra);
  for (std::size_t k = 0; k < 2; ++k) {
    Cochain cq = random_cochain(rng, qm, k);
    EXPECT_EQ(differential(pullback(q.projection, cq)).coeffs(), pullback(q.projection, differential(cq)).coeffs());
  }
  const auto r2 = alg::r2();
  EXPECT_THROW(pullback(LinearMap(r2, r2, Matrix{{0, 1}, {1, 0}}), Cochain(adj(r2), 1)), PreconditionError);
}

TEST(Pullback, Universality) {
  const auto r2 = alg::r2();
  auto cm = inclusion_crmod(direct_sum(r2, r2), first_projection_span(2));
  auto target = identity_crmod(cm.g());
  const std::size_t ng = cm.g().dim();
  LinearMap f(semidirect(cm), semidirect(target), block_diagonal(cm.mu().matrix(), Matrix::identity(ng)));
  Cochain pulled = pullback(f, canonical_cocycle_g_valued(target));
  Cochain mine = canonical_cocycle_g_valued(cm);
  EXPECT_EQ(pulled.coeffs(), mine.coeffs());
  EXPECT_EQ(pulled.module().rho, mine.module().rho);
  EXPECT_TRUE(differential(mine).is_zero());
}

TEST(Pullback, Functoriality) {
  // (phi, psi) = (mu, id): quotient crossed module into identity of the quotient
  auto cm = quotient_crmod(alg::free2step3(), Subspace::span(6, {unit_vector(6, 3), unit_vector(6, 4)}));
  auto target = identity_crmod(cm.g());
  const Matrix phi = cm.mu().matrix();
  const Matrix psi = Matrix::identity(cm.g().dim());
  LinearMap f(semidirect(cm), semidirect(target), block_diagonal(phi, psi));
  Cochain pulled = pullback(f, canonical_cocycle_g_valued(target));
  Cochain pushed = canonical_cocycle_g_valued(cm).map_values(pulled.module_ptr(), psi);
  EXPECT_EQ(pulled.coeffs(), pushed.coeffs());
}
