#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liedeform/lie_algebra.hpp"
#include "liedeform/lie_core.hpp"

namespace liedeform {

/// A Lie algebra acting linearly on a vector space: one matrix per generator.
struct Action {
  LieAlgebra acting;
  std::size_t space_dim = 0;
  std::vector<Matrix> rho;

  Action(LieAlgebra acting, std::size_t space_dim, std::vector<Matrix> rho);
  /// rho(x) for a coordinate vector x of the acting algebra.
  Matrix operator()(const Vector& x) const;
  static Action adjoint(const LieAlgebra& l);
  static Action trivial(const LieAlgebra& l, std::size_t space_dim);
};

struct ActionReport {
  std::vector<IndexPair> bracket_violations;  // rho[g_i,g_j] != [rho g_i, rho g_j]
  std::vector<std::size_t> non_derivations;   // rho(g_i) not a derivation of h
  bool ok() const { return bracket_violations.empty() && non_derivations.empty(); }
  std::vector<std::string> messages() const;
};

/// Throws DimensionError on shape mismatch. Derivation checks need h.
ActionReport check_action(const Action& a, const LieAlgebra* h, bool by_derivations);

class CrossedModule {
 public:
  /// Shapes are checked; axioms are not (see check_crossed_module).
  CrossedModule(std::string name, LieAlgebra h, LieAlgebra g, Matrix mu, std::vector<Matrix> action);

  const std::string& name() const { return name_; }
  const LieAlgebra& h() const { return h_; }
  const LieAlgebra& g() const { return g_; }
  const LinearMap& mu() const { return mu_; }
  const Action& action() const { return action_; }

  CrossedModule renamed(std::string name) const;

 private:
  std::string name_;
  LieAlgebra h_;
  LieAlgebra g_;
  LinearMap mu_;
  Action action_;
};

struct CrossedModuleReport {
  ActionReport action;
  std::vector<IndexPair> axiom_a;  // (g index, h index)
  std::vector<IndexPair> axiom_b;  // (h index, h index)
  std::optional<IndexPair> mu_not_homomorphism;
  bool ok() const {
    return action.ok() && axiom_a.empty() && axiom_b.empty() && !mu_not_homomorphism;
  }
  std::vector<std::string> messages() const;
};

CrossedModuleReport check_crossed_module(const CrossedModule& cm);
/// Throws CrossedModuleError listing the violations.
void require_crossed_module(const CrossedModule& cm);

CrossedModule identity_crmod(const LieAlgebra& g);
/// ad: g -> Der(g), with Der(g) acting through its matrix realization.
CrossedModule adjoint_crmod(const LieAlgebra& g);
/// Inclusion of the ideal i of g. Throws IdealError.
CrossedModule inclusion_crmod(const LieAlgebra& g, const Subspace& i);
/// Quotient map h -> h/I; I must be a central ideal. Throws IdealError.
CrossedModule quotient_crmod(const LieAlgebra& h, const Subspace& i);
/// 0: V -> g for a g-module V (V carried as an abelian algebra).
CrossedModule zero_crmod(const Action& a);

/// h x| g with h carried as abelian. Throws ActionError.
LieAlgebra semidirect(const CrossedModule& cm);
LieAlgebra semidirect(const Action& a);
/// Bracket (g.h' - g'.h, [g, g'] + t mu[h, h']). Throws CrossedModuleError.
LieAlgebra deformed(const CrossedModule& cm, const Rational& t);

/// (m, g) -> (g - s m, g + s m) from deformed(identity_crmod(g), s^2) to g + g.
/// Throws SingularityError for s = 0.
LinearMap psi_map(const LieAlgebra& g, const Rational& s);
bool contraction_check_psi(const LieAlgebra& g, const Rational& s);
/// diag(s I, I) transports deformed(cm, 1) onto deformed(cm, s^2).
bool contraction_check_phi(const CrossedModule& cm, const Rational& s);

struct CrmodMorphism {
  Matrix phi;  // h -> h'
  Matrix psi;  // g -> g'
};

struct MorphismReport {
  bool square_commutes = true;
  std::vector<IndexPair> equivariance;  // (g index, h index)
  bool phi_homomorphism = true;
  bool psi_homomorphism = true;
  bool ok() const { return square_commutes && equivariance.empty() && phi_homomorphism && psi_homomorphism; }
  std::vector<std::string> messages() const;
};

MorphismReport check_crmod_morphism(const CrmodMorphism& m, const CrossedModule& cm,
                                    const CrossedModule& target);
/// diag(phi, psi) is a homomorphism deformed(cm, 1) -> deformed(target, 1).
bool pushforward_bracket_check(const CrmodMorphism& m, const CrossedModule& cm,
                               const CrossedModule& target);

/// Isomorphism deformed(cm, s^2) -> h + g (direct sum). Applies when mu is
/// injective and g = im(mu) + K with K = ker(rho) meeting the centralizer of
/// im(mu); for invertible mu, K = 0. Returns nothing when not applicable or
/// when the candidate fails the homomorphism check. Throws SingularityError for s = 0.
std::optional<LinearMap> iso_deformed_to_direct(const CrossedModule& cm, const Rational& s);

struct SurjectiveModel {
  LieAlgebra model;  // h + h/ker(mu) with the induced bracket
  LinearMap iso;     // model -> deformed(cm, t)
  bool verified = false;
};
/// Throws ApplicabilityError when mu is not surjective or ker(mu) is not central.
SurjectiveModel surjective_model(const CrossedModule& cm, const Rational& t = 1);

}  // namespace liedeform
