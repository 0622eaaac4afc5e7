#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liedeform/lie_algebra.hpp"
#include "liedeform/linalg.hpp"
#include "liedeform/products.hpp"

namespace liedeform {

/// A representation of a Lie algebra: rho(e_i) is dim x dim.
struct Module {
  LieAlgebra algebra;
  std::size_t dim = 0;
  std::vector<Matrix> rho;
  std::string name;

  Module(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> rho, std::string name);
  Matrix operator()(const Vector& x) const;
};

Module adjoint_module(const LieAlgebra& l);
Module module_from_action(const Action& a, std::string name);
/// The module M' viewed over the source of psi: rho(x) = rho'(psi x).
Module pulled_back_module(const Module& m, const LinearMap& psi);

/// Increasing k-tuples of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k);

/// Alternating k-linear map on algebra with values in the module. Coefficients
/// are stored per increasing tuple (lexicographic), module coordinates fastest.
class Cochain {
 public:
  Cochain(std::shared_ptr<const Module> module, std::size_t degree);
  Cochain(std::shared_ptr<const Module> module, std::size_t degree, Vector coeffs);

  std::size_t degree() const { return degree_; }
  const Module& module() const { return *module_; }
  std::shared_ptr<const Module> module_ptr() const { return module_; }
  const LieAlgebra& algebra() const { return module_->algebra; }
  const Vector& coeffs() const { return coeffs_; }
  std::size_t tuple_count() const { return coeffs_.size() / std::max<std::size_t>(module_->dim, 1); }

  /// Value on basis indices in any order (sign of the sorting permutation;
  /// zero on repeated indices).
  Vector value(const std::vector<std::size_t>& indices) const;
  void set_value(const std::vector<std::size_t>& increasing, const Vector& v);
  /// Multilinear evaluation on arbitrary vectors.
  Vector eval(const std::vector<Vector>& args) const;
  bool is_zero() const { return liedeform::is_zero(coeffs_); }

  /// Compose values with a module map f: module -> target.
  Cochain map_values(std::shared_ptr<const Module> target, const Matrix& f) const;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::shared_ptr<const Module> module_;
  std::size_t degree_;
  Vector coeffs_;
};

/// Chevalley-Eilenberg differential; degree k <= 2. Throws DegreeError.
Cochain differential(const Cochain& c);
/// Matrix of d: C^k -> C^{k+1} in the flattened coordinates; k <= 2.
Matrix differential_matrix(const Module& m, std::size_t k);

Subspace cocycle_space(const Module& m, std::size_t k);
Subspace coboundary_space(const Module& m, std::size_t k);
std::size_t cohomology_dim(const Module& m, std::size_t k);

/// (h, g), (h', g') -> (0, mu[h, h']) on semidirect(cm) with adjoint values.
Cochain canonical_cocycle(const CrossedModule& cm);
/// The same cocycle with values in g, viewed as a module of semidirect(cm)
/// through the projection onto g.
Cochain canonical_cocycle_g_valued(const CrossedModule& cm);
/// g as a semidirect(cm)-module via (h, g) . x = [g, x].
Module g_module_of_semidirect(const CrossedModule& cm);

/// A primitive alpha with d alpha = c, or nothing. Throws PreconditionError when
/// c is not closed and DegreeError unless degree is 1 or 2.
std::optional<Cochain> is_coboundary(const Cochain& c);

/// psi^* c on the source of psi, with values in the pulled-back module.
/// Throws PreconditionError when psi is not a homomorphism.
Cochain pullback(const LinearMap& psi, const Cochain& c);

}  // namespace liedeform
