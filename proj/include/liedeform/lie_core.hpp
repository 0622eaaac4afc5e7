#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "liedeform/lie_algebra.hpp"
#include "liedeform/linalg.hpp"

namespace liedeform {

using Triple = std::array<std::size_t, 3>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Basis triples i < j < k whose Jacobiator is nonzero.
std::vector<Triple> jacobi_check(const LieAlgebra& l);
inline bool is_lie_algebra(const LieAlgebra& l) { return jacobi_check(l).empty(); }

Subspace center(const LieAlgebra& l);
/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b);
Subspace derived_subalgebra(const LieAlgebra& l);

/// L, L', L'', ... up to the first term that is 0 or equals its predecessor
/// (the repeated term is not listed twice).
std::vector<Subspace> derived_series(const LieAlgebra& l);
/// L, [L,L], [L,[L,L]], ... with the same stopping rule.
std::vector<Subspace> lower_central_series(const LieAlgebra& l);
bool is_solvable(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);
bool is_abelian(const LieAlgebra& l);

bool is_ideal(const LieAlgebra& l, const Subspace& i);
bool is_subalgebra(const LieAlgebra& l, const Subspace& s);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct Quotient {
  LieAlgebra algebra;
  LinearMap projection;
  /// Indices of the standard basis vectors of L representing the quotient basis.
  std::vector<std::size_t> representatives;
};
/// L / I on the greedy standard complement of I. Throws IdealError.
Quotient quotient(const LieAlgebra& l, const Subspace& ideal);

/// Subalgebra on the canonical basis of s. Throws IdealError when s is not closed.
LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s);

struct HomomorphismCheck {
  bool ok = true;
  std::optional<IndexPair> first_violation;
  explicit operator bool() const { return ok; }
};
/// f[e_i, e_j] == [f e_i, f e_j] for all basis pairs.
HomomorphismCheck is_homomorphism(const LinearMap& f);

/// Structure constants in the basis P e_1, ..., P e_n (P invertible).
LieAlgebra transport(const LieAlgebra& l, const Matrix& p);

/// True iff D is a derivation of l.
bool is_derivation(const LieAlgebra& l, const Matrix& d);

struct DerivationSpace {
  LieAlgebra algebra;
  std::vector<Matrix> basis;
  Subspace flat;  // flattened matrices, ambient n^2
  std::size_t dim() const { return basis.size(); }
};
DerivationSpace derivations(const LieAlgebra& l);

struct DerivationAlgebra {
  LieAlgebra algebra;               // abstract Der(L) on generators D1..Dm
  std::vector<Matrix> realization;  // matrix of each generator acting on L
};
DerivationAlgebra derivations_as_algebra(const LieAlgebra& l);
DerivationAlgebra derivations_as_algebra(const DerivationSpace& der);

/// span{ad e_i}, flattened.
Subspace inner_derivations(const LieAlgebra& l);
/// {phi : phi[x, y] = [x, phi y] for all x, y}, flattened.
Subspace centroid(const LieAlgebra& l);
/// Maps vanishing on [L, L] with image in Z(L), flattened.
Subspace hom_ab_center(const LieAlgebra& l);

/// Rank of the Killing form tr(ad x ad y).
std::size_t killing_rank(const LieAlgebra& l);

/// Matrices of a flattened subspace basis.
std::vector<Matrix> as_matrices(const Subspace& flat, std::size_t rows, std::size_t cols);

}  // namespace liedeform
