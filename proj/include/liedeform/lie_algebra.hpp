#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liedeform/linalg.hpp"
#include "liedeform/matrix.hpp"
#include "liedeform/rational.hpp"

namespace liedeform {

/// A finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k. Antisymmetry is structural: only i < j is
/// supplied, the full table is derived. Cheap to copy (shared immutable data).
class LieAlgebra {
 public:
  /// The 0-dimensional algebra.
  LieAlgebra();

  const std::string& name() const { return data_->name; }
  std::size_t dim() const { return data_->dim; }
  const std::vector<std::string>& labels() const { return data_->labels; }

  /// [e_i, e_j] as a coordinate vector.
  const Vector& bracket_basis(std::size_t i, std::size_t j) const {
    return data_->table[i * data_->dim + j];
  }
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const {
    return bracket_basis(i, j)[k];
  }
  Vector bracket(const Vector& u, const Vector& v) const;

  /// Matrix of ad_{e_i}; column j is [e_i, e_j].
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vector& x) const;

  LieAlgebra renamed(std::string name) const;
  LieAlgebra relabeled(std::vector<std::string> labels) const;

  /// Same dimension and identical structure constants (names and labels ignored).
  bool same_structure(const LieAlgebra& other) const;

 private:
  friend class LieAlgebraBuilder;
  struct Data {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<Vector> table;  // dim*dim, row-major in (i, j)
  };
  explicit LieAlgebra(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

class LieAlgebraBuilder {
 public:
  LieAlgebraBuilder(std::string name, std::size_t dim);
  LieAlgebraBuilder(std::string name, std::vector<std::string> labels);

  std::size_t dim() const { return dim_; }

  /// Sets [e_i, e_j] (and [e_j, e_i] by antisymmetry). i == j with a nonzero
  /// result throws DimensionError.
  LieAlgebraBuilder& set(std::size_t i, std::size_t j, const Vector& result);
  /// Sparse form: pairs (k, c_ij^k).
  LieAlgebraBuilder& set(std::size_t i, std::size_t j,
                         std::initializer_list<std::pair<std::size_t, Rational>> terms);

  LieAlgebra build() const;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Vector> upper_;  // index i*dim+j for i<j
};

/// Default labels e1..en.
std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "e");

/// Linear map between Lie algebras: matrix is target.dim x source.dim.
class LinearMap {
 public:
  LinearMap(LieAlgebra source, LieAlgebra target, Matrix matrix);

  const LieAlgebra& source() const { return source_; }
  const LieAlgebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Vector operator()(const Vector& v) const { return matrix_ * v; }

  static LinearMap identity(const LieAlgebra& l);

 private:
  LieAlgebra source_;
  LieAlgebra target_;
  Matrix matrix_;
};

/// g composed after f.
LinearMap compose(const LinearMap& g, const LinearMap& f);

}  // namespace liedeform
