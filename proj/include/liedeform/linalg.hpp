#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liedeform/matrix.hpp"
#include "liedeform/rational.hpp"

namespace liedeform {

struct RrefResult {
  Matrix reduced;                   // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Streaming Gauss-Jordan elimination. Rows are reduced as they arrive, so a
/// linear system with many redundant equations never has to be materialized.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when the row was independent of the rows seen so far.
  bool add(Vector row);

  /// Reduced row-echelon basis of the row space, sorted by pivot.
  RrefResult finish() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Row {
    Vector entries;
    std::vector<std::size_t> support;
  };
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivot_row_;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix; throws SingularityError.
Matrix inverse(const Matrix& m);

/// One particular solution of m x = b, or nothing when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// A linear subspace of Q^n stored as the nonzero rows of its RREF basis.
/// Equal subspaces have bit-identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace column_space(const Matrix& m);
  static Subspace full(std::size_t n);
  static Subspace from_rref(const RrefResult& r);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v lies in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the stored basis, if v lies in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Indices of the standard basis vectors completing this basis (non-pivot columns,
  /// in increasing order).
  std::vector<std::size_t> standard_complement() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space of m, canonicalized; ambient dimension is m.cols().
Subspace kernel(const Matrix& m);
/// Null space of a system given row by row.
Subspace kernel(const RowReducer& system);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Vector& v);

}  // namespace liedeform
