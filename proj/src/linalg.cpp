#include "liedeform/linalg.hpp"

#include "liedeform/errors.hpp"

namespace liedeform {

bool RowReducer::add(Vector row) {
  if (row.size() != cols_) throw DimensionError("row length does not match system width");
  std::size_t lead = npos;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(row[c]) == 0) continue;
    const std::size_t p = pivot_row_[c];
    if (p == npos) {
      if (lead == npos) lead = c;
      continue;
    }
    // Pivot rows have support only at or after their pivot, so columns already
    // scanned (including a recorded lead) are never modified again.
    const Rational f = row[c];
    for (std::size_t j : rows_[p].support) row[j] -= f * rows_[p].entries[j];
  }
  if (lead == npos) return false;
  const Rational inv = 1 / row[lead];
  Row stored;
  for (std::size_t c = lead; c < cols_; ++c)
    if (sgn(row[c]) != 0) {
      row[c] *= inv;
      stored.support.push_back(c);
    }
  stored.entries = std::move(row);
  pivot_row_[lead] = rows_.size();
  rows_.push_back(std::move(stored));
  return true;
}

RrefResult RowReducer::finish() const {
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] != npos) pivots.push_back(c);
  std::vector<Vector> rows;
  rows.reserve(pivots.size());
  for (std::size_t c : pivots) rows.push_back(rows_[pivot_row_[c]].entries);
  // Back substitution, last pivot first.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    std::vector<std::size_t> support;
    for (std::size_t j = pc; j < cols_; ++j)
      if (sgn(rows[k][j]) != 0) support.push_back(j);
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(rows[i][pc]) == 0) continue;
      const Rational f = rows[i][pc];
      for (std::size_t j : support) rows[i][j] -= f * rows[k][j];
    }
  }
  RrefResult out;
  out.pivots = std::move(pivots);
  out.reduced = Matrix(out.pivots.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.reduced(r, c) = rows[r][c];
  return out;
}

RrefResult rref(const Matrix& m) {
  RowReducer reducer(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) reducer.add(m.row(r));
  RrefResult compact = reducer.finish();
  RrefResult out;
  out.pivots = std::move(compact.pivots);
  out.reduced = Matrix(m.rows(), m.cols());
  out.reduced.set_block(0, 0, compact.reduced);
  return out;
}

std::size_t rank(const Matrix& m) {
  RowReducer reducer(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) reducer.add(m.row(r));
  return reducer.rank();
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  RrefResult r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) throw SingularityError("matrix is singular");
  return r.reduced.block(0, n, n, n);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match rows");
  Matrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[r];
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced(k, m.cols());
  return x;
}

// --- Subspace --------------------------------------------------------------

Subspace Subspace::from_rref(const RrefResult& r) {
  Subspace s(r.reduced.cols());
  s.pivots_ = r.pivots;
  s.basis_ = r.reduced.block(0, 0, r.rank(), r.reduced.cols());
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  RowReducer reducer(ambient_dim);
  for (const auto& v : vectors) reducer.add(v);
  return from_rref(reducer.finish());
}

Subspace Subspace::row_space(const Matrix& m) { return from_rref(rref(m)); }

Subspace Subspace::column_space(const Matrix& m) { return from_rref(rref(m.transpose())); }

Subspace Subspace::full(std::size_t n) { return row_space(Matrix::identity(n)); }

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  Vector r = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational f = r[pivots_[k]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = pivots_[k]; c < ambient_; ++c)
      if (sgn(basis_(k, c)) != 0) r[c] -= f * basis_(k, c);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return liedeform::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(dim());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

std::vector<std::size_t> Subspace::standard_complement() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

Subspace kernel(const RowReducer& system) {
  const RrefResult r = system.finish();
  const std::size_t n = system.cols();
  Subspace pivot_span = Subspace::from_rref(r);
  std::vector<Vector> basis;
  for (std::size_t f : pivot_span.standard_complement()) {
    Vector x(n);
    x[f] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = -r.reduced(k, f);
    basis.push_back(std::move(x));
  }
  return Subspace::span(n, basis);
}

Subspace kernel(const Matrix& m) {
  RowReducer reducer(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) reducer.add(m.row(r));
  return kernel(reducer);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch in sum");
  auto vs = a.basis_vectors();
  auto wb = b.basis_vectors();
  vs.insert(vs.end(), wb.begin(), wb.end());
  return Subspace::span(a.ambient_dim(), vs);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("ambient dimension mismatch in intersection");
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  // Solve sum_i x_i a_i - sum_j y_j b_j = 0; the a-part of each solution spans the intersection.
  Matrix m(n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()(i, r);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, da + j) = -b.basis()(j, r);
  Subspace sol = kernel(m);
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < sol.dim(); ++k) {
    Vector v(n);
    for (std::size_t i = 0; i < da; ++i) axpy(v, sol.basis()(k, i), a.basis_vector(i));
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

bool subspace_contains(const Subspace& a, const Vector& v) { return a.contains(v); }

}  // namespace liedeform
