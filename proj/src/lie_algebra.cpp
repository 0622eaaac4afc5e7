#include "liedeform/lie_algebra.hpp"

#include "liedeform/errors.hpp"

namespace liedeform {

LieAlgebra::LieAlgebra() : data_(std::make_shared<const Data>()) {}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n)
    throw DimensionError("bracket argument length does not match dim " + std::to_string(n));
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || sgn(v[j]) == 0) continue;
      const Vector& c = bracket_basis(i, j);
      Rational f = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c[k]) != 0) out[k] += f * c[k];
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector& c = bracket_basis(i, j);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c[k];
  }
  return m;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionError("ad argument length mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * ad(i);
  return m;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*data_);
  d->name = std::move(name);
  return LieAlgebra(std::move(d));
}

LieAlgebra LieAlgebra::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != dim()) throw DimensionError("label count does not match dimension");
  auto d = std::make_shared<Data>(*data_);
  d->labels = std::move(labels);
  return LieAlgebra(std::move(d));
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
  return dim() == other.dim() && data_->table == other.data_->table;
}

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

LieAlgebraBuilder::LieAlgebraBuilder(std::string name, std::size_t dim)
    : LieAlgebraBuilder(std::move(name), default_labels(dim)) {}

LieAlgebraBuilder::LieAlgebraBuilder(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)),
      dim_(labels.size()),
      labels_(std::move(labels)),
      upper_(dim_ * dim_, Vector(dim_)) {}

LieAlgebraBuilder& LieAlgebraBuilder::set(std::size_t i, std::size_t j, const Vector& result) {
  if (i >= dim_ || j >= dim_) throw DimensionError("basis index out of range");
  if (result.size() != dim_) throw DimensionError("bracket result length mismatch");
  if (i == j) {
    if (!is_zero(result)) throw DimensionError("[e_i, e_i] must vanish");
    return *this;
  }
  if (i < j)
    upper_[i * dim_ + j] = result;
  else
    upper_[j * dim_ + i] = -result;
  return *this;
}

LieAlgebraBuilder& LieAlgebraBuilder::set(
    std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  Vector v(dim_);
  for (const auto& [k, c] : terms) {
    if (k >= dim_) throw DimensionError("basis index out of range");
    v[k] += c;
  }
  return set(i, j, v);
}

LieAlgebra LieAlgebraBuilder::build() const {
  auto d = std::make_shared<LieAlgebra::Data>();
  d->name = name_;
  d->dim = dim_;
  d->labels = labels_;
  d->table.assign(dim_ * dim_, Vector(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      d->table[i * dim_ + j] = upper_[i * dim_ + j];
      d->table[j * dim_ + i] = -upper_[i * dim_ + j];
    }
  return LieAlgebra(std::move(d));
}

LinearMap::LinearMap(LieAlgebra source, LieAlgebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw DimensionError("linear map matrix must be " + std::to_string(target_.dim()) + "x" +
                         std::to_string(source_.dim()));
}

LinearMap LinearMap::identity(const LieAlgebra& l) {
  return LinearMap(l, l, Matrix::identity(l.dim()));
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.target().dim() != g.source().dim()) throw DimensionError("cannot compose maps");
  return LinearMap(f.source(), g.target(), g.matrix() * f.matrix());
}

}  // namespace liedeform
