#include "liedeform/cohomology.hpp"

#include <algorithm>

#include "liedeform/errors.hpp"
#include "liedeform/lie_core.hpp"

namespace liedeform {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographic rank of an increasing tuple among all increasing k-tuples of {0..n-1}.
std::size_t tuple_rank(const std::vector<std::size_t>& t, std::size_t n) {
  std::size_t r = 0, prev = 0;
  const std::size_t k = t.size();
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t v = (p == 0 ? 0 : prev + 1); v < t[p]; ++v) r += binomial(n - v - 1, k - p - 1);
    prev = t[p];
  }
  return r;
}

void check_degree(std::size_t k) {
  if (k > 2) throw DegreeError("differential supports cochain degrees 0, 1, 2 (got " + std::to_string(k) + ")");
}

}  // namespace

Module::Module(LieAlgebra algebra_, std::size_t dim_, std::vector<Matrix> rho_, std::string name_)
    : algebra(std::move(algebra_)), dim(dim_), rho(std::move(rho_)), name(std::move(name_)) {
  if (rho.size() != algebra.dim()) throw DimensionError("module needs one matrix per generator");
  for (const auto& m : rho)
    if (m.rows() != dim || m.cols() != dim) throw DimensionError("module matrix shape mismatch");
}

Matrix Module::operator()(const Vector& x) const {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * rho[i];
  return m;
}

Module adjoint_module(const LieAlgebra& l) { return Module(l, l.dim(), Action::adjoint(l).rho, "adjoint"); }

Module module_from_action(const Action& a, std::string name) {
  return Module(a.acting, a.space_dim, a.rho, std::move(name));
}

Module pulled_back_module(const Module& m, const LinearMap& psi) {
  if (psi.target().dim() != m.algebra.dim()) throw DimensionError("pullback target mismatch");
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < psi.source().dim(); ++i) rho.push_back(m(psi.matrix().column(i)));
  return Module(psi.source(), m.dim, rho, m.name + "^psi");
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  for (;;) {
    out.push_back(t);
    std::size_t p = k;
    while (p > 0 && t[p - 1] == n - k + p - 1) --p;
    if (p == 0) break;
    ++t[p - 1];
    for (std::size_t q = p; q < k; ++q) t[q] = t[q - 1] + 1;
  }
  return out;
}

Cochain::Cochain(std::shared_ptr<const Module> module, std::size_t degree)
    : module_(std::move(module)), degree_(degree) {
  if (degree_ > 3) throw DegreeError("cochain degree must be at most 3");
  coeffs_.assign(binomial(module_->algebra.dim(), degree_) * module_->dim, Rational(0));
}

Cochain::Cochain(std::shared_ptr<const Module> module, std::size_t degree, Vector coeffs)
    : Cochain(std::move(module), degree) {
  if (coeffs.size() != coeffs_.size()) throw DimensionError("cochain coefficient length mismatch");
  coeffs_ = std::move(coeffs);
}

Vector Cochain::value(const std::vector<std::size_t>& indices) const {
  const std::size_t m = module_->dim;
  if (indices.size() != degree_) throw DimensionError("cochain evaluated on wrong number of arguments");
  std::vector<std::size_t> t = indices;
  int sign = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j + 1 < t.size() - i; ++j)
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return Vector(m);
  const std::size_t base = tuple_rank(t, module_->algebra.dim()) * m;
  Vector out(coeffs_.begin() + base, coeffs_.begin() + base + m);
  if (sign < 0) out = -out;
  return out;
}

void Cochain::set_value(const std::vector<std::size_t>& t, const Vector& v) {
  if (v.size() != module_->dim || t.size() != degree_) throw DimensionError("set_value shape mismatch");
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] >= t[i + 1]) throw DimensionError("set_value needs a strictly increasing tuple");
  const std::size_t base = tuple_rank(t, module_->algebra.dim()) * module_->dim;
  std::copy(v.begin(), v.end(), coeffs_.begin() + base);
}

Vector Cochain::eval(const std::vector<Vector>& args) const {
  const std::size_t n = module_->algebra.dim();
  if (args.size() != degree_) throw DimensionError("cochain evaluated on wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != n) throw DimensionError("cochain argument length mismatch");
  Vector out(module_->dim);
  std::vector<std::size_t> idx(degree_);
  // expand multilinearly over all index tuples with nonzero coefficient product
  auto rec = [&](auto&& self, std::size_t p, const Rational& coeff) -> void {
    if (p == degree_) {
      axpy(out, coeff, value(idx));
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(args[p][i]) == 0) continue;
      idx[p] = i;
      self(self, p + 1, coeff * args[p][i]);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

Cochain Cochain::map_values(std::shared_ptr<const Module> target, const Matrix& f) const {
  if (target->algebra.dim() != module_->algebra.dim() || f.rows() != target->dim || f.cols() != module_->dim)
    throw DimensionError("map_values shape mismatch");
  Cochain out(target, degree_);
  for (const auto& t : increasing_tuples(module_->algebra.dim(), degree_)) out.set_value(t, f * value(t));
  return out;
}

Cochain differential(const Cochain& c) {
  check_degree(c.degree());
  const Module& m = c.module();
  const LieAlgebra& l = m.algebra;
  const std::size_t n = l.dim();
  Cochain out(c.module_ptr(), c.degree() + 1);
  for (const auto& t : increasing_tuples(n, c.degree() + 1)) {
    Vector v(m.dim);
    if (c.degree() == 0) {
      v = m.rho[t[0]] * c.value({});
    } else if (c.degree() == 1) {
      const std::size_t x = t[0], y = t[1];
      v = m.rho[x] * c.value({y}) - m.rho[y] * c.value({x}) - c.eval({l.bracket_basis(x, y)});
    } else {
      const std::size_t x = t[0], y = t[1], z = t[2];
      const Vector ex = unit_vector(n, x), ey = unit_vector(n, y), ez = unit_vector(n, z);
      v = m.rho[x] * c.value({y, z}) - m.rho[y] * c.value({x, z}) + m.rho[z] * c.value({x, y});
      v = v - c.eval({l.bracket_basis(x, y), ez}) + c.eval({l.bracket_basis(x, z), ey}) -
          c.eval({l.bracket_basis(y, z), ex});
    }
    out.set_value(t, v);
  }
  return out;
}

Matrix differential_matrix(const Module& m, std::size_t k) {
  check_degree(k);
  auto mod = std::make_shared<const Module>(m);
  const std::size_t cols = binomial(m.algebra.dim(), k) * m.dim;
  const std::size_t rows = binomial(m.algebra.dim(), k + 1) * m.dim;
  Matrix d(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Cochain basis(mod, k, unit_vector(cols, j));
    const Vector img = differential(basis).coeffs();
    for (std::size_t r = 0; r < rows; ++r) d(r, j) = img[r];
  }
  return d;
}

Subspace cocycle_space(const Module& m, std::size_t k) { return kernel(differential_matrix(m, k)); }

Subspace coboundary_space(const Module& m, std::size_t k) {
  check_degree(k);
  if (k == 0) return Subspace(m.dim);
  return Subspace::column_space(differential_matrix(m, k - 1));
}

std::size_t cohomology_dim(const Module& m, std::size_t k) {
  return cocycle_space(m, k).dim() - coboundary_space(m, k).dim();
}

Cochain canonical_cocycle(const CrossedModule& cm) {
  require_crossed_module(cm);
  const LieAlgebra s = semidirect(cm);
  auto mod = std::make_shared<const Module>(adjoint_module(s));
  const std::size_t nh = cm.h().dim(), ng = cm.g().dim();
  Cochain c(mod, 2);
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = i + 1; j < nh; ++j) {
      const Vector img = cm.mu()(cm.h().bracket_basis(i, j));
      if (liedeform::is_zero(img)) continue;
      Vector v(nh + ng);
      for (std::size_t k = 0; k < ng; ++k) v[nh + k] = img[k];
      c.set_value({i, j}, v);
    }
  return c;
}

Module g_module_of_semidirect(const CrossedModule& cm) {
  const LieAlgebra s = semidirect(cm);
  const std::size_t nh = cm.h().dim(), ng = cm.g().dim();
  Matrix proj(ng, nh + ng);
  proj.set_block(0, nh, Matrix::identity(ng));
  Module m = pulled_back_module(adjoint_module(cm.g()), LinearMap(s, cm.g(), proj));
  m.name = "g";
  return m;
}

Cochain canonical_cocycle_g_valued(const CrossedModule& cm) {
  const Cochain c = canonical_cocycle(cm);
  const std::size_t nh = cm.h().dim(), ng = cm.g().dim();
  Matrix proj(ng, nh + ng);
  proj.set_block(0, nh, Matrix::identity(ng));
  return c.map_values(std::make_shared<const Module>(g_module_of_semidirect(cm)), proj);
}

std::optional<Cochain> is_coboundary(const Cochain& c) {
  if (c.degree() == 0 || c.degree() > 2)
    throw DegreeError("is_coboundary supports degrees 1 and 2");
  if (!differential(c).is_zero()) throw PreconditionError("is_coboundary: cochain is not closed");
  if (c.is_zero()) return Cochain(c.module_ptr(), c.degree() - 1);
  const Matrix d = differential_matrix(c.module(), c.degree() - 1);
  auto x = solve(d, c.coeffs());
  if (!x) return std::nullopt;
  return Cochain(c.module_ptr(), c.degree() - 1, *x);
}

Cochain pullback(const LinearMap& psi, const Cochain& c) {
  if (psi.target().dim() != c.algebra().dim()) throw DimensionError("pullback: map target mismatch");
  if (!is_homomorphism(psi).ok) throw PreconditionError("pullback: map is not a homomorphism");
  auto mod = std::make_shared<const Module>(pulled_back_module(c.module(), psi));
  Cochain out(mod, c.degree());
  for (const auto& t : increasing_tuples(psi.source().dim(), c.degree())) {
    std::vector<Vector> args;
    for (auto i : t) args.push_back(psi.matrix().column(i));
    out.set_value(t, c.eval(args));
  }
  return out;
}

}  // namespace liedeform
