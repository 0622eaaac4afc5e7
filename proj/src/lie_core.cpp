#include "liedeform/lie_core.hpp"

#include <set>
#include <string>

#include "liedeform/errors.hpp"

namespace liedeform {

namespace {

struct Term {
  std::size_t index;
  Rational coeff;
};

// Nonzero structure constants of [e_i, e_j], indexed i*n+j.
std::vector<std::vector<Term>> sparse_table(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<std::vector<Term>> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& c = l.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c[k]) != 0) t[i * n + j].push_back({k, c[k]});
    }
  return t;
}

Subspace next_series_term(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  return bracket_span(l, a, b);
}

std::vector<Subspace> series(const LieAlgebra& l, bool derived) {
  std::vector<Subspace> out{Subspace::full(l.dim())};
  const Subspace whole = out.front();
  while (!out.back().is_zero()) {
    Subspace next = derived ? next_series_term(l, out.back(), out.back())
                            : next_series_term(l, whole, out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

std::vector<Triple> jacobi_check(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Triple> bad;
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = l.bracket(l.bracket_basis(i, j), basis[k]);
        s = s + l.bracket(l.bracket_basis(j, k), basis[i]);
        s = s + l.bracket(l.bracket_basis(k, i), basis[j]);
        if (!is_zero(s)) bad.push_back({i, j, k});
      }
  return bad;
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  RowReducer sys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix a = l.ad(i);
    for (std::size_t r = 0; r < n; ++r) sys.add(a.row(r));
  }
  return kernel(sys);
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != l.dim() || b.ambient_dim() != l.dim())
    throw DimensionError("bracket_span: subspace ambient dimension mismatch");
  RowReducer r(l.dim());
  const auto av = a.basis_vectors();
  const auto bv = b.basis_vectors();
  for (const auto& x : av)
    for (const auto& y : bv) {
      if (r.rank() == l.dim()) break;
      Vector z = l.bracket(x, y);
      if (!is_zero(z)) r.add(std::move(z));
    }
  return Subspace::from_rref(r.finish());
}

Subspace derived_subalgebra(const LieAlgebra& l) {
  RowReducer r(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (!is_zero(l.bracket_basis(i, j))) r.add(l.bracket_basis(i, j));
  return Subspace::from_rref(r.finish());
}

std::vector<Subspace> derived_series(const LieAlgebra& l) { return series(l, true); }
std::vector<Subspace> lower_central_series(const LieAlgebra& l) { return series(l, false); }
bool is_solvable(const LieAlgebra& l) { return derived_series(l).back().is_zero(); }
bool is_nilpotent(const LieAlgebra& l) { return lower_central_series(l).back().is_zero(); }
bool is_abelian(const LieAlgebra& l) { return derived_subalgebra(l).is_zero(); }

bool is_ideal(const LieAlgebra& l, const Subspace& i) {
  if (i.ambient_dim() != l.dim()) throw DimensionError("ideal ambient dimension mismatch");
  for (const auto& b : i.basis_vectors())
    for (std::size_t k = 0; k < l.dim(); ++k)
      if (!i.contains(l.bracket(unit_vector(l.dim(), k), b))) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw DimensionError("subalgebra ambient dimension mismatch");
  return s.contains(bracket_span(l, s, s));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) {
    labels.clear();
    for (const auto& s : a.labels()) labels.push_back("1:" + s);
    for (const auto& s : b.labels()) labels.push_back("2:" + s);
  }
  LieAlgebraBuilder out(a.name() + "+" + b.name(), labels);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < na; ++k) v[k] = a.constant(i, j, k);
      out.set(i, j, v);
    }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < nb; ++k) v[na + k] = b.constant(i, j, k);
      out.set(na + i, na + j, v);
    }
  return out.build();
}

Quotient quotient(const LieAlgebra& l, const Subspace& ideal) {
  if (!is_ideal(l, ideal)) throw IdealError("quotient: subspace is not an ideal");
  const std::vector<std::size_t> reps = ideal.standard_complement();
  const std::size_t m = reps.size();
  auto restrict = [&](const Vector& v) {
    Vector r = ideal.reduce(v);
    Vector out(m);
    for (std::size_t p = 0; p < m; ++p) out[p] = r[reps[p]];
    return out;
  };
  std::vector<std::string> labels;
  for (std::size_t p : reps) labels.push_back(l.labels()[p]);
  LieAlgebraBuilder b(l.name() + "/I", labels);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) b.set(p, q, restrict(l.bracket_basis(reps[p], reps[q])));
  LieAlgebra qa = b.build();
  Matrix proj(m, l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j) {
    Vector c = restrict(unit_vector(l.dim(), j));
    for (std::size_t p = 0; p < m; ++p) proj(p, j) = c[p];
  }
  return Quotient{qa, LinearMap(l, qa, proj), reps};
}

LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw DimensionError("subalgebra ambient dimension mismatch");
  const auto basis = s.basis_vectors();
  const std::size_t m = basis.size();
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < m; ++p) {
    std::optional<std::size_t> single;
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < l.dim(); ++k)
      if (sgn(basis[p][k]) != 0) {
        ++nonzero;
        single = k;
      }
    if (nonzero == 1 && basis[p][*single] == 1)
      labels.push_back(l.labels()[*single]);
    else
      labels.push_back("s" + std::to_string(p + 1));
  }
  LieAlgebraBuilder b(l.name() + "_sub", labels);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      auto c = s.coordinates(l.bracket(basis[p], basis[q]));
      if (!c) throw IdealError("subalgebra: subspace is not closed under the bracket");
      b.set(p, q, *c);
    }
  return b.build();
}

HomomorphismCheck is_homomorphism(const LinearMap& f) {
  const LieAlgebra& src = f.source();
  const LieAlgebra& dst = f.target();
  const std::size_t n = src.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(f.matrix().column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (f(src.bracket_basis(i, j)) != dst.bracket(images[i], images[j]))
        return HomomorphismCheck{false, IndexPair{i, j}};
  return {};
}

LieAlgebra transport(const LieAlgebra& l, const Matrix& p) {
  if (p.rows() != l.dim() || !p.is_square()) throw DimensionError("transport: P must be n x n");
  const Matrix pinv = inverse(p);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < l.dim(); ++i) cols.push_back(p.column(i));
  LieAlgebraBuilder b(l.name(), l.labels());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) b.set(i, j, pinv * l.bracket(cols[i], cols[j]));
  return b.build();
}

bool is_derivation(const LieAlgebra& l, const Matrix& d) {
  const std::size_t n = l.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionError("derivation must be n x n");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(d.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = d * l.bracket_basis(i, j);
      Vector rhs = l.bracket(images[i], unit_vector(n, j)) + l.bracket(unit_vector(n, i), images[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Matrix> as_matrices(const Subspace& flat, std::size_t rows, std::size_t cols) {
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < flat.dim(); ++r) out.push_back(unflatten(flat.basis_vector(r), rows, cols));
  return out;
}

DerivationSpace derivations(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const auto t = sparse_table(l);
  // Unknown D(a, b) sits at a*n + b. Equation (i<j, k):
  //   sum_a D(k,a) c_ij^a - sum_a D(a,i) c_aj^k - sum_a D(a,j) c_ia^k = 0
  RowReducer sys(n * n);
  Vector row(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sys.rank() == n * n) break;
        bool any = false;
        for (const Term& e : t[i * n + j]) {
          row[k * n + e.index] += e.coeff;
          any = true;
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (const Term& e : t[a * n + j])
            if (e.index == k) {
              row[a * n + i] -= e.coeff;
              any = true;
            }
          for (const Term& e : t[i * n + a])
            if (e.index == k) {
              row[a * n + j] -= e.coeff;
              any = true;
            }
        }
        if (any) {
          sys.add(row);
          row.assign(n * n, Rational(0));
        }
      }
  Subspace flat = kernel(sys);
  return DerivationSpace{l, as_matrices(flat, n, n), flat};
}

DerivationAlgebra derivations_as_algebra(const DerivationSpace& der) {
  const std::size_t m = der.dim();
  LieAlgebraBuilder b("Der(" + der.algebra.name() + ")", default_labels(m, "D"));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      auto c = der.flat.coordinates(flatten(commutator(der.basis[p], der.basis[q])));
      if (!c) throw Error("derivations are not closed under the commutator");
      b.set(p, q, *c);
    }
  return DerivationAlgebra{b.build(), der.basis};
}

DerivationAlgebra derivations_as_algebra(const LieAlgebra& l) {
  return derivations_as_algebra(derivations(l));
}

Subspace inner_derivations(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  RowReducer r(n * n);
  for (std::size_t i = 0; i < n; ++i) r.add(flatten(l.ad(i)));
  return Subspace::from_rref(r.finish());
}

Subspace centroid(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const auto t = sparse_table(l);
  // phi[e_i, e_j] - [e_i, phi e_j] = 0 for all ordered (i, j), component k:
  //   sum_a phi(k,a) c_ij^a - sum_a phi(a,j) c_ia^k
  RowReducer sys(n * n);
  Vector row(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sys.rank() == n * n) break;
        bool any = false;
        for (const Term& e : t[i * n + j]) {
          row[k * n + e.index] += e.coeff;
          any = true;
        }
        for (std::size_t a = 0; a < n; ++a)
          for (const Term& e : t[i * n + a])
            if (e.index == k) {
              row[a * n + j] -= e.coeff;
              any = true;
            }
        if (any) {
          sys.add(row);
          row.assign(n * n, Rational(0));
        }
      }
  return kernel(sys);
}

Subspace hom_ab_center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const auto t = sparse_table(l);
  RowReducer sys(n * n);
  Vector row(n * n);
  // phi b = 0 for b in [L, L]
  for (const auto& b : derived_subalgebra(l).basis_vectors())
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) row[r * n + c] = b[c];
      sys.add(row);
      row.assign(n * n, Rational(0));
    }
  // [e_i, phi e_j] = 0, component k: sum_a phi(a,j) c_ia^k = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        bool any = false;
        for (std::size_t a = 0; a < n; ++a)
          for (const Term& e : t[i * n + a])
            if (e.index == k) {
              row[a * n + j] += e.coeff;
              any = true;
            }
        if (any) {
          sys.add(row);
          row.assign(n * n, Rational(0));
        }
      }
  return kernel(sys);
}

std::size_t killing_rank(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad(i));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return rank(k);
}

}  // namespace liedeform
