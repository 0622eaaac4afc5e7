#include "liedeform/analysis.hpp"

#include <sstream>

#include "liedeform/errors.hpp"
#include "liedeform/lie_core.hpp"

namespace liedeform {

namespace {

std::vector<std::size_t> dims_of(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

void require_nonzero_t(const Rational& t) {
  if (sgn(t) == 0) throw ApplicabilityError("formula requires t != 0; use the generic center at t = 0");
}

bool is_two_step(const LieAlgebra& g) {
  Subspace d = derived_subalgebra(g);
  return !d.is_zero() && bracket_span(g, Subspace::full(g.dim()), d).is_zero();
}

}  // namespace

std::string to_string(const InvariantValue& v) {
  if (const auto* n = std::get_if<std::size_t>(&v)) return std::to_string(*n);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  const auto& seq = std::get<std::vector<std::size_t>>(v);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? ", " : "") << seq[i];
  os << ')';
  return os.str();
}

std::vector<std::pair<std::string, InvariantValue>> fingerprint_fields(const Fingerprint& f) {
  return {
      {"dim", f.dim},
      {"dim_center", f.dim_center},
      {"dim_derived", f.dim_derived},
      {"derived_series_dims", f.derived_series_dims},
      {"lcs_dims", f.lcs_dims},
      {"dim_Der", f.dim_Der},
      {"dim_Centr", f.dim_Centr},
      {"dim_hom_ab_center", f.dim_hom_ab_center},
      {"dim_H1_adjoint", f.dim_H1_adjoint},
      {"killing_rank", f.killing_rank},
      {"is_solvable", f.is_solvable},
      {"is_nilpotent", f.is_nilpotent},
  };
}

Fingerprint fingerprint(const LieAlgebra& l) {
  Fingerprint f;
  f.dim = l.dim();
  f.dim_center = center(l).dim();
  f.dim_derived = derived_subalgebra(l).dim();
  auto ds = derived_series(l);
  auto lcs = lower_central_series(l);
  f.derived_series_dims = dims_of(ds);
  f.lcs_dims = dims_of(lcs);
  f.dim_Der = derivations(l).dim();
  f.dim_Centr = centroid(l).dim();
  f.dim_hom_ab_center = hom_ab_center(l).dim();
  f.dim_H1_adjoint = f.dim_Der - inner_derivations(l).dim();
  f.killing_rank = killing_rank(l);
  f.is_solvable = ds.back().is_zero();
  f.is_nilpotent = lcs.back().is_zero();
  return f;
}

NonIsoCertificate compare_fingerprints(const std::string& a_name, const Fingerprint& a,
                                       const std::string& b_name, const Fingerprint& b) {
  NonIsoCertificate c{a_name, b_name, {}};
  auto fa = fingerprint_fields(a);
  auto fb = fingerprint_fields(b);
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fa[i].second != fb[i].second) c.diffs.push_back({fa[i].first, fa[i].second, fb[i].second});
  return c;
}

NonIsoCertificate certify_nonisomorphic(const LieAlgebra& a, const LieAlgebra& b) {
  return compare_fingerprints(a.name(), fingerprint(a), b.name(), fingerprint(b));
}

Subspace center_deformed_formula(const CrossedModule& cm, const Rational& t) {
  require_nonzero_t(t);
  const LieAlgebra& h = cm.h();
  const LieAlgebra& g = cm.g();
  const auto& rho = cm.action().rho;
  const Matrix& mu = cm.mu().matrix();
  const std::size_t nh = h.dim(), ng = g.dim(), n = nh + ng;
  RowReducer sys(n);
  // g'.h = 0
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t k = 0; k < nh; ++k) {
      Vector r(n);
      for (std::size_t j = 0; j < nh; ++j) r[j] = rho[i](k, j);
      sys.add(std::move(r));
    }
  // mu[h, h'] = 0
  for (std::size_t j = 0; j < nh; ++j)
    for (std::size_t k = 0; k < ng; ++k) {
      Vector r(n);
      for (std::size_t a = 0; a < nh; ++a) {
        const Vector& c = h.bracket_basis(a, j);
        for (std::size_t m = 0; m < nh; ++m) r[a] += mu(k, m) * c[m];
      }
      sys.add(std::move(r));
    }
  // g.h' = 0
  for (std::size_t j = 0; j < nh; ++j)
    for (std::size_t k = 0; k < nh; ++k) {
      Vector r(n);
      for (std::size_t i = 0; i < ng; ++i) r[nh + i] = rho[i](k, j);
      sys.add(std::move(r));
    }
  // g in Z(g)
  for (std::size_t j = 0; j < ng; ++j)
    for (std::size_t k = 0; k < ng; ++k) {
      Vector r(n);
      for (std::size_t i = 0; i < ng; ++i) r[nh + i] = g.constant(i, j, k);
      sys.add(std::move(r));
    }
  return kernel(sys);
}

Subspace center_adjoint_deformed(const LieAlgebra& g, const Rational& t) {
  require_nonzero_t(t);
  const DerivationSpace der = derivations(g);
  const std::size_t n = g.dim(), m = der.dim(), total = n + m;
  RowReducer sys(total);
  for (std::size_t i = 0; i < m; ++i) sys.add(unit_vector(total, n + i));
  for (const Matrix& d : der.basis)
    for (std::size_t k = 0; k < n; ++k) {
      Vector r(total);
      for (std::size_t j = 0; j < n; ++j) r[j] = d(k, j);
      sys.add(std::move(r));
    }
  // [[h, e_j], e_q] = 0
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) {
        Vector r(total);
        for (std::size_t a = 0; a < n; ++a) {
          const Vector& c = g.bracket_basis(a, j);
          for (std::size_t b = 0; b < n; ++b)
            if (sgn(c[b]) != 0) r[a] += c[b] * g.constant(b, q, k);
        }
        sys.add(std::move(r));
      }
  return kernel(sys);
}

std::optional<NonIsoCertificate> criterion_center_direct(const LieAlgebra& g) {
  const CrossedModule cm = adjoint_crmod(g);
  if (center(cm.g()).is_zero()) return std::nullopt;
  const LieAlgebra def = deformed(cm, 1);
  const LieAlgebra dir = direct_sum(g, cm.g());
  const std::size_t zd = center(def).dim(), zp = center(dir).dim();
  if (zd == zp) return std::nullopt;
  return NonIsoCertificate{def.name(), dir.name(), {{"dim_center", zd, zp}}};
}

Matrix two_step_D0(const LieAlgebra& g) {
  if (!is_two_step(g)) throw ApplicabilityError(g.name() + " is not 2-step nilpotent");
  const std::size_t n = g.dim();
  Subspace d = derived_subalgebra(g);
  std::vector<Vector> cols = d.basis_vectors();
  for (std::size_t k : d.standard_complement()) cols.push_back(unit_vector(n, k));
  Matrix b = Matrix::from_columns(n, cols);
  Matrix diag(n, n);
  for (std::size_t i = 0; i < n; ++i) diag(i, i) = i < d.dim() ? 2 : 1;
  return b * diag * inverse(b);
}

bool two_step_D0_check(const LieAlgebra& g) { return is_derivation(g, two_step_D0(g)); }

TwoStepReport two_step_noniso_theorem_check(const LieAlgebra& g) {
  if (!is_two_step(g)) throw ApplicabilityError(g.name() + " is not 2-step nilpotent");
  const CrossedModule cm = adjoint_crmod(g);
  const LieAlgebra def = deformed(cm, 1);
  const LieAlgebra dir = direct_sum(g, cm.g());
  TwoStepReport r;
  r.deformed_center_dim = center(def).dim();
  r.direct_center_dim = center(dir).dim();
  r.deformed_is_nilpotent = is_nilpotent(def);
  r.certificate = {def.name(), dir.name(), {}};
  if (r.deformed_center_dim != r.direct_center_dim)
    r.certificate.diffs.push_back({"dim_center", r.deformed_center_dim, r.direct_center_dim});
  return r;
}

Subspace derived_deformed_formula(const CrossedModule& cm, const Rational&) {
  const std::size_t nh = cm.h().dim(), ng = cm.g().dim(), n = nh + ng;
  std::vector<Vector> gens;
  for (const Matrix& r : cm.action().rho)
    for (std::size_t j = 0; j < nh; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < nh; ++k) v[k] = r(k, j);
      gens.push_back(std::move(v));
    }
  for (const Vector& b : derived_subalgebra(cm.g()).basis_vectors()) {
    Vector v(n);
    for (std::size_t k = 0; k < ng; ++k) v[nh + k] = b[k];
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

bool solvability_transfer_check(const CrossedModule& cm, const Rational& t) {
  const bool sg = is_solvable(cm.g());
  const bool sd = is_solvable(deformed(cm, t));
  if (sg != sd)
    throw ValidationError("solvability transfer fails for " + cm.name() + " at t = " + to_string(t));
  return sg;
}

std::string to_string(ProductKind k) {
  switch (k) {
    case ProductKind::direct: return "direct";
    case ProductKind::semidirect: return "semidirect";
    case ProductKind::deformed: return "deformed";
  }
  return "";
}

namespace {

struct Blocks {
  Matrix d1, d2, d3, d4;
};

class BlockChecker {
 public:
  BlockChecker(const CrossedModule& cm, const Rational& t)
      : h_(cm.h()), g_(cm.g()), mu_(cm.mu().matrix()), act_(cm.action()), t_(t),
        nh_(h_.dim()), ng_(g_.dim()) {}

  std::size_t conditions(ProductKind k) const { return k == ProductKind::semidirect ? 5 : 6; }

  /// Violated condition numbers for one derivation.
  std::vector<int> check(ProductKind k, const Blocks& b) const {
    std::vector<int> bad;
    auto note = [&](int c, bool ok) {
      if (!ok) bad.push_back(c);
    };
    switch (k) {
      case ProductKind::direct:
        note(1, is_derivation(h_, b.d1));
        note(2, all_h_pairs([&](auto x, auto y) { return is_zero(b.d3 * h_.bracket(x, y)); }));
        note(3, all_hg([&](auto x, auto y) { return is_zero(h_.bracket(x, b.d2 * y)); }));
        note(4, all_hg([&](auto x, auto y) { return is_zero(g_.bracket(b.d3 * x, y)); }));
        note(5, all_g_pairs([&](auto x, auto y) { return is_zero(b.d2 * g_.bracket(x, y)); }));
        note(6, is_derivation(g_, b.d4));
        break;
      case ProductKind::semidirect:
        note(1, all_h_pairs([&](auto x, auto y) { return dot(b.d3 * x, y) == dot(b.d3 * y, x); }));
        note(2, cond_d1_action(b));
        note(3, all_hg([&](auto x, auto y) { return b.d3 * dot(y, x) == g_.bracket(y, b.d3 * x); }));
        note(4, cond_d2_der(b));
        note(5, is_derivation(g_, b.d4));
        break;
      case ProductKind::deformed:
        note(1, all_h_pairs([&](auto x, auto y) {
               return t_ * (b.d2 * (mu_ * h_.bracket(x, y))) == dot(b.d3 * x, y) - dot(b.d3 * y, x);
             }));
        note(2, all_h_pairs([&](auto x, auto y) {
               return b.d4 * (mu_ * h_.bracket(x, y)) ==
                      mu_ * (h_.bracket(b.d1 * x, y) + h_.bracket(x, b.d1 * y));
             }));
        note(3, cond_d1_action(b));
        note(4, all_hg([&](auto x, auto y) {
               return b.d3 * dot(y, x) ==
                      g_.bracket(y, b.d3 * x) + t_ * (mu_ * h_.bracket(b.d2 * y, x));
             }));
        note(5, cond_d2_der(b));
        note(6, is_derivation(g_, b.d4));
        break;
    }
    return bad;
  }

 private:
  // g . h
  Vector dot(const Vector& gv, const Vector& hv) const { return act_(gv) * hv; }

  template <class F>
  bool all_h_pairs(F f) const {
    for (std::size_t i = 0; i < nh_; ++i)
      for (std::size_t j = i + 1; j < nh_; ++j)
        if (!f(unit_vector(nh_, i), unit_vector(nh_, j))) return false;
    return true;
  }
  template <class F>
  bool all_g_pairs(F f) const {
    for (std::size_t i = 0; i < ng_; ++i)
      for (std::size_t j = i + 1; j < ng_; ++j)
        if (!f(unit_vector(ng_, i), unit_vector(ng_, j))) return false;
    return true;
  }
  // f(h, g)
  template <class F>
  bool all_hg(F f) const {
    for (std::size_t i = 0; i < nh_; ++i)
      for (std::size_t j = 0; j < ng_; ++j)
        if (!f(unit_vector(nh_, i), unit_vector(ng_, j))) return false;
    return true;
  }

  // D1(g'.h) = g'.D1(h) + D4(g').h
  bool cond_d1_action(const Blocks& b) const {
    return all_hg([&](auto x, auto y) { return b.d1 * dot(y, x) == dot(y, b.d1 * x) + dot(b.d4 * y, x); });
  }
  // D2[g, g'] = g.D2(g') - g'.D2(g)
  bool cond_d2_der(const Blocks& b) const {
    return all_g_pairs([&](auto x, auto y) {
      return b.d2 * g_.bracket(x, y) == dot(x, b.d2 * y) - dot(y, b.d2 * x);
    });
  }

  const LieAlgebra& h_;
  const LieAlgebra& g_;
  const Matrix& mu_;
  const Action& act_;
  Rational t_;
  std::size_t nh_, ng_;
};

}  // namespace

DerivationBlockReport derivation_block_report(ProductKind kind, const CrossedModule& cm,
                                              const Rational& t) {
  LieAlgebra p;
  switch (kind) {
    case ProductKind::direct: p = direct_sum(cm.h(), cm.g()); break;
    case ProductKind::semidirect: p = semidirect(cm); break;
    case ProductKind::deformed: p = deformed(cm, t); break;
  }
  const std::size_t nh = cm.h().dim(), ng = cm.g().dim();
  DerivationSpace der = derivations(p);
  BlockChecker checker(cm, t);
  DerivationBlockReport r{kind, t, der.dim(), checker.conditions(kind), {}, der.flat};
  for (std::size_t i = 0; i < der.dim(); ++i) {
    const Matrix& d = der.basis[i];
    Blocks b{d.block(0, 0, nh, nh), d.block(0, nh, nh, ng), d.block(nh, 0, ng, nh),
             d.block(nh, nh, ng, ng)};
    for (int c : checker.check(kind, b)) r.violations.push_back({c, i});
  }
  return r;
}

}  // namespace liedeform
