#include "liedeform/products.hpp"

#include <sstream>

#include "liedeform/errors.hpp"

namespace liedeform {

namespace {

std::string pair_text(const IndexPair& p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

std::vector<std::string> prefixed(const std::string& prefix, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& s : labels) out.push_back(prefix + s);
  return out;
}

// Bracket table of h + g with h-block first.
LieAlgebra build_product(const std::string& name, const LieAlgebra& h, const LieAlgebra& g,
                         const Action& a, const LinearMap* mu, const Rational& t) {
  const std::size_t nh = h.dim(), ng = g.dim(), n = nh + ng;
  auto labels = prefixed("h:", h.labels());
  auto gl = prefixed("g:", g.labels());
  labels.insert(labels.end(), gl.begin(), gl.end());
  LieAlgebraBuilder b(name, labels);
  if (mu != nullptr && sgn(t) != 0) {
    for (std::size_t i = 0; i < nh; ++i)
      for (std::size_t j = i + 1; j < nh; ++j) {
        Vector img = (*mu)(h.bracket_basis(i, j));
        Vector v(n);
        for (std::size_t k = 0; k < ng; ++k) v[nh + k] = t * img[k];
        b.set(i, j, v);
      }
  }
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < ng; ++j) {
      // [(h_i, 0), (0, g_j)] = (-g_j . h_i, 0)
      Vector v(n);
      for (std::size_t k = 0; k < nh; ++k) v[k] = -a.rho[j](k, i);
      b.set(i, nh + j, v);
    }
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = i + 1; j < ng; ++j) {
      Vector v(n);
      const Vector& c = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < ng; ++k) v[nh + k] = c[k];
      b.set(nh + i, nh + j, v);
    }
  return b.build();
}

Matrix restricted_ad(const LieAlgebra& g, std::size_t i, const Subspace& s) {
  const auto basis = s.basis_vectors();
  Matrix m(basis.size(), basis.size());
  for (std::size_t q = 0; q < basis.size(); ++q) {
    auto c = s.coordinates(g.bracket(unit_vector(g.dim(), i), basis[q]));
    if (!c) throw IdealError("subspace is not an ideal");
    for (std::size_t p = 0; p < basis.size(); ++p) m(p, q) = (*c)[p];
  }
  return m;
}

}  // namespace

Action::Action(LieAlgebra acting_, std::size_t space_dim_, std::vector<Matrix> rho_)
    : acting(std::move(acting_)), space_dim(space_dim_), rho(std::move(rho_)) {
  if (rho.size() != acting.dim()) throw DimensionError("action needs one matrix per generator");
  for (const auto& m : rho)
    if (m.rows() != space_dim || m.cols() != space_dim)
      throw DimensionError("action matrices must be " + std::to_string(space_dim) + "x" +
                           std::to_string(space_dim));
}

Matrix Action::operator()(const Vector& x) const {
  if (x.size() != acting.dim()) throw DimensionError("action argument length mismatch");
  Matrix m(space_dim, space_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * rho[i];
  return m;
}

Action Action::adjoint(const LieAlgebra& l) {
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < l.dim(); ++i) rho.push_back(l.ad(i));
  return Action(l, l.dim(), rho);
}

Action Action::trivial(const LieAlgebra& l, std::size_t space_dim) {
  return Action(l, space_dim, std::vector<Matrix>(l.dim(), Matrix(space_dim, space_dim)));
}

std::vector<std::string> ActionReport::messages() const {
  std::vector<std::string> out;
  for (const auto& p : bracket_violations)
    out.push_back("action is not a homomorphism on generator pair " + pair_text(p));
  for (auto i : non_derivations)
    out.push_back("generator " + std::to_string(i + 1) + " does not act by a derivation");
  return out;
}

ActionReport check_action(const Action& a, const LieAlgebra* h, bool by_derivations) {
  if (h != nullptr && h->dim() != a.space_dim) throw DimensionError("action space dimension mismatch");
  ActionReport r;
  const std::size_t n = a.acting.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(a.acting.bracket_basis(i, j)) != commutator(a.rho[i], a.rho[j]))
        r.bracket_violations.push_back({i, j});
  if (by_derivations) {
    if (h == nullptr) throw DimensionError("derivation check needs the acted-on algebra");
    for (std::size_t i = 0; i < n; ++i)
      if (!is_derivation(*h, a.rho[i])) r.non_derivations.push_back(i);
  }
  return r;
}

CrossedModule::CrossedModule(std::string name, LieAlgebra h, LieAlgebra g, Matrix mu,
                             std::vector<Matrix> action)
    : name_(std::move(name)),
      h_(std::move(h)),
      g_(std::move(g)),
      mu_(h_, g_, std::move(mu)),
      action_(g_, h_.dim(), std::move(action)) {}

CrossedModule CrossedModule::renamed(std::string name) const {
  CrossedModule c = *this;
  c.name_ = std::move(name);
  return c;
}

std::vector<std::string> CrossedModuleReport::messages() const {
  auto out = action.messages();
  for (const auto& p : axiom_a)
    out.push_back("axiom (a) mu(g.h) = [g, mu(h)] fails for (g, h) = " + pair_text(p));
  for (const auto& p : axiom_b)
    out.push_back("axiom (b) mu(h).h' = [h, h'] fails for (h, h') = " + pair_text(p));
  if (mu_not_homomorphism)
    out.push_back("mu is not a homomorphism on pair " + pair_text(*mu_not_homomorphism));
  return out;
}

CrossedModuleReport check_crossed_module(const CrossedModule& cm) {
  CrossedModuleReport r;
  const LieAlgebra& h = cm.h();
  const LieAlgebra& g = cm.g();
  r.action = check_action(cm.action(), &h, true);
  const Matrix& mu = cm.mu().matrix();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Matrix lhs = mu * cm.action().rho[i];
    const Matrix rhs = g.ad(i) * mu;
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (lhs.column(j) != rhs.column(j)) r.axiom_a.push_back({i, j});
  }
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < h.dim(); ++i) acts.push_back(cm.action()(mu.column(i)));
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (acts[i].column(j) != h.bracket_basis(i, j)) r.axiom_b.push_back({i, j});
  auto hom = is_homomorphism(cm.mu());
  if (!hom.ok) r.mu_not_homomorphism = hom.first_violation;
  return r;
}

void require_crossed_module(const CrossedModule& cm) {
  auto r = check_crossed_module(cm);
  if (r.ok()) return;
  std::ostringstream os;
  os << "'" << cm.name() << "' is not a crossed module:";
  for (const auto& m : r.messages()) os << "\n  " << m;
  throw CrossedModuleError(os.str());
}

CrossedModule identity_crmod(const LieAlgebra& g) {
  return CrossedModule("identity_" + g.name(), g, g, Matrix::identity(g.dim()), Action::adjoint(g).rho);
}

CrossedModule adjoint_crmod(const LieAlgebra& g) {
  const DerivationSpace der = derivations(g);
  const DerivationAlgebra da = derivations_as_algebra(der);
  Matrix mu(da.algebra.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    auto c = der.flat.coordinates(flatten(g.ad(i)));
    if (!c) throw Error("inner derivation outside Der");
    for (std::size_t p = 0; p < c->size(); ++p) mu(p, i) = (*c)[p];
  }
  return CrossedModule("adjoint_" + g.name(), g, da.algebra, mu, da.realization);
}

CrossedModule inclusion_crmod(const LieAlgebra& g, const Subspace& i) {
  if (!is_ideal(g, i)) throw IdealError("inclusion_crmod: subspace is not an ideal");
  LieAlgebra h = subalgebra(g, i);
  Matrix mu = Matrix::from_columns(g.dim(), i.basis_vectors());
  std::vector<Matrix> rho;
  for (std::size_t k = 0; k < g.dim(); ++k) rho.push_back(restricted_ad(g, k, i));
  return CrossedModule("inclusion_" + g.name(), h, g, mu, rho);
}

CrossedModule quotient_crmod(const LieAlgebra& h, const Subspace& i) {
  if (!center(h).contains(i)) throw IdealError("quotient_crmod: ideal must be central");
  Quotient q = quotient(h, i);
  std::vector<Matrix> rho;
  for (std::size_t p : q.representatives) rho.push_back(h.ad(p));
  return CrossedModule("quotient_" + h.name(), h, q.algebra, q.projection.matrix(), rho);
}

CrossedModule zero_crmod(const Action& a) {
  LieAlgebra v = LieAlgebraBuilder("V" + std::to_string(a.space_dim), default_labels(a.space_dim, "v")).build();
  return CrossedModule("zero_" + a.acting.name(), v, a.acting, Matrix(a.acting.dim(), a.space_dim), a.rho);
}

LieAlgebra semidirect(const Action& a) {
  auto r = check_action(a, nullptr, false);
  if (!r.ok()) throw ActionError("semidirect: " + r.messages().front());
  LieAlgebra v = LieAlgebraBuilder("V" + std::to_string(a.space_dim), default_labels(a.space_dim, "v")).build();
  return build_product("V x| " + a.acting.name(), v, a.acting, a, nullptr, 0);
}

LieAlgebra semidirect(const CrossedModule& cm) {
  auto r = check_action(cm.action(), &cm.h(), false);
  if (!r.ok()) throw ActionError("semidirect: " + r.messages().front());
  return build_product(cm.h().name() + " x| " + cm.g().name(), cm.h(), cm.g(), cm.action(), nullptr, 0);
}

LieAlgebra deformed(const CrossedModule& cm, const Rational& t) {
  require_crossed_module(cm);
  return build_product(cm.h().name() + " x_t " + cm.g().name() + " (t=" + to_string(t) + ")", cm.h(),
                       cm.g(), cm.action(), &cm.mu(), t);
}

LinearMap psi_map(const LieAlgebra& g, const Rational& s) {
  if (sgn(s) == 0) throw SingularityError("psi_map: s must be nonzero");
  const std::size_t n = g.dim();
  Matrix m(2 * n, 2 * n);
  const Matrix id = Matrix::identity(n);
  m.set_block(0, 0, -s * id);
  m.set_block(0, n, id);
  m.set_block(n, 0, s * id);
  m.set_block(n, n, id);
  return LinearMap(deformed(identity_crmod(g), s * s), direct_sum(g, g), m);
}

bool contraction_check_psi(const LieAlgebra& g, const Rational& s) {
  LinearMap psi = psi_map(g, s);
  return transport(psi.target(), psi.matrix()).same_structure(psi.source());
}

bool contraction_check_phi(const CrossedModule& cm, const Rational& s) {
  if (sgn(s) == 0) throw SingularityError("contraction_check_phi: s must be nonzero");
  const std::size_t nh = cm.h().dim(), ng = cm.g().dim();
  Matrix p = block_diagonal(s * Matrix::identity(nh), Matrix::identity(ng));
  return transport(deformed(cm, 1), p).same_structure(deformed(cm, s * s));
}

std::vector<std::string> MorphismReport::messages() const {
  std::vector<std::string> out;
  if (!square_commutes) out.push_back("mu' o phi != psi o mu");
  for (const auto& p : equivariance)
    out.push_back("phi(g.h) != psi(g).phi(h) for (g, h) = " + pair_text(p));
  if (!phi_homomorphism) out.push_back("phi is not a homomorphism");
  if (!psi_homomorphism) out.push_back("psi is not a homomorphism");
  return out;
}

MorphismReport check_crmod_morphism(const CrmodMorphism& m, const CrossedModule& cm,
                                    const CrossedModule& target) {
  LinearMap phi(cm.h(), target.h(), m.phi);
  LinearMap psi(cm.g(), target.g(), m.psi);
  MorphismReport r;
  r.square_commutes = target.mu().matrix() * m.phi == m.psi * cm.mu().matrix();
  for (std::size_t i = 0; i < cm.g().dim(); ++i) {
    const Matrix lhs = m.phi * cm.action().rho[i];
    const Matrix rhs = target.action()(m.psi.column(i)) * m.phi;
    for (std::size_t j = 0; j < cm.h().dim(); ++j)
      if (lhs.column(j) != rhs.column(j)) r.equivariance.push_back({i, j});
  }
  r.phi_homomorphism = is_homomorphism(phi).ok;
  r.psi_homomorphism = is_homomorphism(psi).ok;
  return r;
}

bool pushforward_bracket_check(const CrmodMorphism& m, const CrossedModule& cm,
                               const CrossedModule& target) {
  LinearMap f(deformed(cm, 1), deformed(target, 1), block_diagonal(m.phi, m.psi));
  return is_homomorphism(f).ok;
}

std::optional<LinearMap> iso_deformed_to_direct(const CrossedModule& cm, const Rational& s) {
  if (sgn(s) == 0) throw SingularityError("iso_deformed_to_direct: s must be nonzero");
  const LieAlgebra& h = cm.h();
  const LieAlgebra& g = cm.g();
  const std::size_t nh = h.dim(), ng = g.dim();
  const Matrix& mu = cm.mu().matrix();
  if (rank(mu) != nh) return std::nullopt;
  // K = {k : rho(k) = 0, [k, mu(h)] = 0}
  RowReducer sys(ng);
  for (std::size_t r = 0; r < nh; ++r)
    for (std::size_t c = 0; c < nh; ++c) {
      Vector row(ng);
      for (std::size_t k = 0; k < ng; ++k) row[k] = cm.action().rho[k](r, c);
      sys.add(row);
    }
  for (std::size_t j = 0; j < nh; ++j) {
    const Matrix adm = g.ad(mu.column(j));
    for (std::size_t r = 0; r < ng; ++r) sys.add(adm.row(r));
  }
  const Subspace k = kernel(sys);
  if (k.dim() + nh != ng) return std::nullopt;
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < nh; ++j) cols.push_back(mu.column(j));
  for (const auto& v : k.basis_vectors()) cols.push_back(v);
  const Matrix basis = Matrix::from_columns(ng, cols);
  if (rank(basis) != ng) return std::nullopt;
  const Matrix pi = inverse(basis).block(0, 0, nh, ng);
  // (h, g) -> (pi(g) - s h, g + s mu(h))
  Matrix theta(nh + ng, nh + ng);
  theta.set_block(0, 0, -s * Matrix::identity(nh));
  theta.set_block(0, nh, pi);
  theta.set_block(nh, 0, s * mu);
  theta.set_block(nh, nh, Matrix::identity(ng));
  if (rank(theta) != nh + ng) return std::nullopt;
  LinearMap f(deformed(cm, s * s), direct_sum(h, g), theta);
  if (!is_homomorphism(f).ok) return std::nullopt;
  return f;
}

SurjectiveModel surjective_model(const CrossedModule& cm, const Rational& t) {
  const LieAlgebra& h = cm.h();
  const LieAlgebra& g = cm.g();
  const Matrix& mu = cm.mu().matrix();
  if (rank(mu) != g.dim()) throw ApplicabilityError("surjective_model: mu is not surjective");
  const Subspace ker = kernel(mu);
  if (!center(h).contains(ker)) throw ApplicabilityError("surjective_model: ker(mu) is not central");
  Quotient q = quotient(h, ker);
  const std::size_t nh = h.dim(), nq = q.algebra.dim();
  // k . h' = [k, h'] for a representative k of the class
  std::vector<Matrix> rho;
  for (std::size_t p : q.representatives) rho.push_back(h.ad(p));
  Action a(q.algebra, nh, rho);
  const LieAlgebra model_semidirect = build_product("model", h, q.algebra, a, nullptr, 0);
  // add t [h, h'] mod ker to the second block
  auto labels = model_semidirect.labels();
  LieAlgebraBuilder b(h.name() + " + " + h.name() + "/ker (t=" + to_string(t) + ")", labels);
  for (std::size_t i = 0; i < nh + nq; ++i)
    for (std::size_t j = i + 1; j < nh + nq; ++j) {
      Vector v = model_semidirect.bracket_basis(i, j);
      if (j < nh) {
        Vector img = q.projection(h.bracket_basis(i, j));
        for (std::size_t k = 0; k < nq; ++k) v[nh + k] += t * img[k];
      }
      b.set(i, j, v);
    }
  LieAlgebra model = b.build();
  // (h, kbar) -> (h, mu(k))
  Matrix bar_mu(g.dim(), nq);
  for (std::size_t p = 0; p < nq; ++p)
    for (std::size_t r = 0; r < g.dim(); ++r) bar_mu(r, p) = mu(r, q.representatives[p]);
  Matrix iso = block_diagonal(Matrix::identity(nh), bar_mu);
  LinearMap f(model, deformed(cm, t), iso);
  const bool ok = rank(iso) == nh + g.dim() && is_homomorphism(f).ok;
  return SurjectiveModel{model, f, ok};
}

}  // namespace liedeform
