#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liedeform/lie_algebra.hpp"
#include "liedeform/linalg.hpp"
#include "liedeform/products.hpp"

namespace liedeform {

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t dim_center = 0;
  std::size_t dim_derived = 0;
  std::vector<std::size_t> derived_series_dims;
  std::vector<std::size_t> lcs_dims;
  std::size_t dim_Der = 0;
  std::size_t dim_Centr = 0;
  std::size_t dim_hom_ab_center = 0;
  std::size_t dim_H1_adjoint = 0;
  std::size_t killing_rank = 0;
  bool is_solvable = false;
  bool is_nilpotent = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

using InvariantValue = std::variant<std::size_t, bool, std::vector<std::size_t>>;
std::string to_string(const InvariantValue& v);

/// Fields in schema order.
std::vector<std::pair<std::string, InvariantValue>> fingerprint_fields(const Fingerprint& f);
Fingerprint fingerprint(const LieAlgebra& l);

struct InvariantDiff {
  std::string invariant;
  InvariantValue a;
  InvariantValue b;
};

/// Differing invariants prove non-isomorphy; equal ones prove nothing.
struct NonIsoCertificate {
  std::string a_name;
  std::string b_name;
  std::vector<InvariantDiff> diffs;
  bool conclusive() const { return !diffs.empty(); }
};

NonIsoCertificate certify_nonisomorphic(const LieAlgebra& a, const LieAlgebra& b);
NonIsoCertificate compare_fingerprints(const std::string& a_name, const Fingerprint& a,
                                       const std::string& b_name, const Fingerprint& b);

/// Center of deformed(cm, t) from the four linear conditions on (h, g):
/// g'.h = 0, [h, h'] in ker(mu), g.h' = 0, g in Z(g). Throws ApplicabilityError for t = 0.
Subspace center_deformed_formula(const CrossedModule& cm, const Rational& t);

/// {(h, 0) : h in every ker D, ad_[h,h'] = 0} inside g + Der(g) for ad: g -> Der(g).
/// Throws ApplicabilityError for t = 0.
Subspace center_adjoint_deformed(const LieAlgebra& g, const Rational& t);

/// When Z(Der g) != 0: certificate that deformed(adjoint_crmod(g), t) and
/// g + Der(g) differ in center dimension.
std::optional<NonIsoCertificate> criterion_center_direct(const LieAlgebra& g);

/// 2 on [g, g], 1 on the greedy standard complement. Throws ApplicabilityError
/// unless g is 2-step nilpotent.
Matrix two_step_D0(const LieAlgebra& g);
bool two_step_D0_check(const LieAlgebra& g);

struct TwoStepReport {
  NonIsoCertificate certificate;  // deformed(adjoint_crmod(g), 1) vs g + Der(g)
  std::size_t deformed_center_dim = 0;
  std::size_t direct_center_dim = 0;
  bool deformed_is_nilpotent = true;
};
TwoStepReport two_step_noniso_theorem_check(const LieAlgebra& g);

/// O + [g, g] with O = span{g_i . h_j} in the h-block.
Subspace derived_deformed_formula(const CrossedModule& cm, const Rational& t);

/// is_solvable(deformed(cm, t)) == is_solvable(g); returns the common value.
/// Throws ValidationError on a mismatch.
bool solvability_transfer_check(const CrossedModule& cm, const Rational& t);

enum class ProductKind { direct, semidirect, deformed };
std::string to_string(ProductKind k);

struct BlockViolation {
  int condition;  // 1-based, in the order of the applicable list
  std::size_t derivation;
};

struct DerivationBlockReport {
  ProductKind kind;
  Rational t;
  std::size_t dim_Der = 0;
  std::size_t conditions = 0;
  std::vector<BlockViolation> violations;
  Subspace derivations;  // flattened Der of the product
  bool ok() const { return violations.empty(); }
};

/// Der of h + g (direct), h x| g, or deformed(cm, t), with every basis
/// derivation split into blocks [[D1, D2], [D3, D4]] and tested against the
/// block conditions of the product type.
DerivationBlockReport derivation_block_report(ProductKind kind, const CrossedModule& cm,
                                              const Rational& t = 1);

}  // namespace liedeform
