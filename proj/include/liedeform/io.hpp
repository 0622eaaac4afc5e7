#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "liedeform/analysis.hpp"
#include "liedeform/lie_algebra.hpp"
#include "liedeform/products.hpp"

namespace liedeform {

using Json = nlohmann::ordered_json;

/// Resolves "@key" references inside documents.
class RefResolver {
 public:
  virtual ~RefResolver() = default;
  virtual LieAlgebra algebra(const std::string& key) const = 0;
  virtual CrossedModule crossed_module(const std::string& key) const = 0;
};

/// Throws ParseError carrying the line and column of the defect.
Json parse_json(std::string_view text, const std::string& source = "<input>");

/// Object keys sorted (integer-valued keys numerically), two-space indent, trailing newline.
std::string dump(const Json& j);
Json canonical(const Json& j);

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const LieAlgebra& l);
Json to_json(const CrossedModule& cm);
Json to_json(const Fingerprint& f);
Json to_json(const InvariantValue& v);
Json to_json(const NonIsoCertificate& c);

Rational rational_from_json(const Json& j, const std::string& where);
Vector vector_from_json(const Json& j, std::size_t n, const std::string& where);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// Structure only; the Jacobi identity is not checked here.
LieAlgebra algebra_from_json(const Json& j, const RefResolver& refs);
/// Accepts the explicit form and the {"builtin": ...} constructor forms. Axioms are not checked.
CrossedModule crossed_module_from_json(const Json& j, const RefResolver& refs);
/// True for crossed-module documents (explicit or builtin).
bool is_crossed_module_document(const Json& j);

}  // namespace liedeform
