#include "liedeform/io.hpp"

#include <algorithm>
#include <cctype>

#include "liedeform/errors.hpp"

namespace liedeform {

namespace {

bool is_index_key(const std::string& s) {
  return !s.empty() && s.size() < 19 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool key_less(const std::string& a, const std::string& b) {
  if (is_index_key(a) && is_index_key(b)) return std::stoull(a) < std::stoull(b);
  return a < b;
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    schema_error(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

LieAlgebra algebra_or_ref(const Json& j, const RefResolver& refs, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s[0] != '@') schema_error(where, "expected an algebra object or \"@key\"");
    return refs.algebra(s.substr(1));
  }
  return algebra_from_json(j, refs);
}

Subspace subspace_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of vectors");
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < j.size(); ++i)
    vs.push_back(vector_from_json(j[i], n, where + "[" + std::to_string(i) + "]"));
  return Subspace::span(n, vs);
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    auto pos = msg.find("] ");
    if (pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(source + ": " + msg);
  }
}

Json canonical(const Json& j) {
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& x : j) out.push_back(canonical(x));
    return out;
  }
  if (!j.is_object()) return j;
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end(), key_less);
  Json out = Json::object();
  for (const auto& k : keys) out[k] = canonical(j.at(k));
  return out;
}

std::string dump(const Json& j) { return canonical(j).dump(2) + "\n"; }

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const LieAlgebra& l) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const Vector& c = l.bracket_basis(i, j);
      if (is_zero(c)) continue;
      Json result = Json::object();
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) result[std::to_string(k)] = to_string(c[k]);
      brackets.push_back(Json{{"left", i}, {"result", result}, {"right", j}});
    }
  Json out = Json::object();
  out["basis"] = l.labels();
  out["brackets"] = brackets;
  out["dim"] = l.dim();
  out["name"] = l.name();
  return out;
}

Json to_json(const CrossedModule& cm) {
  Json action = Json::array();
  for (const auto& m : cm.action().rho) action.push_back(to_json(m));
  Json out = Json::object();
  out["action"] = action;
  out["g"] = to_json(cm.g());
  out["h"] = to_json(cm.h());
  out["mu"] = to_json(cm.mu().matrix());
  out["name"] = cm.name();
  return out;
}

Json to_json(const InvariantValue& v) {
  if (const auto* n = std::get_if<std::size_t>(&v)) return *n;
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  return std::get<std::vector<std::size_t>>(v);
}

Json to_json(const Fingerprint& f) {
  Json out = Json::object();
  for (const auto& [k, v] : fingerprint_fields(f)) out[k] = to_json(v);
  return out;
}

Json to_json(const NonIsoCertificate& c) {
  Json diffs = Json::array();
  for (const auto& d : c.diffs) diffs.push_back(Json{{"a", to_json(d.a)}, {"b", to_json(d.b)}, {"invariant", d.invariant}});
  return Json{{"A", c.a_name}, {"B", c.b_name}, {"conclusive", c.conclusive()}, {"diffs", diffs}};
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) schema_error(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    schema_error(where, e.what());
  }
}

Vector vector_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) schema_error(where, "expected an array of " + std::to_string(n) + " rationals");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    schema_error(where, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vector_from_json(j[r], cols, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

LieAlgebra algebra_from_json(const Json& j, const RefResolver& refs) {
  if (j.is_string()) return algebra_or_ref(j, refs, "algebra");
  const std::string name = string_from_json(member(j, "name", "algebra"), "name");
  const std::size_t n = index_from_json(member(j, "dim", name), name + ".dim");
  std::vector<std::string> labels = default_labels(n);
  if (j.contains("basis")) {
    const Json& b = j["basis"];
    if (!b.is_array() || b.size() != n) schema_error(name + ".basis", "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) labels[i] = string_from_json(b[i], name + ".basis");
  }
  LieAlgebraBuilder builder(name, labels);
  const Json& br = member(j, "brackets", name);
  if (!br.is_array()) schema_error(name + ".brackets", "expected an array");
  std::vector<bool> seen(n * n, false);
  for (std::size_t q = 0; q < br.size(); ++q) {
    const std::string where = name + ".brackets[" + std::to_string(q) + "]";
    const std::size_t i = index_from_json(member(br[q], "left", where), where + ".left");
    const std::size_t k = index_from_json(member(br[q], "right", where), where + ".right");
    if (i >= k || k >= n) schema_error(where, "requires left < right < dim");
    if (seen[i * n + k]) schema_error(where, "duplicate bracket");
    seen[i * n + k] = true;
    const Json& res = member(br[q], "result", where);
    if (!res.is_object()) schema_error(where + ".result", "expected an object");
    Vector v(n);
    for (auto it = res.begin(); it != res.end(); ++it) {
      if (!is_index_key(it.key()) || std::stoull(it.key()) >= n)
        schema_error(where + ".result", "bad basis index \"" + it.key() + "\"");
      v[std::stoull(it.key())] = rational_from_json(it.value(), where + ".result." + it.key());
    }
    builder.set(i, k, v);
  }
  return builder.build();
}

bool is_crossed_module_document(const Json& j) {
  return j.is_object() && (j.contains("builtin") || j.contains("mu"));
}

CrossedModule crossed_module_from_json(const Json& j, const RefResolver& refs) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s[0] != '@') schema_error("crossed module", "expected an object or \"@key\"");
    return refs.crossed_module(s.substr(1));
  }
  if (!j.is_object()) schema_error("crossed module", "expected an object");
  std::optional<std::string> name;
  if (j.contains("name")) name = string_from_json(j["name"], "crossed module.name");
  const std::string where = name.value_or("crossed module");

  if (j.contains("builtin")) {
    const std::string kind = string_from_json(j["builtin"], where + ".builtin");
    const LieAlgebra of = algebra_or_ref(member(j, "of", where), refs, where + ".of");
    CrossedModule cm = [&]() {
      if (kind == "identity") return identity_crmod(of);
      if (kind == "adjoint") return adjoint_crmod(of);
      if (kind == "inclusion")
        return inclusion_crmod(of, subspace_from_json(member(j, "ideal", where), of.dim(), where + ".ideal"));
      if (kind == "quotient")
        return quotient_crmod(of, subspace_from_json(member(j, "ideal", where), of.dim(), where + ".ideal"));
      if (kind == "zero") {
        const std::string mod = j.contains("module") ? string_from_json(j["module"], where + ".module") : "adjoint";
        if (mod == "adjoint") return zero_crmod(Action::adjoint(of));
        if (mod == "trivial")
          return zero_crmod(Action::trivial(of, index_from_json(member(j, "dim", where), where + ".dim")));
        schema_error(where + ".module", "expected \"adjoint\" or \"trivial\"");
      }
      schema_error(where + ".builtin", "unknown constructor \"" + kind + "\"");
    }();
    return name ? cm.renamed(*name) : cm;
  }

  const LieAlgebra h = algebra_or_ref(member(j, "h", where), refs, where + ".h");
  const LieAlgebra g = algebra_or_ref(member(j, "g", where), refs, where + ".g");
  Matrix mu = matrix_from_json(member(j, "mu", where), g.dim(), h.dim(), where + ".mu");
  const Json& act = member(j, "action", where);
  if (!act.is_array() || act.size() != g.dim())
    schema_error(where + ".action", "expected one matrix per generator of g (" + std::to_string(g.dim()) + ")");
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < g.dim(); ++i)
    rho.push_back(matrix_from_json(act[i], h.dim(), h.dim(), where + ".action[" + std::to_string(i) + "]"));
  return CrossedModule(name.value_or(h.name() + "->" + g.name()), h, g, std::move(mu), std::move(rho));
}

}  // namespace liedeform
