#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liedeform/io.hpp"
#include "liedeform/lie_algebra.hpp"
#include "liedeform/products.hpp"

namespace liedeform {

using CatalogObject = std::variant<LieAlgebra, CrossedModule>;

enum class EntryKind { algebra, crossed_module };
std::string to_string(EntryKind k);

struct CatalogEntry {
  std::string key;
  EntryKind kind;
  std::string description;
  std::string origin;  // "builtin" or the file it was loaded from
};

/// Immutable set of named algebras and crossed modules, each validated when
/// added. Parameterized families (abelian(n), exndim(n), heisenberg_{2n+1},
/// identity_abelian(n)) are resolved on demand.
class Catalog : public RefResolver {
 public:
  /// Built-in entries only.
  static const Catalog& builtin();
  /// Built-in entries plus every *.json file of `dir` (key = file stem).
  /// Throws ValidationError on collisions or invalid entries.
  static Catalog with_directory(const std::string& dir);
  /// Built-in entries plus LIEDEFORM_CATALOG_PATH when set.
  static Catalog from_environment();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  static const std::vector<std::string>& families();
  bool contains(const std::string& key) const;

  /// Throws LookupError listing the available keys.
  CatalogObject get(const std::string& key) const;
  LieAlgebra algebra(const std::string& key) const override;
  CrossedModule crossed_module(const std::string& key) const override;

 private:
  Catalog() = default;
  void add(std::string key, std::string description, CatalogObject obj, std::string origin);
  std::optional<CatalogObject> family(const std::string& key) const;
  [[noreturn]] void unknown(const std::string& key) const;

  std::vector<CatalogEntry> entries_;
  std::map<std::string, CatalogObject> objects_;
};

/// Lookup in Catalog::from_environment().
CatalogObject catalog_get(const std::string& key);

/// Throws ValidationError listing every Jacobi or axiom violation.
void validate(const CatalogObject& obj);

Json to_json(const CatalogObject& obj);

}  // namespace liedeform
